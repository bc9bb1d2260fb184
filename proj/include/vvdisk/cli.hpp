#pragma once

/// @file cli.hpp
/// Run configuration (JSON), command drivers and CSV writers behind the
/// `vvdisk` executable.

#include "vvdisk/diagnostics.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace vvdisk::cli {

struct TableSection {
    int n_max = 10;
    int k_max = 10;
};

struct SimulationSection {
    double nu = 0.05;
    double t_end = 1.0;
    double dt = 0.0;
    int n_theta = 0;
    int n_r = 8;
    std::string preset = "radial-1";
    double amplitude = 0.1;
    std::string initial_path;  ///< snapshot JSON; overrides preset when set
    std::vector<nlohmann::json> forcing; ///< snapshot-layout frames, empty = no forcing
    bool nonlinear = true;
    int sample_every = 1;
    int n_angular = 0;
    int snapshot_every = 0;    ///< every m-th trace sample; 0 = initial and final only
    std::vector<std::string> kinds; ///< functionals evaluated after the run
};

struct SweepSection {
    std::vector<double> nus;
    std::vector<std::string> kinds = {"K1", "K6", "gap"};
    std::string reference = "steady"; ///< Euler reference for "gap": steady ubar = u(0)
    bool validate_schedule = true;
};

struct VerifySection {
    std::vector<std::string> lemmas; ///< empty = all
    LemmaRanges ranges;
};

struct RunConfig {
    std::string command;
    std::string out = ".";
    std::uint64_t seed = 0;
    int threads = 0; ///< 0 = OpenMP default
    TableSection table;
    SimulationSection simulation;
    ScheduleSpec schedule;
    SweepSection sweep;
    VerifySection verify;
};

std::vector<std::string> command_names();

/// Parses and validates; unknown keys and wrong types raise ConfigError.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);
RunConfig load_config(const std::filesystem::path& path);

/// Checks ranges and names for `c.command`; throws ConfigError.
void validate(const RunConfig& c);

/// Runs the configured command, writing into c.out, and returns the exit code.
/// Progress and errors go to `log`.
int run(const RunConfig& c, std::ostream& log);

// CSV bodies (header included).
std::string zeros_csv(int n_max, int k_max);
std::string basis_csv(const Eigenbasis& basis, int n_max, int k_max);

/// Result of one sweep point.
struct SweepPoint {
    double nu = 0.0;
    std::vector<DiagnosticsRow> rows;
    std::string failure; ///< empty on success
};

/// Runs every sweep point (parallel over nu) and returns them in input order.
std::vector<SweepPoint> run_sweep(const RunConfig& c, const Eigenbasis& basis);

/// Writes `text` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& text);

} // namespace vvdisk::cli
