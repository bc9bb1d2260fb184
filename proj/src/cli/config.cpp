#include "vvdisk/cli.hpp"

#include "vvdisk/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace vvdisk::cli {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) throw ConfigError(where + ": expected an object");
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items()) {
        if (allowed.count(k) == 0) {
            std::string list;
            for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
            throw ConfigError(where + ": unknown key '" + k + "' (allowed: " + list + ")");
        }
    }
}

template <class T>
void read(const json& obj, const char* key, const std::string& where, T& out) {
    const auto it = obj.find(key);
    if (it == obj.end()) return;
    try {
        if constexpr (std::is_same_v<T, bool>) {
            if (!it->is_boolean()) throw ConfigError("");
        } else if constexpr (std::is_integral_v<T>) {
            if (!it->is_number_integer()) throw ConfigError("");
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!it->is_number()) throw ConfigError("");
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!it->is_string()) throw ConfigError("");
        }
        out = it->get<T>();
    } catch (const std::exception&) {
        throw ConfigError(where + "." + key + ": wrong type (" + std::string(it->type_name()) + ")");
    }
}

} // namespace

std::vector<std::string> command_names() {
    return {"zeros", "basis", "simulate", "sweep", "verify"};
}

RunConfig config_from_json(const json& j) {
    check_keys(j, "config", {"command", "out", "seed", "threads", "table", "simulation", "schedule",
                             "sweep", "verify"});
    RunConfig c;
    read(j, "command", "config", c.command);
    read(j, "out", "config", c.out);
    read(j, "seed", "config", c.seed);
    read(j, "threads", "config", c.threads);
    if (j.contains("table")) {
        const json& t = j["table"];
        check_keys(t, "table", {"n_max", "k_max"});
        read(t, "n_max", "table", c.table.n_max);
        read(t, "k_max", "table", c.table.k_max);
    }
    if (j.contains("simulation")) {
        const json& s = j["simulation"];
        check_keys(s, "simulation",
                   {"nu", "t_end", "dt", "n_theta", "n_r", "preset", "amplitude", "initial", "forcing",
                    "nonlinear", "sample_every", "n_angular", "snapshot_every", "kinds"});
        auto& d = c.simulation;
        read(s, "nu", "simulation", d.nu);
        read(s, "t_end", "simulation", d.t_end);
        read(s, "dt", "simulation", d.dt);
        read(s, "n_theta", "simulation", d.n_theta);
        read(s, "n_r", "simulation", d.n_r);
        read(s, "preset", "simulation", d.preset);
        read(s, "amplitude", "simulation", d.amplitude);
        read(s, "initial", "simulation", d.initial_path);
        read(s, "nonlinear", "simulation", d.nonlinear);
        read(s, "sample_every", "simulation", d.sample_every);
        read(s, "n_angular", "simulation", d.n_angular);
        read(s, "snapshot_every", "simulation", d.snapshot_every);
        read(s, "kinds", "simulation", d.kinds);
        if (s.contains("forcing")) {
            if (!s["forcing"].is_array()) throw ConfigError("simulation.forcing: expected an array");
            d.forcing = s["forcing"].get<std::vector<json>>();
        }
    }
    if (j.contains("schedule")) {
        const json& s = j["schedule"];
        check_keys(s, "schedule", {"a", "b", "gamma", "c"});
        read(s, "a", "schedule", c.schedule.a);
        read(s, "b", "schedule", c.schedule.b);
        read(s, "gamma", "schedule", c.schedule.gamma);
        read(s, "c", "schedule", c.schedule.c);
    }
    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        check_keys(s, "sweep", {"nus", "kinds", "reference", "validate_schedule"});
        read(s, "nus", "sweep", c.sweep.nus);
        read(s, "kinds", "sweep", c.sweep.kinds);
        read(s, "reference", "sweep", c.sweep.reference);
        read(s, "validate_schedule", "sweep", c.sweep.validate_schedule);
    }
    if (j.contains("verify")) {
        const json& s = j["verify"];
        check_keys(s, "verify",
                   {"lemmas", "n_max", "k_max", "x_samples", "delta_samples", "tolerance",
                    "general_window", "c2", "halvings", "jratios_k_le_n"});
        auto& r = c.verify.ranges;
        read(s, "lemmas", "verify", c.verify.lemmas);
        read(s, "n_max", "verify", r.n_max);
        read(s, "k_max", "verify", r.k_max);
        read(s, "x_samples", "verify", r.x_samples);
        read(s, "delta_samples", "verify", r.delta_samples);
        read(s, "tolerance", "verify", r.tolerance);
        read(s, "general_window", "verify", r.general_window);
        read(s, "c2", "verify", r.c2);
        read(s, "halvings", "verify", r.halvings);
        read(s, "jratios_k_le_n", "verify", r.jratios_k_le_n);
    }
    return c;
}

json to_json(const RunConfig& c) {
    const auto& s = c.simulation;
    const auto& r = c.verify.ranges;
    return json{
        {"command", c.command},
        {"out", c.out},
        {"seed", c.seed},
        {"threads", c.threads},
        {"table", {{"n_max", c.table.n_max}, {"k_max", c.table.k_max}}},
        {"simulation",
         {{"nu", s.nu},
          {"t_end", s.t_end},
          {"dt", s.dt},
          {"n_theta", s.n_theta},
          {"n_r", s.n_r},
          {"preset", s.preset},
          {"amplitude", s.amplitude},
          {"initial", s.initial_path},
          {"forcing", s.forcing},
          {"nonlinear", s.nonlinear},
          {"sample_every", s.sample_every},
          {"n_angular", s.n_angular},
          {"snapshot_every", s.snapshot_every},
          {"kinds", s.kinds}}},
        {"schedule",
         {{"a", c.schedule.a}, {"b", c.schedule.b}, {"gamma", c.schedule.gamma}, {"c", c.schedule.c}}},
        {"sweep",
         {{"nus", c.sweep.nus},
          {"kinds", c.sweep.kinds},
          {"reference", c.sweep.reference},
          {"validate_schedule", c.sweep.validate_schedule}}},
        {"verify",
         {{"lemmas", c.verify.lemmas},
          {"n_max", r.n_max},
          {"k_max", r.k_max},
          {"x_samples", r.x_samples},
          {"delta_samples", r.delta_samples},
          {"tolerance", r.tolerance},
          {"general_window", r.general_window},
          {"c2", r.c2},
          {"halvings", r.halvings},
          {"jratios_k_le_n", r.jratios_k_le_n}}},
    };
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path.string() + ": " + e.what());
    }
    // a run manifest is accepted as a config
    if (j.is_object() && j.contains("config") && j.contains("outputs")) return config_from_json(j["config"]);
    return config_from_json(j);
}

namespace {

void check_kind(const std::string& k, bool allow_gap) {
    if (allow_gap && k == "gap") return;
    condition_from_string(k); // throws on unknown names
}

} // namespace

void validate(const RunConfig& c) {
    const auto cmds = command_names();
    if (std::find(cmds.begin(), cmds.end(), c.command) == cmds.end()) {
        throw ConfigError("unknown command '" + c.command + "'");
    }
    if (c.threads < 0) throw ConfigError("threads must be >= 0");
    if (c.command == "zeros" || c.command == "basis") {
        if (c.table.n_max < 0 || c.table.k_max < 0) throw ConfigError("table bounds must be >= 0");
        if (c.table.n_max > kBesselMaxOrder / 2 || c.table.k_max > kBesselMaxOrder / 2) {
            throw ConfigError("table bounds exceed the Bessel table limit " +
                              std::to_string(kBesselMaxOrder / 2));
        }
    }
    if (c.command == "simulate" || c.command == "sweep") {
        const auto& s = c.simulation;
        if (s.n_theta < 0 || s.n_r < 1) throw ConfigError("simulation: n_theta >= 0 and n_r >= 1 required");
        if (s.n_theta > 256 || s.n_r > 256) throw ConfigError("simulation: truncation above 256");
        if (!(s.t_end > 0.0)) throw ConfigError("simulation.t_end must be > 0");
        if (!(s.dt >= 0.0)) throw ConfigError("simulation.dt must be >= 0");
        if (s.sample_every < 1) throw ConfigError("simulation.sample_every must be >= 1");
        if (s.snapshot_every < 0) throw ConfigError("simulation.snapshot_every must be >= 0");
        if (s.n_angular != 0 && (s.n_angular < 4 || s.n_angular % 2 != 0)) {
            throw ConfigError("simulation.n_angular must be 0 or an even number >= 4");
        }
        if (s.initial_path.empty()) {
            const auto names = preset_names();
            if (std::find(names.begin(), names.end(), s.preset) == names.end()) {
                throw ConfigError("simulation.preset: unknown preset '" + s.preset + "'");
            }
        }
        c.schedule.validate();
    }
    if (c.command == "simulate") {
        if (!(c.simulation.nu > 0.0)) throw ConfigError("simulation.nu must be > 0");
        for (const auto& k : c.simulation.kinds) check_kind(k, false);
    }
    if (c.command == "sweep") {
        if (c.sweep.nus.empty()) throw ConfigError("sweep.nus must not be empty");
        for (std::size_t i = 0; i < c.sweep.nus.size(); ++i) {
            if (!(c.sweep.nus[i] > 0.0)) throw ConfigError("sweep.nus must be positive");
            if (i > 0 && !(c.sweep.nus[i] < c.sweep.nus[i - 1])) {
                throw ConfigError("sweep.nus must be strictly decreasing");
            }
        }
        if (c.sweep.kinds.empty()) throw ConfigError("sweep.kinds must not be empty");
        for (const auto& k : c.sweep.kinds) check_kind(k, true);
        if (c.sweep.reference != "steady") {
            throw ConfigError("sweep.reference: only 'steady' is available");
        }
        if (c.sweep.validate_schedule) validate_sweep(c.schedule, c.sweep.nus);
    }
    if (c.command == "verify") {
        const auto ids = lemma_ids();
        for (const auto& id : c.verify.lemmas) {
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
                std::string list;
                for (const auto& s : ids) list += (list.empty() ? "" : ", ") + s;
                throw ConfigError("unknown lemma id '" + id + "'; valid ids: " + list);
            }
        }
        const auto& r = c.verify.ranges;
        if (r.n_max < 0 || r.k_max < 1 || r.n_max > 1000 || r.k_max > 1000) {
            throw ConfigError("verify: need 0 <= n_max <= 1000 and 1 <= k_max <= 1000");
        }
        if (r.x_samples < 1 || r.delta_samples < 2 || r.halvings < 2 || !(r.tolerance >= 0.0) ||
            !(r.general_window > 0.0) || !(r.c2 > 0.0)) {
            throw ConfigError("verify: invalid sampling parameters");
        }
    }
}

} // namespace vvdisk::cli
