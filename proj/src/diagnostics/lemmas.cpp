#include "vvdisk/diagnostics.hpp"

#include "vvdisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

namespace vvdisk {

namespace {

constexpr double kPi = std::numbers::pi;

const char* const kLemmaIds[] = {
    "ZeroDifference",   "jnkRange",           "JRatios",
    "Jnp1Ratios",       "Jnm1Ratios",         "L2omegaGammaBound",
    "L2omegaGammaBoundGeneral", "L2uGammaBoundGeneral", "SomeL2InnerProductsAreZero",
    "UsefulFunctionBound"};

// Interior sample x_i of (lo, 1), i = 1..count.
double interior(double lo, int i, int count) {
    return lo + (1.0 - lo) * i / (count + 1.0);
}

void finish_strict(LemmaReport& rep, double tolerance) {
    rep.envelope = false;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (const LemmaRow& r : rep.rows) {
        if (r.margin && *r.margin < rep.worst_margin) {
            rep.worst_margin = *r.margin;
            rep.worst_n = r.n;
            rep.worst_k = r.k;
            rep.worst_param = r.param;
        }
    }
    rep.pass = rep.worst_margin >= -tolerance;
}

void finish_envelope(LemmaReport& rep) {
    rep.envelope = true;
    rep.pass = true;
    double c = 0.0;
    for (const LemmaRow& r : rep.rows) {
        if (r.observed >= c) {
            c = r.observed;
            rep.worst_n = r.n;
            rep.worst_k = r.k;
            rep.worst_param = r.param;
        }
    }
    rep.empirical_constant = c;
}

std::string range_text(const LemmaRanges& g, bool k_le_n) {
    return "n<=" + std::to_string(g.n_max) + (k_le_n ? ",k<=min(n," : ",k<=") +
           std::to_string(g.k_max) + (k_le_n ? ")" : "");
}

// Strip quadrature: integral over Gamma_delta of sum_c |profile_c|^2 for one
// complex mode, times 2 pi. Node count scales with the oscillations in the strip.
template <class F>
double strip_integral(const EigenPair& p, double delta, F&& integrand) {
    const int nodes = 24 + 2 * static_cast<int>(std::ceil(p.alpha * delta));
    const PolarGrid grid = build_grid(nodes, 8, 1.0 - delta);
    double s = 0.0;
    for (int q = 0; q < nodes; ++q) {
        const RadialProfile rp = radial_profile(p, grid.r[static_cast<std::size_t>(q)]);
        s += grid.w[static_cast<std::size_t>(q)] * integrand(rp);
    }
    return 2.0 * kPi * s;
}

// Run body(n, k, rows) in parallel over the (n,k) lattice and gather rows in
// lattice order.
template <class Body>
std::vector<LemmaRow> scan(int n_lo, int n_max, int k_max, bool k_le_n, Body&& body) {
    std::vector<std::pair<int, int>> modes;
    for (int n = n_lo; n <= n_max; ++n) {
        const int kk = k_le_n ? std::min(n, k_max) : k_max;
        for (int k = 1; k <= kk; ++k) modes.emplace_back(n, k);
    }
    std::vector<std::vector<LemmaRow>> parts(modes.size());
    std::string failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < static_cast<int>(modes.size()); ++i) {
        try {
            parts[static_cast<std::size_t>(i)] = body(modes[static_cast<std::size_t>(i)].first,
                                                      modes[static_cast<std::size_t>(i)].second);
        } catch (const std::exception& e) {
#pragma omp critical(vvdisk_lemma_failure)
            failure = e.what();
        }
    }
    if (!failure.empty()) throw ConvergenceError(failure);
    std::vector<LemmaRow> rows;
    for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
    return rows;
}

LemmaRow row(const std::string& id, int n, int k) {
    LemmaRow r;
    r.lemma = id;
    r.n = n;
    r.k = k;
    return r;
}

} // namespace

std::vector<std::string> lemma_ids() {
    return {std::begin(kLemmaIds), std::end(kLemmaIds)};
}

LemmaReport verify_lemma(const std::string& id, const LemmaRanges& g, const Eigenbasis* basis_in) {
    const auto ids = lemma_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::string list;
        for (const auto& s : ids) list += (list.empty() ? "" : ", ") + s;
        throw ConfigError("unknown lemma id '" + id + "'; valid ids: " + list);
    }
    if (g.n_max < 0 || g.k_max < 1 || g.x_samples < 1 || g.delta_samples < 2 ||
        g.halvings < 2) {
        throw ConfigError("verify_lemma: invalid ranges");
    }
    std::unique_ptr<Eigenbasis> owned;
    const Eigenbasis* basis = basis_in;
    if (id != "UsefulFunctionBound" &&
        (basis == nullptr || basis->max_n() < g.n_max + 1 || basis->max_k() < g.k_max)) {
        owned = std::make_unique<Eigenbasis>(g.n_max + 1, g.k_max);
        basis = owned.get();
    }

    LemmaReport rep;
    rep.lemma = id;

    if (id == "ZeroDifference") {
        rep.range = range_text(g, false);
        const ZeroTable& z = basis->zeros();
        rep.rows = scan(0, g.n_max, g.k_max, false, [&](int n, int k) {
            const double d = z(n + 1, k) - z(n, k);
            LemmaRow r = row(id, n, k);
            r.observed = d;
            const double lo = d - 1.0;
            const double hi = kPi / 2.0 - d;
            r.bound = lo < hi ? 1.0 : kPi / 2.0;
            r.margin = std::min(lo, hi);
            return std::vector<LemmaRow>{r};
        });
        finish_strict(rep, g.tolerance);
    } else if (id == "jnkRange") {
        rep.range = range_text(g, false);
        const ZeroTable& z = basis->zeros();
        rep.rows = scan(0, g.n_max, g.k_max, false, [&](int n, int k) {
            const double j = z(n, k);
            LemmaRow r = row(id, n, k);
            r.observed = j;
            const double lo = j - (n + k);
            const double hi = kPi * (n / 2.0 + k) - j;
            r.bound = lo < hi ? static_cast<double>(n + k) : kPi * (n / 2.0 + k);
            r.margin = std::min(lo, hi);
            return std::vector<LemmaRow>{r};
        });
        finish_strict(rep, g.tolerance);
    } else if (id == "JRatios" || id == "Jnp1Ratios" || id == "Jnm1Ratios") {
        const bool k_le_n = id != "JRatios" || g.jratios_k_le_n;
        const int n_lo = id == "JRatios" ? 0 : 1;
        rep.range = range_text(g, k_le_n) + ",x in (beta/alpha,1)";
        rep.rows = scan(n_lo, g.n_max, g.k_max, k_le_n, [&](int n, int k) {
            const EigenPair& p = (*basis)(n, k);
            const double lo = p.beta / p.alpha;
            LemmaRow r = row(id, n, k);
            r.has_param = true;
            double worst = -1.0;
            for (int i = 1; i <= g.x_samples; ++i) {
                const double x = interior(lo, i, g.x_samples);
                double j[3];
                bessel_j_window(n - 1, n + 1, p.alpha * x, j);
                double v = 0.0;
                if (id == "JRatios") {
                    v = std::abs(j[1] / p.j_n_alpha);
                } else if (id == "Jnp1Ratios") {
                    v = std::abs(j[2] / p.j_n_alpha) / (n * (1.0 - x));
                } else {
                    v = std::abs(j[0] / p.j_n_alpha);
                }
                if (v > worst) {
                    worst = v;
                    r.param = x;
                }
            }
            r.observed = worst;
            if (id == "JRatios") {
                r.bound = 1.0;
                r.margin = 1.0 - worst;
            }
            return std::vector<LemmaRow>{r};
        });
        if (id == "JRatios") {
            finish_strict(rep, g.tolerance);
        } else {
            finish_envelope(rep);
        }
    } else if (id == "L2omegaGammaBound" || id == "L2omegaGammaBoundGeneral") {
        const bool general = id == "L2omegaGammaBoundGeneral";
        rep.range = range_text(g, general) +
                    (general ? ",delta<" + std::to_string(g.general_window) + "*lambda_n1^-1/2"
                             : ",delta<=lambda^-1/2");
        rep.rows = scan(general ? 1 : 0, g.n_max, g.k_max, general, [&](int n, int k) {
            const EigenPair& p = (*basis)(n, k);
            double top = 0.0;
            if (general) {
                top = std::min(1.0, g.general_window / (*basis)(n, 1).alpha);
            } else {
                top = 1.0 / p.alpha;
            }
            LemmaRow r = row(id, n, k);
            r.has_param = true;
            double worst = std::numeric_limits<double>::infinity();
            for (int i = 1; i <= g.delta_samples; ++i) {
                // the general window is open at the top
                const double delta = general ? top * i / (g.delta_samples + 1.0)
                                             : top * i / g.delta_samples;
                const double v = strip_integral(p, delta, [](const RadialProfile& rp) {
                    return rp.w * rp.w;
                });
                const double margin = 2.0 * delta - v;
                if (margin < worst) {
                    worst = margin;
                    r.param = delta;
                    r.observed = v;
                    r.bound = 2.0 * delta;
                }
            }
            r.margin = worst;
            return std::vector<LemmaRow>{r};
        });
        finish_strict(rep, g.tolerance);
    } else if (id == "L2uGammaBoundGeneral") {
        rep.range = range_text(g, true) + ",delta=" + std::to_string(g.c2) +
                    "*lambda_n1^-1/2*2^-j,j=1.." + std::to_string(g.halvings);
        rep.rows = scan(1, g.n_max, g.k_max, true, [&](int n, int k) {
            const EigenPair& p = (*basis)(n, k);
            const double top = g.c2 / (*basis)(n, 1).alpha;
            std::vector<double> ds;
            std::vector<double> vs;
            LemmaRow r = row(id, n, k);
            r.has_param = true;
            double c1 = 0.0;
            for (int j = 1; j <= g.halvings; ++j) {
                const double delta = top * std::ldexp(1.0, -j);
                const double v = strip_integral(p, delta, [](const RadialProfile& rp) {
                    return rp.R * rp.R + rp.T * rp.T;
                });
                ds.push_back(delta);
                vs.push_back(v);
                const double ratio = v / (delta * delta * delta);
                if (ratio > c1) {
                    c1 = ratio;
                    r.param = delta;
                }
            }
            r.observed = c1;
            // per-mode slope, parked in bound until pooled below
            r.bound = loglog_slope(ds, vs);
            return std::vector<LemmaRow>{r};
        });
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (LemmaRow& r : rep.rows) {
            const double s = *r.bound;
            sum += s;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            r.bound.reset();
        }
        finish_envelope(rep);
        if (!rep.rows.empty()) {
            rep.slope = sum / static_cast<double>(rep.rows.size());
            rep.slope_min = lo;
            rep.slope_max = hi;
        }
    } else if (id == "SomeL2InnerProductsAreZero") {
        rep.range = range_text(g, false) + ",m!=n,delta in {0.05,0.2,1}";
        const int na = 2 * g.n_max + 4;
        const int nn = g.n_max + 1;
        const int kk = g.k_max;
        // angular factor (2 pi / na) sum_p e^{i d theta_p}, as in the quadrature inner product
        std::vector<double> ang(static_cast<std::size_t>(nn));
        for (int d = 0; d < nn; ++d) {
            double re = 0.0;
            double im = 0.0;
            for (int p = 0; p < na; ++p) {
                const int m = (d * p) % na;
                re += std::cos(2.0 * kPi * m / na);
                im += std::sin(2.0 * kPi * m / na);
            }
            ang[static_cast<std::size_t>(d)] = std::hypot(re, im) * 2.0 * kPi / na;
        }
        std::vector<LemmaRow> rows(static_cast<std::size_t>(nn) * kk);
        for (int n = 0; n < nn; ++n) {
            for (int k = 1; k <= kk; ++k) {
                LemmaRow r = row(id, n, k);
                r.has_param = true;
                r.observed = 0.0;
                r.bound = 0.0;
                rows[static_cast<std::size_t>(n) * kk + k - 1] = r;
            }
        }
        for (const double delta : {0.05, 0.2, 1.0}) {
            const PolarGrid grid = build_grid_auto(*basis, g.n_max, kk, na, delta < 1.0 ? 1.0 - delta : 0.0);
            const ProfileTable tab(*basis, grid, g.n_max, kk);
            const int nq = grid.n_radial();
            const double* w = tab.component(Component::W);
            const double* ur = tab.component(Component::UR);
            const double* ut = tab.component(Component::UT);
#pragma omp parallel for schedule(dynamic, 1)
            for (int a = 0; a < nn * kk; ++a) {
                LemmaRow& r = rows[static_cast<std::size_t>(a)];
                const int m = a / kk;
                for (int b = 0; b < nn * kk; ++b) {
                    const int n = b / kk;
                    if (n == m) continue;
                    double sw = 0.0;
                    double su = 0.0;
                    const std::size_t ia = static_cast<std::size_t>(a) * nq;
                    const std::size_t ib = static_cast<std::size_t>(b) * nq;
                    for (int q = 0; q < nq; ++q) {
                        const double wq = grid.w[static_cast<std::size_t>(q)];
                        sw += wq * w[ia + q] * w[ib + q];
                        su += wq * (ur[ia + q] * ur[ib + q] + ut[ia + q] * ut[ib + q]);
                    }
                    const double f = ang[static_cast<std::size_t>(std::abs(m - n))];
                    const double v = std::max(std::abs(sw), std::abs(su)) * f;
                    if (v > r.observed) {
                        r.observed = v;
                        r.param = delta;
                    }
                }
            }
        }
        for (auto& r : rows) r.margin = -r.observed;
        rep.rows = std::move(rows);
        finish_strict(rep, g.tolerance);
    } else if (id == "UsefulFunctionBound") {
        rep.range = "alpha in {0.1..0.9},x in [1,1e6]";
        constexpr int kX = 2000;
        for (int a = 1; a <= 9; ++a) {
            const double alpha = 0.1 * a;
            LemmaRow r = row(id, -1, -1);
            r.has_param = true;
            r.param = alpha;
            double worst = std::numeric_limits<double>::infinity();
            for (int i = 0; i < kX; ++i) {
                const double x = std::pow(1e6, static_cast<double>(i) / (kX - 1));
                const double v = g_alpha(alpha, x);
                const double lo = v - (1.0 - alpha);
                const double hi = std::exp(-alpha) - v;
                const double m = std::min(lo, hi);
                if (m < worst) {
                    worst = m;
                    r.observed = v;
                    r.bound = lo < hi ? 1.0 - alpha : std::exp(-alpha);
                }
            }
            r.margin = worst;
            rep.rows.push_back(r);
        }
        finish_strict(rep, g.tolerance);
    }
    return rep;
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string opt(const std::optional<double>& v) {
    return v ? num(*v) : std::string();
}

std::string idx(int v) {
    return v < 0 ? std::string() : std::to_string(v);
}

} // namespace

std::string lemma_csv(const std::vector<LemmaReport>& reports) {
    std::string out = "lemma,n,k,param,observed,bound,margin\n";
    for (const auto& rep : reports) {
        for (const auto& r : rep.rows) {
            out += r.lemma + "," + idx(r.n) + "," + idx(r.k) + "," +
                   (r.has_param ? num(r.param) : std::string()) + "," + num(r.observed) + "," +
                   opt(r.bound) + "," + opt(r.margin) + "\n";
        }
    }
    return out;
}

std::string lemma_summary_csv(const std::vector<LemmaReport>& reports) {
    std::string out = "lemma,status,worst_margin,n,k,param,constant,slope\n";
    for (const auto& rep : reports) {
        const std::string status = rep.envelope ? "envelope" : (rep.pass ? "pass" : "fail");
        out += rep.lemma + "," + status + "," + (rep.envelope ? std::string() : num(rep.worst_margin)) +
               "," + idx(rep.worst_n) + "," + idx(rep.worst_k) + "," + num(rep.worst_param) + "," +
               opt(rep.empirical_constant) + "," + opt(rep.slope) + "\n";
    }
    return out;
}

} // namespace vvdisk
