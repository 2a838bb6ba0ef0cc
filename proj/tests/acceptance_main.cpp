// Acceptance gate for the whole artifact: thirteen fixed criteria, one
// PASS/FAIL line each, exit status = number of failures.  Tolerances and
// grids are pinned here on purpose; loosening them is a library bug, not
// a test update.

#include "alphastable/boundary_laws.hpp"
#include "alphastable/errors.hpp"
#include "alphastable/green.hpp"
#include "alphastable/hitting.hpp"
#include "alphastable/montecarlo.hpp"
#include "alphastable/params.hpp"
#include "alphastable/quadrature.hpp"
#include "alphastable/specfun.hpp"
#include "alphastable/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace alphastable;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

double rel_diff(double a, double b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

// The canonical (alpha, rho) grid; alpha = 1 is only used where a
// criterion says so.
struct GridRow {
    double alpha;
    double rhos[3];
};
constexpr GridRow kGrid[] = {
    {0.5, {0.3, 0.5, 0.75}},  {0.8, {0.35, 0.5, 0.7}}, {1.0, {0.3, 0.5, 0.6}},
    {1.3, {0.35, 0.5, 0.65}}, {1.7, {0.45, 0.5, 0.55}},
};

// --- 1: interior-kernel normalization ---------------------------------
bool crit_normalization(std::string& detail) {
    Timer timer;
    double worst = 0.0;
    for (const GridRow& row : kGrid) {
        if (row.alpha == 1.0) continue;
        for (double rho : row.rhos)
            for (double y : {-0.9, 0.0, 0.7}) {
                auto r = check_normalization(make_params(row.alpha, rho), y, 1e-8);
                worst = std::max(worst, std::abs(r.residual));
                if (!r.passed) return false;
            }
    }
    double sec = timer.seconds();
    detail = fmt("max |residual| %.2g, %.2f s", worst, sec);
    return worst <= 1e-8 && sec < 10.0;
}

// --- 2: fractional-moment identity ------------------------------------
bool crit_fractional_moment(std::string& detail) {
    double worst = 0.0;
    for (const GridRow& row : kGrid) {
        if (row.alpha == 1.0) continue;
        for (double rho : row.rhos)
            for (double x : {1.1, 2.0, 10.0}) {
                auto r = check_fractional_moment(make_params(row.alpha, rho), x, 1e-8);
                worst = std::max(worst, std::abs(r.residual));
                if (!r.passed) return false;
            }
    }
    detail = fmt("max relative residual %.2g", worst);
    return worst <= 1e-8;
}

// --- 3: exit and entrance laws carry total mass one -------------------
bool crit_masses(std::string& detail) {
    double worst = 0.0;
    for (const GridRow& row : kGrid)
        for (double rho : row.rhos)
            for (double x : {-0.5, 0.3, 1.6, -2.2}) {
                auto r = check_masses(make_params(row.alpha, rho), x, 1e-8);
                worst = std::max(worst, std::abs(r.residual));
                if (!r.passed) return false;
            }
    detail = fmt("max |mass - 1| %.2g, alpha = 1 included", worst);
    return worst <= 1e-8;
}

// --- 4: occupation-times-jump-rate factorization ----------------------
bool crit_ikeda_watanabe(std::string& detail) {
    double worst = 0.0;
    for (auto [alpha, rho] : {std::pair{0.8, 0.35}, {1.5, 0.55}}) {
        auto p = make_params(alpha, rho);
        for (double x : {-0.6, -0.2, 0.0, 0.3, 0.7})
            for (double y : {1.5, -2.0}) {
                auto r = check_ikeda_watanabe(p, x, y, Region::Interval, 1e-6);
                worst = std::max(worst, std::abs(r.residual));
                if (!r.passed) return false;
            }
        for (double x : {1.3, 1.9, 2.8, -1.5, -2.4})
            for (double y : {-0.4, 0.5}) {
                auto r = check_ikeda_watanabe(p, x, y, Region::Complement, 1e-6);
                worst = std::max(worst, std::abs(r.residual));
                if (!r.passed) return false;
            }
    }
    detail = fmt("max relative error %.2g over 40 pairs", worst);
    return worst <= 1e-6;
}

// --- 5: duality and switching symmetries ------------------------------
bool crit_dualities(std::string& detail) {
    double worst = 0.0;
    const double interior[] = {-0.9, -0.5, -0.2, 0.0, 0.35, 0.7};
    const double exterior[] = {-3.0, -1.6, -1.1, 1.1, 1.6, 3.0};
    for (auto [alpha, rho] : {std::pair{0.7, 0.6}, {1.3, 0.5}, {1.5, 0.35}}) {
        auto p = make_params(alpha, rho);
        auto q = p.dual();
        for (double x : interior) {
            for (double y : exterior)
                worst = std::max(worst, rel_diff(h_density(p, x, y), h_density(q, -x, -y)));
            for (double y : interior) {
                if (x == y) continue;
                worst = std::max(worst, rel_diff(g_interval(p, x, y).value,
                                                 g_interval(q, -x, -y).value));
                worst = std::max(worst, rel_diff(g_interval(p, x, y).value,
                                                 g_interval(q, y, x).value));
                worst = std::max(worst, rel_diff(g_halfline(p, x, y).value,
                                                 g_halfline(q, y, x).value));
            }
        }
        for (double x : exterior) {
            for (double y : interior)
                worst = std::max(worst, rel_diff(hstar_density(p, x, y),
                                                 hstar_density(q, -x, -y)));
            for (double y : exterior) {
                if (x == y) continue;
                worst = std::max(worst, rel_diff(g_complement(p, x, y).value,
                                                 g_complement(q, -x, -y).value));
                worst = std::max(worst, rel_diff(g_complement(p, x, y).value,
                                                 g_complement(q, y, x).value));
            }
        }
    }
    detail = fmt("max relative asymmetry %.2g", worst);
    return worst <= 1e-12;
}

// --- 6: Brownian reductions -------------------------------------------
bool crit_brownian(std::string& detail) {
    auto bm = make_params(2.0, 0.5);
    double worst = 0.0;
    for (double x : {-0.8, -0.3, 0.0, 0.5, 0.9}) {
        for (double y : {-0.6, 0.0, 0.4}) {
            if (x == y) continue;
            double expected = x > y ? (1.0 - x) / (1.0 - y) : (1.0 + x) / (1.0 + y);
            worst = std::max(worst, std::abs(hit_prob(bm, x, y) - expected));
        }
        worst = std::max(worst, std::abs(expected_exit_time(bm, x) - 0.5 * (1.0 - x * x)));
    }
    worst = std::max(worst, std::abs(g_interval(bm, 0.0, 0.0).value - 0.5));
    detail = fmt("max deviation %.2g", worst);
    return worst <= 1e-12;
}

// --- 7: compensation-term cross-representation ------------------------
bool crit_kappa_star(std::string& detail) {
    double worst = 0.0;
    for (auto [alpha, rho] : {std::pair{1.3, 0.5}, {1.3, 0.65}, {1.7, 0.45}, {1.7, 0.5}}) {
        auto p = make_params(alpha, rho);
        double ar = alpha * rho, arh = alpha * (1.0 - rho);
        for (double x : {1.5, 3.0, 20.0}) {
            // Gauss-series form of int_1^x psi via the Euler integral
            // representation, independent of the incomplete-Beta route.
            double tail = std::exp2(ar - 1.0) * std::pow(x - 1.0, arh) / arh *
                          hyp2f1(1.0 - ar, arh, 1.0 + arh, -(x - 1.0) / 2.0);
            double direct = p.c_rho_hat * (alpha - 1.0) * tail;
            worst = std::max(worst, rel_diff(direct, kappa_star(p, x).value));
        }
    }
    detail = fmt("max relative gap %.2g", worst);
    return worst <= 1e-10;
}

// --- 8: point-hitting probability as a Green-function ratio -----------
bool crit_hit_ratio(std::string& detail) {
    double worst = 0.0;
    for (auto [alpha, rho] : {std::pair{1.3, 0.65}, {1.7, 0.45}}) {
        auto p = make_params(alpha, rho);
        RngStream rng(2024, 0);
        int done = 0;
        while (done < 20) {
            double x = 1.9 * rng.uniform() - 0.95;
            double y = 1.9 * rng.uniform() - 0.95;
            if (std::abs(x - y) < 0.02) continue;
            double ratio = g_interval(p, x, y).value / g_interval(p, y, y).value;
            worst = std::max(worst, rel_diff(hit_prob(p, x, y), ratio));
            ++done;
        }
    }
    detail = fmt("max relative gap %.2g over 40 pairs", worst);
    return worst <= 1e-10;
}

// --- 9: small-x asymptote of the survival probability ------------------
bool crit_asymptote(std::string& detail) {
    double lo = 2.0, hi = 0.0;
    for (double rho : {0.5, 0.55}) {
        auto p = make_params(1.5, rho);
        for (double x : {1e-4, -1e-4}) {
            double c = hit_asymptote_constant(p, x > 0 ? Side::Above : Side::Below);
            double ratio = (1.0 - hit_prob(p, x, 0.0)) /
                           (c * std::pow(2.0 * std::abs(x), p.alpha - 1.0));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    detail = fmt("ratio range [%.4f, %.4f] at |x| = 1e-4", lo, hi);
    return lo >= 0.98 && hi <= 1.02;
}

// --- 10: Monte Carlo sign frequency ------------------------------------
bool crit_mc_positivity(std::string& detail) {
    Timer timer;
    const std::size_t n = 100000;
    double worst_sigmas = 0.0;
    for (auto [alpha, rho] : {std::pair{0.5, 0.75}, {0.8, 0.35}, {1.0, 0.3},
                              {1.3, 0.65}, {1.7, 0.45}, {2.0, 0.5}}) {
        auto p = make_params(alpha, rho);
        RngStream rng(7, 0);
        std::size_t nonneg = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (stable_increment(p, 1.0, rng) >= 0.0) ++nonneg;
        double frac = static_cast<double>(nonneg) / static_cast<double>(n);
        double sigma = std::sqrt(rho * (1.0 - rho) / static_cast<double>(n));
        worst_sigmas = std::max(worst_sigmas, std::abs(frac - rho) / sigma);
    }
    double sec = timer.seconds();
    detail = fmt("worst deviation %.2f sigma, %.2f s", worst_sigmas, sec);
    return worst_sigmas <= 3.0 && sec < 5.0;
}

// --- 11: Monte Carlo exit law against the closed form ------------------
bool crit_mc_exit_law(std::string& detail) {
    Timer timer;
    auto p = make_params(1.5, 0.5);
    auto cdf = [&](double y) {
        if (y <= -1.0)
            return quad_upper_tail([&](double u) { return h_density(p, 0.0, -u); },
                                   std::abs(y), 1.0 + p.alpha, 0.0, 1e-9);
        return 1.0 - quad_upper_tail([&](double u) { return h_density(p, 0.0, u); }, y,
                                     1.0 + p.alpha, 0.0, 1e-9);
    };

    std::vector<double> ks;
    double mean = 0.0, sd = 0.0;
    std::size_t n_fine = 0;
    for (double step : {1e-2, 2.5e-3, 6.25e-4}) {
        SimConfig cfg;
        cfg.params = p;
        cfg.region = Region::Interval;
        cfg.start = 0.0;
        cfg.step = step;
        cfg.n_paths = 10000;
        cfg.seed = 20240817;
        auto samples = simulate_exit(cfg);
        std::vector<double> positions;
        positions.reserve(samples.size());
        double sum = 0.0, sumsq = 0.0;
        for (const auto& s : samples) {
            if (s.censored) continue;
            positions.push_back(s.exit_pos);
            sum += s.exit_time;
            sumsq += s.exit_time * s.exit_time;
        }
        ks.push_back(ks_statistic(positions, cdf));
        double m = sum / static_cast<double>(positions.size());
        mean = m;
        sd = std::sqrt((sumsq - sum * m) / static_cast<double>(positions.size() - 1));
        n_fine = positions.size();
    }

    double expected = 1.0 / std::tgamma(2.5);
    double allowance = 3.0 * sd / std::sqrt(static_cast<double>(n_fine)) +
                       2.0 * std::pow(6.25e-4, 1.0 / 1.5);
    bool mean_ok = std::abs(mean - expected) <= allowance;
    bool ks_ok = ks[0] > ks[1] && ks[1] > ks[2];
    double sec = timer.seconds();
    detail = fmt("KS %.4f > ", ks[0]) + fmt("%.4f > ", ks[1]) +
             fmt("%.4f, ", ks[2]) + fmt("|mean - %.4f| ", expected) +
             fmt("= %.4f, ", std::abs(mean - expected)) + fmt("%.1f s", sec);
    return mean_ok && ks_ok && sec < 120.0;
}

// --- 12: creeping atom weight under refinement --------------------------
bool crit_mc_creeping(std::string& detail) {
    auto p = make_params(1.5, 1.0 / 1.5);  // no positive jumps, creeps upward
    double target = std::pow(0.5, 0.5);    // ((1 + x)/2)^{alpha - 1} at x = 0
    std::vector<double> gaps;
    for (double step : {1e-2, 2.5e-3, 6.25e-4}) {
        SimConfig cfg;
        cfg.params = p;
        cfg.region = Region::Interval;
        cfg.start = 0.0;
        cfg.step = step;
        cfg.n_paths = 10000;
        cfg.seed = 99;
        auto s = summarize(simulate_exit(cfg), Region::Interval);
        gaps.push_back(std::abs(s.upper_fraction - target));
    }
    // The finest steps sit at the binomial noise floor, where consecutive
    // |gap| draws can cross by chance; two sigma of slack covers that
    // without loosening the final-gap requirement.
    double slack = 2.0 * std::sqrt(target * (1.0 - target) / 10000.0);
    bool trend = gaps[0] + slack >= gaps[1] && gaps[1] + slack >= gaps[2];
    detail = fmt("gaps %.4f, ", gaps[0]) + fmt("%.4f, ", gaps[1]) + fmt("%.4f", gaps[2]);
    return trend && gaps[2] < 0.03;
}

// --- 13: never-entering mass of the transient case ----------------------
bool crit_mc_defect(std::string& detail) {
    auto p = make_params(0.5, 0.5);
    SimConfig cfg;
    cfg.params = p;
    cfg.region = Region::Complement;
    cfg.start = 3.0;
    cfg.step = 0.02;
    cfg.n_paths = 80;
    cfg.max_steps = 10'000'000;
    cfg.seed = 5;
    auto s = summarize(simulate_exit(cfg), Region::Complement);

    double expected = pstar_infinity(p, 3.0);
    double n = static_cast<double>(cfg.n_paths);
    double sigma = std::sqrt(expected * (1.0 - expected) / n);
    double lo = s.censor_fraction - 3.0 * sigma;
    double hi = s.censor_fraction + 3.0 * sigma;
    detail = fmt("still outside %.3f, ", s.censor_fraction) +
             fmt("interval [%.3f, %.3f]", lo, hi) + fmt(" vs %.3f", expected);
    return lo <= expected && expected <= hi;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        bool (*run)(std::string&);
    };
    const Criterion criteria[] = {
        {"interior-kernel normalization integrates to one", crit_normalization},
        {"fractional moment of the interior kernel", crit_fractional_moment},
        {"exit and entrance laws have total mass one", crit_masses},
        {"Ikeda-Watanabe factorization of exit densities", crit_ikeda_watanabe},
        {"duality and switching symmetries at machine precision", crit_dualities},
        {"Brownian closed-form reductions", crit_brownian},
        {"compensation term agrees across representations", crit_kappa_star},
        {"point-hitting probability equals Green-function ratio", crit_hit_ratio},
        {"survival probability asymptote near the marked point", crit_asymptote},
        {"simulated sign frequency matches the positivity parameter", crit_mc_positivity},
        {"simulated exit law converges to the closed form", crit_mc_exit_law},
        {"simulated creeping atom weight under step refinement", crit_mc_creeping},
        {"simulated never-entering mass brackets the defect", crit_mc_defect},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", index, c.label,
                    detail.empty() ? "" : ": ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %d acceptance criteria hold\n", index);
    else
        std::printf("%d of %d acceptance criteria FAILED\n", failures, index);
    return failures;
}
