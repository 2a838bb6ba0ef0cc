// Command-line front end: evaluate one quantity, tabulate it over a grid,
// simulate first exits, or run the identity checks.  Stateless; every run
// echoes its parameters in '#' comment lines so output files are
// self-describing.

#include "CLI11.hpp"
#include "json.hpp"

#include "alphastable/boundary_laws.hpp"
#include "alphastable/errors.hpp"
#include "alphastable/green.hpp"
#include "alphastable/hitting.hpp"
#include "alphastable/montecarlo.hpp"
#include "alphastable/params.hpp"
#include "alphastable/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace alphastable;

// Flag mistakes that CLI11 cannot catch on its own (cross-flag rules,
// unknown quantity names) still belong to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<double> alpha, rho, beta, x, y, tol;
    std::string grid;
    std::size_t paths = 1000;
    double step = 1e-3;
    std::uint64_t seed = 0;
    long max_steps = 10'000'000;
    bool json = false;
    std::string out;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

StableParams resolve_params(const Options& o) {
    if (!o.alpha) throw usage_error("--alpha is required");
    if (o.rho && o.beta) throw usage_error("pass either --rho or --beta, not both");
    double rho;
    if (o.rho)
        rho = *o.rho;
    else if (o.beta)
        rho = rho_from_beta(*o.alpha, *o.beta);
    else if (*o.alpha == 2.0)
        rho = 0.5;  // the only admissible value, no need to insist on the flag
    else
        throw usage_error("--rho or --beta is required");
    return make_params(*o.alpha, rho);
}

double require_x(const Options& o, const char* who) {
    if (!o.x) throw usage_error(std::string(who) + " needs --x");
    return *o.x;
}

double require_y(const Options& o, const char* who) {
    if (!o.y) throw usage_error(std::string(who) + " needs --y");
    return *o.y;
}

// Tolerance for the verify checks: flag wins, then the ASTABLE_TOL
// environment variable, else the per-check default.
std::optional<double> tol_override(const Options& o) {
    if (o.tol) return o.tol;
    if (const char* env = std::getenv("ASTABLE_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || !(v > 0.0))
            throw usage_error("ASTABLE_TOL is set but does not parse as a positive number");
        return v;
    }
    return std::nullopt;
}

// Output stream selection: stdout by default, --out FILE otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string params_meta(const StableParams& p) {
    std::ostringstream m;
    m << "params: alpha=" << num(p.alpha) << " rho=" << num(p.rho)
      << " rho_hat=" << num(p.rho_hat) << " class=" << to_string(p.cls);
    return m.str();
}

nlohmann::json params_json(const StableParams& p) {
    return {{"alpha", p.alpha},
            {"rho", p.rho},
            {"rho_hat", p.rho_hat},
            {"class", to_string(p.cls)}};
}

// ----------------------------------------------------------------------
// Quantity dispatch shared by eval and table.

enum class Arity { XY, XOnly, YOnly, Atoms };

Arity quantity_arity(const std::string& q) {
    for (const char* xy : {"h", "hstar", "g", "gstar", "gtau", "hitprob", "hitprob-halfline",
                           "martin", "semiinf-exit"})
        if (q == xy) return Arity::XY;
    for (const char* xo : {"exptime", "kappastar", "pstarinf"})
        if (q == xo) return Arity::XOnly;
    if (q == "levy") return Arity::YOnly;
    if (q == "atoms") return Arity::Atoms;
    throw usage_error("unknown quantity: " + q);
}

double eval_quantity(const std::string& q, const StableParams& p, double x, double y) {
    if (q == "h") return h_density(p, x, y);
    if (q == "hstar") return hstar_density(p, x, y);
    if (q == "g") return g_interval(p, x, y).value;
    if (q == "gstar") return g_complement(p, x, y).value;
    if (q == "gtau") return g_halfline(p, x, y).value;
    if (q == "hitprob") return hit_prob(p, x, y);
    if (q == "hitprob-halfline") return hit_prob_halfline(p, x, y);
    if (q == "semiinf-exit") return semiinf_exit_density(p, x, y);
    if (q == "martin") {
        if (y == 1.0) return martin_kernel(p, x, Side::Above);
        if (y == -1.0) return martin_kernel(p, x, Side::Below);
        throw std::domain_error("martin: --y selects the boundary point and must be +1 or -1");
    }
    if (q == "exptime") return expected_exit_time(p, x);
    if (q == "kappastar") return kappa_star(p, x).value;
    if (q == "pstarinf") return pstar_infinity(p, x);
    if (q == "levy") return levy_density(p, y);
    throw usage_error("unknown quantity: " + q);
}

int run_eval(const Options& o, const std::string& q) {
    StableParams p = resolve_params(o);
    Arity ar = quantity_arity(q);
    Sink sink(o.out);
    std::ostream& os = sink.os();

    if (ar == Arity::Atoms) {
        double x = require_x(o, "atoms");
        Region region = std::abs(x) < 1.0 ? Region::Interval : Region::Complement;
        ExitLaw law = exit_law(p, region, x);
        if (o.json) {
            nlohmann::json rows = nlohmann::json::array();
            for (const Atom& a : law.atoms)
                rows.push_back({{"location", a.location},
                                {"weight", a.weight},
                                {"params", params_json(p)}});
            os << rows.dump(2) << "\n";
        } else {
            os << "# " << params_meta(p) << " x=" << num(x) << " region=" << to_string(region)
               << " defect=" << num(law.defect) << "\n";
            os << "location,weight\n";
            for (const Atom& a : law.atoms) os << num(a.location) << ',' << num(a.weight) << "\n";
        }
        return 0;
    }

    double x = 0.0, y = 0.0;
    if (ar == Arity::XY) x = require_x(o, q.c_str()), y = require_y(o, q.c_str());
    if (ar == Arity::XOnly) x = require_x(o, q.c_str());
    if (ar == Arity::YOnly) y = require_y(o, q.c_str());
    double value = eval_quantity(q, p, x, y);

    if (o.json) {
        nlohmann::json row{{"quantity", q}, {"value", value}, {"params", params_json(p)}};
        if (ar != Arity::YOnly) row["x"] = x;
        if (ar != Arity::XOnly) row["y"] = y;
        os << nlohmann::json::array({row}).dump(2) << "\n";
        return 0;
    }
    std::ostringstream meta;
    meta << params_meta(p);
    if (ar != Arity::YOnly) meta << " x=" << num(x);
    if (ar != Arity::XOnly) meta << " y=" << num(y);
    os << "# " << meta.str() << "\n";
    if (ar == Arity::XY)
        os << "x,y," << q << "\n" << num(x) << ',' << num(y) << ',' << num(value) << "\n";
    else if (ar == Arity::XOnly)
        os << "x," << q << "\n" << num(x) << ',' << num(value) << "\n";
    else
        os << "y," << q << "\n" << num(y) << ',' << num(value) << "\n";
    return 0;
}

int run_table(const Options& o, const std::string& q) {
    StableParams p = resolve_params(o);
    Arity ar = quantity_arity(q);
    if (ar == Arity::Atoms) throw usage_error("atoms cannot be tabulated over a grid");

    double lo, hi;
    long n;
    char colon1, colon2;
    std::istringstream gs(o.grid);
    if (!(gs >> lo >> colon1 >> hi >> colon2 >> n) || colon1 != ':' || colon2 != ':' || n < 2 ||
        !gs.eof())
        throw usage_error("--grid wants lo:hi:n with n >= 2");

    // The grid sweeps whichever coordinate is not pinned by a flag.
    bool vary_x;
    if (ar == Arity::XY) {
        if (o.x && o.y) throw usage_error("table over a 2-argument quantity: pin exactly one of --x/--y");
        if (!o.x && !o.y) throw usage_error(q + " needs one of --x/--y pinned alongside --grid");
        vary_x = !o.x;
    } else {
        vary_x = ar == Arity::XOnly;
        if ((vary_x && o.x) || (!vary_x && o.y))
            throw usage_error("the swept coordinate of " + q + " is set by --grid, not a flag");
    }

    std::vector<std::pair<double, double>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        double x = vary_x ? t : (ar == Arity::YOnly ? 0.0 : *o.x);
        double y = vary_x ? (ar == Arity::XOnly ? 0.0 : (o.y ? *o.y : 0.0)) : t;
        rows.emplace_back(t, eval_quantity(q, p, x, y));
    }

    Sink sink(o.out);
    std::ostream& os = sink.os();
    const char* var = vary_x ? "x" : "y";
    if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto [t, v] : rows) arr.push_back({{var, t}, {q, v}, {"params", params_json(p)}});
        os << arr.dump(2) << "\n";
        return 0;
    }
    std::ostringstream meta;
    meta << params_meta(p);
    if (ar == Arity::XY) meta << (vary_x ? " y=" + num(*o.y) : " x=" + num(*o.x));
    meta << " grid=" << o.grid;
    os << "# " << meta.str() << "\n";
    os << var << ',' << q << "\n";
    for (auto [t, v] : rows) os << num(t) << ',' << num(v) << "\n";
    return 0;
}

int run_simulate(const Options& o, const std::string& region_name) {
    Region region;
    if (region_name == "interval")
        region = Region::Interval;
    else if (region_name == "halfline")
        region = Region::HalfLine;
    else if (region_name == "complement")
        region = Region::Complement;
    else
        throw usage_error("unknown region: " + region_name +
                          " (interval, halfline or complement)");

    SimConfig cfg;
    cfg.params = resolve_params(o);
    cfg.region = region;
    cfg.start = o.x.value_or(0.0);
    cfg.step = o.step;
    cfg.n_paths = o.paths;
    cfg.max_steps = o.max_steps;
    cfg.seed = o.seed;

    std::vector<ExitSample> samples = simulate_exit(cfg);
    EmpiricalSummary s = summarize(samples, region);

    std::ostringstream meta;
    meta << params_meta(cfg.params) << " region=" << to_string(region)
         << " x=" << num(cfg.start) << " step=" << num(cfg.step) << " paths=" << cfg.n_paths
         << " max-steps=" << cfg.max_steps << " seed=" << cfg.seed;

    // Summary on stdout; --out receives the per-path table instead of
    // redirecting the summary, since that is the bulky optional part.
    if (o.json) {
        nlohmann::json row{{"n", s.n},
                           {"mean_exit_time", s.mean_exit_time},
                           {"censor_fraction", s.censor_fraction},
                           {"lower_fraction", s.lower_fraction},
                           {"upper_fraction", s.upper_fraction},
                           {"seed", cfg.seed},
                           {"params", params_json(cfg.params)}};
        std::cout << nlohmann::json::array({row}).dump(2) << "\n";
    } else {
        std::cout << "# " << meta.str() << "\n";
        std::cout << "n,mean_exit_time,censor_fraction,lower_fraction,upper_fraction\n";
        std::cout << s.n << ',' << num(s.mean_exit_time) << ',' << num(s.censor_fraction) << ','
                  << num(s.lower_fraction) << ',' << num(s.upper_fraction) << "\n";
    }

    if (!o.out.empty()) {
        Sink sink(o.out);
        std::ostream& os = sink.os();
        if (o.json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const ExitSample& e : samples)
                arr.push_back({{"path", e.path_index},
                               {"exit_time", e.exit_time},
                               {"exit_pos", e.exit_pos},
                               {"censored", e.censored}});
            os << arr.dump(2) << "\n";
        } else {
            os << "# " << meta.str() << "\n";
            os << "path,exit_time,exit_pos,censored\n";
            for (const ExitSample& e : samples)
                os << e.path_index << ',' << num(e.exit_time) << ',' << num(e.exit_pos) << ','
                   << (e.censored ? 1 : 0) << "\n";
        }
    }
    return 0;
}

int run_verify(const Options& o, const std::string& set) {
    std::vector<CheckReport> reports;
    if (set == "all") {
        reports = run_canonical();
    } else {
        StableParams p = resolve_params(o);
        std::optional<double> tol = tol_override(o);
        if (set == "normalization")
            reports.push_back(check_normalization(p, require_y(o, "normalization"),
                                                  tol.value_or(1e-8)));
        else if (set == "fractional-moment")
            reports.push_back(check_fractional_moment(p, require_x(o, "fractional-moment"),
                                                      tol.value_or(1e-8)));
        else if (set == "masses")
            reports.push_back(check_masses(p, require_x(o, "masses"), tol.value_or(1e-8)));
        else if (set == "ikeda-watanabe") {
            double x = require_x(o, "ikeda-watanabe");
            Region region = std::abs(x) < 1.0 ? Region::Interval : Region::Complement;
            reports.push_back(check_ikeda_watanabe(p, x, require_y(o, "ikeda-watanabe"), region,
                                                   tol.value_or(1e-6)));
        } else if (set == "abel")
            reports.push_back(check_abel(p, require_x(o, "abel"), require_y(o, "abel"),
                                         tol.value_or(1e-7)));
        else
            throw usage_error("unknown check set: " + set +
                              " (all, normalization, fractional-moment, masses, "
                              "ikeda-watanabe or abel)");
    }

    Sink sink(o.out);
    if (o.json)
        write_reports_json(sink.os(), reports);
    else
        write_reports_csv(sink.os(), reports);
    for (const CheckReport& r : reports)
        if (!r.passed) return 1;
    return 0;
}

int run_info(const Options& o) {
    StableParams p = resolve_params(o);
    Sink sink(o.out);
    std::ostream& os = sink.os();
    auto [rho_lo, rho_hi] = rho_range(p.alpha);
    if (o.json) {
        nlohmann::json row = params_json(p);
        row["beta"] = p.beta;
        row["kappa"] = p.kappa;
        row["c_rho"] = p.c_rho;
        row["c_rho_hat"] = p.c_rho_hat;
        row["p1_at_zero"] = p1_at_zero(p);
        row["rho_min"] = rho_lo;
        row["rho_max"] = rho_hi;
        os << nlohmann::json::array({row}).dump(2) << "\n";
        return 0;
    }
    os << "# " << params_meta(p) << "\n";
    os << "key,value\n";
    os << "class," << to_string(p.cls) << "\n";
    os << "alpha," << num(p.alpha) << "\n";
    os << "rho," << num(p.rho) << "\n";
    os << "rho_hat," << num(p.rho_hat) << "\n";
    os << "beta," << num(p.beta) << "\n";
    os << "kappa," << num(p.kappa) << "\n";
    os << "c_rho," << num(p.c_rho) << "\n";
    os << "c_rho_hat," << num(p.c_rho_hat) << "\n";
    os << "p1_at_zero," << num(p1_at_zero(p)) << "\n";
    os << "rho_min," << num(rho_lo) << "\n";
    os << "rho_max," << num(rho_hi) << "\n";
    return 0;
}

void add_common_flags(CLI::App* sub, Options& o, bool with_sim = false) {
    sub->add_option("--alpha", o.alpha, "stability index in (0, 2]");
    sub->add_option("--rho", o.rho, "positivity parameter P[L_1 >= 0]");
    sub->add_option("--beta", o.beta, "classical skewness in [-1, 1], alternative to --rho");
    sub->add_option("--x", o.x, "starting / first coordinate");
    sub->add_option("--y", o.y, "target / second coordinate");
    sub->add_option("--tol", o.tol, "tolerance override (also: ASTABLE_TOL env var)");
    sub->add_flag("--json", o.json, "emit a JSON array instead of CSV");
    sub->add_option("--out", o.out, "write output to FILE");
    if (with_sim) {
        sub->add_option("--paths", o.paths, "number of simulated paths");
        sub->add_option("--step", o.step, "time step of the Euler scheme");
        sub->add_option("--seed", o.seed, "RNG seed (counter-based, reproducible)");
        sub->add_option("--max-steps", o.max_steps, "censoring cap per path");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary laws of strictly alpha-stable processes on the unit interval"};
    app.require_subcommand(1);

    Options o;
    std::string quantity, region_name, check_set;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity at a point");
    eval->add_option("quantity", quantity,
                     "h hstar g gstar gtau hitprob hitprob-halfline martin exptime "
                     "kappastar pstarinf levy semiinf-exit atoms")
        ->required();
    add_common_flags(eval, o);

    CLI::App* table = app.add_subcommand("table", "tabulate a quantity over a linspace grid");
    table->add_option("quantity", quantity, "same names as eval")->required();
    add_common_flags(table, o);
    table->add_option("--grid", o.grid, "lo:hi:n sweep of the free coordinate")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "first-exit Monte Carlo");
    simulate->add_option("region", region_name, "interval, halfline or complement")->required();
    add_common_flags(simulate, o, true);

    CLI::App* verify = app.add_subcommand("verify", "run identity checks, exit 0 iff all pass");
    verify->add_option("set", check_set,
                       "all, normalization, fractional-moment, masses, ikeda-watanabe or abel")
        ->required();
    add_common_flags(verify, o);

    CLI::App* info = app.add_subcommand("info", "derived constants of a parameter pack");
    add_common_flags(info, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(o, quantity);
        if (table->parsed()) return run_table(o, quantity);
        if (simulate->parsed()) return run_simulate(o, region_name);
        if (verify->parsed()) return run_verify(o, check_set);
        if (info->parsed()) return run_info(o);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const accuracy_error& e) {
        std::cerr << "error: " << e.what() << " (best estimate " << num(e.best_estimate())
                  << " +- " << num(e.est_error()) << ")\n";
        return 4;
    } catch (const std::domain_error& e) {
        // covers not_applicable_error and divergence_error as well
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
