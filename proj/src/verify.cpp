#include "alphastable/verify.hpp"

#include "alphastable/errors.hpp"
#include "alphastable/green.hpp"
#include "alphastable/quadrature.hpp"
#include "alphastable/specfun.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

namespace alphastable {

namespace {

std::string setting_string(const StableParams& p, const char* fmt, double a,
                           double b = 0.0, bool two = false) {
    char buf[128];
    int n = std::snprintf(buf, sizeof buf, "alpha=%g rho=%g ", p.alpha, p.rho);
    if (two)
        std::snprintf(buf + n, sizeof buf - n, fmt, a, b);
    else
        std::snprintf(buf + n, sizeof buf - n, fmt, a);
    return buf;
}

void fold(CheckReport& r, const QuadResult& q, bool& ok) {
    r.subdivisions += q.subdivisions;
    r.est_error += q.est_error;
    ok = ok && q.converged;
}

}  // namespace

double abel_kernel(const StableParams& p, double t, double y, bool hatted) {
    double above = hatted ? p.c_rho_hat : p.c_rho;
    double below = hatted ? p.c_rho : p.c_rho_hat;
    return (y > t ? above : below) * std::pow(std::abs(t - y), p.alpha - 1.0);
}

CheckReport check_normalization(const StableParams& p, double y, double tol) {
    if (p.alpha == 1.0)
        throw not_applicable_error("check_normalization: alpha = 1 is not covered");
    if (!phi_integrable(p))
        throw not_applicable_error(
            "check_normalization: interior kernel is not integrable for this class");
    if (!(std::abs(y) < 1.0))
        throw std::domain_error("check_normalization: y must lie strictly inside (-1, 1)");

    double ar = p.alpha * p.rho;
    double arh = p.alpha * p.rho_hat;
    double kink = std::min(p.alpha - 1.0, 0.0);
    auto f = [&](double t) { return abel_kernel(p, t, y, true) * phi_kernel(p, t); };

    double qtol = tol * 0.05;
    QuadResult left = quad_singular_full(f, -1.0, y, -arh, kink, qtol);
    QuadResult right = quad_singular_full(f, y, 1.0, kink, -ar, qtol);

    CheckReport r;
    r.name = "normalization";
    r.setting = setting_string(p, "y=%g", y);
    r.tolerance = tol;
    r.residual = (left.value + right.value) - 1.0;
    bool ok = true;
    fold(r, left, ok);
    fold(r, right, ok);
    r.passed = ok && std::abs(r.residual) <= tol;
    return r;
}

CheckReport check_fractional_moment(const StableParams& p, double x, double tol) {
    if (p.alpha == 1.0)
        throw not_applicable_error(
            "check_fractional_moment: alpha = 1 sits on the Gamma(1 - alpha) pole");
    if (p.cls != ProcessClass::TwoSided)
        throw not_applicable_error("check_fractional_moment: two-sided jumps required");
    if (!(x > 1.0))
        throw std::domain_error("check_fractional_moment: requires x > 1");

    double ar = p.alpha * p.rho;
    double arh = p.alpha * p.rho_hat;
    auto f = [&](double y) { return std::pow(x - y, p.alpha - 1.0) * phi_kernel(p, y); };
    QuadResult q = quad_singular_full(f, -1.0, 1.0, -arh, -ar, tol * 0.05);
    double lhs = p.c_rho_hat * q.value;

    IncPsiResult tail = inc_psi(p, x, false);
    double coef = std::tgamma(1.0 - ar) * std::exp2(1.0 - p.alpha) * gamma_recip(arh) *
                  gamma_recip(1.0 - p.alpha);
    double rhs = 1.0 - coef * tail.value;

    CheckReport r;
    r.name = "fractional-moment";
    r.setting = setting_string(p, "x=%g", x);
    r.tolerance = tol;
    double scale = std::max(1.0, std::abs(rhs));
    r.residual = (lhs - rhs) / scale;
    r.subdivisions = q.subdivisions;
    r.est_error = (p.c_rho_hat * q.est_error + std::abs(coef) * tail.est_error) / scale;
    r.passed = q.converged && std::abs(r.residual) <= tol;
    return r;
}

CheckReport check_masses(const StableParams& p, double x, double tol) {
    double ax = std::abs(x);
    if (ax == 1.0)
        throw std::domain_error("check_masses: x must not sit on the boundary");
    bool inside = ax < 1.0;
    ExitLaw law = exit_law(p, inside ? Region::Interval : Region::Complement, x);

    CheckReport r;
    r.name = inside ? "exit-mass" : "entrance-mass";
    r.setting = setting_string(p, "x=%g", x);
    r.tolerance = tol;

    double mass = law.defect;
    for (const Atom& a : law.atoms) mass += a.weight;

    bool ok = true;
    if (p.cls != ProcessClass::Brownian) {
        double ar = p.alpha * p.rho;
        double arh = p.alpha * p.rho_hat;
        double qtol = tol * 0.05;
        if (inside) {
            // The density inherits the jump tail |y|^{-1-alpha} and the
            // boundary blow-up (|y| - 1)^{-alpha rho} on the matching side.
            if (p.has_positive_jumps()) {
                QuadResult up = quad_upper_tail_full([&](double y) { return law.density(y); },
                                                     1.0, p.alpha + 1.0, -ar, qtol);
                mass += up.value;
                fold(r, up, ok);
            }
            if (p.has_negative_jumps()) {
                QuadResult dn = quad_upper_tail_full([&](double u) { return law.density(-u); },
                                                     1.0, p.alpha + 1.0, -arh, qtol);
                mass += dn.value;
                fold(r, dn, ok);
            }
        } else {
            // The entrance density keeps the full interior-kernel blow-up
            // (1+y)^{-alpha rho} (1-y)^{-alpha rho_hat} at the edges; the
            // bracket multiplying it stays finite there.
            QuadResult in = quad_singular_full([&](double y) { return law.density(y); }, -1.0,
                                               1.0, -ar, -arh, qtol);
            mass += in.value;
            fold(r, in, ok);
        }
    }
    r.residual = mass - 1.0;
    r.passed = ok && std::abs(r.residual) <= tol;
    return r;
}

CheckReport check_ikeda_watanabe(const StableParams& p, double x, double y, Region region,
                                 double tol) {
    if (region == Region::HalfLine)
        throw not_applicable_error("check_ikeda_watanabe: interval and complement regions only");

    CheckReport r;
    r.name = region == Region::Interval ? "ikeda-watanabe-interval" : "ikeda-watanabe-complement";
    r.setting = setting_string(p, "x=%g y=%g", x, y, true);
    r.tolerance = tol;

    if (p.cls == ProcessClass::Brownian) {
        // No jumps: the factorization is 0 = 0 and the law is atomic.
        r.passed = true;
        return r;
    }

    ExitLaw law = exit_law(p, region, x);
    double closed = law.density(y);
    if (!(closed > 0.0))
        throw not_applicable_error("check_ikeda_watanabe: no jump mass reaches the target point");

    double kink = std::min(p.alpha - 1.0, 0.0);
    double qtol = std::min(tol * 0.02, 1e-9);
    bool ok = true;
    double direct = 0.0;
    if (region == Region::Interval) {
        auto f = [&](double v) { return g_interval(p, x, v).value * levy_density(p, y - v); };
        QuadResult a = quad_singular_full(f, -1.0, x, 0.0, kink, qtol);
        QuadResult b = quad_singular_full(f, x, 1.0, kink, 0.0, qtol);
        direct = a.value + b.value;
        fold(r, a, ok);
        fold(r, b, ok);
    } else {
        auto f = [&](double v) { return g_complement(p, x, v).value * levy_density(p, y - v); };
        std::function<double(double)> mirrored = [&](double u) { return f(-u); };
        std::function<double(double)> plain = f;
        const auto& near_ray = x > 1.0 ? plain : mirrored;
        const auto& far_ray = x > 1.0 ? mirrored : plain;
        double ax = std::abs(x);
        QuadResult a = quad_singular_full(near_ray, 1.0, ax, 0.0, kink, qtol);
        QuadResult b = quad_upper_tail_full(near_ray, ax, 2.0, kink, qtol);
        QuadResult c = quad_upper_tail_full(far_ray, 1.0, 2.0, 0.0, qtol);
        direct = a.value + b.value + c.value;
        fold(r, a, ok);
        fold(r, b, ok);
        fold(r, c, ok);
    }

    r.residual = (direct - closed) / closed;
    r.est_error /= closed;
    r.passed = ok && std::abs(r.residual) <= tol;
    return r;
}

CheckReport check_abel(const StableParams& p, double x, double y, double tol) {
    if (p.alpha == 1.0)
        throw not_applicable_error("check_abel: alpha = 1 is not covered");
    if (p.cls != ProcessClass::TwoSided)
        throw not_applicable_error("check_abel: two-sided jumps required");
    if (!(x > 1.0))
        throw std::domain_error("check_abel: requires x > 1");
    if (!(std::abs(y) < 1.0))
        throw std::domain_error("check_abel: requires y strictly inside (-1, 1)");

    double ar = p.alpha * p.rho;
    double arh = p.alpha * p.rho_hat;
    double kink = std::min(p.alpha - 1.0, 0.0);
    auto f = [&](double t) { return abel_kernel(p, t, y) * hstar_density(p, x, t); };

    // Edge exponents come from the interior-kernel blow-up of the entrance
    // density, (1+t)^{-alpha rho} near -1 and (1-t)^{-alpha rho_hat} near 1.
    double qtol = std::min(tol * 0.02, 1e-9);
    QuadResult left = quad_singular_full(f, -1.0, y, -ar, kink, qtol);
    QuadResult right = quad_singular_full(f, y, 1.0, kink, -arh, qtol);
    double lhs = left.value + right.value;
    // The recurrent case pays for Gamma(1 - alpha) < 0 in the underlying
    // Abel inversion with a compensation term on the integral side.
    if (p.alpha > 1.0) lhs += kappa_star(p, x).value;
    double rhs = p.c_rho_hat * std::pow(x - y, p.alpha - 1.0);

    CheckReport r;
    r.name = "abel-equation";
    r.setting = setting_string(p, "x=%g y=%g", x, y, true);
    r.tolerance = tol;
    double scale = std::max(1.0, std::abs(rhs));
    r.residual = (lhs - rhs) / scale;
    bool ok = true;
    fold(r, left, ok);
    fold(r, right, ok);
    r.est_error /= scale;
    r.passed = ok && std::abs(r.residual) <= tol;
    return r;
}

std::vector<CheckReport> run_canonical() {
    struct Row {
        double alpha;
        double rhos[3];
    };
    static constexpr Row grid[] = {
        {0.5, {0.3, 0.5, 0.75}},  {0.8, {0.35, 0.5, 0.7}}, {1.0, {0.3, 0.5, 0.6}},
        {1.3, {0.35, 0.5, 0.65}}, {1.7, {0.45, 0.5, 0.55}},
    };

    std::vector<CheckReport> out;
    for (const Row& row : grid) {
        for (double rho : row.rhos) {
            StableParams p = make_params(row.alpha, rho);
            for (double x : {-0.5, 0.3, 1.6, -2.2}) out.push_back(check_masses(p, x));
            if (row.alpha == 1.0) continue;
            for (double y : {-0.9, 0.0, 0.7}) out.push_back(check_normalization(p, y));
            for (double x : {1.1, 2.0, 10.0}) out.push_back(check_fractional_moment(p, x));
            out.push_back(check_abel(p, 1.5, 0.3));
            out.push_back(check_abel(p, 2.5, -0.4));
            out.push_back(check_ikeda_watanabe(p, 0.2, 1.5, Region::Interval));
            out.push_back(check_ikeda_watanabe(p, -0.4, -1.8, Region::Interval));
            out.push_back(check_ikeda_watanabe(p, 1.7, 0.2, Region::Complement));
            out.push_back(check_ikeda_watanabe(p, -1.3, -0.5, Region::Complement));
        }
    }
    return out;
}

void write_reports_csv(std::ostream& os, const std::vector<CheckReport>& reports) {
    os << "check,setting,residual,tolerance,passed,subdivisions,est_error\n";
    char buf[160];
    for (const CheckReport& r : reports) {
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%d,%d,%.17g\n", r.residual, r.tolerance,
                      r.passed ? 1 : 0, r.subdivisions, r.est_error);
        os << r.name << ',' << r.setting << buf;
    }
}

void write_reports_json(std::ostream& os, const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : reports)
        arr.push_back({{"check", r.name},
                       {"setting", r.setting},
                       {"residual", r.residual},
                       {"tolerance", r.tolerance},
                       {"passed", r.passed},
                       {"subdivisions", r.subdivisions},
                       {"est_error", r.est_error}});
    os << arr.dump(2) << '\n';
}

}  // namespace alphastable
