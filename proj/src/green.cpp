#include "alphastable/green.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "alphastable/errors.hpp"
#include "alphastable/quadrature.hpp"
#include "alphastable/specfun.hpp"

namespace alphastable {

namespace {

void require_inside(double v, const char* who, const char* role) {
    if (!(v > -1.0 && v < 1.0))
        throw std::domain_error(std::string(who) + ": " + role + " must lie strictly inside (-1, 1)");
}

void require_outside(double v, const char* who, const char* role) {
    if (!(std::abs(v) > 1.0))
        throw std::domain_error(std::string(who) + ": " + role + " must lie strictly outside [-1, 1]");
}

void require_two_sided(const StableParams& p, const char* who) {
    if (p.cls == ProcessClass::Brownian || p.is_one_sided())
        throw not_applicable_error(std::string(who) +
            ": defined for two-sided jump classes only in this geometry");
}

double gamma_pair(const StableParams& p) {
    return std::tgamma(p.alpha * p.rho) * std::tgamma(p.alpha * p.rho_hat);
}

// gap^{alpha-1} * I(a, alpha; w), the building block of every kernel
// integral in this file.  The caller supplies w and v = 1 - w in factored
// form, each exact up to individual roundings, and `base`, which equals
// gap / v in exact arithmetic but stays computable as gap and v vanish
// together on the diagonal.  Folding the connection term's v^{1-alpha}
// into base^{alpha-1} is what lets the evaluation survive gap -> 0
// without ever forming the huge Moebius coordinate.
double scaled_kernel(double a, double alpha, double w, double v, double gap, double base) {
    BetaNegParts parts = beta_neg_parts(a, alpha, w, v);
    double gap_pow = std::pow(gap, alpha - 1.0);
    if (!parts.split) return gap_pow * parts.value;
    return gap_pow * parts.const_part + parts.vpow_coef * std::pow(base, alpha - 1.0);
}

// Product of the two one-sided kernel integrals subtracted in the
// recurrent complement formula; zero when alpha <= 1.
double complement_correction(const StableParams& p, double x, double y_abs, bool far_side) {
    if (!(p.alpha > 1.0)) return 0.0;
    double second = far_side ? inc_psi(p, y_abs, false).value   // same kernel on the far ray
                             : inc_psi(p, y_abs, true).value;
    return (p.alpha - 1.0) * std::exp2(1.0 - p.alpha) * inc_psi(p, x, false).value * second;
}

}  // namespace

const char* to_string(GreenBranch b) {
    switch (b) {
        case GreenBranch::Upper: return "upper";
        case GreenBranch::Lower: return "lower";
        case GreenBranch::OppositeRay: return "opposite-ray";
        case GreenBranch::Diagonal: return "diagonal";
        case GreenBranch::Brownian: return "brownian";
        case GreenBranch::OneSided: return "one-sided";
    }
    return "?";
}

GreenEvaluation g_interval(const StableParams& p, double x, double y) {
    require_inside(x, "g_interval", "source");
    require_inside(y, "g_interval", "target");

    if (p.cls == ProcessClass::Brownian) {
        double lo = std::min(x, y), hi = std::max(x, y);
        double z = (x == y) ? INFINITY : std::abs((1.0 - x * y) / (x - y));
        return {x, y, z, (1.0 + lo) * (1.0 - hi) / 2.0, GreenBranch::Brownian};
    }
    require_two_sided(p, "g_interval");

    double alpha = p.alpha, gg = gamma_pair(p);
    if (x == y) {
        double value = alpha > 1.0
            ? std::pow((1.0 - x) * (1.0 + x) / 2.0, alpha - 1.0) / ((alpha - 1.0) * gg)
            : INFINITY;
        return {x, y, INFINITY, value, GreenBranch::Diagonal};
    }

    bool upper = y > x;
    double a = upper ? alpha * p.rho_hat : alpha * p.rho;
    double gap = std::abs(y - x);
    double wnum = upper ? (1.0 + x) * (1.0 - y) : (1.0 - x) * (1.0 + y);
    double wden = upper ? (1.0 - x) * (1.0 + y) : (1.0 + x) * (1.0 - y);
    double value = scaled_kernel(a, alpha, wnum / wden, 2.0 * gap / wden, gap, wden / 2.0) / gg;
    double z = (wnum + wden) / (2.0 * gap);
    return {x, y, z, value, upper ? GreenBranch::Upper : GreenBranch::Lower};
}

GreenEvaluation g_complement(const StableParams& p, double x, double y) {
    require_two_sided(p, "g_complement");
    require_outside(x, "g_complement", "source");
    require_outside(y, "g_complement", "target");
    if (x < -1.0) {
        GreenEvaluation ev = g_complement(p.dual(), -x, -y);
        return {x, y, ev.z, ev.value, ev.branch};
    }

    double alpha = p.alpha, gg = gamma_pair(p);

    if (y < -1.0) {
        double yy = -y;
        double gap = x + yy;
        double wnum = (x - 1.0) * (yy - 1.0);
        double wden = (x + 1.0) * (yy + 1.0);
        double first = scaled_kernel(alpha * p.rho_hat, alpha, wnum / wden,
                                     2.0 * gap / wden, gap, wden / 2.0);
        double value = (p.c_rho_hat / p.c_rho) *
                       (first - complement_correction(p, x, yy, true)) / gg;
        double z = (wnum + wden) / (2.0 * gap);
        return {x, y, z, std::max(value, 0.0), GreenBranch::OppositeRay};
    }

    if (x == y) {
        if (!(alpha > 1.0)) return {x, y, INFINITY, INFINITY, GreenBranch::Diagonal};
        double first = std::pow((x - 1.0) * (x + 1.0) / 2.0, alpha - 1.0) / (alpha - 1.0);
        double value = (first - complement_correction(p, x, x, false)) / gg;
        return {x, y, INFINITY, std::max(value, 0.0), GreenBranch::Diagonal};
    }

    // Same ray: the kernel switches sides with the larger argument (Hunt's
    // switching identity at the level of the formula).
    bool upper = y > x;
    double a = upper ? alpha * p.rho_hat : alpha * p.rho;
    double gap = std::abs(y - x);
    double wnum = upper ? (x - 1.0) * (y + 1.0) : (y - 1.0) * (x + 1.0);
    double wden = upper ? (x + 1.0) * (y - 1.0) : (y + 1.0) * (x - 1.0);
    double first = scaled_kernel(a, alpha, wnum / wden, 2.0 * gap / wden, gap, wden / 2.0);
    double value = (first - complement_correction(p, x, y, false)) / gg;
    double z = (wnum + wden) / (2.0 * gap);
    return {x, y, z, std::max(value, 0.0), upper ? GreenBranch::Upper : GreenBranch::Lower};
}

GreenEvaluation g_halfline(const StableParams& p, double x, double y) {
    if (!(x < 1.0))
        throw std::domain_error("g_halfline: source must lie strictly below 1");
    if (!(y < 1.0))
        throw std::domain_error("g_halfline: target must lie strictly below 1");

    double alpha = p.alpha;
    double coord = (x == y) ? INFINITY : (1.0 - std::max(x, y)) / std::abs(y - x);

    if (p.cls == ProcessClass::Brownian)
        return {x, y, coord, 1.0 - std::max(x, y), GreenBranch::Brownian};

    if (alpha < 1.0 && p.is_one_sided()) {
        // Monotone paths never return: the occupation density is the
        // renewal potential along the direction of motion and 0 behind it.
        double fwd = p.cls == ProcessClass::SpectrallyPositive ? y - x : x - y;
        double value = fwd > 0.0 ? std::pow(fwd, alpha - 1.0) / std::tgamma(alpha)
                                 : (fwd == 0.0 ? INFINITY : 0.0);
        return {x, y, coord, value, GreenBranch::OneSided};
    }

    double gg = gamma_pair(p);
    if (x == y) {
        double value = alpha > 1.0
            ? std::pow(1.0 - x, alpha - 1.0) / ((alpha - 1.0) * gg)
            : INFINITY;
        return {x, y, INFINITY, value, GreenBranch::Diagonal};
    }

    bool upper = y > x;
    double a = upper ? alpha * p.rho_hat : alpha * p.rho;
    double gap = std::abs(y - x);
    double wnum = 1.0 - std::max(x, y);
    double wden = 1.0 - std::min(x, y);
    double value = scaled_kernel(a, alpha, wnum / wden, gap / wden, gap, wden) / gg;
    return {x, y, coord, value, upper ? GreenBranch::Upper : GreenBranch::Lower};
}

double expected_exit_time_quadrature(const StableParams& p, double x, double tol) {
    require_inside(x, "expected_exit_time_quadrature", "source");
    auto f = [&](double y) { return g_interval(p, x, y).value; };
    // Interior singularity at y = x: an integrable power for alpha < 1,
    // logarithmic at alpha = 1, a mere kink above.
    double edge = p.alpha < 1.0 ? p.alpha - 1.0 : 0.0;
    return quad_singular(f, -1.0, x, 0.0, edge, tol / 2.0) +
           quad_singular(f, x, 1.0, edge, 0.0, tol / 2.0);
}

}  // namespace alphastable
