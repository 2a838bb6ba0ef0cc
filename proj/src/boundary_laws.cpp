#include "alphastable/boundary_laws.hpp"

#include "alphastable/errors.hpp"
#include "alphastable/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace alphastable {

namespace {

constexpr double kPi = std::numbers::pi;

void require_inside(double x, const char* who) {
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error(std::string(who) + ": starting point must lie strictly inside (-1, 1)");
}

void require_outside(double v, const char* who, const char* role) {
    if (!(std::abs(v) > 1.0))
        throw std::domain_error(std::string(who) + ": " + role + " must lie strictly outside [-1, 1]");
}

void require_two_sided(const StableParams& p, const char* who) {
    if (p.cls == ProcessClass::Brownian || p.is_one_sided())
        throw not_applicable_error(std::string(who) +
            ": law is atomic or degenerate in this class; use exit_law");
}

// Exit density of (-1, 1), no class or domain checks: the same expression
// also produces the continuous parts of the one-sided branches, where one
// of the two coefficients vanishes identically.
double raw_h(const StableParams& p, double x, double y) {
    double ar = p.alpha * p.rho, arh = p.alpha * p.rho_hat;
    if (y > 1.0) {
        if (p.c_rho == 0.0) return 0.0;
        return p.c_rho * std::pow(1.0 + x, arh) * std::pow(1.0 - x, ar) *
               std::pow(1.0 + y, -arh) * std::pow(y - 1.0, -ar) / (y - x);
    }
    if (p.c_rho_hat == 0.0) return 0.0;
    return p.c_rho_hat * std::pow(1.0 + x, arh) * std::pow(1.0 - x, ar) *
           std::pow(1.0 - y, -ar) * std::pow(-y - 1.0, -arh) / (x - y);
}

// Entrance density into (-1, 1) from x > 1 with the given parameters; the
// x < -1 case reflects onto this one with hatted parameters.
double raw_hstar_above(const StableParams& p, double x, double y) {
    if (p.c_rho_hat == 0.0) return 0.0;  // increasing class never re-enters from above
    double ar = p.alpha * p.rho, arh = p.alpha * p.rho_hat;
    double pref = p.c_rho_hat * std::pow(1.0 + y, -ar) * std::pow(1.0 - y, -arh);

    double ln_a = ar * std::log(x + 1.0) + arh * std::log(x - 1.0) - std::log(x - y);
    if (p.alpha <= 1.0) return pref * std::exp(ln_a);

    // alpha > 1: the kernel term and the constant compensation term both
    // grow like x^{alpha-1} and nearly cancel for large x.  Subtract via
    // expm1 of the log ratio once they agree to three digits.
    double k = (p.alpha - 1.0) * inc_psi(p, x).value;
    double ln_k = std::log(k);
    double d = ln_a - ln_k;
    double bracket = (std::abs(d) < 1e-3) ? k * std::expm1(d) : std::exp(ln_a) - k;
    return pref * bracket;
}

double raw_hstar(const StableParams& p, double x, double y) {
    if (x > 1.0) return raw_hstar_above(p, x, y);
    return raw_hstar_above(p.dual(), -x, -y);
}

double zero_density(double) { return 0.0; }

ExitLaw interval_exit(const StableParams& p, double x) {
    ExitLaw law;
    law.region = Region::Interval;
    if (p.cls == ProcessClass::Brownian) {
        law.density = zero_density;
        law.atoms = {{-1.0, 0.5 * (1.0 - x)}, {1.0, 0.5 * (1.0 + x)}};
        return law;
    }
    law.density = [p, x](double y) {
        return std::abs(y) > 1.0 ? raw_h(p, x, y) : 0.0;
    };
    // No positive jumps and alpha > 1: the path creeps onto the upper
    // endpoint (mirrored for no negative jumps); the continuous part lives
    // on the jump side only and the other coefficient is already zero in
    // raw_h.  The monotone alpha < 1 classes exit by a jump, no atom.
    if (p.alpha > 1.0) {
        if (p.cls == ProcessClass::SpectrallyNegative)
            law.atoms = {{1.0, std::pow(0.5 * (1.0 + x), p.alpha - 1.0)}};
        else if (p.cls == ProcessClass::SpectrallyPositive)
            law.atoms = {{-1.0, std::pow(0.5 * (1.0 - x), p.alpha - 1.0)}};
    }
    return law;
}

ExitLaw complement_entrance(const StableParams& p, double x) {
    ExitLaw law;
    law.region = Region::Complement;
    if (p.cls == ProcessClass::Brownian) {
        law.density = zero_density;
        law.atoms = {{x > 1.0 ? 1.0 : -1.0, 1.0}};
        return law;
    }
    // Creeping entrance (alpha > 1 one-sided): no jumps toward the
    // interval means the boundary point facing the start is reached
    // continuously, with certainty.
    if (p.alpha > 1.0 &&
        ((p.cls == ProcessClass::SpectrallyNegative && x < -1.0) ||
         (p.cls == ProcessClass::SpectrallyPositive && x > 1.0))) {
        law.density = zero_density;
        law.atoms = {{x > 1.0 ? 1.0 : -1.0, 1.0}};
        return law;
    }
    law.density = [p, x](double y) {
        return std::abs(y) < 1.0 ? raw_hstar(p, x, y) : 0.0;
    };
    // Entering from the jump side of a creeping class: the path may also
    // fly past the interval and then creep back onto the far endpoint.
    if (p.alpha > 1.0 && p.cls == ProcessClass::SpectrallyNegative && x > 1.0) {
        double w = (x - 1.0) / (x + 1.0);
        double a = p.alpha - 1.0;
        law.atoms = {{-1.0, p.c_rho_hat * beta_neg_inc(a, a, w, 1.0 - w)}};
    } else if (p.alpha > 1.0 && p.cls == ProcessClass::SpectrallyPositive && x < -1.0) {
        double w = (-x - 1.0) / (-x + 1.0);
        double a = p.alpha - 1.0;
        law.atoms = {{1.0, p.c_rho * beta_neg_inc(a, a, w, 1.0 - w)}};
    }
    if (p.alpha < 1.0) law.defect = pstar_infinity(p, x);
    return law;
}

ExitLaw halfline_exit(const StableParams& p, double x) {
    ExitLaw law;
    law.region = Region::HalfLine;
    if (p.cls == ProcessClass::Brownian ||
        (p.cls == ProcessClass::SpectrallyNegative && p.alpha > 1.0)) {
        law.density = zero_density;
        law.atoms = {{1.0, 1.0}};  // creeps across the level
        return law;
    }
    if (p.rho == 0.0) {
        // Decreasing paths never reach the level.
        law.density = zero_density;
        law.defect = 1.0;
        return law;
    }
    law.density = [p, x](double y) {
        if (!(y > 1.0)) return 0.0;
        return p.c_rho * std::pow(1.0 - x, p.alpha * p.rho) *
               std::pow(y - 1.0, -p.alpha * p.rho) / (y - x);
    };
    return law;
}

}  // namespace

const char* to_string(Region r) {
    switch (r) {
        case Region::Interval:   return "interval";
        case Region::Complement: return "complement";
        case Region::HalfLine:   return "halfline";
    }
    return "?";
}

double h_density(const StableParams& p, double x, double y) {
    require_two_sided(p, "h_density");
    require_inside(x, "h_density");
    require_outside(y, "h_density", "observation point");
    return raw_h(p, x, y);
}

double hstar_density(const StableParams& p, double x, double y) {
    require_two_sided(p, "hstar_density");
    require_outside(x, "hstar_density", "starting point");
    require_inside(y, "hstar_density");
    return raw_hstar(p, x, y);
}

KappaStar kappa_star(const StableParams& p, double x) {
    if (!(p.alpha > 1.0))
        throw not_applicable_error("kappa_star: defined for the recurrent case alpha > 1 only");
    if (!(x >= 1.0))
        throw std::domain_error("kappa_star: requires x >= 1");
    if (x == 1.0) return {x, 0.0};
    return {x, p.c_rho_hat * (p.alpha - 1.0) * inc_psi(p, x).value};
}

double tstar_tail_constant(const StableParams& p, double x) {
    if (!(p.alpha > 1.0 && p.alpha < 2.0))
        throw not_applicable_error(
            "tstar_tail_constant: polynomial tail exists for alpha in (1,2) only");
    // -Gamma(1-alpha) > 0 on alpha in (1,2), so the constant is positive.
    return -std::tgamma(1.0 - p.alpha) * std::sin(kPi / p.alpha) /
           (kPi * p1_at_zero(p)) * kappa_star(p, x).value;
}

double pstar_infinity(const StableParams& p, double x) {
    if (p.alpha >= 1.0) return 0.0;
    require_outside(x, "pstar_infinity", "starting point");
    StableParams q = x > 1.0 ? p : p.dual();
    double z = std::abs(x);
    if (q.rho == 1.0) return 1.0;  // increasing paths drift away from the interval
    double ar = q.alpha * q.rho, arh = q.alpha * q.rho_hat;
    double c = std::tgamma(1.0 - ar) * std::pow(2.0, 1.0 - q.alpha) *
               gamma_recip(arh) * gamma_recip(1.0 - q.alpha);
    return c * inc_psi(q, z).value;
}

double semiinf_exit_density(const StableParams& p, double x, double y) {
    if (p.cls == ProcessClass::Brownian ||
        (p.cls == ProcessClass::SpectrallyNegative && p.alpha > 1.0))
        throw not_applicable_error(
            "semiinf_exit_density: this class creeps across the level; use exit_law");
    if (!(x < 1.0)) throw std::domain_error("semiinf_exit_density: requires x < 1");
    if (!(y > 1.0)) throw std::domain_error("semiinf_exit_density: requires y > 1");
    if (p.c_rho == 0.0) return 0.0;
    return p.c_rho * std::pow(1.0 - x, p.alpha * p.rho) *
           std::pow(y - 1.0, -p.alpha * p.rho) / (y - x);
}

ExitLaw exit_law(const StableParams& p, Region region, double x) {
    switch (region) {
        case Region::Interval:
            require_inside(x, "exit_law");
            return interval_exit(p, x);
        case Region::Complement:
            require_outside(x, "exit_law", "starting point");
            return complement_entrance(p, x);
        case Region::HalfLine:
            if (!(x < 1.0)) throw std::domain_error("exit_law: requires x < 1 for the half-line");
            return halfline_exit(p, x);
    }
    throw std::logic_error("exit_law: unreachable");
}

double expected_exit_time(const StableParams& p, double x) {
    require_inside(x, "expected_exit_time");
    return std::pow(1.0 - x, p.alpha * p.rho) * std::pow(1.0 + x, p.alpha * p.rho_hat) /
           std::tgamma(p.alpha + 1.0);
}

}  // namespace alphastable
