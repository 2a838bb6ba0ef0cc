#include "alphastable/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "alphastable/errors.hpp"
#include "alphastable/specfun.hpp"

namespace alphastable {

namespace {

void require_inside(double v, const char* who, const char* role) {
    if (!(v > -1.0 && v < 1.0))
        throw std::domain_error(std::string(who) + ": " + role + " must lie strictly inside (-1, 1)");
}

void require_hitting(const StableParams& p, const char* who) {
    if (!(p.alpha > 1.0))
        throw not_applicable_error(std::string(who) +
            ": points are polar for alpha <= 1, the process never hits them");
}

}  // namespace

double hit_prob(const StableParams& p, double x, double y) {
    require_hitting(p, "hit_prob");
    require_inside(x, "hit_prob", "starting point");
    require_inside(y, "hit_prob", "target point");
    if (x == y) return 1.0;
    if (p.cls == ProcessClass::Brownian)
        return x > y ? (1.0 - x) / (1.0 - y) : (1.0 + x) / (1.0 + y);

    // Approaching from above runs the hatted kernel, from below the plain
    // one.  Assembled like the Green function: exact factored w and v, the
    // connection v-power folded into a bounded ratio, no Moebius
    // coordinate; the folded ratio tends to 1 on the diagonal, making the
    // continuity value exact.
    double alpha = p.alpha, am1 = alpha - 1.0;
    bool above = x > y;
    double a = above ? alpha * p.rho : alpha * p.rho_hat;
    double gap = std::abs(x - y);
    double wnum = above ? (1.0 - x) * (1.0 + y) : (1.0 + x) * (1.0 - y);
    double wden = above ? (1.0 + x) * (1.0 - y) : (1.0 - x) * (1.0 + y);
    double ratio = above ? (1.0 + x) / (1.0 + y) : (1.0 - x) / (1.0 - y);

    BetaNegParts parts = beta_neg_parts(a, alpha, wnum / wden, 2.0 * gap / wden);
    double scale = std::pow(2.0 * gap / ((1.0 - y) * (1.0 + y)), am1);
    double value = parts.split
        ? am1 * (scale * parts.const_part + parts.vpow_coef * std::pow(ratio, am1))
        : am1 * scale * parts.value;
    return std::clamp(value, 0.0, 1.0);
}

double hit_prob_halfline(const StableParams& p, double x, double y) {
    require_hitting(p, "hit_prob_halfline");
    if (!(x < 1.0) || !(y < 1.0))
        throw std::domain_error("hit_prob_halfline: both points must lie strictly below 1");
    if (x == y) return 1.0;
    if (p.cls == ProcessClass::Brownian)
        return x > y ? (1.0 - x) / (1.0 - y) : 1.0;

    double alpha = p.alpha, am1 = alpha - 1.0;
    bool above = x > y;
    double a = above ? alpha * p.rho : alpha * p.rho_hat;
    double gap = std::abs(x - y);
    double wnum = above ? 1.0 - x : 1.0 - y;
    double wden = above ? 1.0 - y : 1.0 - x;
    double ratio = above ? 1.0 : (1.0 - x) / (1.0 - y);

    BetaNegParts parts = beta_neg_parts(a, alpha, wnum / wden, gap / wden);
    double scale = std::pow(gap / (1.0 - y), am1);
    double value = parts.split
        ? am1 * (scale * parts.const_part + parts.vpow_coef * std::pow(ratio, am1))
        : am1 * scale * parts.value;
    return std::clamp(value, 0.0, 1.0);
}

PointAugmentedLaw point_augmented_law(const StableParams& p, double x, double y) {
    require_hitting(p, "point_augmented_law");
    require_inside(x, "point_augmented_law", "starting point");
    require_inside(y, "point_augmented_law", "marked point");
    if (x == y)
        throw std::domain_error("point_augmented_law: the marked point must differ from the start");
    return {hit_prob(p, x, y),
            exit_law(p, Region::Interval, x),
            exit_law(p, Region::Interval, y),
            y};
}

double hit_asymptote_constant(const StableParams& p, Side side) {
    require_hitting(p, "hit_asymptote_constant");
    if (p.alpha == 2.0) return 0.5;
    double ar = side == Side::Above ? p.alpha * p.rho : p.alpha * p.rho_hat;
    // gamma_recip turns the pole at alpha rho_hat = 1 (continuous downward
    // passage) into an exact zero: exiting before the hit becomes o(x^{alpha-1}).
    return std::tgamma(2.0 - p.alpha) * std::tgamma(ar) * gamma_recip(1.0 - (p.alpha - ar));
}

double harmonic_eval(const StableParams& p, const HarmonicFamily& fam, double x, Region region) {
    if (fam.lambda_coef < 0.0 || fam.mu_coef < 0.0)
        throw std::domain_error("harmonic_eval: the nonnegative family takes nonnegative coefficients");
    double alpha = p.alpha, ar = alpha * p.rho, arh = alpha * p.rho_hat;

    switch (region) {
        case Region::Interval: {
            require_inside(x, "harmonic_eval", "argument");
            if (p.is_one_sided() && alpha < 1.0) {
                if (fam.lambda_coef != 0.0)
                    throw std::domain_error(
                        "harmonic_eval: monotone classes carry a one-parameter family; "
                        "lambda_coef must be zero");
                double u = p.cls == ProcessClass::SpectrallyPositive ? 1.0 - x : 1.0 + x;
                return fam.mu_coef * std::pow(u, alpha - 1.0);
            }
            if (p.is_one_sided()) {
                // Creeping classes: the kernel tied to the creeping end is
                // the scale function, the other one is singular at the jump
                // side. Keeping lambda attached to the -1 end means the
                // mirrored class swaps coefficients along with the sign of x.
                bool neg = p.cls == ProcessClass::SpectrallyNegative;
                double lam = neg ? fam.lambda_coef : fam.mu_coef;
                double mu = neg ? fam.mu_coef : fam.lambda_coef;
                double s = neg ? x : -x;
                return lam * (1.0 - s) * std::pow(1.0 + s, alpha - 2.0)
                     + mu * std::pow(1.0 + s, alpha - 1.0);
            }
            return fam.lambda_coef * std::pow(1.0 - x, ar) * std::pow(1.0 + x, arh - 1.0)
                 + fam.mu_coef * std::pow(1.0 + x, arh) * std::pow(1.0 - x, ar - 1.0);
        }
        case Region::HalfLine: {
            if (!(x < 1.0))
                throw std::domain_error("harmonic_eval: half-line argument must lie below 1");
            return fam.lambda_coef * std::pow(1.0 - x, ar)
                 + fam.mu_coef * std::pow(1.0 - x, ar - 1.0);
        }
        case Region::Complement:
            throw not_applicable_error("harmonic_eval: no family is exposed for the complement");
    }
    throw std::logic_error("harmonic_eval: unreachable");
}

double martin_kernel(const StableParams& p, double x, Side at) {
    if (p.is_one_sided())
        throw not_applicable_error("martin_kernel: boundary kernels degenerate for monotone-jump classes");
    require_inside(x, "martin_kernel", "argument");
    double ar = p.alpha * p.rho, arh = p.alpha * p.rho_hat;
    return at == Side::Above
        ? std::pow(1.0 - x, ar - 1.0) * std::pow(1.0 + x, arh)
        : std::pow(1.0 + x, arh - 1.0) * std::pow(1.0 - x, ar);
}

}  // namespace alphastable
