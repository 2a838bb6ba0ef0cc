#pragma once

#include "alphastable/boundary_laws.hpp"
#include "alphastable/params.hpp"

namespace alphastable {

enum class Side { Above, Below };

// Two-parameter family of nonnegative functions harmonic for the process
// killed outside the domain, all vanishing on the complement.  lambda_coef
// weights the component attached to the -1 end of the interval, mu_coef
// the one attached to +1 (for the half-line, to the barrier).  Monotone
// classes carry a one-parameter family kept under mu_coef, with
// lambda_coef required to be zero.
struct HarmonicFamily {
    double lambda_coef = 0.0;
    double mu_coef = 0.0;
};

// Decomposition of the exit law conditioned on whether a marked interior
// point y gets hit first: the exit position law with the point adjoined is
//   rho_xy * (delta_point - point_law) + base_law,
// a probability measure with an atom of mass rho_xy at the point.
struct PointAugmentedLaw {
    double rho_xy;
    ExitLaw base_law;   // exit position law started from x
    ExitLaw point_law;  // exit position law started from the marked point
    double point;
};

// Probability of visiting y before leaving (-1, 1), started at x.  Needs
// alpha > 1; below that points are polar and a not_applicable_error says
// so.  Continuous, equal to 1 on the diagonal.
double hit_prob(const StableParams& p, double x, double y);

// Same question on (-inf, 1): probability of visiting y before first
// passage above the barrier.
double hit_prob_halfline(const StableParams& p, double x, double y);

// Full decomposition (see PointAugmentedLaw); x != y, both inside.
PointAugmentedLaw point_augmented_law(const StableParams& p, double x, double y);

// Constant C in P_x[exit before hitting 0] ~ C (2|x|)^{alpha-1} as x -> 0
// from the given side.  Tends to the Brownian value 1/2 as alpha -> 2.
double hit_asymptote_constant(const StableParams& p, Side side);

// Evaluate a member of the harmonic family on the interval (default) or
// the half-line.  Negative coefficients are rejected.
double harmonic_eval(const StableParams& p, const HarmonicFamily& fam, double x,
                     Region region = Region::Interval);

// Martin kernels of the interval: the normalized boundary limits
// g(x,y)/g(0,y) as y approaches +1 (Above) or -1 (Below).  Two-sided
// classes and Brownian motion.
double martin_kernel(const StableParams& p, double x, Side at);

}  // namespace alphastable
