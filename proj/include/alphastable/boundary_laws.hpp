#pragma once

#include "alphastable/params.hpp"

#include <functional>
#include <vector>

namespace alphastable {

// Source region the process is started in and observed leaving.
enum class Region {
    Interval,    // (-1, 1), exit observed on the two outer rays
    Complement,  // (-1, 1)^c, entrance observed inside (-1, 1)
    HalfLine,    // (-inf, 1), first passage observed on (1, inf)
};

const char* to_string(Region r);

struct Atom {
    double location;
    double weight;
};

// Complete first-exit law: an absolutely continuous part, point masses
// (one-sided and Brownian branches), and the probability of never leaving
// the source region at all.  density(y) is zero outside the target set.
struct ExitLaw {
    Region region;
    std::function<double(double)> density;
    std::vector<Atom> atoms;
    double defect = 0.0;
};

struct KappaStar {
    double x;
    double value;
};

// Density at y, |y| > 1, of the first-exit position from (-1, 1) started at
// x inside.  Two-sided jump classes only; atomic branches go via exit_law.
double h_density(const StableParams& p, double x, double y);

// Density at y inside (-1, 1) of the first-entrance position from |x| > 1.
// Two-sided classes only.  For alpha > 1 the defining bracket is a
// difference of two terms that nearly cancel when x is large; it is then
// evaluated through expm1 of the log-ratio instead of direct subtraction.
double hstar_density(const StableParams& p, double x, double y);

// Compensation term of the entrance problem for alpha > 1, x >= 1.  The
// recurrent case needs this correction in the Abelian integral equation;
// it also drives the slow tail of the entrance time.
KappaStar kappa_star(const StableParams& p, double x);

// Prefactor C in P_x[entrance time > t] ~ C t^{1/alpha - 1}, alpha in (1,2).
double tstar_tail_constant(const StableParams& p, double x);

// Probability of never entering (-1, 1) from |x| > 1.  Zero for alpha >= 1.
double pstar_infinity(const StableParams& p, double x);

// Density at y > 1 of the position at first passage above level 1 from
// x < 1.  Requires positive jumps; the creeping class exits at exactly 1
// and is served by exit_law.
double semiinf_exit_density(const StableParams& p, double x, double y);

// Assemble the full exit law of the given source region started at x,
// dispatching on the process class for atoms and defects.
ExitLaw exit_law(const StableParams& p, Region region, double x);

// Mean first-exit time of (-1, 1) from x inside, finite for every class.
double expected_exit_time(const StableParams& p, double x);

}  // namespace alphastable
