#pragma once

#include "alphastable/params.hpp"

namespace alphastable {

// Which representation produced the value.
enum class GreenBranch {
    Upper,        // target above the source, plain kernel
    Lower,        // target below the source, hatted kernel
    OppositeRay,  // complement case with source and target on different rays
    Diagonal,     // x == y continuity value (finite only for alpha > 1)
    Brownian,     // alpha == 2 classical closed forms
    OneSided,     // monotone-path closed forms (half-line only)
};

const char* to_string(GreenBranch b);

struct GreenEvaluation {
    double x;
    double y;
    // Moebius coordinate |1 - xy| / |x - y| of the kernel integral, +inf on
    // the diagonal.  Reported for diagnostics only; the value itself is
    // assembled from cancellation-free factors without ever forming this
    // ratio, so it may overflow to inf harmlessly near the diagonal.  For
    // the half-line geometry the natural coordinate is the kernel's upper
    // endpoint (1 - max(x,y)) / |x - y| and that is what gets stored.
    double z;
    double value;
    GreenBranch branch;
};

// Green function of the process killed on leaving (-1, 1); x, y inside.
// Two-sided classes and Brownian motion.  On the diagonal the value is the
// continuity extension for alpha > 1 and +inf for alpha <= 1.
GreenEvaluation g_interval(const StableParams& p, double x, double y);

// Green function of the process killed on entering [-1, 1]; |x|, |y| > 1.
// Two-sided classes only: with monotone paths or a.s. continuous ones the
// occupation measure of the complement degenerates ray by ray.
GreenEvaluation g_complement(const StableParams& p, double x, double y);

// Green function of the process killed on leaving (-inf, 1); x, y < 1.
// Defined for every class; monotone classes get their potential-density
// closed forms.
GreenEvaluation g_halfline(const StableParams& p, double x, double y);

// Integral of g_interval(p, x, .) over (-1, 1).  Agrees with the closed
// form expected_exit_time(p, x) up to quadrature error; kept as an
// independent self-check of the Green assembly.
double expected_exit_time_quadrature(const StableParams& p, double x, double tol = 1e-9);

}  // namespace alphastable
