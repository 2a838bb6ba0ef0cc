#pragma once

#include "alphastable/params.hpp"

namespace alphastable {

// 1/Gamma(x), with exact zeros at the poles x = 0, -1, -2, ...
// Used to let connection-formula terms drop out cleanly instead of
// special-casing every reduced parameter combination.
double gamma_recip(double x);

double digamma(double x);
// n-th derivative of digamma, n in 1..6, x > 0.
double polygamma(int n, double x);

struct Hyp2F1Request {
    double a, b, c, z;
};

// Gauss hypergeometric function for real arguments, z <= 1 (z = 1 needs
// c - a - b > 0).  Strategy: terminating cases summed exactly; z < 0 via
// the Pfaff map z -> z/(z-1); |z| <= 0.6 by direct series; 0.6 < z < 1 by
// the z <-> 1-z connection, switching to the classical logarithmic limit
// expansions whenever c - a - b sits within 1e-8 of an integer.
double hyp2f1(double a, double b, double c, double z);
double hyp2f1(const Hyp2F1Request& r);

// ---------------------------------------------------------------------
// Incomplete Beta integral with negative second parameter:
//
//   I(a, b; w) = int_0^w s^{a-1} (1-s)^{-b} ds,   a > 0, 0 <= w < 1.
//
// This single primitive carries every boundary-kernel integral in the
// library (int_1^z of the exterior kernel, truncated Beta kernels of the
// half-line laws, one-sided atom weights).  The caller must pass
// v == 1 - w computed without cancellation (each call site has an exact
// expression for it).
// ---------------------------------------------------------------------

struct BetaNegParts {
    // split == false: `value` is the whole integral.
    // split == true:  I = const_part + vpow_coef * v^{1-b}; exposing the
    // two summands lets Green-function code fold powers of v into powers
    // of other small quantities without overflow on the way.
    bool split;
    double value;
    double const_part;
    double vpow_coef;
};

BetaNegParts beta_neg_parts(double a, double b, double w, double v);
double beta_neg_inc(double a, double b, double w, double v);

// w -> 1 limit: Gamma(a)Gamma(1-b)/Gamma(1+a-b).  Requires b < 1.
double beta_neg_total(double a, double b);

// ---------------------------------------------------------------------
// int_1^z psi(t) dt for the exterior boundary kernel
//   psi(t) = (t-1)^{alpha rho_hat - 1} (t+1)^{alpha rho - 1}
// (hatted: rho and rho_hat swapped).  Reduces to I(alpha rho_hat, alpha;
// (z-1)/(z+1)).  z = +infinity is allowed when alpha < 1.
// ---------------------------------------------------------------------

enum class IncPsiMethod { ExactBrownian, Series, Connection, LogLimit, TotalMass };

struct IncPsiResult {
    double value;
    IncPsiMethod method;
    double est_error;  // crude forward bound, not a certified enclosure
};

IncPsiResult inc_psi(const StableParams& p, double z, bool hatted = false);

// Whether the interior kernel phi(t) = (1-t)^{-ar}(1+t)^{-arh} is
// integrable over (-1, 1), i.e. alpha rho < 1 and alpha rho_hat < 1.
bool phi_integrable(const StableParams& p);

// int_{-1}^{1} phi = 2^{1-alpha} B(1 - alpha rho, 1 - alpha rho_hat)
// (the hatted kernel has the same mass).  Throws divergence_error when
// not integrable.
double phi_total_mass(const StableParams& p);

} // namespace alphastable
