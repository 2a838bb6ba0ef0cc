#pragma once

#include "alphastable/boundary_laws.hpp"
#include "alphastable/params.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace alphastable {

// Outcome of one identity check.  `residual` is the quantity that should
// vanish, divided by the natural scale of the identity where it has one;
// `passed` means the quadrature converged and |residual| <= tolerance.
// Subdivision counts and the integrator's own error estimate ride along
// so a failing report line can be told apart from an integrator that
// quietly gave up.
struct CheckReport {
    std::string name;
    std::string setting;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    int subdivisions = 0;
    double est_error = 0.0;
};

// Direction-weighted kernel on the interval,
//   u(t, y) = (c_rho 1{y > t} + c_rho_hat 1{y < t}) |t - y|^{alpha - 1};
// the hatted variant swaps the two constants.
double abel_kernel(const StableParams& p, double t, double y, bool hatted = false);

// Interior-kernel normalization: int_{-1}^{1} u_hat(t, y) phi(t) dt = 1
// for every |y| < 1.  Needs an integrable phi and alpha != 1.
CheckReport check_normalization(const StableParams& p, double y, double tol = 1e-8);

// Fractional moment of the interior kernel,
//   c_rho_hat int_{-1}^{1} (x - y)^{alpha - 1} phi(y) dy
//     = 1 - Gamma(1 - ar) 2^{1 - alpha} / (Gamma(arh) Gamma(1 - alpha))
//           * int_1^x psi(t) dt
// for x > 1 (ar, arh short for alpha rho, alpha rho_hat).  Two-sided
// classes, alpha != 1.  Residual is relative.
CheckReport check_fractional_moment(const StableParams& p, double x, double tol = 1e-8);

// Total mass of the first-exit law started at x: atoms, density and
// defect must sum to one.  |x| < 1 checks the interval exit law, |x| > 1
// the complement entrance law (whose defect is the never-entering
// probability when alpha < 1).  Every class is accepted, alpha = 1 and
// 2 included.
CheckReport check_masses(const StableParams& p, double x, double tol = 1e-8);

// Ikeda-Watanabe factorization: the exit density at y equals the Green
// function integrated against the jump kernel,
//   h(x, y) = int_D g(x, v) nu(y - v) dv.
// Interval and complement regions; relative residual.  Brownian paths
// never jump, so there the check degenerates to 0 = 0 and passes.
CheckReport check_ikeda_watanabe(const StableParams& p, double x, double y,
                                 Region region, double tol = 1e-6);

// Abelian integral equation of the entrance law: for x > 1, |y| < 1,
//   int_{-1}^{1} u(t, y) H*_x(dt)  [+ kappa*(x) when alpha > 1]
//     = c_rho_hat (x - y)^{alpha - 1}.
// Two-sided classes, alpha != 1.
CheckReport check_abel(const StableParams& p, double x, double y, double tol = 1e-7);

// The full battery over the canonical (alpha, rho) grid used by the CLI
// `verify` subcommand.  alpha = 1 joins the mass checks only; the other
// identities skip it.
std::vector<CheckReport> run_canonical();

// check,setting,residual,tolerance,passed,subdivisions,est_error rows,
// numbers at 17 significant digits, LF line ends.
void write_reports_csv(std::ostream& os, const std::vector<CheckReport>& reports);
void write_reports_json(std::ostream& os, const std::vector<CheckReport>& reports);

}  // namespace alphastable
