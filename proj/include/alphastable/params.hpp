#pragma once

#include <string>
#include <utility>

namespace alphastable {

// Qualitative path behaviour, decided by (alpha, rho) alone.
//
// SpectrallyPositive means "no negative jumps are missing": all jumps are
// upward.  For alpha < 1 that is the increasing subordinator case rho = 1;
// for alpha > 1 it is rho = 1 - 1/alpha (the process still crosses levels
// continuously from above).  Mirror statements for SpectrallyNegative.
enum class ProcessClass {
    TwoSided,
    SpectrallyPositive,
    SpectrallyNegative,
    CauchyDrift,   // alpha == 1: symmetric Cauchy plus drift
    Brownian,      // alpha == 2
};

const char* to_string(ProcessClass cls);

// Parameter pack for a strictly alpha-stable process normalized so that
// the characteristic exponent is |l|^alpha * exp(+-i pi alpha (1/2 - rho)).
// rho = P[L_1 >= 0] is the positivity parameter; everything else is derived.
struct StableParams {
    double alpha;
    double rho;        // positivity parameter
    double rho_hat;    // 1 - rho, positivity parameter of the dual (-L)
    double beta;       // classical skewness, tan(pi alpha (rho - 1/2)) / tan(pi alpha / 2)
    double kappa;      // cos(pi alpha (rho - 1/2)), scale of Re(exponent); in (0, 1]
    double c_rho;      // sin(pi alpha rho) / pi
    double c_rho_hat;  // sin(pi alpha rho_hat) / pi
    ProcessClass cls;

    bool is_one_sided() const {
        return cls == ProcessClass::SpectrallyPositive || cls == ProcessClass::SpectrallyNegative;
    }
    bool has_positive_jumps() const;  // some jump upward occurs a.s. in any time window
    bool has_negative_jumps() const;

    // Parameters of the dual process -L (rho and rho_hat swapped).
    StableParams dual() const;
};

// Admissible closed range of rho for a given alpha.  For alpha == 1 the
// endpoints are excluded (drift dominates, process becomes deterministic
// in the limit); for alpha == 2 the range collapses to {1/2}.
std::pair<double, double> rho_range(double alpha);

// Validates and derives.  Values of rho within 1e-12 of a class boundary
// (one-sided cases, rho = 1/2 for alpha = 2) snap exactly onto it so that
// class detection is not at the mercy of decimal parsing.
// Throws std::domain_error on inadmissible (alpha, rho).
StableParams make_params(double alpha, double rho);

// Zolotarev's correspondence between the skewness beta in [-1, 1] and rho.
double rho_from_beta(double alpha, double beta);
double beta_from_rho(double alpha, double rho);

// Levy density nu(y) = Gamma(alpha + 1) / pi * |y|^{-alpha-1} *
// (sin(pi alpha rho) 1_{y>0} + sin(pi alpha rho_hat) 1_{y<0}).
// Identically zero for alpha == 2.
double levy_density(const StableParams& p, double y);

// Density of L_1 at the origin: Gamma(1 + 1/alpha) sin(pi rho) / pi.
double p1_at_zero(const StableParams& p);

// Boundary kernels of the unit interval.  psi lives on (1, inf):
//   psi(t) = (t-1)^{alpha rho_hat - 1} (t+1)^{alpha rho - 1},
// hatted variant swaps rho and rho_hat.  phi lives on (-1, 1):
//   phi(t) = (1-t)^{-alpha rho} (1+t)^{-alpha rho_hat},  phi_hat(t) = phi(-t).
double psi_kernel(const StableParams& p, double t, bool hatted = false);
double phi_kernel(const StableParams& p, double t, bool hatted = false);

} // namespace alphastable
