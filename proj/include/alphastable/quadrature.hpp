#pragma once

#include <functional>

namespace alphastable {

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval.  The integrand is
// never evaluated at the endpoints.  Convergence target is
// est_error <= tol * max(1, |value|).
QuadResult quad_adaptive(const std::function<double(double)>& f, double a, double b,
                         double tol = 1e-10, int max_subdiv = 4000);

// Same, but for integrands behaving like (x-a)^{left_exp} near a and
// (b-x)^{right_exp} near b with exponents in (-1, 0].  Negative exponents
// are absorbed by a power substitution before the adaptive pass, so the
// transformed integrand vanishes at the singular endpoint instead of
// blowing up.  Pass 0 for a regular endpoint.
QuadResult quad_singular_full(const std::function<double(double)>& f, double a, double b,
                              double left_exp, double right_exp,
                              double tol = 1e-10, int max_subdiv = 4000);

// Convenience wrapper: returns the value, throws accuracy_error (with the
// best estimate attached) if the budget runs out first.
double quad_singular(const std::function<double(double)>& f, double a, double b,
                     double left_exp, double right_exp, double tol = 1e-10);

// Integral over (a, inf), a > 0, of an integrand decaying like
// x^{-decay_exp} at infinity (decay_exp > 1) and behaving like
// (x-a)^{edge_exp} near a.  Maps to (0, 1) by x = a/u.
QuadResult quad_upper_tail_full(const std::function<double(double)>& f, double a,
                                double decay_exp, double edge_exp, double tol = 1e-10);

// Convenience wrapper, same throwing behavior as quad_singular.
double quad_upper_tail(const std::function<double(double)>& f, double a,
                       double decay_exp, double edge_exp, double tol = 1e-10);

} // namespace alphastable
