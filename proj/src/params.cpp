#include "alphastable/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace alphastable {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSnapTol = 1e-12;

[[noreturn]] void reject(double alpha, double rho, const std::string& why) {
    std::ostringstream os;
    os << "inadmissible parameters alpha=" << alpha << " rho=" << rho << ": " << why;
    throw std::domain_error(os.str());
}

double snap(double v, double target) {
    return std::abs(v - target) <= kSnapTol ? target : v;
}

} // namespace

const char* to_string(ProcessClass cls) {
    switch (cls) {
        case ProcessClass::TwoSided: return "two-sided";
        case ProcessClass::SpectrallyPositive: return "spectrally-positive";
        case ProcessClass::SpectrallyNegative: return "spectrally-negative";
        case ProcessClass::CauchyDrift: return "cauchy-with-drift";
        case ProcessClass::Brownian: return "brownian";
    }
    return "?";
}

std::pair<double, double> rho_range(double alpha) {
    if (!(alpha > 0.0) || alpha > 2.0)
        throw std::domain_error("alpha must lie in (0, 2]");
    if (alpha == 2.0) return {0.5, 0.5};
    if (alpha <= 1.0) return {0.0, 1.0};  // open at both ends when alpha == 1
    return {1.0 - 1.0 / alpha, 1.0 / alpha};
}

bool StableParams::has_positive_jumps() const {
    return cls != ProcessClass::Brownian && rho > 0.0 && cls != ProcessClass::SpectrallyNegative;
}

bool StableParams::has_negative_jumps() const {
    return cls != ProcessClass::Brownian && rho_hat > 0.0 && cls != ProcessClass::SpectrallyPositive;
}

StableParams StableParams::dual() const {
    StableParams d = *this;
    std::swap(d.rho, d.rho_hat);
    std::swap(d.c_rho, d.c_rho_hat);
    d.beta = -beta;
    if (cls == ProcessClass::SpectrallyPositive) d.cls = ProcessClass::SpectrallyNegative;
    else if (cls == ProcessClass::SpectrallyNegative) d.cls = ProcessClass::SpectrallyPositive;
    return d;
}

StableParams make_params(double alpha, double rho) {
    if (!(alpha > 0.0) || alpha > 2.0)
        reject(alpha, rho, "alpha must lie in (0, 2]");

    if (alpha == 2.0) {
        rho = snap(rho, 0.5);
        if (rho != 0.5) reject(alpha, rho, "alpha = 2 forces rho = 1/2");
    } else if (alpha < 1.0) {
        rho = snap(snap(rho, 0.0), 1.0);
        if (rho < 0.0 || rho > 1.0) reject(alpha, rho, "rho must lie in [0, 1]");
    } else if (alpha == 1.0) {
        if (!(rho > 0.0) || !(rho < 1.0))
            reject(alpha, rho, "alpha = 1 requires rho strictly inside (0, 1)");
    } else {
        rho = snap(snap(rho, 1.0 - 1.0 / alpha), 1.0 / alpha);
        if (rho < 1.0 - 1.0 / alpha || rho > 1.0 / alpha)
            reject(alpha, rho, "rho must lie in [1 - 1/alpha, 1/alpha]");
    }

    StableParams p;
    p.alpha = alpha;
    p.rho = rho;
    p.rho_hat = 1.0 - rho;
    p.kappa = std::cos(kPi * alpha * (rho - 0.5));
    p.c_rho = std::sin(kPi * alpha * rho) / kPi;
    p.c_rho_hat = std::sin(kPi * alpha * p.rho_hat) / kPi;
    p.beta = beta_from_rho(alpha, rho);

    if (alpha == 2.0) {
        p.cls = ProcessClass::Brownian;
        // sin(2 pi rho) vanishes at rho = 1/2; clean up the signed zeros.
        p.c_rho = p.c_rho_hat = 0.0;
    } else if (alpha == 1.0) {
        p.cls = ProcessClass::CauchyDrift;
    } else if (alpha < 1.0) {
        p.cls = rho == 1.0   ? ProcessClass::SpectrallyPositive
                : rho == 0.0 ? ProcessClass::SpectrallyNegative
                             : ProcessClass::TwoSided;
        if (rho == 1.0) p.c_rho_hat = 0.0;  // sin(pi alpha * 0) exactly
        if (rho == 0.0) p.c_rho = 0.0;
    } else {
        p.cls = rho == 1.0 / alpha         ? ProcessClass::SpectrallyNegative
                : rho == 1.0 - 1.0 / alpha ? ProcessClass::SpectrallyPositive
                                           : ProcessClass::TwoSided;
        // At rho = 1/alpha, alpha*rho = 1 and c_rho = sin(pi)/pi should be 0.
        if (rho == 1.0 / alpha) p.c_rho = 0.0;
        if (rho == 1.0 - 1.0 / alpha) p.c_rho_hat = 0.0;
    }
    return p;
}

double rho_from_beta(double alpha, double beta) {
    if (!(alpha > 0.0) || alpha > 2.0)
        throw std::domain_error("alpha must lie in (0, 2]");
    if (beta < -1.0 || beta > 1.0)
        throw std::domain_error("beta must lie in [-1, 1]");
    if (alpha == 2.0) return 0.5;
    if (alpha == 1.0) {
        if (beta != 0.0)
            throw std::domain_error("strict stability at alpha = 1 requires beta = 0");
        return 0.5;
    }
    double r = 0.5 + std::atan(beta * std::tan(kPi * alpha / 2.0)) / (kPi * alpha);
    // beta = +-1 must land exactly on the one-sided boundary.
    if (beta == 1.0) r = alpha < 1.0 ? 1.0 : 1.0 - 1.0 / alpha;
    if (beta == -1.0) r = alpha < 1.0 ? 0.0 : 1.0 / alpha;
    return r;
}

double beta_from_rho(double alpha, double rho) {
    if (alpha == 1.0 || alpha == 2.0) return 0.0;
    auto [lo, hi] = rho_range(alpha);
    if (rho <= lo) return alpha < 1.0 ? -1.0 : 1.0;
    if (rho >= hi) return alpha < 1.0 ? 1.0 : -1.0;
    return std::tan(kPi * alpha * (rho - 0.5)) / std::tan(kPi * alpha / 2.0);
}

double levy_density(const StableParams& p, double y) {
    if (y == 0.0) throw std::domain_error("Levy density is not defined at 0");
    if (p.cls == ProcessClass::Brownian) return 0.0;
    double c = y > 0.0 ? p.c_rho : p.c_rho_hat;
    return std::tgamma(p.alpha + 1.0) * c * std::pow(std::abs(y), -p.alpha - 1.0);
}

double p1_at_zero(const StableParams& p) {
    return std::tgamma(1.0 + 1.0 / p.alpha) * std::sin(kPi * p.rho) / kPi;
}

double psi_kernel(const StableParams& p, double t, bool hatted) {
    if (!(t > 1.0)) throw std::domain_error("psi kernel needs t > 1");
    double ar = p.alpha * (hatted ? p.rho_hat : p.rho);
    double arh = p.alpha - ar;
    return std::pow(t - 1.0, arh - 1.0) * std::pow(t + 1.0, ar - 1.0);
}

double phi_kernel(const StableParams& p, double t, bool hatted) {
    if (!(t > -1.0) || !(t < 1.0)) throw std::domain_error("phi kernel needs |t| < 1");
    double ar = p.alpha * (hatted ? p.rho_hat : p.rho);
    double arh = p.alpha - ar;
    return std::pow(1.0 - t, -ar) * std::pow(1.0 + t, -arh);
}

} // namespace alphastable
