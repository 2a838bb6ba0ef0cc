#include "alphastable/montecarlo.hpp"

#include "alphastable/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alphastable {

namespace {

constexpr std::uint64_t kPhiloxMult = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

// Philox2x64, 10 rounds: bijective scramble of the 128-bit counter under a
// 64-bit key. Returning the whole block keeps the stream cheap: two words
// per scramble.
std::pair<std::uint64_t, std::uint64_t> philox(std::uint64_t key,
                                               std::uint64_t c0, std::uint64_t c1) {
    for (int round = 0; round < 10; ++round) {
        unsigned __int128 prod = static_cast<unsigned __int128>(kPhiloxMult) * c0;
        std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
        std::uint64_t lo = static_cast<std::uint64_t>(prod);
        c0 = hi ^ key ^ c1;
        c1 = lo;
        key += kWeyl;
    }
    return {c0, c1};
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t path) : key_(seed), path_(path) {}

std::uint64_t RngStream::next_word() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    auto [w0, w1] = philox(key_, block_++, path_);
    spare_ = w1;
    have_spare_ = true;
    return w0;
}

double RngStream::uniform() {
    // Top 53 bits, centered on the bit lattice: never exactly 0 or 1.
    return (static_cast<double>(next_word() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential() { return -std::log(uniform()); }

double RngStream::cauchy() { return std::tan(std::numbers::pi * (uniform() - 0.5)); }

std::pair<double, double> RngStream::gaussian_pair() {
    double r = std::sqrt(-2.0 * std::log(uniform()));
    double t = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(t), r * std::sin(t)};
}

double stable_increment(const StableParams& p, double dt, RngStream& rng) {
    if (!(dt > 0.0)) throw std::domain_error("stable_increment: step must be positive");
    const double pi = std::numbers::pi;
    if (p.cls == ProcessClass::Brownian)
        return std::sqrt(2.0 * dt) * rng.gaussian_pair().first;
    if (p.cls == ProcessClass::CauchyDrift)
        return dt * (std::sin(pi * p.rho) * rng.cauchy() - std::cos(pi * p.rho));

    // theta0 = atan(beta tan(pi alpha/2))/alpha for the documented skew
    // beta = tan(pi alpha (rho - 1/2))/tan(pi alpha/2); the arctangent
    // unwinds in the admissible range, leaving pi(rho - 1/2).
    const double theta0 = pi * (p.rho - 0.5);
    double v = pi * (rng.uniform() - 0.5);
    double w = rng.exponential();
    double av = p.alpha * (v + theta0);
    double value = std::sin(av) / std::pow(std::cos(v), 1.0 / p.alpha) *
                   std::pow(std::cos(v - av) / w, (1.0 - p.alpha) / p.alpha);
    return std::pow(dt, 1.0 / p.alpha) * value;
}

std::vector<double> sample_stable(const StableParams& p, double dt, std::size_t n,
                                  RngStream& rng) {
    std::vector<double> out(n);
    for (auto& x : out) x = stable_increment(p, dt, rng);
    return out;
}

namespace {

bool outside(Region region, double y) {
    switch (region) {
        case Region::Interval: return std::abs(y) >= 1.0;
        case Region::HalfLine: return y >= 1.0;
        case Region::Complement: return std::abs(y) <= 1.0;
    }
    return true;
}

}  // namespace

std::vector<ExitSample> simulate_exit(const SimConfig& cfg) {
    if (!(cfg.step > 0.0)) throw std::domain_error("simulate_exit: step must be positive");
    if (cfg.n_paths < 1) throw std::domain_error("simulate_exit: need at least one path");
    if (cfg.max_steps < 1) throw std::domain_error("simulate_exit: need a positive step cap");
    if (outside(cfg.region, cfg.start))
        throw std::domain_error("simulate_exit: start lies outside the source region");

    std::vector<ExitSample> out;
    out.reserve(cfg.n_paths);
    for (std::uint64_t j = 0; j < cfg.n_paths; ++j) {
        RngStream rng(cfg.seed, j);
        double pos = cfg.start;
        long steps = 0;
        bool escaped = false;
        while (steps < cfg.max_steps) {
            pos += stable_increment(cfg.params, cfg.step, rng);
            ++steps;
            if (outside(cfg.region, pos)) {
                escaped = true;
                break;
            }
        }
        out.push_back({steps * cfg.step, pos, !escaped, j});
    }
    return out;
}

EmpiricalSummary summarize(const std::vector<ExitSample>& samples, Region region) {
    EmpiricalSummary s;
    s.n = samples.size();
    if (s.n == 0) return s;
    double split = region == Region::HalfLine ? -INFINITY : 0.0;
    std::size_t exited = 0;
    for (const auto& smp : samples) {
        if (smp.censored) {
            s.censor_fraction += 1.0;
            continue;
        }
        ++exited;
        s.mean_exit_time += smp.exit_time;
        (smp.exit_pos > split ? s.upper_fraction : s.lower_fraction) += 1.0;
    }
    if (exited > 0) s.mean_exit_time /= static_cast<double>(exited);
    s.censor_fraction /= static_cast<double>(s.n);
    s.lower_fraction /= static_cast<double>(s.n);
    s.upper_fraction /= static_cast<double>(s.n);
    return s;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.size() < 2)
        throw std::domain_error("ks_statistic: need at least two samples");
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double d = 0.0, prev = -INFINITY;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        // Slack absorbs quadrature noise when the evaluator integrates a
        // density between nearby samples.
        if (f < prev - 1e-9 || f < -1e-9 || f > 1.0 + 1e-9)
            throw std::invalid_argument("ks_statistic: cdf evaluator is not a distribution "
                                        "function on the sample range");
        prev = f;
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

}  // namespace alphastable
