#pragma once

#include "alphastable/boundary_laws.hpp"
#include "alphastable/params.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace alphastable {

// Counter-based random stream: draw i of path j is a pure function of
// (seed, j, i), so path results do not depend on scheduling or on how many
// other paths were simulated before. The generator is Philox2x64-10.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t path);

    std::uint64_t next_word();
    double uniform();                            // strictly inside (0,1)
    double exponential();                        // rate 1
    double cauchy();                             // standard Cauchy
    std::pair<double, double> gaussian_pair();   // independent N(0,1)

private:
    std::uint64_t key_;
    std::uint64_t path_;
    std::uint64_t block_ = 0;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

// One increment of L over time dt. For alpha outside {1,2} this is
// Chambers-Mallows-Stuck sampling; the (kappa dt)^{1/alpha} scale that moves
// the standard asymmetric variate onto our normalization cancels the
// customary CMS prefactor (1 + beta^2 tan^2(pi alpha/2))^{1/(2 alpha)}
// exactly, so neither appears below.
double stable_increment(const StableParams& p, double dt, RngStream& rng);

// n i.i.d. increments over dt from one stream.
std::vector<double> sample_stable(const StableParams& p, double dt, std::size_t n,
                                  RngStream& rng);

struct SimConfig {
    StableParams params;
    Region region = Region::Interval;
    double start = 0.0;
    double step = 1e-3;
    std::size_t n_paths = 1;
    long max_steps = 10'000'000;
    std::uint64_t seed = 0;
};

struct ExitSample {
    double exit_time = 0.0;   // model time, a multiple of the step
    double exit_pos = 0.0;    // first position outside the source region
    bool censored = false;    // step cap reached; exit_pos is the last position
    std::uint64_t path_index = 0;
};

// Fixed-step walk with exact increments until the path leaves the source
// region (Interval: |y| >= 1 stops; HalfLine: y >= 1; Complement: |y| <= 1,
// i.e. entering the interval). All bias sits in the time discretization.
std::vector<ExitSample> simulate_exit(const SimConfig& cfg);

struct EmpiricalSummary {
    std::size_t n = 0;
    double mean_exit_time = 0.0;   // over non-censored paths
    double censor_fraction = 0.0;
    // Non-censored exits split by side; for the Complement source both refer
    // to the entry position relative to the interval midpoint.
    double lower_fraction = 0.0;
    double upper_fraction = 0.0;
};

EmpiricalSummary summarize(const std::vector<ExitSample>& samples, Region region);

// Sup-distance between the empirical law of the samples and the supplied
// distribution function. The evaluator must be nondecreasing over the sample
// range; a decreasing probe is a caller bug and is rejected loudly.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace alphastable
