#pragma once

#include <stdexcept>
#include <string>

namespace alphastable {

// Thrown when a quantity is not defined for the given process class or
// geometry (e.g. asking for the complement Green function of a process
// that never re-enters the interval from one side).
class not_applicable_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when the requested value is genuinely infinite (non-integrable
// boundary kernels, total exterior kernel mass for alpha >= 1, ...).
class divergence_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when an adaptive routine exhausts its budget before meeting the
// requested tolerance.  Carries the best estimate so callers that can live
// with a larger error don't have to redo the work.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double best_estimate, double est_error)
        : std::runtime_error(what), best_estimate_(best_estimate), est_error_(est_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double est_error() const noexcept { return est_error_; }

private:
    double best_estimate_;
    double est_error_;
};

} // namespace alphastable
