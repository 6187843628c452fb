#pragma once

#include <stdexcept>
#include <string>

namespace hfrac {

/// Estimation aborted because an integrand evaluated non-finite.
/// Carries a printable description of the offending sample.
class estimation_error : public std::runtime_error {
public:
    explicit estimation_error(const std::string& what, std::string sample = {})
        : std::runtime_error(what + (sample.empty() ? "" : " at " + sample)),
          sample_(std::move(sample)) {}
    const std::string& sample() const noexcept { return sample_; }

private:
    std::string sample_;
};

/// Quotient denominator not significantly above zero (value < 3*stderr).
class degenerate_denominator_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive refinement kept growing: the requested integral diverges.
class divergence_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point budget too small for the requested domain resolution.
class under_resolved_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative solver hit its cap. Best iterate data is kept by the caller-facing
/// result struct; this exception carries the residual reached.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_ = 0.0;
};

/// Relative progress fell below 1e-12 before the tolerance was met.
class stagnation_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A power-law fit was requested on rows indistinguishable from noise.
class insufficient_signal_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hfrac
