#ifndef FHN_ERRORS_HPP
#define FHN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fhn {

// Precondition violations: bad arguments, evaluation outside a kernel's domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Parameters outside the regime where the a priori estimates are proved
// (requires a > 0, b >= 0, beta > 0).
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature or series truncation failed to reach the requested tolerance.
// Carries the best estimate obtained and the achieved error bound.
class ToleranceError : public std::runtime_error {
public:
    ToleranceError(const std::string& what, double best, double achieved)
        : std::runtime_error(what), best_estimate(best), achieved_error(achieved) {}
    double best_estimate;
    double achieved_error;
};

// Fixed-point iteration exceeded max_iter without meeting the tolerance.
// Carries the residual history so callers can persist the report.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, int iters, double residual,
                        std::vector<double> history = {})
        : std::runtime_error(what), iterations(iters), final_residual(residual),
          residual_history(std::move(history)) {}
    int iterations;
    double final_residual;
    std::vector<double> residual_history;
};

// An iterate or a time-stepped field left the monitored box or went non-finite.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration problems, split so the CLI can map them to distinct exit codes.
class ConfigError : public std::runtime_error {
public:
    enum class Kind { constraint, missing_file, syntax };
    ConfigError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

}  // namespace fhn

#endif
