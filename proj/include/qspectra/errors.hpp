#ifndef QSPECTRA_ERRORS_HPP
#define QSPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qspectra {

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TailError : std::runtime_error {
    explicit TailError(const std::string& msg) : std::runtime_error(msg) {}
};

// Signals a bound state hit while assembling the Dirichlet Green's function.
struct QuantizationPole : std::runtime_error {
    double energy;
    explicit QuantizationPole(const std::string& msg, double E)
        : std::runtime_error(msg), energy(E) {}
};

struct NoRootError : std::runtime_error {
    explicit NoRootError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NodeMismatchError : std::runtime_error {
    explicit NodeMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& msg) : std::out_of_range(msg) {}
};

} // namespace qspectra

#endif
