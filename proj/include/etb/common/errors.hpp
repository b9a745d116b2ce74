#pragma once

#include <stdexcept>
#include <string>

namespace etb {

// Bad configuration, bad input file, violated precondition. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Tensor/vector dimension mismatch.
class ShapeError : public ConfigError {
public:
    explicit ShapeError(const std::string& what) : ConfigError(what) {}
};

// NaN/Inf in a state derivative, solver non-convergence, hard-limit crash.
// Carries the name of the offending component. CLI exit code 3.
class NumericalFault : public std::runtime_error {
public:
    NumericalFault(const std::string& component, const std::string& what)
        : std::runtime_error(component + ": " + what), component_(component) {}

    const std::string& component() const { return component_; }

private:
    std::string component_;
};

// Diverged or otherwise failed training run. CLI exit code 4.
class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace etb
