#pragma once

#include <stdexcept>
#include <string>

namespace magtf {

// Invalid argument values (non-finite inputs, negative field strengths, ...).
// CLI maps this to exit status 3.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Iterative scheme failed to reach its tolerance; carries the final residual.
// CLI maps this to exit status 4.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Bad config / unknown key. CLI maps this to exit status 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace magtf
