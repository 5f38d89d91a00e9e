#ifndef GLRG_ERRORS_HPP
#define GLRG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glrg {

// Thrown when an evaluation lands within the pole-proximity threshold
// (1e-6) of a pole of Gamma or of the zeta pole at z = 1.
class PoleError : public std::domain_error {
public:
    PoleError(std::string fn, double loc)
        : std::domain_error(fn + " pole at " + std::to_string(loc)),
          function_(std::move(fn)), location_(loc) {}
    const std::string& function() const noexcept { return function_; }
    double location() const noexcept { return location_; }
private:
    std::string function_;
    double location_;
};

// Parameter region where the defining integral or sum diverges
// (e.g. b(D) for D <= 2, c(D) for D <= 4, lattice sums below the
// convergence abscissa).
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Truncation budget exhausted before the requested tolerance was met.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace glrg

#endif
