#ifndef GLRG_VALIDATE_HPP
#define GLRG_VALIDATE_HPP

#include <string>
#include <vector>

namespace glrg {

enum class ValidationLevel { kFast, kFull };

struct CheckResult {
    std::string id;        // "1".."10"
    std::string name;
    bool pass = false;
    double observed = 0.0;  // worst deviation seen (units depend on the check)
    double threshold = 0.0;
    double seconds = 0.0;
};

// Runs the built-in verification suite: pinned constants, oracle-pair
// agreements, pole-cancellation extrapolations, flow convergence and the
// randomized property checks.  kFast covers the sub-second checks, kFull
// everything.  threshold_scale tightens (or loosens) every tolerance; it
// exists so failure handling can be exercised deliberately.
std::vector<CheckResult> run_validation(ValidationLevel level,
                                        double threshold_scale = 1.0);

} // namespace glrg

#endif
