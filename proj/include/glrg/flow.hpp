#ifndef GLRG_FLOW_HPP
#define GLRG_FLOW_HPP

#include "glrg/bubble.hpp"
#include "glrg/magnetic.hpp"

#include <utility>
#include <vector>

namespace glrg {

enum class FlowRegime { kZeroField, kMagnetic };

struct FlowState {
    double g = 0.0;      // dimensionless coupling
    double scale = 0.0;  // |p|
    double beta = 0.0;
    FlowRegime regime = FlowRegime::kZeroField;
};

struct FixedPointReport {
    double g_star = 0.0;
    double stability_slope = 0.0;  // d beta / d g at g*
    bool ir_stable = false;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

// Running coupling lambda0 / (1 + lambda0 Pi).  Below the crossover
// |p| min L_i < crossover the decomposition A|p|^(D-4) + B_d supplies Pi,
// above it the full Bessel-sum evaluation.
double lambda_running(Momentum pmag, double D, const Geometry& geom, double lambda0,
                      const TruncationPolicy& policy = {}, double crossover = 1e-3);

// beta(g) = (D-4) [g - A(D) g^2], 2 < D < 4.
double beta_zero_field(double g, double D);

// g* = 1/A(D); d beta/d g at g* equals 4 - D.
FixedPointReport fixed_point_zero_field(double D);

// beta(g) = (D-6) [g - A_1(D) g^2], 4 < D < 6, and g* = 1/A_1(D).
double beta_magnetic(double g, double D);
FixedPointReport fixed_point_magnetic(double D);

// Integrates dg/dt = beta(g), t = ln|p|, with adaptive RK45 (Cash-Karp),
// sampled at `steps` uniform points of t_span.  Throws DivergenceError if
// the trajectory leaves [0, bound] (finite-t blow-up toward the UV).
std::vector<FlowState> integrate_flow(double g0, double D, FlowRegime regime,
                                      std::pair<double, double> t_span, int steps);

// Max relative deviation between the finite-difference |p| dg/d|p| on the
// grid and the closed-form beta at the corresponding couplings.
double beta_numeric_check(double D, const Geometry& geom,
                          const std::vector<double>& p_grid,
                          FlowRegime regime = FlowRegime::kZeroField,
                          double lambda0 = 1.0, double omega = 1.0,
                          const TruncationPolicy& policy = {});

} // namespace glrg

#endif
