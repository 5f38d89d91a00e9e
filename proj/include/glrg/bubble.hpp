#ifndef GLRG_BUBBLE_HPP
#define GLRG_BUBBLE_HPP

#include "glrg/epstein.hpp"

#include <cmath>
#include <vector>

namespace glrg {

// Confinement box: d compactified directions of edge lengths L_1..L_d.
struct Geometry {
    std::vector<double> lengths;
    int d() const { return int(lengths.size()); }
    void validate() const;

    static Geometry film(double L) { return Geometry{{L}}; }
    static Geometry wire(double L1, double L2) { return Geometry{{L1, L2}}; }
    static Geometry grain(double L1, double L2, double L3) { return Geometry{{L1, L2, L3}}; }
};

struct Momentum {
    double magnitude = 0.0;  // |p|, the bubble depends on |p| only
};

enum class BubbleRepresentation { kFullSum, kSmallPDecomposition };

struct BubbleResult {
    double value = 0.0;        // units length^(4-D); NaN for a pure decomposition
    BubbleRepresentation representation = BubbleRepresentation::kFullSum;
    double a_coeff = 0.0;      // coefficient of |p|^(D-4)
    double b_coeff = 0.0;      // constant term, units length^(4-D)
    double D = 0.0;
    double eval(double p) const { return a_coeff * std::pow(p, D - 4.0) + b_coeff; }
};

// A(D) = (2 pi)^(4-3D/2) 2^(-D/2) b(D) Gamma(2-D/2), 2 < D < 4.  A(3) = pi/4.
double a_coeff(double D);

// |p| -> 0 constants of the bubble for one, two and three confined directions;
// valid on 2 < D < 4 including D = 3, where the Gamma/zeta pairings inside the
// Epstein recurrences are evaluated in their finite limits.
double b_film(double D, double L, const TruncationPolicy& policy = {});
double b_wire(double D, double L1, double L2, const TruncationPolicy& policy = {});
double b_grain(double D, double L1, double L2, double L3,
               const TruncationPolicy& policy = {});

// Full compactified one-loop bubble at criticality.  The Feynman-parameter
// integrand is the analytically continued lattice sum with the zero-mode
// term removed (the representation whose |p| -> 0 limit is
// A(D)|p|^(D-4) + B_d); Bessel sums truncated per policy, x-integration by
// tanh-sinh panels.
BubbleResult pi_compactified(Momentum p, double D, const Geometry& geom,
                             const TruncationPolicy& policy = {});

// Decomposition Pi ~ A(D)|p|^(D-4) + B_d(D, {L_i}).
BubbleResult small_p_decomposition(double D, const Geometry& geom,
                                   const TruncationPolicy& policy = {});

namespace detail {

// Engine shared with the external-field case: evaluates the bubble with the
// analytic (continuum) term scaled by `analytic_scale`, at dimension D.
double bubble_engine(double p, double D, const Geometry& geom,
                     const TruncationPolicy& policy, double analytic_scale);

}  // namespace detail

} // namespace glrg

#endif
