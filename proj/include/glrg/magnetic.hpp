#ifndef GLRG_MAGNETIC_HPP
#define GLRG_MAGNETIC_HPP

#include "glrg/bubble.hpp"

namespace glrg {

// External magnetic field in the lowest Landau level: cyclotron frequency
// omega = eH and the two transverse momentum components of the coupling.
struct FieldSpec {
    double omega = 0.0;  // units 1/length^2
    double p1 = 0.0;
    double p2 = 0.0;
    void validate() const;
};

struct MagneticBubbleResult {
    double value = 0.0;  // units length^(6-D); NaN for a pure decomposition
    double a1_coeff = 0.0;
    double c_coeff = 0.0;
    double D = 0.0;
    double eval(double p) const { return a1_coeff * std::pow(p, D - 6.0) + c_coeff; }
};

// A_1(D) = (2 pi)^(-D/2-1) 2^(1-D/2) c(D) Gamma(3-D/2), 4 < D < 6.
// A_1(5) = 1/(32 pi^2).
double a1_coeff(double D);

// C_d(D, {L_i}) = B_d(D-2, {L_i}); the D -> D-2 shift of the zero-field
// constants, valid for 4 < D < 6.
double c_coeff(double D, const Geometry& geom, const TruncationPolicy& policy = {});

// Lowest-Landau-level bubble: the zero-field engine at dimension D-2 with
// the continuum term rescaled to the A_1(D) normalization.  p is the
// (D-2)-dimensional external momentum magnitude.
MagneticBubbleResult pi_magnetic(Momentum p, double D, const Geometry& geom,
                                 const TruncationPolicy& policy = {});

// lambda(p, D, {L_i}; omega) =
//   lambda0 / (1 + lambda0 omega e^{-(p1^2+p2^2)/(2 omega)} Pi(pmag; omega)).
double lambda_magnetic(double p1, double p2, Momentum pmag, double D,
                       const Geometry& geom, double lambda0, const FieldSpec& field,
                       const TruncationPolicy& policy = {});

} // namespace glrg

#endif
