#include "glrg/magnetic.hpp"
#include "glrg/specialfn.hpp"

#include <cmath>
#include <limits>

namespace glrg {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

void require_window(double D) {
    if (!(D > 4.0) || !(D < 6.0))
        throw DivergenceError("magnetic bubble: valid window 4 < D < 6");
}

// A_1(D) and the shifted zero-field A(D-2) differ by this constant; the
// engine's continuum term carries it so that the small-|p| decomposition
// comes out as A_1(D)|p|^(D-6) + B_d(D-2).
double analytic_rescale(double D) { return std::pow(2.0 * kPi, D - 8.0); }

} // namespace

void FieldSpec::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("FieldSpec: omega must be positive");
    if (!std::isfinite(p1) || !std::isfinite(p2))
        throw std::invalid_argument("FieldSpec: transverse momenta must be finite");
}

double a1_coeff(double D) {
    require_window(D);
    return std::pow(2.0 * kPi, -0.5 * D - 1.0) * std::exp2(1.0 - 0.5 * D) *
           feynman_c(D) * gamma(3.0 - 0.5 * D);
}

double c_coeff(double D, const Geometry& geom, const TruncationPolicy& policy) {
    require_window(D);
    geom.validate();
    switch (geom.d()) {
        case 1: return b_film(D - 2.0, geom.lengths[0], policy);
        case 2: return b_wire(D - 2.0, geom.lengths[0], geom.lengths[1], policy);
        default:
            return b_grain(D - 2.0, geom.lengths[0], geom.lengths[1], geom.lengths[2],
                           policy);
    }
}

MagneticBubbleResult pi_magnetic(Momentum p, double D, const Geometry& geom,
                                 const TruncationPolicy& policy) {
    require_window(D);
    MagneticBubbleResult r;
    r.D = D;
    r.a1_coeff = a1_coeff(D);
    r.c_coeff = c_coeff(D, geom, policy);
    r.value = detail::bubble_engine(p.magnitude, D - 2.0, geom, policy,
                                    analytic_rescale(D));
    return r;
}

double lambda_magnetic(double p1, double p2, Momentum pmag, double D,
                       const Geometry& geom, double lambda0, const FieldSpec& field,
                       const TruncationPolicy& policy) {
    field.validate();
    if (!(lambda0 > 0.0))
        throw std::invalid_argument("lambda_magnetic: lambda0 must be positive");
    const double pi_val = pi_magnetic(pmag, D, geom, policy).value;
    const double gauss = std::exp(-(p1 * p1 + p2 * p2) / (2.0 * field.omega));
    return lambda0 / (1.0 + lambda0 * field.omega * gauss * pi_val);
}

} // namespace glrg
