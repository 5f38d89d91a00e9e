#ifndef GLRG_SPECIALFN_HPP
#define GLRG_SPECIALFN_HPP

#include "glrg/errors.hpp"

namespace glrg {

// Distance below which an argument counts as sitting on a pole.
inline constexpr double kPoleProximity = 1e-6;

// sin(pi*x) with argument reduction exact in x, accurate near integers.
double sin_pi(double x);

// Gamma function on the real line.  Lanczos approximation, reflection
// for x < 0.5.  Relative error below 1e-13 on [-20, 50] away from poles.
// Throws PoleError within kPoleProximity of {0, -1, -2, ...}.
double gamma(double x);

// 1/Gamma(x).  Entire; exact zeros at nonpositive integers, no throws.
double rgamma(double x);

// log|Gamma(x)|, used for overflow estimates.
double lgamma_abs(double x);

// psi(1) = -gamma_E.
double digamma_at_one();

// Riemann zeta on the real line, z != 1.  Euler-Maclaurin for z > 0.5,
// functional-equation reflection below.  Throws PoleError at z = 1.
double riemann_zeta(double z);

// Modified Bessel function K_nu(x), nu real (K_{-nu} = K_nu), x > 0.
// Temme series for x <= 2, Steed continued fraction above, upward
// recurrence in the order.  Relative error ~1e-12 for x in [1e-4, 700],
// |nu| <= 10.
double bessel_k(double nu, double x);

// b(D) = int_0^1 [x(1-x)]^(D/2-2) dx = 2^(3-D) sqrt(pi) G(D/2-1)/G((D-1)/2),
// D > 2.  Throws DivergenceError for D <= 2 (Peierls regime).
double feynman_b(double D);

// c(D) = int_0^1 [x(1-x)]^(D/2-3) dx = 2^(5-D) sqrt(pi) G(D/2-2)/G((D-3)/2),
// D > 4.  Throws DivergenceError for D <= 4.
double feynman_c(double D);

} // namespace glrg

#endif
