#ifndef GLRG_EPSTEIN_HPP
#define GLRG_EPSTEIN_HPP

#include "glrg/errors.hpp"

#include <vector>

namespace glrg {

struct TruncationPolicy {
    double rel_tol = 1e-12;
    long max_terms_per_axis = 1000000;
    long min_terms = 8;
    int quad_levels = 10;  // tanh-sinh refinement depth where quadrature is used
};

// Z_d^{c2}(nu; a_1..a_d) = sum over Z^d of (a_1 n_1^2 + ... + c2)^(-nu),
// a_i > 0 (units 1/length^2), c2 > 0, d in {1,2,3}.
struct HurwitzSpec {
    double nu = 0.0;
    std::vector<double> a;
    double c2 = 0.0;
    int d() const { return int(a.size()); }
    void validate() const;
};

// E_p(nu; sigma_1..sigma_p) = sum over n_i >= 1 of
// (sigma_1^2 n_1^2 + ... )^(-nu), sigma_i > 0, p in {1,2,3}.
struct EpsteinSpec {
    double nu = 0.0;
    std::vector<double> sigma;
    int p() const { return int(sigma.size()); }
    void validate() const;
};

// Brute-force lattice sum, shell-by-shell in max|n_i|, stopped when a
// full shell drops below rel_tol x partial sum, then corrected with the
// continuum integral over the truncated region.  Requires nu > d/2.
double hurwitz_direct(const HurwitzSpec& spec, const TruncationPolicy& policy = {});

// Analytic continuation via the modified-Bessel representation: the
// Gamma(nu - d/2) c^(d-2nu) term plus one exponentially convergent
// K-sum per nonempty axis subset.  Valid for any real nu off the poles
// of Gamma(nu - d/2); agrees with hurwitz_direct where both converge.
double hurwitz_bessel(const HurwitzSpec& spec, const TruncationPolicy& policy = {});

// Brute-force positive-orthant sum with the same shell/tail scheme.
// Requires nu > p/2.
double epstein_direct(const EpsteinSpec& spec, const TruncationPolicy& policy = {});

// Recurrence in p: E_1 closed form, E_p from E_{p-1} at nu and nu-1/2
// plus the Bessel double sums W_p.  Meromorphic continuation in nu;
// throws PoleError where the continued function itself has a pole.
double epstein_recurrence(const EpsteinSpec& spec, const TruncationPolicy& policy = {});

// Finite value of E_2((D-4)/2; L1, L2) at D = 3 (nu = -1/2), where the
// recurrence pairs a Gamma pole with a zeta trivial zero.  The Laurent
// cancellation is done in closed form.
double e2_renormalized_at_3(double L1, double L2, const TruncationPolicy& policy = {});

// Same limit for E_3((D-4)/2; L1, L2, L3) at D = 3.
double e3_renormalized_at_3(double L1, double L2, double L3,
                            const TruncationPolicy& policy = {});

namespace detail {

// W_p(nu; L_1..L_p) of the recurrence: for each axis i, the p-fold sum of
// (pi n_i / (L_i w))^nu K_nu(2 pi n_i w / L_i) / L_i with
// w^2 = sum_{j != i} L_j^2 n_j^2.  p in {2,3}.
double w_sum(double nu, const std::vector<double>& L, const TruncationPolicy& policy);

// Gamma(nu - 1/2) zeta(2 nu - 1), evaluated through the zeta functional
// equation for nu < 3/4 so the Gamma-pole/zeta-zero pairings at
// nu = -1/2, -3/2, ... are regular.
double gamma_zeta_pair(double nu);

// d/dnu E_2(nu; La, Lb) at nu = -1 (E_2(-1) = 0).
double e2_prime_at_minus1(double La, double Lb, const TruncationPolicy& policy);

// Gamma(mu) E_2(mu; La, Lb) with the joint limit at mu = -1.
double gamma_times_e2(double mu, double La, double Lb, const TruncationPolicy& policy);

// Zero-excluded homogeneous lattice sum over Z^d:
// sum_{n != 0} (a_1 n_1^2 + ...)^(-nu), continued in nu.
double lattice_sum_excl0(double nu, const std::vector<double>& a,
                         const TruncationPolicy& policy);

} // namespace detail

} // namespace glrg

#endif
