#include "glrg/epstein.hpp"
#include "glrg/quadrature.hpp"
#include "glrg/specialfn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace glrg {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kSqrtPi = 1.77245385090551602729816748334;
constexpr double kTwoPi = 6.28318530717958647692528676656;

// (q)^(-nu) with a fast path for small integer nu.
struct NegPow {
    double nu;
    bool is_int;
    int k;
    explicit NegPow(double nu_) : nu(nu_) {
        const double r = std::round(nu_);
        is_int = (nu_ == r) && r >= 1.0 && r <= 8.0;
        k = is_int ? int(r) : 0;
    }
    double operator()(double q) const {
        if (!is_int) return std::pow(q, -nu);
        double inv = 1.0 / q, acc = inv;
        for (int i = 1; i < k; ++i) acc *= inv;
        return acc;
    }
};

double mult(long n) { return n == 0 ? 1.0 : 2.0; }

// ---- continuum tail over the truncated region (midpoint-cell picture) ----

// Integrates f over the product region determined by `inf_mask`: axis i runs
// over (R, inf) if the bit is set and over (lo, R) otherwise.
template <class F>
double region_integral(int d, unsigned inf_mask, double lo, double R,
                       double decay_pow, int n_panel, F&& f) {
    std::array<quad::Axis, 3> axes;
    for (int i = 0; i < d; ++i) {
        if (inf_mask & (1u << i))
            axes[i] = quad::semi_inf_axis(R, decay_pow, n_panel);
        else
            axes[i] = quad::finite_axis(lo, R, n_panel);
    }
    double total = 0.0;
    if (d == 1) {
        for (std::size_t i = 0; i < axes[0].x.size(); ++i)
            total += axes[0].w[i] * f(axes[0].x[i], 0.0, 0.0);
    } else if (d == 2) {
        for (std::size_t i = 0; i < axes[0].x.size(); ++i)
            for (std::size_t j = 0; j < axes[1].x.size(); ++j)
                total += axes[0].w[i] * axes[1].w[j] * f(axes[0].x[i], axes[1].x[j], 0.0);
    } else {
        for (std::size_t i = 0; i < axes[0].x.size(); ++i)
            for (std::size_t j = 0; j < axes[1].x.size(); ++j) {
                double t2 = 0.0;
                for (std::size_t k = 0; k < axes[2].x.size(); ++k)
                    t2 += axes[2].w[k] * f(axes[0].x[i], axes[1].x[j], axes[2].x[k]);
                total += axes[0].w[i] * axes[1].w[j] * t2;
            }
    }
    return total;
}

template <class F>
double truncation_tail(int d, double lo, double R, double decay_pow, F&& f) {
    const int n_panel = (d == 1) ? 24 : 16;
    double tail = 0.0;
    for (unsigned mask = 1; mask < (1u << d); ++mask)
        tail += region_integral(d, mask, lo, R, decay_pow, n_panel, f);
    return tail;
}

} // namespace

void HurwitzSpec::validate() const {
    if (d() < 1 || d() > 3)
        throw std::invalid_argument("HurwitzSpec: d must be 1, 2 or 3");
    for (double ai : a)
        if (!(ai > 0.0) || !std::isfinite(ai))
            throw std::invalid_argument("HurwitzSpec: coefficients a_i must be positive");
    if (!std::isfinite(nu) || !std::isfinite(c2) || c2 < 0.0)
        throw std::invalid_argument("HurwitzSpec: bad nu or c2");
}

void EpsteinSpec::validate() const {
    if (p() < 1 || p() > 3)
        throw std::invalid_argument("EpsteinSpec: p must be 1, 2 or 3");
    for (double s : sigma)
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::invalid_argument("EpsteinSpec: sigma_i must be positive");
    if (!std::isfinite(nu)) throw std::invalid_argument("EpsteinSpec: bad nu");
}

double hurwitz_direct(const HurwitzSpec& spec, const TruncationPolicy& policy) {
    spec.validate();
    const int d = spec.d();
    const double nu = spec.nu, c2 = spec.c2;
    if (!(nu > 0.5 * d))
        throw DivergenceError("hurwitz_direct: sum converges only for nu > d/2");
    if (!(c2 > 0.0))
        throw std::invalid_argument("hurwitz_direct: requires c2 > 0");
    const NegPow f(nu);
    const double a0 = spec.a[0];
    const double a1 = d > 1 ? spec.a[1] : 0.0;
    const double a2 = d > 2 ? spec.a[2] : 0.0;

    double acc = f(c2);  // n = 0
    long r = 1;
    for (;; ++r) {
        if (r > policy.max_terms_per_axis)
            throw BudgetError("hurwitz_direct: max_terms_per_axis exhausted");
        double shell = 0.0;
        const double rr = double(r) * double(r);
        if (d == 1) {
            shell = 2.0 * f(a0 * rr + c2);
        } else if (d == 2) {
            for (long v = 0; v <= r; ++v)
                shell += 2.0 * mult(v) * f(a0 * rr + a1 * double(v) * v + c2);
            for (long u = 0; u < r; ++u)
                shell += 2.0 * mult(u) * f(a0 * double(u) * u + a1 * rr + c2);
        } else {
            for (long v = 0; v <= r; ++v)
                for (long w = 0; w <= r; ++w)
                    shell += 2.0 * mult(v) * mult(w) *
                             f(a0 * rr + a1 * double(v) * v + a2 * double(w) * w + c2);
            for (long u = 0; u < r; ++u)
                for (long w = 0; w <= r; ++w)
                    shell += 2.0 * mult(u) * mult(w) *
                             f(a0 * double(u) * u + a1 * rr + a2 * double(w) * w + c2);
            for (long u = 0; u < r; ++u)
                for (long v = 0; v < r; ++v)
                    shell += 2.0 * mult(u) * mult(v) *
                             f(a0 * double(u) * u + a1 * double(v) * v + a2 * rr + c2);
        }
        acc += shell;
        if (r >= policy.min_terms && shell <= policy.rel_tol * std::fabs(acc)) break;
    }

    // continuum correction over the omitted region, cells centred on lattice
    // points so the boundary sits at R = r + 1/2
    const double R = double(r) + 0.5;
    auto fx = [&](double x, double y, double z) {
        return f(a0 * x * x + a1 * y * y + a2 * z * z + c2);
    };
    double tail = std::exp2(double(d)) * truncation_tail(d, 0.0, R, 2.0 * nu, fx);
    if (d == 1) {
        // next midpoint Euler-Maclaurin term, two symmetric sides
        const double q = a0 * R * R + c2;
        const double fp = -2.0 * nu * a0 * R * std::pow(q, -nu - 1.0);
        tail += 2.0 * (fp / 24.0);
    }
    return acc + tail;
}

double epstein_direct(const EpsteinSpec& spec, const TruncationPolicy& policy) {
    spec.validate();
    const int p = spec.p();
    const double nu = spec.nu;
    if (!(nu > 0.5 * p))
        throw DivergenceError("epstein_direct: sum converges only for nu > p/2");
    const NegPow f(nu);
    const double s0 = spec.sigma[0] * spec.sigma[0];
    const double s1 = p > 1 ? spec.sigma[1] * spec.sigma[1] : 0.0;
    const double s2 = p > 2 ? spec.sigma[2] * spec.sigma[2] : 0.0;

    double acc = 0.0;
    long r = 1;
    for (;; ++r) {
        if (r > policy.max_terms_per_axis)
            throw BudgetError("epstein_direct: max_terms_per_axis exhausted");
        double shell = 0.0;
        const double rr = double(r) * double(r);
        if (p == 1) {
            shell = f(s0 * rr);
        } else if (p == 2) {
            for (long v = 1; v <= r; ++v) shell += f(s0 * rr + s1 * double(v) * v);
            for (long u = 1; u < r; ++u) shell += f(s0 * double(u) * u + s1 * rr);
        } else {
            for (long v = 1; v <= r; ++v)
                for (long w = 1; w <= r; ++w)
                    shell += f(s0 * rr + s1 * double(v) * v + s2 * double(w) * w);
            for (long u = 1; u < r; ++u)
                for (long w = 1; w <= r; ++w)
                    shell += f(s0 * double(u) * u + s1 * rr + s2 * double(w) * w);
            for (long u = 1; u < r; ++u)
                for (long v = 1; v < r; ++v)
                    shell += f(s0 * double(u) * u + s1 * double(v) * v + s2 * rr);
        }
        acc += shell;
        if (r >= policy.min_terms && shell <= policy.rel_tol * std::fabs(acc)) break;
    }

    const double R = double(r) + 0.5;
    if (p == 1) {
        // closed-form tail: sigma^(-2nu) [R^(1-2nu)/(2nu-1) - (nu/12) R^(-2nu-1) ...]
        const double s2nu = std::pow(spec.sigma[0], -2.0 * nu);
        double tail = s2nu * std::pow(R, 1.0 - 2.0 * nu) / (2.0 * nu - 1.0);
        tail += s2nu * (-2.0 * nu * std::pow(R, -2.0 * nu - 1.0)) / 24.0;
        tail -= 7.0 / 5760.0 *
                (-2.0 * nu * (2.0 * nu + 1.0) * (2.0 * nu + 2.0) *
                 s2nu * std::pow(R, -2.0 * nu - 3.0));
        return acc + tail;
    }
    auto fx = [&](double x, double y, double z) {
        return f(s0 * x * x + s1 * y * y + s2 * z * z);
    };
    return acc + truncation_tail(p, 0.5, R, 2.0 * nu, fx);
}

double hurwitz_bessel(const HurwitzSpec& spec, const TruncationPolicy& policy) {
    spec.validate();
    const int d = spec.d();
    const double nu = spec.nu, c2 = spec.c2;
    if (!(c2 > 0.0))
        throw std::invalid_argument("hurwitz_bessel: requires c2 > 0");
    const double c = std::sqrt(c2);
    const double mu = nu - 0.5 * d;

    double L[3] = {0, 0, 0};
    double prod_a = 1.0;
    for (int i = 0; i < d; ++i) {
        L[i] = 1.0 / std::sqrt(spec.a[i]);
        prod_a *= spec.a[i];
    }

    // Gamma(nu - d/2) raises PoleError at the continuation poles
    double bracket = gamma(mu) * std::pow(c2, 0.5 * d - nu);
    double scale = std::fabs(bracket);

    // terms plateau until 2 pi c w reaches O(1); with strongly anisotropic
    // coefficients the multi-axis sums can explode combinatorially, so an
    // overall budget turns that into an error instead of unbounded work
    long evals = 0;
    const long total_cap = 4 * policy.max_terms_per_axis;
    auto kterm = [&](double w2) {
        if (++evals > total_cap)
            throw BudgetError("hurwitz_bessel: total Bessel budget exhausted");
        const double w = std::sqrt(w2);
        return std::pow(kPi * w / c, mu) * bessel_k(mu, kTwoPi * c * w);
    };
    const double tol = policy.rel_tol;
    const long cap = policy.max_terms_per_axis;
    // completes a truncated sum with the geometric tail implied by the last
    // ratio; keeps the discarded mass below tol even for slow K decay
    auto geom_tail = [](double t, double tprev) {
        if (tprev == 0.0) return 0.0;
        const double rho = t / tprev;
        return (rho > 0.0 && rho < 0.98) ? t * rho / (1.0 - rho) : 0.0;
    };

    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        int idx[3], ns = 0;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) idx[ns++] = i;
        const double coef = std::exp2(double(ns + 1));
        double sum = 0.0;
        if (ns == 1) {
            const double l2 = L[idx[0]] * L[idx[0]];
            double tprev = 0.0;
            for (long m = 1;; ++m) {
                if (m > cap) throw BudgetError("hurwitz_bessel: Bessel sum budget");
                const double t = kterm(l2 * double(m) * m);
                sum += t;
                if (m >= 2 && std::fabs(t) <= tol * (scale + std::fabs(sum))) {
                    sum += geom_tail(t, tprev);
                    break;
                }
                tprev = t;
            }
        } else if (ns == 2) {
            const double la = L[idx[0]] * L[idx[0]], lb = L[idx[1]] * L[idx[1]];
            double rprev = 0.0;
            for (long m1 = 1;; ++m1) {
                if (m1 > cap) throw BudgetError("hurwitz_bessel: Bessel sum budget");
                double row = 0.0, tprev = 0.0;
                for (long m2 = 1;; ++m2) {
                    if (m2 > cap) throw BudgetError("hurwitz_bessel: Bessel sum budget");
                    const double t = kterm(la * double(m1) * m1 + lb * double(m2) * m2);
                    row += t;
                    if (m2 >= 2 && std::fabs(t) <= tol * (scale + std::fabs(sum + row))) {
                        row += geom_tail(t, tprev);
                        break;
                    }
                    tprev = t;
                }
                sum += row;
                if (m1 >= 2 && std::fabs(row) <= tol * (scale + std::fabs(sum))) {
                    sum += geom_tail(row, rprev);
                    break;
                }
                rprev = row;
            }
        } else {
            const double la = L[0] * L[0], lb = L[1] * L[1], lc = L[2] * L[2];
            double sprev = 0.0;
            for (long m1 = 1;; ++m1) {
                if (m1 > cap) throw BudgetError("hurwitz_bessel: Bessel sum budget");
                double slab = 0.0, rprev = 0.0;
                for (long m2 = 1;; ++m2) {
                    double row = 0.0, tprev = 0.0;
                    for (long m3 = 1;; ++m3) {
                        if (m3 > cap) throw BudgetError("hurwitz_bessel: Bessel sum budget");
                        const double t = kterm(la * double(m1) * m1 + lb * double(m2) * m2 +
                                               lc * double(m3) * m3);
                        row += t;
                        if (m3 >= 2 &&
                            std::fabs(t) <= tol * (scale + std::fabs(sum + slab + row))) {
                            row += geom_tail(t, tprev);
                            break;
                        }
                        tprev = t;
                    }
                    slab += row;
                    if (m2 >= 2 && std::fabs(row) <= tol * (scale + std::fabs(sum + slab))) {
                        slab += geom_tail(row, rprev);
                        break;
                    }
                    rprev = row;
                }
                sum += slab;
                if (m1 >= 2 && std::fabs(slab) <= tol * (scale + std::fabs(sum))) {
                    sum += geom_tail(slab, sprev);
                    break;
                }
                sprev = slab;
            }
        }
        bracket += coef * sum;
        scale = std::max(scale, std::fabs(bracket));
    }

    return std::pow(kPi, 0.5 * d) * rgamma(nu) / std::sqrt(prod_a) * bracket;
}

namespace detail {

double gamma_zeta_pair(double nu) {
    if (nu >= 0.75) return gamma(nu - 0.5) * riemann_zeta(2.0 * nu - 1.0);
    return gamma(1.0 - nu) * std::pow(kPi, 2.0 * nu - 1.5) *
           riemann_zeta(2.0 - 2.0 * nu);
}

double w_sum(double nu, const std::vector<double>& L, const TruncationPolicy& policy) {
    const int p = int(L.size());
    if (p < 2 || p > 3) throw std::invalid_argument("w_sum: p must be 2 or 3");
    const double tol = policy.rel_tol;
    const long cap = policy.max_terms_per_axis;
    double total = 0.0;
    double scale = 0.0;

    for (int i = 0; i < p; ++i) {
        const double Li = L[i];
        double contrib = 0.0;
        if (p == 2) {
            const double Lj = L[1 - i];
            for (long ni = 1;; ++ni) {
                if (ni > cap) throw BudgetError("w_sum: budget exhausted");
                double row = 0.0;
                for (long nj = 1;; ++nj) {
                    if (nj > cap) throw BudgetError("w_sum: budget exhausted");
                    const double w = Lj * double(nj);
                    const double t = std::pow(kPi * double(ni) / (Li * w), nu) *
                                     bessel_k(nu, kTwoPi * double(ni) * w / Li);
                    row += t;
                    scale = std::max(scale, std::fabs(t));
                    if (std::fabs(t) <= tol * scale) break;
                }
                contrib += row;
                if (std::fabs(row) <= tol * std::max(scale, std::fabs(total + contrib))) break;
            }
        } else {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            const double Lj = L[j], Lk = L[k];
            for (long ni = 1;; ++ni) {
                if (ni > cap) throw BudgetError("w_sum: budget exhausted");
                double slab = 0.0;
                for (long nj = 1;; ++nj) {
                    double row = 0.0;
                    for (long nk = 1;; ++nk) {
                        if (nk > cap) throw BudgetError("w_sum: budget exhausted");
                        const double w = std::sqrt(Lj * Lj * double(nj) * nj +
                                                   Lk * Lk * double(nk) * nk);
                        const double t = std::pow(kPi * double(ni) / (Li * w), nu) *
                                         bessel_k(nu, kTwoPi * double(ni) * w / Li);
                        row += t;
                        scale = std::max(scale, std::fabs(t));
                        if (std::fabs(t) <= tol * scale) break;
                    }
                    slab += row;
                    if (std::fabs(row) <= tol * std::max(scale, std::fabs(total + contrib + slab)))
                        break;
                }
                contrib += slab;
                if (std::fabs(slab) <= tol * std::max(scale, std::fabs(total + contrib))) break;
            }
        }
        total += contrib / Li;
    }
    return total;
}

namespace {

double e2_rec(double nu, double L1, double L2, const TruncationPolicy& policy) {
    const double t1 = -0.25 * (std::pow(L1, -2.0 * nu) + std::pow(L2, -2.0 * nu)) *
                      riemann_zeta(2.0 * nu);
    const double rg = rgamma(nu);
    const double t2 = 0.25 * kSqrtPi * rg * gamma_zeta_pair(nu) *
                      (std::pow(L1, 1.0 - 2.0 * nu) / L2 +
                       std::pow(L2, 1.0 - 2.0 * nu) / L1);
    const double t3 = kSqrtPi * rg * w_sum(nu - 0.5, {L1, L2}, policy);
    return t1 + t2 + t3;
}

double e3_rec(double nu, double L1, double L2, double L3,
              const TruncationPolicy& policy) {
    const double t1 = -(e2_rec(nu, L1, L2, policy) + e2_rec(nu, L1, L3, policy) +
                        e2_rec(nu, L2, L3, policy)) / 6.0;
    const double rg = rgamma(nu);
    const double mu = nu - 0.5;
    const double t2 = kSqrtPi * rg / 6.0 *
                      (gamma_times_e2(mu, L2, L3, policy) / L1 +
                       gamma_times_e2(mu, L1, L3, policy) / L2 +
                       gamma_times_e2(mu, L1, L2, policy) / L3);
    const double t3 = 2.0 / 3.0 * kSqrtPi * rg * w_sum(mu, {L1, L2, L3}, policy);
    return t1 + t2 + t3;
}

} // namespace

double e2_prime_at_minus1(double La, double Lb, const TruncationPolicy& policy) {
    const double z3 = riemann_zeta(3.0);
    return z3 * (La * La + Lb * Lb) / (8.0 * kPi * kPi) -
           kPi / 360.0 * (La * La * La / Lb + Lb * Lb * Lb / La) -
           kSqrtPi * w_sum(-1.5, {La, Lb}, policy);
}

double gamma_times_e2(double mu, double La, double Lb, const TruncationPolicy& policy) {
    if (std::fabs(mu + 1.0) < kPoleProximity)
        return -e2_prime_at_minus1(La, Lb, policy);
    return gamma(mu) * e2_rec(mu, La, Lb, policy);
}

double lattice_sum_excl0(double nu, const std::vector<double>& a,
                         const TruncationPolicy& policy) {
    const int d = int(a.size());
    std::vector<double> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = std::sqrt(a[i]);
    const double z2nu = riemann_zeta(2.0 * nu);
    double total = 0.0;
    for (int i = 0; i < d; ++i) total += 2.0 * std::pow(a[i], -nu) * z2nu;
    if (d >= 2) {
        total += 4.0 * e2_rec(nu, s[0], s[1], policy);
        if (d == 3) {
            total += 4.0 * (e2_rec(nu, s[0], s[2], policy) + e2_rec(nu, s[1], s[2], policy));
            total += 8.0 * e3_rec(nu, s[0], s[1], s[2], policy);
        }
    }
    return total;
}

} // namespace detail

double epstein_recurrence(const EpsteinSpec& spec, const TruncationPolicy& policy) {
    spec.validate();
    switch (spec.p()) {
        case 1:
            return std::pow(spec.sigma[0], -2.0 * spec.nu) * riemann_zeta(2.0 * spec.nu);
        case 2:
            return detail::e2_rec(spec.nu, spec.sigma[0], spec.sigma[1], policy);
        default:
            return detail::e3_rec(spec.nu, spec.sigma[0], spec.sigma[1], spec.sigma[2],
                                  policy);
    }
}

double e2_renormalized_at_3(double L1, double L2, const TruncationPolicy& policy) {
    if (!(L1 > 0.0) || !(L2 > 0.0))
        throw std::invalid_argument("e2_renormalized_at_3: lengths must be positive");
    const double z3 = riemann_zeta(3.0);
    return (L1 + L2) / 48.0 -
           z3 * (L1 * L1 / L2 + L2 * L2 / L1) / (16.0 * kPi * kPi) -
           0.5 * detail::w_sum(-1.0, {L1, L2}, policy);
}

double e3_renormalized_at_3(double L1, double L2, double L3,
                            const TruncationPolicy& policy) {
    if (!(L1 > 0.0) || !(L2 > 0.0) || !(L3 > 0.0))
        throw std::invalid_argument("e3_renormalized_at_3: lengths must be positive");
    const double t1 = -(e2_renormalized_at_3(L1, L2, policy) +
                        e2_renormalized_at_3(L1, L3, policy) +
                        e2_renormalized_at_3(L2, L3, policy)) / 6.0;
    const double t2 = (detail::e2_prime_at_minus1(L2, L3, policy) / L1 +
                       detail::e2_prime_at_minus1(L1, L3, policy) / L2 +
                       detail::e2_prime_at_minus1(L1, L2, policy) / L3) / 12.0;
    const double t3 = -detail::w_sum(-1.0, {L1, L2, L3}, policy) / 3.0;
    return t1 + t2 + t3;
}

} // namespace glrg
