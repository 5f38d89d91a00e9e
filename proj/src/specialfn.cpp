#include "glrg/specialfn.hpp"

#include <cmath>
#include <limits>

namespace glrg {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kSqrt2Pi = 2.50662827463100050241576528481;
constexpr double kEulerGamma = 0.57721566490153286060651209008;

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double z) {
    // z >= 0.5
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z - 1.0 + i);
    const double t = z + kLanczosG - 0.5;
    return kSqrt2Pi * std::pow(t, z - 0.5) * std::exp(-t) * acc;
}

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(fn) + ": argument must be finite");
}

// B_{2k}/(2k)! for the Euler-Maclaurin tail of the zeta sum.
constexpr double kEmCoeff[13] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    854513.0 / 1.5511210043330985984e23,
    -236364091.0 / 1.6938241367317436694528e27,
    8553103.0 / 2.4197487667596338526004544e27,
};

double zeta_euler_maclaurin(double s) {
    // s > 0.5, away from s = 1
    if (s > 60.0) {
        double sum = 1.0;
        for (int n = 2; n <= 6; ++n) sum += std::pow(n, -s);
        return sum;
    }
    constexpr int N = 24;
    double sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(n, -s);
    sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);

    double poch = s;                       // s(s+1)...(s+2k-2)
    double npow = std::pow(N, -s - 1.0);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 13; ++k) {
        const double term = kEmCoeff[k - 1] * poch * npow;
        if (std::fabs(term) >= prev) break;   // asymptotic tail started growing
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
        prev = std::fabs(term);
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        npow /= double(N) * double(N);
    }
    return sum;
}

} // namespace

double sin_pi(double x) {
    const double r = std::round(x);
    const double f = x - r;
    const double s = std::sin(kPi * f);
    return (std::fmod(std::fabs(r), 2.0) < 0.5) ? s : -s;
}

double gamma(double x) {
    require_finite(x, "gamma");
    if (x >= 0.5) return lanczos_gamma(x);
    const double n = std::round(x);
    if (n <= 0.0 && std::fabs(x - n) < kPoleProximity)
        throw PoleError("gamma", n);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (sin_pi(x) * lanczos_gamma(1.0 - x));
}

double rgamma(double x) {
    require_finite(x, "rgamma");
    if (x >= 0.5) return 1.0 / lanczos_gamma(x);
    return sin_pi(x) * lanczos_gamma(1.0 - x) / kPi;
}

double lgamma_abs(double x) {
    return std::lgamma(x);
}

double digamma_at_one() {
    return -kEulerGamma;
}

double riemann_zeta(double z) {
    require_finite(z, "riemann_zeta");
    if (std::fabs(z - 1.0) < kPoleProximity) throw PoleError("riemann_zeta", 1.0);
    if (z >= 0.5) return zeta_euler_maclaurin(z);
    if (std::fabs(z) < 1e-5) {
        // zeta(0) = -1/2, zeta'(0) = -log(2 pi)/2, zeta''(0)/2
        return -0.5 - 0.91893853320467274178 * z - 1.00317822795429242563 * z * z;
    }
    // reflection, Gamma((1-z)/2)/Gamma(z/2) pi^(z-1/2) zeta(1-z);
    // 1/Gamma(z/2) through rgamma so the trivial zeros are exact
    return std::pow(kPi, z - 0.5) * gamma((1.0 - z) / 2.0) * rgamma(z / 2.0) *
           riemann_zeta(1.0 - z);
}

double bessel_k(double nu, double x) {
    require_finite(nu, "bessel_k");
    require_finite(x, "bessel_k");
    if (x <= 0.0) throw std::domain_error("bessel_k: requires x > 0");
    nu = std::fabs(nu);  // K_{-nu} = K_nu

    // magnitude estimate to signal overflow before computing
    if (x < 1.0 && nu > 1.0) {
        const double lk = std::log(0.5) + lgamma_abs(nu) + nu * std::log(2.0 / x);
        if (lk > 709.0) throw std::overflow_error("bessel_k: result overflows");
    }

    constexpr double kEps = 1e-16;
    constexpr int kMaxIter = 20000;
    const int nl = int(nu + 0.5);
    const double xmu = nu - nl;  // in [-1/2, 1/2]
    const double xmu2 = xmu * xmu;
    double rkmu, rk1;

    if (x < 2.0) {
        // Temme's series for K_mu and K_{mu+1}
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        const double fact = (std::fabs(pimu) < kEps) ? 1.0 : pimu / std::sin(pimu);
        double d = -std::log(x2);
        double e = xmu * d;
        const double fact2 = (std::fabs(e) < kEps) ? 1.0 : std::sinh(e) / e;
        const double gampl = rgamma(1.0 + xmu);
        const double gammi = rgamma(1.0 - xmu);
        const double gam1 = (std::fabs(xmu) < 1e-8) ? -kEulerGamma
                                                    : (gammi - gampl) / (2.0 * xmu);
        const double gam2 = 0.5 * (gammi + gampl);
        double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / gampl;
        double q = 0.5 / (e * gammi);
        double c = 1.0;
        d = x2 * x2;
        double sum1 = p;
        int i = 1;
        for (; i <= kMaxIter; ++i) {
            ff = (i * ff + p + q) / (i * i - xmu2);
            c *= d / i;
            p /= (i - xmu);
            q /= (i + xmu);
            const double del = c * ff;
            sum += del;
            const double del1 = c * (p - i * ff);
            sum1 += del1;
            if (std::fabs(del) < std::fabs(sum) * kEps) break;
        }
        if (i > kMaxIter) throw BudgetError("bessel_k: series failed to converge");
        rkmu = sum;
        rk1 = sum1 * (2.0 / x);
    } else {
        // Steed/Thompson-Barnett continued fraction CF2
        double b = 2.0 * (1.0 + x);
        double d = 1.0 / b;
        double h = d, delh = d;
        double q1 = 0.0, q2 = 1.0;
        const double a1 = 0.25 - xmu2;
        double q = a1, c = a1, a = -a1;
        double s = 1.0 + q * delh;
        int i = 2;
        for (; i <= kMaxIter; ++i) {
            a -= 2.0 * (i - 1);
            c = -a * c / i;
            const double qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            const double dels = q * delh;
            s += dels;
            if (std::fabs(dels / s) < kEps) break;
        }
        if (i > kMaxIter) throw BudgetError("bessel_k: CF2 failed to converge");
        h = a1 * h;
        rkmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
        rk1 = rkmu * (xmu + x + 0.5 - h) / x;
    }
    for (int i = 1; i <= nl; ++i) {
        const double next = (xmu + i) * (2.0 / x) * rk1 + rkmu;
        rkmu = rk1;
        rk1 = next;
    }
    const double result = rkmu;
    if (std::isinf(result)) throw std::overflow_error("bessel_k: result overflows");
    return result;
}

double feynman_b(double D) {
    require_finite(D, "feynman_b");
    if (D <= 2.0)
        throw DivergenceError("feynman_b: b(D) diverges for D <= 2; valid window D > 2");
    return std::exp2(3.0 - D) * std::sqrt(kPi) * gamma(0.5 * D - 1.0) /
           gamma(0.5 * (D - 1.0));
}

double feynman_c(double D) {
    require_finite(D, "feynman_c");
    if (D <= 4.0)
        throw DivergenceError("feynman_c: c(D) diverges for D <= 4; valid window D > 4");
    return std::exp2(5.0 - D) * std::sqrt(kPi) * gamma(0.5 * D - 2.0) /
           gamma(0.5 * (D - 3.0));
}

} // namespace glrg
