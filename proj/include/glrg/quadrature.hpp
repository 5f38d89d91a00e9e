#ifndef GLRG_QUADRATURE_HPP
#define GLRG_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace glrg::quad {

// Tanh-sinh (double exponential) quadrature on (0,1).  The integrand is
// called as f(x, xc) with xc = 1-x held to full relative accuracy, so
// endpoint-singular weights like [x(1-x)]^alpha, alpha in (-1,0), are
// integrated without loss.
template <class F>
double tanh_sinh_01(F&& f, double tol = 1e-13, int max_levels = 10,
                    double* err_out = nullptr) {
    constexpr double kPiHalf = 1.5707963267948966;
    constexpr double kTMax = 6.1;  // sigma underflows shortly beyond

    auto node = [&](double t, double& x, double& xc, double& w) {
        const double u = kPiHalf * std::sinh(t);
        const double sig = 1.0 / (1.0 + std::exp(2.0 * std::fabs(u)));
        if (t >= 0.0) { x = 1.0 - sig; xc = sig; }
        else          { x = sig;       xc = 1.0 - sig; }
        // dx/dt = pi cosh(t) sig(1-sig)
        w = 3.141592653589793 * std::cosh(t) * sig * (1.0 - sig);
    };

    double h = 1.0;
    double x, xc, w;
    node(0.0, x, xc, w);
    double sum = w * f(x, xc);
    // level 0: integer abscissas
    for (int k = 1; k * h <= kTMax; ++k) {
        double term = 0.0;
        node(k * h, x, xc, w);
        if (xc > 0.0) term += w * f(x, xc);
        node(-k * h, x, xc, w);
        if (x > 0.0) term += w * f(x, xc);
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum) && k > 3) break;
    }
    double prev = sum * h;
    double value = prev;
    double err = std::fabs(value);
    double prev_err = std::numeric_limits<double>::infinity();
    int stall = 0;
    for (int lev = 1; lev <= max_levels; ++lev) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= kTMax; k += 2) {
            double term = 0.0;
            node(k * h, x, xc, w);
            if (xc > 0.0) term += w * f(x, xc);
            node(-k * h, x, xc, w);
            if (x > 0.0) term += w * f(x, xc);
            add += term;
            if (std::fabs(term) < 1e-18 * std::fabs(add) && k * h > 3.0) break;
        }
        value = 0.5 * prev + h * add;
        err = std::fabs(value - prev);
        if (err <= tol * std::fabs(value) && lev >= 3) break;
        // genuine tanh-sinh convergence is superlinear; stagnating level
        // differences mean the integrand's own noise floor was reached
        if (lev >= 4) {
            if (err > 0.25 * prev_err) {
                if (++stall >= 2) break;
            } else {
                stall = 0;
            }
        }
        prev_err = err;
        prev = value;
    }
    if (err_out) *err_out = err;
    return value;
}

// Gauss-Legendre nodes/weights on [-1,1]; cached per order.
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

template <class F>
double gl_ab(F&& f, double a, double b, int n) {
    const auto& xs = gl_nodes(n);
    const auto& ws = gl_weights(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += ws[i] * f(mid + half * xs[i]);
    return s * half;
}

// Precomputed 1-D node/weight list for tensor-product region integrals.
struct Axis {
    std::vector<double> x;
    std::vector<double> w;
};

// Panels with geometrically growing width covering (lo, hi).
Axis finite_axis(double lo, double hi, int n_per_panel = 24);

// (R, inf) mapped through x = R e^s; decay_pow is the large-x power
// |f| ~ x^(-decay_pow) used to size the s-range (requires decay_pow > 1).
Axis semi_inf_axis(double R, double decay_pow, int n_per_panel = 24);

} // namespace glrg::quad

#endif
