#include "glrg/flow.hpp"
#include "glrg/specialfn.hpp"

#include <algorithm>
#include <cmath>

namespace glrg {

namespace {

double coupling_a(double D, FlowRegime regime) {
    return regime == FlowRegime::kZeroField ? a_coeff(D) : a1_coeff(D);
}

double beta_form(double g, double D, FlowRegime regime) {
    if (!(g >= 0.0)) throw std::invalid_argument("beta: requires g >= 0");
    const double k = regime == FlowRegime::kZeroField ? D - 4.0 : D - 6.0;
    return k * (g - coupling_a(D, regime) * g * g);
}

// Cash-Karp embedded RK45 step
template <class F>
void rk45_step(F&& f, double& t, double& g, double& h, double tol) {
    static const double b21 = 0.2;
    static const double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    static const double b41 = 0.3, b42 = -0.9, b43 = 1.2;
    static const double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0,
                        b54 = 35.0 / 27.0;
    static const double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                        b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                        b65 = 253.0 / 4096.0;
    static const double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                        c6 = 512.0 / 1771.0;
    static const double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                        d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                        d6 = c6 - 0.25;
    for (int attempt = 0; attempt < 60; ++attempt) {
        const double k1 = f(g);
        const double k2 = f(g + h * b21 * k1);
        const double k3 = f(g + h * (b31 * k1 + b32 * k2));
        const double k4 = f(g + h * (b41 * k1 + b42 * k2 + b43 * k3));
        const double k5 = f(g + h * (b51 * k1 + b52 * k2 + b53 * k3 + b54 * k4));
        const double k6 = f(g + h * (b61 * k1 + b62 * k2 + b63 * k3 + b64 * k4 + b65 * k5));
        const double g5 = g + h * (c1 * k1 + c3 * k3 + c4 * k4 + c6 * k6);
        const double err = std::fabs(h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6));
        const double scale = tol * std::max(std::fabs(g), std::fabs(g5)) + 1e-300;
        if (err <= scale || std::fabs(h) < 1e-14) {
            t += h;
            g = g5;
            const double grow = err > 0.0 ? 0.9 * std::pow(scale / err, 0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
            return;
        }
        h *= std::max(0.1, 0.9 * std::pow(scale / err, 0.25));
    }
    throw BudgetError("integrate_flow: step control failed");
}

} // namespace

double lambda_running(Momentum pmag, double D, const Geometry& geom, double lambda0,
                      const TruncationPolicy& policy, double crossover) {
    if (!(lambda0 > 0.0))
        throw std::invalid_argument("lambda_running: lambda0 must be positive");
    geom.validate();
    const double p = pmag.magnitude;
    const double lmin = *std::min_element(geom.lengths.begin(), geom.lengths.end());
    double pi_val;
    if (p * lmin < crossover)
        pi_val = small_p_decomposition(D, geom, policy).eval(p);
    else
        pi_val = pi_compactified(pmag, D, geom, policy).value;
    return lambda0 / (1.0 + lambda0 * pi_val);
}

double beta_zero_field(double g, double D) {
    if (!(D > 2.0) || !(D < 4.0))
        throw DivergenceError("beta_zero_field: valid window 2 < D < 4");
    return beta_form(g, D, FlowRegime::kZeroField);
}

FixedPointReport fixed_point_zero_field(double D) {
    if (!(D > 2.0) || !(D < 4.0))
        throw DivergenceError("fixed_point_zero_field: valid window 2 < D < 4");
    FixedPointReport r;
    r.g_star = 1.0 / a_coeff(D);
    r.stability_slope = 4.0 - D;  // (D-4)(1 - 2 A g*) with A g* = 1
    r.ir_stable = true;
    r.window_lo = 2.0;
    r.window_hi = 4.0;
    return r;
}

double beta_magnetic(double g, double D) {
    if (!(D > 4.0) || !(D < 6.0))
        throw DivergenceError("beta_magnetic: valid window 4 < D < 6");
    return beta_form(g, D, FlowRegime::kMagnetic);
}

FixedPointReport fixed_point_magnetic(double D) {
    if (!(D > 4.0) || !(D < 6.0))
        throw DivergenceError("fixed_point_magnetic: valid window 4 < D < 6");
    FixedPointReport r;
    r.g_star = 1.0 / a1_coeff(D);
    r.stability_slope = 6.0 - D;
    r.ir_stable = true;
    r.window_lo = 4.0;
    r.window_hi = 6.0;
    return r;
}

std::vector<FlowState> integrate_flow(double g0, double D, FlowRegime regime,
                                      std::pair<double, double> t_span, int steps) {
    if (!(g0 > 0.0)) throw std::invalid_argument("integrate_flow: requires g0 > 0");
    if (steps < 2) throw std::invalid_argument("integrate_flow: steps >= 2");
    const double gstar = 1.0 / coupling_a(D, regime);
    const double bound = 1e6 * std::max(g0, gstar);
    auto f = [&](double g) { return beta_form(std::max(g, 0.0), D, regime); };

    std::vector<FlowState> out;
    out.reserve(steps + 1);
    const double t0 = t_span.first, t1 = t_span.second;
    const double dt = (t1 - t0) / steps;
    double t = t0, g = g0;
    out.push_back({g, std::exp(t), f(g), regime});
    for (int i = 1; i <= steps; ++i) {
        const double target = t0 + i * dt;
        double h = (target - t) / 8.0;
        while ((dt > 0.0) ? (t < target) : (t > target)) {
            if ((dt > 0.0) ? (t + h > target) : (t + h < target)) h = target - t;
            rk45_step(f, t, g, h, 1e-12);
            if (!(g >= 0.0) || g > bound)
                throw DivergenceError("integrate_flow: trajectory left [0, bound]");
            if (h == 0.0) break;
        }
        out.push_back({g, std::exp(target), f(g), regime});
    }
    return out;
}

double beta_numeric_check(double D, const Geometry& geom,
                          const std::vector<double>& p_grid, FlowRegime regime,
                          double lambda0, double omega, const TruncationPolicy& policy) {
    if (p_grid.size() < 3)
        throw std::invalid_argument("beta_numeric_check: need at least 3 grid points");
    const double expo = regime == FlowRegime::kZeroField ? D - 4.0 : D - 6.0;
    std::vector<double> gs(p_grid.size()), ts(p_grid.size());
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        const double p = p_grid[i];
        double lam;
        if (regime == FlowRegime::kZeroField) {
            lam = lambda_running(Momentum{p}, D, geom, lambda0, policy);
            gs[i] = lam * std::pow(p, expo);
        } else {
            FieldSpec field{omega, 0.0, 0.0};
            lam = lambda_magnetic(0.0, 0.0, Momentum{p}, D, geom, lambda0, field, policy);
            gs[i] = omega * lam * std::pow(p, expo);
        }
        ts[i] = std::log(p);
    }
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < p_grid.size(); ++i) {
        const double fd = (gs[i + 1] - gs[i - 1]) / (ts[i + 1] - ts[i - 1]);
        const double closed = beta_form(gs[i], D, regime);
        worst = std::max(worst, std::fabs(fd - closed) / std::fabs(closed));
    }
    return worst;
}

} // namespace glrg
