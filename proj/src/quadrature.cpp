#include "glrg/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace glrg::quad {

namespace {

void gl_compute(int n, std::vector<double>& xs, std::vector<double>& ws) {
    xs.assign(n, 0.0);
    ws.assign(n, 0.0);
    const double pi = 3.141592653589793;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        xs[i] = -z;
        xs[n - 1 - i] = z;
        ws[i] = ws[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_cache;
std::mutex g_mutex;

const std::pair<std::vector<double>, std::vector<double>>& gl_entry(int n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_cache.find(n);
    if (it == g_cache.end()) {
        std::pair<std::vector<double>, std::vector<double>> e;
        gl_compute(n, e.first, e.second);
        it = g_cache.emplace(n, std::move(e)).first;
    }
    return it->second;
}

} // namespace

const std::vector<double>& gl_nodes(int n) { return gl_entry(n).first; }
const std::vector<double>& gl_weights(int n) { return gl_entry(n).second; }

Axis finite_axis(double lo, double hi, int n_per_panel) {
    Axis ax;
    if (!(hi > lo)) return ax;
    const auto& xs = gl_nodes(n_per_panel);
    const auto& ws = gl_weights(n_per_panel);
    double e = lo, width = 1.0;
    while (e < hi) {
        const double next = std::min(hi, e + width);
        const double mid = 0.5 * (e + next), half = 0.5 * (next - e);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ax.x.push_back(mid + half * xs[i]);
            ax.w.push_back(half * ws[i]);
        }
        e = next;
        width *= 4.0;
    }
    return ax;
}

Axis semi_inf_axis(double R, double decay_pow, int n_per_panel) {
    if (!(decay_pow > 1.0))
        throw std::invalid_argument("semi_inf_axis: needs decay_pow > 1");
    Axis ax;
    const auto& xs = gl_nodes(n_per_panel);
    const auto& ws = gl_weights(n_per_panel);
    const double smax = std::min(46.0 / (decay_pow - 1.0), 1200.0);
    const double pw = 3.0;
    double s0 = 0.0;
    while (s0 < smax) {
        const double s1 = std::min(smax, s0 + pw);
        const double mid = 0.5 * (s0 + s1), half = 0.5 * (s1 - s0);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double s = mid + half * xs[i];
            const double x = R * std::exp(s);
            ax.x.push_back(x);
            ax.w.push_back(half * ws[i] * x);  // dx = x ds
        }
        s0 = s1;
    }
    return ax;
}

} // namespace glrg::quad
