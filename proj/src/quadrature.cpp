#include "fifwave/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace fif {

namespace {

// Nodes/weights computed once by Newton iteration on P_12; deterministic
// and accurate to machine precision.
struct GL12Table {
    std::vector<double> x, w;
    GL12Table() {
        constexpr int n = 12;
        x.resize(n);
        w.resize(n);
        for (int i = 0; i < n; ++i) {
            // Chebyshev initial guess.
            double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                // Evaluate P_n and P_n' by recurrence.
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                double dx = p1 / dp;
                xi -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            x[i] = xi;
            w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
        }
    }
};

const GL12Table& table() {
    static const GL12Table t;
    return t;
}

}  // namespace

const std::vector<double>& GaussLegendre12::nodes() { return table().x; }
const std::vector<double>& GaussLegendre12::weights() { return table().w; }

std::complex<double> integrate_gl(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, double max_panel) {
    if (!(max_panel > 0.0)) throw std::invalid_argument("integrate_gl: bad panel width");
    if (b <= a) return {0.0, 0.0};
    const auto& xs = GaussLegendre12::nodes();
    const auto& ws = GaussLegendre12::weights();
    auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_panel));
    double h = (b - a) / static_cast<double>(panels);
    KahanSum<std::complex<double>> acc;
    for (std::size_t p = 0; p < panels; ++p) {
        double lo = a + h * static_cast<double>(p);
        double mid = lo + 0.5 * h, half = 0.5 * h;
        for (std::size_t i = 0; i < xs.size(); ++i)
            acc.add(f(mid + half * xs[i]) * (ws[i] * half));
    }
    return acc.value();
}

double integrate_gl_real(const std::function<double(double)>& f,
                         double a, double b, double max_panel) {
    auto c = integrate_gl([&f](double x) { return std::complex<double>(f(x), 0.0); },
                          a, b, max_panel);
    return c.real();
}

std::complex<double> simpson_uniform(const std::vector<std::complex<double>>& g,
                                     double a, double b) {
    const std::size_t n = g.size() - 1;  // intervals
    if (n < 4) throw std::invalid_argument("simpson_uniform: too few samples");
    const double h = (b - a) / static_cast<double>(n);
    const std::size_t m = (n % 2 == 0) ? n : n - 3;  // even-interval Simpson span
    KahanSum<std::complex<double>> acc;
    acc.add(g[0]);
    for (std::size_t i = 1; i < m; ++i) acc.add(g[i] * ((i % 2 == 1) ? 4.0 : 2.0));
    acc.add(g[m]);
    std::complex<double> result = acc.value() * (h / 3.0);
    if (n % 2 != 0) {
        // Simpson 3/8 on the trailing three intervals.
        result += (g[m] + 3.0 * g[m + 1] + 3.0 * g[m + 2] + g[m + 3]) * (3.0 * h / 8.0);
    }
    return result;
}

}  // namespace fif
