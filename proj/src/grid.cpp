#include "fifwave/grid.hpp"

#include <algorithm>
#include <cmath>

#include "fifwave/errors.hpp"

namespace fif {

std::int64_t nadic_points(int N, int J, std::int64_t budget) {
    if (N < 2 || J < 0) throw DomainError("nadic_points: need N >= 2, J >= 0");
    std::int64_t n = 1;
    for (int j = 0; j < J; ++j) {
        n *= N;
        if (n > budget) throw ResourceError("grid size exceeds memory budget");
    }
    return n + 1;
}

FifGrid sample_grid(const InterpolationProblem& p, int J) {
    require_valid(p);
    nadic_points(p.N, J);  // budget check up front

    // Level-0 seed holds the endpoint values; the recursion regenerates
    // the full knot vector y at level 1 because y_0 = y_N = 0.
    FifGrid g{p.N, 0, {p.y.front(), p.y.back()}};
    std::int64_t coarse = 1;  // N^(level)
    for (int j = 1; j <= J; ++j) {
        std::vector<double> fine(static_cast<std::size_t>(coarse) * p.N + 1);
        for (int k = 1; k <= p.N; ++k) {
            const double gk = p.gamma[k - 1];
            const Poly& qk = p.q[k - 1];
            const std::int64_t off = (k - 1) * coarse;
            for (std::int64_t i = 0; i <= coarse; ++i) {
                double u = static_cast<double>(i) / static_cast<double>(coarse);
                fine[static_cast<std::size_t>(off + i)] = gk * g.values[static_cast<std::size_t>(i)] + qk(u);
            }
        }
        g.values = std::move(fine);
        g.level = j;
        coarse *= p.N;
    }
    return g;
}

FifGrid rb_apply(const InterpolationProblem& p, const FifGrid& g) {
    if (g.N != p.N) throw DomainError("rb_apply: grid base mismatch");
    if (g.level < 1) throw DomainError("rb_apply: need level >= 1");
    const std::int64_t n = g.points() - 1;       // N^J
    const std::int64_t m = n / p.N;              // N^(J-1)
    FifGrid out{g.N, g.level, std::vector<double>(g.values.size())};
    for (std::int64_t i = 0; i <= n; ++i) {
        // Left-piece tie-break at interior knots: (k-1)m < i <= km.
        int k = (i == 0) ? 1 : static_cast<int>((i + m - 1) / m);
        std::int64_t ic = i - static_cast<std::int64_t>(k - 1) * m;  // index on level J-1
        double u = static_cast<double>(ic) / static_cast<double>(m);
        // Coarse lookup at u is the level-J index ic*N (exact N-adic arithmetic).
        out.values[static_cast<std::size_t>(i)] =
            p.gamma[k - 1] * g.values[static_cast<std::size_t>(ic * p.N)] + p.q[k - 1](u);
    }
    return out;
}

FifGrid rb_iterate(const InterpolationProblem& p, const FifGrid& g0, int n) {
    if (g0.N != p.N) throw DomainError("rb_iterate: grid base mismatch");
    std::int64_t expect = nadic_points(p.N, g0.level);
    if (g0.points() != expect) throw DomainError("rb_iterate: level/size mismatch");
    if (g0.values.front() != p.y.front() || g0.values.back() != p.y.back())
        throw DomainError("rb_iterate: g0 endpoints must equal y0, yN");
    FifGrid g = g0;
    for (int i = 0; i < n; ++i) g = rb_apply(p, g);
    return g;
}

namespace {
// Linear interpolation of the knot values at u in [0,1].
double knot_interp(const InterpolationProblem& p, double u) {
    double t = u * p.N;
    int i = std::clamp(static_cast<int>(std::floor(t)), 0, p.N - 1);
    double frac = t - static_cast<double>(i);
    return p.y[i] * (1.0 - frac) + p.y[i + 1] * frac;
}
}  // namespace

PointValue evaluate_point(const InterpolationProblem& p, double x, int depth) {
    if (x < 0.0 || x > 1.0) throw DomainError("evaluate_point: x outside [0,1]");
    if (depth < 0) throw DomainError("evaluate_point: negative depth");

    // f(x) = gamma_{k1} ( gamma_{k2} ( ... ) + q_{k2}(.) ) + q_{k1}(.)
    double scale = 1.0;  // product of the gamma factors applied so far
    double acc = 0.0;
    double u = x;
    for (int d = 0; d < depth; ++d) {
        auto [k, v] = map_inverse(p, u);
        acc += scale * p.q[k - 1](v);
        scale *= p.gamma[k - 1];
        u = v;
    }
    acc += scale * knot_interp(p, u);

    double maxy = 0.0;
    for (double v : p.y) maxy = std::max(maxy, std::abs(v));
    double bound = std::pow(p.gamma_max(), depth) * (p.sup_bound() + maxy);
    return {acc, bound};
}

FifGrid restrict_one_level(const FifGrid& g) {
    if (g.level < 1) throw DomainError("restrict_one_level: need level >= 1");
    FifGrid out{g.N, g.level - 1, {}};
    std::int64_t n = (g.points() - 1) / g.N;
    out.values.reserve(static_cast<std::size_t>(n + 1));
    for (std::int64_t i = 0; i <= n; ++i)
        out.values.push_back(g.values[static_cast<std::size_t>(i * g.N)]);
    return out;
}

double max_adjacent_jump(const FifGrid& g) {
    double m = 0.0;
    for (std::size_t i = 1; i < g.values.size(); ++i)
        m = std::max(m, std::abs(g.values[i] - g.values[i - 1]));
    return m;
}

double sup_distance(const FifGrid& a, const FifGrid& b) {
    if (a.values.size() != b.values.size()) throw DomainError("sup_distance: level mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

}  // namespace fif
