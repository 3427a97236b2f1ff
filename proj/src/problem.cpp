#include "fifwave/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fifwave/errors.hpp"

namespace fif {

double InterpolationProblem::gamma_max() const {
    double g = 0.0;
    for (double v : gamma) g = std::max(g, std::abs(v));
    return g;
}

double InterpolationProblem::gamma_sum() const {
    double s = 0.0;
    for (double v : gamma) s += v;
    return s;
}

int InterpolationProblem::max_degree() const {
    int m = 0;
    for (const Poly& p : q) m = std::max(m, static_cast<int>(p.degree()));
    return m;
}

double InterpolationProblem::sup_bound() const {
    double qsup = 0.0;
    for (const Poly& p : q) qsup = std::max(qsup, p.sup_bound());
    double g = gamma_max();
    if (g >= 1.0) return std::numeric_limits<double>::infinity();
    return qsup / (1.0 - g);
}

namespace {
constexpr double kJoinTol = 1e-12;
}

ValidationReport validate(const InterpolationProblem& p) {
    ValidationReport rep;
    auto add = [&rep](const std::string& name, int idx, double mag) {
        rep.ok = false;
        rep.violations.push_back({name, idx, mag});
    };

    if (p.N < 2) add("N>=2", -1, static_cast<double>(p.N));
    if (static_cast<int>(p.y.size()) != p.N + 1)
        add("y-size", -1, static_cast<double>(p.y.size()));
    if (static_cast<int>(p.gamma.size()) != p.N)
        add("gamma-size", -1, static_cast<double>(p.gamma.size()));
    if (static_cast<int>(p.q.size()) != p.N)
        add("q-size", -1, static_cast<double>(p.q.size()));
    if (!rep.ok) return rep;  // shape is wrong, pointwise checks meaningless

    if (p.y.front() != 0.0) add("y0=0", 0, std::abs(p.y.front()));
    if (p.y.back() != 0.0) add("yN=0", p.N, std::abs(p.y.back()));
    if (!(p.delta > 0.0) || p.delta > 1.0) add("delta-in-(0,1]", -1, p.delta);

    for (int k = 1; k <= p.N; ++k) {
        if (!(std::abs(p.gamma[k - 1]) < 1.0))
            add("|gamma_k|<1", k, std::abs(p.gamma[k - 1]));

        const Poly& qk = p.q[k - 1];
        // Endpoint join conditions (y form).
        double left = qk(0.0) - p.y[k - 1];
        if (std::abs(left) > kJoinTol) add("q_k(0)=y_{k-1}", k, std::abs(left));
        double right = qk(1.0) - p.y[k];
        if (std::abs(right) > kJoinTol) add("q_k(1)=y_k", k, std::abs(right));

        if (qk.degree() > 0 && qk.coeffs().back() == 0.0)
            add("leading-coeff-nonzero", k, 0.0);
    }

    // Pure-coefficient form of the join conditions; must agree with the
    // y-based form above.
    if (std::abs(p.q[0].coeffs()[0]) > kJoinTol)
        add("c_{1,0}=0", 1, std::abs(p.q[0].coeffs()[0]));
    for (int k = 1; k < p.N; ++k) {
        double d = p.q[k - 1].coeff_sum() - p.q[k].coeffs()[0];
        if (std::abs(d) > kJoinTol) add("sum(c_k)=c_{k+1,0}", k, std::abs(d));
    }
    if (std::abs(p.q[p.N - 1].coeff_sum()) > kJoinTol)
        add("sum(c_N)=0", p.N, std::abs(p.q[p.N - 1].coeff_sum()));

    return rep;
}

void require_valid(const InterpolationProblem& p) {
    ValidationReport rep = validate(p);
    if (rep.ok) return;
    std::ostringstream os;
    os << "invalid interpolation problem:";
    for (const Violation& v : rep.violations)
        os << " [" << v.constraint << " @" << v.index << " mag=" << v.magnitude << "]";
    throw DomainError(os.str());
}

double map_forward(const InterpolationProblem& p, int k, double x) {
    if (k < 1 || k > p.N) throw DomainError("map_forward: piece index out of range");
    if (x < 0.0 || x > 1.0) throw DomainError("map_forward: x outside [0,1]");
    return (x + static_cast<double>(k - 1)) / static_cast<double>(p.N);
}

std::pair<int, double> map_inverse(const InterpolationProblem& p, double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("map_inverse: x outside [0,1]");
    // Interior knots go to the left piece (k, u=1).
    int k = static_cast<int>(std::ceil(x * p.N));
    k = std::clamp(k, 1, p.N);
    double u = x * p.N - static_cast<double>(k - 1);
    u = std::clamp(u, 0.0, 1.0);
    return {k, u};
}

}  // namespace fif
