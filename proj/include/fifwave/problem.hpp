#ifndef FIFWAVE_PROBLEM_HPP
#define FIFWAVE_PROBLEM_HPP

#include <string>
#include <utility>
#include <vector>

#include "fifwave/poly.hpp"

namespace fif {

// Uniform-knot interpolation problem on [0,1]: knots x_i = i/N with
// boundary values y_0 = y_N = 0, vertical scaling factors gamma_k and
// polynomial pieces q_k. The attractor of the induced IFS is the graph
// of a continuous f with f(x_i) = y_i.
struct InterpolationProblem {
    int N = 0;
    std::vector<double> y;       // N+1 knot values
    std::vector<double> gamma;   // N scaling factors, |gamma_k| < 1
    std::vector<Poly> q;         // N polynomial pieces on [0,1]
    double delta = 1.0;          // Lipschitz order used in bound checks

    double gamma_max() const;
    double gamma_sum() const;
    int max_degree() const;

    // sup |f| <= max_k sup|q_k| / (1 - gamma_max).
    double sup_bound() const;
};

struct Violation {
    std::string constraint;
    int index = -1;   // offending piece/knot index, -1 if global
    double magnitude = 0.0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks every structural invariant; one entry per violation.
ValidationReport validate(const InterpolationProblem& p);

// Throws DomainError listing the violations when validate() fails.
void require_valid(const InterpolationProblem& p);

// L_k(x) = (x + k - 1)/N for x in [0,1], 1 <= k <= N.
double map_forward(const InterpolationProblem& p, int k, double x);

// Inverse map: x in [0,1] -> (k, u) with L_k(u) = x. Interior knots
// resolve to the left piece (k, u=1).
std::pair<int, double> map_inverse(const InterpolationProblem& p, double x);

}  // namespace fif

#endif
