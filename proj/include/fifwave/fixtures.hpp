#ifndef FIFWAVE_FIXTURES_HPP
#define FIFWAVE_FIXTURES_HPP

#include <cstdint>
#include <random>

#include "fifwave/problem.hpp"

namespace fif {

// Canonical tent problem: N=2, y=(0,1,0), q1(x)=x, q2(x)=1-x.
inline InterpolationProblem tent_problem(double gamma = 0.3) {
    InterpolationProblem p;
    p.N = 2;
    p.y = {0.0, 1.0, 0.0};
    p.gamma = {gamma, gamma};
    p.q = {Poly({0.0, 1.0}), Poly({1.0, -1.0})};
    p.delta = 1.0;
    return p;
}

// Random admissible fixture: free high-order coefficients, slopes fixed
// by the join conditions q_k(0)=y_{k-1}, q_k(1)=y_k.
inline InterpolationProblem random_problem(std::mt19937_64& rng, int N, int degree,
                                           double gamma_cap = 0.45) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    InterpolationProblem p;
    p.N = N;
    p.y.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (int i = 1; i < N; ++i) p.y[static_cast<std::size_t>(i)] = unit(rng);
    for (int k = 0; k < N; ++k) p.gamma.push_back(gamma_cap * unit(rng));
    for (int k = 1; k <= N; ++k) {
        std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
        c[0] = p.y[static_cast<std::size_t>(k - 1)];
        double high = 0.0;
        for (int r = 2; r <= degree; ++r) {
            c[static_cast<std::size_t>(r)] = unit(rng);
            high += c[static_cast<std::size_t>(r)];
        }
        c[1] = p.y[static_cast<std::size_t>(k)] - c[0] - high;
        while (c.size() > 1 && c.back() == 0.0) c.pop_back();
        p.q.emplace_back(std::move(c));
    }
    p.delta = 1.0;
    return p;
}

}  // namespace fif

#endif
