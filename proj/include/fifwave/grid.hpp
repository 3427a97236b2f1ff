#ifndef FIFWAVE_GRID_HPP
#define FIFWAVE_GRID_HPP

#include <cstdint>
#include <vector>

#include "fifwave/problem.hpp"

namespace fif {

// Exact FIF samples on the level-J N-adic grid: values[i] = f(i/N^J),
// i = 0..N^J. The functional equation is closed on these grids, so the
// values carry no fixed-point iteration error.
struct FifGrid {
    int N = 0;
    int level = 0;
    std::vector<double> values;  // N^level + 1 entries

    std::int64_t points() const { return static_cast<std::int64_t>(values.size()); }
    double x_at(std::int64_t i) const {
        return static_cast<double>(i) / static_cast<double>(points() - 1);
    }
    double step() const { return 1.0 / static_cast<double>(points() - 1); }
};

// N^J, guarded against overflow/memory blowups.
std::int64_t nadic_points(int N, int J, std::int64_t budget = (std::int64_t{1} << 27));

// Exact level-J grid by the recursion f(L_k(x)) = gamma_k f(x) + q_k(x).
FifGrid sample_grid(const InterpolationProblem& p, int J);

// One application of the Read-Bajraktarevic operator on a level-J grid.
FifGrid rb_apply(const InterpolationProblem& p, const FifGrid& g);

// n applications of the operator starting from g0 (endpoints must match y).
FifGrid rb_iterate(const InterpolationProblem& p, const FifGrid& g0, int n);

struct PointValue {
    double value = 0.0;
    double error_bound = 0.0;
};

// Depth-d unrolling of the functional equation at arbitrary x, closed
// with linear interpolation on the knot values; the bound is a certified
// sup-norm estimate (max|gamma|)^depth * (sup|f| bound + max|y|).
PointValue evaluate_point(const InterpolationProblem& p, double x, int depth);

// Restriction of a level-J grid to the level-(J-1) indices.
FifGrid restrict_one_level(const FifGrid& g);

// max_i |values[i+1] - values[i]|, the continuity proxy.
double max_adjacent_jump(const FifGrid& g);

// Sup-norm distance between two grids at the same level.
double sup_distance(const FifGrid& a, const FifGrid& b);

}  // namespace fif

#endif
