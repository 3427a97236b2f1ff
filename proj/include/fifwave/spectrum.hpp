#ifndef FIFWAVE_SPECTRUM_HPP
#define FIFWAVE_SPECTRUM_HPP

#include <complex>
#include <memory>

#include "fifwave/grid.hpp"
#include "fifwave/problem.hpp"

namespace fif {

using Complex = std::complex<double>;

// Integral moment of a polynomial against a complex exponential:
// poly_moment(q, u) = int_0^1 q(x) e^{-iux} dx. Stable recurrence for
// |u| >= 1, Taylor expansion below (removable singularity at u = 0).
Complex poly_moment(const Poly& q, double u);

struct SeriesValue {
    Complex value{0.0, 0.0};
    double tail_bound = 0.0;  // +inf when N*max|gamma| >= 1
};

// Series evaluator for the Fourier transform of the FIF. The nested
// N^j-term sums factorize over the index tuple into per-level products,
// giving O(J_trunc * N) cost per frequency.
class SpectrumEvaluator {
  public:
    SpectrumEvaluator(InterpolationProblem problem, int j_trunc, double omega_min = 1e-6);

    const InterpolationProblem& problem() const { return problem_; }
    int j_trunc() const { return j_trunc_; }
    double omega_min() const { return omega_min_; }

    // Truncated series value with a geometric tail certificate. Below
    // omega_min, delegates to quadrature on a cached grid.
    SeriesValue ft_series(double omega) const;

    // Literal nested-sum enumeration over all (k_1..k_j) tuples,
    // truncated at depth J; the factorization oracle.
    Complex ft_series_bruteforce(double omega, int J) const;

    // Closed form for linear pieces: (1/w^2) sum_j N^j (e^{-iw/N^j}-1)
    // times the factorized gamma/slope sums.
    Complex ft_linear(double omega) const;

    // Remaining-terms certificate after depth J.
    double tail_bound(int J) const;

  private:
    InterpolationProblem problem_;
    int j_trunc_;
    double omega_min_;
    double q_abs_integral_max_;     // max_k bound on int |q_k|
    mutable std::shared_ptr<const FifGrid> small_omega_grid_;

    const FifGrid& small_omega_grid() const;
};

// Quadrature oracle: integral of f(x) e^{-i omega x} over [0,1], exact
// for the piecewise-linear interpolant of the grid samples (Filon-type
// rule, stable for oscillatory omega).
Complex ft_quadrature(const FifGrid& grid, double omega);

}  // namespace fif

#endif
