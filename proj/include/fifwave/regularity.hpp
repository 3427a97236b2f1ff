#ifndef FIFWAVE_REGULARITY_HPP
#define FIFWAVE_REGULARITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fifwave/cwt.hpp"
#include "fifwave/grid.hpp"
#include "fifwave/problem.hpp"

namespace fif {

// Constants and measurements for the decay bounds: K is the Lipschitz
// constant of the q_k, K* = K N^delta, Omega = N^delta max|gamma_k|,
// and the scalogram bound N K* / (1 - N Omega) valid when N Omega < 1.
struct RegularityReport {
    double delta = 1.0;
    double K = 0.0;
    double K_certificate = 0.0;  // coefficient-sum upper bound for K
    double K_star = 0.0;
    double Omega = 0.0;
    bool bound_finite = false;
    double bound_C = 0.0;  // meaningful only when bound_finite
    bool hypothesis_lip = false;   // |gamma_k| < 1/N^(delta+1) for all k
    bool hypothesis_poly = false;  // |gamma_k| < 1/N^(m+1) for all k
    double fitted_exponent = 0.0;
    double fit_residual = 0.0;
    std::vector<std::pair<double, double>> per_scale_max;  // (s, max_t |W|)
};

// Constants part only; hypothesis failures are flags, not errors.
RegularityReport constants(const InterpolationProblem& p, double delta);

// max_t |W(s,.)| per scale, from a computed scalogram.
std::vector<std::pair<double, double>> per_scale_max(const ScalogramGrid& sg);

struct FitResult {
    double slope = 0.0;
    double residual = 0.0;  // RMS of the log-log linear fit
};

// Ordinary least squares of log2(max|W|) against log2(s).
FitResult fit_decay_exponent(const std::vector<std::pair<double, double>>& per_scale);

struct BoundCheck {
    bool ok = false;
    double worst_ratio = 0.0;  // max |W(s,t)| / (bound_C s^delta)
};

// Checks |W(s,t)| <= bound_C s^delta (1 + tol) over the whole grid.
BoundCheck verify_lip_bound(const RegularityReport& rep, const ScalogramGrid& sg,
                            double tol = 0.05);

struct DecayCheck {
    bool ok = false;
    double slope = 0.0;
    double residual = 0.0;
};

// o(s) surrogate: fitted slope over the finest `window` scales must
// exceed 1 + margin. Preconditions: polynomial pieces, the gamma
// hypothesis |gamma_k| < 1/N^(m+1), and wavelet order M - 1 > m.
DecayCheck verify_o_of_s(const InterpolationProblem& p, const ScalogramGrid& sg,
                         const CauchyWavelet& w, int window = 6, double margin = 0.05);

// Independent oscillation oracle: max_i |f(x_i + h) - f(x_i)| on the
// grid at lags h = 2^-j, j = jmin..jmax, and the fitted exponent of its
// log-log decay. Requires N = 2 grids (dyadic lags must be exact).
FitResult oscillation_exponent(const FifGrid& g, int jmin, int jmax);

}  // namespace fif

#endif
