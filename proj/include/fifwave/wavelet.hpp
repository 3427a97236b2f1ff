#ifndef FIFWAVE_WAVELET_HPP
#define FIFWAVE_WAVELET_HPP

#include <complex>

namespace fif {

// Analytic wavelet with frequency response w^M e^{-w} on the positive
// half-line; vanishing-moment order r = M. Time-domain closed form
// M!/(2 pi) (1 - ix)^{-(M+1)}.
struct CauchyWavelet {
    int M = 4;

    int vanishing_moments() const { return M; }
};

// psi_hat(w) = w^M e^{-w} for w > 0, 0 otherwise.
double wavelet_hat(const CauchyWavelet& w, double omega);

// Closed-form time-domain wavelet.
std::complex<double> wavelet_time(const CauchyWavelet& w, double x);

// Numerical inverse transform of psi_hat; independent check of the
// closed form.
std::complex<double> wavelet_time_numeric(const CauchyWavelet& w, double x);

// Quadrature of psi over [-X, X] on geometrically graded panels, plus a
// bound on the |x| > X tail. Used to confirm the zero-mean property.
struct TailedIntegral {
    std::complex<double> value;
    double tail_bound;
};
TailedIntegral wavelet_integral(const CauchyWavelet& w, double X);

// Frequency cutoff z such that z^M e^{-z} is negligible relative to the
// peak M^M e^{-M}; psi_hat(s w) is below tolerance for w > cutoff / s.
double wavelet_hat_cutoff(const CauchyWavelet& w, double rel_tol = 1e-16);

// The two halves of s^M int w^{M-p} e^{-s w} dw split at w = s, in exact
// incomplete-gamma closed form: inner over [0,s], outer over [s, inf).
// The outer half tends to s^{p-1} (M-p)! as s -> 0; the inner half is
// O(s^{2M-p+1}), small but not zero.
struct SplitMoment {
    double inner;
    double outer;
};
SplitMoment scaled_moment_split(int M, int p, double s);

// Quadrature counterpart of the outer half, for cross-checking.
double scaled_moment_outer_numeric(int M, int p, double s);

}  // namespace fif

#endif
