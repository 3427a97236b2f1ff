#ifndef FIFWAVE_CWT_HPP
#define FIFWAVE_CWT_HPP

#include <complex>
#include <string>
#include <vector>

#include "fifwave/grid.hpp"
#include "fifwave/problem.hpp"
#include "fifwave/spectrum.hpp"
#include "fifwave/wavelet.hpp"

namespace fif {

enum class CwtMethod { direct, fourier };

// The direct transform conjugates psi so that it denotes the same object
// as the Fourier-domain form (Parseval); the unconjugated variant is
// kept for comparison.
enum class Conjugation { on, off };

// W(s,t) = (1/s) int f(x) conj(psi((x-t)/s)) dx by composite Simpson on
// the signal grid. Translations outside [0,1] are legal (f is extended
// by zero). Guard: s >= 8 grid steps.
Complex cwt_direct(const FifGrid& grid, const CauchyWavelet& w, double s, double t,
                   Conjugation conj = Conjugation::on);

// W(s,t) = (1/2 pi) int_0^inf fhat(w) psi_hat(s w) e^{i t w} dw with
// fhat from the truncated series.
Complex cwt_fourier(const SpectrumEvaluator& spec, const CauchyWavelet& w, double s, double t,
                    Conjugation conj = Conjugation::on);

// Transform of the single piece q_k o L_k^{-1} (supported on I_k),
// by Gauss-Legendre panels sized to the wavelet width.
Complex cwt_q_piece(const InterpolationProblem& p, int k, const CauchyWavelet& w,
                    double s, double t, Conjugation conj = Conjugation::on);

// | W f(s,t) - sum_k [ gamma_k W f(Ns, Nt-(k-1)) + W(q_k o L_k^{-1})(s,t) ] |
double recursion_residual(const FifGrid& grid, const InterpolationProblem& p,
                          const CauchyWavelet& w, double s, double t,
                          Conjugation conj = Conjugation::on);

struct ScalogramGrid {
    std::vector<double> scales;        // strictly decreasing
    std::vector<double> translations;  // uniform grid in [0,1]
    std::vector<std::vector<Complex>> values;  // [scale][translation]
    CwtMethod method = CwtMethod::direct;
};

// Dense evaluation over scales x translations; deterministic.
ScalogramGrid scalogram(const FifGrid* grid, const SpectrumEvaluator* spec,
                        const CauchyWavelet& w, const std::vector<double>& scales,
                        const std::vector<double>& translations, CwtMethod method,
                        Conjugation conj = Conjugation::on);

// Dyadic scale list 2^{-lmin} .. 2^{-lmax} (decreasing).
std::vector<double> dyadic_scales(int lmin, int lmax);

// Uniform translation grid with `count` points on [0,1].
std::vector<double> uniform_translations(int count);

}  // namespace fif

#endif
