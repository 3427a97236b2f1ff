#include "fifwave/cwt.hpp"

#include <cmath>

#include "fifwave/errors.hpp"
#include "fifwave/quadrature.hpp"

namespace fif {

namespace {

void check_scale_guard(const FifGrid& grid, double s) {
    if (!(s > 0.0)) throw DomainError("cwt: scale must be positive");
    if (s < 8.0 * grid.step())
        throw AccuracyError("cwt: scale below 8 grid steps, direct path unresolved");
}

}  // namespace

Complex cwt_direct(const FifGrid& grid, const CauchyWavelet& w, double s, double t,
                   Conjugation conj) {
    check_scale_guard(grid, s);
    const std::int64_t n = grid.points();
    std::vector<Complex> g(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        Complex psi = wavelet_time(w, (grid.x_at(i) - t) / s);
        if (conj == Conjugation::on) psi = std::conj(psi);
        g[static_cast<std::size_t>(i)] = grid.values[static_cast<std::size_t>(i)] * psi;
    }
    return simpson_uniform(g, 0.0, 1.0) / s;
}

Complex cwt_fourier(const SpectrumEvaluator& spec, const CauchyWavelet& w, double s, double t,
                    Conjugation conj) {
    if (!(s > 0.0)) throw DomainError("cwt_fourier: scale must be positive");
    const double omega_max = wavelet_hat_cutoff(w, 1e-16) / s;
    auto integrand = [&](double om) {
        return spec.ft_series(om).value * wavelet_hat(w, s * om) * std::polar(1.0, t * om);
    };
    Complex v = integrate_gl(integrand, 0.0, omega_max, 0.5) / (2.0 * M_PI);
    // For real f the unconjugated transform is the complex conjugate of
    // the conjugated one (negative-frequency half of the same integral).
    return conj == Conjugation::on ? v : std::conj(v);
}

Complex cwt_q_piece(const InterpolationProblem& p, int k, const CauchyWavelet& w,
                    double s, double t, Conjugation conj) {
    if (k < 1 || k > p.N) throw DomainError("cwt_q_piece: piece index out of range");
    if (!(s > 0.0)) throw DomainError("cwt_q_piece: scale must be positive");
    const double a = static_cast<double>(k - 1) / p.N;
    const double b = static_cast<double>(k) / p.N;
    const Poly& qk = p.q[k - 1];
    auto integrand = [&](double x) {
        Complex psi = wavelet_time(w, (x - t) / s);
        if (conj == Conjugation::on) psi = std::conj(psi);
        return qk(x * p.N - static_cast<double>(k - 1)) * psi;
    };
    const double panel = std::min(s / 2.0, (b - a) / 8.0);
    return integrate_gl(integrand, a, b, panel) / s;
}

double recursion_residual(const FifGrid& grid, const InterpolationProblem& p,
                          const CauchyWavelet& w, double s, double t, Conjugation conj) {
    Complex lhs = cwt_direct(grid, w, s, t, conj);
    KahanSum<Complex> rhs;
    for (int k = 1; k <= p.N; ++k) {
        double ts = p.N * t - static_cast<double>(k - 1);
        rhs.add(p.gamma[k - 1] * cwt_direct(grid, w, p.N * s, ts, conj));
        rhs.add(cwt_q_piece(p, k, w, s, t, conj));
    }
    return std::abs(lhs - rhs.value());
}

ScalogramGrid scalogram(const FifGrid* grid, const SpectrumEvaluator* spec,
                        const CauchyWavelet& w, const std::vector<double>& scales,
                        const std::vector<double>& translations, CwtMethod method,
                        Conjugation conj) {
    for (std::size_t i = 1; i < scales.size(); ++i)
        if (!(scales[i] < scales[i - 1]))
            throw DomainError("scalogram: scales must be strictly decreasing");
    if (method == CwtMethod::direct && grid == nullptr)
        throw DomainError("scalogram: direct method needs a signal grid");
    if (method == CwtMethod::fourier && spec == nullptr)
        throw DomainError("scalogram: fourier method needs a spectrum evaluator");

    ScalogramGrid out;
    out.scales = scales;
    out.translations = translations;
    out.method = method;
    out.values.resize(scales.size());
    for (std::size_t si = 0; si < scales.size(); ++si) {
        out.values[si].resize(translations.size());
        for (std::size_t ti = 0; ti < translations.size(); ++ti) {
            out.values[si][ti] = (method == CwtMethod::direct)
                                     ? cwt_direct(*grid, w, scales[si], translations[ti], conj)
                                     : cwt_fourier(*spec, w, scales[si], translations[ti], conj);
        }
    }
    return out;
}

std::vector<double> dyadic_scales(int lmin, int lmax) {
    if (lmax < lmin) throw DomainError("dyadic_scales: lmax < lmin");
    std::vector<double> s;
    for (int l = lmin; l <= lmax; ++l) s.push_back(std::pow(2.0, -l));
    return s;
}

std::vector<double> uniform_translations(int count) {
    if (count < 1) throw DomainError("uniform_translations: count >= 1");
    std::vector<double> t;
    if (count == 1) return {0.5};
    for (int i = 0; i < count; ++i)
        t.push_back(static_cast<double>(i) / static_cast<double>(count - 1));
    return t;
}

}  // namespace fif
