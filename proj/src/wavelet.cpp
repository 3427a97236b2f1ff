#include "fifwave/wavelet.hpp"

#include <cmath>

#include "fifwave/errors.hpp"
#include "fifwave/quadrature.hpp"

namespace fif {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lower incomplete gamma for integer a by its ascending series,
// cancellation-free for the small arguments used here.
double lower_gamma(int a, double x) {
    double denom = a;
    double term = 1.0 / denom;
    double acc = term;
    for (int n = 1; n < 500; ++n) {
        denom += 1.0;
        term *= x / denom;
        acc += term;
        if (term < acc * 1e-17) break;
    }
    return std::pow(x, a) * std::exp(-x) * acc;
}

// Upper incomplete gamma for integer a: (a-1)! e^{-x} sum x^k/k!.
double upper_gamma(int a, double x) {
    double sum = 0.0, term = 1.0;
    for (int k = 0; k < a; ++k) {
        sum += term;
        term *= x / static_cast<double>(k + 1);
    }
    return factorial(a - 1) * std::exp(-x) * sum;
}

}  // namespace

double wavelet_hat(const CauchyWavelet& w, double omega) {
    if (omega <= 0.0) return 0.0;
    return std::pow(omega, w.M) * std::exp(-omega);
}

std::complex<double> wavelet_time(const CauchyWavelet& w, double x) {
    const std::complex<double> base = 1.0 / std::complex<double>(1.0, -x);
    std::complex<double> p{1.0, 0.0};
    for (int i = 0; i <= w.M; ++i) p *= base;
    return factorial(w.M) / (2.0 * M_PI) * p;
}

double wavelet_hat_cutoff(const CauchyWavelet& w, double rel_tol) {
    const double peak = std::pow(static_cast<double>(w.M), w.M) * std::exp(-static_cast<double>(w.M));
    const double c = -std::log(rel_tol * peak);
    double z = std::max(static_cast<double>(w.M) + 1.0, c);
    for (int i = 0; i < 60; ++i) z = c + w.M * std::log(z);
    return z;
}

std::complex<double> wavelet_time_numeric(const CauchyWavelet& w, double x) {
    const double cutoff = wavelet_hat_cutoff(w, 1e-18);
    const double panel = std::min(0.25, M_PI / (8.0 * (1.0 + std::abs(x))));
    auto integrand = [&](double om) {
        return wavelet_hat(w, om) * std::polar(1.0, om * x);
    };
    return integrate_gl(integrand, 0.0, cutoff, panel) / (2.0 * M_PI);
}

TailedIntegral wavelet_integral(const CauchyWavelet& w, double X) {
    if (!(X >= 1.0)) throw DomainError("wavelet_integral: need X >= 1");
    auto psi = [&](double x) { return wavelet_time(w, x); };
    KahanSum<std::complex<double>> acc;
    // Geometrically graded panels resolve the algebraic tails.
    acc.add(integrate_gl(psi, -1.0, 1.0, 0.125));
    double lo = 1.0;
    while (lo < X) {
        double hi = std::min(2.0 * lo, X);
        acc.add(integrate_gl(psi, lo, hi, (hi - lo) / 8.0));
        acc.add(integrate_gl(psi, -hi, -lo, (hi - lo) / 8.0));
        lo = hi;
    }
    // |psi(x)| <= M!/(2 pi) |x|^{-(M+1)} outside [-X, X].
    double tail = 2.0 * factorial(w.M) / (2.0 * M_PI) * std::pow(X, -w.M) / w.M;
    return {acc.value(), tail};
}

SplitMoment scaled_moment_split(int M, int p, double s) {
    if (p < 1 || p > M + 1) throw DomainError("scaled_moment_split: need 1 <= p <= M+1");
    if (!(s > 0.0)) throw DomainError("scaled_moment_split: need s > 0");
    // Substituting z = s w: s^M int w^{M-p} e^{-s w} dw = s^{p-1} * gamma-part(M-p+1, .)
    const int a = M - p + 1;
    const double sp = std::pow(s, p - 1);
    return {sp * lower_gamma(a, s * s), sp * upper_gamma(a, s * s)};
}

double scaled_moment_outer_numeric(int M, int p, double s) {
    // Integrate in z = s w; decay scale O(1) there.
    const int a = M - p + 1;
    auto g = [&](double z) { return std::pow(z, a - 1) * std::exp(-z); };
    const double hi = s * s + 60.0 + 10.0 * a;
    double v = integrate_gl_real(g, s * s, hi, 0.5);
    return std::pow(s, p - 1) * v;
}

}  // namespace fif
