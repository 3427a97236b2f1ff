#include "fifwave/spectrum.hpp"

#include <cmath>
#include <limits>

#include "fifwave/errors.hpp"
#include "fifwave/quadrature.hpp"

namespace fif {

namespace {

// e^{-ix} - 1 without cancellation for small x.
Complex expm1_minus_i(double x) {
    double s = std::sin(0.5 * x);
    return {-2.0 * s * s, -std::sin(x)};
}

// I_r(u) = int_0^1 x^r e^{-iux} dx for r = 0..rmax.
void exp_moments(int rmax, double u, std::vector<Complex>& out) {
    out.resize(static_cast<std::size_t>(rmax) + 1);
    if (std::abs(u) < 1.0) {
        // Taylor in a = -iu; converges in < 40 terms at machine precision.
        for (int r = 0; r <= rmax; ++r) {
            Complex a{0.0, -u};
            Complex term{1.0, 0.0};
            Complex acc{0.0, 0.0};
            for (int n = 0;; ++n) {
                Complex contrib = term / static_cast<double>(n + r + 1);
                acc += contrib;
                if (std::abs(contrib) < 1e-18) break;
                term *= a / static_cast<double>(n + 1);
            }
            out[static_cast<std::size_t>(r)] = acc;
        }
        return;
    }
    const Complex a{0.0, -u};
    const Complex ea = std::polar(1.0, -u);  // e^{-iu}
    out[0] = (ea - 1.0) / a;
    for (int r = 1; r <= rmax; ++r)
        out[static_cast<std::size_t>(r)] = (ea - static_cast<double>(r) * out[static_cast<std::size_t>(r - 1)]) / a;
}

}  // namespace

Complex poly_moment(const Poly& q, double u) {
    if (!std::isfinite(u)) throw DomainError("poly_moment: non-finite frequency");
    static thread_local std::vector<Complex> moments;
    exp_moments(static_cast<int>(q.degree()), u, moments);
    KahanSum<Complex> acc;
    for (std::size_t r = 0; r < q.coeffs().size(); ++r)
        acc.add(q.coeffs()[r] * moments[r]);
    return acc.value();
}

SpectrumEvaluator::SpectrumEvaluator(InterpolationProblem problem, int j_trunc, double omega_min)
    : problem_(std::move(problem)), j_trunc_(j_trunc), omega_min_(omega_min) {
    require_valid(problem_);
    if (j_trunc_ < 1) throw DomainError("SpectrumEvaluator: J_trunc >= 1 required");
    q_abs_integral_max_ = 0.0;
    for (const Poly& q : problem_.q)
        q_abs_integral_max_ = std::max(q_abs_integral_max_, q.abs_integral_bound());
}

double SpectrumEvaluator::tail_bound(int J) const {
    double rho = problem_.N * problem_.gamma_max();
    if (rho >= 1.0) return std::numeric_limits<double>::infinity();
    return q_abs_integral_max_ / problem_.N * std::pow(rho, J) / (1.0 - rho);
}

const FifGrid& SpectrumEvaluator::small_omega_grid() const {
    if (!small_omega_grid_) {
        int J = 1;
        std::int64_t n = problem_.N;
        while (n < 4096) {
            n *= problem_.N;
            ++J;
        }
        small_omega_grid_ = std::make_shared<const FifGrid>(sample_grid(problem_, J));
    }
    return *small_omega_grid_;
}

SeriesValue SpectrumEvaluator::ft_series(double omega) const {
    if (std::abs(omega) < omega_min_) {
        const FifGrid& g = small_omega_grid();
        // Piecewise-linear interpolant error: contraction by gamma_max per level.
        double err = std::pow(problem_.gamma_max(), g.level) * problem_.sup_bound();
        return {ft_quadrature(g, omega), err};
    }
    const int N = problem_.N;
    Complex prefix{1.0, 0.0};
    KahanSum<Complex> acc;
    double scale = 1.0;  // N^-j
    for (int j = 1; j <= j_trunc_; ++j) {
        scale /= N;
        const double wj = omega * scale;  // omega / N^j
        KahanSum<Complex> piece;   // sum_k e^{-i w (k-1)/N^j} int q_k e^{-i w x / N^j}
        KahanSum<Complex> growth;  // G_j = sum_k gamma_k e^{-i w (k-1)/N^j}
        for (int k = 1; k <= N; ++k) {
            Complex phase = std::polar(1.0, -wj * static_cast<double>(k - 1));
            piece.add(phase * poly_moment(problem_.q[k - 1], wj));
            growth.add(problem_.gamma[k - 1] * phase);
        }
        acc.add(prefix * piece.value() * scale);
        prefix *= growth.value();
    }
    return {acc.value(), tail_bound(j_trunc_)};
}

Complex SpectrumEvaluator::ft_series_bruteforce(double omega, int J) const {
    const int N = problem_.N;
    if (J > 6 || N > 4) throw ResourceError("ft_series_bruteforce: enumeration guard J<=6, N<=4");
    KahanSum<Complex> acc;
    std::vector<int> k;  // current tuple, entries in 1..N
    for (int j = 1; j <= J; ++j) {
        k.assign(static_cast<std::size_t>(j), 1);
        const double nj = std::pow(static_cast<double>(N), j);
        while (true) {
            double gprod = 1.0;
            for (int i = 0; i < j - 1; ++i) gprod *= problem_.gamma[static_cast<std::size_t>(k[static_cast<std::size_t>(i)] - 1)];
            double p = 0.0;
            double denom = 1.0;
            for (int i = 0; i < j; ++i) {
                denom *= N;
                p += static_cast<double>(k[static_cast<std::size_t>(i)] - 1) / denom;
            }
            Complex term = gprod * std::polar(1.0, -omega * p) *
                           poly_moment(problem_.q[static_cast<std::size_t>(k.back() - 1)], omega / nj);
            acc.add(term / nj);
            // next tuple
            int pos = j - 1;
            while (pos >= 0 && k[static_cast<std::size_t>(pos)] == N) {
                k[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++k[static_cast<std::size_t>(pos)];
        }
    }
    return acc.value();
}

Complex SpectrumEvaluator::ft_linear(double omega) const {
    if (problem_.max_degree() > 1) throw DomainError("ft_linear: non-linear q_k present");
    if (std::abs(omega) < omega_min_) throw DomainError("ft_linear: |omega| below omega_min");
    const int N = problem_.N;
    Complex prefix{1.0, 0.0};
    KahanSum<Complex> acc;
    double nj = 1.0;  // N^j
    for (int j = 1; j <= j_trunc_; ++j) {
        nj *= N;
        const double wj = omega / nj;
        KahanSum<Complex> slopes;
        KahanSum<Complex> growth;
        for (int k = 1; k <= N; ++k) {
            Complex phase = std::polar(1.0, -wj * static_cast<double>(k - 1));
            double ck = (problem_.q[k - 1].degree() >= 1) ? problem_.q[k - 1].coeffs()[1] : 0.0;
            slopes.add(ck * phase);
            growth.add(problem_.gamma[k - 1] * phase);
        }
        acc.add(prefix * slopes.value() * (nj * expm1_minus_i(wj)));
        prefix *= growth.value();
    }
    return acc.value() / (omega * omega);
}

Complex ft_quadrature(const FifGrid& grid, double omega) {
    const std::int64_t n = grid.points() - 1;
    if (n < 64) throw AccuracyError("ft_quadrature: need at least 64 intervals");
    if (std::abs(omega) > M_PI * static_cast<double>(n))
        throw AccuracyError("ft_quadrature: omega beyond grid resolution");
    const double h = grid.step();
    const double u = omega * h;
    static thread_local std::vector<Complex> moments;
    exp_moments(1, u, moments);
    const Complex i0 = moments[0], i1 = moments[1];
    KahanSum<Complex> acc;
    for (std::int64_t i = 0; i < n; ++i) {
        const double f0 = grid.values[static_cast<std::size_t>(i)];
        const double f1 = grid.values[static_cast<std::size_t>(i + 1)];
        // Exact integral of the linear segment against e^{-i omega x}.
        Complex phase = std::polar(1.0, -omega * grid.x_at(i));
        acc.add(phase * (f0 * i0 + (f1 - f0) * i1));
    }
    return acc.value() * h;
}

}  // namespace fif
