#include "fifwave/regularity.hpp"

#include <algorithm>
#include <cmath>

#include "fifwave/errors.hpp"

namespace fif {

RegularityReport constants(const InterpolationProblem& p, double delta) {
    require_valid(p);
    if (!(delta > 0.0) || delta > 1.0) throw DomainError("constants: delta in (0,1] required");

    RegularityReport rep;
    rep.delta = delta;
    for (const Poly& q : p.q) {
        rep.K = std::max(rep.K, q.derivative_sup_grid());
        rep.K_certificate = std::max(rep.K_certificate, q.derivative_sup_bound());
    }
    const double nd = std::pow(static_cast<double>(p.N), delta);
    rep.K_star = rep.K * nd;
    rep.Omega = nd * p.gamma_max();
    const double n_omega = p.N * rep.Omega;
    rep.bound_finite = n_omega < 1.0;
    if (rep.bound_finite) rep.bound_C = p.N * rep.K_star / (1.0 - n_omega);

    rep.hypothesis_lip = p.gamma_max() < std::pow(static_cast<double>(p.N), -(delta + 1.0));
    rep.hypothesis_poly =
        p.gamma_max() < std::pow(static_cast<double>(p.N), -(p.max_degree() + 1.0));
    return rep;
}

std::vector<std::pair<double, double>> per_scale_max(const ScalogramGrid& sg) {
    std::vector<std::pair<double, double>> out;
    out.reserve(sg.scales.size());
    for (std::size_t si = 0; si < sg.scales.size(); ++si) {
        double m = 0.0;
        for (const Complex& v : sg.values[si]) m = std::max(m, std::abs(v));
        out.emplace_back(sg.scales[si], m);
    }
    return out;
}

FitResult fit_decay_exponent(const std::vector<std::pair<double, double>>& per_scale) {
    if (per_scale.size() < 3) throw DomainError("fit_decay_exponent: need >= 3 scales");
    for (const auto& [s, m] : per_scale)
        if (!(m > 0.0)) throw DomainError("fit_decay_exponent: nonpositive maximum");

    const double n = static_cast<double>(per_scale.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [s, m] : per_scale) {
        double x = std::log2(s), y = std::log2(m);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    FitResult fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (const auto& [s, m] : per_scale) {
        double r = std::log2(m) - (fit.slope * std::log2(s) + intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

BoundCheck verify_lip_bound(const RegularityReport& rep, const ScalogramGrid& sg, double tol) {
    if (!rep.hypothesis_lip || !rep.bound_finite)
        throw DomainError("verify_lip_bound: decay-bound hypothesis not satisfied");
    BoundCheck chk;
    for (std::size_t si = 0; si < sg.scales.size(); ++si) {
        const double cap = rep.bound_C * std::pow(sg.scales[si], rep.delta);
        for (const Complex& v : sg.values[si])
            chk.worst_ratio = std::max(chk.worst_ratio, std::abs(v) / cap);
    }
    chk.ok = chk.worst_ratio <= 1.0 + tol;
    return chk;
}

DecayCheck verify_o_of_s(const InterpolationProblem& p, const ScalogramGrid& sg,
                         const CauchyWavelet& w, int window, double margin) {
    const int m = p.max_degree();
    if (!(p.gamma_max() < std::pow(static_cast<double>(p.N), -(m + 1.0))))
        throw DomainError("verify_o_of_s: |gamma_k| < 1/N^(m+1) violated");
    if (!(w.M - 1 > m)) throw DomainError("verify_o_of_s: wavelet order must satisfy M-1 > m");

    auto maxima = per_scale_max(sg);
    bool all_zero = std::all_of(maxima.begin(), maxima.end(),
                                [](const auto& pr) { return pr.second == 0.0; });
    if (all_zero) return {true, 0.0, 0.0};  // vacuous for the zero signal

    if (static_cast<int>(maxima.size()) > window)
        maxima.erase(maxima.begin(), maxima.end() - window);
    FitResult fit = fit_decay_exponent(maxima);
    return {fit.slope > 1.0 + margin, fit.slope, fit.residual};
}

FitResult oscillation_exponent(const FifGrid& g, int jmin, int jmax) {
    if (g.N != 2) throw DomainError("oscillation_exponent: dyadic lags need N = 2");
    if (jmin < 1 || jmax < jmin || jmax > g.level)
        throw DomainError("oscillation_exponent: bad lag range");
    std::vector<std::pair<double, double>> osc;
    for (int j = jmin; j <= jmax; ++j) {
        const std::int64_t lag = std::int64_t{1} << (g.level - j);
        double m = 0.0;
        for (std::int64_t i = 0; i + lag < g.points(); ++i)
            m = std::max(m, std::abs(g.values[static_cast<std::size_t>(i + lag)] -
                                     g.values[static_cast<std::size_t>(i)]));
        osc.emplace_back(std::pow(2.0, -j), m);
    }
    return fit_decay_exponent(osc);
}

}  // namespace fif
