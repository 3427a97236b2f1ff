#include <doctest.h>

#include <cmath>
#include <random>

#include "fifwave/errors.hpp"
#include "fifwave/fixtures.hpp"
#include "fifwave/regularity.hpp"

using namespace fif;

namespace {

ScalogramGrid synthetic_scalogram(const std::vector<double>& scales, double C, double alpha) {
    ScalogramGrid sg;
    sg.scales = scales;
    sg.translations = {0.0, 0.5, 1.0};
    for (double s : scales) {
        double m = C * std::pow(s, alpha);
        sg.values.push_back({Complex{0.5 * m, 0.0}, Complex{m, 0.0}, Complex{0.0, 0.0}});
    }
    return sg;
}

}  // namespace

TEST_CASE("constants for the tent family") {
    auto rep = constants(tent_problem(0.2), 1.0);
    CHECK(rep.K == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rep.K_certificate == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rep.K_star == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rep.Omega == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(rep.bound_finite);
    CHECK(rep.bound_C == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(rep.hypothesis_lip);
    CHECK(rep.hypothesis_poly);

    auto flat = constants(tent_problem(0.0), 1.0);
    CHECK(flat.bound_C == doctest::Approx(2.0 * flat.K_star).epsilon(1e-15));

    auto hot = constants(tent_problem(0.3), 1.0);
    CHECK_FALSE(hot.hypothesis_lip);   // 0.3 >= 1/4
    CHECK_FALSE(hot.hypothesis_poly);  // 0.3 >= 1/4
    CHECK_FALSE(hot.bound_finite);     // N Omega = 1.2 >= 1
    CHECK_THROWS_AS(constants(tent_problem(0.2), 0.0), DomainError);
    CHECK_THROWS_AS(constants(tent_problem(0.2), 1.5), DomainError);
}

TEST_CASE("bound constant grows monotonically in gamma") {
    double prev = 0.0;
    for (double g : {0.0, 0.1, 0.2, 0.24}) {
        auto rep = constants(tent_problem(g), 1.0);
        REQUIRE(rep.bound_finite);
        CHECK(rep.bound_C > prev);
        prev = rep.bound_C;
    }
}

TEST_CASE("decay fit recovers exact power laws") {
    std::vector<double> scales;
    for (int e = 2; e <= 9; ++e) scales.push_back(std::pow(2.0, -e));

    for (double alpha : {1.0, 0.5, 1.7}) {
        auto fit = fit_decay_exponent(per_scale_max(synthetic_scalogram(scales, 3.0, alpha)));
        CHECK(fit.slope == doctest::Approx(alpha).epsilon(1e-12));
        CHECK(fit.residual <= 1e-12);
    }

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.1, 2.0);
    double C = unit(rng), alpha = unit(rng);
    auto fit = fit_decay_exponent(per_scale_max(synthetic_scalogram(scales, C, alpha)));
    CHECK(fit.slope == doctest::Approx(alpha).epsilon(1e-12));

    CHECK_THROWS_AS(fit_decay_exponent({{0.5, 1.0}, {0.25, 0.5}}), DomainError);
    CHECK_THROWS_AS(fit_decay_exponent({{0.5, 1.0}, {0.25, 0.0}, {0.125, 0.1}}), DomainError);
}

TEST_CASE("lipschitz bound check flags injected violations") {
    auto rep = constants(tent_problem(0.2), 1.0);
    std::vector<double> scales = {0.125, 0.0625, 0.03125};
    auto sg = synthetic_scalogram(scales, 1.0, 1.0);  // well inside bound_C = 20
    auto chk = verify_lip_bound(rep, sg);
    CHECK(chk.ok);
    CHECK(chk.worst_ratio == doctest::Approx(1.0 / rep.bound_C).epsilon(1e-12));

    sg.values[1][0] = Complex{2.0 * rep.bound_C * 0.0625, 0.0};
    auto bad = verify_lip_bound(rep, sg);
    CHECK_FALSE(bad.ok);
    CHECK(bad.worst_ratio == doctest::Approx(2.0).epsilon(1e-12));

    ScalogramGrid zeros = synthetic_scalogram(scales, 0.0, 1.0);
    for (auto& row : zeros.values) row.assign(row.size(), Complex{0.0, 0.0});
    CHECK(verify_lip_bound(rep, zeros).worst_ratio == 0.0);

    auto hot = constants(tent_problem(0.3), 1.0);
    CHECK_THROWS_AS(verify_lip_bound(hot, sg), DomainError);
}

TEST_CASE("o(s) check preconditions") {
    CauchyWavelet w{4};
    std::vector<double> scales = {0.125, 0.0625, 0.03125, 0.015625};
    auto sg = synthetic_scalogram(scales, 1.0, 1.2);

    CHECK_THROWS_AS(verify_o_of_s(tent_problem(0.3), sg, w), DomainError);
    CHECK_THROWS_AS(verify_o_of_s(tent_problem(0.2), sg, CauchyWavelet{2}), DomainError);

    auto pass = verify_o_of_s(tent_problem(0.2), sg, w, 4);
    CHECK(pass.ok);
    CHECK(pass.slope == doctest::Approx(1.2).epsilon(1e-12));

    auto fail = verify_o_of_s(tent_problem(0.2), synthetic_scalogram(scales, 1.0, 1.0), w, 4);
    CHECK_FALSE(fail.ok);

    ScalogramGrid zeros = synthetic_scalogram(scales, 0.0, 1.0);
    for (auto& row : zeros.values) row.assign(row.size(), Complex{0.0, 0.0});
    CHECK(verify_o_of_s(tent_problem(0.2), zeros, w).ok);  // vacuous
}

TEST_CASE("fit window: finest-scale slope is stable under window size") {
    std::vector<double> scales;
    for (int e = 2; e <= 10; ++e) scales.push_back(std::pow(2.0, -e));
    auto sg = synthetic_scalogram(scales, 2.0, 0.8);
    auto maxima = per_scale_max(sg);
    auto full = fit_decay_exponent(maxima);
    maxima.erase(maxima.begin(), maxima.end() - 5);
    auto tail = fit_decay_exponent(maxima);
    CHECK(std::abs(full.slope - tail.slope) < 0.05);
}

TEST_CASE("oscillation oracle on explicit grids") {
    // Hat interpolant (gamma = 0): oscillation at lag h is exactly 2h.
    auto p0 = tent_problem(0.0);
    FifGrid g0 = sample_grid(p0, 12);
    auto fit0 = oscillation_exponent(g0, 2, 8);
    CHECK(fit0.slope == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fit0.residual <= 1e-10);

    // gamma = 0.6 sits above the Lipschitz regime: exponent -log2(0.6).
    FifGrid g = sample_grid(tent_problem(0.6), 14);
    auto fit = oscillation_exponent(g, 4, 9);
    CHECK(fit.slope == doctest::Approx(-std::log2(0.6)).epsilon(0.08));

    CHECK_THROWS_AS(oscillation_exponent(g, 0, 5), DomainError);
    CHECK_THROWS_AS(oscillation_exponent(g, 4, 20), DomainError);
    std::mt19937_64 rng(1);
    FifGrid g3 = sample_grid(random_problem(rng, 3, 1), 6);
    CHECK_THROWS_AS(oscillation_exponent(g3, 1, 3), DomainError);
}
