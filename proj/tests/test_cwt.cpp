#include <doctest.h>

#include <cmath>
#include <random>

#include "fifwave/cwt.hpp"
#include "fifwave/errors.hpp"
#include "fifwave/fixtures.hpp"

using namespace fif;

namespace {

InterpolationProblem zero_problem() {
    InterpolationProblem p;
    p.N = 2;
    p.y = {0.0, 0.0, 0.0};
    p.gamma = {0.3, -0.2};
    p.q = {Poly({0.0}), Poly({0.0})};
    return p;
}

}  // namespace

TEST_CASE("direct transform: trivial signal and scale guard") {
    FifGrid zeros{2, 10, std::vector<double>(1025, 0.0)};
    CauchyWavelet w{4};
    CHECK(std::abs(cwt_direct(zeros, w, 0.1, 0.5)) == 0.0);
    CHECK_THROWS_AS(cwt_direct(zeros, w, 4.0 / 1024.0, 0.5), AccuracyError);
    CHECK_THROWS_AS(cwt_direct(zeros, w, 0.0, 0.5), DomainError);
}

TEST_CASE("vanishing moments suppress the constant signal in the interior") {
    CauchyWavelet w{4};
    FifGrid ones{2, 12, std::vector<double>(4097, 1.0)};
    double w3 = std::abs(cwt_direct(ones, w, 1.0 / 8, 0.5));
    double w5 = std::abs(cwt_direct(ones, w, 1.0 / 32, 0.5));
    // Interior response comes only from the psi tails: ~ s^M.
    CHECK(w5 < w3 * std::pow(0.25, 3.0));
}

TEST_CASE("linearity of the transform") {
    auto p = tent_problem(0.3);
    FifGrid f = sample_grid(p, 12);
    FifGrid g = f;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        g.values[i] = std::sin(7.0 * g.x_at(static_cast<std::int64_t>(i)));
    FifGrid combo = f;
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = 2.0 * f.values[i] - 0.7 * g.values[i];
    CauchyWavelet w{4};
    double s = 1.0 / 16, t = 0.4;
    Complex lhs = cwt_direct(combo, w, s, t);
    Complex rhs = 2.0 * cwt_direct(f, w, s, t) - 0.7 * cwt_direct(g, w, s, t);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
}

TEST_CASE("dual paths agree at a single point") {
    auto p = tent_problem(0.3);
    FifGrid g = sample_grid(p, 14);
    SpectrumEvaluator ev(p, 60);
    CauchyWavelet w{4};
    Complex d = cwt_direct(g, w, 1.0 / 16, 0.5);
    Complex f = cwt_fourier(ev, w, 1.0 / 16, 0.5);
    CHECK(std::abs(d - f) / std::abs(d) <= 1e-3);
}

TEST_CASE("conjugation convention: the two variants are conjugates") {
    auto p = tent_problem(0.3);
    FifGrid g = sample_grid(p, 12);
    SpectrumEvaluator ev(p, 50);
    CauchyWavelet w{4};
    double s = 1.0 / 8, t = 0.3;
    Complex on = cwt_direct(g, w, s, t, Conjugation::on);
    Complex off = cwt_direct(g, w, s, t, Conjugation::off);
    CHECK(std::abs(off - std::conj(on)) <= 1e-12);
    Complex fon = cwt_fourier(ev, w, s, t, Conjugation::on);
    Complex foff = cwt_fourier(ev, w, s, t, Conjugation::off);
    CHECK(std::abs(foff - std::conj(fon)) <= 1e-15);
}

TEST_CASE("piece transform: zero piece and definition unfolding") {
    auto p = tent_problem(0.3);
    CauchyWavelet w{4};
    CHECK(std::abs(cwt_q_piece(zero_problem(), 1, w, 0.1, 0.4)) == 0.0);

    // k=1 equals the direct transform of x -> q_1(2x) supported on [0,1/2].
    FifGrid sig{2, 13, std::vector<double>(8193)};
    for (std::int64_t i = 0; i < sig.points(); ++i) {
        double x = sig.x_at(i);
        sig.values[static_cast<std::size_t>(i)] = (x <= 0.5) ? p.q[0](2.0 * x) : 0.0;
    }
    double s = 1.0 / 16, t = 0.35;
    Complex a = cwt_q_piece(p, 1, w, s, t);
    Complex b = cwt_direct(sig, w, s, t);
    // Simpson on the sampled signal sees the jump at the piece boundary,
    // so agreement is limited to O(step) there.
    CHECK(std::abs(a - b) <= 1e-4);

    CHECK_THROWS_AS(cwt_q_piece(p, 3, w, s, t), DomainError);
}

TEST_CASE("piece boundary jumps cancel in the sum over pieces") {
    // A single piece ends with a jump at the shared knot, so its response
    // there stays of order one; the two-piece sum is the continuous hat
    // function, whose corner response decays like s.
    auto p = tent_problem(0.3);
    CauchyWavelet w{4};
    auto single = [&](double s) { return std::abs(cwt_q_piece(p, 1, w, s, 0.5)); };
    auto summed = [&](double s) {
        return std::abs(cwt_q_piece(p, 1, w, s, 0.5) + cwt_q_piece(p, 2, w, s, 0.5));
    };
    double s_coarse = 1.0 / 16, s_fine = 1.0 / 128;
    CHECK(single(s_fine) > 0.5 * single(s_coarse));
    CHECK(summed(s_fine) < 0.25 * summed(s_coarse));
    CHECK(summed(s_coarse) < single(s_coarse));
}

TEST_CASE("one-step recursion identity") {
    CauchyWavelet w{4};

    FifGrid zeros{2, 11, std::vector<double>(2049, 0.0)};
    CHECK(recursion_residual(zeros, zero_problem(), w, 1.0 / 16, 0.5) <= 1e-15);

    auto p0 = tent_problem(0.0);
    FifGrid g0 = sample_grid(p0, 13);
    CHECK(recursion_residual(g0, p0, w, 1.0 / 32, 0.4) <= 1e-8);

    auto p = tent_problem(0.3);
    FifGrid g = sample_grid(p, 14);
    CHECK(recursion_residual(g, p, w, 1.0 / 32, 0.3) <= 1e-5);
}

TEST_CASE("scalogram driver") {
    auto p = tent_problem(0.3);
    FifGrid g = sample_grid(p, 12);
    CauchyWavelet w{4};

    auto single = scalogram(&g, nullptr, w, {1.0 / 16}, {0.5}, CwtMethod::direct);
    CHECK(single.values[0][0] == cwt_direct(g, w, 1.0 / 16, 0.5));

    auto empty = scalogram(&g, nullptr, w, {}, {0.25, 0.5}, CwtMethod::direct);
    CHECK(empty.values.empty());

    auto again = scalogram(&g, nullptr, w, {1.0 / 16}, {0.5}, CwtMethod::direct);
    CHECK(again.values[0][0] == single.values[0][0]);  // bit-reproducible

    CHECK_THROWS_AS(scalogram(&g, nullptr, w, {0.1, 0.2}, {0.5}, CwtMethod::direct), DomainError);
    CHECK_THROWS_AS(scalogram(nullptr, nullptr, w, {0.1}, {0.5}, CwtMethod::direct), DomainError);
}

TEST_CASE("fourier-path envelope shrinks at large scales") {
    auto p = tent_problem(0.3);
    SpectrumEvaluator ev(p, 50);
    CauchyWavelet w{4};
    double w1 = std::abs(cwt_fourier(ev, w, 1.0, 0.5));
    double w4 = std::abs(cwt_fourier(ev, w, 4.0, 0.5));
    CHECK(w4 < w1);
    // O(1/s) envelope from int psi_hat(s w) dw = M!/s.
    double envelope = 24.0 / (2.0 * M_PI * 4.0) * (0.5 / 0.7);
    CHECK(w4 <= envelope);
}

TEST_CASE("scale helpers") {
    auto s = dyadic_scales(3, 5);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 0.125);
    CHECK(s[2] == 0.03125);
    auto t = uniform_translations(5);
    CHECK(t.front() == 0.0);
    CHECK(t.back() == 1.0);
    CHECK_THROWS_AS(dyadic_scales(5, 3), DomainError);
}
