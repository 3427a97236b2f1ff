#include <doctest.h>

#include <cmath>

#include "fifwave/errors.hpp"
#include "fifwave/wavelet.hpp"

using namespace fif;

TEST_CASE("frequency response on the positive half-line") {
    CauchyWavelet w{4};
    CHECK(wavelet_hat(w, 0.0) == 0.0);
    CHECK(wavelet_hat(w, -1.0) == 0.0);
    CHECK(wavelet_hat(w, 4.0) == doctest::Approx(256.0 * std::exp(-4.0)).epsilon(1e-15));
    // The maximizer sits at omega = M.
    CHECK(wavelet_hat(w, 4.0) > wavelet_hat(w, 3.9));
    CHECK(wavelet_hat(w, 4.0) > wavelet_hat(w, 4.1));
}

TEST_CASE("admissibility surrogates") {
    CauchyWavelet w{3};
    for (int e = 10; e <= 20; e += 2) {
        double om = std::pow(2.0, -e);
        CHECK(wavelet_hat(w, om) / std::pow(om, w.M) == doctest::Approx(1.0).epsilon(1e-3));
    }
    CHECK(wavelet_hat(w, 1e3) * std::pow(1e3, 10.0) <= 1e-300);
}

TEST_CASE("closed-form time wavelet") {
    CauchyWavelet w{2};
    auto v = wavelet_time(w, 0.0);
    CHECK(v.real() == doctest::Approx(2.0 / (2.0 * M_PI)).epsilon(1e-15));
    CHECK(v.imag() == doctest::Approx(0.0));

    // |psi(x)| |x|^{M+1} -> M!/(2 pi).
    CauchyWavelet w4{4};
    double lim = 24.0 / (2.0 * M_PI);
    CHECK(std::abs(wavelet_time(w4, 1e5)) * std::pow(1e5, 5.0) == doctest::Approx(lim).epsilon(1e-8));
}

TEST_CASE("numeric inverse transform agrees with the closed form") {
    for (int M : {2, 4}) {
        CauchyWavelet w{M};
        for (double x : {-6.0, -1.3, 0.0, 0.4, 7.9})
            CHECK(std::abs(wavelet_time_numeric(w, x) - wavelet_time(w, x)) <= 1e-10);
    }
}

TEST_CASE("zero mean") {
    CauchyWavelet w{3};
    auto r = wavelet_integral(w, 1e4);
    CHECK(std::abs(r.value) <= 1e-8);
    CHECK(r.tail_bound <= 1e-8);
    CHECK_THROWS_AS(wavelet_integral(w, 0.5), DomainError);
}

TEST_CASE("scaled moment split: parts sum to the full gamma integral") {
    for (int M : {3, 4, 6})
        for (int p = 2; p <= M - 1; ++p)
            for (double s : {0.5, 0.125, 0.01}) {
                auto split = scaled_moment_split(M, p, s);
                double full = std::pow(s, p - 1) * std::tgamma(static_cast<double>(M - p + 1));
                CHECK(split.inner + split.outer == doctest::Approx(full).epsilon(1e-13));
                CHECK(split.inner > 0.0);  // the inner part is small, not zero
            }
    CHECK_THROWS_AS(scaled_moment_split(4, 0, 0.1), DomainError);
    CHECK_THROWS_AS(scaled_moment_split(4, 6, 0.1), DomainError);
}

TEST_CASE("outer closed form matches quadrature") {
    for (int p : {2, 3})
        for (double s : {0.125, 0.0625}) {
            auto split = scaled_moment_split(4, p, s);
            CHECK(scaled_moment_outer_numeric(4, p, s) ==
                  doctest::Approx(split.outer).epsilon(1e-11));
        }
}

TEST_CASE("hat cutoff bounds the tail") {
    CauchyWavelet w{4};
    double z = wavelet_hat_cutoff(w, 1e-16);
    double peak = std::pow(4.0, 4) * std::exp(-4.0);
    CHECK(wavelet_hat(w, z) <= 1.01e-16 * peak);
    CHECK(wavelet_hat(w, 0.9 * z) > 1e-18 * peak);
}
