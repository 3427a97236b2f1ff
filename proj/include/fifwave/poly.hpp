#ifndef FIFWAVE_POLY_HPP
#define FIFWAVE_POLY_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace fif {

// Dense polynomial c0 + c1 x + ... + cm x^m on [0,1].
class Poly {
  public:
    Poly() : coeffs_{0.0} {}
    explicit Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    const std::vector<double>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() == 1) return Poly{};
        std::vector<double> d(coeffs_.size() - 1);
        for (std::size_t r = 1; r < coeffs_.size(); ++r) d[r - 1] = static_cast<double>(r) * coeffs_[r];
        return Poly(std::move(d));
    }

    // Sum of coefficients = value at x=1.
    double coeff_sum() const {
        double s = 0.0;
        for (double c : coeffs_) s += c;
        return s;
    }

    // sup_{[0,1]} |p| bounded by sum of |c_r|.
    double sup_bound() const {
        double s = 0.0;
        for (double c : coeffs_) s += std::abs(c);
        return s;
    }

    // sup_{[0,1]} |p'| bounded by sum of r |c_r|.
    double derivative_sup_bound() const {
        double s = 0.0;
        for (std::size_t r = 1; r < coeffs_.size(); ++r) s += static_cast<double>(r) * std::abs(coeffs_[r]);
        return s;
    }

    // Grid estimate of sup_{[0,1]} |p'| on `points` samples.
    double derivative_sup_grid(std::size_t points = 1025) const {
        Poly d = derivative();
        double best = 0.0;
        for (std::size_t i = 0; i < points; ++i) {
            double x = static_cast<double>(i) / static_cast<double>(points - 1);
            best = std::max(best, std::abs(d(x)));
        }
        return best;
    }

    // Exact integral over [0,1].
    double integral01() const {
        double s = 0.0;
        for (std::size_t r = 0; r < coeffs_.size(); ++r) s += coeffs_[r] / static_cast<double>(r + 1);
        return s;
    }

    // Upper bound for the L1 norm on [0,1].
    double abs_integral_bound() const {
        double s = 0.0;
        for (std::size_t r = 0; r < coeffs_.size(); ++r) s += std::abs(coeffs_[r]) / static_cast<double>(r + 1);
        return s;
    }

  private:
    std::vector<double> coeffs_;
};

}  // namespace fif

#endif
