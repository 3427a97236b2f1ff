#ifndef FIFWAVE_QUADRATURE_HPP
#define FIFWAVE_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace fif {

// Compensated (Kahan) accumulator; fixed-order deterministic summation.
template <typename T>
class KahanSum {
  public:
    void add(T v) {
        T t = sum_ + v;
        comp_ += (std::abs(sum_) >= std::abs(v)) ? (sum_ - t) + v : (v - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

  private:
    T sum_{};
    T comp_{};
};

// 12-point Gauss-Legendre nodes/weights on [-1,1].
struct GaussLegendre12 {
    static const std::vector<double>& nodes();
    static const std::vector<double>& weights();
};

// Composite 12-point Gauss-Legendre over [a,b] with panels no wider
// than max_panel.
std::complex<double> integrate_gl(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, double max_panel);

double integrate_gl_real(const std::function<double(double)>& f,
                         double a, double b, double max_panel);

// Composite Simpson over uniformly sampled values on [a,b]; an odd
// interval count gets a 3/8 closing rule on the last three intervals.
std::complex<double> simpson_uniform(const std::vector<std::complex<double>>& g,
                                     double a, double b);

}  // namespace fif

#endif
