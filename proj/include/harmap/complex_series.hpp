#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace harmap {

using cplx = std::complex<double>;

/// Truncated power series sum_{n=0}^{degree} c_n z^n.
class ComplexSeries {
 public:
  ComplexSeries() : coeffs_(1) {}

  ComplexSeries(std::initializer_list<cplx> coeffs)
      : ComplexSeries(std::vector<cplx>(coeffs)) {}

  explicit ComplexSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("ComplexSeries: empty coefficient list");
    for (const cplx& c : coeffs_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("ComplexSeries: non-finite coefficient");
    }
  }

  static ComplexSeries zero(int degree) {
    if (degree < 0) throw std::invalid_argument("ComplexSeries: negative degree");
    return ComplexSeries(std::vector<cplx>(std::size_t(degree) + 1));
  }

  int degree() const { return int(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  const cplx& operator[](int n) const { return coeffs_[std::size_t(n)]; }

  /// Horner evaluation.
  cplx eval(cplx z) const {
    cplx acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

  ComplexSeries derivative() const {
    if (degree() == 0) return ComplexSeries();
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = double(n) * coeffs_[n];
    return ComplexSeries(std::move(d));
  }

  /// Same series stored to a (not smaller) degree.
  ComplexSeries padded(int degree) const {
    if (degree < this->degree())
      throw std::invalid_argument("ComplexSeries: cannot pad to a smaller degree");
    std::vector<cplx> c(coeffs_.begin(), coeffs_.end());
    c.resize(std::size_t(degree) + 1);
    return ComplexSeries(std::move(c));
  }

 private:
  std::vector<cplx> coeffs_;
};

}  // namespace harmap
