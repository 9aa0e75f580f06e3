#include "gtt/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtt {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(order + 1);
}

Series::Series(std::vector<BiPoly> coeffs, int order) : Series(order) {
  for (std::size_t n = 0; n < coeffs.size() && n <= static_cast<std::size_t>(order); ++n) {
    coeffs_[n] = std::move(coeffs[n]);
  }
}

const BiPoly& Series::at(int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
  return coeffs_[n];
}

void Series::set(int n, BiPoly c) {
  if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
  coeffs_[n] = std::move(c);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) {
    BiPoly acc;
    for (int i = 0; i <= n; ++i) acc += a.coeffs_[i] * b.coeffs_[n - i];
    r.coeffs_[n] = std::move(acc);
  }
  return r;
}

Series series_divide(const Series& num, const Series& den) {
  const BiPoly& d0 = den.at(0);
  if (d0.is_zero()) {
    throw std::domain_error("series division: constant term of denominator is zero");
  }
  const bool scalar = d0.is_constant();
  const Rat inv = scalar ? Rat(1) / d0.constant_term() : Rat(0);
  Series q(num.order());
  for (int n = 0; n <= num.order(); ++n) {
    BiPoly acc = num.at(n);
    for (int i = 0; i < n; ++i) {
      const int j = n - i;  // den coefficients beyond its order are zero
      if (j <= den.order()) acc -= q.at(i) * den.at(j);
    }
    q.set(n, scalar ? inv * acc : exact_div(acc, d0));
  }
  return q;
}

}  // namespace gtt
