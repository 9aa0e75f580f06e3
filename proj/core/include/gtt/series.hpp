#pragma once

#include <vector>

#include "gtt/bipoly.hpp"

namespace gtt {

// Power series in t truncated at t^order, with coefficients in Q[x, y].
class Series {
 public:
  explicit Series(int order);
  Series(std::vector<BiPoly> coeffs, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BiPoly& at(int n) const;
  void set(int n, BiPoly c);
  const std::vector<BiPoly>& coeffs() const { return coeffs_; }

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  // Truncated Cauchy product; the result keeps the smaller order.
  friend Series operator*(const Series& a, const Series& b);
  bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<BiPoly> coeffs_;  // index n = coefficient of t^n
};

// Quotient num/den to the order of num. The constant coefficient of den must
// be invertible: either a nonzero rational constant, or a polynomial that
// exactly divides every intermediate numerator (std::domain_error otherwise).
Series series_divide(const Series& num, const Series& den);

}  // namespace gtt
