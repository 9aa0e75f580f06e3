#pragma once

#include <utility>
#include <vector>

#include "gtt/rational.hpp"

namespace gtt {

// Univariate polynomial over Q with dense coefficients in increasing degree.
// Invariant: coeffs().empty() or coeffs().back() != 0. The zero polynomial has
// degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rat& constant);
  explicit UniPoly(long constant);
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly variable();
  static UniPoly monomial(int n, const Rat& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading_coeff() const;  // 0 for the zero polynomial

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  UniPoly pow(int n) const;
  // this(g): substitution of g for the variable.
  UniPoly compose(const UniPoly& g) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& c, const UniPoly& p);
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

// Euclidean division: a = q*b + r with deg r < deg b. Requires b != 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Exact quotient a/b; throws std::domain_error when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) == 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

std::string unipoly_to_display(const UniPoly& p, const std::string& var = "x");

}  // namespace gtt
