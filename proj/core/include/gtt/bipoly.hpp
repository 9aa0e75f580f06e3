#pragma once

#include <map>
#include <utility>

#include "gtt/rational.hpp"
#include "gtt/unipoly.hpp"

namespace gtt {

// Bivariate polynomial over Q, sparse. Keys are (exponent of first variable,
// exponent of second variable); stored coefficients are nonzero.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  explicit BiPoly(const Rat& constant);
  explicit BiPoly(long constant);

  static BiPoly variable_x();
  static BiPoly variable_y();
  static BiPoly monomial(int i, int j, const Rat& c);
  // Embeds a univariate polynomial as a polynomial in the first (or second)
  // variable.
  static BiPoly from_unipoly(const UniPoly& p, bool first_variable = true);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0, 0).
  Rat constant_term() const { return coeff(0, 0); }
  int total_degree() const;  // -1 for the zero polynomial
  int degree_x() const;
  int degree_y() const;
  const std::map<Key, Rat>& terms() const { return terms_; }
  Rat coeff(int i, int j) const;

  Rat eval(const Rat& x, const Rat& y) const;
  // Substitutes univariate polynomials (in a common new variable) for both
  // variables.
  UniPoly substitute(const UniPoly& for_x, const UniPoly& for_y) const;
  // Substitutes bivariate polynomials for both variables.
  BiPoly substitute(const BiPoly& for_x, const BiPoly& for_y) const;
  BiPoly derivative_x(int order = 1) const;
  // Coefficient of x^i as a univariate polynomial in the second variable.
  UniPoly coeff_of_x(int i) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rat& c, const BiPoly& p);
  BiPoly pow(int n) const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

 private:
  void add_term(int i, int j, const Rat& c);
  std::map<Key, Rat> terms_;
};

// Exact quotient a/b in Q[x, y]; throws std::domain_error when b does not
// divide a. Uses lexicographic term order.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

}  // namespace gtt
