#include "gtt/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gtt {

UniPoly::UniPoly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(long constant) : UniPoly(Rat(constant)) {}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::variable() { return monomial(1, Rat(1)); }

UniPoly UniPoly::monomial(int n, const Rat& c) {
  if (n < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (c == 0) return UniPoly();
  std::vector<Rat> v(n + 1, Rat(0));
  v[n] = c;
  return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[i];
}

Rat UniPoly::leading_coeff() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  }
  return UniPoly(std::move(d));
}

UniPoly UniPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("pow exponent must be >= 0");
  UniPoly result(Rat(1));
  UniPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * g + UniPoly(*it);
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(prod));
}

UniPoly operator*(const Rat& c, const UniPoly& p) {
  if (c == 0) return UniPoly();
  UniPoly r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  UniPoly r = a;
  if (a.degree() < b.degree()) return {UniPoly(), r};
  std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
  const Rat lead = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const Rat c = r.leading_coeff() / lead;
    q[shift] = c;
    r -= UniPoly::monomial(shift, c) * b;
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return (Rat(1) / x.leading_coeff()) * x;
}

std::string unipoly_to_display(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat c = p.coeff(i);
    if (c == 0) continue;
    if (!first) out << (sgn(c) > 0 ? " + " : " - ");
    if (first && sgn(c) < 0) out << "-";
    first = false;
    const Rat a = abs(c);
    if (i == 0 || a != 1) out << rational_to_string(a);
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace gtt
