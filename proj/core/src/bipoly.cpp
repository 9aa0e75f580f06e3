#include "gtt/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtt {

BiPoly::BiPoly(const Rat& constant) { add_term(0, 0, constant); }
BiPoly::BiPoly(long constant) { add_term(0, 0, Rat(constant)); }

BiPoly BiPoly::variable_x() { return monomial(1, 0, Rat(1)); }
BiPoly BiPoly::variable_y() { return monomial(0, 1, Rat(1)); }

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("monomial exponents must be >= 0");
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, bool first_variable) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (first_variable) {
      r.add_term(i, 0, p.coeff(i));
    } else {
      r.add_term(0, i, p.coeff(i));
    }
  }
  return r;
}

bool BiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [k, c] : terms_) {
    Rat term = c;
    for (int a = 0; a < k.first; ++a) term *= x;
    for (int b = 0; b < k.second; ++b) term *= y;
    acc += term;
  }
  return acc;
}

namespace {

// Power cache for repeated substitution.
const UniPoly& cached_pow(std::vector<UniPoly>& cache, const UniPoly& base,
                          int n) {
  while (static_cast<int>(cache.size()) <= n) {
    cache.push_back(cache.empty() ? UniPoly(Rat(1)) : cache.back() * base);
  }
  return cache[n];
}

}  // namespace

UniPoly BiPoly::substitute(const UniPoly& for_x, const UniPoly& for_y) const {
  std::vector<UniPoly> px, py;
  UniPoly acc;
  for (const auto& [k, c] : terms_) {
    acc += c * (cached_pow(px, for_x, k.first) * cached_pow(py, for_y, k.second));
  }
  return acc;
}

BiPoly BiPoly::substitute(const BiPoly& for_x, const BiPoly& for_y) const {
  std::vector<BiPoly> px{BiPoly(1L)}, py{BiPoly(1L)};
  auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int n) -> const BiPoly& {
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * base);
    return cache[n];
  };
  BiPoly acc;
  for (const auto& [k, c] : terms_) {
    acc += c * (power(px, for_x, k.first) * power(py, for_y, k.second));
  }
  return acc;
}

BiPoly BiPoly::derivative_x(int order) const {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  BiPoly r = *this;
  for (int step = 0; step < order; ++step) {
    BiPoly d;
    for (const auto& [k, c] : r.terms_) {
      if (k.first > 0) d.add_term(k.first - 1, k.second, Rat(k.first) * c);
    }
    r = std::move(d);
  }
  return r;
}

UniPoly BiPoly::coeff_of_x(int i) const {
  std::vector<Rat> coeffs;
  for (const auto& [k, c] : terms_) {
    if (k.first != i) continue;
    if (static_cast<int>(coeffs.size()) <= k.second) coeffs.resize(k.second + 1, Rat(0));
    coeffs[k.second] = c;
  }
  return UniPoly(std::move(coeffs));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      prod.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return prod;
}

BiPoly operator*(const Rat& c, const BiPoly& p) {
  BiPoly r;
  if (c == 0) return r;
  r = p;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

BiPoly BiPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("pow exponent must be >= 0");
  BiPoly result(1L);
  BiPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  // Lexicographic leading term of b (largest key in map order).
  const auto& bt = b.terms();
  const auto blead = std::prev(bt.end());
  BiPoly rem = a, quot;
  while (!rem.is_zero()) {
    const auto rlead = std::prev(rem.terms().end());
    const int di = rlead->first.first - blead->first.first;
    const int dj = rlead->first.second - blead->first.second;
    if (di < 0 || dj < 0) throw std::domain_error("inexact polynomial division");
    const BiPoly t = BiPoly::monomial(di, dj, rlead->second / blead->second);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

}  // namespace gtt
