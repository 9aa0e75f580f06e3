#include "gtt/roots.hpp"

#include <stdexcept>

namespace gtt {

namespace {

// Divides out the integer content, keeping the sign. Chain elements may only
// be scaled by positive rationals: a sign flip would destroy the sign
// variation structure the root count reads off.
UniPoly positive_primitive(const UniPoly& p) {
  if (p.is_zero()) return p;
  Int num_gcd(0), den_lcm(1);
  for (const Rat& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale < 0) scale = -scale;
  return scale * p;
}

std::vector<UniPoly> sturm_chain(const UniPoly& squarefree) {
  std::vector<UniPoly> chain;
  chain.push_back(positive_primitive(squarefree));
  if (squarefree.degree() >= 1) {
    chain.push_back(positive_primitive(squarefree.derivative()));
    while (chain.back().degree() >= 1) {
      auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
      if (r.is_zero()) break;  // cannot happen for square-free input
      chain.push_back(positive_primitive(-r));
    }
  }
  return chain;
}

// Sign of p at a finite point or at -inf / +inf.
int sign_at(const UniPoly& p, const std::optional<Rat>& point, bool at_minus_inf) {
  if (p.is_zero()) return 0;
  if (point.has_value()) return sgn(p.eval(*point));
  const int lead = sgn(p.leading_coeff());
  if (at_minus_inf) return p.degree() % 2 == 0 ? lead : -lead;
  return lead;
}

int sign_variations(const std::vector<UniPoly>& chain,
                    const std::optional<Rat>& point, bool at_minus_inf) {
  int variations = 0, prev = 0;
  for (const UniPoly& p : chain) {
    const int s = sign_at(p, point, at_minus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Removes a root at a finite endpoint so the Sturm count over (a, b] matches
// the open interval.
UniPoly deflate_root(UniPoly q, const Rat& point) {
  while (!q.is_zero() && q.degree() >= 1 && q.eval(point) == 0) {
    q = exact_div(q, UniPoly(std::vector<Rat>{-point, Rat(1)}));
  }
  return q;
}

}  // namespace

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
  if (p.degree() == 0) return UniPoly(Rat(1));
  const UniPoly g = gcd(p, p.derivative());
  UniPoly q = exact_div(p, g);
  return (Rat(1) / q.leading_coeff()) * q;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero polynomial");
  std::vector<std::pair<UniPoly, int>> factors;
  if (p.degree() == 0) return factors;
  const UniPoly g = gcd(p, p.derivative());
  UniPoly w = exact_div(p, g);
  UniPoly z = exact_div(p.derivative(), g) - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly a = gcd(w, z);
    if (a.degree() > 0) factors.emplace_back(a, i);
    w = exact_div(w, a);
    z = exact_div(z, a) - w.derivative();
    ++i;
  }
  return factors;
}

int count_distinct_real_roots(const UniPoly& p, std::optional<Rat> a,
                              std::optional<Rat> b) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (a.has_value() && b.has_value() && !(*a < *b)) {
    throw std::invalid_argument("root count requires a < b");
  }
  UniPoly q = squarefree_part(p);
  if (a.has_value()) q = deflate_root(std::move(q), *a);
  if (b.has_value()) q = deflate_root(std::move(q), *b);
  if (q.degree() < 1) return 0;
  const auto chain = sturm_chain(q);
  return sign_variations(chain, a, /*at_minus_inf=*/true) -
         sign_variations(chain, b, /*at_minus_inf=*/false);
}

int count_real_roots_with_multiplicity(const UniPoly& p, std::optional<Rat> a,
                                       std::optional<Rat> b) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  int total = 0;
  for (const auto& [q, mult] : squarefree_decomposition(p)) {
    total += mult * count_distinct_real_roots(q, a, b);
  }
  return total;
}

bool all_roots_real(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("all_roots_real of zero polynomial");
  if (p.degree() <= 0) return true;
  return count_real_roots_with_multiplicity(p) == p.degree();
}

}  // namespace gtt
