#include "gtt/tch.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>

#include "gtt/rational.hpp"

namespace gtt {

namespace {

BiPoly one_plus_y_power(int j) {
  BiPoly base = BiPoly(1) + BiPoly::variable_y();
  return base.pow(j);
}

BiPoly one_plus_x_power(int i) {
  BiPoly base = BiPoly(1) + BiPoly::variable_x();
  return base.pow(i);
}

}  // namespace

TchFamily::TchFamily(Template L, int cross_polytope_guard)
    : L_(std::move(L)), guard_(cross_polytope_guard), census_(census(L_)) {
  if (guard_ < 0) throw std::invalid_argument("cross-polytope guard must be nonnegative");
  auto violations = validate_template(L_);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid template: " + violations.front());
  }
}

BiPoly TchFamily::fn(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  return fn_locked(n);
}

BiPoly TchFamily::fn_locked(int n) {
  if (n < 0) throw std::invalid_argument("f_n index must be nonnegative");
  auto it = fn_cache_.find(n);
  if (it != fn_cache_.end()) return it->second;
  const int k = L_.k;
  for (int m = 0; m <= n; ++m) {
    if (fn_cache_.count(m)) continue;
    BiPoly value;
    if (m <= k) {
      value = one_plus_x_power(m);
    } else {
      // Each face of L outside the boundary complex, grouped by how many of
      // its vertices are boundary (i) versus interior (j), contributes a
      // signed (1+y)^j multiple of an earlier term. i <= k always: a face
      // containing all of 0..k would force the full boundary face into L.
      for (const auto& [key, count] : census_.counts) {
        const auto [i, j] = key;
        const int sign = ((k + 1 - i - j) % 2 == 0) ? 1 : -1;
        BiPoly term = Rat(static_cast<long>(count) * sign) * one_plus_y_power(j);
        value += term * fn_cache_.at(m - k - 1 + i);
      }
    }
    fn_cache_.emplace(m, std::move(value));
  }
  return fn_cache_.at(n);
}

BiPoly TchFamily::fn_inclusion_exclusion(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  return fie_locked(n);
}

BiPoly TchFamily::fie_locked(int n) {
  if (n < 0) throw std::invalid_argument("f_n index must be nonnegative");
  auto it = fie_cache_.find(n);
  if (it != fie_cache_.end()) return it->second;
  const int k = L_.k;
  const auto facet_list = L_.complex.facets();
  const int m_facets = static_cast<int>(facet_list.size());
  if (m_facets > 24) {
    throw std::invalid_argument("inclusion-exclusion route limited to 24 facets");
  }
  // Precompute, per nonempty facet subset, the boundary/interior split of the
  // subset's intersection. The intersection of faces is always a face.
  std::vector<std::pair<int, int>> splits;
  std::vector<int> signs;
  for (unsigned mask = 1; mask < (1u << m_facets); ++mask) {
    Face common;
    bool first = true;
    for (int f = 0; f < m_facets; ++f) {
      if (!(mask & (1u << f))) continue;
      if (first) {
        common = facet_list[f];
        first = false;
      } else {
        Face next;
        std::set_intersection(common.begin(), common.end(), facet_list[f].begin(),
                              facet_list[f].end(), std::back_inserter(next));
        common = std::move(next);
      }
    }
    int boundary = 0;
    for (VertexId v : common) {
      if (v <= k) ++boundary;
    }
    splits.emplace_back(boundary, static_cast<int>(common.size()) - boundary);
    signs.push_back(__builtin_popcount(mask) % 2 == 1 ? 1 : -1);
  }
  for (int m = 0; m <= n; ++m) {
    if (fie_cache_.count(m)) continue;
    BiPoly value;
    if (m <= k) {
      value = one_plus_x_power(m);
    } else {
      for (std::size_t s = 0; s < splits.size(); ++s) {
        const auto [bd, in] = splits[s];
        BiPoly term = Rat(signs[s]) * one_plus_y_power(in);
        value += term * fie_cache_.at(m - k - 1 + bd);
      }
    }
    fie_cache_.emplace(m, std::move(value));
  }
  return fie_cache_.at(n);
}

BiPoly TchFamily::i_hat(int j) {
  std::lock_guard<std::mutex> lock(mu_);
  return i_hat_locked(j);
}

BiPoly TchFamily::i_hat_locked(int j) {
  if (j < 0) throw std::invalid_argument("I_j index must be nonnegative");
  auto it = ihat_cache_.find(j);
  if (it != ihat_cache_.end()) return it->second;
  BiPoly value;
  for (int n = 0; n <= j; ++n) {
    Rat c = binom(j, n);
    if ((j - n) % 2 != 0) c = -c;
    value += c * fn_locked(n);
  }
  ihat_cache_.emplace(j, value);
  return value;
}

BiPoly TchFamily::flag_f_from_counts(const SimplicialComplex& K) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto fv = f_vector(K);
  BiPoly total;
  for (std::size_t j = 0; j < fv.size(); ++j) {
    total += Rat(static_cast<long>(fv[j])) * i_hat_locked(static_cast<int>(j));
  }
  return total;
}

std::vector<BiPoly> TchFamily::denominator_poly(bool for_f) {
  const int k = L_.k;
  const BiPoly magic = magic_polynomial(L_);
  std::vector<BiPoly> A(k + 2);
  // Substitute u -> -1/t (f case) or u -> -(1+t)/t, v -> -1-y into the magic
  // polynomial and multiply by -(-t)^{k+1}; every term lands on a nonnegative
  // power of t because u-exponents never exceed k+1.
  for (const auto& [key, c] : magic.terms()) {
    const auto [i, j] = key;
    const int sign = ((i + j + k) % 2 == 0) ? 1 : -1;
    BiPoly base = (c * Rat(sign)) * one_plus_y_power(j);
    if (for_f) {
      A.at(k + 1 - i) += base;
    } else {
      for (int a = 0; a <= i; ++a) {
        A.at(k + 1 - i + a) += binom(i, a) * base;
      }
    }
  }
  if (!(A.at(0) == BiPoly(1))) {
    throw std::logic_error("series denominator must have constant term 1");
  }
  return A;
}

bool TchFamily::f_series_identity_holds(int N) {
  std::lock_guard<std::mutex> lock(mu_);
  const int k = L_.k;
  if (N < k + 1) throw std::invalid_argument("series order must exceed the template dimension");
  std::vector<BiPoly> fs(N + 1);
  for (int n = 0; n <= N; ++n) fs[n] = fn_locked(n);
  Series S(std::move(fs), N);

  Series M(N);
  M.set(0, BiPoly(1));
  M.set(1, -(BiPoly(1) + BiPoly::variable_x()));

  Series A(denominator_poly(true), N);

  // (-t)^{k+1} r_L(-1-x, -1-y) contributes a single coefficient at t^{k+1}.
  const BiPoly magic = magic_polynomial(L_);
  BiPoly b;
  for (const auto& [key, c] : magic.terms()) {
    const auto [i, j] = key;
    const int sign = ((k + 1 + i + j) % 2 == 0) ? 1 : -1;
    b += (c * Rat(sign)) * (one_plus_x_power(i) * one_plus_y_power(j));
  }
  Series rhs = A;
  rhs.set(k + 1, rhs.at(k + 1) + b);

  return S * M * A == rhs;
}

bool TchFamily::ihat_series_identity_holds(int N) {
  std::lock_guard<std::mutex> lock(mu_);
  const int k = L_.k;
  if (N < k + 1) throw std::invalid_argument("series order must exceed the template dimension");
  std::vector<BiPoly> is(N + 1);
  for (int j = 0; j <= N; ++j) is[j] = i_hat_locked(j);
  Series S(std::move(is), N);

  Series M(N);
  M.set(0, BiPoly(1));
  M.set(1, -BiPoly::variable_x());

  Series A(denominator_poly(false), N);

  const BiPoly magic = magic_polynomial(L_);
  BiPoly b;
  for (const auto& [key, c] : magic.terms()) {
    const auto [i, j] = key;
    const int sign = ((k + 1 + i + j) % 2 == 0) ? 1 : -1;
    b += (c * Rat(sign)) * (one_plus_x_power(i) * one_plus_y_power(j));
  }
  Series rhs = A;
  rhs.set(k + 1, rhs.at(k + 1) + b);

  return S * M * A == rhs;
}

std::vector<UniPoly> TchFamily::recurrence_coefficients() {
  std::lock_guard<std::mutex> lock(mu_);
  return recurrence_locked();
}

std::vector<UniPoly> TchFamily::recurrence_locked() {
  if (!rec_coeffs_.empty()) return rec_coeffs_;
  const int k = L_.k;
  const BiPoly magic = magic_polynomial(L_);
  // Expand (-2t)^{k+1} r_L(-(1+t)/(2t), -(1+x)/2) as a polynomial in t with
  // coefficients in Q[x]; its constant coefficient is forced to -1 by the
  // u^{k+1} term, and the t^j coefficient for j >= 1 is the j-th recurrence
  // coefficient.
  std::vector<UniPoly> q(k + 2);
  const UniPoly one_plus_x({Rat(1), Rat(1)});
  for (const auto& [key, c] : magic.terms()) {
    const auto [i, j] = key;
    const int sign = ((k + 1 + i + j) % 2 == 0) ? 1 : -1;
    const Rat scale = c * Rat(sign) * pow2(k + 1 - i - j);
    const UniPoly xpart = scale * one_plus_x.pow(j);
    for (int a = 0; a <= i; ++a) {
      q.at(k + 1 - i + a) += binom(i, a) * xpart;
    }
  }
  if (!(q.at(0) == UniPoly(-1))) {
    throw std::logic_error("recurrence expansion must have constant coefficient -1");
  }
  std::vector<UniPoly> p(q.begin() + 1, q.end());

  // Cross-check against the characteristic polynomial computed through
  // generic two-variable substitution instead of the term expansion above.
  BiPoly lhs = Rat(-1) * BiPoly::monomial(k + 1, 0, Rat(1));
  for (int j = 1; j <= k + 1; ++j) {
    lhs += BiPoly::from_unipoly(p[j - 1], false) * BiPoly::monomial(k + 1 - j, 0, Rat(1));
  }
  const Rat half(1, 2);
  BiPoly u_image = (-half) * (BiPoly(1) + BiPoly::variable_x());
  BiPoly v_image = (-half) * (BiPoly(1) + BiPoly::variable_y());
  BiPoly rhs = pow2(k + 1) * magic.substitute(u_image, v_image);
  if ((k + 1) % 2 != 0) rhs = -rhs;
  if (!(lhs == rhs)) {
    throw std::logic_error("recurrence coefficients disagree with the characteristic polynomial");
  }

  rec_coeffs_ = std::move(p);
  return rec_coeffs_;
}

UniPoly TchFamily::t_direct(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  return t_direct_locked(n);
}

UniPoly TchFamily::t_direct_locked(int n) {
  if (n < 0) throw std::invalid_argument("T index must be nonnegative");
  const UniPoly sub({Rat(-1, 2), Rat(1, 2)});
  UniPoly total;
  for (int m = 0; m <= n; ++m) {
    Rat c = binom(n, m) * pow2(m);
    if ((n - m) % 2 != 0) c = -c;
    total += c * fn_locked(m).substitute(sub, sub);
  }
  return total;
}

UniPoly TchFamily::t_recurrence(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  if (n < 0) throw std::invalid_argument("T index must be nonnegative");
  auto it = trec_cache_.find(n);
  if (it != trec_cache_.end()) return it->second;
  const int k = L_.k;
  const auto p = recurrence_locked();
  for (int m = 0; m <= n; ++m) {
    if (trec_cache_.count(m)) continue;
    UniPoly value;
    if (m <= k) {
      value = UniPoly::monomial(m, Rat(1));
    } else {
      for (int j = 1; j <= k + 1; ++j) {
        value += p[j - 1] * trec_cache_.at(m - j);
      }
    }
    trec_cache_.emplace(m, std::move(value));
  }
  return trec_cache_.at(n);
}

UniPoly TchFamily::t_from_cross_polytope(int n) {
  if (n < 0) throw std::invalid_argument("T index must be nonnegative");
  if (n > guard_) {
    throw std::invalid_argument("cross-polytope route guarded at n <= " +
                                std::to_string(guard_));
  }
  const SimplicialComplex cross = cross_polytope_boundary(n);
  const auto plan = default_plan(cross, L_);
  const auto result = tchebyshev_triangulation(cross, L_, plan);
  const UniPoly F = F_polynomial(result.complex);

  // Independent form through the h-vector of the replaced sphere.
  const UniPoly h = h_polynomial(result.complex);
  const UniPoly x_minus({Rat(-1), Rat(1)});
  const UniPoly x_plus({Rat(1), Rat(1)});
  UniPoly hform;
  for (int i = 0; i <= n; ++i) {
    hform += h.coeff(i) * (x_minus.pow(i) * x_plus.pow(n - i));
  }
  hform = pow2(-n) * hform;
  if (!(F == hform)) {
    throw std::logic_error("cross-polytope F-polynomial disagrees with its h-vector form");
  }
  return F;
}

UniPoly TchFamily::u_transform_of_power(int j, int N) {
  std::lock_guard<std::mutex> lock(mu_);
  return u_power_locked(j, N);
}

UniPoly TchFamily::u_power_locked(int j, int N) {
  if (j < 1 || j > L_.k + 1) throw std::invalid_argument("U order j must lie in 1..k+1");
  if (N < 0) throw std::invalid_argument("power must be nonnegative");
  const UniPoly sub({Rat(-1, 2), Rat(1, 2)});
  UniPoly total;
  for (int m = 0; m <= N; ++m) {
    Rat c = binom(N, m) * pow2(1 - j + m);
    if ((N - m) % 2 != 0) c = -c;
    total += c * fn_locked(m).derivative_x(j - 1).substitute(sub, sub);
  }
  return total;
}

UniPoly TchFamily::u_direct(int j, int n) {
  if (n < 0) throw std::invalid_argument("U index must be nonnegative");
  std::lock_guard<std::mutex> lock(mu_);
  return u_power_locked(j, n + j - 1);
}

UniPoly TchFamily::u_recurrence(int j, int n) {
  if (j < 1 || j > L_.k + 1) throw std::invalid_argument("U order j must lie in 1..k+1");
  if (n < 0) throw std::invalid_argument("U index must be nonnegative");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = urec_cache_.find({j, n});
  if (it != urec_cache_.end()) return it->second;
  const int k = L_.k;
  const auto p = recurrence_locked();
  for (int m = 0; m <= n; ++m) {
    if (urec_cache_.count({j, m})) continue;
    UniPoly value;
    if (m <= k) {
      value = u_power_locked(j, m + j - 1);
    } else {
      for (int i = 1; i <= k + 1; ++i) {
        value += p[i - 1] * urec_cache_.at({j, m - i});
      }
    }
    urec_cache_.emplace(std::make_pair(j, m), std::move(value));
  }
  return urec_cache_.at({j, n});
}

UniPoly TchFamily::u_from_cross_polytope(int j, int n) {
  if (j < 1 || j > L_.k + 1) throw std::invalid_argument("U order j must lie in 1..k+1");
  if (n < 0) throw std::invalid_argument("U index must be nonnegative");
  const int d = n + j - 1;
  if (d > guard_) {
    throw std::invalid_argument("cross-polytope route guarded at n + j - 1 <= " +
                                std::to_string(guard_));
  }
  const SimplicialComplex cross = cross_polytope_boundary(d);
  const auto originals = cross.faces_of_dim(j - 2);
  const auto plan = default_plan(cross, L_);
  const auto result = tchebyshev_triangulation(cross, L_, plan);
  // Faces with j-1 vertices have dimension below k, so replacement never
  // removes them; their links in the replaced complex are defined.
  UniPoly total;
  for (const auto& s : originals) {
    total += F_polynomial(link(result.complex, s));
  }
  return (pow2(1 - j) * factorial(j - 1)) * total;
}

UniPoly classical_chebyshev_t(int n) {
  if (n < 0) throw std::invalid_argument("index must be nonnegative");
  UniPoly prev(1);
  if (n == 0) return prev;
  UniPoly cur = UniPoly::variable();
  const UniPoly two_x = UniPoly::monomial(1, Rat(2));
  for (int m = 2; m <= n; ++m) {
    UniPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly classical_chebyshev_u(int n) {
  if (n < 0) throw std::invalid_argument("index must be nonnegative");
  UniPoly prev(1);
  if (n == 0) return prev;
  UniPoly cur = UniPoly::monomial(1, Rat(2));
  const UniPoly two_x = UniPoly::monomial(1, Rat(2));
  for (int m = 2; m <= n; ++m) {
    UniPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace gtt
