#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "gtt/series.hpp"
#include "gtt/templates.hpp"
#include "gtt/triangulate.hpp"

namespace gtt {

// Polynomial family attached to a template L of dimension k. Central objects:
//
//  - f_n(x, y): two-variable face count of the replaced (n-1)-simplex, where
//    x tracks original vertices and y tracks subdivision vertices. Equal to
//    (1+x)^n for n <= k; beyond that it satisfies a linear recurrence driven
//    by the faces of L outside the simplex boundary.
//  - I_j(x, y): binomial transform of the f_n; the flag face count of any
//    replaced complex K is sum_j f_{j-1}(K) I_j(x, y).
//  - T_n(x): one-variable specialization whose sequence satisfies a depth
//    k+1 linear recurrence; equals the F-polynomial of the replaced boundary
//    of the n-dimensional cross-polytope.
//  - U_n^{(j)}(x): derivative variants of the T-sequence (j = 1 gives T).
//
// Values are cached; the cache is mutex-protected, so concurrent lookups are
// safe and recomputation is idempotent.
class TchFamily {
 public:
  explicit TchFamily(Template L, int cross_polytope_guard = 7);

  const Template& tmpl() const { return L_; }
  int k() const { return L_.k; }
  int cross_polytope_guard() const { return guard_; }

  BiPoly fn(int n);
  BiPoly fn_inclusion_exclusion(int n);
  BiPoly i_hat(int j);
  BiPoly flag_f_from_counts(const SimplicialComplex& K);

  // Checks sum_n f_n t^n against its closed rational form up to order N by
  // multiplying the denominator through (exact, no series division).
  bool f_series_identity_holds(int N);
  // Same for sum_j I_j t^j.
  bool ihat_series_identity_holds(int N);

  // p_1..p_{k+1} with T_n = sum_j p_j T_{n-j} for n > k. The expansion
  // producing them must have constant coefficient -1, and the companion
  // characteristic polynomial must match the magic polynomial under the
  // standard substitution; both are asserted.
  std::vector<UniPoly> recurrence_coefficients();

  UniPoly t_direct(int n);
  UniPoly t_recurrence(int n);
  // F-polynomial of the replaced cross-polytope boundary (default plan).
  // Also asserts the h-vector form 2^{-n} sum_i h_i (x-1)^i (x+1)^{n-i}.
  // Guarded: n <= cross_polytope_guard.
  UniPoly t_from_cross_polytope(int n);

  // 1 <= j <= k+1.
  UniPoly u_direct(int j, int n);
  UniPoly u_recurrence(int j, int n);
  // 2^{1-j} (j-1)! sum over (j-1)-vertex faces s of the cross-polytope
  // boundary of F(link of s in the replaced complex). Guarded:
  // n + j - 1 <= cross_polytope_guard.
  UniPoly u_from_cross_polytope(int j, int n);
  // Image of x^N under the scaled transform behind the U-sequence; zero for
  // N <= j-2, equals u_direct(j, N-j+1) for N >= j-1.
  UniPoly u_transform_of_power(int j, int N);

 private:
  BiPoly fn_locked(int n);
  BiPoly fie_locked(int n);
  BiPoly i_hat_locked(int j);
  std::vector<UniPoly> recurrence_locked();
  UniPoly t_direct_locked(int n);
  UniPoly u_power_locked(int j, int N);
  // Coefficients (as polynomials in y after substituting v -> -1-y) of the
  // magic polynomial under u -> -1/t (for_f true) or u -> -(1+t)/t.
  std::vector<BiPoly> denominator_poly(bool for_f);

  Template L_;
  int guard_;
  FaceCensus census_;
  std::mutex mu_;
  std::map<int, BiPoly> fn_cache_;
  std::map<int, BiPoly> fie_cache_;
  std::map<int, BiPoly> ihat_cache_;
  std::vector<UniPoly> rec_coeffs_;  // empty until computed
  std::map<int, UniPoly> trec_cache_;
  std::map<std::pair<int, int>, UniPoly> urec_cache_;
};

// Classical one-variable sequences from the three-term recurrence
// P_n = 2x P_{n-1} - P_{n-2} with P_0 = 1 and P_1 = x (first kind) or 2x
// (second kind). Used as independent oracles.
UniPoly classical_chebyshev_t(int n);
UniPoly classical_chebyshev_u(int n);

}  // namespace gtt
