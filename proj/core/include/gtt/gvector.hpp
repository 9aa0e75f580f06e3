#pragma once

#include <string>
#include <vector>

#include "gtt/roots.hpp"
#include "gtt/simplicial.hpp"
#include "gtt/unipoly.hpp"

namespace gtt {

// ((1 + t + ... + t^i)^q) (1 + t + ... + t^r) where d = q*i + r with
// 1 <= r <= i; the d = 0 polynomial is 1.
UniPoly g_basis_poly(int d, int i);

// Basis t^j P_{d-2j,i} for j = 0..floor(d/2), in that order.
std::vector<UniPoly> g_basis(int d, int i);

// Coordinates of h in the basis above, solved from the bottom coefficient
// up; each basis polynomial is monic in its lowest new power, so the solve
// is triangular. Throws std::domain_error when h does not lie in the span
// (nonzero residual) or deg h > d.
std::vector<Rat> g_vector(const UniPoly& h, int d, int i);
std::vector<Rat> g_vector(const SimplicialComplex& K, int i);

UniPoly h_from_g(const std::vector<Rat>& g, int d, int i);

// Change of variable between the h-polynomial and the F-polynomial of a
// (d-1)-dimensional complex: F(x) = 2^{-d} sum_i h_i (x-1)^i (x+1)^{d-i}
// and its inverse h(t) = (1-t)^d F((1+t)/(1-t)).
UniPoly F_from_h(const UniPoly& h, int d);
UniPoly h_from_F(const UniPoly& F, int d);

struct MembershipCheck {
  std::string condition;
  bool pass = false;
  std::string witness;
};

struct MembershipReport {
  int i = 0;
  int d = 0;
  std::vector<MembershipCheck> checks;
  bool pass() const;
};

// Necessary conditions for the sphere classes parametrized by i: dimension
// d-1, reduced Betti numbers of S^{d-1}, no missing face of dimension above
// i, and every vertex link with the Betti numbers of S^{d-2}. With
// deep_links the link condition is checked for faces of all sizes.
MembershipReport hs_membership(const SimplicialComplex& K, int i, int d,
                               bool deep_links = false);

struct FStableResult {
  // deg F = d, all roots real, and every root in (-1, 1).
  bool f_roots_in_unit_interval = false;
  // all roots of h real and negative.
  bool h_roots_negative = false;
  // deg g = floor(d/2) for the i = 2 coordinate vector, all roots real,
  // and every root in [-1, 0).
  bool g2_roots_in_left_unit = false;
  bool agree() const {
    return f_roots_in_unit_interval == h_roots_negative &&
           h_roots_negative == g2_roots_in_left_unit;
  }
};

// Evaluates the three equivalent root-location conditions on a symmetric
// h-polynomial (h_i = h_{d-i}, h_0 = 1 required; throws otherwise).
FStableResult fstable_transforms(const UniPoly& h, int d);
FStableResult fstable_transforms(const SimplicialComplex& K);

// g-vector nonnegativity at i = 2 together with the membership guardrail.
struct G2Verdict {
  MembershipReport membership;
  std::vector<Rat> g;
  bool nonnegative = false;
};
G2Verdict verify_g2_nonneg(const SimplicialComplex& K);

// Instance checks of the two closure properties: if the i-coordinates are
// nonnegative then so are the (i+1)-coordinates, and joins of complexes
// with nonnegative i-coordinates have nonnegative i-coordinates. Both
// return true when the hypothesis fails (nothing to check).
bool check_g_monotone_instance(const UniPoly& h, int d, int i);
bool check_g_join_instance(const SimplicialComplex& a, const SimplicialComplex& b, int i);

}  // namespace gtt
