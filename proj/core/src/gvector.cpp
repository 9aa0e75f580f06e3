#include "gtt/gvector.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "gtt/rational.hpp"

namespace gtt {

namespace {

UniPoly geometric(int n) {
  return UniPoly(std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(1)));
}

std::string face_witness(const Face& f) { return face_to_string(f); }

}  // namespace

UniPoly g_basis_poly(int d, int i) {
  if (i < 1) throw std::invalid_argument("basis parameter i must be positive");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (d == 0) return UniPoly(1);
  const int q = (d - 1) / i;
  const int r = d - q * i;
  UniPoly result = geometric(r);
  const UniPoly gi = geometric(i);
  for (int a = 0; a < q; ++a) result = result * gi;
  return result;
}

std::vector<UniPoly> g_basis(int d, int i) {
  std::vector<UniPoly> basis;
  for (int j = 0; 2 * j <= d; ++j) {
    basis.push_back(UniPoly::monomial(j, Rat(1)) * g_basis_poly(d - 2 * j, i));
  }
  return basis;
}

std::vector<Rat> g_vector(const UniPoly& h, int d, int i) {
  if (h.degree() > d) throw std::domain_error("h-polynomial degree exceeds d");
  const auto basis = g_basis(d, i);
  UniPoly residual = h;
  std::vector<Rat> g;
  // basis[j] has lowest term t^j with coefficient 1, so reading residual
  // coefficients from the bottom peels off one coordinate at a time.
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Rat c = residual.coeff(static_cast<int>(j));
    g.push_back(c);
    residual -= c * basis[j];
  }
  if (!residual.is_zero()) {
    throw std::domain_error("h-polynomial does not lie in the span of the basis");
  }
  return g;
}

std::vector<Rat> g_vector(const SimplicialComplex& K, int i) {
  return g_vector(h_polynomial(K), K.dim() + 1, i);
}

UniPoly h_from_g(const std::vector<Rat>& g, int d, int i) {
  const auto basis = g_basis(d, i);
  if (g.size() > basis.size()) {
    throw std::invalid_argument("too many coordinates for the basis");
  }
  UniPoly h;
  for (std::size_t j = 0; j < g.size(); ++j) h += g[j] * basis[j];
  return h;
}

UniPoly F_from_h(const UniPoly& h, int d) {
  if (h.degree() > d) throw std::invalid_argument("h-polynomial degree exceeds d");
  const UniPoly x_minus({Rat(-1), Rat(1)});
  const UniPoly x_plus({Rat(1), Rat(1)});
  UniPoly F;
  for (int i = 0; i <= d; ++i) {
    F += h.coeff(i) * (x_minus.pow(i) * x_plus.pow(d - i));
  }
  return pow2(-d) * F;
}

UniPoly h_from_F(const UniPoly& F, int d) {
  if (F.degree() > d) throw std::invalid_argument("F-polynomial degree exceeds d");
  const UniPoly one_plus({Rat(1), Rat(1)});
  const UniPoly one_minus({Rat(1), Rat(-1)});
  UniPoly h;
  for (int j = 0; j <= d; ++j) {
    h += F.coeff(j) * (one_plus.pow(j) * one_minus.pow(d - j));
  }
  return h;
}

bool MembershipReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

MembershipReport hs_membership(const SimplicialComplex& K, int i, int d, bool deep_links) {
  MembershipReport report;
  report.i = i;
  report.d = d;

  {
    MembershipCheck c;
    c.condition = "dimension";
    c.pass = K.dim() == d - 1;
    c.witness = "dim = " + std::to_string(K.dim()) + ", expected " + std::to_string(d - 1);
    report.checks.push_back(std::move(c));
  }
  {
    MembershipCheck c;
    c.condition = "sphere-betti";
    c.pass = has_sphere_betti(K, d - 1);
    c.witness = c.pass ? "reduced Betti numbers of a (d-1)-sphere" : "Betti numbers differ";
    report.checks.push_back(std::move(c));
  }
  {
    MembershipCheck c;
    c.condition = "missing-faces";
    const auto m = max_missing_dimension(K);
    c.pass = !m.has_value() || *m <= i;
    c.witness = m.has_value() ? ("largest missing face dimension " + std::to_string(*m))
                              : "no missing faces";
    report.checks.push_back(std::move(c));
  }
  {
    MembershipCheck c;
    c.condition = deep_links ? "face-links" : "vertex-links";
    c.pass = true;
    for (const auto& f : K.faces()) {
      if (f.empty()) continue;
      if (!deep_links && f.size() != 1) continue;
      const int m = d - 1 - static_cast<int>(f.size());
      if (!has_sphere_betti(link(K, f), m)) {
        c.pass = false;
        c.witness = "link of " + face_witness(f) + " is not a " + std::to_string(m) +
                    "-sphere in homology";
        break;
      }
    }
    if (c.pass) c.witness = "all links have sphere Betti numbers";
    report.checks.push_back(std::move(c));
  }
  return report;
}

namespace {

// All real roots, and all distinct roots inside the given (open) interval,
// with an optional list of endpoint values allowed to be roots.
bool roots_real_and_located(const UniPoly& p, const std::optional<Rat>& lo,
                            const std::optional<Rat>& hi,
                            const std::vector<Rat>& allowed_endpoints) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  if (!all_roots_real(p)) return false;
  int inside = count_distinct_real_roots(p, lo, hi);
  for (const Rat& e : allowed_endpoints) {
    if (p.eval(e) == 0) ++inside;
  }
  return inside == count_distinct_real_roots(p, std::nullopt, std::nullopt);
}

}  // namespace

FStableResult fstable_transforms(const UniPoly& h, int d) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  if (h.degree() > d) throw std::invalid_argument("h-polynomial degree exceeds d");
  if (!(h.coeff(0) == Rat(1))) throw std::invalid_argument("h_0 must be 1");
  for (int i = 0; 2 * i <= d; ++i) {
    if (!(h.coeff(i) == h.coeff(d - i))) {
      throw std::invalid_argument("h-polynomial is not symmetric");
    }
  }

  FStableResult r;
  const UniPoly F = F_from_h(h, d);
  r.f_roots_in_unit_interval =
      F.degree() == d && roots_real_and_located(F, Rat(-1), Rat(1), {});
  r.h_roots_negative = roots_real_and_located(h, std::nullopt, Rat(0), {});
  const auto g = g_vector(h, d, 2);
  if (!(h_from_g(g, d, 2) == h)) {
    throw std::logic_error("basis expansion of the i=2 coordinates does not reproduce h");
  }
  const UniPoly gp(std::vector<Rat>(g.begin(), g.end()));
  r.g2_roots_in_left_unit = gp.degree() == d / 2 &&
                            roots_real_and_located(gp, Rat(-1), Rat(0), {Rat(-1)});
  return r;
}

FStableResult fstable_transforms(const SimplicialComplex& K) {
  const int d = K.dim() + 1;
  const UniPoly h = h_polynomial(K);
  const UniPoly F = F_polynomial(K);
  if (!(F_from_h(h, d) == F) || !(h_from_F(F, d) == h)) {
    throw std::logic_error("h/F change of variable is not involutive on this complex");
  }
  return fstable_transforms(h, d);
}

G2Verdict verify_g2_nonneg(const SimplicialComplex& K) {
  G2Verdict v;
  v.membership = hs_membership(K, 2, K.dim() + 1, false);
  v.g = g_vector(K, 2);
  v.nonnegative = true;
  for (const Rat& c : v.g) {
    if (c < 0) v.nonnegative = false;
  }
  return v;
}

bool check_g_monotone_instance(const UniPoly& h, int d, int i) {
  const auto gi = g_vector(h, d, i);
  for (const Rat& c : gi) {
    if (c < 0) return true;
  }
  const auto gnext = g_vector(h, d, i + 1);
  for (const Rat& c : gnext) {
    if (c < 0) return false;
  }
  return true;
}

bool check_g_join_instance(const SimplicialComplex& a, const SimplicialComplex& b, int i) {
  const auto ga = g_vector(a, i);
  const auto gb = g_vector(b, i);
  for (const Rat& c : ga) {
    if (c < 0) return true;
  }
  for (const Rat& c : gb) {
    if (c < 0) return true;
  }
  // Relabel the second factor before joining; vertex sets must be disjoint.
  SimplicialComplex shifted = b;
  if (!b.vertex_ids().empty()) {
    const VertexId offset = a.vertex_ids().empty()
                                ? 0
                                : a.vertex_ids().back() + 1 - b.vertex_ids().front();
    std::vector<Face> facets;
    for (const auto& f : b.facets()) {
      Face g;
      for (VertexId v : f) g.push_back(v + offset);
      facets.push_back(std::move(g));
    }
    shifted = SimplicialComplex::from_facets(facets);
  }
  const SimplicialComplex joined = join(a, shifted);
  const auto gj = g_vector(joined, i);
  for (const Rat& c : gj) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace gtt
