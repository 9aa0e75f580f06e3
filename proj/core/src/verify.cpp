#include "gtt/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gtt/gvector.hpp"
#include "gtt/json_io.hpp"
#include "gtt/rational.hpp"
#include "gtt/roots.hpp"
#include "gtt/tch.hpp"
#include "gtt/templates.hpp"
#include "gtt/triangulate.hpp"
#include "json.hpp"

namespace gtt::verify {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL;
  h ^= a * 0xBF58476D1CE4E5B9ULL;
  h ^= b * 0x94D049BB133111EBULL;
  return h;
}

void add_item(Report& report, std::string check, std::string instance, std::string claim,
              bool pass, std::string witness) {
  CheckItem item;
  item.check = std::move(check);
  item.instance = std::move(instance);
  item.claim = std::move(claim);
  item.pass = pass;
  item.witness = std::move(witness);
  report.items.push_back(std::move(item));
}

std::string poly_str(const UniPoly& p) { return unipoly_to_display(p); }

std::string bipoly_str(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << rational_to_string(c);
    if (key.first > 0) out << "*x^" << key.first;
    if (key.second > 0) out << "*y^" << key.second;
  }
  return out.str();
}

std::string rats_str(const std::vector<Rat>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << rational_to_string(v[i]);
  out << ")";
  return out.str();
}

std::string counts_str(const std::vector<long long>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
  return out.str();
}

int distinct_roots_all(const UniPoly& p) {
  return count_distinct_real_roots(p, std::nullopt, std::nullopt);
}

// Every real root lies in the open interval (lo, hi), with listed endpoint
// values additionally allowed.
bool real_roots_confined(const UniPoly& p, const Rat& lo, const Rat& hi,
                         bool closed_endpoints) {
  if (p.degree() <= 0) return true;
  int inside = count_distinct_real_roots(p, lo, hi);
  if (closed_endpoints) {
    if (p.eval(lo) == 0) ++inside;
    if (p.eval(hi) == 0) ++inside;
  }
  return inside == distinct_roots_all(p);
}

// --- Corpus -----------------------------------------------------------------

std::vector<std::pair<std::string, Template>> corpus_templates() {
  std::vector<std::pair<std::string, Template>> list;
  list.emplace_back("path-1", build_path_template(1));
  list.emplace_back("path-2", build_path_template(2));
  list.emplace_back("path-3", build_path_template(3));
  list.emplace_back("star-2", build_star_template(2));
  list.emplace_back("me-2-5",
                    build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}}));
  list.emplace_back("me-3-6",
                    build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}, {0, 3, 4}}));
  list.emplace_back("star-3", build_star_template(3));
  return list;
}

std::vector<std::pair<std::string, Template>> planar_templates() {
  std::vector<std::pair<std::string, Template>> list;
  for (auto& [name, L] : corpus_templates()) {
    if (L.k == 2) list.emplace_back(name, std::move(L));
  }
  return list;
}

SimplicialComplex random_two_complex(std::uint64_t seed) {
  // All 56 triangles on 8 vertices, shuffled, first 12 kept.
  std::vector<Face> triples;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = b + 1; c < 8; ++c) triples.push_back({a, b, c});
    }
  }
  std::mt19937_64 rng(seed);
  // Hand-rolled shuffle so the selection is identical on every platform.
  for (std::size_t i = triples.size() - 1; i > 0; --i) {
    std::swap(triples[i], triples[rng() % (i + 1)]);
  }
  triples.resize(12);
  return SimplicialComplex::from_facets(triples);
}

SimplicialComplex simplex_boundary(int d) {
  // All d-subsets of {0..d}.
  std::vector<Face> facets;
  for (int skip = 0; skip <= d; ++skip) {
    Face f;
    for (int v = 0; v <= d; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

std::vector<std::pair<std::string, SimplicialComplex>> criterion_complexes(std::uint64_t seed) {
  std::vector<std::pair<std::string, SimplicialComplex>> list;
  list.emplace_back("two-triangles", SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}}));
  list.emplace_back("simplex-boundary-3", simplex_boundary(3));
  list.emplace_back("cross-3", cross_polytope_boundary(3));
  list.emplace_back("solid-simplex-3", SimplicialComplex::from_facets({{0, 1, 2, 3}}));
  list.emplace_back("random-2complex-8v", random_two_complex(mix(seed, 815)));
  return list;
}

std::vector<std::pair<std::string, SimplicialComplex>> corpus_spheres() {
  std::vector<std::pair<std::string, SimplicialComplex>> list;
  list.emplace_back("cross-2", cross_polytope_boundary(2));
  list.emplace_back("cross-3", cross_polytope_boundary(3));
  list.emplace_back("cross-4", cross_polytope_boundary(4));
  list.emplace_back("simplex-boundary-3", simplex_boundary(3));
  list.emplace_back("simplex-boundary-4", simplex_boundary(4));
  return list;
}

// h-polynomial of a (d-1)-dimensional complex from its f-polynomial:
// h(t) = sum_j f_j t^j (1-t)^{d-j} with f_j the coefficient of x^j.
UniPoly h_from_fpoly(const UniPoly& f, int d) {
  const UniPoly one_minus({Rat(1), Rat(-1)});
  UniPoly h;
  for (int j = 0; j <= d; ++j) {
    h += f.coeff(j) * (UniPoly::monomial(j, Rat(1)) * one_minus.pow(d - j));
  }
  return h;
}

// f-polynomial of the replaced cross-polytope boundary computed without
// materializing it, via the flag face-count formula.
UniPoly formula_fpoly(TchFamily& family, int d) {
  const BiPoly flag = family.flag_f_from_counts(cross_polytope_boundary(d));
  const UniPoly x = UniPoly::variable();
  return flag.substitute(x, x);
}

UniPoly formula_h(TchFamily& family, int d) {
  return h_from_fpoly(formula_fpoly(family, d), d);
}

bool all_nonnegative(const std::vector<Rat>& v) {
  for (const Rat& c : v) {
    if (c < 0) return false;
  }
  return true;
}

// --- Suites -----------------------------------------------------------------

Report suite_order_independence(const VerifyOptions& opts) {
  Report report;
  report.suite = "order-independence";
  report.options = opts;

  const auto complexes = criterion_complexes(opts.seed);
  const auto templates = corpus_templates();
  int pair_index = 0;
  for (const auto& [kname, K] : complexes) {
    for (const auto& [lname, L] : templates) {
      ++pair_index;
      if (K.faces_of_dim(L.k).empty()) continue;
      const std::string instance = kname + "/" + lname;

      const auto base = flag_f_polynomial(tchebyshev_triangulation(K, L, default_plan(K, L)));
      bool pass = true;
      std::string witness = "flag polynomial " + bipoly_str(base);
      for (int trial = 0; trial < 20 && pass; ++trial) {
        const auto plan = random_plan(K, L, mix(opts.seed, pair_index, trial));
        const auto flag = flag_f_polynomial(tchebyshev_triangulation(K, L, plan));
        if (!(flag == base)) {
          pass = false;
          witness = "plan " + std::to_string(trial) + " gave " + bipoly_str(flag) +
                    " instead of " + bipoly_str(base);
        }
      }
      add_item(report, "plan-independence", instance,
               "20 random replacement plans yield the same flag face-count polynomial",
               pass, witness);
    }
  }

  // Two triangles glued along an edge, replaced with the one-interior-point
  // path: subdividing the shared edge first yields a cone over the 8-cycle,
  // subdividing it last does not, and both orders give f = (1, 9, 16, 8).
  const SimplicialComplex K2 = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}});
  const Template P1 = build_path_template(1);
  SubdivisionPlan shared_first;
  shared_first.order = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}};
  SubdivisionPlan shared_last;
  shared_last.order = {{1, 3}, {2, 3}, {2, 4}, {1, 4}, {1, 2}};

  const auto cone = tchebyshev_triangulation(K2, P1, shared_first);
  const auto noncone = tchebyshev_triangulation(K2, P1, shared_last);

  const auto apex_of = [](const SimplicialComplex& W) -> std::optional<VertexId> {
    const auto facets = W.facets();
    for (VertexId v : W.vertex_ids()) {
      bool in_all = true;
      for (const auto& f : facets) {
        if (!std::binary_search(f.begin(), f.end(), v)) {
          in_all = false;
          break;
        }
      }
      if (in_all) return v;
    }
    return std::nullopt;
  };

  const std::vector<long long> expected_f = {1, 9, 16, 8};
  add_item(report, "example-fvector", "shared-edge-first",
           "replacing the shared edge first gives f-vector (1, 9, 16, 8)",
           f_vector(cone.complex) == expected_f, counts_str(f_vector(cone.complex)));
  add_item(report, "example-fvector", "shared-edge-last",
           "replacing the shared edge last gives f-vector (1, 9, 16, 8)",
           f_vector(noncone.complex) == expected_f, counts_str(f_vector(noncone.complex)));

  const auto apex = apex_of(cone.complex);
  add_item(report, "example-cone", "shared-edge-first",
           "the shared-edge-first order produces a cone: one vertex lies in every facet",
           apex.has_value(),
           apex ? ("apex vertex " + std::to_string(*apex)) : "no vertex lies in every facet");
  const auto no_apex = apex_of(noncone.complex);
  add_item(report, "example-cone", "shared-edge-last",
           "the shared-edge-last order produces no cone point",
           !no_apex.has_value(),
           no_apex ? ("unexpected apex " + std::to_string(*no_apex)) : "no vertex in every facet");
  add_item(report, "example-flag-equal", "both-orders",
           "the two orders still share one flag face-count polynomial",
           flag_f_polynomial(cone) == flag_f_polynomial(noncone),
           bipoly_str(flag_f_polynomial(cone)));
  return report;
}

Report suite_routes(const VerifyOptions& opts) {
  Report report;
  report.suite = "routes";
  report.options = opts;

  int lidx = 0;
  for (const auto& [lname, L] : corpus_templates()) {
    ++lidx;
    TchFamily family(L, opts.cross_guard);
    const int k = L.k;

    bool pass = true;
    std::string witness = "agree for n <= " + std::to_string(k + 4);
    for (int n = 0; n <= k + 4 && pass; ++n) {
      if (!(family.fn(n) == family.fn_inclusion_exclusion(n))) {
        pass = false;
        witness = "mismatch at n = " + std::to_string(n);
      }
    }
    add_item(report, "interior-vs-inclusion-exclusion", lname,
             "the interior-face recurrence and the facet inclusion-exclusion give the same "
             "two-variable face counts",
             pass, witness);

    pass = true;
    witness = "round-trips for n <= " + std::to_string(k + 4);
    for (int n = 0; n <= k + 4 && pass; ++n) {
      BiPoly assembled;
      for (int j = 0; j <= n; ++j) assembled += binom(n, j) * family.i_hat(j);
      if (!(assembled == family.fn(n))) {
        pass = false;
        witness = "binomial inversion failed at n = " + std::to_string(n);
      }
    }
    add_item(report, "binomial-inversion", lname,
             "f_n equals the binomial sum of the per-face contributions I_j", pass, witness);

    pass = true;
    witness = "matches for n <= " + std::to_string(k + 3);
    for (int n = 0; n <= k + 3 && pass; ++n) {
      Face all;
      for (int v = 0; v < n; ++v) all.push_back(v);
      const auto simplex = SimplicialComplex::from_facets({all});
      const auto replaced = tchebyshev_triangulation(simplex, L, default_plan(simplex, L));
      if (!(flag_f_polynomial(replaced) == family.fn(n))) {
        pass = false;
        witness = "subdivided simplex disagrees at n = " + std::to_string(n);
      }
    }
    add_item(report, "simplex-replacement", lname,
             "f_n is the flag face count of the replaced (n-1)-simplex", pass, witness);

    for (const auto& [kname, K] : criterion_complexes(opts.seed)) {
      if (K.faces_of_dim(k).empty()) continue;
      const auto plan = random_plan(K, L, mix(opts.seed, 4242, lidx));
      const auto direct = flag_f_polynomial(tchebyshev_triangulation(K, L, plan));
      const auto formula = family.flag_f_from_counts(K);
      add_item(report, "complex-assembly", kname + "/" + lname,
               "the flag face count assembled from the f-vector matches direct replacement",
               direct == formula, bipoly_str(formula));
    }
  }
  return report;
}

Report suite_genfun(const VerifyOptions& opts) {
  Report report;
  report.suite = "genfun";
  report.options = opts;
  const int order = 8;
  for (const auto& [lname, L] : corpus_templates()) {
    TchFamily family(L, opts.cross_guard);
    add_item(report, "f-series", lname,
             "sum_n f_n t^n matches its closed rational form through order 8",
             family.f_series_identity_holds(order), "checked to t^" + std::to_string(order));
    add_item(report, "ihat-series", lname,
             "sum_j I_j t^j matches its closed rational form through order 8",
             family.ihat_series_identity_holds(order), "checked to t^" + std::to_string(order));
  }
  return report;
}

Report suite_tch_props(const VerifyOptions& opts) {
  Report report;
  report.suite = "tch-props";
  report.options = opts;
  const int N = opts.max_n;
  const UniPoly minus_x = UniPoly::monomial(1, Rat(-1));

  for (const auto& [lname, L] : corpus_templates()) {
    TchFamily family(L, opts.cross_guard);

    bool pass = true;
    std::string witness = "agree for n <= " + std::to_string(N);
    for (int n = 0; n <= N && pass; ++n) {
      if (!(family.t_direct(n) == family.t_recurrence(n))) {
        pass = false;
        witness = "routes disagree at n = " + std::to_string(n);
      }
    }
    add_item(report, "t-route-agreement", lname,
             "the transform route and the linear recurrence give the same T-polynomials",
             pass, witness);

    bool deg_ok = true, one_ok = true, parity_ok = true, roots_ok = true;
    std::string deg_w = "deg T_n = n", one_w = "T_n(1) = 1",
                parity_w = "T_n(-x) = (-1)^n T_n(x)",
                roots_w = "all real roots inside (-1, 1)";
    for (int n = 0; n <= N; ++n) {
      const UniPoly t = family.t_recurrence(n);
      if (t.degree() != n && deg_ok) {
        deg_ok = false;
        deg_w = "deg T_" + std::to_string(n) + " = " + std::to_string(t.degree());
      }
      if (!(t.eval(Rat(1)) == Rat(1)) && one_ok) {
        one_ok = false;
        one_w = "T_" + std::to_string(n) + "(1) = " + rational_to_string(t.eval(Rat(1)));
      }
      UniPoly flipped = t.compose(minus_x);
      if (n % 2 != 0) flipped = -flipped;
      if (!(flipped == t) && parity_ok) {
        parity_ok = false;
        parity_w = "parity breaks at n = " + std::to_string(n);
      }
      if (n >= 1 && roots_ok && !real_roots_confined(t, Rat(-1), Rat(1), false)) {
        roots_ok = false;
        roots_w = "a real root of T_" + std::to_string(n) + " lies outside (-1, 1)";
      }
    }
    add_item(report, "t-degree", lname, "T_n has degree exactly n", deg_ok, deg_w);
    add_item(report, "t-at-one", lname, "T_n(1) = 1", one_ok, one_w);
    add_item(report, "t-parity", lname, "T_n has the parity of n", parity_ok, parity_w);
    add_item(report, "t-real-roots-confined", lname,
             "every real root of T_n lies in the open interval (-1, 1)", roots_ok, roots_w);

    if (L.k >= 2) {
      const UniPoly t1 = family.t_recurrence(1);
      const UniPoly t2 = family.t_recurrence(2);
      add_item(report, "t2-equals-x-t1", lname,
               "T_2 = x T_1 whenever the template dimension is at least 2",
               t2 == UniPoly::variable() * t1, poly_str(t2));
    }
  }

  // Pinned recurrence coefficients for the one-dimensional paths and the
  // two-dimensional census families.
  for (int s = 1; s <= 3; ++s) {
    TchFamily family(build_path_template(s), opts.cross_guard);
    const auto p = family.recurrence_coefficients();
    const UniPoly expected_p1 = UniPoly::monomial(1, Rat(2));
    UniPoly expected_p2 = Rat(s - 1) * UniPoly({Rat(-1), Rat(0), Rat(1)});
    expected_p2 += UniPoly(-1);
    const bool pass = p.size() == 2 && p[0] == expected_p1 && p[1] == expected_p2;
    add_item(report, "recurrence-coefficients", "path-" + std::to_string(s),
             "the depth-2 recurrence is T_n = 2x T_{n-1} + ((x^2-1)(s-1) - 1) T_{n-2}",
             pass, "p1 = " + poly_str(p[0]) + ", p2 = " + poly_str(p[1]));
  }
  for (const auto& [lname, L] : planar_templates()) {
    TchFamily family(L, opts.cross_guard);
    const auto c2 = census_2d(L);
    const long m = static_cast<long>(c2.m), e = static_cast<long>(c2.e);
    const auto p = family.recurrence_coefficients();
    const UniPoly x = UniPoly::variable();
    const UniPoly expected_p1 = Rat(3) * x;
    const UniPoly expected_p2 = Rat(e - 3) * x.pow(2) + UniPoly(Rat(-e));
    const UniPoly expected_p3 = Rat(2 * m + 1 - e) * x.pow(3) + Rat(e - 2 * m) * x;
    const bool pass =
        p.size() == 3 && p[0] == expected_p1 && p[1] == expected_p2 && p[2] == expected_p3;
    add_item(report, "recurrence-coefficients", lname,
             "the depth-3 recurrence coefficients match the census values (m, e)", pass,
             "m = " + std::to_string(m) + ", e = " + std::to_string(e) + ", p3 = " +
                 poly_str(p[2]));
  }

  {
    TchFamily family(build_path_template(1), opts.cross_guard);
    bool pass = true;
    std::string witness = "matches for n <= " + std::to_string(N);
    for (int n = 0; n <= N && pass; ++n) {
      if (!(family.t_direct(n) == classical_chebyshev_t(n))) {
        pass = false;
        witness = "differs at n = " + std::to_string(n);
      }
    }
    add_item(report, "classical-t", "path-1",
             "the one-interior-point path reproduces the classical first-kind polynomials",
             pass, witness);
  }
  return report;
}

Report suite_u_props(const VerifyOptions& opts) {
  Report report;
  report.suite = "u-props";
  report.options = opts;
  const int N = opts.max_n;
  const UniPoly minus_x = UniPoly::monomial(1, Rat(-1));

  for (const auto& [lname, L] : corpus_templates()) {
    TchFamily family(L, opts.cross_guard);
    for (int j = 1; j <= L.k + 1; ++j) {
      const std::string instance = lname + "/j=" + std::to_string(j);

      bool pass = true;
      std::string witness = "agree for n <= " + std::to_string(N);
      for (int n = 0; n <= N && pass; ++n) {
        if (!(family.u_direct(j, n) == family.u_recurrence(j, n))) {
          pass = false;
          witness = "routes disagree at n = " + std::to_string(n);
        }
      }
      add_item(report, "u-route-agreement", instance,
               "the transform route and the linear recurrence give the same U-polynomials",
               pass, witness);

      bool deg_ok = true, parity_ok = true, roots_ok = true;
      std::string deg_w = "deg U_n = n", parity_w = "U_n(-x) = (-1)^n U_n(x)",
                  roots_w = "all real roots inside [-1, 1]";
      for (int n = 0; n <= N; ++n) {
        const UniPoly u = family.u_recurrence(j, n);
        if (u.degree() != n && deg_ok) {
          deg_ok = false;
          deg_w = "deg U_" + std::to_string(n) + " = " + std::to_string(u.degree());
        }
        UniPoly flipped = u.compose(minus_x);
        if (n % 2 != 0) flipped = -flipped;
        if (!(flipped == u) && parity_ok) {
          parity_ok = false;
          parity_w = "parity breaks at n = " + std::to_string(n);
        }
        if (n >= 1 && roots_ok && !real_roots_confined(u, Rat(-1), Rat(1), true)) {
          roots_ok = false;
          roots_w = "a real root of U_" + std::to_string(n) + " lies outside [-1, 1]";
        }
      }
      add_item(report, "u-degree", instance, "U_n has degree exactly n", deg_ok, deg_w);
      add_item(report, "u-parity", instance, "U_n has the parity of n", parity_ok, parity_w);
      add_item(report, "u-real-roots-confined", instance,
               "every real root of U_n lies in the closed interval [-1, 1]", roots_ok, roots_w);

      if (j >= 2) {
        pass = true;
        witness = "annihilates x^N for N <= " + std::to_string(j - 2);
        for (int power = 0; power <= j - 2 && pass; ++power) {
          if (!family.u_transform_of_power(j, power).is_zero()) {
            pass = false;
            witness = "x^" + std::to_string(power) + " does not map to zero";
          }
        }
        add_item(report, "u-normalization", instance,
                 "the defining transform kills powers below j-1", pass, witness);
      }
    }
  }

  {
    TchFamily family(build_path_template(1), opts.cross_guard);
    bool pass = true;
    std::string witness = "matches for n <= " + std::to_string(N);
    for (int n = 0; n <= N && pass; ++n) {
      if (!(family.u_direct(2, n) == classical_chebyshev_u(n))) {
        pass = false;
        witness = "differs at n = " + std::to_string(n);
      }
    }
    add_item(report, "classical-u", "path-1/j=2",
             "the one-interior-point path reproduces the classical second-kind polynomials",
             pass, witness);
  }
  return report;
}

// Arithmetic in Q[x][w] / (w^2 - s(x^2 - 1)), written as a + b w.
struct QuadPair {
  UniPoly a, b;
};

QuadPair quad_mul(const QuadPair& p, const QuadPair& q, int s) {
  const UniPoly w2 = Rat(s) * UniPoly({Rat(-1), Rat(0), Rat(1)});
  QuadPair r;
  r.a = p.a * q.a + w2 * (p.b * q.b);
  r.b = p.a * q.b + p.b * q.a;
  return r;
}

Report suite_real_roots_1d(const VerifyOptions& opts) {
  Report report;
  report.suite = "real-roots-1d";
  report.options = opts;
  const int N = opts.max_n;

  for (int s = 1; s <= 5; ++s) {
    const std::string lname = "path-" + std::to_string(s);
    TchFamily family(build_path_template(s), opts.cross_guard);

    bool pass = true;
    std::string witness = "n distinct roots in (-1, 1) for n <= " + std::to_string(N);
    for (int n = 1; n <= N && pass; ++n) {
      const UniPoly t = family.t_recurrence(n);
      const int c = count_distinct_real_roots(t, Rat(-1), Rat(1));
      if (c != n) {
        pass = false;
        witness = "T_" + std::to_string(n) + " has " + std::to_string(c) +
                  " distinct roots in (-1, 1)";
      }
    }
    add_item(report, "t-distinct-roots", lname,
             "T_n has exactly n distinct real roots, all in (-1, 1)", pass, witness);

    pass = true;
    witness = "n distinct roots in (-1, 1) for n <= " + std::to_string(N);
    for (int n = 1; n <= N && pass; ++n) {
      const UniPoly u = family.u_recurrence(2, n);
      const int c = count_distinct_real_roots(u, Rat(-1), Rat(1));
      if (c != n) {
        pass = false;
        witness = "U_" + std::to_string(n) + " has " + std::to_string(c) +
                  " distinct roots in (-1, 1)";
      }
    }
    add_item(report, "u2-distinct-roots", lname,
             "U_n of the second kind has exactly n distinct real roots, all in (-1, 1)",
             pass, witness);

    if (s <= 4) {
      const int closed_n = std::min(N, 10);
      // (x + w)^n in Q[x][w]/(w^2 - s(x^2-1)): the w-free part is T_n and
      // the w-coefficient of (x + w)^{n+1} is U_n of the second kind.
      bool t_ok = true, u_ok = true;
      std::string t_w = "matches for n <= " + std::to_string(closed_n);
      std::string u_w = t_w;
      QuadPair power{UniPoly(1), UniPoly()};
      const QuadPair base{UniPoly::variable(), UniPoly(1)};
      for (int n = 0; n <= closed_n + 1; ++n) {
        if (n <= closed_n && t_ok && !(power.a == family.t_recurrence(n))) {
          t_ok = false;
          t_w = "w-free part differs at n = " + std::to_string(n);
        }
        if (n >= 1 && n - 1 <= closed_n && u_ok &&
            !(power.b == family.u_recurrence(2, n - 1))) {
          u_ok = false;
          u_w = "w-coefficient differs at n = " + std::to_string(n - 1);
        }
        power = quad_mul(power, base, s);
      }
      add_item(report, "closed-form-t", lname,
               "T_n equals the w-free part of (x + w)^n modulo w^2 = s(x^2 - 1)", t_ok, t_w);
      add_item(report, "closed-form-u", lname,
               "U_n equals the w-coefficient of (x + w)^{n+1} modulo w^2 = s(x^2 - 1)",
               u_ok, u_w);
    }
  }
  return report;
}

Report suite_real_roots_2d(const VerifyOptions& opts) {
  Report report;
  report.suite = "real-roots-2d";
  report.options = opts;
  const int N = opts.max_n;

  for (const auto& [lname, L] : planar_templates()) {
    TchFamily family(L, opts.cross_guard);

    bool pass = true;
    std::string witness = "n real roots with multiplicity for n <= " + std::to_string(N);
    for (int n = 1; n <= N && pass; ++n) {
      const UniPoly t = family.t_recurrence(n);
      const int c = count_real_roots_with_multiplicity(t);
      if (c != n) {
        pass = false;
        witness = "T_" + std::to_string(n) + " has " + std::to_string(c) +
                  " real roots with multiplicity";
      }
    }
    add_item(report, "t-real-with-multiplicity", lname,
             "T_n has all n roots real, counted with multiplicity", pass, witness);

    for (int j = 2; j <= 3; ++j) {
      pass = true;
      witness = "all roots real and in [-1, 1] for n <= " + std::to_string(N);
      for (int n = 1; n <= N && pass; ++n) {
        const UniPoly u = family.u_recurrence(j, n);
        const int c = count_real_roots_with_multiplicity(u);
        if (c != n || !real_roots_confined(u, Rat(-1), Rat(1), true)) {
          pass = false;
          witness = "U_" + std::to_string(n) + " (j = " + std::to_string(j) + ") fails";
        }
      }
      add_item(report, "u-real-with-multiplicity", lname + "/j=" + std::to_string(j),
               "U_n has all roots real, with multiplicity, inside [-1, 1]", pass, witness);
    }
  }
  return report;
}

Report suite_counterexample_k3(const VerifyOptions& opts) {
  Report report;
  report.suite = "counterexample-k3";
  report.options = opts;
  TchFamily family(build_star_template(3), opts.cross_guard);

  const UniPoly t6 = family.t_recurrence(6);
  const UniPoly pinned({Rat(6), Rat(0), Rat(-9), Rat(0), Rat(-60), Rat(0), Rat(64)});
  add_item(report, "t6-value", "star-3",
           "T_6 for the three-dimensional star equals 6 - 9x^2 - 60x^4 + 64x^6",
           t6 == pinned, poly_str(t6));
  add_item(report, "t6-route-agreement", "star-3",
           "both computation routes give the same T_6", family.t_direct(6) == t6,
           poly_str(family.t_direct(6)));

  const int distinct = distinct_roots_all(t6);
  add_item(report, "t6-distinct-real-roots", "star-3",
           "T_6 has exactly 4 distinct real roots", distinct == 4, std::to_string(distinct));
  add_item(report, "t6-roots-confined", "star-3",
           "all real roots of T_6 lie in (-1, 1)",
           count_distinct_real_roots(t6, Rat(-1), Rat(1)) == distinct,
           std::to_string(count_distinct_real_roots(t6, Rat(-1), Rat(1))) + " roots in (-1, 1)");
  add_item(report, "t6-not-all-real", "star-3",
           "not every root of T_6 is real", !all_roots_real(t6),
           std::to_string(count_real_roots_with_multiplicity(t6)) +
               " of 6 roots real with multiplicity");
  return report;
}

Report suite_cross_polytope(const VerifyOptions& opts) {
  Report report;
  report.suite = "cross-polytope";
  report.options = opts;

  int lidx = 0;
  for (const auto& [lname, L] : corpus_templates()) {
    ++lidx;
    TchFamily family(L, opts.cross_guard);
    const int k = L.k;
    const int t_limit = std::min(k == 1 ? 6 : (k == 2 ? 5 : 4), opts.cross_guard);

    bool pass = true;
    std::string witness = "agree for n <= " + std::to_string(t_limit);
    for (int n = 0; n <= t_limit && pass; ++n) {
      if (!(family.t_from_cross_polytope(n) == family.t_direct(n))) {
        pass = false;
        witness = "materialized route differs at n = " + std::to_string(n);
      }
    }
    add_item(report, "t-cross-agreement", lname,
             "T_n is the F-polynomial of the replaced cross-polytope boundary "
             "(h-vector form asserted internally)",
             pass, witness);

    const int u_limit = std::min(5, opts.cross_guard);
    for (int j = 2; j <= k + 1; ++j) {
      pass = true;
      witness = "agree for n + j - 1 <= " + std::to_string(u_limit);
      for (int n = 0; n + j - 1 <= u_limit && pass; ++n) {
        if (!(family.u_from_cross_polytope(j, n) == family.u_direct(j, n))) {
          pass = false;
          witness = "link-sum route differs at n = " + std::to_string(n);
        }
      }
      add_item(report, "u-cross-agreement", lname + "/j=" + std::to_string(j),
               "U_n is the scaled sum of link F-polynomials over original (j-1)-vertex faces",
               pass, witness);
    }

    const int betti_limit = std::min(5, opts.max_d);
    pass = true;
    witness = "spheres for d <= " + std::to_string(betti_limit);
    for (int d = 1; d <= betti_limit && pass; ++d) {
      const auto cross = cross_polytope_boundary(d);
      const auto plan = random_plan(cross, L, mix(opts.seed, 7001, lidx * 16 + d));
      const auto W = tchebyshev_triangulation(cross, L, plan);
      if (!has_sphere_betti(W.complex, d - 1)) {
        pass = false;
        witness = "wrong Betti numbers at d = " + std::to_string(d) + ": " +
                  counts_str(reduced_betti(W.complex));
      }
    }
    add_item(report, "betti-sphere", lname,
             "every replaced cross-polytope boundary has the Betti numbers of a sphere",
             pass, witness);

    const auto violations = validate_template(L);
    add_item(report, "validator-accepts", lname,
             "the validator accepts every corpus template", violations.empty(),
             violations.empty() ? "no violations" : violations.front());
  }

  {
    Template bad;
    bad.k = 2;
    bad.complex = SimplicialComplex::from_facets({{0, 2, 3}, {1, 2, 3}});
    bad.boundary = {0, 1, 2};
    const auto violations = validate_template(bad);
    add_item(report, "validator-rejects", "subdivided-boundary-edge",
             "a triangulation that subdivides a boundary edge is rejected",
             !violations.empty(), violations.empty() ? "accepted" : violations.front());
  }
  {
    Template bad;
    bad.k = 2;
    bad.complex = SimplicialComplex::from_facets({{0, 1, 2}});
    bad.boundary = {0, 1, 2};
    const auto violations = validate_template(bad);
    add_item(report, "validator-rejects", "solid-simplex",
             "the undivided simplex is rejected (its full face must be absent)",
             !violations.empty(), violations.empty() ? "accepted" : violations.front());
  }
  {
    Template bad;
    bad.k = 1;
    bad.complex = SimplicialComplex::from_facets({{0, 2}, {2, 3}, {1, 3}, {1, 2}});
    bad.boundary = {0, 1};
    const auto violations = validate_template(bad);
    add_item(report, "validator-rejects", "interior-cycle",
             "a path with an interior cycle is rejected (not a disk collapse)",
             !violations.empty(), violations.empty() ? "accepted" : violations.front());
  }
  return report;
}

Report suite_g2_nonneg(const VerifyOptions& opts) {
  Report report;
  report.suite = "g2-nonneg";
  report.options = opts;

  int lidx = 0;
  for (const auto& [lname, L] : planar_templates()) {
    ++lidx;
    TchFamily family(L, opts.cross_guard);

    bool pass = true;
    std::string witness;
    for (int d = 2; d <= opts.max_d && pass; ++d) {
      const auto g = g_vector(formula_h(family, d), d, 2);
      if (!all_nonnegative(g)) {
        pass = false;
        witness = "negative entry at d = " + std::to_string(d) + ": " + rats_str(g);
      } else if (d == opts.max_d) {
        witness = "d = " + std::to_string(d) + ": g = " + rats_str(g);
      }
    }
    add_item(report, "g2-formula-nonneg", lname,
             "the i = 2 coordinate vector of the replaced cross-polytope boundary is "
             "nonnegative for d up to max_d",
             pass, witness);

    const int mat_limit = std::min(5, opts.max_d);
    pass = true;
    witness = "membership and nonnegativity for d <= " + std::to_string(mat_limit);
    bool h_match = true;
    std::string h_witness = "h-polynomials agree for d <= " + std::to_string(mat_limit);
    for (int d = 2; d <= mat_limit; ++d) {
      const auto cross = cross_polytope_boundary(d);
      const auto plan = random_plan(cross, L, mix(opts.seed, 8101, lidx * 16 + d));
      const auto W = tchebyshev_triangulation(cross, L, plan);
      const auto verdict = verify_g2_nonneg(W.complex);
      if (pass && (!verdict.membership.pass() || !verdict.nonnegative)) {
        pass = false;
        witness = "fails at d = " + std::to_string(d) + ": g = " + rats_str(verdict.g);
      }
      if (h_match && !(h_polynomial(W.complex) == formula_h(family, d))) {
        h_match = false;
        h_witness = "h-polynomials disagree at d = " + std::to_string(d);
      }
    }
    add_item(report, "g2-materialized", lname,
             "materialized spheres pass the membership guardrail with nonnegative "
             "i = 2 coordinates",
             pass, witness);
    add_item(report, "h-route-agreement", lname,
             "the face-count formula and the materialized complex give the same h-polynomial",
             h_match, h_witness);
  }

  for (int j = 1; j <= 3; ++j) {
    TchFamily family(build_star_template(j), opts.cross_guard);
    for (int i = j; i <= 3; ++i) {
      bool pass = true;
      std::string witness = "nonnegative for d <= " + std::to_string(opts.max_d);
      for (int d = 2; d <= opts.max_d && pass; ++d) {
        const auto g = g_vector(formula_h(family, d), d, i);
        if (!all_nonnegative(g)) {
          pass = false;
          witness = "negative entry at d = " + std::to_string(d) + ": " + rats_str(g);
        }
      }
      add_item(report, "star-g-nonneg",
               "star-" + std::to_string(j) + "/i=" + std::to_string(i),
               "replacing with the star of a j-simplex keeps the i-coordinates nonnegative "
               "for every j <= i",
               pass, witness);
    }
  }

  for (const auto& [sname, S] : corpus_spheres()) {
    const UniPoly h = h_polynomial(S);
    const int d = S.dim() + 1;
    bool pass = true;
    std::string witness = "closure holds for i = 1..3";
    for (int i = 1; i <= 3 && pass; ++i) {
      if (!check_g_monotone_instance(h, d, i)) {
        pass = false;
        witness = "nonnegative at i = " + std::to_string(i) + " but not at i + 1";
      }
    }
    add_item(report, "g-monotone-instance", sname,
             "nonnegative i-coordinates stay nonnegative when i grows", pass, witness);
  }

  {
    const auto c2 = cross_polytope_boundary(2);
    const auto b3 = simplex_boundary(3);
    add_item(report, "g-join-instance", "cross-2*cross-2",
             "joins of complexes with nonnegative i = 2 coordinates stay nonnegative",
             check_g_join_instance(c2, c2, 2), "join is a 3-sphere");
    add_item(report, "g-join-instance", "cross-2*simplex-boundary-3",
             "joins of complexes with nonnegative i = 2 coordinates stay nonnegative",
             check_g_join_instance(c2, b3, 2), "join is a 4-sphere");
    add_item(report, "g-join-instance", "simplex-boundary-3*simplex-boundary-3",
             "joins of complexes with nonnegative i = 2 coordinates stay nonnegative",
             check_g_join_instance(b3, b3, 2), "join is a 5-sphere");
  }
  return report;
}

Report suite_delta_k(const VerifyOptions& opts) {
  Report report;
  report.suite = "delta-k";
  report.options = opts;

  int lidx = 0;
  for (const auto& [lname, L] : planar_templates()) {
    ++lidx;
    const auto c2 = census_2d(L);
    const long m = static_cast<long>(c2.m);

    // Face counts of the template interior: m vertices, 3m edges, 2m + 1
    // triangles; the step identity consumes this polynomial minus t^3.
    {
      std::vector<long long> by_size(4, 0);
      for (const auto& f : L.interior_faces()) ++by_size.at(f.size());
      const bool pass = by_size[0] == 0 && by_size[1] == m && by_size[2] == 3 * m &&
                        by_size[3] == 2 * m + 1;
      add_item(report, "template-interior-f", lname,
               "the interior face counts are (m, 3m, 2m + 1)", pass,
               std::to_string(by_size[1]) + ", " + std::to_string(by_size[2]) + ", " +
                   std::to_string(by_size[3]));
    }

    const UniPoly step_poly({Rat(0), Rat(m), Rat(3 * m), Rat(2 * m)});
    const UniPoly t_one_plus_t({Rat(0), Rat(m), Rat(m)});

    for (int d = 3; d <= std::min(4, opts.max_d); ++d) {
      const std::string instance = lname + "/d=" + std::to_string(d);
      const auto cross = cross_polytope_boundary(d);
      const auto plan = random_plan(cross, L, mix(opts.seed, 8301, lidx * 16 + d));

      SimplicialComplex delta = cross;
      bool f_ok = true, h_ok = true, g_ok = true;
      std::string f_w = "holds at every step", h_w = f_w, g_w = f_w;
      int step_index = 0;
      for (const auto& sigma : plan.order) {
        ++step_index;
        const auto lk = link(delta, sigma);
        const UniPoly f_before = f_polynomial(delta);
        const UniPoly h_before = h_polynomial(delta);
        const UniPoly lk_f = f_polynomial(lk);
        const UniPoly lk_h = h_polynomial(lk);

        replace_face(delta, L, sigma);

        if (f_ok && !(f_polynomial(delta) == f_before + step_poly * lk_f)) {
          f_ok = false;
          f_w = "face-count identity fails at step " + std::to_string(step_index);
        }
        if (h_ok && !(h_polynomial(delta) == h_before + t_one_plus_t * lk_h)) {
          h_ok = false;
          h_w = "h-identity fails at step " + std::to_string(step_index);
        }
        if (g_ok) {
          const auto g = g_vector(h_polynomial(delta), d, 2);
          if (!all_nonnegative(g)) {
            g_ok = false;
            g_w = "negative coordinate after step " + std::to_string(step_index) + ": " +
                  rats_str(g);
          }
        }
      }
      add_item(report, "step-f-identity", instance,
               "each replacement adds (m t + 3m t^2 + 2m t^3) times the link face count",
               f_ok, f_w);
      add_item(report, "step-h-identity", instance,
               "each replacement adds m t (1 + t) times the link h-polynomial", h_ok, h_w);
      add_item(report, "step-g2-nonneg", instance,
               "the i = 2 coordinates stay nonnegative along the whole chain", g_ok, g_w);

      TchFamily family(L, opts.cross_guard);
      add_item(report, "final-h", instance,
               "the chain ends at the h-polynomial predicted by the face-count formula",
               h_polynomial(delta) == formula_h(family, d), poly_str(h_polynomial(delta)));
    }
  }
  return report;
}

Report suite_fstable(const VerifyOptions& opts) {
  Report report;
  report.suite = "fstable";
  report.options = opts;

  const auto bool_str = [](const FStableResult& r) {
    std::ostringstream out;
    out << "(F: " << (r.f_roots_in_unit_interval ? "true" : "false")
        << ", h: " << (r.h_roots_negative ? "true" : "false")
        << ", g2: " << (r.g2_roots_in_left_unit ? "true" : "false") << ")";
    return out.str();
  };

  {
    const UniPoly h({Rat(1), Rat(0), Rat(0), Rat(1)});
    const auto r = fstable_transforms(h, 3);
    add_item(report, "pinned-example", "h=(1,0,0,1)",
             "all three root-location conditions are false for h = 1 + t^3",
             r.agree() && !r.f_roots_in_unit_interval, bool_str(r));
  }

  for (const auto& [sname, S] : corpus_spheres()) {
    const auto r = fstable_transforms(S);
    add_item(report, "sphere-agreement", sname,
             "the three root-location conditions agree on corpus spheres", r.agree(),
             bool_str(r));
    if (sname.rfind("cross-", 0) == 0) {
      add_item(report, "cross-polytope-true", sname,
               "cross-polytope boundaries satisfy all three conditions",
               r.agree() && r.f_roots_in_unit_interval, bool_str(r));
    }
  }

  {
    int tidx = 0;
    for (const auto& [lname, L] : corpus_templates()) {
      ++tidx;
      if (lname != "path-1" && lname != "path-2" && lname != "star-2") continue;
      for (int d = 2; d <= std::min(4, opts.max_d); ++d) {
        const auto cross = cross_polytope_boundary(d);
        const auto plan = random_plan(cross, L, mix(opts.seed, 8501, tidx * 16 + d));
        const auto W = tchebyshev_triangulation(cross, L, plan);
        const auto r = fstable_transforms(W.complex);
        add_item(report, "replaced-sphere-true", lname + "/d=" + std::to_string(d),
                 "replaced cross-polytope boundaries for low-dimensional templates satisfy "
                 "all three conditions",
                 r.agree() && r.f_roots_in_unit_interval, bool_str(r));
      }
    }
  }

  {
    TchFamily family(build_star_template(3), opts.cross_guard);
    const auto r = fstable_transforms(formula_h(family, 6), 6);
    add_item(report, "counterexample-agreement", "star-3/d=6",
             "the three conditions agree (all false) on the non-real-rooted sphere",
             r.agree() && !r.f_roots_in_unit_interval, bool_str(r));
  }

  {
    std::mt19937_64 rng(mix(opts.seed, 9001));
    bool agree_ok = true;
    std::string agree_w = "agreement on all 100 random h-polynomials";
    bool rooted_ok = true;
    std::string rooted_w = "products of negative-root factors satisfy all three conditions";
    for (int idx = 0; idx < 100; ++idx) {
      const int d = 2 + static_cast<int>(rng() % 7);
      std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1, Rat(0));
      const int family_kind = idx % 3;
      UniPoly h;
      if (family_kind == 1) {
        // Palindromic by construction: a product of (1 + a t)(1 + t/a)
        // factors, with one (1 + t) factor when d is odd.
        const Rat choices[] = {Rat(1), Rat(2), Rat(3), Rat(5), Rat(1, 2), Rat(1, 3)};
        h = UniPoly(1);
        for (int pair = 0; pair < d / 2; ++pair) {
          const Rat a = choices[rng() % 6];
          h = h * UniPoly({Rat(1), a}) * UniPoly({Rat(1), Rat(1) / a});
        }
        if (d % 2 == 1) h = h * UniPoly({Rat(1), Rat(1)});
      } else {
        coeffs[0] = Rat(1);
        coeffs[static_cast<std::size_t>(d)] = Rat(1);
        for (int i = 1; 2 * i <= d; ++i) {
          const long v = family_kind == 0 ? static_cast<long>(rng() % 14) - 4
                                          : static_cast<long>(rng() % 10);
          coeffs[static_cast<std::size_t>(i)] = Rat(v);
          coeffs[static_cast<std::size_t>(d - i)] = Rat(v);
        }
        h = UniPoly(coeffs);
      }
      const auto r = fstable_transforms(h, d);
      if (agree_ok && !r.agree()) {
        agree_ok = false;
        agree_w = "disagreement at sample " + std::to_string(idx) + ": " + bool_str(r) +
                  " for h = " + poly_str(h);
      }
      if (family_kind == 1 && rooted_ok && !(r.agree() && r.h_roots_negative)) {
        rooted_ok = false;
        rooted_w = "sample " + std::to_string(idx) + " gave " + bool_str(r);
      }
    }
    add_item(report, "random-agreement", "100-samples",
             "the three root-location conditions agree on random symmetric h-polynomials",
             agree_ok, agree_w);
    add_item(report, "random-realrooted-true", "construction-family",
             "real-rooted constructions satisfy all three conditions", rooted_ok, rooted_w);
  }
  return report;
}

Report suite_stellar_identity(const VerifyOptions& opts) {
  Report report;
  report.suite = "stellar-identity";
  report.options = opts;

  for (const auto& [sname, S] : corpus_spheres()) {
    bool h_ok = true, g_ok = true, vertex_ok = true;
    std::string h_w = "holds for every face and every cone vertex choice";
    std::string g_w = "holds for every face at i = 2";
    std::string v_w = "h-polynomial unchanged by single-vertex stellar moves";
    const UniPoly h_before = h_polynomial(S);
    const int d = S.dim() + 1;
    const auto g_before = g_vector(S, 2);

    for (const auto& f : S.faces()) {
      if (f.empty()) continue;
      VertexId fresh = 0;
      const auto subdivided = stellar_subdivision(S, f, &fresh);
      const UniPoly h_after = h_polynomial(subdivided);
      if (f.size() == 1) {
        if (vertex_ok && !(h_after == h_before)) {
          vertex_ok = false;
          v_w = "h changes at vertex " + face_to_string(f);
        }
        continue;
      }
      for (VertexId u : f) {
        const auto lk = link(subdivided, Face{std::min(u, fresh), std::max(u, fresh)});
        const UniPoly lk_h = h_polynomial(lk);
        if (h_ok && !(h_after == h_before + UniPoly::monomial(1, Rat(1)) * lk_h)) {
          h_ok = false;
          h_w = "identity fails at face " + face_to_string(f) + ", vertex " +
                std::to_string(u);
        }
        if (g_ok) {
          const auto g_after = g_vector(h_after, d, 2);
          const auto g_link = g_vector(lk_h, d - 2, 2);
          bool match = true;
          for (std::size_t j = 0; j < g_after.size() && match; ++j) {
            Rat expect = j < g_before.size() ? g_before[j] : Rat(0);
            if (j >= 1 && j - 1 < g_link.size()) expect += g_link[j - 1];
            if (!(g_after[j] == expect)) match = false;
          }
          if (!match) {
            g_ok = false;
            g_w = "coordinate identity fails at face " + face_to_string(f);
          }
        }
      }
    }
    add_item(report, "stellar-h-identity", sname,
             "h after a stellar move equals h plus t times the h-polynomial of the "
             "edge link at the new vertex",
             h_ok, h_w);
    add_item(report, "stellar-g2-identity", sname,
             "the same identity read in i = 2 coordinates: each entry gains the shifted "
             "link coordinate",
             g_ok, g_w);
    add_item(report, "stellar-vertex-h-invariance", sname,
             "a stellar move at a single vertex relabels the complex and preserves h",
             vertex_ok, v_w);

    {
      VertexId base = S.vertex_ids().empty() ? 0 : S.vertex_ids().back() + 1;
      const auto poles = SimplicialComplex::from_facets({{base}, {base + 1}});
      const UniPoly h_susp = h_polynomial(join(S, poles));
      add_item(report, "suspension-h", sname,
               "suspension multiplies the h-polynomial by (1 + t)",
               h_susp == UniPoly({Rat(1), Rat(1)}) * h_before, poly_str(h_susp));
    }
  }

  for (const auto& [sname, S] : corpus_spheres()) {
    if (sname == "cross-4" || sname == "simplex-boundary-4") continue;
    bool pass = true;
    std::string witness = "links commute with stellar moves on every face pair";
    for (const auto& f : S.faces()) {
      if (f.size() < 2 || !pass) continue;
      VertexId fresh = 0;
      const auto subdivided = stellar_subdivision(S, f, &fresh);
      for (const auto& g : S.faces()) {
        if (g.empty() || face_subset(f, g)) continue;
        const auto lhs = link(subdivided, g);

        const auto base_link = link(S, g);
        const Face rest = face_difference(f, g);
        SimplicialComplex rhs = base_link;
        VertexId rhs_fresh = -1;
        if (base_link.contains(rest) && !rest.empty()) {
          rhs = stellar_subdivision(base_link, rest, &rhs_fresh);
        }
        if (!(f_vector(lhs) == f_vector(rhs))) {
          pass = false;
          witness = "f-vectors differ for face " + face_to_string(f) + ", link at " +
                    face_to_string(g);
          break;
        }
        // Same comparison refined to the faces through the fresh vertex.
        std::vector<long long> lhs_counts(lhs.dim() + 2, 0), rhs_counts(lhs.dim() + 2, 0);
        for (const auto& face : lhs.faces()) {
          if (std::binary_search(face.begin(), face.end(), fresh)) ++lhs_counts[face.size()];
        }
        if (rhs_fresh >= 0) {
          for (const auto& face : rhs.faces()) {
            if (std::binary_search(face.begin(), face.end(), rhs_fresh)) {
              ++rhs_counts[face.size()];
            }
          }
        }
        if (lhs_counts != rhs_counts) {
          pass = false;
          witness = "fresh-vertex face counts differ for face " + face_to_string(f) +
                    ", link at " + face_to_string(g);
          break;
        }
      }
    }
    add_item(report, "link-stellar-commutation", sname,
             "taking links commutes with stellar subdivision away from the link face",
             pass, witness);
  }
  return report;
}

}  // namespace

bool Report::pass() const {
  for (const auto& item : items) {
    if (!item.pass) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "order-independence", "routes",        "genfun",       "tch-props",
      "real-roots-1d",      "real-roots-2d", "counterexample-k3",
      "u-props",            "cross-polytope", "g2-nonneg",   "delta-k",
      "fstable",            "stellar-identity"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const std::string& name, const VerifyOptions& opts) {
  Report report;
  if (name == "order-independence") {
    report = suite_order_independence(opts);
  } else if (name == "routes") {
    report = suite_routes(opts);
  } else if (name == "genfun") {
    report = suite_genfun(opts);
  } else if (name == "tch-props") {
    report = suite_tch_props(opts);
  } else if (name == "real-roots-1d") {
    report = suite_real_roots_1d(opts);
  } else if (name == "real-roots-2d") {
    report = suite_real_roots_2d(opts);
  } else if (name == "counterexample-k3") {
    report = suite_counterexample_k3(opts);
  } else if (name == "u-props") {
    report = suite_u_props(opts);
  } else if (name == "cross-polytope") {
    report = suite_cross_polytope(opts);
  } else if (name == "g2-nonneg") {
    report = suite_g2_nonneg(opts);
  } else if (name == "delta-k") {
    report = suite_delta_k(opts);
  } else if (name == "fstable") {
    report = suite_fstable(opts);
  } else if (name == "stellar-identity") {
    report = suite_stellar_identity(opts);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  std::stable_sort(report.items.begin(), report.items.end(),
                   [](const CheckItem& a, const CheckItem& b) {
                     if (a.check != b.check) return a.check < b.check;
                     return a.instance < b.instance;
                   });
  return report;
}

std::string report_to_json(const Report& report, int indent) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["options"] = {{"seed", report.options.seed},
                  {"max_n", report.options.max_n},
                  {"max_d", report.options.max_d},
                  {"cross_guard", report.options.cross_guard}};
  j["pass"] = report.pass();
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : report.items) {
    items.push_back({{"check", item.check},
                     {"instance", item.instance},
                     {"claim", item.claim},
                     {"pass", item.pass},
                     {"witness", item.witness}});
  }
  j["items"] = std::move(items);
  return indent > 0 ? j.dump(indent) : j.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "suite,check,instance,pass,witness,claim\n";
  for (const auto& item : report.items) {
    out << csv_escape(report.suite) << ',' << csv_escape(item.check) << ','
        << csv_escape(item.instance) << ',' << (item.pass ? "true" : "false") << ','
        << csv_escape(item.witness) << ',' << csv_escape(item.claim) << '\n';
  }
  return out.str();
}

}  // namespace gtt::verify
