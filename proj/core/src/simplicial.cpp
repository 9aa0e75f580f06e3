#include "gtt/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gtt {

Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw std::invalid_argument("face has duplicate vertices: " + face_to_string(f));
  }
  return f;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face u;
  u.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

Face face_difference(const Face& a, const Face& b) {
  Face d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return d;
}

int face_intersection_size(const Face& a, const Face& b) {
  int count = 0;
  auto ia = a.begin();
  for (VertexId v : b) {
    while (ia != a.end() && *ia < v) ++ia;
    if (ia == a.end()) break;
    if (*ia == v) ++count;
  }
  return count;
}

std::string face_to_string(const Face& f) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  out << "}";
  return out.str();
}

SimplicialComplex::SimplicialComplex() { faces_.insert(Face{}); }

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& facets) {
  SimplicialComplex K;
  for (const Face& raw : facets) {
    const Face f = sorted_face(raw);
    // Insert every subset; subsets are enumerated by bitmask since facets are
    // small (a facet of dimension d has d+1 <= ~32 vertices).
    if (f.size() > 30) throw std::invalid_argument("facet too large");
    for (unsigned mask = 0; mask < (1u << f.size()); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      K.faces_.insert(std::move(sub));
    }
    for (VertexId v : f) K.origin_.emplace(v, 0);
  }
  for (const auto& [v, s] : K.origin_) K.next_id_ = std::max(K.next_id_, v + 1);
  return K;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Face& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Face> SimplicialComplex::facets() const {
  // A face is maximal iff it is no drop-one subset of another face.
  std::set<Face> non_maximal;
  for (const Face& f : faces_) {
    if (f.empty()) continue;
    Face sub(f.begin() + 1, f.end());
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      non_maximal.insert(sub);
      if (drop + 1 < f.size()) sub[drop] = f[drop];
    }
  }
  std::vector<Face> result;
  for (const Face& f : faces_) {
    if (!f.empty() && !non_maximal.count(f)) result.push_back(f);
  }
  if (result.empty() && faces_.size() == 1) result.push_back(Face{});
  return result;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
  std::vector<Face> result;
  for (const Face& f : faces_) {
    if (static_cast<int>(f.size()) == d + 1) result.push_back(f);
  }
  return result;
}

std::vector<VertexId> SimplicialComplex::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(origin_.size());
  for (const auto& [v, s] : origin_) ids.push_back(v);
  return ids;
}

VertexId SimplicialComplex::allocate_vertex(int origin_step) {
  const VertexId v = next_id_++;
  origin_[v] = origin_step;
  return v;
}

void SimplicialComplex::insert_face(const Face& f) {
  faces_.insert(f);
  for (VertexId v : f) {
    origin_.emplace(v, 0);
    next_id_ = std::max(next_id_, v + 1);
  }
}

void SimplicialComplex::prune_isolated_vertices() {
  for (auto it = origin_.begin(); it != origin_.end();) {
    if (!contains(Face{it->first})) {
      it = origin_.erase(it);
    } else {
      ++it;
    }
  }
}

void SimplicialComplex::set_origin(VertexId v, int origin_step) {
  origin_[v] = origin_step;
  next_id_ = std::max(next_id_, v + 1);
}

std::vector<long long> f_vector(const SimplicialComplex& K) {
  std::vector<long long> f(K.dim() + 2, 0);
  for (const Face& face : K.faces()) ++f[face.size()];
  return f;
}

UniPoly f_polynomial(const SimplicialComplex& K) {
  const auto f = f_vector(K);
  std::vector<Rat> coeffs(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) coeffs[i] = Rat(static_cast<long>(f[i]));
  return UniPoly(std::move(coeffs));
}

UniPoly h_polynomial(const SimplicialComplex& K) {
  const auto f = f_vector(K);
  const long n = K.dim() + 1;
  std::vector<Rat> h(n + 1, Rat(0));
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= i; ++j) {
      const Rat sign = (i - j) % 2 == 0 ? Rat(1) : Rat(-1);
      h[i] += sign * binom(n - j, i - j) * Rat(static_cast<long>(f[j]));
    }
  }
  return UniPoly(std::move(h));
}

UniPoly F_polynomial(const SimplicialComplex& K) {
  const auto f = f_vector(K);
  const UniPoly half_shift(std::vector<Rat>{Rat(-1, 2), Rat(1, 2)});  // (x-1)/2
  UniPoly F;
  for (std::size_t j = 0; j < f.size(); ++j) {
    F += Rat(static_cast<long>(f[j])) * half_shift.pow(static_cast<int>(j));
  }
  return F;
}

SimplicialComplex link(const SimplicialComplex& K, const Face& f) {
  if (!K.contains(f)) {
    throw std::invalid_argument("link of a non-face: " + face_to_string(f));
  }
  SimplicialComplex L;
  for (const Face& g : K.faces()) {
    if (!face_subset(f, g)) continue;
    L.insert_face(face_difference(g, f));
  }
  for (const auto& [v, s] : K.vertex_origin()) {
    if (L.vertex_origin().count(v)) L.set_origin(v, s);
  }
  return L;
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& M) {
  for (const auto& [v, s] : K.vertex_origin()) {
    if (M.vertex_origin().count(v)) {
      throw std::invalid_argument("join requires disjoint vertex sets");
    }
  }
  SimplicialComplex J;
  for (const Face& a : K.faces()) {
    for (const Face& b : M.faces()) {
      J.insert_face(face_union(a, b));
    }
  }
  for (const auto& [v, s] : K.vertex_origin()) J.set_origin(v, s);
  for (const auto& [v, s] : M.vertex_origin()) J.set_origin(v, s);
  return J;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int j) {
  if (j < -1) throw std::invalid_argument("skeleton dimension must be >= -1");
  SimplicialComplex S;
  for (const Face& f : K.faces()) {
    if (static_cast<int>(f.size()) <= j + 1) S.insert_face(f);
  }
  for (const auto& [v, s] : K.vertex_origin()) {
    if (S.vertex_origin().count(v)) S.set_origin(v, s);
  }
  return S;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::set<VertexId>& vertices) {
  SimplicialComplex S;
  for (const Face& f : K.faces()) {
    bool inside = true;
    for (VertexId v : f) {
      if (!vertices.count(v)) {
        inside = false;
        break;
      }
    }
    if (inside) S.insert_face(f);
  }
  for (const auto& [v, s] : K.vertex_origin()) {
    if (S.vertex_origin().count(v)) S.set_origin(v, s);
  }
  return S;
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& K, const Face& f,
                                      VertexId* new_vertex) {
  if (f.empty() || !K.contains(f)) {
    throw std::invalid_argument("stellar subdivision requires a nonempty face");
  }
  SimplicialComplex R = K;
  const int step = R.bump_subdivision_step();
  const VertexId v = R.allocate_vertex(step);
  if (new_vertex != nullptr) *new_vertex = v;

  std::vector<Face> star;
  for (const Face& g : R.faces()) {
    if (face_subset(f, g)) star.push_back(g);
  }
  std::vector<Face> link_faces;
  link_faces.reserve(star.size());
  for (const Face& g : star) link_faces.push_back(face_difference(g, f));
  for (const Face& g : star) R.erase_face(g);

  // Proper subsets of f, each joined with the link and the new vertex.
  if (f.size() > 30) throw std::invalid_argument("face too large");
  for (unsigned mask = 0; mask + 1 < (1u << f.size()); ++mask) {
    Face a{v};
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (mask & (1u << i)) a.push_back(f[i]);
    }
    a = sorted_face(std::move(a));
    for (const Face& b : link_faces) R.insert_face(face_union(a, b));
  }
  R.prune_isolated_vertices();
  return R;
}

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 0) throw std::invalid_argument("cross-polytope dimension must be >= 0");
  SimplicialComplex K;
  // Product over antipodal pairs {2i, 2i+1}: skip the pair, or pick one side.
  std::vector<Face> stack{Face{}};
  for (int i = 0; i < d; ++i) {
    std::vector<Face> next;
    next.reserve(stack.size() * 3);
    for (const Face& f : stack) {
      next.push_back(f);
      Face a = f;
      a.push_back(2 * i);
      next.push_back(std::move(a));
      Face b = f;
      b.push_back(2 * i + 1);
      next.push_back(std::move(b));
    }
    stack = std::move(next);
  }
  for (Face& f : stack) K.insert_face(std::move(f));
  return K;
}

std::vector<Face> missing_faces(const SimplicialComplex& K) {
  const std::vector<VertexId> ids = K.vertex_ids();
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
  // Adjacency prefilter: a missing face has a complete 1-skeleton except when
  // it is itself an edge.
  std::vector<std::vector<bool>> adjacent(ids.size(),
                                          std::vector<bool>(ids.size(), false));
  for (const Face& f : K.faces()) {
    if (f.size() != 2) continue;
    const int a = pos[f[0]], b = pos[f[1]];
    adjacent[a][b] = adjacent[b][a] = true;
  }
  std::vector<Face> result;
  for (const Face& g : K.faces()) {
    if (g.empty()) continue;
    for (std::size_t vi = pos[g.back()] + 1; vi < ids.size(); ++vi) {
      const VertexId v = ids[vi];
      if (g.size() >= 2) {
        bool connected = true;
        for (VertexId w : g) {
          if (!adjacent[pos[w]][vi]) {
            connected = false;
            break;
          }
        }
        if (!connected) continue;
      }
      Face cand = g;
      cand.push_back(v);
      if (K.contains(cand)) continue;
      bool boundary_complete = true;
      Face sub(cand.begin() + 1, cand.end());
      for (std::size_t drop = 0; drop + 1 < cand.size(); ++drop) {
        // sub = cand minus cand[drop]; the final drop (v itself) gives g.
        if (!K.contains(sub)) {
          boundary_complete = false;
          break;
        }
        sub[drop] = cand[drop];
      }
      if (boundary_complete) result.push_back(std::move(cand));
    }
  }
  return result;
}

std::optional<int> max_missing_dimension(const SimplicialComplex& K) {
  std::optional<int> best;
  for (const Face& f : missing_faces(K)) {
    const int d = static_cast<int>(f.size()) - 1;
    if (!best || d > *best) best = d;
  }
  return best;
}

namespace {

// Sparse column with entries sorted by row index.
using SparseColumn = std::vector<std::pair<int, Rat>>;

SparseColumn axpy(const SparseColumn& x, const Rat& c, const SparseColumn& y) {
  // x + c*y, merged by row.
  SparseColumn out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, c * y[j].second);
      ++j;
    } else {
      Rat v = x[i].second + c * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

long long column_reduction_rank(std::vector<SparseColumn> cols) {
  std::map<int, std::size_t> pivot_of_row;
  std::vector<SparseColumn> reduced;
  for (SparseColumn& col : cols) {
    while (!col.empty()) {
      const auto it = pivot_of_row.find(col.back().first);
      if (it == pivot_of_row.end()) break;
      const SparseColumn& p = reduced[it->second];
      col = axpy(col, -col.back().second / p.back().second, p);
    }
    if (!col.empty()) {
      pivot_of_row[col.back().first] = reduced.size();
      reduced.push_back(std::move(col));
    }
  }
  return static_cast<long long>(reduced.size());
}

}  // namespace

std::vector<long long> reduced_betti(const SimplicialComplex& K) {
  const int D = K.dim();
  // by_size[s] = faces with s vertices (dimension s-1), with index lookup.
  std::vector<std::map<Face, int>> index_by_size(D + 2);
  for (const Face& f : K.faces()) {
    auto& m = index_by_size[f.size()];
    const int idx = static_cast<int>(m.size());
    m.emplace(f, idx);
  }
  // ranks[s] = rank of the boundary map from faces of size s to size s-1.
  std::vector<long long> ranks(D + 3, 0);
  for (int s = 1; s <= D + 1; ++s) {
    std::vector<SparseColumn> cols;
    cols.reserve(index_by_size[s].size());
    for (const auto& [f, idx] : index_by_size[s]) {
      SparseColumn col;
      Face sub(f.begin() + 1, f.end());
      Rat sign(1);
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        col.emplace_back(index_by_size[s - 1].at(sub), sign);
        if (drop + 1 < f.size()) sub[drop] = f[drop];
        sign = -sign;
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      cols.push_back(std::move(col));
    }
    ranks[s] = column_reduction_rank(std::move(cols));
  }
  std::vector<long long> betti(D + 2, 0);
  for (int s = 0; s <= D + 1; ++s) {
    betti[s] = static_cast<long long>(index_by_size[s].size()) - ranks[s] - ranks[s + 1];
  }
  return betti;
}

bool has_sphere_betti(const SimplicialComplex& K, int m) {
  const auto b = reduced_betti(K);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const long long expected = (static_cast<int>(i) == m + 1) ? 1 : 0;
    if (b[i] != expected) return false;
  }
  return m + 1 < static_cast<int>(b.size());
}

bool has_ball_betti(const SimplicialComplex& K) {
  const auto b = reduced_betti(K);
  for (const long long x : b) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace gtt
