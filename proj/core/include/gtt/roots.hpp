#pragma once

#include <optional>
#include <vector>

#include "gtt/unipoly.hpp"

namespace gtt {

// Square-free part p / gcd(p, p'). Requires p != 0; constants map to 1.
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition p = c * prod q_i^i with the q_i square-free, pairwise
// coprime, monic, deg q_i >= 1. Requires p != 0.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Number of distinct real roots in the open interval (a, b), computed by a
// Sturm chain on the square-free part. std::nullopt endpoints mean -inf/+inf.
// Roots at finite endpoints are excluded. Requires p != 0 and a < b when both
// endpoints are finite.
int count_distinct_real_roots(const UniPoly& p, std::optional<Rat> a,
                              std::optional<Rat> b);

// Number of real roots counted with multiplicity, over all of R.
int count_real_roots_with_multiplicity(const UniPoly& p,
                                       std::optional<Rat> a = std::nullopt,
                                       std::optional<Rat> b = std::nullopt);

// True when every complex root of p is real, i.e. the count with multiplicity
// equals the degree. Constants (degree <= 0) count as true.
bool all_roots_real(const UniPoly& p);

}  // namespace gtt
