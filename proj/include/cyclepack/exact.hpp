#pragma once

#include <vector>

#include "cycle.hpp"
#include "embedding.hpp"
#include "enumerate.hpp"
#include "family.hpp"
#include "mis.hpp"
#include "simplex.hpp"

namespace cyclepack {

namespace detail {

inline CycleCatalog full_catalog(const EmbeddedGraph& g, const FamilySpec& f, long cap, bool with_sig = true) {
  auto cat = enumerate_cycles(g, f, cap, with_sig);
  require(!cat.truncated, ErrorKind::Truncated, "cycle enumeration exceeded its cap");
  return cat;
}

inline ConflictGraph conflicts_of(const std::vector<Cycle>& cycles, DisjointMode mode) {
  ConflictGraph cg(static_cast<int>(cycles.size()));
  for (int i = 0; i < cg.n; ++i)
    for (int j = i + 1; j < cg.n; ++j)
      if (cycles_conflict(cycles[i], cycles[j], mode)) cg.add_conflict(i, j);
  return cg;
}

}  // namespace detail

struct ExactPacking {
  std::vector<Cycle> cycles;
  Rat weight = 0;  // total family weight (= cardinality for unweighted families)
};

// Optimal disjoint cycle packing by exhaustive enumeration plus exact
// branch-and-bound. Throws Truncated when the instance is too large to
// enumerate; unweighted families maximize cardinality.
inline ExactPacking exact_max_packing(const EmbeddedGraph& g, const FamilySpec& f, DisjointMode mode,
                                      long cap = -1) {
  auto cat = detail::full_catalog(g, f, cap);
  auto cg = detail::conflicts_of(cat.cycles, mode);
  std::vector<Rat> w(cat.cycles.size());
  for (size_t i = 0; i < cat.cycles.size(); ++i) w[i] = f.cycle_weight(cat.cycles[i]);
  auto pick = max_weight_independent_set(cg, w);
  ExactPacking out;
  for (int i : pick) {
    out.cycles.push_back(cat.cycles[i]);
    out.weight += w[i];
  }
  return out;
}

// Optimal transversal (vertices or edges meeting every family member) from
// the full catalog.
inline std::vector<int> exact_min_transversal(const EmbeddedGraph& g, const FamilySpec& f, DisjointMode mode,
                                              long cap = -1) {
  auto cat = detail::full_catalog(g, f, cap, false);
  std::vector<std::vector<int>> sets;
  sets.reserve(cat.cycles.size());
  for (const auto& c : cat.cycles) {
    auto s = mode == DisjointMode::Vertex ? c.verts : c.eset;
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  return min_hitting_set(sets);
}

// Optimal transversal without full enumeration: grow a cycle pool, hit it
// optimally, and let the family weight oracle certify or refute the candidate.
// The returned set hits every member, and it is a minimum hitting set of a
// subset of members, hence optimal.
inline std::vector<int> exact_min_transversal_lazy(const EmbeddedGraph& g, const FamilySpec& f,
                                                   DisjointMode mode, long max_rounds = 100000) {
  std::vector<std::vector<int>> sets;
  std::vector<Rat> unit(g.m(), Rat(1));
  for (long round = 0; round < max_rounds; ++round) {
    auto hit = sets.empty() ? std::vector<int>{} : min_hitting_set(sets);
    std::vector<char> alive(g.m(), 1);
    if (mode == DisjointMode::Vertex) {
      std::vector<char> gone(g.n, 0);
      for (int v : hit) gone[v] = 1;
      for (int e = 0; e < g.m(); ++e) alive[e] = !gone[g.edges[e].u] && !gone[g.edges[e].v];
    } else {
      for (int e : hit) alive[e] = 0;
    }
    auto c = weight_oracle(g, f, unit, alive, nullptr);
    if (!c) return hit;
    auto s = mode == DisjointMode::Vertex ? c->first.verts : c->first.eset;
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  fail(ErrorKind::Internal, "transversal refinement did not converge");
}

struct ExactLp {
  std::vector<Cycle> cycles;  // LP columns
  LpResult lp;
};

// Fractional packing optimum over the complete member catalog: maximize the
// (weighted) column sum subject to per-vertex or per-edge load at most one.
inline ExactLp exact_lp(const EmbeddedGraph& g, const FamilySpec& f, DisjointMode mode, long cap = -1) {
  ExactLp out;
  out.cycles = detail::full_catalog(g, f, cap).cycles;
  int rows = mode == DisjointMode::Vertex ? g.n : g.m();
  int cols = static_cast<int>(out.cycles.size());
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols, Rat(0)));
  for (int j = 0; j < cols; ++j) {
    const auto& items = mode == DisjointMode::Vertex ? out.cycles[j].verts : out.cycles[j].eset;
    for (int r : items) A[r][j] = 1;
  }
  std::vector<Rat> b(rows, Rat(1)), c(cols);
  for (int j = 0; j < cols; ++j) c[j] = f.cycle_weight(out.cycles[j]);
  out.lp = solve_lp(c, A, b);
  require(out.lp.status == LpStatus::Optimal, ErrorKind::Internal, "packing relaxation must have an optimum");
  return out;
}

}  // namespace cyclepack
