#pragma once

#include <vector>

#include "cycle.hpp"
#include "embedding.hpp"
#include "family.hpp"
#include "simplex.hpp"

namespace cyclepack {

struct FractionalPacking {
  DisjointMode mode = DisjointMode::Vertex;
  bool weighted = false;
  std::vector<Cycle> columns;  // support columns only (x > 0)
  std::vector<Rat> x;          // aligned with columns
  Rat value = 0;               // objective (= sum of x for unweighted families)
  Rat total_length = 0;        // sum of |C| * x_C over the support
  std::vector<Rat> dual;       // per vertex (Vertex mode) or per edge (Edge mode)
};

namespace detail {

inline int master_rows(const EmbeddedGraph& g, DisjointMode mode) {
  return mode == DisjointMode::Vertex ? g.n : g.m();
}

inline const std::vector<int>& column_items(const Cycle& c, DisjointMode mode) {
  return mode == DisjointMode::Vertex ? c.verts : c.eset;
}

// Edge weights whose sum over any cycle equals the cycle's dual load: every
// cycle vertex has exactly two incident cycle edges, so splitting each vertex
// dual across its endpoints is exact.
inline std::vector<Rat> pricing_weights(const EmbeddedGraph& g, DisjointMode mode, const std::vector<Rat>& dual,
                                        const Rat& per_edge_extra) {
  std::vector<Rat> w(g.m());
  for (int e = 0; e < g.m(); ++e) {
    w[e] = mode == DisjointMode::Vertex ? (dual[g.edges[e].u] + dual[g.edges[e].v]) / 2 : dual[e];
    w[e] += per_edge_extra;
  }
  return w;
}

inline bool has_column(const std::vector<Cycle>& cols, const Cycle& c) {
  for (const auto& d : cols)
    if (d.eset == c.eset) return true;
  return false;
}

}  // namespace detail

// Restricted master over explicit columns: maximize the weighted column sum
// subject to per-vertex / per-edge load at most one (plus an optional total
// mass equation). Exposes the full simplex result including basis and duals.
inline LpResult solve_restricted_master(const EmbeddedGraph& g, const FamilySpec& f, DisjointMode mode,
                                        const std::vector<Cycle>& columns, bool length_objective = false,
                                        const Rat* mass = nullptr) {
  int rows = detail::master_rows(g, mode);
  int cols = static_cast<int>(columns.size());
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols, Rat(0)));
  for (int j = 0; j < cols; ++j)
    for (int r : detail::column_items(columns[j], mode)) A[r][j] = 1;
  std::vector<Rat> b(rows, Rat(1)), c(cols);
  for (int j = 0; j < cols; ++j)
    c[j] = length_objective ? Rat(-columns[j].length()) : f.cycle_weight(columns[j]);
  std::vector<std::vector<Rat>> A_eq;
  std::vector<Rat> b_eq;
  if (mass) {
    A_eq.assign(1, std::vector<Rat>(cols, Rat(1)));
    for (int j = 0; j < cols; ++j) A_eq[0][j] = f.cycle_weight(columns[j]);
    b_eq.push_back(*mass);
  }
  return solve_lp(c, A, b, A_eq, b_eq);
}

// Fractional cycle packing optimum by column generation: alternate between the
// restricted master and the family weight oracle pricing its duals. Exact
// termination: a priced-out master is optimal, and strong duality is checked.
inline FractionalPacking solve_packing_lp(const EmbeddedGraph& g, const FamilySpec& f, DisjointMode mode,
                                          long max_iter = 100000) {
  FractionalPacking out;
  out.mode = mode;
  out.weighted = f.weighted();
  std::vector<Cycle> columns;
  LpResult master;
  for (long it = 0;; ++it) {
    require(it < max_iter, ErrorKind::Internal, "column generation did not converge");
    master = solve_restricted_master(g, f, mode, columns);
    require(master.status == LpStatus::Optimal, ErrorKind::Internal, "restricted master must be solvable");
    auto w = detail::pricing_weights(g, mode, master.dual_le, Rat(0));
    std::optional<std::pair<Cycle, Rat>> priced;
    if (out.weighted) {
      std::vector<Rat> offset(g.m(), Rat(0));
      for (int e = 0; e < g.m(); ++e)
        if (!f.demand_weight.empty() && f.demand[e]) offset[e] = -f.demand_weight[e];
      priced = weight_oracle(g, f, w, detail::all_alive(g), &offset);
      if (priced && priced->second >= 0) priced.reset();
    } else {
      priced = weight_oracle(g, f, w, detail::all_alive(g), nullptr);
      if (priced && priced->second >= 1) priced.reset();
    }
    if (!priced) break;
    require(!detail::has_column(columns, priced->first), ErrorKind::Internal,
            "pricing returned a column already in the master");
    columns.push_back(std::move(priced->first));
  }
  // Strong duality: the dual certificate's value must match exactly.
  Rat dual_value = 0;
  for (const auto& y : master.dual_le) dual_value += y;
  require(dual_value == master.value, ErrorKind::Internal, "primal/dual optimum mismatch");

  out.value = master.value;
  out.dual = master.dual_le;
  for (size_t j = 0; j < columns.size(); ++j) {
    if (master.x[j] == 0) continue;
    out.total_length += master.x[j] * columns[j].length();
    out.x.push_back(master.x[j]);
    out.columns.push_back(std::move(columns[j]));
  }
  return out;
}

// Among all optimal fractional packings, pick one of minimum total length
// (again by column generation, seeded with an optimal support). Minimal total
// length is what makes the later uncrossing steps conserve edge multisets.
inline FractionalPacking refine_min_length(const EmbeddedGraph& g, const FamilySpec& f, DisjointMode mode,
                                           const FractionalPacking& base, long max_iter = 100000) {
  require(base.mode == mode, ErrorKind::BadParams, "mode mismatch with the base solution");
  std::vector<Cycle> columns = base.columns;
  LpResult master;
  for (long it = 0;; ++it) {
    require(it < max_iter, ErrorKind::Internal, "column generation did not converge");
    master = solve_restricted_master(g, f, mode, columns, true, &base.value);
    require(master.status != LpStatus::Infeasible, ErrorKind::ValueMismatch,
            "requested optimum value is not attainable");
    require(master.status == LpStatus::Optimal, ErrorKind::Internal, "restricted master must be solvable");
    Rat z = master.dual_eq[0];
    auto w = detail::pricing_weights(g, mode, master.dual_le, Rat(1));
    std::optional<std::pair<Cycle, Rat>> priced;
    if (f.weighted()) {
      // The value-preserving row carries each column's weight, so a column's
      // slack is |C| + y(C) + z * w(C): price with the z-scaled weights as
      // anchor offsets and a violation threshold of zero.
      std::vector<Rat> offset(g.m(), Rat(0));
      for (int e = 0; e < g.m(); ++e)
        if (!f.demand_weight.empty() && f.demand[e]) offset[e] = z * f.demand_weight[e];
      priced = weight_oracle(g, f, w, detail::all_alive(g), &offset);
      if (priced && priced->second >= 0) priced.reset();
    } else {
      priced = weight_oracle(g, f, w, detail::all_alive(g), nullptr);
      if (priced && priced->second >= -z) priced.reset();
    }
    if (!priced) break;
    require(!detail::has_column(columns, priced->first), ErrorKind::Internal,
            "pricing returned a column already in the master");
    columns.push_back(std::move(priced->first));
  }
  FractionalPacking out;
  out.mode = mode;
  out.weighted = f.weighted();
  out.value = base.value;
  out.dual = master.dual_le;
  for (size_t j = 0; j < columns.size(); ++j) {
    if (master.x[j] == 0) continue;
    out.total_length += master.x[j] * columns[j].length();
    out.x.push_back(master.x[j]);
    out.columns.push_back(std::move(columns[j]));
  }
  require(-master.value == out.total_length, ErrorKind::Internal, "length objective bookkeeping mismatch");
  return out;
}

}  // namespace cyclepack
