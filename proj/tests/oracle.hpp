// Independent reference implementations used only by the tests. Everything
// here recomputes expected answers from first principles (anchored path
// enumeration, subset search, duality certificates) so that library results
// are checked against a second, structurally different computation.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cyclepack/embedding.hpp"
#include "cyclepack/family.hpp"

namespace refimpl {

using cyclepack::EmbeddedGraph;
using cyclepack::FamilyKind;
using cyclepack::FamilySpec;
using cyclepack::Rat;

// Every simple cycle, each reported once as a sorted edge-id set, found by
// anchoring at its minimum edge id and enumerating simple paths between that
// edge's endpoints through strictly larger edge ids. For directed graphs only
// arc-respecting cycles are kept.
inline std::vector<std::vector<int>> all_cycles(const EmbeddedGraph& g) {
  std::vector<std::vector<int>> out;
  int n = g.n, m = g.m();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge)
  for (int e = 0; e < m; ++e) {
    adj[g.edges[e].u].push_back({g.edges[e].v, e});
    if (!g.directed) adj[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  std::vector<char> used_v(n, 0);
  std::vector<int> path;
  for (int a = 0; a < m; ++a) {
    // Anchor edge a; close the cycle by walking from head back to tail.
    int s = g.directed ? g.edges[a].v : g.edges[a].u;
    int t = g.directed ? g.edges[a].u : g.edges[a].v;
    if (s == t) continue;
    auto dfs = [&](auto&& self, int v) -> void {
      if (v == t) {
        std::vector<int> c = path;
        c.push_back(a);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
      }
      for (auto [w, e] : adj[v]) {
        if (e <= a || used_v[w]) continue;
        used_v[w] = 1;
        path.push_back(e);
        self(self, w);
        path.pop_back();
        used_v[w] = 0;
      }
    };
    used_v.assign(n, 0);
    used_v[s] = 1;
    dfs(dfs, s);
  }
  return out;
}

// Family filter applied to a raw cycle census, from the definitions alone.
inline std::vector<std::vector<int>> family_members(const EmbeddedGraph&, const FamilySpec& f,
                                                    const std::vector<std::vector<int>>& census) {
  long girth = -1;
  for (const auto& c : census)
    if (girth < 0 || static_cast<long>(c.size()) < girth) girth = static_cast<long>(c.size());
  std::vector<std::vector<int>> out;
  for (const auto& c : census) {
    int dem = 0;
    if (!f.demand.empty())
      for (int e : c) dem += f.demand[e] ? 1 : 0;
    bool keep = false;
    switch (f.kind) {
      case FamilyKind::AllUndirected:
      case FamilyKind::AllDirected: keep = true; break;
      case FamilyKind::GirthUndirected:
      case FamilyKind::GirthDirected: keep = static_cast<long>(c.size()) == girth; break;
      case FamilyKind::Odd: keep = c.size() % 2 == 1; break;
      case FamilyKind::ExactlyOneD: keep = dem == 1; break;
      case FamilyKind::AtLeastOneD: keep = dem >= 1; break;
    }
    if (keep) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> cycle_vertices(const EmbeddedGraph& g, const std::vector<int>& eset) {
  std::set<int> vs;
  for (int e : eset) {
    vs.insert(g.edges[e].u);
    vs.insert(g.edges[e].v);
  }
  return {vs.begin(), vs.end()};
}

// Conflict matrix: members share a vertex (vertex mode) or an edge (edge mode).
inline std::vector<std::vector<char>> conflicts(const EmbeddedGraph& g,
                                                const std::vector<std::vector<int>>& members,
                                                bool vertex_mode) {
  int k = static_cast<int>(members.size());
  std::vector<std::vector<int>> items(k);
  for (int i = 0; i < k; ++i)
    items[i] = vertex_mode ? cycle_vertices(g, members[i]) : members[i];
  std::vector<std::vector<char>> conf(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> inter;
      std::set_intersection(items[i].begin(), items[i].end(), items[j].begin(), items[j].end(),
                            std::back_inserter(inter));
      conf[i][j] = conf[j][i] = !inter.empty();
    }
  return conf;
}

// Maximum-weight conflict-free subset by plain include/exclude recursion.
inline Rat max_packing_weight(const std::vector<std::vector<char>>& conf, const std::vector<Rat>& w) {
  int k = static_cast<int>(conf.size());
  Rat best = 0;
  std::vector<char> banned(k, 0);
  auto rec = [&](auto&& self, int i, const Rat& have) -> void {
    if (i == k) {
      if (have > best) best = have;
      return;
    }
    Rat rest = have;
    for (int j = i; j < k; ++j)
      if (!banned[j]) rest += w[j];
    if (rest <= best) return;
    if (!banned[i]) {
      std::vector<int> newly;
      for (int j = i + 1; j < k; ++j)
        if (!banned[j] && conf[i][j]) {
          banned[j] = 1;
          newly.push_back(j);
        }
      self(self, i + 1, have + w[i]);
      for (int j : newly) banned[j] = 0;
    }
    self(self, i + 1, have);
  };
  rec(rec, 0, Rat(0));
  return best;
}

// Minimum hitting set over the given ground sets by branching on the first
// unhit set's elements.
inline int min_hitting_size(const std::vector<std::vector<int>>& sets) {
  int best = 0;
  for (const auto& s : sets) {
    if (s.empty()) return -1;  // unhittable
    best += 1;                 // picking one element per set always works
  }
  std::set<int> chosen;
  auto rec = [&](auto&& self, size_t i, int used) -> void {
    if (used >= best) return;
    while (i < sets.size()) {
      bool hit = false;
      for (int x : sets[i])
        if (chosen.count(x)) {
          hit = true;
          break;
        }
      if (!hit) break;
      ++i;
    }
    if (i == sets.size()) {
      best = used;
      return;
    }
    for (int x : sets[i]) {
      if (chosen.count(x)) continue;
      chosen.insert(x);
      self(self, i + 1, used + 1);
      chosen.erase(x);
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Strong-duality certificate for the packing LP: primal feasible, dual
// feasible over the complete member list, objectives equal.
struct LpCertificate {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool objectives_match = false;
  bool ok() const { return primal_feasible && dual_feasible && objectives_match; }
};

inline LpCertificate certify_lp(const EmbeddedGraph& g, const FamilySpec& f, bool vertex_mode,
                                const std::vector<std::vector<int>>& members,
                                const std::vector<std::vector<int>>& primal_support,
                                const std::vector<Rat>& primal_x, const std::vector<Rat>& dual_y,
                                const Rat& value) {
  LpCertificate cert;
  int rows = vertex_mode ? g.n : g.m();
  // Primal: x >= 0, per-row load <= 1, objective == value, support in family.
  std::vector<Rat> load(rows, Rat(0));
  Rat primal_obj = 0;
  bool ok = primal_support.size() == primal_x.size();
  for (size_t i = 0; ok && i < primal_support.size(); ++i) {
    if (primal_x[i] < 0) ok = false;
    auto items = vertex_mode ? cycle_vertices(g, primal_support[i]) : primal_support[i];
    for (int r : items) load[r] += primal_x[i];
    Rat w = 1;
    if (f.weighted()) {
      w = 0;
      for (int e : primal_support[i])
        if (f.demand[e]) w += f.demand_weight[e];
    }
    primal_obj += w * primal_x[i];
    bool found = std::binary_search(members.begin(), members.end(), primal_support[i]);
    if (!found) ok = false;
  }
  for (int r = 0; ok && r < rows; ++r)
    if (load[r] > 1) ok = false;
  cert.primal_feasible = ok && primal_obj == value;

  // Dual: y >= 0, every member covered to at least its weight, sum y == value.
  ok = static_cast<int>(dual_y.size()) == rows;
  Rat dual_obj = 0;
  for (int r = 0; ok && r < rows; ++r) {
    if (dual_y[r] < 0) ok = false;
    dual_obj += dual_y[r];
  }
  for (const auto& c : members) {
    if (!ok) break;
    Rat cover = 0;
    auto items = vertex_mode ? cycle_vertices(g, c) : c;
    for (int r : items) cover += dual_y[r];
    Rat w = 1;
    if (f.weighted()) {
      w = 0;
      for (int e : c)
        if (f.demand[e]) w += f.demand_weight[e];
    }
    if (cover < w) ok = false;
  }
  cert.dual_feasible = ok;
  cert.objectives_match = dual_obj == value;
  return cert;
}

}  // namespace refimpl
