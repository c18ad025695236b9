#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cycle.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace cyclepack {

enum class FamilyKind {
  AllUndirected,
  AllDirected,
  GirthUndirected,
  GirthDirected,
  Odd,
  ExactlyOneD,
  AtLeastOneD,
};

inline const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::AllUndirected: return "all";
    case FamilyKind::AllDirected: return "all-directed";
    case FamilyKind::GirthUndirected: return "girth";
    case FamilyKind::GirthDirected: return "girth-directed";
    case FamilyKind::Odd: return "odd";
    case FamilyKind::ExactlyOneD: return "d-cycle";
    case FamilyKind::AtLeastOneD: return "hit-d";
  }
  return "?";
}

inline std::optional<FamilyKind> family_from_name(const std::string& s) {
  for (FamilyKind k : {FamilyKind::AllUndirected, FamilyKind::AllDirected, FamilyKind::GirthUndirected,
                       FamilyKind::GirthDirected, FamilyKind::Odd, FamilyKind::ExactlyOneD,
                       FamilyKind::AtLeastOneD})
    if (s == family_name(k)) return k;
  return std::nullopt;
}

inline bool family_is_directed(FamilyKind k) {
  return k == FamilyKind::AllDirected || k == FamilyKind::GirthDirected;
}
inline bool family_uses_demands(FamilyKind k) {
  return k == FamilyKind::ExactlyOneD || k == FamilyKind::AtLeastOneD;
}
inline bool family_is_girth(FamilyKind k) {
  return k == FamilyKind::GirthUndirected || k == FamilyKind::GirthDirected;
}

// An uncrossable cycle family over a fixed graph. For girth kinds the target
// length is fixed when the family is created and survives restriction: the
// members of a restricted family are the original members that avoid the
// deleted part, not the shortest cycles of the residual graph.
struct FamilySpec {
  FamilyKind kind = FamilyKind::AllUndirected;
  std::vector<char> demand;        // per edge; empty unless demand-based
  std::vector<Rat> demand_weight;  // per edge; empty unless weighted
  long girth_len = -1;             // -1 = empty girth family

  bool weighted() const { return !demand_weight.empty(); }

  Rat cycle_weight(const Cycle& c) const {
    if (!weighted()) return Rat(1);
    Rat w = 0;
    for (int e : c.eset)
      if (demand[e]) w += demand_weight[e];
    return w;
  }

  int demand_count(const std::vector<int>& eset) const {
    if (demand.empty()) return 0;
    int k = 0;
    for (int e : eset) k += demand[e] ? 1 : 0;
    return k;
  }
};

namespace detail {

inline std::vector<char> all_alive(const EmbeddedGraph& g) { return std::vector<char>(g.m(), 1); }

// Deterministic exact-rational Dijkstra (linear-scan extraction, ties to the
// smallest vertex id). Directed graphs follow edge orientations.
struct ShortestPaths {
  std::vector<char> reached;
  std::vector<Rat> dist;
  std::vector<int> par_dart;  // dart used to arrive, -1 at source
};

inline ShortestPaths dijkstra(const EmbeddedGraph& g, int src, const std::vector<Rat>& w,
                              const std::vector<char>& alive) {
  ShortestPaths sp;
  sp.reached.assign(g.n, 0);
  sp.dist.assign(g.n, Rat(0));
  sp.par_dart.assign(g.n, -1);
  std::vector<char> done(g.n, 0);
  sp.reached[src] = 1;
  for (;;) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (sp.reached[v] && !done[v] && (best == -1 || sp.dist[v] < sp.dist[best])) best = v;
    if (best == -1) break;
    done[best] = 1;
    for (int d : g.rot[best]) {
      if (g.directed && (d & 1)) continue;  // only traverse u->v darts
      int e = dart_edge(d);
      if (!alive[e]) continue;
      int to = g.dart_head(d);
      Rat nd = sp.dist[best] + w[e];
      if (!sp.reached[to] || nd < sp.dist[to]) {
        sp.reached[to] = 1;
        sp.dist[to] = nd;
        sp.par_dart[to] = d;
      }
    }
  }
  return sp;
}

inline std::vector<int> walk_back_edges(const ShortestPaths& sp, const EmbeddedGraph& g, int t) {
  std::vector<int> out;
  int v = t;
  while (sp.par_dart[v] != -1) {
    int d = sp.par_dart[v];
    out.push_back(dart_edge(d));
    v = g.dart_tail(d);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Bridges of the alive undirected subgraph (parallel edges are never bridges).
inline std::vector<char> bridge_edges(const EmbeddedGraph& g, const std::vector<char>& alive) {
  std::vector<char> is_bridge(g.m(), 0);
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int in_dart) {
    disc[v] = low[v] = timer++;
    for (int d : g.rot[v]) {
      int e = dart_edge(d);
      if (!alive[e] || d == dart_reverse(in_dart)) continue;
      int to = g.dart_head(d);
      if (disc[to] == -1) {
        dfs(to, d);
        low[v] = std::min(low[v], low[to]);
        if (low[to] > disc[v]) is_bridge[e] = 1;
      } else {
        low[v] = std::min(low[v], disc[to]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[v] == -1) dfs(v, -2);
  return is_bridge;
}

// Strongly connected components over the alive directed subgraph.
inline std::vector<int> scc_ids(const EmbeddedGraph& g, const std::vector<char>& alive) {
  std::vector<int> comp(g.n, -1), disc(g.n, -1), low(g.n, 0), stk;
  std::vector<char> on(g.n, 0);
  int timer = 0, cid = 0;
  std::function<void(int)> dfs = [&](int v) {
    disc[v] = low[v] = timer++;
    stk.push_back(v);
    on[v] = 1;
    for (int d : g.rot[v]) {
      if (d & 1) continue;
      int e = dart_edge(d);
      if (!alive[e]) continue;
      int to = g.dart_head(d);
      if (disc[to] == -1) {
        dfs(to);
        low[v] = std::min(low[v], low[to]);
      } else if (on[to]) {
        low[v] = std::min(low[v], disc[to]);
      }
    }
    if (low[v] == disc[v]) {
      for (;;) {
        int u = stk.back();
        stk.pop_back();
        on[u] = 0;
        comp[u] = cid;
        if (u == v) break;
      }
      cid++;
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[v] == -1) dfs(v);
  return comp;
}

// Biconnected blocks of the alive undirected subgraph: block id per edge.
inline std::vector<int> block_ids(const EmbeddedGraph& g, const std::vector<char>& alive) {
  std::vector<int> block(g.m(), -1), disc(g.n, -1), low(g.n, 0), estk;
  std::vector<char> edge_seen(g.m(), 0);
  int timer = 0, bid = 0;
  std::function<void(int, int)> dfs = [&](int v, int in_dart) {
    disc[v] = low[v] = timer++;
    for (int d : g.rot[v]) {
      int e = dart_edge(d);
      if (!alive[e] || d == dart_reverse(in_dart)) continue;
      int to = g.dart_head(d);
      if (disc[to] == -1) {
        estk.push_back(e);
        edge_seen[e] = 1;
        dfs(to, d);
        low[v] = std::min(low[v], low[to]);
        if (low[to] >= disc[v]) {
          for (;;) {
            int f = estk.back();
            estk.pop_back();
            block[f] = bid;
            if (f == e) break;
          }
          bid++;
        }
      } else if (disc[to] < disc[v]) {
        if (!edge_seen[e]) {
          estk.push_back(e);
          edge_seen[e] = 1;
        }
        low[v] = std::min(low[v], disc[to]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[v] == -1) dfs(v, -2);
  return block;
}

// 2-colorability of the subgraph formed by the given edges.
inline bool edges_bipartite(const EmbeddedGraph& g, const std::vector<int>& es) {
  std::map<int, std::vector<int>> inc;
  for (int e : es) {
    inc[g.edges[e].u].push_back(e);
    inc[g.edges[e].v].push_back(e);
  }
  std::map<int, int> color;
  for (auto& [s, _] : inc) {
    if (color.count(s)) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : inc[v]) {
        int to = g.other_end(e, v);
        auto it = color.find(to);
        if (it == color.end()) {
          color[to] = color[v] ^ 1;
          stack.push_back(to);
        } else if (it->second == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

// ---- Construction --------------------------------------------------------

std::optional<std::pair<Cycle, Rat>> weight_oracle(const EmbeddedGraph& g, const FamilySpec& f,
                                                   const std::vector<Rat>& w,
                                                   const std::vector<char>& alive,
                                                   const std::vector<Rat>* anchor_offset);

inline std::optional<std::pair<Cycle, Rat>> weight_oracle(const EmbeddedGraph& g, const FamilySpec& f,
                                                          const std::vector<Rat>& w) {
  return weight_oracle(g, f, w, detail::all_alive(g), nullptr);
}

inline FamilySpec make_family(const EmbeddedGraph& g, FamilyKind kind, std::vector<int> demand_edges = {},
                              std::vector<Rat> demand_weights = {}) {
  FamilySpec f;
  f.kind = kind;
  require(family_is_directed(kind) == g.directed, ErrorKind::BadParams,
          family_is_directed(kind) ? "family needs a directed graph" : "family needs an undirected graph");
  if (family_uses_demands(kind)) {
    f.demand.assign(g.m(), 0);
    for (int e : demand_edges) {
      require(0 <= e && e < g.m(), ErrorKind::BadParams, "demand edge out of range");
      f.demand[e] = 1;
    }
    if (!demand_weights.empty()) {
      require(kind == FamilyKind::ExactlyOneD, ErrorKind::BadParams,
              "edge weights are only supported for the d-cycle family");
      require(demand_weights.size() == demand_edges.size(), ErrorKind::BadParams,
              "one weight per demand edge expected");
      f.demand_weight.assign(g.m(), Rat(0));
      for (size_t i = 0; i < demand_edges.size(); ++i) {
        require(demand_weights[i] >= 0, ErrorKind::NegativeWeight, "negative demand weight");
        f.demand_weight[demand_edges[i]] = demand_weights[i];
      }
    }
  } else {
    require(demand_edges.empty() && demand_weights.empty(), ErrorKind::BadParams,
            "demand edges given for a family that takes none");
  }
  if (family_is_girth(kind)) {
    FamilySpec probe;
    probe.kind = g.directed ? FamilyKind::AllDirected : FamilyKind::AllUndirected;
    auto best = weight_oracle(g, probe, std::vector<Rat>(g.m(), Rat(1)));
    f.girth_len = best ? best->first.length() : -1;
  }
  return f;
}

// Family of the restricted graph = original members avoiding the deleted part.
inline FamilySpec restrict_family(const FamilySpec& f, const EmbeddedGraph& sub) {
  FamilySpec out;
  out.kind = f.kind;
  out.girth_len = f.girth_len;
  if (!f.demand.empty()) {
    out.demand.assign(sub.m(), 0);
    for (int e = 0; e < sub.m(); ++e) out.demand[e] = f.demand[sub.parent_edge[e]];
  }
  if (!f.demand_weight.empty()) {
    out.demand_weight.assign(sub.m(), Rat(0));
    for (int e = 0; e < sub.m(); ++e) out.demand_weight[e] = f.demand_weight[sub.parent_edge[e]];
  }
  return out;
}

// ---- Weight oracle -------------------------------------------------------

namespace detail {

struct Candidate {
  bool has = false;
  Rat weight;
  std::vector<int> edges;  // canonical walk edge sequence
  std::vector<int> eset;
};

inline void offer(const EmbeddedGraph& g, Candidate& best, std::vector<int> edge_set, Rat weight) {
  Cycle c = make_cycle(g, std::move(edge_set), /*with_signature=*/false);
  if (best.has) {
    if (weight > best.weight) return;
    if (weight == best.weight && best.edges <= c.edges) return;
  }
  best.has = true;
  best.weight = std::move(weight);
  best.edges = c.edges;
  best.eset = c.eset;
}

// Minimum-weight cycle overall: for every edge, close it with a shortest path
// between its endpoints that avoids the edge itself.
inline Candidate min_cycle_any(const EmbeddedGraph& g, const std::vector<Rat>& w,
                               const std::vector<char>& alive) {
  Candidate best;
  std::vector<char> mask = alive;
  for (int e = 0; e < g.m(); ++e) {
    if (!alive[e]) continue;
    mask[e] = 0;
    int src = g.directed ? g.edges[e].v : g.edges[e].u;
    int dst = g.directed ? g.edges[e].u : g.edges[e].v;
    auto sp = dijkstra(g, src, w, mask);
    if (sp.reached[dst]) {
      auto path = walk_back_edges(sp, g, dst);
      path.push_back(e);
      offer(g, best, std::move(path), sp.dist[dst] + w[e]);
    }
    mask[e] = 1;
  }
  return best;
}

// Minimum-weight odd cycle via the bipartite double cover: a shortest
// (v,0)->(v,1) walk projects to a closed odd walk whose simple-cycle pieces
// contain an odd cycle of no larger weight.
inline Candidate min_cycle_odd(const EmbeddedGraph& g, const std::vector<Rat>& w,
                               const std::vector<char>& alive) {
  const int N = 2 * g.n;
  Candidate best;
  Rat best_walk;
  bool has_walk = false;
  std::vector<int> best_walk_edges;

  std::vector<Rat> dist(N);
  std::vector<char> reached(N), done(N);
  std::vector<int> par(N);  // arriving dart in the cover: (edge, direction, parity switch implied)
  for (int s = 0; s < g.n; ++s) {
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(done.begin(), done.end(), 0);
    std::fill(par.begin(), par.end(), -1);
    reached[2 * s] = 1;
    dist[2 * s] = 0;
    for (;;) {
      int bestv = -1;
      for (int x = 0; x < N; ++x)
        if (reached[x] && !done[x] && (bestv == -1 || dist[x] < dist[bestv])) bestv = x;
      if (bestv == -1) break;
      done[bestv] = 1;
      int v = bestv / 2, layer = bestv % 2;
      for (int d : g.rot[v]) {
        int e = dart_edge(d);
        if (!alive[e]) continue;
        int to = 2 * g.dart_head(d) + (layer ^ 1);
        Rat nd = dist[bestv] + w[e];
        if (!reached[to] || nd < dist[to]) {
          reached[to] = 1;
          dist[to] = nd;
          par[to] = d;
        }
      }
    }
    if (!reached[2 * s + 1]) continue;
    if (has_walk && dist[2 * s + 1] > best_walk) continue;
    // Reconstruct the closed walk's edge sequence.
    std::vector<int> walk;
    int x = 2 * s + 1;
    while (par[x] != -1) {
      walk.push_back(dart_edge(par[x]));
      x = 2 * g.dart_tail(par[x]) + (x % 2 ^ 1);
    }
    std::reverse(walk.begin(), walk.end());
    if (!has_walk || dist[2 * s + 1] < best_walk || walk < best_walk_edges) {
      has_walk = true;
      best_walk = dist[2 * s + 1];
      best_walk_edges = walk;
    }
  }
  if (!has_walk) return best;

  // Decompose the closed walk into simple pieces; keep the odd ones. The walk
  // starts at whichever endpoint of its first edge makes the sequence chain.
  auto chain_from = [&](int start) -> std::optional<std::vector<int>> {
    std::vector<int> seq{start};
    int v = start;
    for (int e : best_walk_edges) {
      if (g.edges[e].u != v && g.edges[e].v != v) return std::nullopt;
      v = g.other_end(e, v);
      seq.push_back(v);
    }
    if (v != start) return std::nullopt;
    return seq;
  };
  std::optional<std::vector<int>> seq = chain_from(g.edges[best_walk_edges[0]].u);
  if (!seq) seq = chain_from(g.edges[best_walk_edges[0]].v);
  require(seq.has_value(), ErrorKind::Internal, "odd-walk reconstruction failed");

  std::vector<int> stack_v, stack_e;  // stack_e[i] = edge entering stack_v[i+1]
  std::vector<int> pos(g.n, -1);
  stack_v.push_back((*seq)[0]);
  pos[(*seq)[0]] = 0;
  for (size_t i = 0; i < best_walk_edges.size(); ++i) {
    int e = best_walk_edges[i];
    int v = (*seq)[i + 1];
    if (pos[v] == -1) {
      stack_e.push_back(e);
      stack_v.push_back(v);
      pos[v] = static_cast<int>(stack_v.size()) - 1;
      continue;
    }
    // Pop the piece from pos[v] to top, plus the incoming edge.
    std::vector<int> piece;
    for (int j = pos[v]; j < static_cast<int>(stack_e.size()); ++j) piece.push_back(stack_e[j]);
    piece.push_back(e);
    while (static_cast<int>(stack_v.size()) - 1 > pos[v]) {
      pos[stack_v.back()] = -1;
      stack_v.pop_back();
      stack_e.pop_back();
    }
    if (piece.size() % 2 == 1) {
      std::vector<int> sorted_piece = piece;
      std::sort(sorted_piece.begin(), sorted_piece.end());
      if (std::adjacent_find(sorted_piece.begin(), sorted_piece.end()) == sorted_piece.end()) {
        Rat pw = 0;
        for (int pe : piece) pw += w[pe];
        offer(g, best, std::move(sorted_piece), std::move(pw));
      }
    }
  }
  require(best.has, ErrorKind::Internal, "odd closed walk contained no odd simple cycle");
  return best;
}

}  // namespace detail

// Minimum-weight family member. `anchor_offset` (demand families only) adds a
// per-demand-edge constant to candidates anchored at that edge — used by LP
// pricing where the comparison constant differs per demand edge.
inline std::optional<std::pair<Cycle, Rat>> weight_oracle(const EmbeddedGraph& g, const FamilySpec& f,
                                                          const std::vector<Rat>& w,
                                                          const std::vector<char>& alive,
                                                          const std::vector<Rat>* anchor_offset) {
  require(static_cast<int>(w.size()) == g.m(), ErrorKind::BadParams, "one weight per edge expected");
  require(static_cast<int>(alive.size()) == g.m(), ErrorKind::BadParams, "alive mask size mismatch");
  for (int e = 0; e < g.m(); ++e)
    if (alive[e]) require(w[e] >= 0, ErrorKind::NegativeWeight, "negative edge weight");
  require(anchor_offset == nullptr || family_uses_demands(f.kind), ErrorKind::BadParams,
          "anchor offsets only apply to demand families");

  detail::Candidate best;
  switch (f.kind) {
    case FamilyKind::AllUndirected:
    case FamilyKind::AllDirected:
      best = detail::min_cycle_any(g, w, alive);
      break;
    case FamilyKind::GirthUndirected:
    case FamilyKind::GirthDirected: {
      if (f.girth_len < 0) return std::nullopt;
      Rat big = 1;
      for (int e = 0; e < g.m(); ++e)
        if (alive[e]) big += w[e];
      std::vector<Rat> wp(g.m());
      for (int e = 0; e < g.m(); ++e) wp[e] = w[e] + big;
      best = detail::min_cycle_any(g, wp, alive);
      if (!best.has || static_cast<long>(best.edges.size()) != f.girth_len) return std::nullopt;
      best.weight -= big * static_cast<long>(best.edges.size());
      break;
    }
    case FamilyKind::Odd:
      best = detail::min_cycle_odd(g, w, alive);
      break;
    case FamilyKind::ExactlyOneD:
    case FamilyKind::AtLeastOneD: {
      std::vector<char> mask(g.m());
      for (int e = 0; e < g.m(); ++e)
        mask[e] = alive[e] && !(f.kind == FamilyKind::ExactlyOneD && f.demand[e]);
      for (int d = 0; d < g.m(); ++d) {
        if (!alive[d] || !f.demand[d]) continue;
        char keep = mask[d];
        mask[d] = 0;
        auto sp = detail::dijkstra(g, g.edges[d].u, w, mask);
        if (sp.reached[g.edges[d].v]) {
          auto path = detail::walk_back_edges(sp, g, g.edges[d].v);
          path.push_back(d);
          Rat total = sp.dist[g.edges[d].v] + w[d];
          if (anchor_offset) total += (*anchor_offset)[d];
          detail::offer(g, best, std::move(path), std::move(total));
        }
        mask[d] = keep;
      }
      break;
    }
  }
  if (!best.has) return std::nullopt;
  return std::make_pair(make_cycle(g, best.eset), best.weight);
}

// ---- Support oracle ------------------------------------------------------

// Union of the edge sets of all family members that avoid X (edge ids).
inline std::vector<int> support_oracle(const EmbeddedGraph& g, const FamilySpec& f,
                                       const std::vector<int>& X,
                                       const std::vector<char>& alive_in = {}) {
  std::vector<char> alive = alive_in.empty() ? detail::all_alive(g) : alive_in;
  for (int e : X) {
    require(0 <= e && e < g.m(), ErrorKind::BadParams, "deleted edge out of range");
    alive[e] = 0;
  }
  std::vector<int> out;
  switch (f.kind) {
    case FamilyKind::AllDirected: {
      auto comp = detail::scc_ids(g, alive);
      for (int e = 0; e < g.m(); ++e)
        if (alive[e] && comp[g.edges[e].u] == comp[g.edges[e].v]) out.push_back(e);
      break;
    }
    case FamilyKind::AllUndirected: {
      auto bridge = detail::bridge_edges(g, alive);
      for (int e = 0; e < g.m(); ++e)
        if (alive[e] && !bridge[e]) out.push_back(e);
      break;
    }
    case FamilyKind::GirthUndirected:
    case FamilyKind::GirthDirected: {
      if (f.girth_len < 0) break;
      // e is on a member iff a shortest closing path of length girth-1 exists.
      std::vector<Rat> unit(g.m(), Rat(1));
      for (int e = 0; e < g.m(); ++e) {
        if (!alive[e]) continue;
        alive[e] = 0;
        int src = g.directed ? g.edges[e].v : g.edges[e].u;
        int dst = g.directed ? g.edges[e].u : g.edges[e].v;
        auto sp = detail::dijkstra(g, src, unit, alive);
        if (sp.reached[dst] && sp.dist[dst] == f.girth_len - 1) out.push_back(e);
        alive[e] = 1;
      }
      break;
    }
    case FamilyKind::Odd: {
      auto block = detail::block_ids(g, alive);
      std::map<int, std::vector<int>> by_block;
      for (int e = 0; e < g.m(); ++e)
        if (alive[e] && block[e] >= 0) by_block[block[e]].push_back(e);
      for (auto& [b, es] : by_block)
        if (!detail::edges_bipartite(g, es))
          for (int e : es) out.push_back(e);
      break;
    }
    case FamilyKind::AtLeastOneD: {
      auto block = detail::block_ids(g, alive);
      std::map<int, std::vector<int>> by_block;
      for (int e = 0; e < g.m(); ++e)
        if (alive[e] && block[e] >= 0) by_block[block[e]].push_back(e);
      for (auto& [b, es] : by_block) {
        if (es.size() < 2) continue;  // a lone bridge edge carries no cycle
        bool has_demand = false;
        for (int e : es) has_demand |= f.demand[e] != 0;
        if (has_demand)
          for (int e : es) out.push_back(e);
      }
      break;
    }
    case FamilyKind::ExactlyOneD: {
      // Components of the supply graph; within each, blocks of the induced
      // subgraph (demand edges included when both ends lie inside).
      std::vector<int> comp(g.n, -1);
      int cid = 0;
      for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = cid;
        std::vector<int> stack{s};
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int d : g.rot[v]) {
            int e = dart_edge(d);
            if (!alive[e] || f.demand[e]) continue;
            int to = g.dart_head(d);
            if (comp[to] == -1) {
              comp[to] = cid;
              stack.push_back(to);
            }
          }
        }
        cid++;
      }
      std::vector<char> induced(g.m(), 0);
      for (int e = 0; e < g.m(); ++e)
        induced[e] = alive[e] && comp[g.edges[e].u] == comp[g.edges[e].v];
      auto block = detail::block_ids(g, induced);
      std::map<int, std::vector<int>> by_block;
      for (int e = 0; e < g.m(); ++e)
        if (induced[e] && block[e] >= 0) by_block[block[e]].push_back(e);
      for (auto& [b, es] : by_block) {
        if (es.size() < 2) continue;
        bool has_demand = false;
        for (int e : es) has_demand |= f.demand[e] != 0;
        if (has_demand)
          for (int e : es) out.push_back(e);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Membership ----------------------------------------------------------

// Some family member using only edges of `subset`, if any (zero/one weights).
inline std::optional<Cycle> membership(const EmbeddedGraph& g, const FamilySpec& f,
                                       const std::vector<int>& subset,
                                       const std::vector<char>& alive_in = {}) {
  std::vector<char> alive = alive_in.empty() ? detail::all_alive(g) : alive_in;
  std::vector<Rat> w(g.m(), Rat(1));
  for (int e : subset) {
    require(0 <= e && e < g.m(), ErrorKind::BadParams, "subset edge out of range");
    w[e] = 0;
  }
  auto best = weight_oracle(g, f, w, alive, nullptr);
  if (!best || best->second != 0) return std::nullopt;
  return best->first;
}

inline bool is_member(const EmbeddedGraph& g, const FamilySpec& f, const Cycle& c) {
  auto m = membership(g, f, c.eset);
  return m.has_value() && m->eset == c.eset;
}

// ---- Uncross witness -----------------------------------------------------

struct UncrossWitness {
  std::vector<int> p1;  // chosen replacement path inside c1 (edge ids)
  Cycle c1_new;         // == p1 + p2, a family member
  Cycle c2_new;         // family member inside (c1 - p1) + (c2 - p2)
};

namespace detail {
// Splits a cycle at two of its vertices into the two arcs (edge-id lists).
inline std::pair<std::vector<int>, std::vector<int>> cycle_arcs(const Cycle& c, int v, int w) {
  int iv = -1, iw = -1;
  for (int i = 0; i < c.length(); ++i) {
    if (c.verts[i] == v) iv = i;
    if (c.verts[i] == w) iw = i;
  }
  require(iv >= 0 && iw >= 0 && iv != iw, ErrorKind::BadParams, "split vertices must lie on the cycle");
  std::vector<int> a, b;
  for (int i = iv; i != iw; i = (i + 1) % c.length()) a.push_back(c.edges[i]);
  for (int i = iw; i != iv; i = (i + 1) % c.length()) b.push_back(c.edges[i]);
  return {a, b};
}
}  // namespace detail

// Definition-style recombination: given a path p2 of c2 sharing exactly its
// endpoints with c1, finds the arc p1 of c1 such that p1+p2 is a family member
// and the leftover (c1-p1)+(c2-p2) still contains one.
inline UncrossWitness uncross_witness(const EmbeddedGraph& g, const FamilySpec& f, const Cycle& c1,
                                      const Cycle& c2, const std::vector<int>& p2) {
  require(!p2.empty(), ErrorKind::BadParams, "empty exchange path");
  std::vector<int> p2sorted = p2;
  std::sort(p2sorted.begin(), p2sorted.end());
  require(std::includes(c2.eset.begin(), c2.eset.end(), p2sorted.begin(), p2sorted.end()),
          ErrorKind::BadParams, "exchange path must use edges of the second cycle");
  require(sorted_intersection(p2sorted, c1.eset).empty(), ErrorKind::BadParams,
          "exchange path may not reuse edges of the first cycle");

  // Path endpoints: the two vertices of odd degree within p2.
  std::map<int, int> deg;
  for (int e : p2) {
    deg[g.edges[e].u]++;
    deg[g.edges[e].v]++;
  }
  std::vector<int> ends;
  for (auto [v, d] : deg) {
    require(d <= 2, ErrorKind::BadParams, "exchange path is not a path");
    if (d == 1) ends.push_back(v);
  }
  require(ends.size() == 2, ErrorKind::BadParams, "exchange path is not a path");
  for (auto [v, d] : deg) {
    bool on_c1 = c1.contains_vertex(v);
    bool is_end = v == ends[0] || v == ends[1];
    require(is_end ? on_c1 : !on_c1, ErrorKind::BadParams,
            "exchange path must meet the first cycle exactly at its endpoints");
  }

  auto [arc_a, arc_b] = detail::cycle_arcs(c1, ends[0], ends[1]);
  for (auto* p1 : {&arc_a, &arc_b}) {
    std::vector<int> p1sorted = *p1;
    std::sort(p1sorted.begin(), p1sorted.end());
    auto joined = sorted_union(p1sorted, p2sorted);
    auto m1 = membership(g, f, joined);
    if (!m1 || m1->eset != joined) continue;
    auto rest = sorted_union(sorted_difference(c1.eset, p1sorted), sorted_difference(c2.eset, p2sorted));
    auto m2 = membership(g, f, rest);
    if (!m2) continue;
    return UncrossWitness{*p1, *m1, *m2};
  }
  fail(ErrorKind::NoWitness, "no replacement arc yields two family cycles");
}

}  // namespace cyclepack
