#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "cycle.hpp"
#include "embedding.hpp"
#include "family.hpp"
#include "lp.hpp"
#include "mis.hpp"
#include "simplex.hpp"

namespace cyclepack {

enum class Side { Inside, Outside };

inline const char* side_name(Side s) { return s == Side::Inside ? "inside" : "outside"; }

struct OneSidedCycle {
  int index = -1;
  Side empty_side = Side::Inside;
};

namespace detail {

inline std::vector<int> sig_bits(const FaceSet& s) {
  std::vector<int> out;
  for (auto p = s.find_first(); p != FaceSet::npos; p = s.find_next(p)) out.push_back(static_cast<int>(p));
  return out;
}

inline bool lex_sig_less(const FaceSet& a, const FaceSet& b) {
  auto ba = sig_bits(a), bb = sig_bits(b);
  return std::lexicographical_compare(ba.begin(), ba.end(), bb.begin(), bb.end());
}

}  // namespace detail

// Members with an empty side: one side of the cycle contains no side of any
// other member. The inside is empty iff no other signature is contained in
// this one; the outside is empty iff every other signature meets this one and
// none contains it. Laminar families always have such members (their forest's
// leaves qualify; so does a root enclosing everything else).
inline std::vector<OneSidedCycle> one_sided(const std::vector<Cycle>& L) {
  std::vector<OneSidedCycle> out;
  for (size_t i = 0; i < L.size(); ++i) {
    bool inside_empty = true, outside_empty = true;
    for (size_t j = 0; j < L.size(); ++j) {
      if (j == i) continue;
      if (L[j].sig.is_subset_of(L[i].sig)) inside_empty = false;
      if (!L[j].sig.intersects(L[i].sig) || L[i].sig.is_subset_of(L[j].sig)) outside_empty = false;
    }
    if (inside_empty)
      out.push_back({static_cast<int>(i), Side::Inside});
    else if (outside_empty)
      out.push_back({static_cast<int>(i), Side::Outside});
  }
  return out;
}

// A chosen member C with a small witness set W: at most five vertices of C
// such that every member sharing a vertex with C (C itself included) also
// shares one in W.
// `neighbour_witness` records, per minimal neighbour, the shared vertices
// whose empty-side departing edge leaves that neighbour (the sets W hits).
struct EfficientChoice {
  int index = -1;
  Side side = Side::Inside;
  std::vector<int> witness;
  std::vector<std::pair<int, std::vector<int>>> neighbour_witness;
};

namespace detail {

// The edge of c departing from w into the empty side: of the two darts of c
// leaving w, exactly one has its face on that side.
inline int departing_edge(const EmbeddedGraph& g, const Cycle& c, int w, const FaceSet& empty_side) {
  int found = -1;
  for (int e : c.eset) {
    if (g.edges[e].u != w && g.edges[e].v != w) continue;
    int d = g.edges[e].u == w ? dart_of(e, 0) : dart_of(e, 1);
    if (empty_side.test(g.face_of_dart[d])) {
      require(found < 0, ErrorKind::Internal, "both departures lie on the empty side");
      found = e;
    }
  }
  require(found >= 0, ErrorKind::Internal, "no departure on the empty side");
  return found;
}

struct EclCandidate {
  int index = -1;
  Side side = Side::Inside;
  std::vector<std::pair<int, std::vector<int>>> sets;  // minimal neighbour -> shared escape vertices
  std::vector<int> witness;
};

// For a one-sided member C: orient every neighbour by the side away from
// C's empty side, keep the minimal ones in that order, and collect per
// neighbour the shared vertices whose departing edge leaves it. Any hitting
// set of these already meets every neighbour, minimal or not.
inline EclCandidate build_ecl_candidate(const EmbeddedGraph& g, const std::vector<Cycle>& L, int idx,
                                        Side side) {
  EclCandidate cand;
  cand.index = idx;
  cand.side = side;
  const Cycle& c = L[idx];
  FaceSet empty_side = side == Side::Inside ? c.sig : ~c.sig;

  std::vector<int> nb;
  std::vector<FaceSet> away;  // per neighbour: the side not containing the empty side
  for (size_t j = 0; j < L.size(); ++j) {
    if (static_cast<int>(j) == idx || !c.shares_vertex(L[j])) continue;
    require(empty_side.is_subset_of(L[j].sig) || !empty_side.intersects(L[j].sig), ErrorKind::Internal,
            "a neighbour's boundary intrudes into the empty side");
    nb.push_back(static_cast<int>(j));
    away.push_back(empty_side.is_subset_of(L[j].sig) ? ~L[j].sig : L[j].sig);
  }
  for (size_t a = 0; a < nb.size(); ++a) {
    bool minimal = true;
    for (size_t b = 0; b < nb.size() && minimal; ++b)
      if (b != a && away[b].is_proper_subset_of(away[a])) minimal = false;
    if (!minimal) continue;
    std::vector<int> esc;
    for (int w : c.verts)
      if (L[nb[a]].contains_vertex(w) && !L[nb[a]].contains_edge(departing_edge(g, c, w, empty_side)))
        esc.push_back(w);
    std::sort(esc.begin(), esc.end());
    require(!esc.empty(), ErrorKind::Internal, "a minimal neighbour must have an escape vertex");
    cand.sets.emplace_back(nb[a], std::move(esc));
  }
  return cand;
}

inline std::vector<std::vector<int>> witness_sets(const EclCandidate& cand) {
  std::vector<std::vector<int>> sets;
  for (const auto& [j, s] : cand.sets) sets.push_back(s);
  return sets;
}

}  // namespace detail

// Picks a member C of a laminar family together with a witness set W of at
// most five vertices meeting every member that shares a vertex with C.
// Candidates are the one-sided members, compared by greedy witness size with
// lexicographically smallest interior signature as tie-break; exact minimum
// witness sets are tried before giving up with BoundViolated.
inline EfficientChoice efficient_cycle(const EmbeddedGraph& g, const std::vector<Cycle>& L) {
  require(!L.empty(), ErrorKind::BadParams, "need at least one cycle");
  {
    std::vector<std::vector<int>> esets;
    std::vector<FaceSet> sigs;
    for (const auto& c : L) {
      esets.push_back(c.eset);
      sigs.push_back(c.sig);
    }
    std::sort(esets.begin(), esets.end());
    require(std::adjacent_find(esets.begin(), esets.end()) == esets.end(), ErrorKind::BadParams,
            "members must be pairwise distinct");
    laminar_forest(sigs);  // throws NotLaminar otherwise
  }

  auto cands_idx = one_sided(L);
  require(!cands_idx.empty(), ErrorKind::Internal, "a laminar family always has a one-sided member");
  std::vector<detail::EclCandidate> cands;
  for (const auto& os : cands_idx) {
    cands.push_back(detail::build_ecl_candidate(g, L, os.index, os.empty_side));
    cands.back().witness = greedy_hitting_set(detail::witness_sets(cands.back()));
  }

  auto better = [&](const detail::EclCandidate& a, const detail::EclCandidate& b) {
    if (a.witness.size() != b.witness.size()) return a.witness.size() < b.witness.size();
    return detail::lex_sig_less(L[a.index].sig, L[b.index].sig);
  };
  int best = 0;
  for (size_t i = 1; i < cands.size(); ++i)
    if (better(cands[i], cands[best])) best = static_cast<int>(i);
  if (cands[best].witness.size() > 5) {
    // Greedy overshot everywhere; fall back to exact minimum hitting sets.
    for (auto& cand : cands)
      if (!cand.sets.empty()) cand.witness = min_hitting_set(detail::witness_sets(cand));
    best = 0;
    for (size_t i = 1; i < cands.size(); ++i)
      if (better(cands[i], cands[best])) best = static_cast<int>(i);
    require(cands[best].witness.size() <= 5, ErrorKind::BoundViolated,
            "no member admits a witness set of at most five vertices");
  }

  const auto& chosen = cands[best];
  for (size_t j = 0; j < L.size(); ++j) {
    if (static_cast<int>(j) == chosen.index || !L[chosen.index].shares_vertex(L[j])) continue;
    bool hit = false;
    for (int w : chosen.witness)
      if (L[j].contains_vertex(w)) {
        hit = true;
        break;
      }
    require(hit, ErrorKind::Internal, "witness set missed a neighbour");
  }
  EfficientChoice out{chosen.index, chosen.side, chosen.witness, chosen.sets};
  // Normalize: the witness also represents the member itself, so a member
  // without neighbours still reports one of its own vertices.
  if (out.witness.empty())
    out.witness.push_back(*std::min_element(L[chosen.index].verts.begin(), L[chosen.index].verts.end()));
  return out;
}

namespace detail {

// Split graph for the edge-disjoint witness search: every kept edge becomes a
// vertex, every (member, vertex) incidence becomes a private degree-two
// vertex, and each member turns into a cycle through its edges' vertices.
// Members then share a vertex exactly when they shared an edge. The rotation
// at an edge-vertex orders the member strands by nesting: the side whose
// interiors contain the edge's left face first (innermost first), then the
// other side (outermost first), with the return darts mirrored.
struct EdgeSplitGraph {
  EmbeddedGraph h;
  std::vector<Cycle> members;       // aligned with the input family
  std::vector<int> edge_of_vertex;  // split vertex -> original edge id, -1 for incidence copies
};

inline EdgeSplitGraph edge_split_graph(const EmbeddedGraph& g, const std::vector<Cycle>& L) {
  const int k = static_cast<int>(L.size());
  std::vector<int> vid_of_edge(g.m(), -1);
  std::vector<int> kept;
  for (const auto& c : L)
    for (int e : c.eset)
      if (vid_of_edge[e] < 0) {
        vid_of_edge[e] = static_cast<int>(kept.size());
        kept.push_back(e);
      }
  int nv = static_cast<int>(kept.size());
  std::map<std::pair<int, int>, int> copy_of;  // (member, vertex) -> split vertex
  for (int i = 0; i < k; ++i)
    for (int w : L[i].verts) copy_of[{i, w}] = nv++;

  std::vector<EdgeRec> he;
  std::vector<std::vector<int>> rot(nv);
  std::map<std::pair<int, int>, std::pair<int, int>> arms_of;  // (member, edge) -> (u-arm, v-arm)
  for (int x = 0; x < static_cast<int>(kept.size()); ++x) {
    int e = kept[x];
    std::vector<int> through;
    for (int i = 0; i < k; ++i)
      if (L[i].contains_edge(e)) through.push_back(i);
    auto by_interior_size = [&](int a, int b) { return L[a].sig.count() < L[b].sig.count(); };
    std::vector<int> left_side, right_side;
    for (int i : through)
      (L[i].sig.test(g.face_of_dart[dart_of(e, 0)]) ? left_side : right_side).push_back(i);
    std::sort(left_side.begin(), left_side.end(), by_interior_size);
    std::sort(right_side.begin(), right_side.end(), by_interior_size);
    for (auto* side : {&left_side, &right_side})
      for (size_t a = 0; a + 1 < side->size(); ++a)
        require(L[(*side)[a]].sig.is_subset_of(L[(*side)[a + 1]].sig), ErrorKind::Internal,
                "members on one side of a shared edge must be nested");

    for (int i : through) {
      int ua = static_cast<int>(he.size());
      he.push_back({x, copy_of[{i, g.edges[e].u}]});
      int va = static_cast<int>(he.size());
      he.push_back({x, copy_of[{i, g.edges[e].v}]});
      arms_of[{i, e}] = {ua, va};
    }
    auto u_dart = [&](int i) { return dart_of(arms_of[{i, e}].first, 0); };
    auto v_dart = [&](int i) { return dart_of(arms_of[{i, e}].second, 0); };
    for (int i : left_side) rot[x].push_back(u_dart(i));
    for (auto it = right_side.rbegin(); it != right_side.rend(); ++it) rot[x].push_back(u_dart(*it));
    for (int i : right_side) rot[x].push_back(v_dart(i));
    for (auto it = left_side.rbegin(); it != left_side.rend(); ++it) rot[x].push_back(v_dart(*it));
  }
  for (int a = 0; a < static_cast<int>(he.size()); ++a) rot[he[a].v].push_back(dart_of(a, 1));

  EdgeSplitGraph out;
  out.h = build_embedding(nv, he, false, std::move(rot));
  out.edge_of_vertex.assign(nv, -1);
  for (size_t x = 0; x < kept.size(); ++x) out.edge_of_vertex[x] = kept[x];
  for (int i = 0; i < k; ++i) {
    std::vector<int> ids;
    for (int e : L[i].eset) {
      ids.push_back(arms_of[{i, e}].first);
      ids.push_back(arms_of[{i, e}].second);
    }
    std::sort(ids.begin(), ids.end());
    out.members.push_back(make_cycle(out.h, ids));
  }
  return out;
}

}  // namespace detail

// Edge-disjoint analogue: a member C and at most five of its edges meeting
// every member that shares an edge with C, found by running the vertex search
// on the split graph (shared edges become shared vertices there).
inline EfficientChoice efficient_cycle_edges(const EmbeddedGraph& g, const std::vector<Cycle>& L) {
  require(!L.empty(), ErrorKind::BadParams, "need at least one cycle");
  auto split = detail::edge_split_graph(g, L);
  auto choice = efficient_cycle(split.h, split.members);
  auto to_edges = [&](const std::vector<int>& verts) {
    std::vector<int> out;
    for (int w : verts) {
      require(split.edge_of_vertex[w] >= 0, ErrorKind::Internal, "witness must sit on shared edge vertices");
      out.push_back(split.edge_of_vertex[w]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  EfficientChoice out;
  out.index = choice.index;
  out.side = choice.side;
  out.witness = to_edges(choice.witness);
  for (const auto& [j, s] : choice.neighbour_witness) out.neighbour_witness.emplace_back(j, to_edges(s));
  return out;
}

// Greedy rounding of a laminar vertex-mode solution: repeatedly take the
// witnessed member and drop everything sharing a vertex with it. Every member
// removed shares one of at most five witness vertices, each carrying total
// mass at most one, so the packing has at least a fifth of the solution's
// value.
inline std::vector<Cycle> round_vertex(const EmbeddedGraph& g, const FractionalPacking& sol) {
  require(sol.mode == DisjointMode::Vertex, ErrorKind::BadParams, "vertex-mode solution required");
  std::vector<Cycle> work = sol.columns, out;
  while (!work.empty()) {
    auto choice = efficient_cycle(g, work);
    Cycle star = work[choice.index];
    std::erase_if(work, [&](const Cycle& c) { return c.shares_vertex(star); });
    out.push_back(std::move(star));
  }
  return out;
}

namespace detail {

// Bounded exact backtracking k-coloring over an adjacency structure; empty
// result means the node budget ran out (or no coloring exists).
inline std::vector<int> budgeted_coloring(const std::vector<boost::dynamic_bitset<>>& adj, int k,
                                          long budget) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n), color(n, -1);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return adj[a].count() > adj[b].count(); });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  long nodes = 0;
  auto rec = [&](auto&& self, int at) -> bool {
    if (at == n) return true;
    if (++nodes > budget) return false;
    int v = order[at];
    int limit = at == 0 ? 1 : k;  // the first vertex may fix its color
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (auto u = adj[v].find_first(); u != boost::dynamic_bitset<>::npos; u = adj[v].find_next(u))
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, at + 1)) return true;
      color[v] = -1;
      if (nodes > budget) return false;
    }
    return false;
  };
  if (!rec(rec, 0)) return {};
  return color;
}

// Classical planar five-coloring: delete a vertex of degree at most four, or
// take one of degree five and identify two of its non-adjacent neighbours,
// then color while unwinding.
inline std::vector<int> planar_five_coloring(std::vector<std::set<int>> adj) {
  const int n = static_cast<int>(adj.size());
  struct Op {
    int v = -1;               // deleted vertex
    int u = -1, w = -1;       // identified pair (w folded into u), -1 if plain deletion
    std::vector<int> around;  // v's neighbours at deletion time
  };
  std::vector<Op> ops;
  std::set<int> alive;
  for (int v = 0; v < n; ++v) alive.insert(v);
  auto erase_vertex = [&](int v) {
    for (int u : adj[v]) adj[u].erase(v);
    adj[v].clear();
    alive.erase(v);
  };
  while (!alive.empty()) {
    int pick = -1;
    for (int v : alive)
      if (adj[v].size() <= 4) {
        pick = v;
        break;
      }
    if (pick >= 0) {
      ops.push_back({pick, -1, -1, {adj[pick].begin(), adj[pick].end()}});
      erase_vertex(pick);
      continue;
    }
    int v = -1, u = -1, w = -1;
    for (int cand : alive) {
      if (adj[cand].size() != 5) continue;
      std::vector<int> nb(adj[cand].begin(), adj[cand].end());
      for (size_t a = 0; a < nb.size() && v < 0; ++a)
        for (size_t b = a + 1; b < nb.size() && v < 0; ++b)
          if (!adj[nb[a]].count(nb[b])) {
            v = cand;
            u = nb[a];
            w = nb[b];
          }
      if (v >= 0) break;
    }
    require(v >= 0, ErrorKind::Internal, "conflict structure is not planar");
    ops.push_back({v, u, w, {adj[v].begin(), adj[v].end()}});
    erase_vertex(v);
    for (int x : std::vector<int>(adj[w].begin(), adj[w].end())) {
      adj[x].erase(w);
      if (x != u) {
        adj[x].insert(u);
        adj[u].insert(x);
      }
    }
    adj[w].clear();
    alive.erase(w);
  }
  std::vector<int> color(n, -1);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->u >= 0) color[it->w] = color[it->u];
    boost::dynamic_bitset<> used(6);
    for (int x : it->around)
      if (color[x] >= 0) used.set(color[x]);
    int c = 0;
    while (used.test(c)) ++c;
    require(c < 5, ErrorKind::Internal, "five colors must suffice");
    color[it->v] = c;
  }
  return color;
}

}  // namespace detail

struct EdgeRoundReport {
  std::vector<Cycle> packing;
  std::vector<int> chosen_half;  // support indices of the conflict-halved set
  Rat chain_lp_value = 0;        // optimum of the per-edge two-chain relaxation
  Rat packed_weight = 0;         // total weight (count, if unweighted) packed
  int colors_used = 0;
  bool five_color_fallback = false;
};

// Rounds a laminar edge-mode solution: per shared edge the support splits
// into two nested chains, whose packing relaxation has an integral optimum
// (matched exactly against the nested-conflict independent set). The chosen
// set's conflict structure is planar, so four colors are attempted within a
// search budget and five-coloring is the guaranteed fallback; the heaviest
// class is returned.
inline EdgeRoundReport round_edge(const EmbeddedGraph& g, const FamilySpec& f, const FractionalPacking& sol,
                                  long color_budget = 2000000) {
  require(sol.mode == DisjointMode::Edge, ErrorKind::BadParams, "edge-mode solution required");
  const int n = static_cast<int>(sol.columns.size());
  EdgeRoundReport out;
  if (n == 0) return out;
  {
    std::vector<FaceSet> sigs;
    for (const auto& c : sol.columns) sigs.push_back(c.sig);
    laminar_forest(sigs);
  }

  // Per covered edge: the members through it, split by side, must be nested.
  std::vector<std::vector<Rat>> rows;
  for (int e = 0; e < g.m(); ++e) {
    std::vector<int> side[2];
    for (int i = 0; i < n; ++i)
      if (sol.columns[i].contains_edge(e))
        side[sol.columns[i].sig.test(g.face_of_dart[dart_of(e, 0)]) ? 0 : 1].push_back(i);
    for (auto& chain : side) {
      if (chain.empty()) continue;
      std::sort(chain.begin(), chain.end(), [&](int a, int b) {
        return sol.columns[a].sig.count() < sol.columns[b].sig.count();
      });
      for (size_t a = 0; a + 1 < chain.size(); ++a)
        require(sol.columns[chain[a]].sig.is_subset_of(sol.columns[chain[a + 1]].sig),
                ErrorKind::ChainViolation, "members on one side of a shared edge must be nested");
      rows.emplace_back(n, Rat(0));
      for (int i : chain) rows.back()[i] = 1;
    }
  }

  std::vector<Rat> weight(n);
  for (int i = 0; i < n; ++i) weight[i] = f.cycle_weight(sol.columns[i]);
  auto lp = solve_lp(weight, rows, std::vector<Rat>(rows.size(), Rat(1)));
  require(lp.status == LpStatus::Optimal, ErrorKind::Internal, "chain relaxation must be solvable");

  ConflictGraph nested_cg;
  nested_cg.reset(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sol.columns[i].shares_edge(sol.columns[j]) &&
          (sol.columns[i].sig.is_subset_of(sol.columns[j].sig) ||
           sol.columns[j].sig.is_subset_of(sol.columns[i].sig)))
        nested_cg.add_conflict(i, j);
  out.chosen_half = max_weight_independent_set(nested_cg, weight);
  Rat half_weight = 0;
  for (int i : out.chosen_half) half_weight += weight[i];
  require(half_weight == lp.value, ErrorKind::ValueMismatch,
          "the two-chain relaxation optimum must be integral");
  out.chain_lp_value = lp.value;

  const int h = static_cast<int>(out.chosen_half.size());
  std::vector<boost::dynamic_bitset<>> adj(h, boost::dynamic_bitset<>(h));
  for (int a = 0; a < h; ++a)
    for (int b = a + 1; b < h; ++b)
      if (sol.columns[out.chosen_half[a]].shares_edge(sol.columns[out.chosen_half[b]])) {
        adj[a].set(b);
        adj[b].set(a);
      }
  std::vector<int> color = detail::budgeted_coloring(adj, 4, color_budget);
  if (color.empty()) {
    std::vector<std::set<int>> sets(h);
    for (int a = 0; a < h; ++a)
      for (auto b = adj[a].find_first(); b != boost::dynamic_bitset<>::npos; b = adj[a].find_next(b))
        sets[a].insert(static_cast<int>(b));
    color = detail::planar_five_coloring(std::move(sets));
    out.five_color_fallback = true;
  }
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  out.colors_used = out.five_color_fallback ? 5 : 4;
  int best = 0;
  Rat best_weight = -1;
  for (int c = 0; c < classes; ++c) {
    Rat wsum = 0;
    for (int a = 0; a < h; ++a)
      if (color[a] == c) wsum += weight[out.chosen_half[a]];
    if (wsum > best_weight) {
      best_weight = wsum;
      best = c;
    }
  }
  for (int a = 0; a < h; ++a)
    if (color[a] == best) out.packing.push_back(sol.columns[out.chosen_half[a]]);
  out.packed_weight = best_weight;
  return out;
}

// Fractional local-ratio rounding for weighted demand cycles on a laminar
// vertex-mode solution. Members are ordered by repeated witness extraction,
// so each one's later vertex-sharing neighbourhood carries mass at most five;
// subtracting each positive weight from that neighbourhood and unwinding
// maximally yields at least a fifth of the solution's weight.
inline std::vector<Cycle> round_weighted_vertex(const EmbeddedGraph& g, const FamilySpec& f,
                                                const FractionalPacking& sol) {
  require(sol.mode == DisjointMode::Vertex, ErrorKind::BadParams, "vertex-mode solution required");
  require(f.kind == FamilyKind::ExactlyOneD, ErrorKind::BadParams,
          "weighted rounding applies to demand cycles");
  std::vector<Cycle> work = sol.columns;
  std::vector<int> live(work.size());
  std::iota(live.begin(), live.end(), 0);
  std::vector<int> order;
  while (!work.empty()) {
    auto choice = efficient_cycle(g, work);
    order.push_back(live[choice.index]);
    work.erase(work.begin() + choice.index);
    live.erase(live.begin() + choice.index);
  }
  const int k = static_cast<int>(order.size());
  std::vector<Rat> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = f.cycle_weight(sol.columns[order[i]]);
  std::vector<int> pushed;
  for (int i = 0; i < k; ++i) {
    if (cur[i] <= 0) continue;
    pushed.push_back(i);
    Rat delta = cur[i];
    for (int j = i; j < k; ++j)
      if (sol.columns[order[j]].shares_vertex(sol.columns[order[i]])) cur[j] -= delta;
  }
  std::vector<Cycle> out;
  for (auto it = pushed.rbegin(); it != pushed.rend(); ++it) {
    const Cycle& c = sol.columns[order[*it]];
    bool disjoint = true;
    for (const auto& d : out)
      if (d.shares_vertex(c)) {
        disjoint = false;
        break;
      }
    if (disjoint) out.push_back(c);
  }
  return out;
}

}  // namespace cyclepack
