#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "cycle.hpp"
#include "embedding.hpp"
#include "family.hpp"
#include "lp.hpp"

namespace cyclepack {

namespace detail {

// How the closed walk of `c2` meets `c1`: the walk decomposes into free
// segments (maximal edge runs avoiding c1's vertices in their interior and
// using no c1 edge) separated by contact stretches on c1. Each free segment
// lies entirely inside or entirely outside c1; a side flip between cyclically
// consecutive free segments is a crossing.
struct Contact {
  bool touches = false;            // c2 shares at least one vertex with c1
  std::vector<int> side;           // per free segment: +1 inside, -1 outside
  std::vector<int> entry;          // per free segment: its first vertex (on c1)
  std::vector<std::vector<int>> seg_edges;  // per free segment: edge ids, walk order
  std::vector<int> crossing;       // boundary k: side flip between segment k and k+1 (mod q)
};

inline Contact contact_analysis(const EmbeddedGraph& g, const Cycle& c1, const Cycle& c2) {
  Contact out;
  const int len = c2.length();
  int start = -1;
  for (int i = 0; i < len; ++i)
    if (c1.contains_vertex(c2.verts[i])) {
      start = i;
      break;
    }
  if (start < 0) return out;
  out.touches = true;
  auto vert = [&](int i) { return c2.verts[(start + i) % len]; };
  auto edge = [&](int i) { return c2.edges[(start + i) % len]; };
  for (int i = 0; i < len;) {
    int e = edge(i);
    if (c1.contains_edge(e)) {
      ++i;
      continue;
    }
    // Free segment: extend while the interior stays off c1.
    std::vector<int> seg{e};
    int entry_vertex = vert(i);
    int j = i + 1;
    while (j < len && !c1.contains_vertex(vert(j))) {
      seg.push_back(edge(j));
      ++j;
    }
    require(j < len || c1.contains_vertex(vert(0)), ErrorKind::Internal, "free segment must end on the cycle");
    out.side.push_back(c1.sig.test(g.face_of_dart[dart_of(seg[0], 0)]) ? 1 : -1);
    out.entry.push_back(entry_vertex);
    out.seg_edges.push_back(std::move(seg));
    i = j;
  }
  const int q = static_cast<int>(out.side.size());
  for (int k = 0; k < q; ++k)
    if (out.side[k] != out.side[(k + 1) % q]) out.crossing.push_back(k);
  return out;
}

inline int cross_count(const EmbeddedGraph& g, const Cycle& c1, const Cycle& c2) {
  return static_cast<int>(contact_analysis(g, c1, c2).crossing.size());
}

// (total edge count, total pairwise crossing count) — the progress measure
// recorded by the multiset uncrossing trace.
inline std::pair<long, long> multiset_potential(const EmbeddedGraph& g, const std::vector<const Cycle*>& all) {
  long edges = 0, crossings = 0;
  for (const auto* c : all) edges += c->length();
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) crossings += cross_count(g, *all[i], *all[j]);
  return {edges, crossings};
}

}  // namespace detail

// Two vertices at which the cycles genuinely cross (representatives of the
// first two side-flip boundaries along c2's walk).
inline std::pair<int, int> pick_crossing_vertices(const EmbeddedGraph& g, const Cycle& c1, const Cycle& c2) {
  auto ct = detail::contact_analysis(g, c1, c2);
  require(ct.crossing.size() >= 2, ErrorKind::Internal, "cycles with crossing interiors must cross twice");
  const int q = static_cast<int>(ct.side.size());
  int v = ct.entry[(ct.crossing[0] + 1) % q];
  int w = ct.entry[(ct.crossing[1] + 1) % q];
  require(v != w, ErrorKind::Internal, "crossing representatives must be distinct");
  return {v, w};
}

// First maximal subpath of c2 that runs strictly through the interior of c1
// (edge ids in walk order). Exists whenever the two cycles cross.
inline std::vector<int> first_inside_run(const EmbeddedGraph& g, const Cycle& c1, const Cycle& c2) {
  auto ct = detail::contact_analysis(g, c1, c2);
  for (size_t k = 0; k < ct.side.size(); ++k)
    if (ct.side[k] == 1) return ct.seg_edges[k];
  fail(ErrorKind::Internal, "crossing cycles must have an interior subpath");
}

// A pair of cycles split at two shared vertices: the four arcs between v and
// w (two per cycle, sorted edge ids) ready for recombination.
struct CrossingPair {
  Cycle c1, c2;
  int v = -1, w = -1;
  std::vector<int> a1, b1;  // the two arcs of c1 between v and w
  std::vector<int> a2, b2;  // the two arcs of c2 between v and w
};

inline CrossingPair make_crossing_pair(const Cycle& c1, const Cycle& c2, int v, int w) {
  require(v != w, ErrorKind::BadParams, "split vertices must differ");
  require(c1.contains_vertex(v) && c1.contains_vertex(w) && c2.contains_vertex(v) && c2.contains_vertex(w),
          ErrorKind::BadParams, "split vertices must lie on both cycles");
  CrossingPair p;
  p.c1 = c1;
  p.c2 = c2;
  p.v = v;
  p.w = w;
  std::tie(p.a1, p.b1) = detail::cycle_arcs(c1, v, w);
  std::tie(p.a2, p.b2) = detail::cycle_arcs(c2, v, w);
  for (auto* x : {&p.a1, &p.b1, &p.a2, &p.b2}) std::sort(x->begin(), x->end());
  return p;
}

// Convenience: split at deterministically chosen genuine crossing vertices.
inline CrossingPair make_crossing_pair(const EmbeddedGraph& g, const Cycle& c1, const Cycle& c2) {
  auto [v, w] = pick_crossing_vertices(g, c1, c2);
  return make_crossing_pair(c1, c2, v, w);
}

// Recombines the four arcs into two new family members (each found inside one
// of the two arc unions, trying both pairings). NoUncrossing if neither
// pairing works, which an uncrossable family never triggers.
inline std::pair<Cycle, Cycle> strong_uncross(const EmbeddedGraph& g, const FamilySpec& f,
                                              const CrossingPair& p) {
  for (int pairing = 0; pairing < 2; ++pairing) {
    auto part1 = sorted_union(p.a1, pairing ? p.b2 : p.a2);
    auto part2 = sorted_union(p.b1, pairing ? p.a2 : p.b2);
    auto m1 = membership(g, f, part1);
    if (!m1) continue;
    auto m2 = membership(g, f, part2);
    if (!m2) continue;
    return {*m1, *m2};
  }
  fail(ErrorKind::NoUncrossing, "no arc recombination yields two family members");
}

inline std::pair<Cycle, Cycle> strong_uncross(const EmbeddedGraph& g, const FamilySpec& f, const Cycle& c1,
                                              const Cycle& c2, int v, int w) {
  return strong_uncross(g, f, make_crossing_pair(c1, c2, v, w));
}

// Laminarizes an explicit multiset of family cycles: repeatedly shrinks one
// cycle through interior exchange paths until it crosses nothing, then
// finalizes it. Same cardinality out, and no vertex or edge is covered more
// often afterwards.
inline std::vector<Cycle> uncross_multiset(const EmbeddedGraph& g, const FamilySpec& f, std::vector<Cycle> work,
                                           std::vector<std::pair<long, long>>* potential_trace = nullptr) {
  std::vector<Cycle> done;
  auto snapshot = [&](const Cycle* cur) {
    if (!potential_trace) return;
    std::vector<const Cycle*> all;
    for (const auto& c : done) all.push_back(&c);
    if (cur) all.push_back(cur);
    for (const auto& c : work) all.push_back(&c);
    potential_trace->push_back(detail::multiset_potential(g, all));
  };
  snapshot(nullptr);
  long budget = 4 * (static_cast<long>(work.size()) + 1) * (g.num_faces() + 1);
  while (!work.empty()) {
    Cycle c1 = std::move(work.front());
    work.erase(work.begin());
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& c2 : work) {
        if (!signatures_cross(c1.sig, c2.sig)) continue;
        require(budget-- > 0, ErrorKind::Internal, "uncrossing exceeded its step budget");
        auto p2 = first_inside_run(g, c1, c2);
        auto wit = uncross_witness(g, f, c1, c2, p2);
        require(wit.c1_new.sig.is_proper_subset_of(c1.sig), ErrorKind::Internal,
                "exchange must strictly shrink the working cycle's interior");
        c1 = std::move(wit.c1_new);
        c2 = std::move(wit.c2_new);
        changed = true;
        snapshot(&c1);
        break;
      }
    }
    done.push_back(std::move(c1));
  }
  std::vector<FaceSet> sigs;
  for (const auto& c : done) sigs.push_back(c.sig);
  laminar_forest(sigs);  // throws NotLaminar if the guarantee failed
  return done;
}

// One record per uncrossing event: either an inner arc exchange (v/w set) or
// an outer mass shift between columns (delta set).
struct UncrossStep {
  bool is_shift = false;
  int v = -1, w = -1;
  std::vector<int> in1, in2, out1, out2;  // edge sets before/after
  Rat delta = 0;
};

struct LaminarizeResult {
  FractionalPacking packing;
  std::vector<UncrossStep> trace;
  long exchange_steps = 0;
};

// Turns a minimum-total-length LP optimum into one with laminar support,
// preserving the objective exactly. Each crossing support pair is fully
// uncrossed (conserving the pair's edge multiset at every exchange — anything
// else contradicts length minimality) and then a mass shift replaces the pair.
inline LaminarizeResult laminarize_lp(const EmbeddedGraph& g, const FamilySpec& f,
                                      const FractionalPacking& refined) {
  struct Col {
    Cycle c;
    Rat x;
  };
  std::vector<Col> cols;
  for (size_t i = 0; i < refined.columns.size(); ++i) {
    require(refined.x[i] > 0, ErrorKind::BadParams, "support columns must have positive mass");
    cols.push_back({refined.columns[i], refined.x[i]});
  }

  // Frozen reference: per-edge fractional coverage must never change.
  std::vector<Rat> coverage(g.m(), Rat(0));
  for (const auto& col : cols)
    for (int e : col.c.eset) coverage[e] += col.x;

  LaminarizeResult out;
  const long face_budget = g.num_faces() + 2;
  long shift_budget = 16 * (static_cast<long>(cols.size()) + 4) * (static_cast<long>(cols.size()) + 4) *
                      face_budget * face_budget;

  auto merged_multiset = [](const Cycle& a, const Cycle& b) {
    std::vector<int> m;
    m.reserve(a.eset.size() + b.eset.size());
    m.insert(m.end(), a.eset.begin(), a.eset.end());
    m.insert(m.end(), b.eset.begin(), b.eset.end());
    std::sort(m.begin(), m.end());
    return m;
  };

  for (;;) {
    int pi = -1, pj = -1;
    for (size_t i = 0; i < cols.size() && pi < 0; ++i)
      for (size_t j = i + 1; j < cols.size(); ++j)
        if (signatures_cross(cols[i].c.sig, cols[j].c.sig)) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
          break;
        }
    if (pi < 0) break;
    require(shift_budget-- > 0, ErrorKind::Internal, "uncrossing exceeded its step budget");

    Cycle ca = cols[pi].c, cb = cols[pj].c;
    const auto pair_multiset = merged_multiset(ca, cb);
    int guard = detail::cross_count(g, ca, cb) + 2;
    while (signatures_cross(ca.sig, cb.sig)) {
      require(guard-- > 0, ErrorKind::Internal, "pair uncrossing failed to make progress");
      int before = detail::cross_count(g, ca, cb);
      auto [v, w] = pick_crossing_vertices(g, ca, cb);
      auto [d1, d2] = strong_uncross(g, f, ca, cb, v, w);
      require(merged_multiset(d1, d2) == merged_multiset(ca, cb), ErrorKind::LengthNotMinimal,
              "exchange changed the pair's edge multiset; the solution was not length-minimal");
      require(detail::cross_count(g, d1, d2) < before, ErrorKind::Internal,
              "exchange must reduce the pair's crossings");
      out.trace.push_back({false, v, w, ca.eset, cb.eset, d1.eset, d2.eset, Rat(0)});
      out.exchange_steps++;
      ca = std::move(d1);
      cb = std::move(d2);
    }
    require(merged_multiset(ca, cb) == pair_multiset, ErrorKind::LengthNotMinimal,
            "uncrossing changed the pair's edge multiset");

    // The final interiors are the boolean combination of the original pair's.
    const FaceSet &si = cols[pi].c.sig, &sj = cols[pj].c.sig;
    auto matches = [&](const FaceSet& x, const FaceSet& y) {
      return (ca.sig == x && cb.sig == y) || (ca.sig == y && cb.sig == x);
    };
    require(matches(si & sj, si | sj) || matches(si - sj, sj - si), ErrorKind::Internal,
            "uncrossed interiors are not the boolean combination of the originals");

    Rat delta = std::min(cols[pi].x, cols[pj].x);
    out.trace.push_back({true, -1, -1, cols[pi].c.eset, cols[pj].c.eset, ca.eset, cb.eset, delta});
    cols[pi].x -= delta;
    cols[pj].x -= delta;
    for (const Cycle* nc : {&ca, &cb}) {
      int hit = -1;
      for (size_t t = 0; t < cols.size(); ++t)
        if (cols[t].c.eset == nc->eset) {
          hit = static_cast<int>(t);
          break;
        }
      if (hit >= 0)
        cols[hit].x += delta;
      else
        cols.push_back({*nc, delta});
    }
    std::erase_if(cols, [](const Col& col) { return col.x == 0; });
  }

  // Laminar support, identical objective, identical per-edge coverage.
  std::vector<FaceSet> sigs;
  for (const auto& col : cols) sigs.push_back(col.c.sig);
  laminar_forest(sigs);
  std::vector<Rat> after(g.m(), Rat(0));
  Rat value = 0, total_length = 0;
  for (const auto& col : cols) {
    for (int e : col.c.eset) after[e] += col.x;
    value += col.x * (refined.weighted ? f.cycle_weight(col.c) : Rat(1));
    total_length += col.x * col.c.length();
  }
  require(after == coverage, ErrorKind::Internal, "per-edge coverage drifted during uncrossing");
  require(value == refined.value, ErrorKind::Internal, "objective drifted during uncrossing");

  out.packing.mode = refined.mode;
  out.packing.weighted = refined.weighted;
  out.packing.value = value;
  out.packing.total_length = total_length;
  out.packing.dual = refined.dual;
  for (auto& col : cols) {
    out.packing.x.push_back(col.x);
    out.packing.columns.push_back(std::move(col.c));
  }
  return out;
}

// Full fractional pipeline: optimum value, minimum total length among optima,
// then laminar support — all exact.
inline LaminarizeResult compute_uncrossed_lp_solution(const EmbeddedGraph& g, const FamilySpec& f,
                                                      DisjointMode mode) {
  auto lp = solve_packing_lp(g, f, mode);
  auto refined = refine_min_length(g, f, mode, lp);
  return laminarize_lp(g, f, refined);
}

}  // namespace cyclepack
