#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "cycle.hpp"
#include "embedding.hpp"
#include "family.hpp"
#include "mis.hpp"

namespace cyclepack {

struct Packing {
  std::vector<Cycle> cycles;
  DisjointMode mode = DisjointMode::Vertex;
};

// Every cycle a member, pairwise disjoint in the declared mode.
inline void verify_packing(const EmbeddedGraph& g, const FamilySpec& f, const Packing& p) {
  for (size_t i = 0; i < p.cycles.size(); ++i) {
    require(is_member(g, f, p.cycles[i]), ErrorKind::BadInstance, "packing contains a non-member cycle");
    for (size_t j = i + 1; j < p.cycles.size(); ++j)
      require(!cycles_conflict(p.cycles[i], p.cycles[j], p.mode), ErrorKind::BadInstance,
              "packing cycles are not disjoint in the declared mode");
  }
}

inline Rat packing_weight(const FamilySpec& f, const Packing& p) {
  Rat out = 0;
  for (const auto& c : p.cycles) out += f.cycle_weight(c);
  return out;
}

// All interior-minimal members. After restricting to the union of all member
// edge sets, every interior-minimal member bounds a face orbit of the
// restriction, so testing each orbit boundary for membership and keeping the
// candidates whose interior contains no other candidate's interior yields
// exactly the minimal family.
inline std::vector<Cycle> face_minimal_cycles(const EmbeddedGraph& g, const FamilySpec& f) {
  auto sup = support_oracle(g, f, {});
  std::vector<char> keep(g.m(), 0);
  for (int e : sup) keep[e] = 1;
  EmbeddedGraph sub = restrict_graph(g, keep);
  if (sub.m() == 0) return {};

  std::vector<Cycle> cands;
  std::set<std::vector<int>> seen_esets;
  std::vector<char> visited(2 * sub.m(), 0);
  for (int d0 = 0; d0 < 2 * sub.m(); ++d0) {
    if (visited[d0]) continue;
    std::vector<int> walk;
    int d = d0;
    do {
      visited[d] = 1;
      walk.push_back(dart_edge(d));
      d = sub.next_in_face(d);
    } while (d != d0);
    std::sort(walk.begin(), walk.end());
    if (std::adjacent_find(walk.begin(), walk.end()) != walk.end()) continue;  // walk doubles back
    auto ids = sub.cycle_edges_to_parent(walk);
    std::sort(ids.begin(), ids.end());
    if (!seen_esets.insert(ids).second) continue;
    Cycle pc;
    try {
      pc = make_cycle(g, ids);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::NotACycle) continue;  // orbit pinches through a vertex
      throw;
    }
    if (is_member(g, f, pc)) cands.push_back(std::move(pc));
  }

  std::vector<Cycle> out;
  for (size_t i = 0; i < cands.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < cands.size() && minimal; ++j)
      if (j != i && cands[j].sig.is_proper_subset_of(cands[i].sig)) minimal = false;
    if (minimal) out.push_back(cands[i]);
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.eset < b.eset; });
  return out;
}

// Exact maximum disjoint sub-collection of the given members (bands produced
// by the layered scheme are small, so exact search is affordable).
inline Packing exact_pack_band(const std::vector<Cycle>& members, DisjointMode mode) {
  ConflictGraph cg;
  cg.reset(static_cast<int>(members.size()));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (cycles_conflict(members[i], members[j], mode))
        cg.add_conflict(static_cast<int>(i), static_cast<int>(j));
  Packing p;
  p.mode = mode;
  for (int i : max_independent_set(cg, /*lex_smallest=*/true)) p.cycles.push_back(members[i]);
  return p;
}

// Layered near-optimal packing of interior-minimal members. Levels are peeled
// in the subgraph the members span; for each of the k shifts, the level line
// is tiled into width-k bands whose member sets are disjoint and packed
// exactly, and the best shift wins. Every member spans at most two adjacent
// levels, so it survives in k-1 of the k shifts, giving at least (1 - 1/k)
// of the optimum over the given members.
inline Packing baker_pack(const EmbeddedGraph& g, const std::vector<Cycle>& cmin, const Rat& eps,
                          DisjointMode mode) {
  require(eps > 0 && eps < rat(1, 3), ErrorKind::BadParams, "eps must lie in (0, 1/3)");
  Packing best;
  best.mode = mode;
  if (cmin.empty()) return best;

  std::vector<char> keep(g.m(), 0);
  for (const auto& c : cmin)
    for (int e : c.eset) keep[e] = 1;
  auto sub = restrict_graph(g, keep);
  auto level = outerplanarity_levels(sub);  // vertex ids are shared with g

  long maxlev = 1;
  std::vector<std::pair<long, long>> span;  // per member: min/max vertex level
  for (const auto& c : cmin) {
    long lo = level[c.verts[0]], hi = lo;
    for (int v : c.verts) {
      lo = std::min<long>(lo, level[v]);
      hi = std::max<long>(hi, level[v]);
    }
    require(hi - lo <= 1, ErrorKind::Internal, "a face boundary spans more than two adjacent levels");
    span.push_back({lo, hi});
    maxlev = std::max(maxlev, hi);
  }

  long k;
  {
    Rat e = eps;
    mpz_class kz;
    mpz_cdiv_q(kz.get_mpz_t(), e.get_den_mpz_t(), e.get_num_mpz_t());
    k = kz > maxlev + 1 ? maxlev + 1 : kz.get_si();  // one band already covers everything
  }

  for (long s = 1; s <= k; ++s) {
    Packing cur;
    cur.mode = mode;
    long j0 = s - k * ((s - 2 + k) / k);  // smallest shift-aligned band touching level 1
    for (long j = j0; j <= maxlev; j += k) {
      std::vector<Cycle> band;
      for (size_t i = 0; i < cmin.size(); ++i)
        if (span[i].first >= j && span[i].second <= j + k - 1) band.push_back(cmin[i]);
      auto packed = exact_pack_band(band, mode);
      cur.cycles.insert(cur.cycles.end(), packed.cycles.begin(), packed.cycles.end());
    }
    if (cur.cycles.size() > best.cycles.size()) best = std::move(cur);
  }
  return best;
}

// Full near-optimal packing: pack interior-minimal members via the layered
// scheme, delete what they occupy (their vertices in vertex mode, only their
// edges in edge mode), and repeat on the rest. Achieves at least
// (1/3 - eps) times the maximum disjoint packing.
inline Packing approx_pack(const EmbeddedGraph& g, const FamilySpec& f, const Rat& eps, DisjointMode mode) {
  require(eps > 0 && eps < rat(1, 3), ErrorKind::BadParams, "eps must lie in (0, 1/3)");
  Packing total;
  total.mode = mode;
  EmbeddedGraph cur = g;
  FamilySpec fcur = f;
  std::vector<int> to_orig(g.m());
  std::iota(to_orig.begin(), to_orig.end(), 0);
  while (cur.m() > 0) {
    auto cmin = face_minimal_cycles(cur, fcur);
    if (cmin.empty()) break;
    auto l1 = baker_pack(cur, cmin, eps, mode);
    if (l1.cycles.empty()) break;

    std::vector<char> ekeep(cur.m(), 1), vkeep(cur.n, 1);
    for (const auto& c : l1.cycles) {
      std::vector<int> ids;
      for (int e : c.eset) {
        ids.push_back(to_orig[e]);
        ekeep[e] = 0;
      }
      std::sort(ids.begin(), ids.end());
      total.cycles.push_back(make_cycle(g, ids));
      if (mode == DisjointMode::Vertex)
        for (int v : c.verts) vkeep[v] = 0;
    }
    auto nxt =
        restrict_graph(cur, ekeep, mode == DisjointMode::Vertex ? vkeep : std::vector<char>{});
    std::vector<int> t2(nxt.m());
    for (int e = 0; e < nxt.m(); ++e) t2[e] = to_orig[nxt.parent_edge[e]];
    fcur = restrict_family(fcur, nxt);
    cur = std::move(nxt);
    to_orig = std::move(t2);
  }
  return total;
}

}  // namespace cyclepack
