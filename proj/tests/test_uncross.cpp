#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "cyclepack/enumerate.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/uncross.hpp"
#include "oracle.hpp"

using namespace cyclepack;

namespace {

// x-weighted number of times each edge appears in the support.
std::map<int, Rat> edge_coverage(const FractionalPacking& p) {
  std::map<int, Rat> cov;
  for (size_t i = 0; i < p.columns.size(); ++i)
    for (int e : p.columns[i].eset) cov[e] += p.x[i];
  for (auto it = cov.begin(); it != cov.end();)
    it = it->second == 0 ? cov.erase(it) : std::next(it);
  return cov;
}

int pair_crossings(const EmbeddedGraph& g, const std::vector<Cycle>& cs) {
  int total = 0;
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) total += detail::cross_count(g, cs[i], cs[j]);
  return total;
}

}  // namespace

TEST_CASE("contact analysis classifies touching versus crossing") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cat = enumerate_cycles(g, f);

  // two unit squares sharing one edge: touching, not crossing
  const Cycle *tl = nullptr, *tr = nullptr, *vert = nullptr, *horiz = nullptr;
  for (const auto& c : cat.cycles) {
    if (c.length() == 4 && c.contains_vertex(0)) tl = &c;
    if (c.length() == 4 && c.contains_vertex(2)) tr = &c;
    if (c.length() == 6 && c.contains_vertex(0) && c.contains_vertex(6)) vert = &c;
    if (c.length() == 6 && c.contains_vertex(0) && c.contains_vertex(2)) horiz = &c;
  }
  REQUIRE((tl && tr && vert && horiz));
  CHECK(detail::cross_count(g, *tl, *tr) == 0);
  // left 2x1 rectangle against top 1x2 rectangle: one genuine crossing
  CHECK(detail::cross_count(g, *vert, *horiz) == 2);  // two side flips = one crossing, both counted
  CHECK(detail::cross_count(g, *tl, *vert) == 0);     // nested
}

TEST_CASE("strong uncrossing resolves a crossing rectangle pair") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cat = enumerate_cycles(g, f);
  const Cycle *vert = nullptr, *horiz = nullptr;
  for (const auto& c : cat.cycles) {
    if (c.length() == 6 && c.contains_vertex(0) && c.contains_vertex(6)) vert = &c;
    if (c.length() == 6 && c.contains_vertex(0) && c.contains_vertex(2)) horiz = &c;
  }
  REQUIRE((vert && horiz));
  std::vector<int> shared;
  for (int v : vert->verts)
    if (horiz->contains_vertex(v)) shared.push_back(v);
  REQUIRE(shared.size() >= 2);
  auto [c1, c2] = strong_uncross(g, f, make_crossing_pair(*vert, *horiz, shared.front(), shared.back()));
  CHECK(is_member(g, f, c1));
  CHECK(is_member(g, f, c2));
  CHECK(detail::cross_count(g, c1, c2) == 0);
  // signatures end up nested or disjoint
  bool nested = c1.sig.is_subset_of(c2.sig) || c2.sig.is_subset_of(c1.sig);
  bool disjoint = !c1.sig.intersects(c2.sig);
  CHECK((nested || disjoint));
}

TEST_CASE("strong uncrossing from arbitrary shared vertex pairs") {
  for (unsigned long long seed : {3ULL, 8ULL, 21ULL}) {
    EmbeddedGraph g = gen_random_planar(10, seed).graph();
    FamilySpec f = make_family(g, FamilyKind::AllUndirected);
    auto cat = enumerate_cycles(g, f);
    int tested = 0;
    for (size_t i = 0; i < cat.cycles.size() && tested < 40; ++i)
      for (size_t j = i + 1; j < cat.cycles.size() && tested < 40; ++j) {
        const Cycle &a = cat.cycles[i], &b = cat.cycles[j];
        std::vector<int> shared;
        for (int v : a.verts)
          if (b.contains_vertex(v)) shared.push_back(v);
        if (shared.size() < 2) continue;
        CrossingPair pair = make_crossing_pair(a, b, shared.front(), shared.back());
        auto [c1, c2] = strong_uncross(g, f, pair);
        CHECK(is_member(g, f, c1));
        CHECK(is_member(g, f, c2));
        ++tested;
      }
    CHECK(tested > 0);
  }
}

TEST_CASE("multiset uncrossing preserves cardinality and never raises coverage") {
  EmbeddedGraph g = gen_grid(4, 4).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cat = enumerate_cycles(g, f);
  // pick a deliberately crossing multiset: all 2x1 and 1x2 rectangles
  std::vector<Cycle> work;
  for (const auto& c : cat.cycles)
    if (c.length() == 6) work.push_back(c);
  REQUIRE(work.size() == 12);

  std::map<int, int> before_e;
  std::map<int, int> before_v;
  for (const auto& c : work) {
    for (int e : c.eset) before_e[e]++;
    for (int v : c.verts) before_v[v]++;
  }

  auto out = uncross_multiset(g, f, work);
  REQUIRE(out.size() == work.size());
  CHECK(pair_crossings(g, out) == 0);
  std::map<int, int> after_e;
  std::map<int, int> after_v;
  for (const auto& c : out) {
    CHECK(is_member(g, f, c));
    for (int e : c.eset) after_e[e]++;
    for (int v : c.verts) after_v[v]++;
  }
  for (auto [e, cnt] : after_e) CHECK(cnt <= before_e[e]);
  for (auto [v, cnt] : after_v) CHECK(cnt <= before_v[v]);
}

TEST_CASE("laminarization preserves the optimum and yields a laminar support") {
  std::vector<std::pair<Instance, FamilyKind>> zoo;
  zoo.push_back({gen_grid(4, 4), FamilyKind::AllUndirected});
  zoo.push_back({gen_k4(), FamilyKind::AllUndirected});
  zoo.push_back({gen_wheel(6), FamilyKind::AllUndirected});
  for (unsigned long long seed : {2ULL, 9ULL})
    zoo.push_back({gen_random_planar(12, seed), FamilyKind::AllUndirected});
  for (auto& [ins, kind] : zoo) {
    EmbeddedGraph g = ins.graph();
    FamilySpec f = ins.family(g, kind);
    for (auto mode : {DisjointMode::Vertex, DisjointMode::Edge}) {
      FractionalPacking sol = solve_packing_lp(g, f, mode);
      FractionalPacking ref = refine_min_length(g, f, mode, sol);
      LaminarizeResult res = laminarize_lp(g, f, ref);

      CHECK(res.packing.value == sol.value);
      CHECK(res.packing.total_length == ref.total_length);

      std::vector<FaceSet> sigs;
      for (const auto& c : res.packing.columns) sigs.push_back(c.sig);
      CHECK_NOTHROW(laminar_forest(sigs));

      CHECK(edge_coverage(res.packing) == edge_coverage(ref));

      // every exchange conserves the merged edge multiset of the pair
      for (const auto& st : res.trace) {
        std::map<int, int> lhs, rhs;
        for (int e : st.in1) lhs[e]++;
        for (int e : st.in2) lhs[e]++;
        for (int e : st.out1) rhs[e]++;
        for (int e : st.out2) rhs[e]++;
        CHECK(lhs == rhs);
      }
    }
  }
}
