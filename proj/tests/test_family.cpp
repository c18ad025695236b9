#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "cyclepack/enumerate.hpp"
#include "cyclepack/family.hpp"
#include "cyclepack/generators.hpp"
#include "oracle.hpp"

using namespace cyclepack;

namespace {

std::vector<std::vector<int>> sorted_esets(const std::vector<Cycle>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.eset);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (auto k : {FamilyKind::AllUndirected, FamilyKind::AllDirected, FamilyKind::GirthUndirected,
                 FamilyKind::GirthDirected, FamilyKind::Odd, FamilyKind::ExactlyOneD,
                 FamilyKind::AtLeastOneD})
    CHECK(family_from_name(family_name(k)) == k);
  CHECK(!family_from_name("nonsense").has_value());
}

TEST_CASE("tetrahedral graph cycle families") {
  EmbeddedGraph g = gen_k4().graph();

  auto census = refimpl::all_cycles(g);
  REQUIRE(census.size() == 7);  // four triangles and three quadrilaterals

  FamilySpec all = make_family(g, FamilyKind::AllUndirected);
  auto cat = enumerate_cycles(g, all);
  CHECK(sorted_esets(cat.cycles) == refimpl::family_members(g, all, census));

  FamilySpec girth = make_family(g, FamilyKind::GirthUndirected);
  CHECK(girth.girth_len == 3);
  CHECK(enumerate_cycles(g, girth).cycles.size() == 4);
  CHECK(sorted_esets(enumerate_cycles(g, girth).cycles) ==
        refimpl::family_members(g, girth, census));

  FamilySpec odd = make_family(g, FamilyKind::Odd);
  CHECK(enumerate_cycles(g, odd).cycles.size() == 4);  // quads are even
}

TEST_CASE("odd family is empty on a bipartite graph") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec odd = make_family(g, FamilyKind::Odd);
  CHECK(enumerate_cycles(g, odd).cycles.empty());
  CHECK(support_oracle(g, odd, {}).empty());
}

TEST_CASE("demand families on the four-path banana") {
  EmbeddedGraph g = gen_banana().graph();
  auto census = refimpl::all_cycles(g);
  REQUIRE(census.size() == 6);  // unordered path pairs

  // one demand edge on the first path
  FamilySpec one = make_family(g, FamilyKind::ExactlyOneD, {0});
  CHECK(sorted_esets(enumerate_cycles(g, one).cycles) == refimpl::family_members(g, one, census));
  CHECK(enumerate_cycles(g, one).cycles.size() == 3);

  // demand edges on two different paths: exactly-one drops their pairing
  FamilySpec two = make_family(g, FamilyKind::ExactlyOneD, {0, 2});
  CHECK(enumerate_cycles(g, two).cycles.size() == 4);
  FamilySpec hit = make_family(g, FamilyKind::AtLeastOneD, {0, 2});
  CHECK(enumerate_cycles(g, hit).cycles.size() == 5);
  CHECK(sorted_esets(enumerate_cycles(g, hit).cycles) == refimpl::family_members(g, hit, census));
}

TEST_CASE("directed families") {
  // arcs 0->1, 1->2, 2->0 and a chord 0->2 giving a second directed cycle
  std::vector<EdgeRec> arcs = {{0, 1}, {1, 2}, {2, 0}, {0, 2}};
  EmbeddedGraph g = build_embedding(3, arcs, true);
  auto census = refimpl::all_cycles(g);
  REQUIRE(census.size() == 2);  // the triangle and the 2-cycle {2->0, 0->2}

  FamilySpec all = make_family(g, FamilyKind::AllDirected);
  CHECK(sorted_esets(enumerate_cycles(g, all).cycles) == refimpl::family_members(g, all, census));

  FamilySpec girth = make_family(g, FamilyKind::GirthDirected);
  CHECK(girth.girth_len == 2);
  auto cat = enumerate_cycles(g, girth);
  REQUIRE(cat.cycles.size() == 1);
  CHECK(cat.cycles[0].eset == std::vector<int>{2, 3});

  CHECK_THROWS_AS(make_family(g, FamilyKind::AllUndirected), Error);
}

TEST_CASE("weighted demand family weights") {
  Instance ins = gen_banana();
  ins.demand_edges = {0, 2};
  ins.demand_weights = {rat(3), rat(5, 2)};
  EmbeddedGraph g = ins.graph();
  FamilySpec f = ins.family(g, FamilyKind::ExactlyOneD);
  REQUIRE(f.weighted());
  for (const auto& c : enumerate_cycles(g, f).cycles) {
    Rat w = f.cycle_weight(c);
    bool has0 = std::binary_search(c.eset.begin(), c.eset.end(), 0);
    CHECK(w == (has0 ? rat(3) : rat(5, 2)));
  }
  CHECK_THROWS_AS(make_family(g, FamilyKind::ExactlyOneD, {0}, {rat(-1)}), Error);
}

TEST_CASE("membership distinguishes members from unions") {
  EmbeddedGraph g = gen_grid(3, 4).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cat = enumerate_cycles(g, f);
  // every enumerated member passes
  for (const auto& c : cat.cycles) CHECK(is_member(g, f, c));

  // the union of two disjoint squares contains members but is not one itself
  const Cycle* a = nullptr;
  const Cycle* b = nullptr;
  for (const auto& c1 : cat.cycles)
    for (const auto& c2 : cat.cycles) {
      if (c1.length() != 4 || c2.length() != 4) continue;
      if (!cycles_conflict(c1, c2, DisjointMode::Vertex) && c1.eset < c2.eset) {
        a = &c1;
        b = &c2;
      }
    }
  REQUIRE(a != nullptr);
  auto uni = sorted_union(a->eset, b->eset);
  auto found = membership(g, f, uni);
  REQUIRE(found.has_value());
  CHECK((found->eset == a->eset || found->eset == b->eset));
}

TEST_CASE("weight oracle returns a minimum-weight member") {
  EmbeddedGraph g = gen_k4().graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  std::vector<Rat> w(g.m(), rat(1));
  auto best = weight_oracle(g, f, w, detail::all_alive(g), nullptr);
  REQUIRE(best.has_value());
  CHECK(best->second == 3);  // a triangle

  // make one specific triangle cheap and check it is the one reported
  w[0] = w[1] = w[3] = rat(0);  // edges {0,1},{0,2},{1,2}
  best = weight_oracle(g, f, w, detail::all_alive(g), nullptr);
  REQUIRE(best.has_value());
  CHECK(best->second == 0);
  CHECK(best->first.eset == std::vector<int>{0, 1, 3});
}

TEST_CASE("support oracle matches the census union") {
  for (unsigned long long seed : {1ULL, 4ULL, 9ULL}) {
    EmbeddedGraph g = gen_random_planar(9, seed).graph();
    FamilySpec f = make_family(g, FamilyKind::AllUndirected);
    auto census = refimpl::all_cycles(g);
    std::set<int> uni;
    for (const auto& c : census)
      for (int e : c) uni.insert(e);
    auto sup = support_oracle(g, f, {});
    CHECK(sup == std::vector<int>(uni.begin(), uni.end()));
  }
}

TEST_CASE("restricting a family keeps only surviving members") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  std::vector<char> keep(g.m(), 1);
  keep[0] = 0;
  EmbeddedGraph sub = restrict_graph(g, keep);
  FamilySpec fs = restrict_family(f, sub);
  auto cat = enumerate_cycles(sub, fs);
  auto census = refimpl::all_cycles(sub);
  CHECK(cat.cycles.size() == census.size());
}

TEST_CASE("deterministic exchange witness between side-by-side squares") {
  EmbeddedGraph g = gen_grid(2, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cat = enumerate_cycles(g, f);
  REQUIRE(cat.cycles.size() == 3);  // two squares and their union rectangle
  const Cycle* left = nullptr;
  const Cycle* right = nullptr;
  for (const auto& c : cat.cycles) {
    if (c.length() != 4) continue;
    if (c.contains_vertex(0)) left = &c;
    if (c.contains_vertex(2)) right = &c;
  }
  REQUIRE((left && right));

  // path through the right square avoiding the shared edge
  auto p2 = sorted_difference(right->eset, left->eset);
  REQUIRE(p2.size() == 3);
  UncrossWitness w = uncross_witness(g, f, *left, *right, p2);
  CHECK(w.p1.size() == 1);               // the shared middle edge
  CHECK(w.c1_new.eset == right->eset);   // shared edge + right path
  CHECK(w.c2_new.eset == left->eset);    // remainder collapses to the left square

  CHECK_THROWS_AS(uncross_witness(g, f, *left, *right, std::vector<int>{}), Error);
}
