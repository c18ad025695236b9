#include <catch2/catch_amalgamated.hpp>

#include "cyclepack/combinatorial.hpp"
#include "cyclepack/exact.hpp"
#include "cyclepack/generators.hpp"
#include "oracle.hpp"

using namespace cyclepack;

TEST_CASE("face-minimal members of the grid are its unit squares") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cmin = face_minimal_cycles(g, f);
  REQUIRE(cmin.size() == 4);
  for (const auto& c : cmin) {
    CHECK(c.length() == 4);
    CHECK(c.sig.count() == 1);
  }
}

TEST_CASE("face-minimal members exclude enclosing cycles") {
  EmbeddedGraph g = gen_k4().graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cmin = face_minimal_cycles(g, f);
  // the boundary triangle encloses all three finite faces, so only the three
  // finite face triangles are interior-minimal
  CHECK(cmin.size() == 3);
  for (const auto& c : cmin) CHECK(c.sig.count() == 1);

  // independent screen: a member is minimal iff no other member's interior
  // is properly contained in its own
  auto cat = full_catalog(g, f, -1);
  int minimal = 0;
  for (const auto& a : cat.cycles) {
    bool is_min = true;
    for (const auto& b : cat.cycles)
      if (b.sig.is_proper_subset_of(a.sig)) is_min = false;
    minimal += is_min ? 1 : 0;
  }
  CHECK(minimal == 3);
}

TEST_CASE("face-minimal members of the girth family on a wheel") {
  EmbeddedGraph g = gen_wheel(6).graph();
  FamilySpec f = make_family(g, FamilyKind::GirthUndirected);
  auto cmin = face_minimal_cycles(g, f);
  CHECK(cmin.size() == 6);  // all spoke triangles bound faces
}

TEST_CASE("band packing equals the reference maximum") {
  for (unsigned long long seed : {3ULL, 12ULL}) {
    EmbeddedGraph g = gen_random_planar(12, seed).graph();
    FamilySpec f = make_family(g, FamilyKind::AllUndirected);
    auto cat = full_catalog(g, f, -1);
    for (auto mode : {DisjointMode::Vertex, DisjointMode::Edge}) {
      Packing p = exact_pack_band(cat.cycles, mode);
      verify_packing(g, f, p);
      auto census = refimpl::all_cycles(g);
      auto members = refimpl::family_members(g, f, census);
      auto conf = refimpl::conflicts(g, members, mode == DisjointMode::Vertex);
      Rat expect = refimpl::max_packing_weight(conf, std::vector<Rat>(members.size(), rat(1)));
      CHECK(Rat(static_cast<long>(p.cycles.size())) == expect);
    }
  }
}

TEST_CASE("layered packing is exact when the levels fit one band") {
  // 4x4 grid: the face-minimal squares all sit within two peeling levels, so
  // eps = 1/4 (four levels per band) packs them exactly
  EmbeddedGraph g = gen_grid(4, 4).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cmin = face_minimal_cycles(g, f);
  REQUIRE(cmin.size() == 9);
  Packing baker = baker_pack(g, cmin, rat(1, 4), DisjointMode::Vertex);
  Packing exact = exact_pack_band(cmin, DisjointMode::Vertex);
  CHECK(baker.cycles.size() == exact.cycles.size());
  CHECK(baker.cycles.size() == 4);  // the four corner squares are disjoint

  Packing bedge = baker_pack(g, cmin, rat(1, 4), DisjointMode::Edge);
  Packing eedge = exact_pack_band(cmin, DisjointMode::Edge);
  CHECK(bedge.cycles.size() == eedge.cycles.size());
}

TEST_CASE("epsilon outside the open third interval is rejected") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  CHECK_THROWS_AS(approx_pack(g, f, rat(1, 2), DisjointMode::Vertex), Error);
  CHECK_THROWS_AS(approx_pack(g, f, rat(0), DisjointMode::Vertex), Error);
  CHECK_THROWS_AS(approx_pack(g, f, rat(1, 3), DisjointMode::Vertex), Error);
}

TEST_CASE("near-optimal packing meets its guarantee on small instances") {
  std::vector<std::pair<Instance, FamilyKind>> zoo;
  zoo.push_back({gen_k4(), FamilyKind::AllUndirected});
  zoo.push_back({gen_grid(3, 5), FamilyKind::AllUndirected});
  zoo.push_back({gen_banana(), FamilyKind::AllUndirected});
  zoo.push_back({gen_wheel(7), FamilyKind::GirthUndirected});
  for (unsigned long long seed : {4ULL, 10ULL})
    zoo.push_back({gen_random_planar(14, seed), FamilyKind::AllUndirected});
  Rat eps(1, 10);
  Rat floor_ratio = rat(1, 3) - eps;  // 7/30
  for (auto& [ins, kind] : zoo) {
    EmbeddedGraph g = ins.graph();
    FamilySpec f = ins.family(g, kind);
    for (auto mode : {DisjointMode::Vertex, DisjointMode::Edge}) {
      Packing p = approx_pack(g, f, eps, mode);
      verify_packing(g, f, p);
      Rat opt = exact_max_packing(g, f, mode).weight;
      CHECK(packing_weight(f, p) >= floor_ratio * opt);
    }
  }
}

TEST_CASE("packing verification rejects bad collections") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cat = full_catalog(g, f, -1);
  Cycle sq;
  for (const auto& c : cat.cycles)
    if (c.length() == 4 && c.contains_vertex(0)) sq = c;

  Packing dup;
  dup.mode = DisjointMode::Vertex;
  dup.cycles = {sq, sq};
  CHECK_THROWS_AS(verify_packing(g, f, dup), Error);

  // a cycle that exists in the graph but not in the (girth) family
  FamilySpec girth = make_family(g, FamilyKind::GirthUndirected);
  Cycle outer;
  for (const auto& c : cat.cycles)
    if (c.length() == 8) outer = c;
  Packing alien;
  alien.mode = DisjointMode::Vertex;
  alien.cycles = {outer};
  CHECK_THROWS_AS(verify_packing(g, girth, alien), Error);
}
