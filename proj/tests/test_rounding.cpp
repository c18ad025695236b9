#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "cyclepack/enumerate.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/rounding.hpp"
#include "cyclepack/uncross.hpp"
#include "oracle.hpp"

using namespace cyclepack;

namespace {

// The chosen witness really hits every member sharing a vertex with the
// chosen cycle (the chosen cycle included).
void check_witness(const EmbeddedGraph&, const std::vector<Cycle>& L, const EfficientChoice& ch) {
  REQUIRE(ch.index >= 0);
  REQUIRE(ch.witness.size() <= 5);
  const Cycle& c = L[ch.index];
  for (int w : ch.witness) CHECK(c.contains_vertex(w));
  for (const auto& other : L) {
    bool shares = false;
    for (int v : other.verts)
      if (c.contains_vertex(v)) shares = true;
    if (!shares) continue;
    bool hit = false;
    for (int w : ch.witness)
      if (other.contains_vertex(w)) hit = true;
    CHECK(hit);
  }
}

LaminarizeResult laminar_solution(const EmbeddedGraph& g, const FamilySpec& f, DisjointMode mode) {
  FractionalPacking sol = solve_packing_lp(g, f, mode);
  return laminarize_lp(g, f, refine_min_length(g, f, mode, sol));
}

}  // namespace

TEST_CASE("one-sided cycles of a nested pair") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto cat = enumerate_cycles(g, f);
  Cycle sq, outer;
  for (const auto& c : cat.cycles) {
    if (c.length() == 4 && c.contains_vertex(0)) sq = c;
    if (c.length() == 8) outer = c;
  }
  REQUIRE(outer.length() == 8);
  auto os = one_sided({sq, outer});
  REQUIRE(os.size() == 2);  // inner square inside-empty, boundary outside-empty
  std::set<std::pair<int, Side>> got;
  for (const auto& o : os) got.insert({o.index, o.empty_side});
  CHECK(got.count({0, Side::Inside}) == 1);
  CHECK(got.count({1, Side::Outside}) == 1);
}

TEST_CASE("efficient cycle choice on laminar families") {
  for (unsigned long long seed : {1ULL, 4ULL, 13ULL}) {
    EmbeddedGraph g = gen_random_planar(14, seed).graph();
    FamilySpec f = make_family(g, FamilyKind::AllUndirected);
    auto res = laminar_solution(g, f, DisjointMode::Vertex);
    if (res.packing.columns.empty()) continue;
    EfficientChoice ch = efficient_cycle(g, res.packing.columns);
    check_witness(g, res.packing.columns, ch);
  }
}

TEST_CASE("efficient cycle tightness needs five on the truncated dodecahedron") {
  Instance ins = gen_truncated_dodecahedron();
  EmbeddedGraph g = ins.graph();
  std::vector<Cycle> decagons;
  for (const auto& es : ins.cycles) decagons.push_back(make_cycle(g, es));
  REQUIRE(decagons.size() == 12);
  EfficientChoice ch = efficient_cycle(g, decagons);
  check_witness(g, decagons, ch);
  CHECK(ch.witness.size() == 5);
}

TEST_CASE("vertex rounding achieves a fifth of the optimum") {
  std::vector<std::pair<Instance, FamilyKind>> zoo;
  zoo.push_back({gen_grid(4, 4), FamilyKind::AllUndirected});
  zoo.push_back({gen_k4(), FamilyKind::AllUndirected});
  zoo.push_back({gen_banana(), FamilyKind::AllUndirected});
  zoo.push_back({gen_wheel(6), FamilyKind::GirthUndirected});
  for (unsigned long long seed : {5ULL, 11ULL})
    zoo.push_back({gen_random_planar(13, seed), FamilyKind::AllUndirected});
  for (auto& [ins, kind] : zoo) {
    EmbeddedGraph g = ins.graph();
    FamilySpec f = ins.family(g, kind);
    auto res = laminar_solution(g, f, DisjointMode::Vertex);
    auto picked = round_vertex(g, res.packing);
    CHECK(Rat(static_cast<long>(picked.size())) * 5 >= res.packing.value);
    for (size_t i = 0; i < picked.size(); ++i) {
      CHECK(is_member(g, f, picked[i]));
      for (size_t j = i + 1; j < picked.size(); ++j)
        CHECK(!cycles_conflict(picked[i], picked[j], DisjointMode::Vertex));
    }
  }
}

TEST_CASE("edge rounding: integral chain program, quarter guarantee") {
  std::vector<std::pair<Instance, FamilyKind>> zoo;
  zoo.push_back({gen_grid(4, 4), FamilyKind::AllUndirected});
  zoo.push_back({gen_banana(), FamilyKind::AllUndirected});
  zoo.push_back({gen_wheel(6), FamilyKind::AllUndirected});
  for (unsigned long long seed : {5ULL, 16ULL})
    zoo.push_back({gen_random_planar(13, seed), FamilyKind::AllUndirected});
  for (auto& [ins, kind] : zoo) {
    EmbeddedGraph g = ins.graph();
    FamilySpec f = ins.family(g, kind);
    auto res = laminar_solution(g, f, DisjointMode::Edge);
    EdgeRoundReport rep = round_edge(g, f, res.packing);
    CHECK(rep.chain_lp_value.get_den() == 1);
    Rat denom = rep.five_color_fallback ? 5 : 4;
    CHECK(rep.packed_weight * denom >= res.packing.value);
    CHECK(!rep.five_color_fallback);  // these sizes always 4-color
    for (size_t i = 0; i < rep.packing.size(); ++i) {
      CHECK(is_member(g, f, rep.packing[i]));
      for (size_t j = i + 1; j < rep.packing.size(); ++j)
        CHECK(!cycles_conflict(rep.packing[i], rep.packing[j], DisjointMode::Edge));
    }
  }
}

TEST_CASE("edge rounding falls back to five colors under a zero budget") {
  EmbeddedGraph g = gen_grid(4, 4).graph();
  FamilySpec f = make_family(g, FamilyKind::AllUndirected);
  auto res = laminar_solution(g, f, DisjointMode::Edge);
  EdgeRoundReport rep = round_edge(g, f, res.packing, /*color_budget=*/0);
  CHECK(rep.five_color_fallback);
  CHECK(rep.packed_weight * 5 >= res.packing.value);
}

TEST_CASE("weighted vertex rounding achieves a fifth of the weighted optimum") {
  for (unsigned long long seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
    Instance ins = gen_random_planar(12, seed);
    add_random_demands(ins, 3, seed + 50, true);
    EmbeddedGraph g = ins.graph();
    FamilySpec f = ins.family(g, FamilyKind::ExactlyOneD);
    auto res = laminar_solution(g, f, DisjointMode::Vertex);
    auto picked = round_weighted_vertex(g, f, res.packing);
    Rat got = 0;
    for (const auto& c : picked) got += f.cycle_weight(c);
    CHECK(got * 5 >= res.packing.value);
    for (size_t i = 0; i < picked.size(); ++i) {
      CHECK(is_member(g, f, picked[i]));
      for (size_t j = i + 1; j < picked.size(); ++j)
        CHECK(!cycles_conflict(picked[i], picked[j], DisjointMode::Vertex));
    }
  }
}

TEST_CASE("five-coloring is proper on planar conflict structures") {
  // adjacency of the dodecahedral graph itself
  EmbeddedGraph g = gen_dodecahedron().graph();
  std::vector<std::set<int>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  auto colors = detail::planar_five_coloring(adj);
  REQUIRE(colors.size() == adj.size());
  for (const auto& e : g.edges) CHECK(colors[e.u] != colors[e.v]);
  for (int c : colors) CHECK((c >= 0 && c < 5));
}

TEST_CASE("budgeted coloring finds four colors when they exist") {
  // 4-cycle: 2-colorable, so 4 colors certainly succeed
  std::vector<boost::dynamic_bitset<>> adj(4, boost::dynamic_bitset<>(4));
  auto link = [&](int a, int b) {
    adj[a].set(b);
    adj[b].set(a);
  };
  link(0, 1);
  link(1, 2);
  link(2, 3);
  link(3, 0);
  long budget = 1000;
  auto colors = detail::budgeted_coloring(adj, 4, budget);
  REQUIRE(!colors.empty());
  CHECK(colors[0] != colors[1]);

  // K5 is not 4-colorable
  std::vector<boost::dynamic_bitset<>> k5(5, boost::dynamic_bitset<>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      k5[i].set(j);
      k5[j].set(i);
    }
  CHECK(detail::budgeted_coloring(k5, 4, budget).empty());
}
