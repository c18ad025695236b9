#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "cyclepack/embedding.hpp"
#include "cyclepack/generators.hpp"

using namespace cyclepack;

namespace {

std::map<size_t, int> face_census(const EmbeddedGraph& g) {
  std::map<size_t, int> out;
  for (const auto& f : g.faces) out[f.size()]++;
  return out;
}

// Euler relation for a genus-0 embedding of a possibly disconnected graph.
void check_euler(const EmbeddedGraph& g) {
  CHECK(g.n - g.m() + g.num_finite_faces() + 1 == 1 + g.num_components);
}

}  // namespace

TEST_CASE("tetrahedral graph embeds with four triangular faces") {
  Instance ins = gen_k4();
  EmbeddedGraph g = ins.graph();
  REQUIRE(g.n == 4);
  REQUIRE(g.m() == 6);
  REQUIRE(g.num_faces() == 4);
  auto census = face_census(g);
  CHECK(census[3] == 4);
  check_euler(g);
}

TEST_CASE("3x3 grid has four squares and an eight-walk boundary") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  REQUIRE(g.n == 9);
  REQUIRE(g.m() == 12);
  REQUIRE(g.num_faces() == 5);
  auto census = face_census(g);
  CHECK(census[4] == 4);
  CHECK(census[8] == 1);
  CHECK(g.faces[g.infinite_face].size() == 8);
  check_euler(g);
}

TEST_CASE("dart conventions") {
  EmbeddedGraph g = gen_grid(2, 2).graph();
  for (int e = 0; e < g.m(); ++e) {
    CHECK(g.dart_tail(2 * e) == g.edges[e].u);
    CHECK(g.dart_head(2 * e) == g.edges[e].v);
    CHECK(g.dart_tail(2 * e + 1) == g.edges[e].v);
    CHECK(dart_reverse(2 * e) == 2 * e + 1);
    CHECK(dart_edge(2 * e + 1) == e);
  }
  // face_of_dart partitions the darts, consistent with the boundary walks
  std::vector<int> seen(2 * g.m(), 0);
  for (int fid = 0; fid < g.num_faces(); ++fid)
    for (int d : g.faces[fid]) {
      CHECK(g.face_of_dart[d] == fid);
      seen[d]++;
    }
  for (int d = 0; d < 2 * g.m(); ++d) CHECK(seen[d] == 1);
}

TEST_CASE("nonplanar graphs are rejected") {
  std::vector<EdgeRec> k5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.push_back({i, j});
  CHECK_THROWS_MATCHES(build_embedding(5, k5), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::NonPlanar; }));

  std::vector<EdgeRec> k33;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.push_back({i, j});
  CHECK_THROWS_AS(build_embedding(6, k33), Error);
}

TEST_CASE("invalid rotations are rejected") {
  std::vector<EdgeRec> tri = {{0, 1}, {1, 2}, {2, 0}};
  // dart 0 (edge 0 at vertex 0) listed twice, dart 5 missing
  std::vector<std::vector<int>> bad = {{0, 0}, {3, 2}, {5, 4}};
  CHECK_THROWS_MATCHES(build_embedding(3, tri, false, bad), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::InvalidRotation; }));
  // a rotation that is a valid permutation but of the wrong genus:
  // K4 with two vertices' cyclic orders swapped produces genus 1
  Instance k4 = gen_k4();
  auto rot = *k4.rotation;
  std::swap(rot[0][0], rot[0][1]);
  std::vector<EdgeRec> es;
  for (auto [u, v] : k4.edges) es.push_back({u, v});
  CHECK_THROWS_AS(build_embedding(4, es, false, rot), Error);
}

TEST_CASE("infinite face can be chosen by orbit index") {
  // triangle: orbits are the two sides; picking each in turn flips which one
  // is the infinite face
  std::vector<EdgeRec> tri = {{0, 1}, {1, 2}, {2, 0}};
  for (int orbit = 0; orbit < 2; ++orbit) {
    EmbeddedGraph g = build_embedding(3, tri, false, std::nullopt, orbit);
    REQUIRE(g.num_faces() == 2);
    CHECK(g.infinite_face == g.num_faces() - 1);  // always the last id
    CHECK(g.faces[g.infinite_face].size() == 3);
  }
}

TEST_CASE("disconnected graphs embed with a shared outer face") {
  std::vector<EdgeRec> two = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  EmbeddedGraph g = build_embedding(6, two);
  CHECK(g.num_components == 2);
  CHECK(g.num_faces() == 3);  // two finite triangles, one infinite face
  CHECK(g.faces[g.infinite_face].size() == 6);
  check_euler(g);
  CHECK(g.comp_of_vertex[0] == g.comp_of_vertex[2]);
  CHECK(g.comp_of_vertex[0] != g.comp_of_vertex[3]);
}

TEST_CASE("parallel edges embed as a bigon") {
  std::vector<EdgeRec> par = {{0, 1}, {0, 1}};
  EmbeddedGraph g = build_embedding(2, par);
  CHECK(g.num_faces() == 2);
  CHECK(g.faces[0].size() == 2);
  check_euler(g);
}

TEST_CASE("self-loops are rejected") {
  CHECK_THROWS_AS(build_embedding(2, std::vector<EdgeRec>{{0, 0}}), Error);
}

TEST_CASE("restriction keeps vertex ids and tracks parent edges") {
  EmbeddedGraph g = gen_grid(3, 3).graph();
  std::vector<char> keep(g.m(), 1);
  keep[0] = 0;  // drop one boundary edge
  EmbeddedGraph sub = restrict_graph(g, keep);
  CHECK(sub.n == g.n);
  CHECK(sub.m() == g.m() - 1);
  for (int e = 0; e < sub.m(); ++e) {
    int pe = sub.parent_edge[e];
    CHECK(g.edges[pe].u == sub.edges[e].u);
    CHECK(g.edges[pe].v == sub.edges[e].v);
  }
  check_euler(sub);
}

TEST_CASE("outerplanarity levels peel the grid inward") {
  EmbeddedGraph g = gen_grid(5, 5).graph();
  auto level = outerplanarity_levels(g);
  // boundary vertices at level 1, ring below at 2, centre at 3
  CHECK(level[0] == 1);       // corner
  CHECK(level[2] == 1);       // boundary middle
  CHECK(level[6] == 2);       // (1,1)
  CHECK(level[12] == 3);      // centre (2,2)
  for (int v = 0; v < g.n; ++v) CHECK((level[v] >= 1 && level[v] <= 3));
}

TEST_CASE("laminar forest of nested signatures") {
  // signatures over 4 ground faces: {0}, {0,1}, {2}, {0,1,2,3}
  auto bits = [](std::initializer_list<int> xs) {
    FaceSet s(4);
    for (int x : xs) s.set(x);
    return s;
  };
  std::vector<FaceSet> sigs = {bits({0}), bits({0, 1}), bits({2}), bits({0, 1, 2, 3})};
  LaminarForest forest = laminar_forest(sigs);
  CHECK(forest.parent[0] == 1);
  CHECK(forest.parent[1] == 3);
  CHECK(forest.parent[2] == 3);
  CHECK(forest.parent[3] == -1);
  CHECK(forest.roots == std::vector<int>{3});

  // crossing pair {0,1} vs {1,2} is refused
  std::vector<FaceSet> bad = {bits({0, 1}), bits({1, 2})};
  CHECK_THROWS_MATCHES(laminar_forest(bad), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::NotLaminar; }));

  // duplicates chain below each other instead of crossing
  std::vector<FaceSet> dup = {bits({0, 1}), bits({0, 1})};
  LaminarForest chain = laminar_forest(dup);
  CHECK(chain.parent[1] == 0);
}

TEST_CASE("random planar instances satisfy the Euler relation") {
  for (int n : {4, 7, 11, 16})
    for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
      EmbeddedGraph g = gen_random_planar(n, seed).graph();
      check_euler(g);
      EmbeddedGraph d = gen_random_planar(n, seed, true).graph();
      check_euler(d);
      CHECK(d.directed);
    }
}
