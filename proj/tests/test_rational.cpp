#include <catch2/catch_amalgamated.hpp>

#include "cyclepack/rational.hpp"
#include "cyclepack/simplex.hpp"

using namespace cyclepack;

TEST_CASE("rational construction and arithmetic") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(-3, 9) == rat(-1, 3));
  CHECK(rat(7) == Rat(7));
  CHECK(rat(1, 3) * 3 == 1);
  CHECK(rat(5, 3) > rat(3, 2));
  CHECK_THROWS_AS(rat(1, 0), Error);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("7") == rat(7));
  CHECK(parse_rat("-7") == rat(-7));
  CHECK(parse_rat("3/9") == rat(1, 3));
  CHECK(parse_rat("-3/9") == rat(-1, 3));
  CHECK(rat_str(rat(1, 3)) == "1/3");
  CHECK(rat_str(rat(4)) == "4");
  CHECK(rat_str(parse_rat(rat_str(rat(-22, 7)))) == "-22/7");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK(rat_sum({rat(1, 2), rat(1, 3), rat(1, 6)}) == 1);
}

TEST_CASE("simplex solves a box program") {
  // max x + y over the unit box; optimum 2 at (1, 1).
  auto r = solve_lp({rat(1), rat(1)}, {{rat(1), rat(0)}, {rat(0), rat(1)}}, {rat(1), rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 2);
  CHECK(r.x[0] == 1);
  CHECK(r.x[1] == 1);
  CHECK(r.dual_le[0] == 1);
  CHECK(r.dual_le[1] == 1);
}

TEST_CASE("simplex handles fractional optima exactly") {
  // max x + y with x + 2y <= 1, 2x + y <= 1; optimum 2/3 at (1/3, 1/3).
  auto r = solve_lp({rat(1), rat(1)}, {{rat(1), rat(2)}, {rat(2), rat(1)}}, {rat(1), rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == rat(2, 3));
  CHECK(r.x[0] == rat(1, 3));
  CHECK(r.x[1] == rat(1, 3));
}

TEST_CASE("simplex detects unboundedness") {
  auto r = solve_lp({rat(1)}, {}, {});
  CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("simplex detects infeasible equality systems") {
  // x <= 1 and x == 2 cannot both hold.
  auto r = solve_lp({rat(1)}, {{rat(1)}}, {rat(1)}, {{rat(1)}}, {rat(2)});
  CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("simplex equality constraints produce signed duals") {
  // max x - y with x + y == 1; optimum 1 at (1, 0).
  auto r = solve_lp({rat(1), rat(-1)}, {}, {}, {{rat(1), rat(1)}}, {rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(r.dual_eq.size() == 1);
  // weak duality at optimum: dual value matches primal value
  CHECK(r.dual_eq[0] == 1);
}

TEST_CASE("simplex rejects negative right-hand sides") {
  CHECK_THROWS_AS(solve_lp({rat(1)}, {{rat(1)}}, {rat(-1)}), Error);
}

TEST_CASE("fractional vertex cover of a triangle") {
  // min x0+x1+x2 s.t. xi + xj >= 1 per edge == max of the negation; classic
  // optimum is 3/2 at (1/2, 1/2, 1/2). Model as max -(x0+x1+x2) with
  // -xi - xj <= -1 rewritten through slack shift: use equality form instead:
  // xi + xj - s_ij == 1, s_ij >= 0.
  std::vector<Rat> c = {rat(-1), rat(-1), rat(-1), rat(0), rat(0), rat(0)};
  std::vector<std::vector<Rat>> aeq = {
      {rat(1), rat(1), rat(0), rat(-1), rat(0), rat(0)},
      {rat(0), rat(1), rat(1), rat(0), rat(-1), rat(0)},
      {rat(1), rat(0), rat(1), rat(0), rat(0), rat(-1)},
  };
  std::vector<Rat> beq = {rat(1), rat(1), rat(1)};
  auto r = solve_lp(c, {}, {}, aeq, beq);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == rat(-3, 2));
}
