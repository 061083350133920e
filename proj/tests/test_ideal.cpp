#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <utility>

#include "gridpoly/ideal.hpp"
#include "oracles.hpp"

using namespace gridpoly;
using oracles::grid;

TEST_CASE("one generator per inner interval, in canonical order") {
  Polyomino p = grid({1}, {1});
  auto gens = generators(p);
  REQUIRE(gens.size() == 20);
  CHECK(gens.front().interval == make_interval({1, 1}, {2, 2}));
  CHECK(gens.back().interval == make_interval({3, 3}, {4, 4}));
  for (std::size_t i = 0; i + 1 < gens.size(); ++i)
    CHECK(IntervalOrder{}(gens[i].interval, gens[i + 1].interval));
  for (const auto& g : gens) {
    auto c = interval_corners(g.interval);
    CHECK(g.corners.a == c.a);
    CHECK(g.corners.b == c.b);
    CHECK(g.corners.c == c.c);
    CHECK(g.corners.d == c.d);
    CHECK(initial_support(g) == std::pair{c.c, c.d});  // anti-diagonal leads
  }
}

TEST_CASE("generator count matches the brute-force edge scan") {
  for (auto spec : {GridSpec{{1}, {1}}, GridSpec{{2}, {1}}, GridSpec{{1, 1}, {1}}}) {
    Polyomino p = generate_grid(spec);
    CHECK(generators(p).size() == oracles::brute_edges(p).size());
  }
}

TEST_CASE("ideal height equals the rank on grids") {
  CHECK(ideal_height(grid({1}, {1})) == 8);
  CHECK(ideal_height(grid({1, 1}, {1})) == 13);
  CHECK(ideal_height(grid({3}, {3})) == 16);
  Polyomino rect = Polyomino::from_cells(
      {Cell{{1, 1}}, Cell{{2, 1}}, Cell{{1, 2}}, Cell{{2, 2}}});
  CHECK_THROWS_AS(ideal_height(rect), NotGrid);
}

TEST_CASE("vertex-count necessary condition") {
  CHECK(koenig_necessary(grid({1}, {1})));      // 16 = 2*8
  CHECK(koenig_necessary(grid({2}, {1})));      // 20 = 2*10
  CHECK(koenig_necessary(grid({3}, {3})));      // 32 = 2*16
  CHECK(!koenig_necessary(grid({1, 1}, {1})));  // 24 < 26
  CHECK(!koenig_necessary(grid({2, 1}, {1})));  // 28 < 30
  CHECK(!koenig_necessary(grid({1}, {1, 1})));
}

TEST_CASE("single-hole grids carry a full disjoint family") {
  for (auto spec : {GridSpec{{1}, {1}}, GridSpec{{2}, {1}}, GridSpec{{3}, {3}}}) {
    Polyomino p = generate_grid(spec);
    KoenigDecision dec = koenig_type(p);
    CHECK(dec.is_koenig);
    CHECK(dec.reason == KoenigReason::WitnessFound);
    REQUIRE(int(dec.witness.size()) == p.rank());

    // supports cover every vertex exactly once
    std::set<std::pair<int, int>> covered;
    int diagonal = 0;
    for (const auto& entry : dec.witness) {
      diagonal += entry.initial_is_diagonal ? 1 : 0;
      auto [u, v] = entry.support();
      CHECK(covered.insert({u.x, u.y}).second);
      CHECK(covered.insert({v.x, v.y}).second);
    }
    CHECK(int(covered.size()) == p.vertex_count());
    CHECK(diagonal == 2);  // the two unit corner intervals

    verify_koenig_witness(p, dec);  // must not throw
  }
}

TEST_CASE("multi-hole grids fail on vertex count") {
  for (auto spec : {GridSpec{{1, 1}, {1}}, GridSpec{{1}, {1, 1}}, GridSpec{{2, 1}, {2}}}) {
    KoenigDecision dec = koenig_type(generate_grid(spec));
    CHECK(!dec.is_koenig);
    CHECK(dec.reason == KoenigReason::TooFewVertices);
    CHECK(dec.witness.empty());
    CHECK(dec.cell_weights.empty());
  }
}

TEST_CASE("witness verification rejects tampering") {
  Polyomino p = grid({1}, {1});
  KoenigDecision good = koenig_type(p);
  REQUIRE(good.is_koenig);

  SUBCASE("wrong size") {
    KoenigDecision bad = good;
    bad.witness.pop_back();
    CHECK_THROWS_AS(verify_koenig_witness(p, bad), VerificationError);
  }
  SUBCASE("generator used twice") {
    KoenigDecision bad = good;
    bad.witness.back() = bad.witness.front();
    CHECK_THROWS_AS(verify_koenig_witness(p, bad), VerificationError);
  }
  SUBCASE("flipped corner choice breaks the certificate") {
    KoenigDecision bad = good;
    for (auto& entry : bad.witness)
      if (!entry.initial_is_diagonal) { entry.initial_is_diagonal = true; break; }
    CHECK_THROWS_AS(verify_koenig_witness(p, bad), VerificationError);
  }
  SUBCASE("certificate cell outside the polyomino") {
    KoenigDecision bad = good;
    bad.cell_weights.emplace_back(Cell{{2, 2}}, 7);  // the hole
    CHECK_THROWS_AS(verify_koenig_witness(p, bad), VerificationError);
  }
  SUBCASE("negative decision is not verifiable") {
    KoenigDecision none = koenig_type(grid({1, 1}, {1}));
    CHECK_THROWS_AS(verify_koenig_witness(grid({1, 1}, {1}), none), VerificationError);
  }
}

TEST_CASE("reason names") {
  CHECK(to_string(KoenigReason::WitnessFound) == "witness_found");
  CHECK(to_string(KoenigReason::TooFewVertices) == "too_few_vertices");
  CHECK(to_string(KoenigReason::NoDisjointFamily) == "no_disjoint_family");
}
