#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "gridpoly/complex.hpp"
#include "oracles.hpp"

using namespace gridpoly;
using oracles::grid;

namespace {

std::vector<long long> to_ll(const FVector& f) {
  std::vector<long long> out;
  for (u128 c : f.counts) out.push_back(static_cast<long long>(c));
  return out;
}

}  // namespace

TEST_CASE("anti-diagonal graph of the frame") {
  Polyomino p = grid({1}, {1});
  AntiDiagonalGraph g(p);
  CHECK(g.vertex_count() == 16);
  CHECK(g.vertex(0) == Point{4, 4});   // descending vertex order
  CHECK(g.vertex(15) == Point{1, 1});
  CHECK(g.edges().size() == 20);       // one edge per inner interval
  CHECK(g.index_of({4, 4}) == 0);
  CHECK(g.index_of({1, 1}) == 15);
  CHECK_THROWS_AS(g.index_of({5, 5}), PointOutsidePolyomino);

  // ambient corners are isolated
  CHECK(g.degree(g.index_of({1, 1})) == 0);
  CHECK(g.degree(g.index_of({4, 4})) == 0);

  int degree_sum = 0;
  for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * int(g.edges().size()));
}

TEST_CASE("graph edges match the brute-force rectangle scan") {
  for (auto spec : {GridSpec{{1}, {1}}, GridSpec{{2}, {1}}, GridSpec{{1, 1}, {1}}}) {
    Polyomino p = generate_grid(spec);
    AntiDiagonalGraph g(p);
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> got, want;
    for (auto [c, d] : g.edges()) got.insert({{c.x, c.y}, {d.x, d.y}});
    for (auto [u, v] : oracles::brute_edges(p)) want.insert({{u.x, u.y}, {v.x, v.y}});
    CHECK(got == want);
  }
}

TEST_CASE("faces are independent sets") {
  Polyomino p = grid({1}, {1});
  CHECK(is_face(p, {}));
  CHECK(is_face(p, {{1, 1}}));
  CHECK(is_face(p, {{1, 1}, {4, 4}}));
  CHECK(is_face(p, {{1, 1}, {2, 2}}));        // diagonal pair: no edge
  CHECK(!is_face(p, {{1, 2}, {2, 1}}));       // anti-diagonal pair of a unit interval
  CHECK(!is_face(p, {{1, 1}, {2, 2}, {1, 4}, {2, 3}}));
  CHECK_THROWS_AS(is_face(p, {{9, 9}}), PointOutsidePolyomino);
}

TEST_CASE("Face canonicalizes and rejects duplicates") {
  Face f = Face::from_points({{1, 1}, {3, 2}, {1, 2}});
  CHECK(f.size() == 3);
  CHECK(f.points() == std::vector<Point>{{3, 2}, {1, 2}, {1, 1}});
  CHECK(f.contains({3, 2}));
  CHECK(!f.contains({2, 2}));
  CHECK_THROWS_AS(Face::from_points({{1, 1}, {1, 1}}), InputError);
}

TEST_CASE("facet list of the frame") {
  Polyomino p = grid({1}, {1});
  FacetList fl = facets(p);
  REQUIRE(fl.size() == 34);
  for (std::size_t j = 0; j < fl.size(); ++j) {
    CHECK(fl.facet_size(j) == 8);  // purity at |V| - rank
    Face f = fl.face(j);
    CHECK(is_face(p, f.points()));
    for (Point q : f.points()) CHECK(fl.facet_contains(j, fl.graph().index_of(q)));
  }
  // descending lex order is strict
  for (std::size_t j = 0; j + 1 < fl.size(); ++j) {
    Face a = fl.face(j), b = fl.face(j + 1);
    bool a_first = false;
    for (std::size_t k = 0; k < a.points().size(); ++k)
      if (!(a.points()[k] == b.points()[k])) {
        a_first = vertex_less(b.points()[k], a.points()[k]);
        break;
      }
    CHECK(a_first);
  }
  // both isolated corners lie in every facet
  for (std::size_t j = 0; j < fl.size(); ++j) {
    CHECK(fl.face(j).contains({1, 1}));
    CHECK(fl.face(j).contains({4, 4}));
  }
}

TEST_CASE("facet counts on larger instances") {
  CHECK(facets(grid({2}, {1})).size() == 62);
  CHECK(facets(grid({1, 1}, {1})).size() == 156);
  CHECK(facets(grid({3}, {3})).size() == 322);
  CHECK(facets(grid({4}, {1})).size() == 142);
}

TEST_CASE("enumeration guards trip") {
  Polyomino p = grid({1}, {1});
  CHECK_THROWS_AS(facets(p, Limits{4, 1'000'000, 50'000'000}), SizeGuardExceeded);
  CHECK_THROWS_AS(facets(p, Limits{60, 10, 50'000'000}), SizeGuardExceeded);
  CHECK_THROWS_AS(f_vector(p, Limits{60, 1'000'000, 1}), SizeGuardExceeded);
}

TEST_CASE("f-vector matches subset enumeration") {
  Polyomino p = grid({1}, {1});
  FVector f = f_vector(p);
  CHECK(to_ll(f) == std::vector<long long>{1, 16, 100, 328, 631, 740, 522, 204, 34});
  CHECK(static_cast<long long>(f.total_faces()) == 2576);
  CHECK(to_ll(f) == oracles::brute_f_vector(p));

  CHECK(to_ll(f_vector(grid({2}, {1}))) == oracles::brute_f_vector(grid({2}, {1})));
  CHECK(to_ll(f_vector(grid({1, 1}, {1}))) == oracles::brute_f_vector(grid({1, 1}, {1})));
}

TEST_CASE("f-vector works beyond the grid family") {
  Polyomino cell = Polyomino::from_cells({Cell{{1, 1}}});
  CHECK(to_ll(f_vector(cell)) == std::vector<long long>{1, 4, 5, 2});
  CHECK(to_ll(f_vector(cell)) == oracles::brute_f_vector(cell));
  CHECK_THROWS_AS(krull_dim(cell), NotGrid);
}

TEST_CASE("h from f") {
  Polyomino p = grid({1}, {1});
  auto h = h_from_f(f_vector(p), krull_dim(p));
  CHECK(h == std::vector<long long>{1, 8, 16, 8, 1, 0, 0, 0, 0});  // full length d+1
  CHECK(trim_trailing_zeros(h) == std::vector<long long>{1, 8, 16, 8, 1});

  Polyomino cell = Polyomino::from_cells({Cell{{1, 1}}});
  CHECK(h_from_f(f_vector(cell), 3) == std::vector<long long>{1, 1, 0, 0});
}

TEST_CASE("krull dimension is vertex count minus rank") {
  CHECK(krull_dim(grid({1}, {1})) == 8);
  CHECK(krull_dim(grid({2}, {1})) == 10);
  CHECK(krull_dim(grid({1, 1}, {1})) == 11);
  CHECK(krull_dim(grid({3}, {3})) == 16);
}

TEST_CASE("trim and u128 printing") {
  CHECK(trim_trailing_zeros({1, 2, 0, 0}) == std::vector<long long>{1, 2});
  CHECK(trim_trailing_zeros({}) == std::vector<long long>{});
  CHECK(u128_to_string(0) == "0");
  CHECK(u128_to_string(u128(1) << 100) == "1267650600228229401496703205376");
}
