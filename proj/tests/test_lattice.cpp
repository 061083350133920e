#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gridpoly/lattice.hpp"

using namespace gridpoly;

TEST_CASE("vertex order compares y before x") {
  CHECK(vertex_less({3, 1}, {1, 2}));
  CHECK(vertex_less({1, 2}, {3, 2}));
  CHECK(!vertex_less({2, 2}, {2, 2}));
  CHECK(vertex_compare({2, 2}, {2, 2}) == std::strong_ordering::equal);

  std::vector<Point> pts{{1, 1}, {2, 2}, {1, 2}, {3, 1}};
  std::sort(pts.begin(), pts.end(), VertexDescending{});
  CHECK(pts == std::vector<Point>{{2, 2}, {1, 2}, {3, 1}, {1, 1}});
}

TEST_CASE("row-major order compares y then x ascending") {
  std::vector<Cell> cs{Cell{{2, 2}}, Cell{{1, 1}}, Cell{{2, 1}}, Cell{{1, 2}}};
  std::sort(cs.begin(), cs.end(), CellRowMajor{});
  CHECK(cs == std::vector<Cell>{Cell{{1, 1}}, Cell{{2, 1}}, Cell{{1, 2}}, Cell{{2, 2}}});
}

TEST_CASE("cell corner accessors") {
  Cell c{{3, 5}};
  CHECK(c.lower_left() == Point{3, 5});
  CHECK(c.lower_right() == Point{4, 5});
  CHECK(c.upper_left() == Point{3, 6});
  CHECK(c.upper_right() == Point{4, 6});
}

TEST_CASE("make_interval validates orientation") {
  Interval iv = make_interval({1, 1}, {3, 2});
  CHECK(iv.is_proper());
  CHECK(iv.width() == 2);
  CHECK(iv.height() == 1);
  CHECK(iv.contains({2, 1}));
  CHECK(!iv.contains({4, 1}));
  CHECK_THROWS_AS(make_interval({3, 1}, {1, 2}), InputError);
  CHECK(!make_interval({1, 1}, {3, 1}).is_proper());  // edge interval is legal
}

TEST_CASE("interval corners name both diagonals") {
  auto c = interval_corners(make_interval({1, 1}, {3, 2}));
  CHECK(c.a == Point{1, 1});
  CHECK(c.b == Point{3, 2});
  CHECK(c.c == Point{1, 2});  // upper left
  CHECK(c.d == Point{3, 1});  // lower right
  CHECK_THROWS_AS(interval_corners(make_interval({1, 1}, {3, 1})), NotProper);
  CHECK_THROWS_AS(interval_corners(make_interval({2, 2}, {2, 2})), NotProper);
}

TEST_CASE("cells_of_interval walks row-major") {
  auto cells = cells_of_interval(make_interval({1, 1}, {3, 3}));
  REQUIRE(cells.size() == 4);
  CHECK(cells[0] == Cell{{1, 1}});
  CHECK(cells[1] == Cell{{2, 1}});
  CHECK(cells[2] == Cell{{1, 2}});
  CHECK(cells[3] == Cell{{2, 2}});
  CHECK(cells_of_interval(make_interval({1, 1}, {4, 1})).empty());
}

TEST_CASE("interval order sorts by lo then hi") {
  std::vector<Interval> ivs{make_interval({2, 1}, {3, 3}), make_interval({1, 2}, {2, 3}),
                            make_interval({2, 1}, {3, 2}), make_interval({1, 1}, {4, 4})};
  std::sort(ivs.begin(), ivs.end(), IntervalOrder{});
  CHECK(ivs[0] == make_interval({1, 1}, {4, 4}));
  CHECK(ivs[1] == make_interval({2, 1}, {3, 2}));
  CHECK(ivs[2] == make_interval({2, 1}, {3, 3}));
  CHECK(ivs[3] == make_interval({1, 2}, {2, 3}));
}

TEST_CASE("point arithmetic and printing") {
  CHECK(Point{1, 2} + Point{3, 4} == Point{4, 6});
  CHECK(Point{3, 4} - Point{1, 2} == Point{2, 2});
  CHECK(to_string(Point{3, 4}) == "(3,4)");
  CHECK(to_string(make_interval({1, 2}, {3, 4})) == "[(1,2),(3,4)]");
}
