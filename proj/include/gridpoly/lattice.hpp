#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Lattice primitives shared by every module: points, cells, intervals, the
// vertex order, and the error vocabulary.  Coordinates are 1-based and
// positive in all library inputs; intermediate arithmetic may go negative.

namespace gridpoly {

// -------------------------------------------------------------- errors ----

// Bad input or a request outside an operation's domain.  CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotProper : InputError { using InputError::InputError; };
struct Empty : InputError { using InputError::InputError; };
struct Disconnected : InputError { using InputError::InputError; };
struct NotGrid : InputError { using InputError::InputError; };
struct PointOutsidePolyomino : InputError { using InputError::InputError; };
struct CellNotInPolyomino : InputError { using InputError::InputError; };
struct LengthMismatch : InputError { using InputError::InputError; };
struct NotAFacet : InputError { using InputError::InputError; };
struct ParseError : InputError { using InputError::InputError; };
struct SizeGuardExceeded : InputError { using InputError::InputError; };

// A theorem-level assertion failed on concrete data.  CLI exit code 1.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PurityViolation : VerificationError { using VerificationError::VerificationError; };
struct ShapeViolation : VerificationError { using VerificationError::VerificationError; };
struct IntersectionMismatch : VerificationError { using VerificationError::VerificationError; };
struct AttackingResult : VerificationError { using VerificationError::VerificationError; };
struct MissingCell : VerificationError { using VerificationError::VerificationError; };
struct RegularityMismatch : VerificationError { using VerificationError::VerificationError; };
struct GorensteinMismatch : VerificationError { using VerificationError::VerificationError; };

// -------------------------------------------------------------- points ----

struct Point {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

// The vertex order: u exceeds v when u.y > v.y, or u.y = v.y and u.x > v.x.
constexpr std::strong_ordering vertex_compare(Point a, Point b) {
  if (a.y != b.y) return a.y <=> b.y;
  return a.x <=> b.x;
}

constexpr bool vertex_less(Point a, Point b) {
  return vertex_compare(a, b) < 0;
}

// Canonical serialization order for vertex sets: greatest vertex first.
struct VertexDescending {
  constexpr bool operator()(Point a, Point b) const { return vertex_less(b, a); }
};

// Canonical order for cell lists: row-major, bottom row first.
struct RowMajor {
  constexpr bool operator()(Point a, Point b) const {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  }
};

struct PointHash {
  std::size_t operator()(Point p) const {
    return std::hash<std::int64_t>{}((std::int64_t(p.x) << 32) ^ std::uint32_t(p.y));
  }
};

std::string to_string(Point p);

// --------------------------------------------------------------- cells ----

// A unit cell, identified by its lower-left corner.
struct Cell {
  Point lo;
  friend constexpr bool operator==(Cell, Cell) = default;

  constexpr Point lower_left() const { return lo; }
  constexpr Point lower_right() const { return {lo.x + 1, lo.y}; }
  constexpr Point upper_left() const { return {lo.x, lo.y + 1}; }
  constexpr Point upper_right() const { return {lo.x + 1, lo.y + 1}; }
};

struct CellRowMajor {
  constexpr bool operator()(Cell a, Cell b) const { return RowMajor{}(a.lo, b.lo); }
};

struct CellHash {
  std::size_t operator()(Cell c) const { return PointHash{}(c.lo); }
};

// ----------------------------------------------------------- intervals ----

// Axis-aligned lattice interval [lo, hi], lo <= hi componentwise.  Proper
// means strictly increasing in both coordinates; edge intervals (one flat
// side) are legal values but have no corners or cells.
struct Interval {
  Point lo;
  Point hi;
  friend constexpr bool operator==(Interval, Interval) = default;

  constexpr bool is_proper() const { return lo.x < hi.x && lo.y < hi.y; }
  constexpr bool contains(Point p) const {
    return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
  }
  constexpr int width() const { return hi.x - lo.x; }
  constexpr int height() const { return hi.y - lo.y; }
};

// Validates lo <= hi componentwise.
Interval make_interval(Point lo, Point hi);

// Diagonal corners a (= lo), b (= hi); anti-diagonal corners c (upper
// left), d (lower right).
struct IntervalCorners {
  Point a, b, c, d;
};

// Throws NotProper on degenerate input.
IntervalCorners interval_corners(const Interval& iv);

// Cells whose closure lies inside the interval, row-major; empty for edge
// intervals.
std::vector<Cell> cells_of_interval(const Interval& iv);

std::string to_string(const Interval& iv);

// Canonical order for interval lists: (lo.y, lo.x, hi.y, hi.x) ascending.
struct IntervalOrder {
  constexpr bool operator()(const Interval& p, const Interval& q) const {
    if (p.lo.y != q.lo.y) return p.lo.y < q.lo.y;
    if (p.lo.x != q.lo.x) return p.lo.x < q.lo.x;
    if (p.hi.y != q.hi.y) return p.hi.y < q.hi.y;
    return p.hi.x < q.hi.x;
  }
};

}  // namespace gridpoly
