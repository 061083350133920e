#include "gridpoly/lattice.hpp"

namespace gridpoly {

std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Interval make_interval(Point lo, Point hi) {
  if (hi.x < lo.x || hi.y < lo.y)
    throw NotProper("interval corners out of order: " + to_string(lo) + ".." + to_string(hi));
  return {lo, hi};
}

IntervalCorners interval_corners(const Interval& iv) {
  if (!iv.is_proper())
    throw NotProper("interval " + to_string(iv) + " is not proper");
  return {iv.lo, iv.hi, {iv.lo.x, iv.hi.y}, {iv.hi.x, iv.lo.y}};
}

std::vector<Cell> cells_of_interval(const Interval& iv) {
  std::vector<Cell> out;
  if (!iv.is_proper()) return out;
  out.reserve(std::size_t(iv.width()) * std::size_t(iv.height()));
  for (int y = iv.lo.y; y < iv.hi.y; ++y)
    for (int x = iv.lo.x; x < iv.hi.x; ++x)
      out.push_back(Cell{{x, y}});
  return out;
}

std::string to_string(const Interval& iv) {
  return "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
}

}  // namespace gridpoly
