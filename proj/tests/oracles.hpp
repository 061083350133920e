#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gridpoly/lattice.hpp"
#include "gridpoly/polyomino.hpp"

// Reference implementations written straight from the definitions, sharing no
// algorithm with the library: every routine enumerates candidates outright.
// Only meant for the small instances used in tests.

namespace oracles {

using gridpoly::Cell;
using gridpoly::GridSpec;
using gridpoly::Point;
using gridpoly::Polyomino;

inline Polyomino grid(std::vector<int> w, std::vector<int> h) {
  return gridpoly::generate_grid(GridSpec{std::move(w), std::move(h)});
}

// anti-diagonal corner pairs {upper left, lower right} of inner intervals,
// found by testing every pair of vertices as a candidate rectangle
inline std::vector<std::pair<Point, Point>> brute_edges(const Polyomino& p) {
  std::vector<std::pair<Point, Point>> out;
  for (Point u : p.vertices())
    for (Point v : p.vertices()) {
      if (!(u.x < v.x && v.y < u.y)) continue;  // u upper left of v
      bool inner = true;
      for (int x = u.x; x < v.x && inner; ++x)
        for (int y = v.y; y < u.y && inner; ++y)
          if (!p.contains_cell(Cell{{x, y}})) inner = false;
      if (inner) out.emplace_back(u, v);
    }
  return out;
}

// face counts by enumerating every vertex subset; feasible up to ~25 vertices
inline std::vector<long long> brute_f_vector(const Polyomino& p) {
  const auto& vs = p.vertices();
  const int n = int(vs.size());
  std::vector<std::uint64_t> adj(n, 0);
  auto index = [&](Point q) {
    return int(std::find(vs.begin(), vs.end(), q) - vs.begin());
  };
  for (auto [u, v] : brute_edges(p)) {
    adj[index(u)] |= std::uint64_t(1) << index(v);
    adj[index(v)] |= std::uint64_t(1) << index(u);
  }
  std::vector<long long> counts(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool independent = true;
    for (std::uint64_t m = mask; m; m &= m - 1)
      if (adj[std::countr_zero(m)] & mask) { independent = false; break; }
    if (independent) ++counts[std::popcount(mask)];
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

// attack test from the definitions: collinear, and for the block convention
// every cell of the segment between the two must be present
inline bool brute_attack(const Polyomino& p, Cell a, Cell b, bool block) {
  if (a == b) return true;
  if (a.lo.y == b.lo.y) {
    if (!block) return true;
    for (int x = std::min(a.lo.x, b.lo.x); x <= std::max(a.lo.x, b.lo.x); ++x)
      if (!p.contains_cell(Cell{{x, a.lo.y}})) return false;
    return true;
  }
  if (a.lo.x == b.lo.x) {
    if (!block) return true;
    for (int y = std::min(a.lo.y, b.lo.y); y <= std::max(a.lo.y, b.lo.y); ++y)
      if (!p.contains_cell(Cell{{a.lo.x, y}})) return false;
    return true;
  }
  return false;
}

// rook counts by enumerating every cell subset; feasible up to ~20 cells
inline std::vector<long long> brute_rook_counts(const Polyomino& p, bool block) {
  const auto& cs = p.cells();
  const int n = int(cs.size());
  std::vector<long long> counts(1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask >> i & 1)
        for (int j = i + 1; j < n && ok; ++j)
          if ((mask >> j & 1) && brute_attack(p, cs[i], cs[j], block)) ok = false;
    if (!ok) continue;
    const int k = std::popcount(mask);
    if (int(counts.size()) <= k) counts.resize(k + 1, 0);
    ++counts[k];
  }
  return counts;
}

// bounded complement components by flood fill over a padded bounding box
inline int brute_hole_count(const Polyomino& p) {
  const auto bb = p.bounding_box();
  const int x0 = bb.lo.x - 1, x1 = bb.hi.x, y0 = bb.lo.y - 1, y1 = bb.hi.y;
  const int w = x1 - x0 + 1, h = y1 - y0 + 1;
  // 0 unknown, 1 outside, 2 hole
  std::vector<int> mark(std::size_t(w) * h, 0);
  auto at = [&](int x, int y) -> int& { return mark[std::size_t(y - y0) * w + (x - x0)]; };
  auto fill = [&](int sx, int sy, int tag) {
    std::vector<std::pair<int, int>> stack{{sx, sy}};
    at(sx, sy) = tag;
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        int nx = x + dx, ny = y + dy;
        if (nx < x0 || nx > x1 || ny < y0 || ny > y1) continue;
        if (at(nx, ny) != 0 || p.contains_cell(Cell{{nx, ny}})) continue;
        at(nx, ny) = tag;
        stack.emplace_back(nx, ny);
      }
    }
  };
  fill(x0, y0, 1);
  int count = 0;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x)
      if (at(x, y) == 0 && !p.contains_cell(Cell{{x, y}})) fill(x, y, 2), ++count;
  return count;
}

}  // namespace oracles
