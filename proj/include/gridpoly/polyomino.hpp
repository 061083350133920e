#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gridpoly/lattice.hpp"

// Finite collections of cells: construction and validation, holes,
// thinness, block partitions, and the grid family (a rectangle minus an
// aligned lattice of rectangular holes with unit margins and corridors).

namespace gridpoly {

class Polyomino {
 public:
  // Validates: non-empty, coordinates positive, no duplicates, cell-edge
  // connected.  Throws Empty / InputError / Disconnected.
  static Polyomino from_cells(std::vector<Cell> cells);

  // Row-major, bottom row first.
  const std::vector<Cell>& cells() const { return cells_; }
  int rank() const { return int(cells_.size()); }

  // Corners of cells, greatest vertex first.
  const std::vector<Point>& vertices() const { return vertices_; }
  int vertex_count() const { return int(vertices_.size()); }

  bool contains_cell(Cell c) const { return cell_set_.count(c) != 0; }
  bool contains_vertex(Point p) const { return vertex_set_.count(p) != 0; }

  // Over vertices, so spans [min cell, max cell + (1,1)].
  const Interval& bounding_box() const { return bbox_; }

  // Proper intervals whose cells all belong to the polyomino, in
  // (lo.y, lo.x, hi.y, hi.x) order.  Computed once and cached.
  const std::vector<Interval>& inner_intervals() const;

 private:
  Polyomino() = default;

  std::vector<Cell> cells_;
  std::vector<Point> vertices_;
  std::unordered_set<Cell, CellHash> cell_set_;
  std::unordered_set<Point, PointHash> vertex_set_;
  Interval bbox_{};
  // shared_ptr keeps the cache stable across copies of an immutable value
  mutable std::shared_ptr<const std::vector<Interval>> inner_cache_;
};

// Bounded connected components of the complement, each as a polyomino,
// ordered by their smallest cell.
std::vector<Polyomino> holes(const Polyomino& p);

// True when no 2x2 square of cells is present.
bool is_thin(const Polyomino& p);

enum class Orientation { Horizontal, Vertical };

// A maximal run of collinear cells; the partition includes singleton runs.
struct Block {
  Orientation orientation;
  Cell first;   // smallest cell of the run
  int length = 1;

  int rank() const { return length; }
  std::vector<Cell> cells() const;
  bool contains(Cell c) const;
  friend bool operator==(const Block&, const Block&) = default;
};

// Every cell lies in exactly one block of each orientation; ordered by
// first cell, row-major.
std::vector<Block> maximal_blocks(const Polyomino& p, Orientation o);

inline const std::vector<Interval>& inner_intervals(const Polyomino& p) {
  return p.inner_intervals();
}

// ------------------------------------------------------------- grids ----

// r hole-column widths and s hole-row heights, all >= 1.
struct GridSpec {
  std::vector<int> widths;
  std::vector<int> heights;
  friend bool operator==(const GridSpec&, const GridSpec&) = default;

  int r() const { return int(widths.size()); }
  int s() const { return int(heights.size()); }
  std::string name() const;
};

struct GridStructure {
  int m = 0, n = 0;          // ambient vertex grid is [(1,1),(m,n)]
  GridSpec spec;
  std::vector<int> hole_x;   // leftmost vertex x of each hole column
  std::vector<int> hole_y;   // bottom vertex y of each hole row

  int r() const { return spec.r(); }
  int s() const { return spec.s(); }
  Interval ambient() const { return {{1, 1}, {m, n}}; }
  // 0-based column i, row j
  Interval hole(int i, int j) const {
    return {{hole_x[i], hole_y[j]},
            {hole_x[i] + spec.widths[i], hole_y[j] + spec.heights[j]}};
  }
};

// Cell rectangle [1,M]x[1,N] minus the holes laid out with unit margins and
// corridors; M = r+1+sum(widths), N = s+1+sum(heights).
Polyomino generate_grid(const GridSpec& spec);
GridStructure grid_layout(const GridSpec& spec);

struct GridRecognition {
  std::optional<GridStructure> structure;
  std::string reason;   // first violated condition when not a grid

  bool is_grid() const { return structure.has_value(); }
};

// Decides membership in the grid family (including thinness) and recovers
// the hole lattice.
GridRecognition recognize_grid(const Polyomino& p);

// Throws NotGrid with the recognizer's reason; for operations whose domain
// is the grid family.
GridStructure require_grid(const Polyomino& p);

// --------------------------------------------------------------- I/O ----

// ASCII format: one line per cell row, top row first, '#' present and '.'
// absent, rectangular, newline-terminated.
Polyomino parse_ascii(const std::string& text);
std::string emit_ascii(const Polyomino& p);

// JSON format: {"cells": [[x,y], ...]}.
Polyomino parse_json_text(const std::string& text);
std::string emit_json_text(const Polyomino& p);

// Sniffs the format from the first non-space byte ('{' means JSON).
Polyomino parse_any(const std::string& text);

}  // namespace gridpoly
