#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gridpoly/polyomino.hpp"

// The simplicial complex attached to a polyomino: faces are the independent
// sets of the anti-diagonal graph, whose edges join the anti-diagonal corner
// pair {c, d} of each inner interval.

namespace gridpoly {

using u128 = unsigned __int128;
using i128 = __int128;

std::string u128_to_string(u128 v);

// enumeration guards, overridable from the CLI
struct Limits {
  int max_cells = 60;
  long long max_facets = 1'000'000;
  long long max_fvector_nodes = 50'000'000;
};

// a face, kept in descending vertex order
class Face {
 public:
  Face() = default;
  static Face from_points(std::vector<Point> pts);  // sorts, rejects duplicates

  const std::vector<Point>& points() const { return pts_; }
  int size() const { return static_cast<int>(pts_.size()); }
  bool contains(Point p) const;

  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Point> pts_;
};

class AntiDiagonalGraph {
 public:
  explicit AntiDiagonalGraph(const Polyomino& p);

  const std::vector<Point>& vertices() const { return verts_; }  // descending, index = bit
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int index_of(Point p) const;  // throws PointOutsidePolyomino
  Point vertex(int i) const { return verts_[i]; }

  // one edge {c, d} per inner interval, in canonical interval order
  const std::vector<std::pair<Point, Point>>& edges() const { return edges_; }

  int words() const { return words_; }
  std::span<const std::uint64_t> adjacency(int v) const;
  int degree(int v) const { return degree_[v]; }

 private:
  std::vector<Point> verts_;
  std::vector<std::pair<Point, Point>> edges_;
  std::vector<std::uint64_t> adj_;  // vertex_count rows of words_ each
  std::vector<int> degree_;
  int words_ = 0;
};

// all facets of the complex, sorted in descending lex order (shelling order)
class FacetList {
 public:
  FacetList(AntiDiagonalGraph graph, std::vector<std::uint64_t> bits, std::size_t count);

  std::size_t size() const { return count_; }
  int facet_size(std::size_t i) const;
  std::span<const std::uint64_t> bits(std::size_t i) const;
  Face face(std::size_t i) const;
  bool facet_contains(std::size_t i, int vertex_index) const;

  const AntiDiagonalGraph& graph() const { return graph_; }
  int words() const { return graph_.words(); }

 private:
  AntiDiagonalGraph graph_;
  std::vector<std::uint64_t> store_;
  std::size_t count_;
};

struct FVector {
  std::vector<u128> counts;  // counts[k] = number of faces of size k, counts[0] = 1
  u128 total_faces() const;
};

AntiDiagonalGraph antidiagonal_graph(const Polyomino& p);

// is the given point set a face, i.e. an independent set?
bool is_face(const Polyomino& p, const std::vector<Point>& pts);

FacetList facets(const Polyomino& p, const Limits& limits = {});

FVector f_vector(const Polyomino& p, const Limits& limits = {});

int krull_dim(const Polyomino& p);  // grid polyominoes: |V(P)| - rank P

// h-polynomial of a pure (d-1)-dimensional complex from its f-vector,
// returned with full length d+1 (trailing zeros kept)
std::vector<long long> h_from_f(const FVector& f, int d);

std::vector<long long> trim_trailing_zeros(std::vector<long long> v);

}  // namespace gridpoly
