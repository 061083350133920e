#include "gridpoly/shelling.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "gridpoly/detail/bits.hpp"

namespace gridpoly {

namespace bits = detail;

std::strong_ordering facet_lex_compare(const Face& f, const Face& g) {
  if (f.size() != g.size())
    throw LengthMismatch("lex comparison of faces of sizes " + std::to_string(f.size()) +
                         " and " + std::to_string(g.size()));
  for (int k = 0; k < f.size(); ++k) {
    auto c = vertex_compare(f.points()[k], g.points()[k]);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

Face first_facet(const Polyomino& p) {
  const GridStructure gs = require_grid(p);
  std::vector<Point> pts;
  for (int y = 1; y <= gs.n; ++y) pts.push_back({1, y});        // left column
  for (int x = 2; x <= gs.m; ++x) pts.push_back({x, gs.n});     // top row
  for (int i = 0; i < gs.r(); ++i)
    for (int j = 0; j < gs.s(); ++j) {
      Interval hole = gs.hole(i, j);
      // bottom edge without its left end, right edge without its top end
      for (int x = hole.lo.x + 1; x <= hole.hi.x; ++x) pts.push_back({x, hole.lo.y});
      for (int y = hole.lo.y + 1; y < hole.hi.y; ++y) pts.push_back({hole.hi.x, y});
    }
  return Face::from_points(std::move(pts));
}

std::string to_string(StepShape s) {
  switch (s) {
    case StepShape::Unit: return "unit";
    case StepShape::Wide2: return "wide2";
    case StepShape::Wide3: return "wide3";
    case StepShape::Tall2: return "tall2";
    case StepShape::Tall3: return "tall3";
  }
  return "?";
}

namespace {

struct IntervalHash {
  std::size_t operator()(const Interval& it) const {
    PointHash h;
    return h(it.lo) * 1000003u + h(it.hi);
  }
};

// precomputed per-instance tables for step detection across many facets
struct StepEngine {
  const Polyomino& p;
  const AntiDiagonalGraph& g;
  int nv, words;
  std::vector<char> corner_cell;               // Cell (x-1, y) lies in P
  std::vector<std::vector<int>> row_left;      // nearest-first indices left in the row
  std::vector<std::vector<int>> col_up;        // nearest-first indices above in the column
  std::unordered_set<Interval, IntervalHash> inner;

  StepEngine(const Polyomino& poly, const AntiDiagonalGraph& graph)
      : p(poly), g(graph), nv(graph.vertex_count()), words(graph.words()) {
    corner_cell.assign(nv, 0);
    row_left.assign(nv, {});
    col_up.assign(nv, {});
    std::unordered_map<Point, int, PointHash> index;
    for (int v = 0; v < nv; ++v) index[g.vertex(v)] = v;
    for (int v = 0; v < nv; ++v) {
      Point q = g.vertex(v);
      corner_cell[v] = p.contains_cell(Cell{{q.x - 1, q.y}});
      for (int x = q.x - 1; x >= 1; --x) {
        auto it = index.find({x, q.y});
        if (it != index.end()) row_left[v].push_back(it->second);
      }
      for (int y = q.y + 1; y <= p.bounding_box().hi.y; ++y) {
        auto it = index.find({q.x, y});
        if (it != index.end()) col_up[v].push_back(it->second);
      }
    }
    for (const Interval& it : p.inner_intervals()) inner.insert(it);
  }

  // steps of one facet given as a bitset, corners in ascending index order
  std::vector<GeneralizedStep> steps(const std::uint64_t* f) const {
    std::vector<GeneralizedStep> out;
    for (int v = 0; v < nv; ++v) {
      if (!bits::test_bit(f, v) || !corner_cell[v]) continue;
      int a = -1, b = -1;
      for (int w : row_left[v])
        if (bits::test_bit(f, w)) {
          a = w;
          break;
        }
      for (int w : col_up[v])
        if (bits::test_bit(f, w)) {
          b = w;
          break;
        }
      if (a < 0 || b < 0) continue;
      Point corner = g.vertex(v), left = g.vertex(a), top = g.vertex(b);
      if (!inner.count(Interval{{left.x, corner.y}, {corner.x, top.y}})) continue;
      out.push_back({corner, left, top});
    }
    return out;
  }
};

bool face_is_facet(const AntiDiagonalGraph& g, const Face& face,
                   std::vector<std::uint64_t>& out) {
  out.assign(g.words(), 0);
  for (Point q : face.points()) bits::set_bit(out.data(), g.index_of(q));
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto adj = g.adjacency(v);
    if (bits::test_bit(out.data(), v)) {
      for (int w = 0; w < g.words(); ++w)
        if (adj[w] & out[w]) return false;  // not independent
    } else {
      bool extendable = true;
      for (int w = 0; w < g.words(); ++w)
        if (adj[w] & out[w]) {
          extendable = false;
          break;
        }
      if (extendable) return false;  // not maximal
    }
  }
  return true;
}

}  // namespace

std::vector<GeneralizedStep> generalized_steps(const Polyomino& p, const Face& facet) {
  AntiDiagonalGraph g(p);
  std::vector<std::uint64_t> f;
  if (!face_is_facet(g, facet, f))
    throw NotAFacet("face is not a facet of the complex");
  StepEngine engine(p, g);
  return engine.steps(f.data());
}

StepShape validate_step_shape(const Polyomino& p, const Face& facet, const GeneralizedStep& s) {
  const Point c = s.corner;
  const int da = c.x - s.left.x, db = s.top.y - c.y;
  if (s.left.y != c.y || s.top.x != c.x || da < 1 || db < 1)
    throw ShapeViolation("malformed step at " + to_string(c));
  if (da > 1 && db > 1)
    throw ShapeViolation("step at " + to_string(c) + " spans " + std::to_string(da) + "x" +
                         std::to_string(db));
  auto need_cells = [&](std::initializer_list<Point> cells) {
    for (Point q : cells)
      if (!p.contains_cell(Cell{q}))
        throw ShapeViolation("step at " + to_string(c) + " misses cell " + to_string(q));
  };
  const Interval bb = p.bounding_box();
  auto facet_meets_column = [&](int x, int from_y, int dir) {
    for (int y = from_y + dir; y >= bb.lo.y && y <= bb.hi.y; y += dir)
      if (p.contains_vertex({x, y}) && facet.contains({x, y})) return true;
    return false;
  };
  auto facet_meets_row = [&](int y, int from_x, int dir) {
    for (int x = from_x + dir; x >= bb.lo.x && x <= bb.hi.x; x += dir)
      if (p.contains_vertex({x, y}) && facet.contains({x, y})) return true;
    return false;
  };
  if (da == 1 && db == 1) return StepShape::Unit;
  if (da == 2 && db == 1) return StepShape::Wide2;
  if (da == 1 && db == 2) return StepShape::Tall2;
  if (da == 3 && db == 1) {
    const int i = c.x, j = c.y;
    need_cells({{i - 3, j}, {i - 2, j}, {i - 1, j}, {i - 3, j + 1}, {i - 3, j - 1},
                {i - 1, j - 1}, {i - 1, j + 1}});
    if (!facet_meets_column(i, j, -1))
      throw ShapeViolation("wide step at " + to_string(c) + " finds no facet vertex below");
    if (!facet_meets_column(i - 3, j + 1, +1))
      throw ShapeViolation("wide step at " + to_string(c) + " finds no facet vertex above");
    return StepShape::Wide3;
  }
  if (da == 1 && db == 3) {
    const int i = c.x, j = c.y;
    need_cells({{i - 1, j}, {i - 1, j + 1}, {i - 1, j + 2}, {i - 2, j + 2}, {i, j + 2},
                {i - 2, j}, {i, j}});
    if (!facet_meets_row(j + 3, i - 1, -1))
      throw ShapeViolation("tall step at " + to_string(c) + " finds no facet vertex left");
    if (!facet_meets_row(j, i, +1))
      throw ShapeViolation("tall step at " + to_string(c) + " finds no facet vertex right");
    return StepShape::Tall3;
  }
  throw ShapeViolation("step at " + to_string(c) + " spans " + std::to_string(da) + "x" +
                       std::to_string(db));
}

std::vector<std::vector<GeneralizedStep>> facet_steps(const Polyomino& p, const FacetList& fl) {
  StepEngine engine(p, fl.graph());
  std::vector<std::vector<GeneralizedStep>> out(fl.size());
  for (std::size_t j = 0; j < fl.size(); ++j) out[j] = engine.steps(fl.bits(j).data());
  return out;
}

std::vector<int> restriction_numbers(const Polyomino& p, const FacetList& fl) {
  StepEngine engine(p, fl.graph());
  std::vector<int> r(fl.size(), 0);
  for (std::size_t j = 0; j < fl.size(); ++j)
    r[j] = static_cast<int>(engine.steps(fl.bits(j).data()).size());
  return r;
}

int brute_force_restriction(const Polyomino& p, const FacetList& fl, std::size_t j) {
  const int words = fl.words();
  StepEngine engine(p, fl.graph());
  auto steps = engine.steps(fl.bits(j).data());
  std::vector<int> corners;
  for (const auto& s : steps) corners.push_back(fl.graph().index_of(s.corner));
  std::sort(corners.begin(), corners.end());

  // all distinct intersections with earlier facets, largest first
  std::vector<std::vector<std::uint64_t>> inter;
  for (std::size_t h = 0; h < j; ++h) {
    std::vector<std::uint64_t> m(words);
    for (int w = 0; w < words; ++w) m[w] = fl.bits(h)[w] & fl.bits(j)[w];
    inter.push_back(std::move(m));
  }
  std::sort(inter.begin(), inter.end());
  inter.erase(std::unique(inter.begin(), inter.end()), inter.end());
  std::stable_sort(inter.begin(), inter.end(), [&](const auto& a, const auto& b) {
    return bits::popcount(a.data(), words) > bits::popcount(b.data(), words);
  });
  std::vector<std::vector<std::uint64_t>> maximal;
  for (const auto& m : inter) {
    bool dominated = false;
    for (const auto& k : maximal)
      if (bits::is_subset(m.data(), k.data(), words)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }

  // each maximal intersection must be the facet minus one step corner
  std::vector<int> removed;
  for (const auto& m : maximal) {
    std::vector<std::uint64_t> diff(words);
    for (int w = 0; w < words; ++w) diff[w] = fl.bits(j)[w] & ~m[w];
    if (bits::popcount(diff.data(), words) != 1)
      throw IntersectionMismatch("facet " + std::to_string(j) +
                                 ": maximal intersection misses more than one vertex");
    removed.push_back(bits::lowest_bit(diff.data(), words));
  }
  std::sort(removed.begin(), removed.end());
  if (removed != corners)
    throw IntersectionMismatch("facet " + std::to_string(j) +
                               ": intersections do not match the step corners");
  return static_cast<int>(corners.size());
}

ShellingCheck verify_shelling_intersections(const Polyomino& p, const FacetList& fl) {
  const std::size_t nf = fl.size();
  const int words = fl.words();
  const int nv = fl.graph().vertex_count();
  if (nf == 0) return {false, "no facets"};
  const int d = fl.facet_size(0);
  for (std::size_t j = 1; j < nf; ++j)
    if (fl.facet_size(j) != d)
      return {false, "facet " + std::to_string(j) + " breaks purity"};

  // vertex -> incidence bitset over facet indices
  const int fwords = bits::word_count(static_cast<int>(nf));
  std::vector<std::uint64_t> inc(static_cast<std::size_t>(nv) * fwords, 0);
  for (std::size_t j = 0; j < nf; ++j) {
    auto f = fl.bits(j);
    for (int v = 0; v < nv; ++v)
      if (bits::test_bit(f.data(), v))
        bits::set_bit(&inc[static_cast<std::size_t>(v) * fwords], static_cast<int>(j));
  }

  StepEngine engine(p, fl.graph());
  std::vector<std::uint64_t> meet(fwords), allowed(words);
  const auto& g = fl.graph();
  for (std::size_t j = 0; j < nf; ++j) {
    auto f = fl.bits(j);
    auto steps = engine.steps(f.data());

    // every earlier facet must avoid at least one step corner
    if (j > 0) {
      std::fill(meet.begin(), meet.end(), ~std::uint64_t(0));
      for (const auto& s : steps) {
        int v = g.index_of(s.corner);
        const std::uint64_t* row = &inc[static_cast<std::size_t>(v) * fwords];
        for (int w = 0; w < fwords; ++w) meet[w] &= row[w];
      }
      const int jw = static_cast<int>(j) / bits::kWordBits;
      for (int w = 0; w <= jw; ++w) {
        std::uint64_t m = meet[w];
        if (w == jw) m &= (std::uint64_t(1) << (j % bits::kWordBits)) - 1;
        if (m) {
          std::size_t h = static_cast<std::size_t>(w) * bits::kWordBits + std::countr_zero(m);
          return {false, "facet " + std::to_string(h) + " meets facet " + std::to_string(j) +
                             " outside its restriction faces"};
        }
      }
    } else if (!steps.empty()) {
      return {false, "first facet has a generalized step"};
    }

    // removing a step corner must extend to an earlier facet; with purity,
    // any independent completion of size d is a facet, and it is earlier
    // exactly when the new vertex has a lower index than the corner
    for (const auto& s : steps) {
      int v = g.index_of(s.corner);
      std::fill(allowed.begin(), allowed.end(), ~std::uint64_t(0));
      for (int b = nv; b < words * bits::kWordBits; ++b) bits::clear_bit(allowed.data(), b);
      for (int u = 0; u < nv; ++u) {
        if (!bits::test_bit(f.data(), u) || u == v) continue;
        auto adj = g.adjacency(u);
        for (int w = 0; w < words; ++w) allowed[w] &= ~adj[w];
        bits::clear_bit(allowed.data(), u);
      }
      bits::clear_bit(allowed.data(), v);
      int w = bits::lowest_bit(allowed.data(), words);
      if (w < 0 || w >= v)
        return {false, "facet " + std::to_string(j) + ": dropping corner " + to_string(s.corner) +
                           " reaches no earlier facet"};
    }
  }
  return {true, ""};
}

std::vector<long long> h_from_shelling(const Polyomino& p, const FacetList& fl) {
  int d = 0;
  for (std::size_t j = 0; j < fl.size(); ++j) d = std::max(d, fl.facet_size(j));
  std::vector<long long> h(d + 1, 0);
  for (int r : restriction_numbers(p, fl)) ++h[r];
  return h;
}

}  // namespace gridpoly
