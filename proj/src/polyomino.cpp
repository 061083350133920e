#include "gridpoly/polyomino.hpp"

#include <algorithm>
#include <queue>

namespace gridpoly {

namespace {

const Point kSides[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Connected component of `seed` within `domain`, removed from `domain`.
std::vector<Cell> extract_component(std::unordered_set<Cell, CellHash>& domain, Cell seed) {
  std::vector<Cell> comp;
  std::queue<Cell> q;
  q.push(seed);
  domain.erase(seed);
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    comp.push_back(c);
    for (Point d : kSides) {
      Cell nb{c.lo + d};
      auto it = domain.find(nb);
      if (it != domain.end()) {
        domain.erase(it);
        q.push(nb);
      }
    }
  }
  return comp;
}

}  // namespace

Polyomino Polyomino::from_cells(std::vector<Cell> cells) {
  if (cells.empty()) throw Empty("polyomino has no cells");
  std::sort(cells.begin(), cells.end(), CellRowMajor{});
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  for (Cell c : cells)
    if (c.lo.x < 1 || c.lo.y < 1)
      throw InputError("cell " + to_string(c.lo) + " has non-positive coordinates");

  Polyomino p;
  p.cells_ = std::move(cells);
  p.cell_set_.insert(p.cells_.begin(), p.cells_.end());

  auto domain = p.cell_set_;
  auto first = extract_component(domain, p.cells_.front());
  if (!domain.empty()) {
    std::vector<Cell> rest(domain.begin(), domain.end());
    std::sort(rest.begin(), rest.end(), CellRowMajor{});
    std::sort(first.begin(), first.end(), CellRowMajor{});
    throw Disconnected("cells are not edge-connected: component at " +
                       to_string(first.front().lo) + " (" + std::to_string(first.size()) +
                       " cells) is separate from " + to_string(rest.front().lo));
  }

  for (Cell c : p.cells_)
    for (Point v : {c.lower_left(), c.lower_right(), c.upper_left(), c.upper_right()})
      p.vertex_set_.insert(v);
  p.vertices_.assign(p.vertex_set_.begin(), p.vertex_set_.end());
  std::sort(p.vertices_.begin(), p.vertices_.end(), VertexDescending{});

  Point lo = p.cells_.front().lo, hi = lo;
  for (Cell c : p.cells_) {
    lo.x = std::min(lo.x, c.lo.x);
    lo.y = std::min(lo.y, c.lo.y);
    hi.x = std::max(hi.x, c.lo.x + 1);
    hi.y = std::max(hi.y, c.lo.y + 1);
  }
  p.bbox_ = {lo, hi};
  return p;
}

const std::vector<Interval>& Polyomino::inner_intervals() const {
  if (inner_cache_) return *inner_cache_;

  // prefix sums of the occupancy grid make the all-cells test O(1)
  const Interval& bb = bbox_;
  int W = bb.width(), H = bb.height();
  std::vector<int> pref((W + 1) * (H + 1), 0);
  auto at = [&](int i, int j) -> int& { return pref[j * (W + 1) + i]; };
  for (int j = 1; j <= H; ++j)
    for (int i = 1; i <= W; ++i) {
      int occ = cell_set_.count(Cell{{bb.lo.x + i - 1, bb.lo.y + j - 1}}) ? 1 : 0;
      at(i, j) = occ + at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
    }
  auto full = [&](Point lo, Point hi) {
    int i0 = lo.x - bb.lo.x, j0 = lo.y - bb.lo.y;
    int i1 = hi.x - bb.lo.x, j1 = hi.y - bb.lo.y;
    int count = at(i1, j1) - at(i0, j1) - at(i1, j0) + at(i0, j0);
    return count == (i1 - i0) * (j1 - j0);
  };

  auto out = std::make_shared<std::vector<Interval>>();
  for (int y1 = bb.lo.y; y1 < bb.hi.y; ++y1)
    for (int x1 = bb.lo.x; x1 < bb.hi.x; ++x1)
      for (int y2 = y1 + 1; y2 <= bb.hi.y; ++y2)
        for (int x2 = x1 + 1; x2 <= bb.hi.x; ++x2)
          if (full({x1, y1}, {x2, y2}))
            out->push_back({{x1, y1}, {x2, y2}});
  std::sort(out->begin(), out->end(), IntervalOrder{});
  inner_cache_ = std::move(out);
  return *inner_cache_;
}

std::vector<Polyomino> holes(const Polyomino& p) {
  const Interval& bb = p.bounding_box();
  // complement cells in the bounding box plus a one-cell collar, so every
  // unbounded region touches the collar
  std::unordered_set<Cell, CellHash> comp;
  for (int y = bb.lo.y - 1; y <= bb.hi.y; ++y)
    for (int x = bb.lo.x - 1; x <= bb.hi.x; ++x)
      if (!p.contains_cell(Cell{{x, y}})) comp.insert(Cell{{x, y}});

  // drain the outside first
  extract_component(comp, Cell{{bb.lo.x - 1, bb.lo.y - 1}});

  std::vector<std::vector<Cell>> bounded;
  while (!comp.empty()) {
    Cell seed = *std::min_element(comp.begin(), comp.end(), CellRowMajor{});
    bounded.push_back(extract_component(comp, seed));
  }
  std::sort(bounded.begin(), bounded.end(), [](const auto& a, const auto& b) {
    return CellRowMajor{}(*std::min_element(a.begin(), a.end(), CellRowMajor{}),
                          *std::min_element(b.begin(), b.end(), CellRowMajor{}));
  });

  std::vector<Polyomino> out;
  out.reserve(bounded.size());
  for (auto& cells : bounded) out.push_back(Polyomino::from_cells(std::move(cells)));
  return out;
}

bool is_thin(const Polyomino& p) {
  for (Cell c : p.cells()) {
    Point o = c.lo;
    if (p.contains_cell(Cell{{o.x + 1, o.y}}) && p.contains_cell(Cell{{o.x, o.y + 1}}) &&
        p.contains_cell(Cell{{o.x + 1, o.y + 1}}))
      return false;
  }
  return true;
}

std::vector<Cell> Block::cells() const {
  std::vector<Cell> out;
  out.reserve(length);
  Point step = orientation == Orientation::Horizontal ? Point{1, 0} : Point{0, 1};
  Point at = first.lo;
  for (int i = 0; i < length; ++i, at = at + step) out.push_back(Cell{at});
  return out;
}

bool Block::contains(Cell c) const {
  if (orientation == Orientation::Horizontal)
    return c.lo.y == first.lo.y && first.lo.x <= c.lo.x && c.lo.x < first.lo.x + length;
  return c.lo.x == first.lo.x && first.lo.y <= c.lo.y && c.lo.y < first.lo.y + length;
}

std::vector<Block> maximal_blocks(const Polyomino& p, Orientation o) {
  Point step = o == Orientation::Horizontal ? Point{1, 0} : Point{0, 1};
  std::vector<Block> out;
  for (Cell c : p.cells()) {
    if (p.contains_cell(Cell{c.lo - step})) continue;   // not the start of a run
    int len = 1;
    while (p.contains_cell(Cell{c.lo + Point{step.x * len, step.y * len}})) ++len;
    out.push_back(Block{o, c, len});
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return CellRowMajor{}(a.first, b.first); });
  return out;
}

std::string GridSpec::name() const {
  std::string s = "grid[";
  for (std::size_t i = 0; i < widths.size(); ++i)
    s += (i ? "," : "") + std::to_string(widths[i]);
  s += "][";
  for (std::size_t i = 0; i < heights.size(); ++i)
    s += (i ? "," : "") + std::to_string(heights[i]);
  return s + "]";
}

GridStructure grid_layout(const GridSpec& spec) {
  if (spec.widths.empty() || spec.heights.empty())
    throw InputError("grid spec needs at least one hole column and row");
  for (int w : spec.widths)
    if (w < 1) throw InputError("grid spec widths must be positive");
  for (int h : spec.heights)
    if (h < 1) throw InputError("grid spec heights must be positive");

  GridStructure g;
  g.spec = spec;
  int M = spec.r() + 1, N = spec.s() + 1;
  for (int w : spec.widths) M += w;
  for (int h : spec.heights) N += h;
  g.m = M + 1;
  g.n = N + 1;
  g.hole_x.resize(spec.r());
  g.hole_y.resize(spec.s());
  for (int i = 0, x = 2; i < spec.r(); x += spec.widths[i] + 1, ++i) g.hole_x[i] = x;
  for (int j = 0, y = 2; j < spec.s(); y += spec.heights[j] + 1, ++j) g.hole_y[j] = y;
  return g;
}

Polyomino generate_grid(const GridSpec& spec) {
  GridStructure g = grid_layout(spec);
  std::unordered_set<Cell, CellHash> holes;
  for (int i = 0; i < g.r(); ++i)
    for (int j = 0; j < g.s(); ++j)
      for (Cell c : cells_of_interval(g.hole(i, j))) holes.insert(c);

  std::vector<Cell> cells;
  for (int y = 1; y < g.n; ++y)
    for (int x = 1; x < g.m; ++x)
      if (!holes.count(Cell{{x, y}})) cells.push_back(Cell{{x, y}});
  return Polyomino::from_cells(std::move(cells));
}

GridRecognition recognize_grid(const Polyomino& p) {
  auto fail = [](std::string why) { return GridRecognition{std::nullopt, std::move(why)}; };

  auto hs = holes(p);
  if (hs.empty()) return fail("no holes: a grid polyomino is non-simple");

  std::vector<Interval> hv;   // holes as vertex intervals
  for (const Polyomino& h : hs) {
    const Interval& bb = h.bounding_box();
    if (h.rank() != bb.width() * bb.height())
      return fail("hole at " + to_string(bb.lo) + " is not a rectangle");
    hv.push_back(bb);
  }

  // hole columns and rows must align into a full r x s lattice
  std::vector<std::pair<int, int>> xs, ys;   // (lo, hi) spans
  for (const Interval& h : hv) {
    xs.emplace_back(h.lo.x, h.hi.x);
    ys.emplace_back(h.lo.y, h.hi.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i].first < xs[i - 1].second)
      return fail("hole columns overlap or misalign in x");
  for (std::size_t j = 1; j < ys.size(); ++j)
    if (ys[j].first < ys[j - 1].second)
      return fail("hole rows overlap or misalign in y");
  if (xs.size() * ys.size() != hv.size())
    return fail("holes do not form a complete lattice: " + std::to_string(hv.size()) +
                " holes for " + std::to_string(xs.size()) + " columns x " +
                std::to_string(ys.size()) + " rows");
  for (const auto& [x0, x1] : xs)
    for (const auto& [y0, y1] : ys) {
      Interval want{{x0, y0}, {x1, y1}};
      if (std::find(hv.begin(), hv.end(), want) == hv.end())
        return fail("hole lattice misses " + to_string(want));
    }

  // ambient rectangle with the holes strictly inside
  const Interval& bb = p.bounding_box();
  if (bb.lo != Point{1, 1})
    return fail("not embedded at (1,1): bounding box starts at " + to_string(bb.lo));
  int m = bb.hi.x, n = bb.hi.y;
  for (const Interval& h : hv)
    if (!(1 < h.lo.x && h.hi.x < m && 1 < h.lo.y && h.hi.y < n))
      return fail("hole " + to_string(h) + " touches the ambient border");

  long long hole_cells = 0;
  for (const Polyomino& h : hs) hole_cells += h.rank();
  if (p.rank() + hole_cells != (long long)(m - 1) * (n - 1))
    return fail("not an ambient rectangle minus its holes");

  // holes in consecutive columns/rows are separated by exactly one cell
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i].first != xs[i - 1].second + 1)
      return fail("hole columns are not separated by a unit corridor");
  for (std::size_t j = 1; j < ys.size(); ++j)
    if (ys[j].first != ys[j - 1].second + 1)
      return fail("hole rows are not separated by a unit corridor");

  if (!is_thin(p)) return fail("not thin: contains a 2x2 square of cells");

  GridStructure g;
  g.m = m;
  g.n = n;
  for (const auto& [x0, x1] : xs) {
    g.hole_x.push_back(x0);
    g.spec.widths.push_back(x1 - x0);
  }
  for (const auto& [y0, y1] : ys) {
    g.hole_y.push_back(y0);
    g.spec.heights.push_back(y1 - y0);
  }
  return GridRecognition{std::move(g), ""};
}

GridStructure require_grid(const Polyomino& p) {
  GridRecognition r = recognize_grid(p);
  if (!r.is_grid()) throw NotGrid(r.reason);
  return *std::move(r.structure);
}

}  // namespace gridpoly
