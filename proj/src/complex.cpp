#include "gridpoly/complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "gridpoly/detail/bits.hpp"

namespace gridpoly {

namespace bits = detail;

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Face Face::from_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), VertexDescending{});
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[i - 1]) throw InputError("duplicate point in face: " + to_string(pts[i]));
  Face f;
  f.pts_ = std::move(pts);
  return f;
}

bool Face::contains(Point p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p, VertexDescending{});
}

AntiDiagonalGraph::AntiDiagonalGraph(const Polyomino& p) : verts_(p.vertices()) {
  const int nv = static_cast<int>(verts_.size());
  words_ = bits::word_count(nv);
  adj_.assign(static_cast<std::size_t>(nv) * words_, 0);
  degree_.assign(nv, 0);
  std::unordered_map<Point, int, PointHash> index;
  for (int i = 0; i < nv; ++i) index[verts_[i]] = i;
  edges_.reserve(p.inner_intervals().size());
  for (const Interval& it : p.inner_intervals()) {
    IntervalCorners k = interval_corners(it);
    int c = index.at(k.c), d = index.at(k.d);
    edges_.emplace_back(k.c, k.d);
    bits::set_bit(&adj_[static_cast<std::size_t>(c) * words_], d);
    bits::set_bit(&adj_[static_cast<std::size_t>(d) * words_], c);
  }
  for (int v = 0; v < nv; ++v) degree_[v] = bits::popcount(&adj_[static_cast<std::size_t>(v) * words_], words_);
}

int AntiDiagonalGraph::index_of(Point p) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), p, VertexDescending{});
  if (it == verts_.end() || *it != p)
    throw PointOutsidePolyomino("point " + to_string(p) + " is not a vertex");
  return static_cast<int>(it - verts_.begin());
}

std::span<const std::uint64_t> AntiDiagonalGraph::adjacency(int v) const {
  return {&adj_[static_cast<std::size_t>(v) * words_], static_cast<std::size_t>(words_)};
}

AntiDiagonalGraph antidiagonal_graph(const Polyomino& p) { return AntiDiagonalGraph(p); }

bool is_face(const Polyomino& p, const std::vector<Point>& pts) {
  AntiDiagonalGraph g(p);
  std::vector<std::uint64_t> mask(g.words(), 0);
  for (Point q : pts) bits::set_bit(mask.data(), g.index_of(q));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!bits::test_bit(mask.data(), v)) continue;
    auto adj = g.adjacency(v);
    for (int w = 0; w < g.words(); ++w)
      if (adj[w] & mask[w]) return false;
  }
  return true;
}

FacetList::FacetList(AntiDiagonalGraph graph, std::vector<std::uint64_t> bits, std::size_t count)
    : graph_(std::move(graph)), store_(std::move(bits)), count_(count) {}

int FacetList::facet_size(std::size_t i) const {
  return bits::popcount(&store_[i * graph_.words()], graph_.words());
}

std::span<const std::uint64_t> FacetList::bits(std::size_t i) const {
  return {&store_[i * graph_.words()], static_cast<std::size_t>(graph_.words())};
}

bool FacetList::facet_contains(std::size_t i, int vertex_index) const {
  return bits::test_bit(&store_[i * graph_.words()], vertex_index);
}

Face FacetList::face(std::size_t i) const {
  std::vector<Point> pts;
  const std::uint64_t* w = &store_[i * graph_.words()];
  for (int v = 0; v < graph_.vertex_count(); ++v)
    if (bits::test_bit(w, v)) pts.push_back(graph_.vertex(v));
  return Face::from_points(std::move(pts));  // ascending index is descending vertex order
}

u128 FVector::total_faces() const {
  u128 t = 0;
  for (u128 c : counts) t += c;
  return t;
}

namespace {

void check_cell_guard(const Polyomino& p, const Limits& limits) {
  if (static_cast<long long>(p.cells().size()) > limits.max_cells)
    throw SizeGuardExceeded("cell count " + std::to_string(p.cells().size()) +
                            " exceeds limit " + std::to_string(limits.max_cells));
}

struct MaximalSetEnumerator {
  const AntiDiagonalGraph& g;
  const Limits& limits;
  int nv, words;
  std::vector<std::uint64_t> comp;  // complement adjacency, row per vertex
  std::vector<int> current;
  std::vector<std::uint64_t> out;
  long long count = 0;

  MaximalSetEnumerator(const AntiDiagonalGraph& graph, const Limits& lim)
      : g(graph), limits(lim), nv(graph.vertex_count()), words(graph.words()) {
    comp.assign(static_cast<std::size_t>(nv) * words, 0);
    for (int v = 0; v < nv; ++v) {
      std::uint64_t* row = &comp[static_cast<std::size_t>(v) * words];
      auto adj = g.adjacency(v);
      for (int w = 0; w < words; ++w) row[w] = ~adj[w];
      bits::clear_bit(row, v);
      for (int b = nv; b < words * bits::kWordBits; ++b) bits::clear_bit(row, b);
    }
  }

  const std::uint64_t* comp_row(int v) const { return &comp[static_cast<std::size_t>(v) * words]; }

  void emit() {
    if (++count > limits.max_facets)
      throw SizeGuardExceeded("facet count exceeds limit " + std::to_string(limits.max_facets));
    std::vector<std::uint64_t> f(words, 0);
    for (int v : current) bits::set_bit(f.data(), v);
    out.insert(out.end(), f.begin(), f.end());
  }

  // Bron-Kerbosch with pivoting on the complement graph
  void run(std::vector<std::uint64_t> P, std::vector<std::uint64_t> X) {
    if (!bits::any(P.data(), words) && !bits::any(X.data(), words)) {
      emit();
      return;
    }
    int pivot = -1, best = -1;
    for (int w = 0; w < words; ++w) {
      std::uint64_t both = P[w] | X[w];
      while (both) {
        int v = w * bits::kWordBits + std::countr_zero(both);
        both &= both - 1;
        int d = 0;
        const std::uint64_t* row = comp_row(v);
        for (int k = 0; k < words; ++k) d += std::popcount(row[k] & P[k]);
        if (d > best) {
          best = d;
          pivot = v;
        }
      }
    }
    std::vector<std::uint64_t> cands(words);
    const std::uint64_t* prow = comp_row(pivot);
    for (int w = 0; w < words; ++w) cands[w] = P[w] & ~prow[w];
    for (int w = 0; w < words; ++w) {
      std::uint64_t c = cands[w];
      while (c) {
        int v = w * bits::kWordBits + std::countr_zero(c);
        c &= c - 1;
        const std::uint64_t* row = comp_row(v);
        std::vector<std::uint64_t> np(words), nx(words);
        for (int k = 0; k < words; ++k) {
          np[k] = P[k] & row[k];
          nx[k] = X[k] & row[k];
        }
        current.push_back(v);
        run(std::move(np), std::move(nx));
        current.pop_back();
        bits::clear_bit(P.data(), v);
        bits::set_bit(X.data(), v);
      }
    }
  }
};

using Poly = std::vector<u128>;  // coefficients by face size

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

struct IndependencePoly {
  const AntiDiagonalGraph& g;
  const Limits& limits;
  int nv, words;
  long long nodes = 0;

  int degree_in(int v, const std::vector<std::uint64_t>& mask) const {
    auto adj = g.adjacency(v);
    int d = 0;
    for (int w = 0; w < words; ++w) d += std::popcount(adj[w] & mask[w]);
    return d;
  }

  Poly run(std::vector<std::uint64_t> mask) {
    if (++nodes > limits.max_fvector_nodes)
      throw SizeGuardExceeded("face enumeration exceeds node limit");
    // strip isolated vertices: each contributes a factor (1 + t)
    int isolated = 0;
    int best_v = -1, best_d = -1;
    for (int w = 0; w < words; ++w) {
      std::uint64_t m = mask[w];
      while (m) {
        int v = w * bits::kWordBits + std::countr_zero(m);
        m &= m - 1;
        int d = degree_in(v, mask);
        if (d == 0) {
          ++isolated;
          bits::clear_bit(mask.data(), v);
        } else if (d > best_d) {
          best_d = d;
          best_v = v;
        }
      }
    }
    Poly result{1};
    if (best_v >= 0) {
      // split into connected components of the induced subgraph
      std::vector<std::uint64_t> seen(words, 0);
      std::vector<std::vector<std::uint64_t>> parts;
      for (int w = 0; w < words; ++w) {
        std::uint64_t m = mask[w] & ~seen[w];
        while (m) {
          int v = w * bits::kWordBits + std::countr_zero(m);
          m &= m - 1;
          std::vector<std::uint64_t> comp(words, 0);
          std::vector<int> queue{v};
          bits::set_bit(comp.data(), v);
          while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            auto adj = g.adjacency(u);
            for (int k = 0; k < words; ++k) {
              std::uint64_t nb = adj[k] & mask[k] & ~comp[k];
              while (nb) {
                int x = k * bits::kWordBits + std::countr_zero(nb);
                nb &= nb - 1;
                bits::set_bit(comp.data(), x);
                queue.push_back(x);
              }
            }
          }
          for (int k = 0; k < words; ++k) seen[k] |= comp[k];
          m &= ~comp[w];
          parts.push_back(std::move(comp));
        }
      }
      if (parts.size() > 1) {
        for (auto& part : parts) result = poly_mul(result, run(std::move(part)));
      } else {
        // branch on a maximum-degree vertex: skip it, or take it and drop
        // its neighbourhood
        std::vector<std::uint64_t> without = mask, taken = mask;
        bits::clear_bit(without.data(), best_v);
        auto adj = g.adjacency(best_v);
        for (int k = 0; k < words; ++k) taken[k] &= ~adj[k];
        bits::clear_bit(taken.data(), best_v);
        Poly a = run(std::move(without));
        Poly b = run(std::move(taken));
        b.insert(b.begin(), 0);
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        result = std::move(a);
      }
    }
    while (isolated-- > 0) {
      Poly next(result.size() + 1, 0);
      for (std::size_t i = 0; i < result.size(); ++i) {
        next[i] += result[i];
        next[i + 1] += result[i];
      }
      result = std::move(next);
    }
    return result;
  }
};

i128 binom_i128(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

FacetList facets(const Polyomino& p, const Limits& limits) {
  check_cell_guard(p, limits);
  AntiDiagonalGraph g(p);
  MaximalSetEnumerator en(g, limits);
  std::vector<std::uint64_t> P(g.words(), 0), X(g.words(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) bits::set_bit(P.data(), v);
  en.run(std::move(P), std::move(X));

  const int words = g.words();
  const std::size_t count = static_cast<std::size_t>(en.count);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return bits::lex_precedes(&en.out[a * words], &en.out[b * words], words);
  });
  std::vector<std::uint64_t> sorted(en.out.size());
  for (std::size_t i = 0; i < count; ++i)
    std::copy_n(&en.out[order[i] * words], words, &sorted[i * words]);
  return FacetList(std::move(g), std::move(sorted), count);
}

FVector f_vector(const Polyomino& p, const Limits& limits) {
  check_cell_guard(p, limits);
  AntiDiagonalGraph g(p);
  if (g.vertex_count() > 120)
    throw SizeGuardExceeded("vertex count exceeds exact arithmetic range");
  IndependencePoly ip{g, limits, g.vertex_count(), g.words()};
  std::vector<std::uint64_t> mask(g.words(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) bits::set_bit(mask.data(), v);
  FVector f;
  f.counts = ip.run(std::move(mask));
  return f;
}

int krull_dim(const Polyomino& p) {
  require_grid(p);
  return p.vertex_count() - p.rank();
}

std::vector<long long> h_from_f(const FVector& f, int d) {
  if (static_cast<int>(f.counts.size()) > d + 1)
    throw InputError("f-vector exceeds dimension " + std::to_string(d));
  std::vector<long long> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    i128 acc = 0;
    for (int i = 0; i <= k && i < static_cast<int>(f.counts.size()); ++i) {
      i128 term = binom_i128(d - i, k - i) * static_cast<i128>(f.counts[i]);
      acc += ((k - i) % 2 == 0) ? term : -term;
    }
    constexpr i128 kMax = std::numeric_limits<long long>::max();
    if (acc > kMax || acc < -kMax) throw InputError("h-coefficient overflows");
    h[k] = static_cast<long long>(acc);
  }
  return h;
}

std::vector<long long> trim_trailing_zeros(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace gridpoly
