#include "gridpoly/ideal.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace gridpoly {

std::vector<InnerMinor> generators(const Polyomino& p) {
  std::vector<InnerMinor> gens;
  const auto& inner = p.inner_intervals();
  gens.reserve(inner.size());
  for (const auto& it : inner) gens.push_back({it, interval_corners(it)});
  return gens;
}

std::pair<Point, Point> initial_support(const InnerMinor& g) {
  return {g.corners.c, g.corners.d};
}

int ideal_height(const Polyomino& p) {
  require_grid(p);
  return p.rank();
}

bool koenig_necessary(const Polyomino& p) {
  require_grid(p);
  return p.vertex_count() >= 2 * p.rank();
}

std::string to_string(KoenigReason r) {
  switch (r) {
    case KoenigReason::WitnessFound: return "witness_found";
    case KoenigReason::TooFewVertices: return "too_few_vertices";
    case KoenigReason::NoDisjointFamily: return "no_disjoint_family";
  }
  return "?";
}

std::pair<Point, Point> KoenigWitnessEntry::support() const {
  if (initial_is_diagonal) return {minor.corners.a, minor.corners.b};
  return {minor.corners.c, minor.corners.d};
}

namespace {

struct PairKey {
  Point lo, hi;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    PointHash h;
    return h(k.lo) * 1000003u + h(k.hi);
  }
};

// deterministic exact matching by backtracking: always extend the lowest
// uncovered vertex, trying partners in ascending index order
bool match_exact(const std::vector<std::vector<std::pair<int, int>>>& partners,
                 std::vector<char>& covered, int from, std::vector<char>& gen_used,
                 std::vector<std::pair<int, int>>& picked) {
  int v = from;
  const int n = static_cast<int>(covered.size());
  while (v < n && covered[v]) ++v;
  if (v == n) return true;
  covered[v] = 1;
  for (auto [w, gen] : partners[v]) {
    if (covered[w] || gen_used[gen]) continue;
    covered[w] = 1;
    gen_used[gen] = 1;
    picked.emplace_back(gen, v);
    if (match_exact(partners, covered, v + 1, gen_used, picked)) return true;
    picked.pop_back();
    gen_used[gen] = 0;
    covered[w] = 0;
  }
  covered[v] = 0;
  return false;
}

long long interval_delta(const Interval& it,
                         const std::unordered_map<Cell, long long, CellHash>& weights) {
  long long sum = 0;
  for (const Cell& c : cells_of_interval(it)) {
    auto found = weights.find(c);
    if (found == weights.end()) throw InputError("certificate misses cell " + to_string(c.lo));
    sum += found->second;
  }
  return sum;
}

// iterative feasibility search for cell weights honouring every sign choice
bool certify(const Polyomino& p, std::vector<KoenigWitnessEntry>& witness,
             std::vector<std::pair<Cell, long long>>& out) {
  std::unordered_map<Cell, long long, CellHash> weights;
  for (const Cell& c : p.cells()) weights[c] = 0;
  const int kMaxRounds = 200000;
  for (int round = 0; round < kMaxRounds; ++round) {
    bool ok = true;
    for (const auto& entry : witness) {
      long long target = entry.initial_is_diagonal ? 1 : -1;
      if (interval_delta(entry.minor.interval, weights) * target > 0) continue;
      ok = false;
      for (const Cell& c : cells_of_interval(entry.minor.interval)) weights[c] += target;
    }
    if (ok) {
      out.assign(weights.begin(), weights.end());
      std::sort(out.begin(), out.end(),
                [](const auto& a, const auto& b) { return CellRowMajor{}(a.first, b.first); });
      return true;
    }
  }
  return false;
}

}  // namespace

KoenigDecision koenig_type(const Polyomino& p) {
  const GridStructure gs = require_grid(p);
  const int rank = p.rank();
  const int nv = p.vertex_count();

  KoenigDecision dec;
  if (nv < 2 * rank) {
    dec.is_koenig = false;
    dec.reason = KoenigReason::TooFewVertices;
    return dec;
  }

  const auto gens = generators(p);
  const auto& verts = p.vertices();
  std::unordered_map<Point, int, PointHash> index;
  for (int i = 0; i < nv; ++i) index[verts[i]] = i;

  const Point corner_lo = gs.ambient().lo;                  // (1, 1)
  const Point corner_hi = gs.ambient().hi;                  // (m, n)
  const Interval lo_unit{corner_lo, corner_lo + Point{1, 1}};
  const Interval hi_unit{corner_hi - Point{1, 1}, corner_hi};

  // the corner vertices are isolated in the anti-diagonal graph, so a
  // disjoint family of full size must take the diagonal of the two unit
  // corner intervals; the rest is an anti-diagonal matching
  int lo_gen = -1, hi_gen = -1;
  std::vector<std::vector<std::pair<int, int>>> partners(nv);
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    if (gens[g].interval == lo_unit) lo_gen = g;
    if (gens[g].interval == hi_unit) hi_gen = g;
  }
  std::vector<char> covered(nv, 0);
  if (lo_gen >= 0 && hi_gen >= 0) {
    for (Point q : {corner_lo, corner_lo + Point{1, 1}, corner_hi, corner_hi - Point{1, 1}})
      covered[index.at(q)] = 1;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      if (g == lo_gen || g == hi_gen) continue;
      int c = index.at(gens[g].corners.c), d = index.at(gens[g].corners.d);
      if (covered[c] || covered[d]) continue;
      partners[std::min(c, d)].emplace_back(std::max(c, d), g);
      partners[std::max(c, d)].emplace_back(std::min(c, d), g);
    }
    for (auto& lst : partners) std::sort(lst.begin(), lst.end());
    std::vector<char> gen_used(gens.size(), 0);
    std::vector<std::pair<int, int>> picked;
    if (match_exact(partners, covered, 0, gen_used, picked)) {
      dec.witness.push_back({gens[lo_gen], true});
      dec.witness.push_back({gens[hi_gen], true});
      for (auto [g, v] : picked) {
        (void)v;
        dec.witness.push_back({gens[g], false});
      }
      // unit corner cells carry weight +1, every other cell -2: the two
      // diagonal choices sum to +1, anti-diagonal intervals hold at most
      // one corner cell and at least two cells
      for (const Cell& c : p.cells()) {
        bool corner_cell = c.lo == corner_lo || c.lo == corner_hi - Point{1, 1};
        dec.cell_weights.emplace_back(c, corner_cell ? 1 : -2);
      }
      dec.is_koenig = true;
      dec.reason = KoenigReason::WitnessFound;
      verify_koenig_witness(p, dec);
      return dec;
    }
  }

  // fallback: search pair choices over all generators, then certify weights
  if (nv == 2 * rank) {
    std::fill(covered.begin(), covered.end(), 0);
    for (auto& lst : partners) lst.clear();
    std::vector<std::vector<std::pair<int, int>>> diag_partners(nv);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      int a = index.at(gens[g].corners.a), b = index.at(gens[g].corners.b);
      int c = index.at(gens[g].corners.c), d = index.at(gens[g].corners.d);
      diag_partners[std::min(a, b)].emplace_back(std::max(a, b), g);
      diag_partners[std::max(a, b)].emplace_back(std::min(a, b), g);
      partners[std::min(c, d)].emplace_back(std::max(c, d), g);
      partners[std::max(c, d)].emplace_back(std::min(c, d), g);
    }
    // merge both sides, tagging the diagonal choice by gen index offset
    const int ng = static_cast<int>(gens.size());
    std::vector<std::vector<std::pair<int, int>>> mixed(nv);
    for (int v = 0; v < nv; ++v) {
      mixed[v] = partners[v];
      for (auto [w, g] : diag_partners[v]) mixed[v].emplace_back(w, g + ng);
      std::sort(mixed[v].begin(), mixed[v].end());
    }
    std::vector<char> gen_used(gens.size(), 0);
    std::vector<std::pair<int, int>> picked;
    std::function<bool(int)> rec = [&](int from) -> bool {
      int v = from;
      while (v < nv && covered[v]) ++v;
      if (v == nv) return true;
      covered[v] = 1;
      for (auto [w, tag] : mixed[v]) {
        int g = tag % ng;
        if (covered[w] || gen_used[g]) continue;
        covered[w] = 1;
        gen_used[g] = 1;
        picked.emplace_back(tag, v);
        if (rec(v + 1)) return true;
        picked.pop_back();
        gen_used[g] = 0;
        covered[w] = 0;
      }
      covered[v] = 0;
      return false;
    };
    if (rec(0)) {
      for (auto [tag, v] : picked) {
        (void)v;
        dec.witness.push_back({gens[tag % ng], tag >= ng});
      }
      if (certify(p, dec.witness, dec.cell_weights)) {
        dec.is_koenig = true;
        dec.reason = KoenigReason::WitnessFound;
        verify_koenig_witness(p, dec);
        return dec;
      }
      dec.witness.clear();
      dec.cell_weights.clear();
    }
  }

  dec.is_koenig = false;
  dec.reason = KoenigReason::NoDisjointFamily;
  return dec;
}

void verify_koenig_witness(const Polyomino& p, const KoenigDecision& decision) {
  require_grid(p);
  if (!decision.is_koenig) throw VerificationError("witness verification on a negative decision");
  if (static_cast<int>(decision.witness.size()) != p.rank())
    throw VerificationError("witness size differs from rank");

  std::unordered_set<PairKey, PairKeyHash> known;
  for (const auto& g : generators(p)) known.insert({g.interval.lo, g.interval.hi});

  std::unordered_set<PairKey, PairKeyHash> seen_intervals;
  std::unordered_set<Point, PointHash> seen_points;
  std::unordered_map<Cell, long long, CellHash> weights;
  for (const auto& [cell, w] : decision.cell_weights)
    if (!weights.emplace(cell, w).second)
      throw VerificationError("duplicate cell in certificate");
  for (const auto& [cell, w] : weights)
    if (!p.contains_cell(cell)) throw VerificationError("certificate cell outside polyomino");

  for (const auto& entry : decision.witness) {
    PairKey key{entry.minor.interval.lo, entry.minor.interval.hi};
    if (!known.count(key)) throw VerificationError("witness entry is not a generator");
    if (!seen_intervals.insert(key).second)
      throw VerificationError("generator used twice in witness");
    auto [u, v] = entry.support();
    if (!seen_points.insert(u).second || !seen_points.insert(v).second)
      throw VerificationError("witness supports are not disjoint");
    long long delta = interval_delta(entry.minor.interval, weights);
    if (delta == 0 || (delta > 0) != entry.initial_is_diagonal)
      throw VerificationError("certificate does not order entry at " +
                              to_string(entry.minor.interval));
  }
}

}  // namespace gridpoly
