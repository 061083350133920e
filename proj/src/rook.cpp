#include "gridpoly/rook.hpp"

#include <algorithm>
#include <unordered_map>

namespace gridpoly {

std::string to_string(AttackConvention c) {
  return c == AttackConvention::Block ? "block" : "ambient";
}

namespace {

void check_cells(const Polyomino& p, std::initializer_list<Cell> cells) {
  for (const Cell& c : cells)
    if (!p.contains_cell(c))
      throw CellNotInPolyomino("cell " + to_string(c.lo) + " is not in the polyomino");
}

// rows of the attack relation: cells grouped so that two cells attack
// horizontally exactly when they share a group; vid gives the vertical
// counterpart
struct AttackTable {
  std::vector<std::vector<Cell>> groups;              // ascending within and across
  std::unordered_map<Cell, int, CellHash> hid, vid;

  AttackTable(const Polyomino& p, AttackConvention conv) {
    if (conv == AttackConvention::Block) {
      auto hs = maximal_blocks(p, Orientation::Horizontal);
      auto vs = maximal_blocks(p, Orientation::Vertical);
      groups.resize(hs.size());
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (const Cell& c : hs[i].cells()) {
          hid[c] = static_cast<int>(i);
          groups[i].push_back(c);
        }
      }
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (const Cell& c : vs[i].cells()) vid[c] = static_cast<int>(i);
    } else {
      // ambient rows and columns of the bounding rectangle
      std::vector<Cell> cells = p.cells();  // row-major: y then x
      for (const Cell& c : cells) {
        if (groups.empty() || groups.back().back().lo.y != c.lo.y) groups.emplace_back();
        hid[c] = static_cast<int>(groups.size() - 1);
        groups.back().push_back(c);
        vid[c] = c.lo.x;
      }
    }
  }
};

}  // namespace

bool attacking(const Polyomino& p, Cell a, Cell b, AttackConvention convention) {
  check_cells(p, {a, b});
  if (a == b) return true;
  AttackTable t(p, convention);
  return t.hid.at(a) == t.hid.at(b) || t.vid.at(a) == t.vid.at(b);
}

bool is_non_attacking(const Polyomino& p, const RookConfig& config, AttackConvention convention) {
  for (const Cell& c : config) check_cells(p, {c});
  AttackTable t(p, convention);
  std::vector<int> hs, vs;
  for (const Cell& c : config) {
    hs.push_back(t.hid.at(c));
    vs.push_back(t.vid.at(c));
  }
  std::sort(hs.begin(), hs.end());
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(hs.begin(), hs.end()) == hs.end() &&
         std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

namespace {

// enumerate partial placements group by group; every recursion node is one
// non-attacking configuration
template <typename Visit>
void place(const AttackTable& t, std::size_t from, std::vector<Cell>& current,
           std::vector<char>& vused, const Visit& visit) {
  visit(current);
  for (std::size_t g = from; g < t.groups.size(); ++g)
    for (const Cell& c : t.groups[g]) {
      int v = t.vid.at(c);
      if (vused[v]) continue;
      vused[v] = 1;
      current.push_back(c);
      place(t, g + 1, current, vused, visit);
      current.pop_back();
      vused[v] = 0;
    }
}

int max_vid(const AttackTable& t) {
  int m = 0;
  for (const auto& [c, v] : t.vid) m = std::max(m, v);
  return m;
}

}  // namespace

std::vector<RookConfig> rook_configs(const Polyomino& p, int k, AttackConvention convention) {
  if (k < 0) throw InputError("negative rook count");
  AttackTable t(p, convention);
  std::vector<RookConfig> out;
  std::vector<Cell> current;
  std::vector<char> vused(max_vid(t) + 1, 0);
  place(t, 0, current, vused, [&](const std::vector<Cell>& cfg) {
    if (static_cast<int>(cfg.size()) == k) out.push_back(cfg);
  });
  return out;
}

std::vector<long long> rook_polynomial(const Polyomino& p, AttackConvention convention) {
  AttackTable t(p, convention);
  std::vector<long long> counts;
  std::vector<Cell> current;
  std::vector<char> vused(max_vid(t) + 1, 0);
  place(t, 0, current, vused, [&](const std::vector<Cell>& cfg) {
    if (cfg.size() >= counts.size()) counts.resize(cfg.size() + 1, 0);
    ++counts[cfg.size()];
  });
  return counts;
}

int rook_number(const Polyomino& p, AttackConvention convention) {
  return static_cast<int>(rook_polynomial(p, convention).size()) - 1;
}

}  // namespace gridpoly
