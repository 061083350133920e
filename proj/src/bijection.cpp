#include "gridpoly/bijection.hpp"

#include <algorithm>
#include <map>

namespace gridpoly {

std::string to_string(Turn t) {
  switch (t) {
    case Turn::Middle: return "middle";
    case Turn::Extremal: return "extremal";
    case Turn::NotInTurn: return "not_in_turn";
  }
  return "?";
}

Turn classify_turn(const Polyomino& p, Cell c) {
  if (!p.contains_cell(c))
    throw CellNotInPolyomino("cell " + to_string(c.lo) + " is not in the polyomino");
  auto middle = [&](Cell q) {
    bool h = p.contains_cell({q.lo + Point{1, 0}}) || p.contains_cell({q.lo + Point{-1, 0}});
    bool v = p.contains_cell({q.lo + Point{0, 1}}) || p.contains_cell({q.lo + Point{0, -1}});
    return h && v;
  };
  if (middle(c)) return Turn::Middle;
  for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
    Cell nb{c.lo + d};
    if (p.contains_cell(nb) && middle(nb)) return Turn::Extremal;
  }
  return Turn::NotInTurn;
}

Cell rook_of_step(const Polyomino& p, const Face& facet, const GeneralizedStep& s) {
  const StepShape shape = validate_step_shape(p, facet, s);
  const Point c = s.corner;  // (i, j)
  Cell target{{c.x - 1, c.y}};
  switch (shape) {
    case StepShape::Unit:
      break;
    case StepShape::Wide3:
      target = Cell{{c.x - 2, c.y}};
      break;
    case StepShape::Tall3:
      target = Cell{{c.x - 1, c.y + 1}};
      break;
    case StepShape::Wide2:
    case StepShape::Tall2: {
      Cell corner_cell{{c.x - 1, c.y}};
      switch (classify_turn(p, corner_cell)) {
        case Turn::Extremal:
          break;  // rook stays in the corner cell
        case Turn::Middle:
          target = shape == StepShape::Wide2 ? Cell{{c.x - 2, c.y}} : Cell{{c.x - 1, c.y + 1}};
          break;
        case Turn::NotInTurn:
          throw ShapeViolation("step at " + to_string(c) +
                               " has its corner cell outside any change of direction");
      }
      break;
    }
  }
  if (!p.contains_cell(target))
    throw MissingCell("rook target " + to_string(target.lo) + " is not in the polyomino");
  return target;
}

namespace {

RookConfig rookify_steps(const Polyomino& p, const Face& facet,
                         const std::vector<GeneralizedStep>& steps) {
  RookConfig config;
  for (const GeneralizedStep& s : steps) config.push_back(rook_of_step(p, facet, s));
  std::sort(config.begin(), config.end(), CellRowMajor{});
  for (std::size_t i = 1; i < config.size(); ++i)
    if (config[i] == config[i - 1])
      throw AttackingResult("two steps place a rook in cell " + to_string(config[i].lo));
  if (!is_non_attacking(p, config))
    throw AttackingResult("rook placement of the facet is attacking");
  return config;
}

}  // namespace

RookConfig rookify(const Polyomino& p, const Face& facet) {
  return rookify_steps(p, facet, generalized_steps(p, facet));
}

namespace {

std::vector<int> encode(const RookConfig& config) {
  std::vector<int> key;
  key.reserve(config.size() * 2);
  for (const Cell& c : config) {
    key.push_back(c.lo.y);
    key.push_back(c.lo.x);
  }
  return key;
}

}  // namespace

InjectivityReport verify_injectivity(const Polyomino& p, const FacetList& fl) {
  InjectivityReport rep;
  const auto all_steps = facet_steps(p, fl);
  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t j = 0; j < fl.size(); ++j) {
    Face f = fl.face(j);
    const auto& steps = all_steps[j];
    RookConfig config = rookify_steps(p, f, steps);
    if (config.size() != steps.size()) {
      rep.rank_preserved = false;
      rep.detail = "facet " + std::to_string(j) + " loses a rook";
      return rep;
    }
    auto [it, fresh] = seen.emplace(encode(config), j);
    if (!fresh) {
      rep.injective = false;
      rep.first = it->second;
      rep.second = j;
      rep.detail = "facets " + std::to_string(it->second) + " and " + std::to_string(j) +
                   " share a rook configuration";
      return rep;
    }
  }
  return rep;
}

SurjectivityReport verify_surjectivity_by_count(const Polyomino& p, const FacetList& fl) {
  SurjectivityReport rep;
  for (int r : restriction_numbers(p, fl)) {
    if (static_cast<std::size_t>(r) >= rep.facet_counts.size())
      rep.facet_counts.resize(r + 1, 0);
    ++rep.facet_counts[static_cast<std::size_t>(r)];
  }
  rep.rook_counts = rook_polynomial(p);
  rep.counts_match = rep.facet_counts == rep.rook_counts;
  return rep;
}

}  // namespace gridpoly
