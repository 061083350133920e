#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridpoly/complex.hpp"
#include "gridpoly/rook.hpp"
#include "gridpoly/shelling.hpp"

// The facet-to-rook map: each generalized step contributes one rook,
// placed by the step's shape and the turn classification of its cells.

namespace gridpoly {

// Middle: the cell has at least one horizontal and at least one vertical
// neighbor in P. Extremal: not middle, but edge-adjacent to a middle cell.
enum class Turn { Middle, Extremal, NotInTurn };

std::string to_string(Turn t);

Turn classify_turn(const Polyomino& p, Cell c);

// rook contributed by one step; throws ShapeViolation, MissingCell
Cell rook_of_step(const Polyomino& p, const Face& facet, const GeneralizedStep& s);

// all rooks of a facet, in canonical cell order; throws AttackingResult when
// two steps collide or attack
RookConfig rookify(const Polyomino& p, const Face& facet);

struct InjectivityReport {
  bool injective = true;
  bool rank_preserved = true;      // |rookify(F)| == #steps of F for every facet
  std::size_t first = 0, second = 0;  // witness pair when not injective
  std::string detail;
};

InjectivityReport verify_injectivity(const Polyomino& p, const FacetList& fl);

struct SurjectivityReport {
  bool counts_match = true;
  std::vector<long long> facet_counts;  // facets by step count
  std::vector<long long> rook_counts;   // configurations by size
};

// the map is injective and both sides are finite: equal counts per size
// force bijectivity
SurjectivityReport verify_surjectivity_by_count(const Polyomino& p, const FacetList& fl);

}  // namespace gridpoly
