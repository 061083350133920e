#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "gridpoly/complex.hpp"
#include "gridpoly/polyomino.hpp"

// Shelling order on facets (descending lex) and the generalized steps that
// realize each facet's restriction set.

namespace gridpoly {

// descending lex order: compare the descending vertex sequences at the first
// difference; throws LengthMismatch on faces of different size
std::strong_ordering facet_lex_compare(const Face& f, const Face& g);

// the lex-greatest facet, built from the boundary-path formula
Face first_facet(const Polyomino& p);

// one step per corner of the restriction set of a facet: corner (i, j),
// nearest facet vertex (a, j) to the left in the row, nearest (i, b) above
// in the column, spanning the inner interval [(a, j), (i, b)]
struct GeneralizedStep {
  Point corner;  // (i, j)
  Point left;    // (a, j)
  Point top;     // (i, b)

  Interval interval() const { return Interval{{left.x, corner.y}, {corner.x, top.y}}; }
  friend bool operator==(const GeneralizedStep&, const GeneralizedStep&) = default;
};

enum class StepShape { Unit, Wide2, Wide3, Tall2, Tall3 };

std::string to_string(StepShape s);

// all generalized steps of a facet, sorted by corner (descending vertex order);
// throws NotAFacet if the face is not a facet
std::vector<GeneralizedStep> generalized_steps(const Polyomino& p, const Face& facet);

// steps of every facet in one pass, indexed like the facet list
std::vector<std::vector<GeneralizedStep>> facet_steps(const Polyomino& p, const FacetList& fl);

// checks the step against the five admissible shapes and their side
// conditions; throws ShapeViolation with a reason otherwise
StepShape validate_step_shape(const Polyomino& p, const Face& facet, const GeneralizedStep& s);

// restriction numbers r_j = #steps of facet j in shelling order
std::vector<int> restriction_numbers(const Polyomino& p, const FacetList& fl);

// literal restriction computation for one facet: maximal proper intersections
// F_h with h < j, each must be F_j minus one step corner; returns r_j
int brute_force_restriction(const Polyomino& p, const FacetList& fl, std::size_t j);

struct ShellingCheck {
  bool ok = true;
  std::string violation;  // empty when ok
};

// exhaustive verification over every facet pair: each prior intersection lies
// in some F_j minus a step corner, and each corner removal extends to a
// lex-earlier facet; assumes purity
ShellingCheck verify_shelling_intersections(const Polyomino& p, const FacetList& fl);

// h-polynomial as the histogram of restriction numbers, full length d+1
std::vector<long long> h_from_shelling(const Polyomino& p, const FacetList& fl);

}  // namespace gridpoly
