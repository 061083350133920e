#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridpoly/polyomino.hpp"

// The polyomino ideal: one 2-minor per inner interval, with the anti-diagonal
// monomial as initial term, plus the Koenig-type decision procedure.

namespace gridpoly {

struct InnerMinor {
  Interval interval;
  IntervalCorners corners;  // a, b diagonal; c, d anti-diagonal
};

// one generator per inner interval, in canonical interval order
std::vector<InnerMinor> generators(const Polyomino& p);

// support of the initial monomial under the fixed order: the anti-diagonal pair
std::pair<Point, Point> initial_support(const InnerMinor& g);

// grid polyominoes: height of the ideal equals rank P
int ideal_height(const Polyomino& p);

// necessary condition |V(P)| >= 2 rank P
bool koenig_necessary(const Polyomino& p);

enum class KoenigReason { WitnessFound, TooFewVertices, NoDisjointFamily };

std::string to_string(KoenigReason r);

struct KoenigWitnessEntry {
  InnerMinor minor;
  bool initial_is_diagonal;  // which corner pair the witness order picks
  std::pair<Point, Point> support() const;
};

struct KoenigDecision {
  bool is_koenig = false;
  KoenigReason reason = KoenigReason::NoDisjointFamily;
  std::vector<KoenigWitnessEntry> witness;  // rank P entries when found
  // order certificate: integer weight per cell; a pair is heavier than the
  // other exactly when the signed sum over the interval's cells says so
  std::vector<std::pair<Cell, long long>> cell_weights;
};

KoenigDecision koenig_type(const Polyomino& p);

// re-checks a decision from scratch: entry count, distinct generators,
// pairwise disjoint supports, and the certificate ordering every choice
void verify_koenig_witness(const Polyomino& p, const KoenigDecision& decision);

}  // namespace gridpoly
