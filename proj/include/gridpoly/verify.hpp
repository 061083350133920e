#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gridpoly/complex.hpp"
#include "gridpoly/ideal.hpp"
#include "gridpoly/polyomino.hpp"

// End-to-end theorem verification on one instance, and the sweep driver.

namespace gridpoly {

u128 binom_u128(int n, int k);

struct HilbertSeries {
  int d = 0;                    // Krull dimension
  std::vector<long long> h;     // full h-polynomial, length d + 1
  std::vector<u128> values;     // H(0), H(1), ...
};

// Hilbert function values H(0..terms) from the shelling h-polynomial:
// H(k) = sum_i h_i * C(d - 1 + k - i, k - i)
HilbertSeries hilbert_series(const Polyomino& p, int terms, const Limits& limits = {});

// degree of the h-polynomial; equals the rook number
int regularity(const Polyomino& p, const Limits& limits = {});

struct GorensteinResult {
  bool algebraic = false;   // h-polynomial is palindromic
  bool structural = false;  // one hole and exactly four blocks of rank >= 2, each of rank 3
  std::vector<long long> h;  // trimmed
};

GorensteinResult gorenstein(const Polyomino& p, const Limits& limits = {});

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string details;
};

struct TheoremReport {
  std::string instance;
  int cells = 0;
  int m = 0, n = 0;  // corner vertex of the ambient interval
  int r = 0, s = 0;  // hole lattice dimensions
  int rank = 0;
  int vertex_count = 0;
  int krull_dim = 0;
  std::uint64_t facet_count = 0;
  std::vector<long long> h;     // trimmed, from the shelling
  std::vector<long long> rook;  // block convention
  int regularity = 0;
  KoenigDecision koenig;
  GorensteinResult gorenstein;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool all_passed() const;   // no check failed
  bool any_skipped() const;
};

// runs every check, never short-circuits; check names:
//   krull_dim, height, koenig_necessary, koenig_equivalence, purity,
//   shelling_intersections, step_shapes, h_equals_rook, regularity,
//   gorenstein_equivalence
TheoremReport verify_all(const Polyomino& p, const Limits& limits = {});

std::vector<GridSpec> default_sweep_family(int max_rs = 2, int max_size = 3);

std::vector<TheoremReport> sweep(const std::vector<GridSpec>& specs, const Limits& limits = {});

nlohmann::json report_json(const TheoremReport& report, bool with_timings = false);
std::string report_text(const TheoremReport& report);

nlohmann::json sweep_json(const std::vector<TheoremReport>& reports, bool with_timings = false);
std::string sweep_text(const std::vector<TheoremReport>& reports);

}  // namespace gridpoly
