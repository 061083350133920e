// End-to-end acceptance gate: one line per criterion, nonzero exit on any
// failure.  Every value is recomputed here from scratch and, where a
// brute-force oracle exists, cross-checked against it.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "gridpoly/bijection.hpp"
#include "gridpoly/ideal.hpp"
#include "gridpoly/rook.hpp"
#include "gridpoly/shelling.hpp"
#include "gridpoly/verify.hpp"
#include "oracles.hpp"

using namespace gridpoly;

namespace {

int failures = 0;

void line(int id, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<long long> to_ll(const FVector& f) {
  std::vector<long long> out;
  for (u128 c : f.counts) out.push_back(static_cast<long long>(c));
  return out;
}

}  // namespace

int main() {
  const GridSpec frame_spec{{1}, {1}};

  // ---- criterion 1: the frame fixture, cross-checked against oracles ----
  bool c1 = true;
  std::string c1_note = "frame fixture matches the brute-force oracles exactly";
  {
    const auto t0 = std::chrono::steady_clock::now();
    Polyomino p = generate_grid(frame_spec);
    c1 = c1 && p.rank() == 8 && p.vertex_count() == 16;
    c1 = c1 && krull_dim(p) == 8 && ideal_height(p) == 8;
    c1 = c1 && generators(p).size() == 20;

    FacetList fl = facets(p);
    c1 = c1 && fl.size() == 34;
    for (std::size_t j = 0; j < fl.size(); ++j) c1 = c1 && fl.facet_size(j) == 8;

    const std::vector<long long> want_h{1, 8, 16, 8, 1};
    c1 = c1 && trim_trailing_zeros(h_from_shelling(p, fl)) == want_h;
    c1 = c1 && trim_trailing_zeros(h_from_f(f_vector(p), 8)) == want_h;
    c1 = c1 && rook_polynomial(p) == want_h;

    // independent oracles: subset-enumerated faces and rooks
    FVector brute_f;
    for (long long v : oracles::brute_f_vector(p)) brute_f.counts.push_back(u128(v));
    c1 = c1 && to_ll(f_vector(p)) == oracles::brute_f_vector(p);
    c1 = c1 && trim_trailing_zeros(h_from_f(brute_f, 8)) == want_h;
    c1 = c1 && oracles::brute_rook_counts(p, true) == want_h;

    c1 = c1 && regularity(p) == 4;

    KoenigDecision dec = koenig_type(p);
    c1 = c1 && dec.is_koenig && dec.witness.size() == 8;
    if (c1) verify_koenig_witness(p, dec);

    GorensteinResult gor = gorenstein(p);
    c1 = c1 && gor.algebraic && gor.structural;

    const double dt = seconds_since(t0);
    if (dt >= 1.0) {
      c1 = false;
      c1_note = "frame fixture exceeded the one-second budget";
    }
  }
  line(1, c1, c1_note);

  // ---- criteria 2, 4, 5, 6, 7: one pass over the full default family ----
  const auto sweep_t0 = std::chrono::steady_clock::now();
  const auto family = default_sweep_family(2, 3);
  bool c2 = family.size() == 144;
  bool c4 = true, c5 = true, c6 = true, c7 = true;
  std::map<StepShape, long long> shape_census;
  std::vector<std::string> palindromic;

  for (const GridSpec& spec : family) {
    Polyomino p = generate_grid(spec);
    FacetList fl = facets(p);

    // triple identity: shelling route, f-transform route, rook counts
    const auto h_shell = trim_trailing_zeros(h_from_shelling(p, fl));
    const auto h_f = trim_trailing_zeros(h_from_f(f_vector(p), krull_dim(p)));
    const auto rook = rook_polynomial(p);
    c2 = c2 && h_shell == h_f && h_f == rook;

    // every step of every facet fits an admissible shape
    const auto all = facet_steps(p, fl);
    try {
      for (std::size_t j = 0; j < fl.size(); ++j) {
        Face f = fl.face(j);
        for (const auto& s : all[j]) ++shape_census[validate_step_shape(p, f, s)];
      }
    } catch (const ShapeViolation&) {
      c4 = false;
    }

    // Koenig type is equivalent to having one hole
    const bool one_hole = spec.r() * spec.s() == 1;
    KoenigDecision dec = koenig_type(p);
    bool ok5 = dec.is_koenig == one_hole;
    if (dec.is_koenig) {
      try {
        verify_koenig_witness(p, dec);
      } catch (const std::exception&) {
        ok5 = false;
      }
    } else {
      ok5 = ok5 && p.vertex_count() < 2 * p.rank();
    }
    c5 = c5 && ok5;

    // facet-to-rook map: injective, rank preserving, matching counts
    const auto inj = verify_injectivity(p, fl);
    const auto sur = verify_surjectivity_by_count(p, fl);
    c6 = c6 && inj.injective && inj.rank_preserved && sur.counts_match &&
         rookify(p, first_facet(p)).empty();

    // palindromic h exactly where the block criterion holds
    GorensteinResult gor = gorenstein(p);
    c7 = c7 && gor.algebraic == gor.structural;
    if (gor.algebraic && gor.structural) palindromic.push_back(spec.name());
  }
  const double sweep_dt = seconds_since(sweep_t0);
  c2 = c2 && sweep_dt < 600.0;
  c4 = c4 && shape_census.size() == 5;  // all five shapes occur in the family
  c7 = c7 && palindromic == std::vector<std::string>{"grid[1][1]"};

  line(2, c2, "h(shelling) = h(f-vector) = rook polynomial on all 144 instances (" +
                  std::to_string(int(sweep_dt)) + " s)");

  // ---- criterion 3: literal restriction faces at every position ----
  bool c3 = true;
  for (auto spec : {GridSpec{{1}, {1}}, GridSpec{{1, 1}, {1}}}) {
    Polyomino p = generate_grid(spec);
    FacetList fl = facets(p);
    const auto rn = restriction_numbers(p, fl);
    try {
      for (std::size_t j = 0; j < fl.size(); ++j)
        c3 = c3 && brute_force_restriction(p, fl, j) == rn[j];
    } catch (const IntersectionMismatch&) {
      c3 = false;
    }
  }
  line(3, c3, "maximal intersections are exactly the step-corner removals at every position");

  long long census_total = 0;
  for (const auto& [shape, count] : shape_census) census_total += count;
  line(4, c4, "all " + std::to_string(census_total) +
                  " generalized steps fit the five admissible shapes, each shape observed");
  line(5, c5, "Koenig type holds exactly on one-hole instances; multi-hole instances lack vertices");
  line(6, c6, "facet-to-rook map injective with matching per-size counts, empty case included");
  line(7, c7, "palindromic h coincides with the structural criterion; only grid[1][1] has both");

  // ---- criterion 8: the ambient convention disagrees on the frame ----
  bool c8 = true;
  {
    Polyomino p = generate_grid(frame_spec);
    const auto ambient = rook_polynomial(p, AttackConvention::Ambient);
    const auto h = trim_trailing_zeros(h_from_shelling(p, facets(p)));
    c8 = ambient == std::vector<long long>{1, 8, 14, 4} && h[2] == 16 && ambient[2] == 14 &&
         ambient != h;
  }
  line(8, c8, "ambient-attack rook polynomial (1,8,14,4) differs from h at degree 2");

  std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
