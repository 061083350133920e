#include "gridpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <sstream>

#include "gridpoly/bijection.hpp"
#include "gridpoly/rook.hpp"
#include "gridpoly/shelling.hpp"

namespace gridpoly {

namespace {

u128 gcd_u128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

u128 binom_u128(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // cancel the denominator first so the product never exceeds the result
    u128 num = static_cast<unsigned>(n - k + i);
    u128 den = static_cast<unsigned>(i);
    u128 g = gcd_u128(num, den);
    num /= g;
    den /= g;
    g = gcd_u128(r, den);
    r /= g;   // den divides r * num, so it is 1 after both reductions
    if (num != 0 && r > ~u128(0) / num)
      throw InputError("binomial coefficient overflows 128-bit range");
    r = r * num;
  }
  return r;
}

namespace {

u128 checked_add(u128 a, u128 b) {
  if (a > ~u128(0) - b) throw InputError("value overflows 128-bit range");
  return a + b;
}

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > ~u128(0) / a) throw InputError("value overflows 128-bit range");
  return a * b;
}

std::vector<long long> shelling_h(const Polyomino& p, const FacetList& fl) {
  return h_from_shelling(p, fl);
}

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

HilbertSeries hilbert_series(const Polyomino& p, int terms, const Limits& limits) {
  if (terms < 0) throw InputError("negative term count");
  HilbertSeries hs;
  hs.d = krull_dim(p);
  FacetList fl = facets(p, limits);
  hs.h = shelling_h(p, fl);
  for (int k = 0; k <= terms; ++k) {
    u128 value = 0;
    for (int i = 0; i <= std::min(hs.d, k); ++i) {
      if (hs.h[i] < 0) throw VerificationError("negative h-coefficient");
      value = checked_add(value, checked_mul(static_cast<u128>(hs.h[i]),
                                             binom_u128(hs.d - 1 + k - i, k - i)));
    }
    hs.values.push_back(value);
  }
  return hs;
}

int regularity(const Polyomino& p, const Limits& limits) {
  require_grid(p);
  FVector f = f_vector(p, limits);
  int d = krull_dim(p);
  return static_cast<int>(trim_trailing_zeros(h_from_f(f, d)).size()) - 1;
}

GorensteinResult gorenstein(const Polyomino& p, const Limits& limits) {
  const GridStructure gs = require_grid(p);
  GorensteinResult res;
  res.h = trim_trailing_zeros(h_from_f(f_vector(p, limits), krull_dim(p)));
  std::vector<long long> rev(res.h.rbegin(), res.h.rend());
  res.algebraic = res.h == rev;

  std::vector<int> long_blocks;
  for (Orientation o : {Orientation::Horizontal, Orientation::Vertical})
    for (const Block& b : maximal_blocks(p, o))
      if (b.rank() >= 2) long_blocks.push_back(b.rank());
  res.structural = gs.r() * gs.s() == 1 && long_blocks.size() == 4 &&
                   std::all_of(long_blocks.begin(), long_blocks.end(),
                               [](int r) { return r == 3; });
  return res;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool TheoremReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

bool TheoremReport::any_skipped() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Skipped; });
}

TheoremReport verify_all(const Polyomino& p, const Limits& limits) {
  const auto t0 = std::chrono::steady_clock::now();
  const GridStructure gs = require_grid(p);

  TheoremReport rep;
  rep.instance = gs.spec.name();
  rep.cells = static_cast<int>(p.cells().size());
  rep.m = gs.m;
  rep.n = gs.n;
  rep.r = gs.r();
  rep.s = gs.s();
  rep.rank = p.rank();
  rep.vertex_count = p.vertex_count();
  rep.krull_dim = krull_dim(p);

  auto run = [&](const std::string& name, auto&& body) {
    CheckResult res{name, CheckStatus::Pass, ""};
    try {
      body(res);
    } catch (const SizeGuardExceeded& e) {
      res.status = CheckStatus::Skipped;
      res.details = e.what();
    } catch (const std::exception& e) {
      res.status = CheckStatus::Fail;
      res.details = e.what();
    }
    rep.checks.push_back(std::move(res));
  };

  // shared expensive artifacts; guard failures surface as skipped checks
  std::optional<FacetList> fl;
  std::string facet_guard;
  try {
    fl.emplace(facets(p, limits));
    rep.facet_count = fl->size();
  } catch (const SizeGuardExceeded& e) {
    facet_guard = e.what();
  }
  auto need_facets = [&](CheckResult&) -> const FacetList& {
    if (!fl) throw SizeGuardExceeded(facet_guard);
    return *fl;
  };

  run("krull_dim", [&](CheckResult& res) {
    const FacetList& list = need_facets(res);
    int dim = 0;
    for (std::size_t j = 0; j < list.size(); ++j) dim = std::max(dim, list.facet_size(j));
    const int mn = (gs.m - 1) * (gs.n - 1);
    int wh = 0;
    for (int w : gs.spec.widths)
      for (int h : gs.spec.heights) wh += w * h;
    const int formula = mn - wh;
    res.details = "dim " + std::to_string(dim);
    if (dim != rep.vertex_count - rep.rank || rep.rank != formula)
      throw VerificationError("complex dimension " + std::to_string(dim) +
                              " does not match |V| - rank = " +
                              std::to_string(rep.vertex_count - rep.rank));
  });

  run("height", [&](CheckResult& res) {
    const int height = ideal_height(p);
    res.details = "height " + std::to_string(height);
    if (height != rep.rank || height + rep.krull_dim != rep.vertex_count)
      throw VerificationError("ideal height " + std::to_string(height) +
                              " breaks the rank identity");
  });

  run("koenig_necessary", [&](CheckResult& res) {
    const bool necessary = koenig_necessary(p);
    const bool one_hole = rep.r * rep.s == 1;
    res.details = std::string(necessary ? "|V| >= 2 rank" : "|V| < 2 rank");
    if (necessary != one_hole)
      throw VerificationError("necessary condition disagrees with the hole count");
  });

  run("koenig_equivalence", [&](CheckResult& res) {
    rep.koenig = koenig_type(p);
    const bool one_hole = rep.r * rep.s == 1;
    res.details = to_string(rep.koenig.reason);
    if (rep.koenig.is_koenig != one_hole)
      throw VerificationError("Koenig decision disagrees with the hole count");
    if (rep.koenig.is_koenig) verify_koenig_witness(p, rep.koenig);
  });

  run("purity", [&](CheckResult& res) {
    const FacetList& list = need_facets(res);
    for (std::size_t j = 0; j < list.size(); ++j)
      if (list.facet_size(j) != rep.krull_dim)
        throw PurityViolation("facet " + std::to_string(j) + " has size " +
                              std::to_string(list.facet_size(j)) + ", expected " +
                              std::to_string(rep.krull_dim));
    res.details = std::to_string(list.size()) + " facets of size " +
                  std::to_string(rep.krull_dim);
  });

  run("shelling_intersections", [&](CheckResult& res) {
    const FacetList& list = need_facets(res);
    if (list.face(0) != first_facet(p))
      throw VerificationError("lex-greatest facet differs from the boundary formula");
    ShellingCheck check = verify_shelling_intersections(p, list);
    if (!check.ok) throw IntersectionMismatch(check.violation);
    res.details = "all " + std::to_string(list.size()) + " prefixes verified";
  });

  run("step_shapes", [&](CheckResult& res) {
    const FacetList& list = need_facets(res);
    const auto all = facet_steps(p, list);
    std::size_t total = 0;
    for (std::size_t j = 0; j < list.size(); ++j) {
      Face f = list.face(j);
      for (const auto& s : all[j]) validate_step_shape(p, f, s);
      total += all[j].size();
    }
    res.details = std::to_string(total) + " steps validated";
  });

  run("h_equals_rook", [&](CheckResult& res) {
    const FacetList& list = need_facets(res);
    rep.h = trim_trailing_zeros(shelling_h(p, list));
    rep.rook = rook_polynomial(p, AttackConvention::Block);
    if (rep.h != rep.rook)
      throw VerificationError("h [" + join(rep.h) + "] differs from rook [" + join(rep.rook) +
                              "]");
    const auto h_f = trim_trailing_zeros(h_from_f(f_vector(p, limits), rep.krull_dim));
    if (h_f != rep.h)
      throw VerificationError("h from the f-vector [" + join(h_f) + "] differs from [" +
                              join(rep.h) + "]");
    res.details = "h = rook = [" + join(rep.h) + "]";
  });

  run("regularity", [&](CheckResult& res) {
    rep.regularity = regularity(p, limits);
    const int rook_deg = rook_number(p, AttackConvention::Block);
    res.details = "reg " + std::to_string(rep.regularity);
    if (rep.regularity != rook_deg)
      throw RegularityMismatch("regularity " + std::to_string(rep.regularity) +
                               " differs from rook number " + std::to_string(rook_deg));
  });

  run("gorenstein_equivalence", [&](CheckResult& res) {
    rep.gorenstein = gorenstein(p, limits);
    res.details = rep.gorenstein.algebraic ? "Gorenstein" : "not Gorenstein";
    if (rep.gorenstein.algebraic != rep.gorenstein.structural)
      throw GorensteinMismatch(std::string("palindromic h is ") +
                               (rep.gorenstein.algebraic ? "true" : "false") +
                               " but the block criterion is " +
                               (rep.gorenstein.structural ? "true" : "false"));
  });

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<GridSpec> default_sweep_family(int max_rs, int max_size) {
  if (max_rs < 1 || max_size < 1) throw InputError("sweep bounds must be positive");
  std::vector<GridSpec> specs;
  auto tuples = [&](int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 1);
    while (true) {
      out.push_back(cur);
      int i = len - 1;
      while (i >= 0 && cur[i] == max_size) cur[i--] = 1;
      if (i < 0) break;
      ++cur[i];
    }
    return out;
  };
  for (int r = 1; r <= max_rs; ++r)
    for (int s = 1; s <= max_rs; ++s)
      for (const auto& widths : tuples(r))
        for (const auto& heights : tuples(s)) specs.push_back({widths, heights});
  return specs;
}

std::vector<TheoremReport> sweep(const std::vector<GridSpec>& specs, const Limits& limits) {
  std::vector<TheoremReport> reports;
  reports.reserve(specs.size());
  for (const GridSpec& spec : specs) reports.push_back(verify_all(generate_grid(spec), limits));
  return reports;
}

nlohmann::json report_json(const TheoremReport& report, bool with_timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  nlohmann::json j{{"schema", 1},
                   {"instance", report.instance},
                   {"cells", report.cells},
                   {"m", report.m},
                   {"n", report.n},
                   {"r", report.r},
                   {"s", report.s},
                   {"rank", report.rank},
                   {"vertices", report.vertex_count},
                   {"krull_dim", report.krull_dim},
                   {"facets", report.facet_count},
                   {"h", report.h},
                   {"rook", report.rook},
                   {"regularity", report.regularity},
                   {"koenig",
                    {{"is_koenig", report.koenig.is_koenig},
                     {"reason", to_string(report.koenig.reason)}}},
                   {"gorenstein",
                    {{"algebraic", report.gorenstein.algebraic},
                     {"structural", report.gorenstein.structural}}},
                   {"checks", checks},
                   {"all_passed", report.all_passed()}};
  if (with_timings) j["seconds"] = report.seconds;
  return j;
}

std::string report_text(const TheoremReport& report) {
  std::ostringstream os;
  os << "instance " << report.instance << ": " << report.cells << " cells, rank " << report.rank
     << ", " << report.vertex_count << " vertices, dim " << report.krull_dim << ", "
     << report.facet_count << " facets\n";
  os << "  h    [" << join(report.h) << "]\n";
  os << "  rook [" << join(report.rook) << "]\n";
  for (const CheckResult& c : report.checks) {
    os << "  " << c.name << ": " << to_string(c.status);
    if (!c.details.empty()) os << " (" << c.details << ")";
    os << "\n";
  }
  os << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json sweep_json(const std::vector<TheoremReport>& reports, bool with_timings) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const TheoremReport& r : reports) {
    arr.push_back(report_json(r, with_timings));
    all = all && r.all_passed();
  }
  return {{"schema", 1}, {"count", reports.size()}, {"all_passed", all}, {"reports", arr}};
}

std::string sweep_text(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  bool all = true;
  for (const TheoremReport& r : reports) {
    int failed = 0, skipped = 0;
    for (const CheckResult& c : r.checks) {
      failed += c.status == CheckStatus::Fail;
      skipped += c.status == CheckStatus::Skipped;
    }
    all = all && r.all_passed();
    os << r.instance << ": " << r.facet_count << " facets, h [" << join(r.h) << "], "
       << (r.all_passed() ? "pass" : "FAIL");
    if (failed) os << " (" << failed << " failed)";
    if (skipped) os << " (" << skipped << " skipped)";
    os << "\n";
  }
  os << (all ? "PASS" : "FAIL") << " (" << reports.size() << " instances)\n";
  return os.str();
}

}  // namespace gridpoly
