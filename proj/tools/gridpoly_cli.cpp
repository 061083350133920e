#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gridpoly/bijection.hpp"
#include "gridpoly/complex.hpp"
#include "gridpoly/ideal.hpp"
#include "gridpoly/polyomino.hpp"
#include "gridpoly/rook.hpp"
#include "gridpoly/shelling.hpp"
#include "gridpoly/verify.hpp"

namespace {

using namespace gridpoly;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Polyomino load(const std::string& path) { return parse_any(read_input(path)); }

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

int cmd_validate(const std::string& path) {
  Polyomino p = load(path);
  std::cout << "cells: " << p.cells().size() << "\n";
  std::cout << "vertices: " << p.vertex_count() << "\n";
  std::cout << "rank: " << p.rank() << "\n";
  std::cout << "thin: " << (is_thin(p) ? "yes" : "no") << "\n";
  std::cout << "holes: " << holes(p).size() << "\n";
  GridRecognition rec = recognize_grid(p);
  if (rec.is_grid())
    std::cout << "grid: " << rec.structure->spec.name() << "\n";
  else
    std::cout << "grid: no (" << rec.reason << ")\n";
  return 0;
}

int cmd_generate(const std::vector<int>& widths, const std::vector<int>& heights, bool json) {
  Polyomino p = generate_grid(GridSpec{widths, heights});
  std::cout << (json ? emit_json_text(p) : emit_ascii(p));
  return 0;
}

int cmd_facets(const std::string& path, bool with_steps, const Limits& limits) {
  Polyomino p = load(path);
  FacetList fl = facets(p, limits);
  std::cout << "# " << fl.size() << " facets\n";
  auto steps = with_steps ? facet_steps(p, fl) : std::vector<std::vector<GeneralizedStep>>{};
  for (std::size_t j = 0; j < fl.size(); ++j) {
    Face f = fl.face(j);
    std::cout << j << ":";
    for (Point q : f.points()) std::cout << " " << point_str(q);
    std::cout << "\n";
    if (!with_steps) continue;
    for (const auto& s : steps[j])
      std::cout << "  step " << point_str(s.left) << " " << point_str(s.corner) << " "
                << point_str(s.top) << " " << to_string(validate_step_shape(p, f, s)) << "\n";
  }
  return 0;
}

int cmd_hvector(const std::string& path, const std::string& method, const Limits& limits) {
  Polyomino p = load(path);
  const int d = krull_dim(p);
  std::vector<long long> from_shelling, from_f;
  if (method != "fvector")
    from_shelling = trim_trailing_zeros(h_from_shelling(p, facets(p, limits)));
  if (method != "shelling") from_f = trim_trailing_zeros(h_from_f(f_vector(p, limits), d));
  if (method != "fvector") std::cout << "h[shelling]: " << join(from_shelling) << "\n";
  if (method != "shelling") std::cout << "h[fvector]: " << join(from_f) << "\n";
  if (method == "both") {
    const bool agree = from_shelling == from_f;
    std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
    return agree ? 0 : 1;
  }
  return 0;
}

int cmd_rookpoly(const std::string& path, const std::string& convention) {
  Polyomino p = load(path);
  AttackConvention conv =
      convention == "ambient" ? AttackConvention::Ambient : AttackConvention::Block;
  std::cout << "rook[" << convention << "]: " << join(rook_polynomial(p, conv)) << "\n";
  return 0;
}

int cmd_koenig(const std::string& path) {
  Polyomino p = load(path);
  KoenigDecision dec = koenig_type(p);
  std::cout << "koenig: " << (dec.is_koenig ? "true" : "false") << " ("
            << to_string(dec.reason) << ")\n";
  for (const auto& entry : dec.witness) {
    auto [u, v] = entry.support();
    std::cout << "  " << to_string(entry.minor.interval) << " "
              << (entry.initial_is_diagonal ? "diagonal" : "antidiagonal") << " " << point_str(u)
              << " " << point_str(v) << "\n";
  }
  return 0;
}

int cmd_hilbert(const std::string& path, int terms, const Limits& limits) {
  Polyomino p = load(path);
  HilbertSeries hs = hilbert_series(p, terms, limits);
  std::cout << "d: " << hs.d << "\n";
  std::cout << "h: " << join(trim_trailing_zeros(hs.h)) << "\n";
  std::cout << "H:";
  for (const u128& v : hs.values) std::cout << " " << u128_to_string(v);
  std::cout << "\n";
  return 0;
}

int report_exit(const TheoremReport& rep, bool strict) {
  if (!rep.all_passed()) return 1;
  if (strict && rep.any_skipped()) return 1;
  return 0;
}

int cmd_verify(const std::string& path, bool strict, bool timings, const Limits& limits) {
  Polyomino p = load(path);
  TheoremReport rep = verify_all(p, limits);
  std::cout << report_text(rep);
  if (timings) std::cout << "seconds: " << rep.seconds << "\n";
  return report_exit(rep, strict);
}

int cmd_report(const std::string& path, const std::string& format, bool timings,
               const Limits& limits) {
  Polyomino p = load(path);
  TheoremReport rep = verify_all(p, limits);
  if (format == "json")
    std::cout << report_json(rep, timings).dump(2) << "\n";
  else {
    std::cout << report_text(rep);
    if (timings) std::cout << "seconds: " << rep.seconds << "\n";
  }
  return report_exit(rep, false);
}

int cmd_sweep(int max_rs, int max_size, bool json, bool strict, bool timings,
              const Limits& limits) {
  auto reports = sweep(default_sweep_family(max_rs, max_size), limits);
  if (json)
    std::cout << sweep_json(reports, timings).dump(2) << "\n";
  else
    std::cout << sweep_text(reports);
  for (const TheoremReport& r : reports) {
    int code = report_exit(r, strict);
    if (code != 0) return code;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of grid polyominoes"};
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--max-cells", limits.max_cells, "cell count guard")->capture_default_str();
  app.add_option("--max-facets", limits.max_facets, "facet count guard")->capture_default_str();

  std::string path, method = "both", convention = "block", format = "text";
  std::vector<int> widths, heights;
  bool with_steps = false, json_out = false, ascii_out = false, strict = false, timings = false;
  int terms = 8, max_rs = 2, max_size = 3;

  auto* validate = app.add_subcommand("validate", "parse a polyomino and describe it");
  validate->add_option("file", path, "input file, - for stdin")->required();

  auto* generate = app.add_subcommand("generate", "emit a grid polyomino");
  generate->add_option("--widths", widths, "hole column widths")->required()->delimiter(',');
  generate->add_option("--heights", heights, "hole row heights")->required()->delimiter(',');
  auto* gen_ascii = generate->add_flag("--ascii", ascii_out, "ASCII output (default)");
  generate->add_flag("--json", json_out, "JSON output")->excludes(gen_ascii);

  auto* facets_cmd = app.add_subcommand("facets", "enumerate facets in shelling order");
  facets_cmd->add_option("file", path)->required();
  facets_cmd->add_flag("--with-steps", with_steps, "list generalized steps per facet");

  auto* hvector = app.add_subcommand("hvector", "h-polynomial of the complex");
  hvector->add_option("file", path)->required();
  hvector->add_option("--method", method, "shelling|fvector|both")
      ->check(CLI::IsMember({"shelling", "fvector", "both"}))
      ->capture_default_str();

  auto* rookpoly = app.add_subcommand("rookpoly", "rook polynomial of the cells");
  rookpoly->add_option("file", path)->required();
  rookpoly->add_option("--convention", convention, "block|ambient")
      ->check(CLI::IsMember({"block", "ambient"}))
      ->capture_default_str();

  auto* koenig = app.add_subcommand("koenig", "Koenig-type decision with witness");
  koenig->add_option("file", path)->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function values H(0..N)");
  hilbert->add_option("file", path)->required();
  hilbert->add_option("--terms", terms, "largest argument N")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run every theorem check");
  verify->add_option("file", path)->required();
  verify->add_flag("--strict", strict, "treat skipped checks as failures");
  verify->add_flag("--timings", timings, "print elapsed seconds");

  auto* report = app.add_subcommand("report", "theorem report for one instance");
  report->add_option("file", path)->required();
  report->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  report->add_flag("--timings", timings, "include elapsed seconds");

  auto* sweep_cmd = app.add_subcommand("sweep", "verify a family of grid polyominoes");
  sweep_cmd->add_option("--max-rs", max_rs, "largest hole lattice side")->capture_default_str();
  sweep_cmd->add_option("--max-size", max_size, "largest hole width or height")
      ->capture_default_str();
  sweep_cmd->add_flag("--json", json_out, "JSON output");
  sweep_cmd->add_flag("--strict", strict, "treat skipped checks as failures");
  sweep_cmd->add_flag("--timings", timings, "include elapsed seconds");

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(path);
    if (generate->parsed()) return cmd_generate(widths, heights, json_out);
    if (facets_cmd->parsed()) return cmd_facets(path, with_steps, limits);
    if (hvector->parsed()) return cmd_hvector(path, method, limits);
    if (rookpoly->parsed()) return cmd_rookpoly(path, convention);
    if (koenig->parsed()) return cmd_koenig(path);
    if (hilbert->parsed()) return cmd_hilbert(path, terms, limits);
    if (verify->parsed()) return cmd_verify(path, strict, timings, limits);
    if (report->parsed()) return cmd_report(path, format, timings, limits);
    if (sweep_cmd->parsed()) return cmd_sweep(max_rs, max_size, json_out, strict, timings, limits);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
