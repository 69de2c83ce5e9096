// knotfiber command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotfiber/braid.hpp"
#include "knotfiber/diagram.hpp"
#include "knotfiber/fibering.hpp"
#include "knotfiber/invariants.hpp"
#include "knotfiber/presentation.hpp"
#include "knotfiber/verify.hpp"

using namespace knotfiber;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::optional<std::string> braid;
  int strands = 0;
  std::string pd;
};

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("--braid", s.braid, "braid word, e.g. \"s1 s2^-1\"");
  cmd->add_option("--strands", s.strands, "strand count of --braid");
  cmd->add_option("--pd", s.pd, "PD file");
}

BraidWord source_braid(const Source& s) {
  if (!s.braid) throw UsageError("--braid is required");
  if (s.strands < 1) throw UsageError("--strands must be given and positive");
  return parse_braid(*s.braid, s.strands);
}

LinkDiagram source_diagram(const Source& s) {
  if (s.braid && !s.pd.empty()) throw UsageError("give either --braid or --pd, not both");
  if (!s.pd.empty()) return load_pd(s.pd);
  return braid_closure_diagram(source_braid(s));
}

// "k=1,m=0"
std::map<std::string, int> parse_weights(const std::string& text) {
  std::map<std::string, int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad weight '" + item + "', expected label=int");
    try {
      std::size_t used = 0;
      out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw UsageError("bad weight '" + item + "', expected label=int");
    }
    pos = comma + 1;
  }
  return out;
}

void emit_diagram(const LinkDiagram& d, const std::string& out) {
  const std::string summary = "components " + std::to_string(d.num_components()) + ", crossings " +
                              std::to_string(d.num_crossings());
  if (out.empty()) {
    std::cout << format_pd(d);
    std::cerr << summary << '\n';
    return;
  }
  save_pd(d, out);
  std::cout << "wrote " << out << ": " << summary;
  for (std::size_t a = 0; a < d.num_components(); ++a)
    for (std::size_t b = a + 1; b < d.num_components(); ++b)
      std::cout << ", lk(" << d.components()[a].label << "," << d.components()[b].label
                << ") = " << linking_number(d, d.components()[a].label, d.components()[b].label);
  std::cout << '\n';
}

LinkDiagram apply_edits(LinkDiagram d, const std::vector<std::string>& relabels,
                        const std::vector<std::string>& reversals) {
  for (const auto& r : relabels) {
    const auto eq = r.find('=');
    if (eq == std::string::npos) throw UsageError("bad --relabel '" + r + "', expected from=to");
    d = relabel_component(d, r.substr(0, eq), r.substr(eq + 1));
  }
  for (const auto& label : reversals) d = reverse_component(d, label);
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satellite-knot fibering engine"};
  app.require_subcommand(1);

  // invariant
  auto* inv = app.add_subcommand("invariant", "compute an invariant of a braid closure or PD diagram");
  std::string kind;
  Source inv_src;
  std::string weights;
  int column = -1;
  bool serial = false, show_presentation = false;
  inv->add_option("kind", kind, "alexander | homfly | mfw")->required()->check(
      CLI::IsMember({"alexander", "homfly", "mfw"}));
  add_source(inv, inv_src);
  inv->add_option("--weights", weights, "per-component weights for alexander, e.g. k=1,m=0");
  inv->add_option("--column", column, "generator column to delete (0-based)");
  inv->add_flag("--serial", serial, "use the serial reference kernels");
  inv->add_flag("--presentation", show_presentation, "print the Wirtinger presentation first");

  // construct
  auto* con = app.add_subcommand("construct", "build a diagram and write it as PD");
  std::string what, out, axes_text, family_name, encircle_text, pattern_kind = "closed-braid";
  Source con_src;
  int param = 0;
  std::vector<std::string> relabels, reversals;
  con->add_option("what", what, "closure | encircle | pattern-link | family")->required()->check(
      CLI::IsMember({"closure", "encircle", "pattern-link", "family"}));
  add_source(con, con_src);
  con->add_option("--axes", axes_text, "axis orientations for encircle, e.g. +,-");
  con->add_option("--name", family_name, "family: beta | morton");
  con->add_option("--param", param, "family parameter");
  con->add_option("--encircle", encircle_text, "family: encircle with these axes");
  con->add_option("--kind", pattern_kind, "pattern-link from a braid: closed-braid | unknot-axis")
      ->check(CLI::IsMember({"closed-braid", "unknot-axis"}));
  con->add_option("--relabel", relabels, "rename a component, from=to (repeatable)");
  con->add_option("--reverse", reversals, "reverse a component after relabeling (repeatable)");
  con->add_option("-o,--out", out, "output PD path (default: stdout)");

  // fiber
  auto* fib = app.add_subcommand("fiber", "run the pattern fibering check");
  Source fib_src;
  std::string fib_kind = "closed-braid", companion;
  fib->add_option("--kind", fib_kind, "closed-braid | unknot-axis (braid input)")
      ->check(CLI::IsMember({"closed-braid", "unknot-axis"}));
  add_source(fib, fib_src);
  fib->add_option("--companion", companion, "companion status; prints the satellite verdict")
      ->check(CLI::IsMember({"Fibered", "NotFibered", "Unknown"}));

  // separate
  auto* sep = app.add_subcommand("separate", "try to prove two braids non-conjugate");
  std::string sep_a, sep_b;
  int sep_strands = 0, search_len = -1;
  sep->add_option("a", sep_a)->required();
  sep->add_option("b", sep_b)->required();
  sep->add_option("--strands", sep_strands)->required();
  sep->add_option("--search", search_len, "also search conjugators up to this length");

  // verify
  auto* ver = app.add_subcommand("verify", "run the acceptance checks");
  std::string check_name;
  bool calibrate_flag = false, freeze_flag = false, no_timing = false;
  ver->add_option("--check", check_name, "run one named check");
  ver->add_flag("--calibrate", calibrate_flag, "pin the HOMFLY convention with the recursion gate");
  ver->add_flag("--freeze", freeze_flag, "recompute and freeze the derived expected values");
  ver->add_flag("--no-timing", no_timing, "omit elapsed times for byte-stable reports");
  ver->add_flag("--list", [](std::int64_t) {
    for (const auto& c : check_registry()) std::cout << c.name << '\n';
    std::exit(kExitOk);
  }, "list check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const fs::path dir = fixtures_dir();
  try {
    if (ver->parsed() && calibrate_flag) {
      const Calibration c = calibrate(dir);
      for (const auto& l : c.direct.lines) std::cout << "direct:   " << l << '\n';
      for (const auto& l : c.mirrored.lines) std::cout << "mirrored: " << l << '\n';
      if (!c.pinned) {
        std::cout << "calibration failed: " << (c.direct.passes ? "both" : "neither")
                  << " setting satisfies the recursion\n";
        return kExitFailed;
      }
      save_convention(dir, *c.pinned);
      std::cout << "pinned mirror = " << (c.pinned->mirror ? "true" : "false") << '\n';
      return kExitOk;
    }

    const Convention conv = require_convention(dir);

    if (ver->parsed()) {
      if (freeze_flag) {
        for (const auto& [k, v] : freeze_expected(dir)) std::cout << k << " = " << v << '\n';
        return kExitOk;
      }
      const VerifyContext ctx = make_context(dir);
      RunReport report;
      report.command = "verify" + (check_name.empty() ? std::string(" --all") : " --check " + check_name);
      if (!check_name.empty()) {
        const CheckEntry* spec = find_check(check_name);
        if (!spec) {
          std::cerr << "unknown check '" << check_name << "'; see verify --list\n";
          return kExitUsage;
        }
        report.records.push_back(run_check(*spec, ctx));
      } else {
        for (const auto& spec : check_registry()) report.records.push_back(run_check(spec, ctx));
      }
      std::cout << format_report(report, !no_timing);
      return report.passed() ? kExitOk : kExitFailed;
    }

    if (inv->parsed()) {
      const LinkDiagram d = source_diagram(inv_src);
      if (kind == "alexander") {
        WirtingerData w = wirtinger(d);
        w = weights.empty() ? all_ones(std::move(w)) : assign_weights(std::move(w), parse_weights(weights));
        if (show_presentation) std::cout << format_presentation(w);
        AlexanderOptions o;
        o.deleted_column = column;
        const LaurentPoly a = serial ? alexander_poly_serial(w, column) : alexander_poly(w, o);
        std::cout << to_string(a) << '\n';
      } else {
        HomflyOptions o;
        o.mirror = conv.mirror;
        o.parallel = !serial;
        const LaurentPoly p = serial ? homfly_serial(d, conv.mirror) : homfly(d, o);
        if (kind == "homfly") std::cout << to_string(p) << '\n';
        else std::cout << mfw_bound(p) << '\n';
      }
      return kExitOk;
    }

    if (con->parsed()) {
      LinkDiagram d;
      if (what == "closure") {
        d = braid_closure_diagram(source_braid(con_src));
      } else if (what == "encircle") {
        d = encircle(source_braid(con_src), parse_axes(axes_text.empty() ? "+" : axes_text));
      } else if (what == "family") {
        const auto fam = parse_family(family_name);
        if (!fam) throw UsageError("unknown family '" + family_name + "', expected beta or morton");
        const BraidWord b = family_braid(*fam, param);
        d = encircle_text.empty() ? braid_closure_diagram(b) : encircle(b, parse_axes(encircle_text));
      } else {
        Pattern p;
        if (!con_src.pd.empty()) p = diagram_pattern(load_pd(con_src.pd));
        else if (pattern_kind == "unknot-axis") p = unknot_pattern_from_braid(source_braid(con_src));
        else p = closed_braid_pattern(source_braid(con_src));
        d = pattern_link(p);
      }
      emit_diagram(apply_edits(std::move(d), relabels, reversals), out);
      return kExitOk;
    }

    if (fib->parsed()) {
      Pattern p;
      if (!fib_src.pd.empty()) p = diagram_pattern(load_pd(fib_src.pd));
      else if (fib_kind == "unknot-axis") p = unknot_pattern_from_braid(source_braid(fib_src));
      else p = closed_braid_pattern(source_braid(fib_src));
      const FiberingVerdict v = pattern_fibered_check(p);
      std::cout << format_verdict(v);
      if (!companion.empty()) {
        const FiberStatus c = companion == "Fibered"      ? FiberStatus::Fibered
                              : companion == "NotFibered" ? FiberStatus::NotFibered
                                                          : FiberStatus::Unknown;
        std::cout << "satellite " << to_string(satellite_verdict(c, v.status)) << '\n';
      }
      return kExitOk;
    }

    if (sep->parsed()) {
      const BraidWord a = parse_braid(sep_a, sep_strands);
      const BraidWord b = parse_braid(sep_b, sep_strands);
      const Separation s = conjugacy_separator(a, b);
      if (s.separated)
        std::cout << "separated by " << s.witness << "\n  a: " << s.value_a << "\n  b: " << s.value_b << '\n';
      else
        std::cout << "not separated\n";
      if (search_len >= 0) {
        const auto g = conjugate_search(a, b, search_len);
        std::cout << (g ? "conjugator '" + to_string(*g) + "'" : std::string("no conjugator found")) << '\n';
      }
      return kExitOk;
    }
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
