// Command-line front end for the composition tableau library.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctab/bijection.hpp"
#include "ctab/ct_rectify.hpp"
#include "ctab/errors.hpp"
#include "ctab/filling.hpp"
#include "ctab/polynomials.hpp"
#include "ctab/rssyt_rectify.hpp"
#include "ctab/validate.hpp"
#include "ctab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 64;

struct Options {
  bool json = false;
  std::string input;  // empty or "-" reads stdin
  std::string kind;
  int cells = 1;
  bool trace = false;
  std::string basis;
  std::string parts;
  int vars = 0;
  std::string property;
  int max_cells = 4;
  int max_entry = 4;
  std::string k_range;
  int jobs = 1;
  std::string out;
};

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ctab::ArgumentError("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

// Display-mode diagram with holes highlighted when color is enabled.
std::string diagram(const ctab::Filling& f) {
  std::string text = ctab::render_filling(f, ctab::RenderMode::display);
  if (!use_color()) return text;
  std::string out;
  for (char ch : text) {
    if (ch == '.') {
      out += "\x1b[7m.\x1b[0m";
    } else {
      out += ch;
    }
  }
  return out;
}

void print_filling(const Options& opt, const ctab::Filling& f) {
  if (opt.json) {
    std::cout << ctab::render_filling_json(f) << "\n";
  } else if (!f.empty()) {
    std::cout << ctab::render_filling(f) << "\n";
  }
}

void print_report(const Options& opt, const ctab::ShiftReport& report) {
  if (opt.json) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [col, entries] : report.columns) j[std::to_string(col)] = entries;
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [col, entries] : report.columns) {
    std::cout << "column " << col << ":";
    for (auto e : entries) std::cout << " " << e;
    std::cout << "\n";
  }
}

template <ctab::TableauKind K>
ctab::Tableau<K> load(const Options& opt) {
  return ctab::Tableau<K>(ctab::read_filling(read_input(opt.input)));
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  bool separated = text.find_first_of(", ") != std::string::npos;
  if (!separated) {
    // Compact notation such as "21" for (2,1).
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ctab::ArgumentError("invalid parts '" + text + "'");
      parts.push_back(ch - '0');
    }
    return parts;
  }
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream tin(token);
    int p = 0;
    while (tin >> p) parts.push_back(p);
  }
  if (parts.empty()) throw ctab::ArgumentError("invalid parts '" + text + "'");
  return parts;
}

int cmd_validate(const Options& opt) {
  auto kind = ctab::parse_tableau_kind(opt.kind);
  auto violations = ctab::find_violations(kind, ctab::read_filling(read_input(opt.input)));
  if (violations.empty()) {
    std::cout << "valid " << ctab::to_string(kind) << "\n";
    return kExitOk;
  }
  std::cout << ctab::describe(violations);
  return kExitInvalid;
}

int cmd_rectify(const Options& opt) {
  if (opt.kind == "rssyt") {
    auto t = load<ctab::TableauKind::rssyt>(opt);
    if (opt.trace) {
      for (const auto& frame : ctab::rectify_frames(t, opt.cells)) std::cout << diagram(frame) << "\n\n";
      auto run = ctab::rectify_k(t, opt.cells);
      std::cout << "shifting entries:\n";
      print_report(Options{}, ctab::shifting_entries(run.traces));
      std::cout << "result:\n";
    }
    print_filling(opt, ctab::rectify_k(t, opt.cells).tableau.filling());
    return kExitOk;
  }
  if (opt.kind == "ct") {
    auto u = load<ctab::TableauKind::ct>(opt);
    auto run = ctab::phi_traced(u, opt.cells);
    if (opt.trace) {
      for (const auto& event : run.log) std::cout << "# " << ctab::describe(event) << "\n";
      std::cout << "\n";
      for (const auto& frame : run.frames) std::cout << diagram(frame) << "\n\n";
      std::cout << "result:\n";
    }
    print_filling(opt, run.result.filling());
    return kExitOk;
  }
  throw CLI::ValidationError("--kind", "must be rssyt or ct");
}

int cmd_expand(const Options& opt) {
  auto parts = parse_parts(opt.parts);
  ctab::Polynomial p(opt.vars);
  if (opt.basis == "schur") {
    p = ctab::schur_expand(ctab::PartitionShape(parts), opt.vars);
  } else if (opt.basis == "msym") {
    p = ctab::monomial_sym_expand(ctab::PartitionShape(parts), opt.vars);
  } else {
    p = ctab::monomial_qsym_expand(ctab::CompositionShape(parts), opt.vars);
  }
  std::cout << ctab::render_polynomial(p);
  return kExitOk;
}

int cmd_check_qsym(const Options& opt) {
  auto p = ctab::parse_polynomial(read_input(opt.input));
  bool qsym = ctab::is_quasisymmetric(p);
  bool sym = ctab::is_symmetric(p);
  if (opt.json) {
    std::cout << nlohmann::json{{"quasisymmetric", qsym}, {"symmetric", sym}}.dump() << "\n";
  } else {
    std::cout << "quasisymmetric: " << (qsym ? "yes" : "no") << "\n"
              << "symmetric: " << (sym ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  ctab::Bounds bounds;
  bounds.max_cells = opt.max_cells;
  bounds.max_entry = opt.max_entry;
  if (!opt.k_range.empty()) {
    auto dots = opt.k_range.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--k-range", "expected a..b");
    try {
      bounds.k_min = std::stoi(opt.k_range.substr(0, dots));
      bounds.k_max = std::stoi(opt.k_range.substr(dots + 2));
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--k-range", "expected a..b");
    }
  }
  std::vector<ctab::Property> properties;
  if (opt.property == "all") {
    properties = ctab::all_properties();
  } else {
    properties.push_back(ctab::parse_property(opt.property));
  }

  bool passed = true;
  std::string json_out;
  for (auto property : properties) {
    auto report = ctab::run_verify(property, bounds, opt.jobs);
    passed &= report.passed();
    std::cout << ctab::render_report(report);
    std::cerr << report.property << ": " << report.wall_time.count() << " s\n";
    json_out += ctab::render_report_json(report) + "\n";
  }
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw ctab::ArgumentError("cannot write " + opt.out);
    out << json_out;
  }
  return passed ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition tableau rectification toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Read and write tableaux as JSON");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", opt.input, "Input file (default: stdin)");
  };

  auto* validate = app.add_subcommand("validate", "Check a filling against tableau rules");
  validate->add_option("--kind", opt.kind, "ssyt, rssyt, syt or ct")
      ->required()
      ->check(CLI::IsMember({"ssyt", "rssyt", "syt", "ct"}));
  add_input(validate);

  auto* rho_cmd = app.add_subcommand("rho", "Composition tableau to reverse SSYT");
  add_input(rho_cmd);
  auto* rho_inv_cmd = app.add_subcommand("rho-inv", "Reverse SSYT to composition tableau");
  add_input(rho_inv_cmd);

  auto* rectify = app.add_subcommand("rectify", "Rectify the k largest first-column cells");
  rectify->add_option("--kind", opt.kind, "rssyt or ct")->required()->check(CLI::IsMember({"rssyt", "ct"}));
  rectify->add_option("--cells", opt.cells, "Number of first-column cells")->check(CLI::PositiveNumber);
  rectify->add_flag("--trace", opt.trace, "Print every intermediate diagram");
  add_input(rectify);

  auto* evacuate = app.add_subcommand("evacuate", "Evacuate a reverse SSYT");
  add_input(evacuate);

  auto* eviction = app.add_subcommand("eviction", "Shifting entries by eviction");
  eviction->add_option("--cells", opt.cells, "Number of first-column cells")->check(CLI::PositiveNumber);
  add_input(eviction);

  auto* expand = app.add_subcommand("expand", "Expand a Schur or monomial polynomial");
  expand->add_option("basis", opt.basis, "schur, msym or mqsym")
      ->required()
      ->check(CLI::IsMember({"schur", "msym", "mqsym"}));
  expand->add_option("parts", opt.parts, "Parts, e.g. 2,1 or 21")->required();
  expand->add_option("--vars", opt.vars, "Number of variables")->required()->check(CLI::PositiveNumber);

  auto* check_qsym = app.add_subcommand("check-qsym", "Test a polynomial for (quasi)symmetry");
  add_input(check_qsym);

  auto* verify = app.add_subcommand("verify", "Exhaustively check a property");
  verify->add_option("--property", opt.property, "Property name or 'all'")->required();
  verify->add_option("--max-cells", opt.max_cells)->check(CLI::PositiveNumber);
  verify->add_option("--max-entry", opt.max_entry)->check(CLI::PositiveNumber);
  verify->add_option("--k-range", opt.k_range, "Inclusive range a..b");
  verify->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", opt.out, "Write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(opt);
    if (*rho_cmd) {
      print_filling(opt, ctab::rho(load<ctab::TableauKind::ct>(opt)).filling());
      return kExitOk;
    }
    if (*rho_inv_cmd) {
      print_filling(opt, ctab::rho_inv(load<ctab::TableauKind::rssyt>(opt)).filling());
      return kExitOk;
    }
    if (*rectify) return cmd_rectify(opt);
    if (*evacuate) {
      print_filling(opt, ctab::evacuate(load<ctab::TableauKind::rssyt>(opt)));
      return kExitOk;
    }
    if (*eviction) {
      print_report(opt, ctab::eviction(load<ctab::TableauKind::rssyt>(opt), opt.cells));
      return kExitOk;
    }
    if (*expand) return cmd_expand(opt);
    if (*check_qsym) return cmd_check_qsym(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const ctab::ValidationError& e) {
    std::cout << ctab::describe(e.violations());
    return kExitInvalid;
  } catch (const ctab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ctab::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ctab::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
