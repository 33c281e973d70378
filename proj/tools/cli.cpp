#include "cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "fpa/automorphism.hpp"
#include "fpa/derivation.hpp"
#include "fpa/errors.hpp"
#include "fpa/serialize.hpp"
#include "fpa/suites.hpp"
#include "fpa/text.hpp"
#include "fpa/triangulation.hpp"

namespace fpa::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Options {
  int n = 2;
  bool json = false;
  int cap = kDefaultNilpotencyCap;
  std::uint64_t seed = 1;
  int count = -1;
  std::string map;
  std::string der;
  std::string suite;
  std::string weight;
  std::string f;
  std::string g;
};

std::vector<int> parse_weight(const std::string& text, int n) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("weight entries must be integers: " + text);
    }
  }
  if (static_cast<int>(w.size()) != n) throw UsageError("weight needs " + std::to_string(n) + " entries");
  return w;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string factors_text(const TameDecomposition& phi) {
  if (phi.factors().empty()) return "identity";
  std::string out;
  for (std::size_t i = 0; i < phi.factors().size(); ++i) out += (i ? " o " : "") + phi.factors()[i].to_string();
  return out;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const PoissonPoly f = parse_expr(o.f, o.n);
  if (o.json) {
    out << to_json(f).dump() << "\n";
  } else {
    out << format_expr(f) << "\n";
  }
  return kOk;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  const PoissonPoly f = poisson_bracket(parse_expr(o.f, o.n), parse_expr(o.g, o.n));
  if (o.json) {
    out << to_json(f).dump() << "\n";
  } else {
    out << format_expr(f) << "\n";
  }
  return kOk;
}

int cmd_degrees(const Options& o, std::ostream& out) {
  const PoissonPoly f = parse_expr(o.f, o.n);
  std::optional<std::vector<int>> w;
  if (!o.weight.empty()) w = parse_weight(o.weight, o.n);
  const DegreeReport r = degrees(f, o.n, w);
  if (o.json) {
    out << to_json(r).dump() << "\n";
    return kOk;
  }
  out << "deg " << r.deg << "\n";
  out << "deg_x " << join(r.deg_x, " ") << "\n";
  out << "pdeg " << r.pdeg << "\n";
  out << "mdeg " << (r.mdeg ? "(" + join(*r.mdeg, ",") + ")" : "none") << "\n";
  if (r.wdeg) out << "wdeg " << *r.wdeg << "\n";
  return kOk;
}

Derivation require_der(const Options& o) {
  if (o.der.empty()) throw UsageError("--der is required");
  return parse_derivation(o.der, o.n);
}

int cmd_derive(const Options& o, std::ostream& out) {
  const Derivation d = require_der(o);
  const PoissonPoly f = apply(d, parse_expr(o.f, o.n));
  if (o.json) {
    out << to_json(f).dump() << "\n";
  } else {
    out << format_expr(f) << "\n";
  }
  return kOk;
}

int cmd_nilpotent(const Options& o, std::ostream& out) {
  const NilpotencyVerdict v = nilpotency_check(require_der(o), o.cap);
  if (o.json) {
    out << to_json(v).dump() << "\n";
  } else if (v.nilpotent()) {
    out << "nilpotent, bounds " << join(v.bounds, " ") << "\n";
  } else {
    out << "exceeded cap " << v.cap << "\n";
  }
  return v.nilpotent() ? kOk : kNegative;
}

Endomorphism require_map(const Options& o) {
  if (o.map.empty()) throw UsageError("--map is required");
  return parse_endomorphism(o.map, o.n);
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Endomorphism theta = require_map(o);
  try {
    const TameDecomposition phi = is_automorphism(theta);
    if (o.json) {
      out << Json{{"automorphism", true}, {"factors", to_json(phi)}, {"verified", phi.verified()}}.dump() << "\n";
    } else {
      out << factors_text(phi) << "\n";
    }
    return kOk;
  } catch (const NotAutomorphism& e) {
    if (o.json) {
      out << Json{{"automorphism", false}, {"reason", e.reason_code()}, {"detail", e.what()}}.dump() << "\n";
    } else {
      out << "not an automorphism: " << e.reason_code() << "\n";
    }
    return kNegative;
  }
}

int cmd_triangulate(const Options& o, std::ostream& out) {
  const TriangulationResult r = triangulate(require_der(o), o.cap);
  if (o.json) {
    out << to_json(r).dump() << "\n";
  } else {
    out << "phi: " << factors_text(r.phi) << "\n";
    out << "f: " << r.f.to_string("x2") << "\n";
    out << "verified: " << (r.verified ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_multiplier(const Options& o, std::ostream& out) {
  const auto alpha = bracket_multiplier(require_map(o));
  if (o.json) {
    out << (alpha ? Json{{"multiplier", alpha->get_str()}} : Json{{"multiplier", nullptr}}).dump() << "\n";
  } else {
    out << (alpha ? alpha->get_str() : std::string("not proportional")) << "\n";
  }
  return alpha ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.suite.empty()) throw UsageError("--suite is required");
  const int count = o.count >= 0 ? o.count : default_count(o.suite);
  const SuiteReport r = run_suite(o.suite, o.seed, count);
  if (o.json) {
    out << Json{{"suite", r.name}, {"passed", r.passed}, {"total", r.total}, {"failures", r.failures}}.dump() << "\n";
  } else {
    out << r.summary() << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
  return r.ok() ? kOk : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in free Poisson algebras", "fpa"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--n", o.n, "number of generators")->check(CLI::Range(1, 64));
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--cap", o.cap, "nilpotency iteration cap")->check(CLI::Range(1, 100000));
  app.add_option("--seed", o.seed, "suite seed");
  app.add_option("--count", o.count, "suite case count")->check(CLI::NonNegativeNumber);

  auto* eval = app.add_subcommand("eval", "print the canonical form of an expression");
  eval->add_option("expr", o.f)->required();
  auto* bracket = app.add_subcommand("bracket", "Poisson bracket {f,g}");
  bracket->add_option("f", o.f)->required();
  bracket->add_option("g", o.g)->required();
  auto* degs = app.add_subcommand("degrees", "deg, deg_xi, pdeg, mdeg and wdeg of an element");
  degs->add_option("expr", o.f)->required();
  degs->add_option("--weight", o.weight, "weight vector, e.g. 1,-1");
  auto* derive = app.add_subcommand("derive", "apply a derivation to an element");
  derive->add_option("--der", o.der, "images \"f1 ; f2\"")->required();
  derive->add_option("expr", o.f)->required();
  auto* nil = app.add_subcommand("nilpotent", "certify local nilpotency within --cap steps");
  nil->add_option("--der", o.der)->required();
  auto* dec = app.add_subcommand("decompose", "decide automorphy and decompose into tame factors (n = 2)");
  dec->add_option("--map", o.map, "\"x1 -> e1; x2 -> e2\"")->required();
  auto* tri = app.add_subcommand("triangulate", "conjugate a locally nilpotent derivation to f(x2) d/dx1 (n = 2)");
  tri->add_option("--der", o.der)->required();
  auto* mult = app.add_subcommand("multiplier", "alpha with theta{x1,x2} = alpha {x1,x2}");
  mult->add_option("--map", o.map)->required();
  auto* ver = app.add_subcommand("verify", "run a seeded property suite");
  ver->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*bracket) return cmd_bracket(o, out);
    if (*degs) return cmd_degrees(o, out);
    if (*derive) return cmd_derive(o, out);
    if (*nil) return cmd_nilpotent(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*tri) return cmd_triangulate(o, out);
    if (*mult) return cmd_multiplier(o, out);
    if (*ver) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const MathNegative& e) {
    if (o.json) {
      out << Json{{"negative", true}, {"detail", e.what()}}.dump() << "\n";
    } else {
      out << e.what() << "\n";
    }
    return kNegative;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace fpa::cli
