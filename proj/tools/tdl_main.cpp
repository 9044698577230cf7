// tdl: verification and certificates for Euclidean t-designs on concentric
// spheres. Subcommands: verify, strength, bound, construct, gegenbauer,
// certify, pell. Every command emits a JSON report (stdout or --report).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tdl/constructions.hpp"
#include "tdl/design_io.hpp"
#include "tdl/nonexistence.hpp"
#include "tdl/polyspace.hpp"
#include "tdl/verify.hpp"
#include "tdl/version.hpp"

namespace {

using tdl::io::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // verification / certification says "no"
constexpr int kExitUsage = 2;     // malformed input, bad arguments

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Emitter {
  std::string report_path;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void emit(json report) const {
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);
    report["timing_ms"] = elapsed.count();
    const std::string text = report.dump(2) + "\n";
    if (report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(report_path);
      if (!out) throw UsageError("cannot write report to " + report_path);
      out << text;
    }
  }
};

enum class Backend { kAuto, kRational, kFloat };

Backend parse_backend(const std::string& name) {
  if (name == "auto") return Backend::kAuto;
  if (name == "rational") return Backend::kRational;
  if (name == "float") return Backend::kFloat;
  throw UsageError("unknown backend: " + name);
}

// Runs fn on the backend selected for the loaded design; auto picks rational
// when every input token parsed as a rational.
template <typename Fn>
auto with_backend(const tdl::io::LoadedDesign& design, Backend backend, Fn&& fn) {
  const bool use_exact = backend == Backend::kRational ||
                         (backend == Backend::kAuto && design.all_rational);
  if (use_exact) {
    if (!design.exact)
      throw UsageError("rational backend requested but the file has non-rational entries");
    return fn(*design.exact);
  }
  return fn(design.approx);
}

json strength_payload(const tdl::DesignReport& full, int strength) {
  json out = tdl::io::to_json(full);
  out["strength"] = strength;
  return out;
}

int cmd_verify(const std::string& path, unsigned degree, double tolerance,
               const std::string& backend_name, bool strength_mode, unsigned t_max,
               const Emitter& emitter) {
  const Backend backend = parse_backend(backend_name);
  const auto design = tdl::io::load_design_file(path, tolerance);

  json inputs{{"design", path},
              {"tolerance", tolerance},
              {"backend", backend_name}};
  if (strength_mode)
    inputs["max_degree"] = t_max;
  else
    inputs["degree"] = degree;

  if (strength_mode) {
    auto [payload, pass] = with_backend(design, backend, [&](const auto& cfg) {
      const auto full = tdl::design_residuals(cfg, t_max, tolerance);
      int strength = static_cast<int>(t_max);
      for (const auto& d : full.per_degree) {
        if (!d.pass) {
          strength = static_cast<int>(d.degree) - 1;
          break;
        }
      }
      return std::make_pair(strength_payload(full, strength), strength >= 0);
    });
    emitter.emit(tdl::io::report_envelope("strength", inputs, payload));
    return pass ? kExitOk : kExitNegative;
  }

  auto [payload, pass] = with_backend(design, backend, [&](const auto& cfg) {
    const auto report = tdl::classify_tightness(cfg, degree, tolerance);
    return std::make_pair(tdl::io::to_json(report), report.design.pass);
  });
  emitter.emit(tdl::io::report_envelope("verify", inputs, payload));
  return pass ? kExitOk : kExitNegative;
}

int cmd_bound(unsigned dim, unsigned shells, unsigned degree, bool with_origin,
              const Emitter& emitter) {
  const mpz_class bound = tdl::moeller_bound(dim, shells, degree, with_origin);
  json inputs{{"dim", dim}, {"shells", shells}, {"degree", degree}, {"with_origin", with_origin}};
  json result{{"bound", bound.get_str()},
              {"dim_P_star_e_S", tdl::dim_P_star_e_S(dim, shells, degree / 2).get_str()},
              {"dim_P_e_S", tdl::dim_P_e_S(dim, shells, degree / 2).get_str()}};
  emitter.emit(tdl::io::report_envelope("bound", inputs, result));
  std::cerr << bound.get_str() << "\n";
  return kExitOk;
}

int cmd_construct(const std::string& kind, double r1, double r2, double w1, unsigned m, double r,
                  double w, unsigned dim, const std::string& out_path, const Emitter& emitter) {
  json design;
  json meta{{"name", kind}, {"source", "tdl construct"}};
  if (kind == "octagons") {
    design = tdl::io::design_to_json(tdl::two_octagons(r1, r2, w1), meta);
  } else if (kind == "polygon") {
    design = tdl::io::design_to_json(tdl::regular_polygon(m, r, w), meta);
  } else if (kind == "cross-polytope") {
    auto rq = tdl::parse_rational(tdl::format_double(r));
    auto wq = tdl::parse_rational(tdl::format_double(w));
    if (!rq || !wq)
      throw UsageError("cross-polytope radius and weight must be integers (exact backend)");
    design = tdl::io::design_to_json(tdl::cross_polytope(dim, *rq, *wq), meta);
  } else if (kind == "e8") {
    design = tdl::io::design_to_json(tdl::e8_roots(), meta);
  } else {
    throw UsageError("unknown construction kind: " + kind);
  }

  const std::string text = design.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write design to " + out_path);
    out << text;
    json inputs{{"kind", kind}, {"out", out_path}};
    json result{{"points", design["points"].size()}, {"dimension", design["dimension"]}};
    emitter.emit(tdl::io::report_envelope("construct", inputs, result));
  }
  return kExitOk;
}

int cmd_gegenbauer(unsigned dim, unsigned degree, const std::string& eval_at,
                   const Emitter& emitter) {
  const auto poly = tdl::gegenbauer(dim, degree);
  json inputs{{"dim", dim}, {"degree", degree}};
  json result{{"polynomial", poly.str()}};
  json coeffs = json::array();
  for (const auto& c : poly.coefficients()) coeffs.push_back(tdl::format_rational(c));
  result["coefficients"] = std::move(coeffs);
  if (!eval_at.empty()) {
    inputs["eval"] = eval_at;
    auto x = tdl::parse_rational(eval_at);
    if (!x) {
      auto d = tdl::parse_double(eval_at);
      if (!d) throw UsageError("cannot parse --eval value");
      // Exact evaluation at the rational represented by the decimal literal.
      x = mpq_class(*d);
    }
    result["value"] = tdl::format_rational(poly(*x));
  }
  emitter.emit(tdl::io::report_envelope("gegenbauer", inputs, result));
  return kExitOk;
}

int cmd_certify(long from, long to, unsigned jobs, const Emitter& emitter) {
  if (from < 3 || from > to) throw UsageError("certify requires 3 <= from <= to");
  if (const char* env = std::getenv("TDL_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) jobs = static_cast<unsigned>(v);
  }
  const auto cert = tdl::nonexistence::certify_range(from, to, jobs);
  json inputs{{"from", from}, {"to", to}};
  emitter.emit(tdl::io::report_envelope("certify", inputs, tdl::io::to_json(cert)));

  std::cerr << "verdict: " << (cert.excluded ? "excluded" : "counterexample candidate") << "\n";
  std::cerr << "admissible:";
  for (const auto& n : cert.admissible) std::cerr << " " << n.get_str();
  std::cerr << "\n";
  for (const auto& rep : cert.detailed_case1)
    std::cerr << "n=" << rep.n.get_str() << " case I step: " << rep.step << "\n";
  return cert.excluded ? kExitOk : kExitNegative;
}

int cmd_pell(long n, long from, long to, const Emitter& emitter) {
  json inputs, result;
  if (n >= 2) {
    inputs["n"] = n;
    const auto pell = tdl::nonexistence::pell_admissible(n);
    result["square"] = pell.has_value();
    if (pell) {
      result["k"] = pell->k.get_str();
      result["k_even"] = pell->k_even;
    }
  } else {
    if (from < 3 || from > to) throw UsageError("pell requires 3 <= from <= to");
    inputs["from"] = from;
    inputs["to"] = to;
    const auto scan = tdl::nonexistence::enumerate_admissible(from, to);
    const auto recur = tdl::nonexistence::enumerate_admissible_pell(from, to);
    json a = json::array(), b = json::array();
    for (const auto& v : scan) a.push_back(v.get_str());
    for (const auto& v : recur) b.push_back(v.get_str());
    result["admissible"] = a;
    result["via_recurrence"] = b;
    result["routes_agree"] = (scan == recur);
  }
  emitter.emit(tdl::io::report_envelope("pell", inputs, result));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean t-design verification and tight 9-design certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --report appear after the subcommand
  app.set_version_flag("--version", std::string(tdl::kEngineVersion));

  Emitter emitter;
  app.add_option("--report", emitter.report_path, "Write the JSON report to this path")
      ->capture_default_str();

  std::string design_path, backend = "auto", eval_at, out_path, kind;
  unsigned degree = 9, t_max = 12, dim = 2, shells = 2, m = 8;
  double tolerance = tdl::kDefaultTolerance;
  double r1 = 1, r2 = 2, w1 = 1, r = 1, w = 1;
  bool with_origin = false;
  long from = 3, to = 300000, pell_n = 0;
  unsigned jobs = 1;

  auto* verify = app.add_subcommand("verify", "Check the design identity up to a degree");
  verify->add_option("design", design_path, "Design JSON file")->required();
  verify->add_option("--degree", degree, "Strength to verify")->capture_default_str();
  verify->add_option("--tolerance", tolerance, "Float backend tolerance")->capture_default_str();
  verify->add_option("--backend", backend, "auto|rational|float")->capture_default_str();

  auto* strength = app.add_subcommand("strength", "Find the largest degree that passes");
  strength->add_option("design", design_path, "Design JSON file")->required();
  strength->add_option("--max", t_max, "Largest degree to try")->capture_default_str();
  strength->add_option("--tolerance", tolerance, "Float backend tolerance")->capture_default_str();
  strength->add_option("--backend", backend, "auto|rational|float")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "Moeller lower bound for a t-design on p spheres");
  bound->add_option("--dim", dim, "Ambient dimension n")->required();
  bound->add_option("--shells", shells, "Number of spheres p")->required();
  bound->add_option("--degree", degree, "Design strength t")->required();
  bound->add_flag("--with-origin", with_origin, "Count the origin as a design point");

  auto* construct = app.add_subcommand("construct", "Emit a named design as JSON");
  construct->add_option("kind", kind, "octagons|polygon|cross-polytope|e8")->required();
  construct->add_option("--r1", r1, "First octagon radius")->capture_default_str();
  construct->add_option("--r2", r2, "Second octagon radius")->capture_default_str();
  construct->add_option("--w1", w1, "Weight on the first octagon")->capture_default_str();
  construct->add_option("--m", m, "Polygon vertex count")->capture_default_str();
  construct->add_option("--r", r, "Radius")->capture_default_str();
  construct->add_option("--w", w, "Weight")->capture_default_str();
  construct->add_option("--dim", dim, "Cross-polytope dimension")->capture_default_str();
  construct->add_option("--out", out_path, "Write the design here instead of stdout");

  auto* gegen = app.add_subcommand("gegenbauer", "Print Q_{l,n-1}");
  gegen->add_option("--dim", dim, "Ambient dimension n")->required();
  gegen->add_option("--degree", degree, "Degree l")->required();
  gegen->add_option("--eval", eval_at, "Evaluate at this rational");

  auto* certify = app.add_subcommand("certify", "Per-dimension nonexistence certificates");
  certify->add_option("--from", from, "First dimension")->capture_default_str();
  certify->add_option("--to", to, "Last dimension")->capture_default_str();
  certify->add_option("--jobs", jobs, "Worker threads (TDL_JOBS overrides)")
      ->capture_default_str();

  auto* pell = app.add_subcommand("pell", "Pell admissibility: 6(n+1)(n+2) = 36k^2, k even");
  pell->add_option("--n", pell_n, "Test a single dimension");
  pell->add_option("--from", from, "Scan start")->capture_default_str();
  pell->add_option("--to", to, "Scan end")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed())
      return cmd_verify(design_path, degree, tolerance, backend, false, t_max, emitter);
    if (strength->parsed())
      return cmd_verify(design_path, degree, tolerance, backend, true, t_max, emitter);
    if (bound->parsed()) return cmd_bound(dim, shells, degree, with_origin, emitter);
    if (construct->parsed())
      return cmd_construct(kind, r1, r2, w1, m, r, w, dim, out_path, emitter);
    if (gegen->parsed()) return cmd_gegenbauer(dim, degree, eval_at, emitter);
    if (certify->parsed()) return cmd_certify(from, to, jobs, emitter);
    if (pell->parsed()) return cmd_pell(pell_n, from, to, emitter);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tdl::io::DesignParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
