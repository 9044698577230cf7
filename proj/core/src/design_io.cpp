#include "tdl/design_io.hpp"

#include <fstream>

#include "tdl/version.hpp"

namespace tdl::io {

namespace {

struct Token {
  std::optional<mpq_class> rational;
  double value = 0;
};

Token parse_number_string(const json& v, const char* what) {
  if (!v.is_string()) throw DesignParseError(std::string(what) + " must be a number string");
  const std::string s = v.get<std::string>();
  Token tok;
  tok.rational = parse_rational(s);
  if (tok.rational) {
    tok.value = tok.rational->get_d();
    return tok;
  }
  auto d = parse_double(s);
  if (!d) throw DesignParseError(std::string(what) + ": cannot parse '" + s + "'");
  tok.value = *d;
  return tok;
}

}  // namespace

LoadedDesign load_design(const json& file, double eps) {
  if (!file.is_object()) throw DesignParseError("design file must be a JSON object");
  if (file.contains("schema") && file["schema"].is_string() &&
      file["schema"].get<std::string>() != kDesignSchema)
    throw DesignParseError("unsupported design schema");
  if (!file.contains("dimension") || !file["dimension"].is_number_integer())
    throw DesignParseError("missing integer field 'dimension'");
  const long dim = file["dimension"].get<long>();
  if (dim < 1) throw DesignParseError("dimension must be positive");
  if (!file.contains("points") || !file["points"].is_array() || file["points"].empty())
    throw DesignParseError("missing non-empty array 'points'");

  LoadedDesign out;
  out.all_rational = true;
  out.approx = WeightedPointSet<double>(static_cast<unsigned>(dim), eps);
  if (file.contains("metadata")) out.metadata = file["metadata"];

  std::vector<std::vector<mpq_class>> qcoords;
  std::vector<mpq_class> qweights;
  for (const auto& pt : file["points"]) {
    if (!pt.is_object() || !pt.contains("coords") || !pt.contains("weight"))
      throw DesignParseError("each point needs 'coords' and 'weight'");
    const auto& coords = pt["coords"];
    if (!coords.is_array() || coords.size() != static_cast<size_t>(dim))
      throw DesignParseError("point arity does not match 'dimension'");

    std::vector<double> dval;
    std::vector<mpq_class> qval;
    for (const auto& c : coords) {
      Token tok = parse_number_string(c, "coordinate");
      dval.push_back(tok.value);
      if (tok.rational && out.all_rational)
        qval.push_back(std::move(*tok.rational));
      else
        out.all_rational = false;
    }
    Token w = parse_number_string(pt["weight"], "weight");
    const bool positive = w.rational ? sgn(*w.rational) > 0 : w.value > 0;
    if (!positive) throw DesignParseError("weights must be positive");
    if (!w.rational) out.all_rational = false;

    try {
      out.approx.add(std::move(dval), w.value);
    } catch (const std::invalid_argument& e) {
      throw DesignParseError(e.what());
    }
    if (out.all_rational) {
      qcoords.push_back(std::move(qval));
      qweights.push_back(std::move(*w.rational));
    }
  }

  if (out.all_rational) {
    WeightedPointSet<mpq_class> exact(static_cast<unsigned>(dim), eps);
    try {
      for (size_t i = 0; i < qcoords.size(); ++i)
        exact.add(std::move(qcoords[i]), std::move(qweights[i]));
    } catch (const std::invalid_argument& e) {
      throw DesignParseError(e.what());
    }
    out.exact = std::move(exact);
  }
  return out;
}

LoadedDesign load_design_file(const std::string& path, double eps) {
  std::ifstream in(path);
  if (!in) throw DesignParseError("cannot open design file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DesignParseError(std::string("invalid JSON: ") + e.what());
  }
  return load_design(j, eps);
}

namespace {

template <typename R>
json design_to_json_impl(const WeightedPointSet<R>& cfg, const json& metadata) {
  json points = json::array();
  for (const auto& pt : cfg.points()) {
    json coords = json::array();
    for (const auto& c : pt.coords) {
      if constexpr (kExactBackend<R>)
        coords.push_back(format_rational(c));
      else
        coords.push_back(format_double(c));
    }
    json entry;
    entry["coords"] = std::move(coords);
    if constexpr (kExactBackend<R>)
      entry["weight"] = format_rational(pt.weight);
    else
      entry["weight"] = format_double(pt.weight);
    points.push_back(std::move(entry));
  }
  json out;
  out["schema"] = kDesignSchema;
  out["dimension"] = cfg.dimension();
  out["points"] = std::move(points);
  if (!metadata.is_null()) out["metadata"] = metadata;
  return out;
}

std::string mpz_str(const mpz_class& z) { return z.get_str(); }

}  // namespace

json design_to_json(const WeightedPointSet<mpq_class>& cfg, const json& metadata) {
  return design_to_json_impl(cfg, metadata);
}

json design_to_json(const WeightedPointSet<double>& cfg, const json& metadata) {
  return design_to_json_impl(cfg, metadata);
}

json to_json(const DesignReport& report) {
  json per_degree = json::array();
  for (const auto& d : report.per_degree) {
    per_degree.push_back({{"degree", d.degree},
                          {"max_residual", d.max_residual},
                          {"worst_monomial", d.worst_monomial},
                          {"pass", d.pass}});
  }
  return json{{"degree", report.degree},
              {"pass", report.pass},
              {"max_residual", report.max_residual},
              {"worst_monomial", report.worst_monomial},
              {"backend", report.exact ? "rational" : "float"},
              {"tolerance", report.tolerance},
              {"per_degree", std::move(per_degree)}};
}

json to_json(const TightnessReport& report) {
  const char* kind = report.kind == Tightness::kTightDesign
                         ? "tight design"
                         : (report.kind == Tightness::kDesign ? "design" : "not a design");
  json out{{"classification", kind},
           {"shells", report.p},
           {"origin_in_x", report.origin_in_x},
           {"size", mpz_str(report.size)},
           {"moeller_bound", mpz_str(report.bound)}};
  out["design"] = to_json(report.design);
  return out;
}

json to_json(const nonexistence::IntegralityScan& scan) {
  json sols = json::array();
  for (const auto& s : scan.solutions) sols.push_back(mpz_str(s));
  return json{{"m", mpz_str(scan.m)},
              {"degenerate_linear", scan.degenerate_linear},
              {"quadratic", {mpz_str(scan.quad[0]), mpz_str(scan.quad[1]), mpz_str(scan.quad[2])}},
              {"discriminant_square", scan.disc_square},
              {"solutions", std::move(sols)}};
}

json to_json(const nonexistence::CaseIReport& report) {
  json out{{"n", mpz_str(report.n)},
           {"design_size", mpz_str(report.design_size)},
           {"radicand_square", report.radicand_square},
           {"excluded", report.excluded},
           {"step", report.step}};
  if (report.radicand_square) {
    out["k"] = mpz_str(report.k);
    out["k_even"] = report.k_even;
  }
  if (report.k_even && report.radicand_square) {
    out["N2_range"] = {mpz_str(report.N2_lo), mpz_str(report.N2_hi)};
    out["m_window"] = {report.m_lo, report.m_hi};
    json scans = json::array();
    for (const auto& s : report.scans) scans.push_back(to_json(s));
    out["scans"] = std::move(scans);
    json pairs = json::array();
    for (const auto& p : report.pairs) {
      pairs.push_back({{"N2", mpz_str(p.N2)},
                       {"N1", mpz_str(p.N1)},
                       {"N1_above_tight", p.N1_above_tight},
                       {"N1_integral_F", p.N1_integral_F},
                       {"survives", p.survives}});
    }
    out["pairs"] = std::move(pairs);
  }
  return out;
}

json to_json(const nonexistence::CaseIIReport& report) {
  return json{{"n", mpz_str(report.n)},
              {"N1", mpz_str(report.N1)},
              {"N2", mpz_str(report.N2)},
              {"sqrt_n4_3_integer", report.sqrt_n4_3_integer},
              {"disc_square", report.disc_square},
              {"divisibility_numerator", mpz_str(report.divis_num)},
              {"divisibility_denominator", mpz_str(report.divis_den)},
              {"divisibility_remainder", mpz_str(report.divis_rem)},
              {"quotient_integral", report.quotient_integral},
              {"excluded", report.excluded},
              {"step", report.step}};
}

json to_json(const nonexistence::RangeCertificate& cert) {
  json admissible = json::array();
  for (const auto& n : cert.admissible) admissible.push_back(mpz_str(n));
  json case1 = json::array();
  for (const auto& r : cert.detailed_case1) case1.push_back(to_json(r));
  json case2 = json::array();
  for (const auto& r : cert.detailed_case2) case2.push_back(to_json(r));
  json candidates = json::array();
  for (const auto& n : cert.counterexample_candidates) candidates.push_back(mpz_str(n));

  return json{{"range", {mpz_str(cert.n_lo), mpz_str(cert.n_hi)}},
              {"verdict", cert.excluded ? "excluded" : "counterexample candidate"},
              {"admissible", std::move(admissible)},
              {"case1_reports", std::move(case1)},
              {"case2_reports", std::move(case2)},
              {"case1_step_counts", cert.case1_steps},
              {"case2_step_counts", cert.case2_steps},
              {"counterexample_candidates", std::move(candidates)},
              {"engine_version", cert.engine_version}};
}

json report_envelope(const std::string& command, const json& inputs, const json& result) {
  return json{{"schema", kReportSchema},
              {"engine", {{"name", kEngineName}, {"version", kEngineVersion}}},
              {"command", command},
              {"inputs", inputs},
              {"result", result}};
}

}  // namespace tdl::io
