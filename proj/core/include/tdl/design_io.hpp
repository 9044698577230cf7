#pragma once

#include <optional>
#include <stdexcept>
#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "tdl/configspace.hpp"
#include "tdl/nonexistence.hpp"
#include "tdl/verify.hpp"

namespace tdl::io {

using json = nlohmann::json;

class DesignParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kDesignSchema = "tdl.design.v1";
inline constexpr const char* kReportSchema = "tdl.report.v1";

// A design file holds every coordinate and weight as a number string:
// "p/q" / integer strings parse as exact rationals, decimal or exponent
// strings as doubles. The file is rational iff every string is.
struct LoadedDesign {
  bool all_rational = false;
  std::optional<WeightedPointSet<mpq_class>> exact;  // set iff all_rational
  WeightedPointSet<double> approx{1};
  json metadata;
};

LoadedDesign load_design(const json& file, double eps = kDefaultTolerance);
LoadedDesign load_design_file(const std::string& path, double eps = kDefaultTolerance);

json design_to_json(const WeightedPointSet<mpq_class>& cfg, const json& metadata = {});
json design_to_json(const WeightedPointSet<double>& cfg, const json& metadata = {});

json to_json(const DesignReport& report);
json to_json(const TightnessReport& report);
json to_json(const nonexistence::IntegralityScan& scan);
json to_json(const nonexistence::CaseIReport& report);
json to_json(const nonexistence::CaseIIReport& report);
json to_json(const nonexistence::RangeCertificate& cert);

// Envelope shared by every CLI command: schema, engine, command, inputs echo,
// result payload. `timing_ms` is appended by the CLI and is the one field
// excluded from byte-level determinism.
json report_envelope(const std::string& command, const json& inputs, const json& result);

}  // namespace tdl::io
