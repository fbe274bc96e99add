#include "flatlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace flatlab {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON numbers must be finite; non-finite decimals go out as strings.
// Values are rounded to 12 significant digits before emission.
ordered_json number(double v) {
  if (std::isfinite(v)) return ordered_json(std::stod(format_decimal(v)));
  return format_decimal(v);
}

// Repeated keys (one per swept parameter) collect into arrays.
template <class Pairs, class Convert>
ordered_json keyed(const Pairs& pairs, Convert convert) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : pairs) {
    if (!obj.contains(k)) {
      obj[k] = convert(v);
      continue;
    }
    auto& slot = obj[k];
    if (!slot.is_array()) slot = ordered_json::array({slot});
    slot.push_back(convert(v));
  }
  return obj;
}

std::string merit_decimal(const std::optional<mpq_class>& m) {
  return m ? format_decimal(m->get_d()) : "inf";
}

std::string merit_exact(const std::optional<mpq_class>& m) { return m ? to_string(*m) : "inf"; }

ordered_json verdict_object(const VerdictReport& r) {
  ordered_json j;
  j["statement"] = std::string(to_string(r.statement));
  j["inputs"] = keyed(r.inputs, number);
  j["computed"] = keyed(r.computed, number);
  j["exact"] = keyed(r.exact, [](const std::string& v) { return ordered_json(v); });
  j["claimed"] = r.claimed;
  j["passed"] = r.passed;
  j["report_only"] = r.report_only;
  j["tolerance"] = number(r.tolerance);
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string format_decimal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string sequence_csv(const SignSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(seq[i]));
  }
  out += '\n';
  return out;
}

std::string sequence_json(const SignSequence& seq) {
  ordered_json j;
  j["source"] = std::string(to_string(seq.source()));
  j["length"] = seq.length();
  ordered_json values = ordered_json::array();
  for (auto v : seq.values()) values.push_back(static_cast<int>(v));
  j["values"] = values;
  return j.dump() + "\n";
}

std::string polynomial_csv(const AnalyticPolynomial& poly) {
  std::string out = "index,coefficient\n";
  const auto& c = poly.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(c[i]) + "\n";
  return out;
}

std::string polynomial_json(const AnalyticPolynomial& poly) {
  ordered_json j;
  j["family"] = std::string(to_string(poly.family()));
  j["degree"] = poly.degree();
  j["normalization"] = number(poly.normalization());
  j["coefficients"] = poly.coefficients();
  return j.dump() + "\n";
}

std::string norm_profile_json(const NormProfile& p) {
  ordered_json j;
  j["alpha"] = number(p.alpha);
  j["value"] = number(p.value);
  j["grid_size"] = p.grid_size;
  j["estimated_error"] = number(p.estimated_error);
  return j.dump() + "\n";
}

std::string norm_scan_csv(const std::vector<NormScanRow>& rows) {
  std::string out = "family,stage_or_p,alpha,value,error,status\n";
  for (const auto& r : rows) {
    out += r.family + "," + std::to_string(r.stage_or_p) + "," + format_decimal(r.profile.alpha) +
           "," + format_decimal(r.profile.value) + "," +
           format_decimal(r.profile.estimated_error) + "," + r.status + "\n";
  }
  return out;
}

std::string norm_scan_json(const std::vector<NormScanRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    ordered_json j;
    j["family"] = r.family;
    j["stage_or_p"] = r.stage_or_p;
    j["alpha"] = number(r.profile.alpha);
    j["value"] = number(r.profile.value);
    j["grid_size"] = r.profile.grid_size;
    j["estimated_error"] = number(r.profile.estimated_error);
    j["status"] = r.status;
    out += j.dump() + "\n";
  }
  return out;
}

std::string correlation_json(const CorrelationProfile& p) {
  ordered_json j;
  j["length"] = p.length;
  j["c"] = p.c;
  j["energy"] = p.energy;
  j["merit_factor_exact"] = merit_exact(p.merit_factor);
  j["merit_factor"] = merit_decimal(p.merit_factor);
  j["l4_fourth_power"] = p.l4_fourth_power.get_str();
  const auto l4 = p.l4_normalized();
  j["l4_fourth_normalized_exact"] = to_string(l4);
  j["l4_fourth_normalized"] = number(l4.get_d());
  j["used_direct"] = p.used_direct;
  return j.dump() + "\n";
}

std::string merit_csv(const std::vector<MeritRow>& rows) {
  std::string out = "family,N,merit_factor_exact,merit_factor_decimal,l4_fourth_normalized\n";
  for (const auto& r : rows) {
    out += std::string(to_string(r.family)) + "," + std::to_string(r.size) + "," +
           merit_exact(r.merit_factor) + "," + merit_decimal(r.merit_factor) + "," +
           to_string(r.l4_normalized) + "\n";
  }
  return out;
}

std::string merit_json(const std::vector<MeritRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    ordered_json j;
    j["family"] = std::string(to_string(r.family));
    j["N"] = r.size;
    j["length"] = r.length;
    j["merit_factor_exact"] = merit_exact(r.merit_factor);
    j["merit_factor_decimal"] = merit_decimal(r.merit_factor);
    j["l4_fourth_normalized"] = to_string(r.l4_normalized);
    if (r.bounded_by_18) j["bounded_by_18"] = *r.bounded_by_18;
    out += j.dump() + "\n";
  }
  return out;
}

std::string verdict_json_lines(const std::vector<VerdictReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += verdict_object(r).dump() + "\n";
  return out;
}

std::string verdict_summary(const std::vector<VerdictReport>& reports) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %-8s %s\n", "statement", "verdict", "notes");
  os << line;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    const char* verdict = r.report_only ? "REPORT" : (r.passed ? "PASS" : "FAIL");
    if (r.counts_as_failure()) ++failed;
    std::snprintf(line, sizeof line, "%-28s %-8s ", std::string(to_string(r.statement)).c_str(),
                  verdict);
    os << line << r.notes << "\n";
  }
  os << reports.size() << " statements, " << failed << " failed\n";
  return os.str();
}

}  // namespace flatlab
