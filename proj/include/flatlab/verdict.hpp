#ifndef FLATLAB_VERDICT_HPP
#define FLATLAB_VERDICT_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flatlab {

// Ordered: reports are always emitted in this order.
enum class StatementId {
  EqPara,
  EqSupBound,
  LemmaNormEquiv,
  LemmaRs5,
  LemmaSegmentSqrtM,
  PropMsCorrelations,
  EqConjugate,
  ThmL4,
  Prop1918,
  ThmMainNonflat,
  PropFlatnessChar,
  GaussFormula,
  HoholdtJensenTrend,
  LittlewoodCriterionRatio,
  SelfReciprocal,
  MontgomeryLower,
  NewmanByrnesSearch,
  SingerOpen,
};

inline constexpr std::size_t kStatementCount = 18;

const std::array<StatementId, kStatementCount>& all_statements();
std::string_view to_string(StatementId id);
std::optional<StatementId> parse_statement_id(std::string_view label);

/// Outcome of checking one quantitative statement at finite scale.
/// `computed` keeps insertion order so serialized reports are stable;
/// `exact` holds rational quantities rendered as "p/q".
struct VerdictReport {
  StatementId statement;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> computed;
  std::vector<std::pair<std::string, std::string>> exact;
  std::string claimed;
  bool passed = false;
  // Report-only verdicts (open questions) never count as failures.
  bool report_only = false;
  double tolerance = 0.0;
  std::string notes;

  explicit VerdictReport(StatementId id) : statement(id) {}

  VerdictReport& input(std::string name, double value) {
    inputs.emplace_back(std::move(name), value);
    return *this;
  }
  VerdictReport& value(std::string name, double v) {
    computed.emplace_back(std::move(name), v);
    return *this;
  }
  VerdictReport& rational(std::string name, std::string v) {
    exact.emplace_back(std::move(name), std::move(v));
    return *this;
  }
  void note(std::string_view text);

  bool counts_as_failure() const { return !report_only && !passed; }
};

}  // namespace flatlab

#endif  // FLATLAB_VERDICT_HPP
