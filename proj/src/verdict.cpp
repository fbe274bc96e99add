#include "flatlab/verdict.hpp"

namespace flatlab {

namespace {

constexpr std::array<std::pair<StatementId, std::string_view>, kStatementCount> kLabels{{
    {StatementId::EqPara, "eq-para"},
    {StatementId::EqSupBound, "eq-supbound"},
    {StatementId::LemmaNormEquiv, "lemma-norm-equiv"},
    {StatementId::LemmaRs5, "lemma-rs-5"},
    {StatementId::LemmaSegmentSqrtM, "lemma-segment-sqrtM"},
    {StatementId::PropMsCorrelations, "prop-ms-correlations"},
    {StatementId::EqConjugate, "eq-conjugate"},
    {StatementId::ThmL4, "thm-l4"},
    {StatementId::Prop1918, "prop-19-18"},
    {StatementId::ThmMainNonflat, "thm-main-nonflat"},
    {StatementId::PropFlatnessChar, "prop-flatness-char"},
    {StatementId::GaussFormula, "gauss-formula"},
    {StatementId::HoholdtJensenTrend, "hoholdt-jensen-trend"},
    {StatementId::LittlewoodCriterionRatio, "littlewood-criterion-ratio"},
    {StatementId::SelfReciprocal, "self-reciprocal"},
    {StatementId::MontgomeryLower, "montgomery-lower"},
    {StatementId::NewmanByrnesSearch, "newman-byrnes-search"},
    {StatementId::SingerOpen, "singer-open"},
}};

}  // namespace

const std::array<StatementId, kStatementCount>& all_statements() {
  static const auto ids = [] {
    std::array<StatementId, kStatementCount> out{};
    for (std::size_t i = 0; i < kStatementCount; ++i) out[i] = kLabels[i].first;
    return out;
  }();
  return ids;
}

std::string_view to_string(StatementId id) {
  for (const auto& [s, label] : kLabels)
    if (s == id) return label;
  return "unknown";
}

std::optional<StatementId> parse_statement_id(std::string_view label) {
  for (const auto& [s, l] : kLabels)
    if (l == label) return s;
  return std::nullopt;
}

void VerdictReport::note(std::string_view text) {
  if (!notes.empty()) notes += "; ";
  notes += text;
}

}  // namespace flatlab
