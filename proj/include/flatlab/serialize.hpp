#ifndef FLATLAB_SERIALIZE_HPP
#define FLATLAB_SERIALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "flatlab/correlate.hpp"
#include "flatlab/polyfam.hpp"
#include "flatlab/seqgen.hpp"
#include "flatlab/specnorm.hpp"
#include "flatlab/verdict.hpp"

namespace flatlab {

// All writers emit LF line endings and 12 significant digits.

/// "%.12g" rendering; non-finite values become "inf", "-inf" or "nan".
std::string format_decimal(double v);

std::string sequence_csv(const SignSequence& seq);
std::string sequence_json(const SignSequence& seq);

std::string polynomial_csv(const AnalyticPolynomial& poly);
std::string polynomial_json(const AnalyticPolynomial& poly);

std::string norm_profile_json(const NormProfile& profile);

struct NormScanRow {
  std::string family;
  std::int64_t stage_or_p = 0;
  NormProfile profile;
  // "ok", or "accuracy-not-reached" when the profile is the best effort.
  std::string status = "ok";
};
std::string norm_scan_csv(const std::vector<NormScanRow>& rows);
std::string norm_scan_json(const std::vector<NormScanRow>& rows);

std::string correlation_json(const CorrelationProfile& profile);

std::string merit_csv(const std::vector<MeritRow>& rows);
std::string merit_json(const std::vector<MeritRow>& rows);

/// One JSON object per line.
std::string verdict_json_lines(const std::vector<VerdictReport>& reports);
std::string verdict_summary(const std::vector<VerdictReport>& reports);

}  // namespace flatlab

#endif  // FLATLAB_SERIALIZE_HPP
