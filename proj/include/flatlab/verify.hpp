#ifndef FLATLAB_VERIFY_HPP
#define FLATLAB_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "flatlab/polyfam.hpp"
#include "flatlab/specnorm.hpp"
#include "flatlab/verdict.hpp"

namespace flatlab {

/// Scales for every check. `standard()` is the shipped configuration;
/// `quick()` shrinks every scale for unit tests.
struct VerifyConfig {
  double tolerance = 1e-7;

  unsigned parallelogram_max_stage = 14;
  std::size_t parallelogram_grid = std::size_t{1} << 18;

  unsigned sup_max_stage = 14;
  std::size_t sup_oversampling = 64;

  std::vector<unsigned> equivalence_stages{1, 3, 6, 10};
  std::vector<double> equivalence_alphas{0.5, 1.0, 3.0, 4.0};

  std::size_t rs_lemma_max_n = std::size_t{1} << 14;
  std::size_t rs_lemma_grid = std::size_t{1} << 16;

  std::size_t segment_samples = 100;
  std::uint64_t segment_seed = 20170415;
  std::size_t segment_max_sum = std::size_t{1} << 14;

  std::vector<std::size_t> correlation_lengths{std::size_t{1} << 6, std::size_t{1} << 10,
                                               std::size_t{1} << 14};

  unsigned conjugate_max_stage = 16;
  unsigned norm_symmetry_max_stage = 10;

  unsigned l4_max_stage = 20;

  std::vector<std::size_t> truncated_n;

  unsigned nonflat_min_stage = 4;
  unsigned nonflat_max_stage = 16;
  std::vector<double> nonflat_alphas{0.0, 1.0, 2.0};

  std::vector<std::uint64_t> gauss_primes{7, 101, 1009, 10007};
  std::vector<std::uint64_t> hoholdt_primes{3, 5, 7, 13, 101, 1009, 10007, 20011};
  std::vector<std::uint64_t> structure_primes{5, 7, 13, 101, 1009, 10007};
  std::vector<std::uint64_t> montgomery_primes{17, 101, 1009, 10007};

  unsigned newman_byrnes_max_length = 13;
  std::vector<std::uint64_t> singer_primes{2, 3, 5, 7};

  static VerifyConfig standard();
  static VerifyConfig quick();
};

// One function per statement (or statement pair). Each returns reports for
// the statement ids it covers.
VerdictReport check_parallelogram(unsigned max_stage, std::size_t grid);
VerdictReport check_sup_bound(unsigned max_stage, std::size_t oversampling);
VerdictReport check_norm_equivalence(const std::vector<unsigned>& stages,
                                     const std::vector<double>& alphas,
                                     const NormOptions& options = {});
VerdictReport check_rudin_shapiro_lemma(std::size_t max_n, std::size_t grid);
VerdictReport check_segment_bound(std::size_t samples, std::uint64_t seed, std::size_t max_sum);
VerdictReport check_correlation_bounds(const std::vector<std::size_t>& lengths);
VerdictReport check_conjugate_identity(unsigned max_stage, unsigned norm_symmetry_max_stage,
                                       const NormOptions& options = {});
VerdictReport check_l4_theorem(unsigned max_stage);
VerdictReport check_truncated_rs(const std::vector<std::size_t>& n_list,
                                 const NormOptions& options = {});
VerdictReport check_rs_nonflatness(unsigned min_stage, unsigned max_stage,
                                   const std::vector<double>& alphas,
                                   const NormOptions& options = {});
VerdictReport check_flatness_characterization(const AnalyticPolynomial& poly, double alpha,
                                              const NormOptions& options = {});
VerdictReport check_gauss_formula(std::uint64_t p);
VerdictReport check_fekete_l4_trend(const std::vector<std::uint64_t>& primes);
// Returns {self-reciprocal, littlewood-criterion-ratio}.
std::pair<VerdictReport, VerdictReport> check_fekete_structure(std::uint64_t p);
VerdictReport check_montgomery_lower(std::uint64_t p);
VerdictReport check_newman_byrnes(unsigned max_length);
VerdictReport check_singer_flatness(const std::vector<std::uint64_t>& primes,
                                    const NormOptions& options = {});

/// Merges per-parameter reports for one statement: passes iff all pass.
VerdictReport merge_reports(StatementId id, const std::vector<VerdictReport>& parts);

/// Cosine-form amplitudes a_m (frequency 2m+1) of a self-reciprocal Fekete
/// polynomial and the Littlewood ratio n^2 sum a_m^2 / sum f_m^2 a_m^2.
struct LittlewoodForm {
  std::vector<int> amplitudes;
  std::vector<int> frequencies;
  double ratio = 0.0;
};
LittlewoodForm littlewood_form(const AnalyticPolynomial& fekete_poly);

/// Runs the selected statements in statement order; an empty selection
/// yields no reports. Exceptions inside a check become failed reports.
std::vector<VerdictReport> run_all(const VerifyConfig& config,
                                   const std::set<StatementId>& selection);

bool all_passed(const std::vector<VerdictReport>& reports);

}  // namespace flatlab

#endif  // FLATLAB_VERIFY_HPP
