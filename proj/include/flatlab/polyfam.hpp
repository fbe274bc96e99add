#ifndef FLATLAB_POLYFAM_HPP
#define FLATLAB_POLYFAM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "flatlab/seqgen.hpp"

namespace flatlab {

enum class PolyFamily {
  RudinShapiroP,
  RudinShapiroQ,
  TruncatedRs,
  RsSegment,
  Fekete,
  FeketeModified,
  FeketeShifted,
  Singer,
  Custom,
};

std::string_view to_string(PolyFamily family);
std::optional<PolyFamily> parse_poly_family(std::string_view label);

/// Integer-coefficient analytic polynomial sum_j a_j z^j together with an
/// explicit normalization scalar. The normalized form is
/// (1/normalization) * sum_j a_j z^j; by default normalization is the L^2
/// norm sqrt(sum a_j^2), so the normalized form has unit L^2 norm.
///
/// Coefficients are stored as given, zeros included (segments keep their
/// leading zeros, shifted Fekete may end in a zero); degree() is the index
/// of the last non-zero coefficient.
class AnalyticPolynomial {
 public:
  AnalyticPolynomial(std::vector<std::int32_t> coefficients, PolyFamily family);
  AnalyticPolynomial(std::vector<std::int32_t> coefficients, PolyFamily family,
                     double normalization);

  const std::vector<std::int32_t>& coefficients() const { return coefficients_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return coefficients_.size(); }
  double normalization() const { return normalization_; }
  PolyFamily family() const { return family_; }

  /// Exact sum of squared coefficients (= normalization^2 by default).
  std::int64_t energy() const;
  bool is_littlewood() const;

  /// Family parameter (stage, prime, N) used for labels; segment offset
  /// is in `offset()`.
  std::int64_t parameter() const { return parameter_; }
  std::int64_t offset() const { return offset_; }
  AnalyticPolynomial& with_parameters(std::int64_t parameter, std::int64_t offset = 0);

  SignSequence as_sign_sequence() const;

 private:
  std::vector<std::int32_t> coefficients_;
  std::size_t degree_ = 0;
  double normalization_;
  PolyFamily family_;
  std::int64_t parameter_ = 0;
  std::int64_t offset_ = 0;
};

inline constexpr unsigned kDefaultMaxRsStage = 22;
inline constexpr std::uint64_t kDefaultMaxFeketePrime = 20011;

/// (P_n, Q_n) from P_0 = Q_0 = 1 and P_{n+1} = P_n + z^{2^n} Q_n,
/// Q_{n+1} = P_n - z^{2^n} Q_n.
std::pair<AnalyticPolynomial, AnalyticPolynomial> rudin_shapiro_pair(
    unsigned stage, unsigned max_stage = kDefaultMaxRsStage);

/// R_N = sum_{n=0}^{N} r_n z^n (N+1 coefficients).
AnalyticPolynomial truncated_rs(std::size_t n);

/// sum_{n=N+1}^{N+M} r_n z^n, with zeros at indices 0..N.
AnalyticPolynomial rs_segment(std::size_t n, std::size_t m);

AnalyticPolynomial fekete(std::uint64_t p, std::uint64_t max_prime = kDefaultMaxFeketePrime);
AnalyticPolynomial fekete_modified(std::uint64_t p,
                                   std::uint64_t max_prime = kDefaultMaxFeketePrime);
AnalyticPolynomial fekete_shifted(std::uint64_t p, std::int64_t shift,
                                  std::uint64_t max_prime = kDefaultMaxFeketePrime);

AnalyticPolynomial singer_poly(std::uint64_t p,
                               std::uint64_t search_bound = kDefaultSingerSearchBound);

/// (-1)^n z^{2^n - 1} P(-1/z) in coefficient form. Requires deg P = 2^n - 1.
AnalyticPolynomial conjugate_reciprocal(const AnalyticPolynomial& poly, unsigned stage);

AnalyticPolynomial from_sign_sequence(const SignSequence& seq,
                                      PolyFamily family = PolyFamily::Custom);

}  // namespace flatlab

#endif  // FLATLAB_POLYFAM_HPP
