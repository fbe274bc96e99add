#ifndef FLATLAB_CORRELATE_HPP
#define FLATLAB_CORRELATE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatlab/seqgen.hpp"
#include "flatlab/verdict.hpp"

namespace flatlab {

/// Aperiodic autocorrelations c_k = sum_i u_i u_{i+k} of a real sign
/// sequence, with the derived energy, merit factor and fourth moment.
struct CorrelationProfile {
  std::size_t length = 0;
  std::vector<std::int64_t> c;  // c_0 .. c_{length-1}
  std::int64_t energy = 0;      // sum_{k>=1} c_k^2
  // c_0^2 / (2 E); empty when E = 0 (infinite merit factor).
  std::optional<mpq_class> merit_factor;
  mpz_class l4_fourth_power;  // c_0^2 + 2E = ||U||_4^4 (raw)
  bool used_direct = false;   // exact O(N^2) route used for the final values

  /// ||U / ||U||_2||_4^4 = (c_0^2 + 2E) / c_0^2.
  mpq_class l4_normalized() const;
};

/// Exact autocorrelations by direct O(N^2) summation.
std::vector<std::int64_t> autocorrelations_direct(std::span<const std::int8_t> u);

/// Autocorrelations through an FFT convolution, rounded to integers. The
/// largest distance to the nearest integer is written to `max_residual`.
std::vector<std::int64_t> autocorrelations_fft(std::span<const std::int8_t> u,
                                               double* max_residual = nullptr);

inline constexpr double kRoundingGuard = 0.25;
inline constexpr std::size_t kDirectValidationLimit = 4096;

/// FFT route with a rounding guard: any residual above 0.25 falls back to
/// direct summation. Lengths up to 4096 are always cross-checked directly.
CorrelationProfile autocorrelations(const SignSequence& u);

/// nu_N(k) = c_k / N for k = 0..N-1, N = length.
std::vector<mpq_class> spectral_coefficients(const SignSequence& u);
std::vector<mpq_class> spectral_coefficients(const CorrelationProfile& profile);

/// Normalized fourth power (c_0^2 + 2E) / c_0^2.
mpq_class exact_l4(const SignSequence& u);

/// -(1/3)(-1/2)^n + 4/3, the closed form of ||X_n||_4^4.
mpq_class rs_l4_closed_form(unsigned stage);

/// Checks x_n + x_{n-1}/2 = 4 and x_n = -(2/3)(-1/2)^n + 8/3 exactly,
/// where x_n = 2 ||X_n||_4^4 computed from integer autocorrelations.
VerdictReport l4_recurrence_check(unsigned max_stage);

enum class MeritFamily { Grs, TruncatedRs, RudinShapiro, Fekete, FeketeModified, Singer };

std::string_view to_string(MeritFamily family);
std::optional<MeritFamily> parse_merit_family(std::string_view label);

/// The coefficient sequence of a family member. Size means: prefix length
/// (grs), N of R_N (truncated-rs), stage (rudin-shapiro), p otherwise.
SignSequence family_sequence(MeritFamily family, std::uint64_t size);

struct MeritRow {
  MeritFamily family = MeritFamily::Grs;
  std::uint64_t size = 0;
  std::size_t length = 0;
  std::optional<mpq_class> merit_factor;
  mpq_class l4_normalized;
  // Only for GRS-type families: merit factor <= 18, equivalently
  // normalized L4^4 >= 19/18.
  std::optional<bool> bounded_by_18;
};

std::vector<MeritRow> merit_factor_table(MeritFamily family,
                                         const std::vector<std::uint64_t>& sizes);

inline constexpr unsigned kMaxExhaustiveLength = 24;

struct LittlewoodMinimum {
  std::size_t length = 0;
  mpq_class min_l4;  // min over {+1,-1}^N of the normalized L4^4
  SignSequence minimizer;
};

/// Exhaustive search over +-1 sequences of length N <= 24, reduced by
/// negation and reversal. The minimizer is the lexicographically least
/// (-1 < +1) sequence with first entry +1 attaining the minimum.
LittlewoodMinimum littlewood_min_l4(unsigned n);

std::string to_string(const mpq_class& q);

}  // namespace flatlab

#endif  // FLATLAB_CORRELATE_HPP
