#ifndef FLATLAB_SPECNORM_HPP
#define FLATLAB_SPECNORM_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatlab/polyfam.hpp"
#include "flatlab/verdict.hpp"

namespace flatlab {

enum class Scaling { Normalized, Raw };

/// Values of a polynomial at z_j = exp(2 pi i (j + offset) / size).
struct EvaluationGrid {
  std::size_t size = 0;
  double offset = 0.0;
  std::vector<std::complex<double>> values;
  std::vector<double> magnitudes;
};

/// Evaluates on the offset M-th roots of unity. Power-of-two M goes through
/// a zero-padded FFT, any other M through direct summation with an exact
/// roots-of-unity table. Requires M >= degree + 1.
EvaluationGrid evaluate_on_grid(const AnalyticPolynomial& poly, std::size_t m,
                                double offset = 0.0, Scaling scaling = Scaling::Normalized);

// The two evaluation routes, exposed for cross-checking. Neither enforces
// the M >= degree + 1 floor beyond what the route itself needs.
std::vector<std::complex<double>> evaluate_fft(std::span<const double> coefficients,
                                               std::size_t m, double offset);
std::vector<std::complex<double>> evaluate_direct(std::span<const double> coefficients,
                                                  std::size_t m, double offset);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct NormProfile {
  double alpha = 0.0;  // 0 for the Mahler measure, infinity for sup
  double value = 0.0;
  std::size_t grid_size = 0;
  double estimated_error = 0.0;  // |value(M) - value(M/2)|
};

struct NormOptions {
  double tolerance = 1e-7;  // relative change between successive grids
  std::size_t grid_cap = std::size_t{1} << 26;
  std::size_t start_grid = 0;  // 0 = 8 * bit_ceil(degree + 1)
  Scaling scaling = Scaling::Normalized;
};

class AccuracyNotReached : public std::runtime_error {
 public:
  AccuracyNotReached(const std::string& what, NormProfile best)
      : std::runtime_error(what), best_(best) {}
  const NormProfile& best() const { return best_; }

 private:
  NormProfile best_;
};

/// (1/M sum |P(z_j)|^alpha)^(1/alpha) on doubling power-of-two grids until
/// two successive values agree to the relative tolerance. alpha = infinity
/// is forwarded to sup_norm (value = certified lower bound).
NormProfile lp_norm(const AnalyticPolynomial& poly, double alpha, const NormOptions& options = {});

/// exp of the grid average of log|P| on half-step offset grids. Exact roots
/// at z = 1 and z = -1 are divided out first (each has Mahler measure 1).
NormProfile mahler_measure(const AnalyticPolynomial& poly, const NormOptions& options = {});

struct SupNorm {
  double grid_max = 0.0;     // certified lower bound of the sup
  double upper_bound = 0.0;  // grid_max / (1 - pi * degree / M), from Bernstein
  std::size_t grid_size = 0;

  NormProfile profile() const { return {kInfinity, grid_max, grid_size, upper_bound - grid_max}; }
};

inline constexpr std::size_t kDefaultSupOversampling = 512;

SupNorm sup_norm(const AnalyticPolynomial& poly,
                 std::size_t oversampling = kDefaultSupOversampling,
                 Scaling scaling = Scaling::Normalized, std::size_t grid_cap = std::size_t{1} << 26);

/// Distance of |P| from the constant 1, plus the three auxiliary quantities
/// used by the flatness characterization.
struct FlatnessReport {
  double alpha = 0.0;
  double deviation = 0.0;  // || |P| - 1 ||_alpha, or |M(P) - 1| at alpha = 0
  double estimated_error = 0.0;
  std::size_t grid_size = 0;
  double norm_half_alpha = 0.0;       // ||P||_{alpha/2}
  double pow_minus_one_l1 = 0.0;      // || |P|^alpha - 1 ||_1
  double halfpow_minus_one_l2 = 0.0;  // || |P|^{alpha/2} - 1 ||_2
  double halfpow_minus_one_l1 = 0.0;  // || |P|^{alpha/2} - 1 ||_1
};

FlatnessReport flatness_deviation(const AnalyticPolynomial& poly, double alpha,
                                  const NormOptions& options = {});

/// Norm-equivalence constants for Rudin-Shapiro polynomials:
/// c ||P||_alpha <= ||P||_2 <= C ||P||_alpha.
struct EquivalenceConstants {
  double lower = 1.0;  // c_alpha
  double upper = 1.0;  // C_alpha
};
EquivalenceConstants norm_equivalence_constants(double alpha);

VerdictReport norm_equivalence_check(const AnalyticPolynomial& poly, double alpha,
                                     const NormOptions& options = {});

/// Coefficients of the (optionally normalized) polynomial as doubles.
std::vector<double> scaled_coefficients(const AnalyticPolynomial& poly, Scaling scaling);

}  // namespace flatlab

#endif  // FLATLAB_SPECNORM_HPP
