#include "flatlab/specnorm.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>

#include "flatlab/errors.hpp"
#include "flatlab/parallel.hpp"

namespace flatlab {

namespace {

using cplx = std::complex<double>;

// FFTW's planner is not thread safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

// exp(2 pi i k offset / m) with the phase reduced before scaling.
cplx offset_twiddle(std::size_t k, double offset, std::size_t m) {
  if (offset == 0.0) return {1.0, 0.0};
  const double turns = std::fmod(static_cast<double>(k) * offset, static_cast<double>(m));
  return std::polar(1.0, 2.0 * std::numbers::pi * turns / static_cast<double>(m));
}

void require_grid(std::size_t m, std::size_t needed) {
  if (m < needed)
    throw InvalidArgument("grid size " + std::to_string(m) + " is below the soundness floor " +
                          std::to_string(needed));
}

std::vector<double> magnitudes_of(std::span<const double> coefficients, std::size_t m,
                                  double offset) {
  auto values = std::has_single_bit(m) ? evaluate_fft(coefficients, m, offset)
                                       : evaluate_direct(coefficients, m, offset);
  std::vector<double> mags(m);
  for (std::size_t j = 0; j < m; ++j) mags[j] = std::abs(values[j]);
  return mags;
}

struct Refined {
  std::vector<double> values;
  std::size_t grid_size = 0;
  double estimated_error = 0.0;
};

using Reducer = std::function<std::vector<double>(const std::vector<double>&)>;

bool converged(const std::vector<double>& prev, const std::vector<double>& cur, double tol) {
  for (std::size_t i = 0; i < cur.size(); ++i) {
    const double diff = std::abs(cur[i] - prev[i]);
    if (!(diff <= tol * std::abs(cur[i]) + 1e-14)) return false;
  }
  return true;
}

// Doubles the grid from `start` until every reduced quantity is stable to
// the relative tolerance. The error estimate tracks quantity 0.
Refined refine(std::span<const double> coefficients, std::size_t start, double offset,
               const NormOptions& options, const Reducer& reduce, double alpha) {
  if (!(options.tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  std::size_t m = start;
  std::vector<double> prev = reduce(magnitudes_of(coefficients, m, offset));
  double last_err = kInfinity;
  while (true) {
    if (m * 2 > options.grid_cap) {
      NormProfile best{alpha, prev.front(), m, last_err};
      throw AccuracyNotReached("tolerance not reached within grid cap " +
                                   std::to_string(options.grid_cap),
                               best);
    }
    m *= 2;
    auto cur = reduce(magnitudes_of(coefficients, m, offset));
    const bool done = converged(prev, cur, options.tolerance);
    const double err = std::abs(cur.front() - prev.front());
    if (done) return {std::move(cur), m, err};
    last_err = err;
    prev = std::move(cur);
  }
}

std::size_t default_start(std::size_t degree, const NormOptions& options) {
  if (options.start_grid != 0) {
    require_grid(options.start_grid, degree + 1);
    return std::bit_ceil(options.start_grid);
  }
  return 8 * std::bit_ceil(degree + 1);
}

double mean(const std::vector<double>& mags, const std::function<double(double)>& f) {
  return parallel::ordered_sum(mags.size(), [&](std::size_t i) { return f(mags[i]); }) /
         static_cast<double>(mags.size());
}

double mean_power(const std::vector<double>& mags, double alpha) {
  if (alpha == 2.0) return mean(mags, [](double x) { return x * x; });
  if (alpha == 4.0) return mean(mags, [](double x) { return (x * x) * (x * x); });
  return mean(mags, [alpha](double x) { return std::pow(x, alpha); });
}

// Divides out (z - 1) and (z + 1) while they are exact factors.
std::vector<std::int64_t> deflate_unit_roots(std::vector<std::int64_t> a, int& removed) {
  removed = 0;
  auto trim = [&] {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
  };
  trim();
  for (const std::int64_t root : {std::int64_t{1}, std::int64_t{-1}}) {
    while (a.size() > 1) {
      std::int64_t value = 0;
      std::int64_t power = 1;
      for (auto c : a) {
        value += c * power;
        power *= root;
      }
      if (value != 0) break;
      const std::size_t n = a.size() - 1;
      std::vector<std::int64_t> b(n);
      b[n - 1] = a[n];
      for (std::size_t k = n - 1; k >= 1; --k) b[k - 1] = a[k] + root * b[k];
      a = std::move(b);
      trim();
      ++removed;
    }
  }
  return a;
}

}  // namespace

std::vector<double> scaled_coefficients(const AnalyticPolynomial& poly, Scaling scaling) {
  const double scale = scaling == Scaling::Normalized ? 1.0 / poly.normalization() : 1.0;
  std::vector<double> out(poly.degree() + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = poly.coefficients()[k] * scale;
  return out;
}

std::vector<cplx> evaluate_fft(std::span<const double> coefficients, std::size_t m,
                               double offset) {
  if (!std::has_single_bit(m)) throw InvalidArgument("FFT route needs a power-of-two grid");
  if (coefficients.size() > m) throw InvalidArgument("FFT grid smaller than coefficient count");
  std::unique_ptr<fftw_complex[], FftwFree> buf(fftw_alloc_complex(m));
  if (!buf) throw ResourceLimit("cannot allocate FFT buffer of size " + std::to_string(m));
  for (std::size_t k = 0; k < m; ++k) {
    cplx v = k < coefficients.size() ? coefficients[k] * offset_twiddle(k, offset, m) : cplx{};
    buf[k][0] = v.real();
    buf[k][1] = v.imag();
  }
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(m), buf.get(), buf.get(), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::vector<cplx> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = {buf[j][0], buf[j][1]};
  return out;
}

std::vector<cplx> evaluate_direct(std::span<const double> coefficients, std::size_t m,
                                  double offset) {
  if (m == 0) throw InvalidArgument("empty grid");
  std::vector<cplx> roots(m);
  for (std::size_t t = 0; t < m; ++t)
    roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) /
                                   static_cast<double>(m));
  std::vector<cplx> twisted(coefficients.size());
  for (std::size_t k = 0; k < twisted.size(); ++k)
    twisted[k] = coefficients[k] * offset_twiddle(k, offset, m);
  std::vector<cplx> out(m);
  parallel::for_chunks(m, 256, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      cplx acc{};
      std::size_t idx = 0;
      for (std::size_t k = 0; k < twisted.size(); ++k) {
        acc += twisted[k] * roots[idx];
        idx += j;
        if (idx >= m) idx %= m;
      }
      out[j] = acc;
    }
  });
  return out;
}

EvaluationGrid evaluate_on_grid(const AnalyticPolynomial& poly, std::size_t m, double offset,
                                Scaling scaling) {
  require_grid(m, poly.degree() + 1);
  if (!(offset >= 0.0 && offset < 1.0)) throw InvalidArgument("grid offset must lie in [0,1)");
  const auto coefficients = scaled_coefficients(poly, scaling);
  EvaluationGrid grid;
  grid.size = m;
  grid.offset = offset;
  grid.values = std::has_single_bit(m) ? evaluate_fft(coefficients, m, offset)
                                       : evaluate_direct(coefficients, m, offset);
  grid.magnitudes.resize(m);
  for (std::size_t j = 0; j < m; ++j) grid.magnitudes[j] = std::abs(grid.values[j]);
  return grid;
}

SupNorm sup_norm(const AnalyticPolynomial& poly, std::size_t oversampling, Scaling scaling,
                 std::size_t grid_cap) {
  if (oversampling == 0) throw InvalidArgument("oversampling must be positive");
  const std::size_t m =
      std::min(grid_cap, std::bit_ceil(oversampling) * std::bit_ceil(poly.degree() + 1));
  require_grid(m, poly.degree() + 1);
  const auto mags = magnitudes_of(scaled_coefficients(poly, scaling), m, 0.0);
  SupNorm out;
  out.grid_size = m;
  out.grid_max = parallel::ordered_max(mags.size(), [&](std::size_t i) { return mags[i]; });
  const double inflation = std::numbers::pi * static_cast<double>(poly.degree()) /
                           static_cast<double>(m);
  out.upper_bound = inflation < 1.0 ? out.grid_max / (1.0 - inflation) : kInfinity;
  return out;
}

NormProfile lp_norm(const AnalyticPolynomial& poly, double alpha, const NormOptions& options) {
  if (std::isinf(alpha) && alpha > 0) return sup_norm(poly, kDefaultSupOversampling,
                                                      options.scaling, options.grid_cap)
                                          .profile();
  if (!(alpha > 0.0)) throw InvalidArgument("lp_norm requires alpha > 0");
  const auto coefficients = scaled_coefficients(poly, options.scaling);
  auto result = refine(
      coefficients, default_start(poly.degree(), options), 0.0, options,
      [alpha](const std::vector<double>& mags) {
        return std::vector<double>{std::pow(mean_power(mags, alpha), 1.0 / alpha)};
      },
      alpha);
  return {alpha, result.values.front(), result.grid_size, result.estimated_error};
}

NormProfile mahler_measure(const AnalyticPolynomial& poly, const NormOptions& options) {
  std::vector<std::int64_t> raw(poly.coefficients().begin(), poly.coefficients().end());
  int removed = 0;
  const auto deflated = deflate_unit_roots(std::move(raw), removed);
  std::vector<double> coefficients(deflated.begin(), deflated.end());
  const double scale = options.scaling == Scaling::Normalized ? poly.normalization() : 1.0;
  // Keep the deflated values near unit size for the log average.
  for (auto& c : coefficients) c /= scale;

  static constexpr double kFloor = 1e-300;
  auto result = refine(
      coefficients, default_start(coefficients.size() - 1, options), 0.5, options,
      [](const std::vector<double>& mags) {
        std::size_t tiny = 0;
        for (double x : mags)
          if (x < kFloor) ++tiny;
        if (tiny * 100 > mags.size())
          throw DegenerateInput("polynomial vanishes on more than 1% of the grid");
        const double avg = mean(mags, [](double x) { return std::log(std::max(x, kFloor)); });
        return std::vector<double>{std::exp(avg)};
      },
      0.0);
  return {0.0, result.values.front(), result.grid_size, result.estimated_error};
}

FlatnessReport flatness_deviation(const AnalyticPolynomial& poly, double alpha,
                                  const NormOptions& options) {
  if (!(alpha >= 0.0) || std::isinf(alpha))
    throw InvalidArgument("flatness_deviation requires a finite alpha >= 0");
  FlatnessReport report;
  report.alpha = alpha;
  if (alpha == 0.0) {
    const auto m = mahler_measure(poly, options);
    report.deviation = std::abs(m.value - 1.0);
    report.estimated_error = m.estimated_error;
    report.grid_size = m.grid_size;
    report.norm_half_alpha = m.value;
    return report;
  }
  const auto coefficients = scaled_coefficients(poly, options.scaling);
  const double half = alpha / 2.0;
  auto result = refine(
      coefficients, default_start(poly.degree(), options), 0.0, options,
      [alpha, half](const std::vector<double>& mags) {
        const double dev = std::pow(
            mean(mags, [alpha](double x) { return std::pow(std::abs(x - 1.0), alpha); }),
            1.0 / alpha);
        const double norm_half = std::pow(mean_power(mags, half), 1.0 / half);
        const double pow_l1 =
            mean(mags, [alpha](double x) { return std::abs(std::pow(x, alpha) - 1.0); });
        const double half_l2 = std::sqrt(mean(mags, [half](double x) {
          const double d = std::pow(x, half) - 1.0;
          return d * d;
        }));
        const double half_l1 =
            mean(mags, [half](double x) { return std::abs(std::pow(x, half) - 1.0); });
        return std::vector<double>{dev, norm_half, pow_l1, half_l2, half_l1};
      },
      alpha);
  report.deviation = result.values[0];
  report.norm_half_alpha = result.values[1];
  report.pow_minus_one_l1 = result.values[2];
  report.halfpow_minus_one_l2 = result.values[3];
  report.halfpow_minus_one_l1 = result.values[4];
  report.estimated_error = result.estimated_error;
  report.grid_size = result.grid_size;
  return report;
}

EquivalenceConstants norm_equivalence_constants(double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("norm equivalence needs alpha > 0");
  const double k = std::pow(2.0, (2.0 - alpha) / (2.0 * alpha));
  if (alpha < 2.0) return {1.0, k};
  if (alpha > 2.0) return {k, 1.0};
  return {1.0, 1.0};
}

VerdictReport norm_equivalence_check(const AnalyticPolynomial& poly, double alpha,
                                     const NormOptions& options) {
  if (poly.family() != PolyFamily::RudinShapiroP && poly.family() != PolyFamily::RudinShapiroQ)
    throw InvalidArgument("norm_equivalence_check applies to Rudin-Shapiro polynomials");
  const auto constants = norm_equivalence_constants(alpha);
  VerdictReport report(StatementId::LemmaNormEquiv);
  report.input("stage", static_cast<double>(poly.parameter())).input("alpha", alpha);
  report.value("c_alpha", constants.lower).value("C_alpha", constants.upper);
  if (alpha == 2.0) {
    report.value("norm_alpha", 1.0).value("norm_2", 1.0);
    report.claimed = "alpha = 2: both constants equal 1";
    report.passed = true;
    report.note("trivially true");
    return report;
  }
  const auto na = lp_norm(poly, alpha, options);
  const auto n2 = lp_norm(poly, 2.0, options);
  const double slack = 10.0 * (na.estimated_error + n2.estimated_error) + 1e-9;
  report.value("norm_alpha", na.value).value("norm_2", n2.value);
  report.value("lower_side", constants.lower * na.value);
  report.value("upper_side", constants.upper * na.value);
  report.claimed = "c_alpha*||P||_alpha <= ||P||_2 <= C_alpha*||P||_alpha";
  report.tolerance = slack;
  report.passed = constants.lower * na.value <= n2.value + slack &&
                  n2.value <= constants.upper * na.value + slack;
  return report;
}

}  // namespace flatlab
