#include "flatlab/correlate.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>

#include "flatlab/errors.hpp"
#include "flatlab/parallel.hpp"

namespace flatlab {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr std::array<std::pair<MeritFamily, std::string_view>, 6> kMeritLabels{{
    {MeritFamily::Grs, "grs"},
    {MeritFamily::TruncatedRs, "truncated-rs"},
    {MeritFamily::RudinShapiro, "rudin-shapiro"},
    {MeritFamily::Fekete, "fekete"},
    {MeritFamily::FeketeModified, "fekete-modified"},
    {MeritFamily::Singer, "singer"},
}};

CorrelationProfile profile_from(std::vector<std::int64_t> c, bool used_direct) {
  CorrelationProfile p;
  p.length = c.size();
  p.used_direct = used_direct;
  for (std::size_t k = 1; k < c.size(); ++k) p.energy += c[k] * c[k];
  const mpz_class c0 = mpz_class(static_cast<long>(c[0]));
  p.l4_fourth_power = c0 * c0 + 2 * mpz_class(static_cast<long>(p.energy));
  if (p.energy != 0) {
    p.merit_factor = mpq_class(c0 * c0, 2 * mpz_class(static_cast<long>(p.energy)));
    p.merit_factor->canonicalize();
  }
  p.c = std::move(c);
  return p;
}

bool lex_less(std::uint32_t a, std::uint32_t b) {
  // Bit i set means entry i is -1, which sorts before +1.
  const std::uint32_t d = a ^ b;
  if (d == 0) return false;
  return ((a >> std::countr_zero(d)) & 1U) != 0;
}

std::uint32_t reverse_bits(std::uint32_t x, unsigned n) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < n; ++i) r |= ((x >> i) & 1U) << (n - 1 - i);
  return r;
}

std::int64_t packed_energy(std::uint32_t x, unsigned n) {
  std::int64_t e = 0;
  for (unsigned k = 1; k < n; ++k) {
    const std::uint32_t mask = (std::uint32_t{1} << (n - k)) - 1;
    const auto disagreements = std::popcount((x ^ (x >> k)) & mask);
    const std::int64_t c = static_cast<std::int64_t>(n - k) - 2 * disagreements;
    e += c * c;
  }
  return e;
}

}  // namespace

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class CorrelationProfile::l4_normalized() const {
  const mpz_class c0 = mpz_class(static_cast<long>(c.at(0)));
  if (c0 == 0) throw InvalidArgument("zero sequence has no normalized L4 norm");
  mpq_class q(l4_fourth_power, c0 * c0);
  q.canonicalize();
  return q;
}

std::vector<std::int64_t> autocorrelations_direct(std::span<const std::int8_t> u) {
  const std::size_t n = u.size();
  std::vector<std::int64_t> c(n, 0);
  parallel::for_chunks(n, 64, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i + k < n; ++i) s += u[i] * u[i + k];
      c[k] = s;
    }
  });
  return c;
}

std::vector<std::int64_t> autocorrelations_fft(std::span<const std::int8_t> u,
                                               double* max_residual) {
  const std::size_t n = u.size();
  if (n == 0) throw InvalidArgument("empty sequence");
  const std::size_t len = std::bit_ceil(2 * n);
  const std::size_t bins = len / 2 + 1;
  std::unique_ptr<double[], decltype(&fftw_free)> real(fftw_alloc_real(len), &fftw_free);
  std::unique_ptr<fftw_complex[], decltype(&fftw_free)> spec(fftw_alloc_complex(bins),
                                                             &fftw_free);
  if (!real || !spec) throw ResourceLimit("cannot allocate autocorrelation buffers");
  fftw_plan forward;
  fftw_plan backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(len), real.get(), spec.get(), FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(len), spec.get(), real.get(), FFTW_ESTIMATE);
  }
  std::fill(real.get(), real.get() + len, 0.0);
  for (std::size_t i = 0; i < n; ++i) real[i] = u[i];
  fftw_execute(forward);
  for (std::size_t b = 0; b < bins; ++b) {
    spec[b][0] = spec[b][0] * spec[b][0] + spec[b][1] * spec[b][1];
    spec[b][1] = 0.0;
  }
  fftw_execute(backward);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  std::vector<std::int64_t> c(n);
  double worst = 0.0;
  const double scale = 1.0 / static_cast<double>(len);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = real[k] * scale;
    const double r = std::nearbyint(v);
    worst = std::max(worst, std::abs(v - r));
    c[k] = static_cast<std::int64_t>(r);
  }
  if (max_residual) *max_residual = worst;
  return c;
}

CorrelationProfile autocorrelations(const SignSequence& u) {
  if (u.length() == 0) throw InvalidArgument("autocorrelations of an empty sequence");
  double residual = 0.0;
  auto c = autocorrelations_fft(u.values(), &residual);
  if (residual > kRoundingGuard) return profile_from(autocorrelations_direct(u.values()), true);
  if (u.length() <= kDirectValidationLimit) {
    auto direct = autocorrelations_direct(u.values());
    if (direct != c) return profile_from(std::move(direct), true);
  }
  return profile_from(std::move(c), false);
}

std::vector<mpq_class> spectral_coefficients(const CorrelationProfile& profile) {
  std::vector<mpq_class> nu(profile.length);
  const mpz_class n(static_cast<unsigned long>(profile.length));
  for (std::size_t k = 0; k < profile.length; ++k) {
    nu[k] = mpq_class(mpz_class(static_cast<long>(profile.c[k])), n);
    nu[k].canonicalize();
  }
  return nu;
}

std::vector<mpq_class> spectral_coefficients(const SignSequence& u) {
  return spectral_coefficients(autocorrelations(u));
}

mpq_class exact_l4(const SignSequence& u) { return autocorrelations(u).l4_normalized(); }

mpq_class rs_l4_closed_form(unsigned stage) {
  mpq_class power(1);
  for (unsigned i = 0; i < stage; ++i) power *= mpq_class(-1, 2);
  mpq_class v = mpq_class(-1, 3) * power + mpq_class(4, 3);
  v.canonicalize();
  return v;
}

VerdictReport l4_recurrence_check(unsigned max_stage) {
  if (max_stage < 1) throw InvalidArgument("l4_recurrence_check needs max_stage >= 1");
  VerdictReport report(StatementId::ThmL4);
  report.input("max_stage", max_stage);
  report.claimed = "x_n + x_{n-1}/2 = 4 and x_n = -(2/3)(-1/2)^n + 8/3, x_n = 2||X_n||_4^4";
  report.passed = true;
  mpq_class previous;
  for (unsigned n = 0; n <= max_stage; ++n) {
    const mpq_class x = 2 * exact_l4(grs_binary(std::size_t{1} << n));
    mpq_class closed = 2 * rs_l4_closed_form(n);
    if (x != closed) {
      report.passed = false;
      report.note("closed form fails at stage " + std::to_string(n));
    }
    if (n >= 1 && x + previous / 2 != 4) {
      report.passed = false;
      report.note("recurrence fails at stage " + std::to_string(n));
    }
    report.rational("x_" + std::to_string(n), to_string(x));
    previous = x;
  }
  report.value("x_max_stage", previous.get_d());
  return report;
}

std::string_view to_string(MeritFamily family) {
  for (const auto& [f, label] : kMeritLabels)
    if (f == family) return label;
  return "grs";
}

std::optional<MeritFamily> parse_merit_family(std::string_view label) {
  for (const auto& [f, l] : kMeritLabels)
    if (l == label) return f;
  return std::nullopt;
}

SignSequence family_sequence(MeritFamily family, std::uint64_t size) {
  switch (family) {
    case MeritFamily::Grs:
      return grs_binary(size);
    case MeritFamily::TruncatedRs:
      if (size == 0) throw InvalidArgument("truncated-rs requires N >= 1");
      return grs_binary(size + 1);
    case MeritFamily::RudinShapiro:
      if (size > 30) throw ResourceLimit("Rudin-Shapiro stage too large");
      return grs_binary(std::size_t{1} << size);
    case MeritFamily::Fekete:
      return legendre_sequence(size);
    case MeritFamily::FeketeModified: {
      auto v = legendre_sequence(size).values();
      v[0] = 1;
      return {std::move(v), SequenceSource::Custom};
    }
    case MeritFamily::Singer:
      return singer_sign_sequence(size);
  }
  throw InvalidArgument("unknown merit family");
}

std::vector<MeritRow> merit_factor_table(MeritFamily family,
                                         const std::vector<std::uint64_t>& sizes) {
  const bool grs_type = family == MeritFamily::Grs || family == MeritFamily::TruncatedRs ||
                        family == MeritFamily::RudinShapiro;
  std::vector<MeritRow> rows;
  rows.reserve(sizes.size());
  for (auto size : sizes) {
    const auto seq = family_sequence(family, size);
    const auto profile = autocorrelations(seq);
    MeritRow row;
    row.family = family;
    row.size = size;
    row.length = seq.length();
    row.merit_factor = profile.merit_factor;
    row.l4_normalized = profile.l4_normalized();
    if (grs_type) row.bounded_by_18 = row.l4_normalized >= mpq_class(19, 18);
    rows.push_back(std::move(row));
  }
  return rows;
}

LittlewoodMinimum littlewood_min_l4(unsigned n) {
  if (n == 0) throw InvalidArgument("littlewood_min_l4 needs N >= 1");
  if (n > kMaxExhaustiveLength)
    throw Unsupported("exhaustive search is limited to N <= " +
                      std::to_string(kMaxExhaustiveLength));
  const std::uint32_t full = n == 32 ? ~0U : ((std::uint32_t{1} << n) - 1);
  // Entry 0 is fixed to +1 (bit 0 clear), so candidates are x = 2y.
  const std::size_t candidates = std::size_t{1} << (n - 1);
  struct Best {
    std::int64_t energy = -1;
    std::uint32_t word = 0;
  };
  const std::size_t chunk = 1 << 14;
  std::vector<Best> partial((candidates + chunk - 1) / chunk);
  parallel::for_chunks(candidates, chunk, [&](std::size_t begin, std::size_t end) {
    Best best;
    for (std::size_t y = begin; y < end; ++y) {
      const auto x = static_cast<std::uint32_t>(y << 1);
      std::uint32_t rev = reverse_bits(x, n);
      if (rev & 1U) rev ^= full;
      if (lex_less(rev, x)) continue;
      const auto e = packed_energy(x, n);
      if (best.energy < 0 || e < best.energy || (e == best.energy && lex_less(x, best.word)))
        best = {e, x};
    }
    partial[begin / chunk] = best;
  });
  Best best;
  for (const auto& b : partial) {
    if (b.energy < 0) continue;
    if (best.energy < 0 || b.energy < best.energy ||
        (b.energy == best.energy && lex_less(b.word, best.word)))
      best = b;
  }
  std::vector<std::int8_t> values(n);
  for (unsigned i = 0; i < n; ++i) values[i] = ((best.word >> i) & 1U) ? -1 : 1;
  const mpz_class nn(static_cast<unsigned long>(n));
  mpq_class l4(nn * nn + 2 * mpz_class(static_cast<long>(best.energy)), nn * nn);
  l4.canonicalize();
  return {n, l4, SignSequence(std::move(values), SequenceSource::Custom)};
}

}  // namespace flatlab
