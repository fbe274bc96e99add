#include "flatlab/polyfam.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "flatlab/errors.hpp"

namespace flatlab {

namespace {

constexpr std::array<std::pair<PolyFamily, std::string_view>, 9> kFamilyLabels{{
    {PolyFamily::RudinShapiroP, "rudin-shapiro-P"},
    {PolyFamily::RudinShapiroQ, "rudin-shapiro-Q"},
    {PolyFamily::TruncatedRs, "truncated-rs"},
    {PolyFamily::RsSegment, "rs-segment"},
    {PolyFamily::Fekete, "fekete"},
    {PolyFamily::FeketeModified, "fekete-modified"},
    {PolyFamily::FeketeShifted, "fekete-shifted"},
    {PolyFamily::Singer, "singer"},
    {PolyFamily::Custom, "custom"},
}};

std::vector<std::int32_t> widen(const std::vector<std::int8_t>& v) {
  return {v.begin(), v.end()};
}

void require_fekete_prime(std::uint64_t p, std::uint64_t max_prime) {
  require_odd_prime(p);
  if (p > max_prime)
    throw ResourceLimit("prime " + std::to_string(p) + " exceeds the configured bound " +
                        std::to_string(max_prime));
}

}  // namespace

std::string_view to_string(PolyFamily family) {
  for (const auto& [f, label] : kFamilyLabels)
    if (f == family) return label;
  return "custom";
}

std::optional<PolyFamily> parse_poly_family(std::string_view label) {
  for (const auto& [f, l] : kFamilyLabels)
    if (l == label) return f;
  return std::nullopt;
}

AnalyticPolynomial::AnalyticPolynomial(std::vector<std::int32_t> coefficients, PolyFamily family)
    : coefficients_(std::move(coefficients)), normalization_(0.0), family_(family) {
  auto last = std::find_if(coefficients_.rbegin(), coefficients_.rend(),
                           [](std::int32_t a) { return a != 0; });
  if (last == coefficients_.rend()) throw InvalidArgument("the zero polynomial is not admissible");
  degree_ = static_cast<std::size_t>(coefficients_.rend() - last) - 1;
  normalization_ = std::sqrt(static_cast<double>(energy()));
}

AnalyticPolynomial::AnalyticPolynomial(std::vector<std::int32_t> coefficients, PolyFamily family,
                                       double normalization)
    : AnalyticPolynomial(std::move(coefficients), family) {
  if (!(normalization > 0.0) || !std::isfinite(normalization))
    throw InvalidArgument("normalization must be a positive finite scalar");
  normalization_ = normalization;
}

std::int64_t AnalyticPolynomial::energy() const {
  std::int64_t e = 0;
  for (auto a : coefficients_) e += static_cast<std::int64_t>(a) * a;
  return e;
}

bool AnalyticPolynomial::is_littlewood() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](std::int32_t a) { return a == 1 || a == -1; });
}

AnalyticPolynomial& AnalyticPolynomial::with_parameters(std::int64_t parameter,
                                                        std::int64_t offset) {
  parameter_ = parameter;
  offset_ = offset;
  return *this;
}

SignSequence AnalyticPolynomial::as_sign_sequence() const {
  std::vector<std::int8_t> v(coefficients_.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (coefficients_[i] < -1 || coefficients_[i] > 1)
      throw InvalidArgument("coefficient outside {-1,0,1}");
    v[i] = static_cast<std::int8_t>(coefficients_[i]);
  }
  return {std::move(v), SequenceSource::Custom};
}

std::pair<AnalyticPolynomial, AnalyticPolynomial> rudin_shapiro_pair(unsigned stage,
                                                                     unsigned max_stage) {
  if (stage > max_stage)
    throw ResourceLimit("Rudin-Shapiro stage " + std::to_string(stage) +
                        " exceeds the configured maximum " + std::to_string(max_stage));
  std::vector<std::int32_t> p{1};
  std::vector<std::int32_t> q{1};
  for (unsigned s = 0; s < stage; ++s) {
    std::vector<std::int32_t> next_p = p;
    next_p.insert(next_p.end(), q.begin(), q.end());
    std::vector<std::int32_t> next_q = std::move(p);
    for (auto c : q) next_q.push_back(-c);
    p = std::move(next_p);
    q = std::move(next_q);
  }
  AnalyticPolynomial pp(std::move(p), PolyFamily::RudinShapiroP);
  AnalyticPolynomial qq(std::move(q), PolyFamily::RudinShapiroQ);
  pp.with_parameters(stage);
  qq.with_parameters(stage);
  return {std::move(pp), std::move(qq)};
}

AnalyticPolynomial truncated_rs(std::size_t n) {
  if (n == 0) throw InvalidArgument("truncated_rs requires N >= 1");
  AnalyticPolynomial poly(widen(grs_binary(n + 1).values()), PolyFamily::TruncatedRs);
  poly.with_parameters(static_cast<std::int64_t>(n));
  return poly;
}

AnalyticPolynomial rs_segment(std::size_t n, std::size_t m) {
  if (m == 0) throw InvalidArgument("rs_segment requires M >= 1");
  const auto r = grs_binary(n + m + 1);
  std::vector<std::int32_t> c(n + m + 1, 0);
  for (std::size_t k = n + 1; k <= n + m; ++k) c[k] = r[k];
  AnalyticPolynomial poly(std::move(c), PolyFamily::RsSegment);
  poly.with_parameters(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
  return poly;
}

AnalyticPolynomial fekete(std::uint64_t p, std::uint64_t max_prime) {
  require_fekete_prime(p, max_prime);
  AnalyticPolynomial poly(widen(legendre_sequence(p).values()), PolyFamily::Fekete);
  poly.with_parameters(static_cast<std::int64_t>(p));
  return poly;
}

AnalyticPolynomial fekete_modified(std::uint64_t p, std::uint64_t max_prime) {
  require_fekete_prime(p, max_prime);
  auto c = widen(legendre_sequence(p).values());
  c[0] = 1;
  AnalyticPolynomial poly(std::move(c), PolyFamily::FeketeModified);
  poly.with_parameters(static_cast<std::int64_t>(p));
  return poly;
}

AnalyticPolynomial fekete_shifted(std::uint64_t p, std::int64_t shift, std::uint64_t max_prime) {
  require_fekete_prime(p, max_prime);
  const auto sp = static_cast<std::int64_t>(p);
  const std::int64_t t = ((shift % sp) + sp) % sp;
  AnalyticPolynomial poly(widen(legendre_sequence(p, t).values()), PolyFamily::FeketeShifted);
  poly.with_parameters(sp, t);
  return poly;
}

AnalyticPolynomial singer_poly(std::uint64_t p, std::uint64_t search_bound) {
  AnalyticPolynomial poly(widen(singer_sign_sequence(p, search_bound).values()),
                          PolyFamily::Singer);
  poly.with_parameters(static_cast<std::int64_t>(p));
  return poly;
}

AnalyticPolynomial conjugate_reciprocal(const AnalyticPolynomial& poly, unsigned stage) {
  if (stage >= 31) throw InvalidArgument("stage too large for conjugate_reciprocal");
  const std::size_t top = (std::size_t{1} << stage) - 1;
  if (poly.size() != top + 1)
    throw InvalidArgument("conjugate_reciprocal: length " + std::to_string(poly.size()) +
                          " does not match stage " + std::to_string(stage));
  const auto& a = poly.coefficients();
  std::vector<std::int32_t> out(top + 1);
  const int stage_sign = (stage % 2 == 0) ? 1 : -1;
  for (std::size_t j = 0; j <= top; ++j) {
    const int power_sign = ((top - j) % 2 == 0) ? 1 : -1;
    out[j] = stage_sign * power_sign * a[top - j];
  }
  AnalyticPolynomial result(std::move(out), PolyFamily::Custom, poly.normalization());
  result.with_parameters(stage);
  return result;
}

AnalyticPolynomial from_sign_sequence(const SignSequence& seq, PolyFamily family) {
  AnalyticPolynomial poly(widen(seq.values()), family);
  poly.with_parameters(static_cast<std::int64_t>(seq.length()));
  return poly;
}

}  // namespace flatlab
