#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "flatlab/correlate.hpp"
#include "flatlab/errors.hpp"
#include "flatlab/polyfam.hpp"
#include "flatlab/specnorm.hpp"
#include "oracle.hpp"

using namespace flatlab;

namespace {

SignSequence custom(std::vector<std::int8_t> v) { return {std::move(v), SequenceSource::Custom}; }

mpq_class q(const char* s) {
  mpq_class r(s);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("autocorrelation examples") {
  const auto p2 = autocorrelations(custom({1, 1, 1, -1}));
  CHECK(p2.c == std::vector<std::int64_t>{4, 1, 0, -1});
  CHECK(p2.energy == 2);
  REQUIRE(p2.merit_factor.has_value());
  CHECK(*p2.merit_factor == 4);
  CHECK(p2.l4_fourth_power == 20);
  CHECK(p2.l4_normalized() == q("5/4"));

  const auto one = autocorrelations(custom({1}));
  CHECK(one.c == std::vector<std::int64_t>{1});
  CHECK(one.energy == 0);
  CHECK_FALSE(one.merit_factor.has_value());

  const auto two = autocorrelations(custom({1, 1}));
  CHECK(two.c == std::vector<std::int64_t>{2, 1});
  CHECK(two.energy == 1);
  CHECK(*two.merit_factor == 2);
}

TEST_CASE("spectral coefficients") {
  const auto nu = spectral_coefficients(custom({1, 1, 1, -1}));
  REQUIRE(nu.size() == 4);
  CHECK(nu[0] == 1);
  CHECK(nu[1] == q("1/4"));
  CHECK(nu[2] == 0);
  CHECK(nu[3] == q("-1/4"));
}

TEST_CASE("correlation upper bound for GRS prefixes") {
  for (std::size_t n : {64, 1024}) {
    const auto prof = autocorrelations(grs_binary(n));
    for (std::size_t k = 1; k < n; ++k) {
      const double kk = static_cast<double>(k);
      CHECK(std::abs(static_cast<double>(prof.c[k])) <
            2.0 * kk + 4.0 * kk * std::log2(2.0 * static_cast<double>(n) / kk));
    }
  }
}

TEST_CASE("largest off-peak correlation of GRS prefixes") {
  // Oracle values max_{1<=l<N} |c_l| for N = 2^4 .. 2^14.
  const std::vector<std::int64_t> expected{5, 7, 13, 19, 33, 53, 85, 153, 217, 373, 557};
  for (unsigned e = 4; e <= 14; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const auto prof = autocorrelations(grs_binary(n));
    std::int64_t m = 0;
    for (std::size_t k = 1; k < n; ++k) m = std::max(m, std::abs(prof.c[k]));
    CHECK(m == expected[e - 4]);
    // The 1/6 lower bound holds up to N = 64 and fails from N = 128 on.
    CHECK((6 * m >= static_cast<std::int64_t>(n)) == (e <= 6));
  }
}

TEST_CASE("exact L4 examples and closed form for n <= 20") {
  CHECK(exact_l4(grs_binary(4)) == q("5/4"));
  CHECK(exact_l4(grs_binary(1)) == 1);
  CHECK(exact_l4(grs_binary(1024)) == q("1365/1024"));
  for (unsigned n = 0; n <= 20; ++n)
    CHECK(exact_l4(grs_binary(std::size_t{1} << n)) == rs_l4_closed_form(n));
  CHECK(rs_l4_closed_form(0) == 1);
  CHECK(rs_l4_closed_form(1) == q("3/2"));
}

TEST_CASE("l4 recurrence check") {
  const auto r = l4_recurrence_check(8);
  CHECK(r.passed);
  CHECK(r.statement == StatementId::ThmL4);
  const auto find = [&](const std::string& key) {
    for (const auto& [k, v] : r.exact)
      if (k == key) return v;
    return std::string();
  };
  CHECK(find("x_0") == "2");
  CHECK(find("x_1") == "3");
  CHECK(find("x_2") == "5/2");
  CHECK_THROWS_AS(l4_recurrence_check(0), InvalidArgument);
}

TEST_CASE("merit factor tables") {
  const auto grs = merit_factor_table(MeritFamily::Grs, {1024, 1});
  REQUIRE(grs.size() == 2);
  // F = 1/(||X_10||_4^4 - 1) = 1/(1/3 - 1/3072).
  CHECK(*grs[0].merit_factor == q("1024/341"));
  CHECK(grs[0].bounded_by_18.value());
  CHECK_FALSE(grs[1].merit_factor.has_value());
  const auto rs = merit_factor_table(MeritFamily::RudinShapiro, {10});
  CHECK(*rs[0].merit_factor == q("1024/341"));
  const auto fk = merit_factor_table(MeritFamily::Fekete, {7});
  CHECK(fk[0].length == 7);
  CHECK_FALSE(fk[0].bounded_by_18.has_value());
  for (std::size_t e = 6; e <= 14; ++e) {
    const auto row = merit_factor_table(MeritFamily::TruncatedRs, {std::uint64_t{1} << e})[0];
    CHECK(row.length == (std::size_t{1} << e) + 1);
    CHECK(row.l4_normalized >= mpq_class(19, 18) - mpq_class(1, 100));
  }
}

TEST_CASE("transform and direct autocorrelations agree on 200 random sequences") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4096;
    const auto u = oracle::random_signs(rng, n);
    double residual = 1.0;
    const auto fast = autocorrelations_fft(u, &residual);
    CHECK(residual < kRoundingGuard);
    CHECK(fast == autocorrelations_direct(u));
  }
}

TEST_CASE("library correlations match the oracle") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1, 2, 3, 17, 300}) {
    const auto u = oracle::random_signs(rng, n);
    const auto ref = oracle::autocorrelations(std::vector<int>(u.begin(), u.end()));
    const auto got = autocorrelations(custom(u)).c;
    CHECK(std::equal(ref.begin(), ref.end(), got.begin()));
  }
}

TEST_CASE("merit factor is invariant under reversal and negation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 200;
    auto u = oracle::random_signs(rng, n);
    auto r = u;
    std::reverse(r.begin(), r.end());
    auto neg = u;
    for (auto& v : neg) v = static_cast<std::int8_t>(-v);
    const auto a = autocorrelations(custom(u));
    const auto b = autocorrelations(custom(r));
    const auto c = autocorrelations(custom(neg));
    CHECK(a.merit_factor == b.merit_factor);
    CHECK(a.merit_factor == c.merit_factor);
    CHECK(a.l4_fourth_power == b.l4_fourth_power);
  }
}

TEST_CASE("exact fourth moment matches the quadrature L4 norm") {
  auto check = [](const AnalyticPolynomial& p) {
    std::vector<std::int8_t> s(p.coefficients().begin(), p.coefficients().end());
    const auto prof = autocorrelations(custom(s));
    const double exact =
        mpq_class(prof.l4_fourth_power, mpz_class(static_cast<long>(p.energy() * p.energy())))
            .get_d();
    CHECK(std::pow(lp_norm(p, 4.0).value, 4.0) == doctest::Approx(exact).epsilon(1e-8));
  };
  for (unsigned n = 0; n < 10; ++n) check(rudin_shapiro_pair(n).first);
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 101, 1009}) check(fekete(p));
  for (std::uint64_t p : {2, 3, 5, 7}) check(singer_poly(p));
}

TEST_CASE("littlewood minimum examples") {
  const auto m1 = littlewood_min_l4(1);
  CHECK(m1.min_l4 == 1);
  CHECK(m1.minimizer.values() == std::vector<std::int8_t>{1});
  CHECK(littlewood_min_l4(2).min_l4 == q("3/2"));
  CHECK_THROWS_AS(littlewood_min_l4(25), Unsupported);
  CHECK_THROWS_AS(littlewood_min_l4(0), InvalidArgument);
}

TEST_CASE("littlewood minimum agrees with an unreduced brute force for N <= 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto got = littlewood_min_l4(n);
    const long long e = oracle::brute_min_energy(n);
    mpq_class expected(static_cast<long>(n * n + 2 * e), static_cast<long>(n * n));
    expected.canonicalize();
    CHECK(got.min_l4 == expected);
    CHECK(got.minimizer[0] == 1);
    CHECK(exact_l4(got.minimizer) == got.min_l4);
  }
}

TEST_CASE("littlewood minimizer is the lexicographically least with leading +1") {
  for (unsigned n = 2; n <= 10; ++n) {
    const auto got = littlewood_min_l4(n);
    std::vector<std::int8_t> best;
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
      std::vector<std::int8_t> u(n);
      for (unsigned i = 0; i < n; ++i) u[i] = (x >> i) & 1U ? -1 : 1;
      if (u[0] != 1 || exact_l4(custom(u)) != got.min_l4) continue;
      if (best.empty() || u < best) best = u;
    }
    CHECK(got.minimizer.values() == best);
  }
}

TEST_CASE("littlewood minima match the golden file") {
  std::ifstream f(FLATLAB_GOLDEN_DIR "/newman_byrnes_minima.json");
  REQUIRE(f.good());
  const auto j = nlohmann::json::parse(f);
  for (const auto& row : j.at("minima")) {
    const unsigned n = row.at("N").get<unsigned>();
    CHECK(to_string(littlewood_min_l4(n).min_l4) == row.at("min_l4_fourth").get<std::string>());
  }
}

TEST_CASE("merit family labels round trip") {
  for (auto f : {MeritFamily::Grs, MeritFamily::TruncatedRs, MeritFamily::RudinShapiro,
                 MeritFamily::Fekete, MeritFamily::FeketeModified, MeritFamily::Singer})
    CHECK(parse_merit_family(to_string(f)) == f);
}
