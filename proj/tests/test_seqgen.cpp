#include <doctest.h>

#include <algorithm>
#include <set>

#include "flatlab/errors.hpp"
#include "flatlab/seqgen.hpp"
#include "oracle.hpp"

using namespace flatlab;

namespace {
std::vector<std::int8_t> v(std::initializer_list<int> xs) {
  return std::vector<std::int8_t>(xs.begin(), xs.end());
}
}  // namespace

TEST_CASE("grs recurrence examples") {
  CHECK(grs_recurrence(1).values() == v({1}));
  CHECK(grs_recurrence(4).values() == v({1, 1, 1, -1}));
  CHECK(grs_recurrence(8).values() == v({1, 1, 1, -1, 1, 1, -1, 1}));
  CHECK(grs_recurrence(8).source() == SequenceSource::GrsRecurrence);
}

TEST_CASE("grs binary examples") {
  const auto s = grs_binary(8);
  CHECK(s[3] == -1);
  CHECK(s[7] == 1);
  CHECK(s.same_values(grs_recurrence(8)));
  CHECK(count_adjacent_ones(0b111) == 2);
  CHECK(count_adjacent_ones(0b1011) == 1);
}

TEST_CASE("grs substitution examples") {
  CHECK(grs_substitution(2).values() == v({1, 1}));
  CHECK(fixed_point_prefix(rudin_shapiro_substitution(), 8) ==
        std::vector<int>{0, 2, 0, 1, 0, 2, 3, 2});
  CHECK(grs_substitution(8).same_values(grs_binary(8)));
}

TEST_CASE("substitution validation rejects broken systems") {
  auto sys = rudin_shapiro_substitution();
  CHECK_NOTHROW(sys.validate());
  sys.rules[0] = {2, 0};
  CHECK_THROWS_AS(sys.validate(), InvalidArgument);
}

TEST_CASE("grs words examples") {
  const auto w1 = grs_words(1);
  CHECK(w1.a == v({1, 1}));
  CHECK(w1.b == v({1, -1}));
  const auto w2 = grs_words(2);
  CHECK(w2.a == v({1, 1, 1, -1}));
  CHECK(w2.b == v({1, 1, -1, 1}));
  CHECK(grs_words(0).a == v({1}));
}

TEST_CASE("four routes agree up to 2^16 and match the textual oracle") {
  const std::size_t n = std::size_t{1} << 16;
  const auto rec = grs_recurrence(n);
  const auto bin = grs_binary(n);
  const auto sub = grs_substitution(n);
  const auto words = grs_words(16).a;
  const auto ref = oracle::grs_prefix(n);
  CHECK(rec.same_values(bin));
  CHECK(sub.same_values(bin));
  CHECK(words == bin.values());
  CHECK(std::equal(ref.begin(), ref.end(), bin.values().begin()));
  for (std::size_t count : {1, 3, 5, 100, 1023, 4097})
    CHECK(grs_recurrence(count).same_values(grs_substitution(count)));
}

TEST_CASE("coefficient split between A_n and B_n") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto words = grs_words(n);
    const auto full = grs_recurrence(std::size_t{2} << n).values();
    const std::size_t len = std::size_t{1} << n;
    CHECK(std::equal(words.b.begin(), words.b.end(), full.begin() + len));
    for (std::size_t k = 0; k < len; ++k) {
      const int expected = k < len / 2 ? words.a[k] : -words.a[k];
      CHECK(words.b[k] == expected);
    }
  }
}

TEST_CASE("counts must be positive") {
  CHECK_THROWS_AS(grs_binary(0), InvalidArgument);
  CHECK_THROWS_AS(grs_recurrence(0), InvalidArgument);
  CHECK_THROWS_AS(grs_substitution(0), InvalidArgument);
}

TEST_CASE("legendre symbol examples") {
  CHECK(legendre_symbol(0, 7) == 0);
  CHECK(legendre_symbol(2, 7) == 1);
  CHECK(legendre_symbol(3, 7) == -1);
  CHECK(legendre_symbol(-1, 7) == -1);
  CHECK(legendre_symbol(-1, 5) == 1);
  CHECK(legendre_symbol(14, 7) == 0);
  CHECK_THROWS_AS(legendre_symbol(1, 9), InvalidArgument);
  CHECK_THROWS_AS(legendre_symbol(1, 2), InvalidArgument);
}

TEST_CASE("legendre tables, multiplicativity and zero sums for p <= 97") {
  for (std::uint64_t p = 3; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const auto seq = legendre_sequence(p);
    const auto ref = oracle::legendre_table(p);
    REQUIRE(seq.length() == p);
    int sum = 0;
    for (std::uint64_t k = 0; k < p; ++k) {
      CHECK(seq[k] == ref[k]);
      sum += seq[k];
    }
    CHECK(sum == 0);
    for (std::uint64_t a = 1; a < p; ++a)
      for (std::uint64_t b = 1; b < p; ++b)
        CHECK(legendre_symbol(static_cast<std::int64_t>(a * b), p) ==
              legendre_symbol(static_cast<std::int64_t>(a), p) *
                  legendre_symbol(static_cast<std::int64_t>(b), p));
  }
}

TEST_CASE("primality and modular power") {
  CHECK(is_prime(2));
  CHECK(is_prime(20011));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(20013));
  CHECK(pow_mod(3, 6, 7) == 1);
  CHECK(pow_mod(10, 0, 7) == 1);
  CHECK(pow_mod(2, 64, 1000000007ULL) == 582344008ULL);
  CHECK(pow_mod(18446744073709551557ULL, 5, 18446744073709551533ULL) == 7962624ULL);
}

TEST_CASE("shifted legendre sequence") {
  const auto s = legendre_sequence(7, 1);
  CHECK(s.values() == v({1, 1, -1, 1, -1, -1, 0}));
  CHECK(s.source() == SequenceSource::FeketeShifted);
  CHECK(legendre_sequence(7, 8).values() == s.values());
  CHECK(legendre_sequence(7, -6).values() == s.values());
}

TEST_CASE("singer sets") {
  CHECK(singer_set(2) == std::vector<std::uint64_t>{0, 1, 3});
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto s = singer_set(p);
    const std::uint64_t q = p * p + p + 1;
    REQUIRE(s.size() == p + 1);
    std::vector<int> hits(q, 0);
    for (auto a : s)
      for (auto b : s)
        if (a != b) ++hits[(a + q - b) % q];
    CHECK(hits[0] == 0);
    for (std::uint64_t r = 1; r < q; ++r) CHECK(hits[r] == 1);
    std::set<std::uint64_t> sums;
    for (auto a : s)
      for (auto b : s) sums.insert((a + b) % q);
    CHECK(sums.size() == (p * p + 3 * p + 2) / 2);
  }
  CHECK_THROWS_AS(singer_set(11), Unsupported);
  CHECK_THROWS_AS(singer_set(4), InvalidArgument);
}

TEST_CASE("singer sign sequences") {
  CHECK(singer_sign_sequence(2).values() == v({1, 1, 1, 1, 1, -1, 1}));
  const auto s3 = singer_sign_sequence(3);
  CHECK(s3.length() == 13);
  CHECK(std::count(s3.values().begin(), s3.values().end(), 1) == 10);
}

TEST_CASE("sign sequences reject zeros unless the source allows them") {
  CHECK_THROWS_AS(SignSequence(v({1, 0}), SequenceSource::GrsBinary), InvalidArgument);
  CHECK_THROWS_AS(SignSequence(v({1, 2}), SequenceSource::Custom), InvalidArgument);
  CHECK_NOTHROW(SignSequence(v({1, 0}), SequenceSource::Custom));
}

TEST_CASE("source labels round trip") {
  for (auto s : {SequenceSource::GrsRecurrence, SequenceSource::GrsBinary,
                 SequenceSource::GrsSubstitution, SequenceSource::GrsWords,
                 SequenceSource::Legendre, SequenceSource::FeketeShifted, SequenceSource::Singer,
                 SequenceSource::Custom})
    CHECK(parse_sequence_source(to_string(s)) == s);
  CHECK_FALSE(parse_sequence_source("grs").has_value());
}
