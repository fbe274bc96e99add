#ifndef FLATLAB_SEQGEN_HPP
#define FLATLAB_SEQGEN_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flatlab {

enum class SequenceSource {
  GrsRecurrence,
  GrsBinary,
  GrsSubstitution,
  GrsWords,
  Legendre,
  FeketeShifted,
  Singer,
  Custom,
};

std::string_view to_string(SequenceSource source);
std::optional<SequenceSource> parse_sequence_source(std::string_view label);

/// Finite sequence over {-1, 0, +1} tagged with the construction that
/// produced it. Zeros are only accepted for Legendre-type sources.
class SignSequence {
 public:
  SignSequence(std::vector<std::int8_t> values, SequenceSource source);

  const std::vector<std::int8_t>& values() const { return values_; }
  std::size_t length() const { return values_.size(); }
  SequenceSource source() const { return source_; }
  std::int8_t operator[](std::size_t i) const { return values_[i]; }

  // Element-wise comparison; provenance is ignored.
  bool same_values(const SignSequence& other) const { return values_ == other.values_; }

 private:
  std::vector<std::int8_t> values_;
  SequenceSource source_;
};

/// Uniform-length substitution on a small alphabet with a sign projection.
struct SubstitutionSystem {
  std::map<int, std::vector<int>> rules;
  std::map<int, std::int8_t> projection;
  int seed = 0;

  // Throws InvalidArgument on empty images, unknown letters, or a seed
  // whose image does not start with the seed.
  void validate() const;
};

/// The four-letter substitution 0->02, 1->32, 2->01, 3->31 with
/// projection 0,2 -> +1 and 1,3 -> -1.
SubstitutionSystem rudin_shapiro_substitution();

/// Prefix of length `count` of the fixed point starting at the seed.
std::vector<int> fixed_point_prefix(const SubstitutionSystem& system, std::size_t count);

struct WordPair {
  std::vector<std::int8_t> a;
  std::vector<std::int8_t> b;
  unsigned stage = 0;
};

SignSequence grs_recurrence(std::size_t count);
SignSequence grs_binary(std::size_t count);
SignSequence grs_substitution(std::size_t count);

/// (A_n, B_n) from A_0 = B_0 = [+1] by A_{n+1} = A_n B_n and
/// B_{n+1} = A_n (-B_n).
WordPair grs_words(unsigned stage);

/// Number of adjacent "11" bit pairs in the binary expansion of n.
unsigned count_adjacent_ones(std::uint64_t n);

// Deterministic trial division.
bool is_prime(std::uint64_t n);
void require_odd_prime(std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Legendre symbol (k/p) by Euler's criterion.
int legendre_symbol(std::int64_t k, std::uint64_t p);

/// ((k + shift)/p) for k = 0..p-1. shift = 0 gives the plain Legendre table.
SignSequence legendre_sequence(std::uint64_t p, std::int64_t shift = 0);

inline constexpr std::uint64_t kDefaultSingerSearchBound = 7;

/// Lexicographically least perfect difference set of size p+1 in
/// Z/(p^2+p+1)Z, found by backtracking search.
std::vector<std::uint64_t> singer_set(std::uint64_t p,
                                      std::uint64_t search_bound = kDefaultSingerSearchBound);

/// +1 on the sumset S+S (mod q), -1 elsewhere.
SignSequence singer_sign_sequence(std::uint64_t p,
                                  std::uint64_t search_bound = kDefaultSingerSearchBound);

}  // namespace flatlab

#endif  // FLATLAB_SEQGEN_HPP
