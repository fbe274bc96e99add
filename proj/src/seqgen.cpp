#include "flatlab/seqgen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

#include "flatlab/errors.hpp"

namespace flatlab {

namespace {

constexpr std::array<std::pair<SequenceSource, std::string_view>, 8> kSourceLabels{{
    {SequenceSource::GrsRecurrence, "grs-recurrence"},
    {SequenceSource::GrsBinary, "grs-binary"},
    {SequenceSource::GrsSubstitution, "grs-substitution"},
    {SequenceSource::GrsWords, "grs-words"},
    {SequenceSource::Legendre, "legendre"},
    {SequenceSource::FeketeShifted, "fekete-shifted"},
    {SequenceSource::Singer, "singer"},
    {SequenceSource::Custom, "custom"},
}};

void require_count(std::size_t count) {
  if (count == 0) throw InvalidArgument("sequence count must be at least 1");
}

}  // namespace

std::string_view to_string(SequenceSource source) {
  for (const auto& [s, label] : kSourceLabels)
    if (s == source) return label;
  return "custom";
}

std::optional<SequenceSource> parse_sequence_source(std::string_view label) {
  for (const auto& [s, l] : kSourceLabels)
    if (l == label) return s;
  return std::nullopt;
}

SignSequence::SignSequence(std::vector<std::int8_t> values, SequenceSource source)
    : values_(std::move(values)), source_(source) {
  const bool zeros_allowed = source == SequenceSource::Legendre ||
                             source == SequenceSource::FeketeShifted ||
                             source == SequenceSource::Custom;
  for (auto v : values_) {
    if (v != 1 && v != -1 && !(v == 0 && zeros_allowed))
      throw InvalidArgument("sign sequence value outside the allowed set for source " +
                            std::string(to_string(source)));
  }
}

void SubstitutionSystem::validate() const {
  if (rules.empty()) throw InvalidArgument("substitution has no rules");
  for (const auto& [letter, image] : rules) {
    if (image.empty()) throw InvalidArgument("substitution rule with empty image");
    for (int x : image)
      if (!rules.contains(x)) throw InvalidArgument("substitution image uses unknown letter");
    if (!projection.contains(letter)) throw InvalidArgument("letter without projection");
  }
  auto it = rules.find(seed);
  if (it == rules.end() || it->second.front() != seed)
    throw InvalidArgument("seed image must begin with the seed");
}

SubstitutionSystem rudin_shapiro_substitution() {
  SubstitutionSystem s;
  s.rules = {{0, {0, 2}}, {1, {3, 2}}, {2, {0, 1}}, {3, {3, 1}}};
  // The fixed point codes A-type blocks with 0/2 and B-type with 1/3.
  s.projection = {{0, 1}, {1, -1}, {2, 1}, {3, -1}};
  s.seed = 0;
  return s;
}

std::vector<int> fixed_point_prefix(const SubstitutionSystem& system, std::size_t count) {
  system.validate();
  std::vector<int> word{system.seed};
  while (word.size() < count) {
    std::vector<int> next;
    next.reserve(word.size() * 2);
    for (int letter : word) {
      const auto& image = system.rules.at(letter);
      next.insert(next.end(), image.begin(), image.end());
    }
    // An image of length one for the seed would never grow.
    if (next.size() == word.size()) throw InvalidArgument("substitution does not grow");
    word = std::move(next);
  }
  word.resize(count);
  return word;
}

SignSequence grs_recurrence(std::size_t count) {
  require_count(count);
  std::vector<std::int8_t> r(count);
  r[0] = 1;
  for (std::size_t n = 1; n < count; ++n) {
    const std::size_t m = n / 2;
    if (n % 2 == 0)
      r[n] = r[m];
    else
      r[n] = (m % 2 == 0) ? r[m] : static_cast<std::int8_t>(-r[m]);
  }
  return {std::move(r), SequenceSource::GrsRecurrence};
}

unsigned count_adjacent_ones(std::uint64_t n) {
  return static_cast<unsigned>(std::popcount(n & (n >> 1)));
}

SignSequence grs_binary(std::size_t count) {
  require_count(count);
  std::vector<std::int8_t> r(count);
  for (std::size_t n = 0; n < count; ++n) r[n] = (count_adjacent_ones(n) % 2 == 0) ? 1 : -1;
  return {std::move(r), SequenceSource::GrsBinary};
}

SignSequence grs_substitution(std::size_t count) {
  require_count(count);
  const auto system = rudin_shapiro_substitution();
  const auto letters = fixed_point_prefix(system, count);
  std::vector<std::int8_t> r(count);
  std::transform(letters.begin(), letters.end(), r.begin(),
                 [&](int letter) { return system.projection.at(letter); });
  return {std::move(r), SequenceSource::GrsSubstitution};
}

WordPair grs_words(unsigned stage) {
  WordPair w{{1}, {1}, 0};
  for (unsigned s = 0; s < stage; ++s) {
    std::vector<std::int8_t> a = w.a;
    a.insert(a.end(), w.b.begin(), w.b.end());
    std::vector<std::int8_t> b = w.a;
    for (auto v : w.b) b.push_back(static_cast<std::int8_t>(-v));
    w.a = std::move(a);
    w.b = std::move(b);
  }
  w.stage = stage;
  return w;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw InvalidArgument("modulus " + std::to_string(p) + " is not an odd prime");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exponent >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

int legendre_symbol(std::int64_t k, std::uint64_t p) {
  require_odd_prime(p);
  const auto sp = static_cast<std::int64_t>(p);
  const auto residue = static_cast<std::uint64_t>(((k % sp) + sp) % sp);
  if (residue == 0) return 0;
  return pow_mod(residue, (p - 1) / 2, p) == 1 ? 1 : -1;
}

SignSequence legendre_sequence(std::uint64_t p, std::int64_t shift) {
  require_odd_prime(p);
  std::vector<std::int8_t> v(p);
  for (std::uint64_t k = 0; k < p; ++k)
    v[k] = static_cast<std::int8_t>(legendre_symbol(static_cast<std::int64_t>(k) + shift, p));
  return {std::move(v), shift == 0 ? SequenceSource::Legendre : SequenceSource::FeketeShifted};
}

namespace {

// Depth-first search in increasing element order; `used` marks residues
// already realized as differences. The first complete set found is the
// lexicographically least one.
bool extend_difference_set(std::vector<std::uint64_t>& chosen, std::vector<char>& used,
                           std::uint64_t q, std::size_t target) {
  if (chosen.size() == target) return true;
  const std::size_t remaining = target - chosen.size();
  for (std::uint64_t x = chosen.back() + 1; x + remaining <= q; ++x) {
    std::vector<std::uint64_t> fresh;
    bool ok = true;
    for (auto y : chosen) {
      const std::uint64_t d1 = (x - y) % q;
      const std::uint64_t d2 = q - d1;
      if (used[d1] || used[d2] || d1 == d2) {
        ok = false;
        break;
      }
      used[d1] = used[d2] = 1;
      fresh.push_back(d1);
    }
    if (ok) {
      chosen.push_back(x);
      if (extend_difference_set(chosen, used, q, target)) return true;
      chosen.pop_back();
    }
    for (auto d : fresh) used[d] = used[q - d] = 0;
  }
  return false;
}

}  // namespace

std::vector<std::uint64_t> singer_set(std::uint64_t p, std::uint64_t search_bound) {
  if (!is_prime(p)) throw InvalidArgument("Singer parameter " + std::to_string(p) + " is not prime");
  if (p > search_bound)
    throw Unsupported("Singer set search is limited to p <= " + std::to_string(search_bound));
  const std::uint64_t q = p * p + p + 1;
  std::vector<std::uint64_t> chosen{0};
  std::vector<char> used(q, 0);
  if (!extend_difference_set(chosen, used, q, p + 1))
    throw Unsupported("no perfect difference set found for p = " + std::to_string(p));
  return chosen;
}

SignSequence singer_sign_sequence(std::uint64_t p, std::uint64_t search_bound) {
  const auto s = singer_set(p, search_bound);
  const std::uint64_t q = p * p + p + 1;
  std::vector<std::int8_t> v(q, -1);
  for (auto a : s)
    for (auto b : s) v[(a + b) % q] = 1;
  return {std::move(v), SequenceSource::Singer};
}

}  // namespace flatlab
