#include "commgroup/random.hpp"

#include <algorithm>
#include <cstdlib>

namespace commgroup {

Rng make_stream(std::uint64_t seed, std::string_view name) {
  // FNV-1a keeps the derivation stable across standard libraries.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Word random_word(Rng& rng, int rank, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    const int i = static_cast<int>(uniform(rng, 1, rank));
    letters.push_back(uniform(rng, 0, 1) ? i : -i);
  }
  return Word::from_letters(rank, letters);
}

Word random_commutator_word(Rng& rng, int rank, std::size_t max_length) {
  const Word u = random_word(rng, rank, static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_length / 2))));
  const AbelianVector ab = abelianize_vector(u);
  std::vector<Letter> tail;
  for (int i = 1; i <= rank; ++i) {
    const Exponent e = ab[static_cast<std::size_t>(i - 1)];
    for (Exponent t = 0; t < std::abs(e); ++t) tail.push_back(e > 0 ? -i : i);
  }
  std::shuffle(tail.begin(), tail.end(), rng);
  Word w = u;
  w.append(Word::from_letters(rank, tail));
  return w;
}

BasisWord random_basis_word(Rng& rng, int rank, std::size_t max_symbols, Exponent bound) {
  BasisWord out;
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_symbols)));
  for (std::size_t t = 0; t < count; ++t) {
    TSymbol s;
    s.i = static_cast<int>(uniform(rng, 1, rank - 1));
    s.j = static_cast<int>(uniform(rng, s.i + 1, rank));
    s.k = random_vector(rng, static_cast<std::size_t>(rank - s.i + 1), bound);
    out.push(s, uniform(rng, 0, 1) ? 1 : -1);
  }
  return out;
}

std::vector<Exponent> random_vector(Rng& rng, std::size_t len, Exponent bound) {
  std::vector<Exponent> v(len);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return v;
}

}  // namespace commgroup
