#ifndef COMMGROUP_RANDOM_HPP
#define COMMGROUP_RANDOM_HPP

// Seeded generators for random test inputs. Each named stream is derived from
// the global seed, so suites stay reproducible independently of each other.

#include <cstdint>
#include <random>
#include <string_view>

#include "commgroup/basis.hpp"
#include "commgroup/word.hpp"

namespace commgroup {

using Rng = std::mt19937_64;

Rng make_stream(std::uint64_t seed, std::string_view name);

/// Uniform integer in [lo, hi].
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Reduced word from `length` random letters (it may reduce to fewer).
Word random_word(Rng& rng, int rank, std::size_t length);

/// Zero-abelianization word of reduced length <= max_length: a random word of
/// length <= max_length/2 followed by a shuffle of the letters cancelling
/// its exponent sums.
Word random_commutator_word(Rng& rng, int rank, std::size_t max_length);

/// Freely reduced basis word with up to max_symbols letters and exponent
/// entries in [-bound, bound].
BasisWord random_basis_word(Rng& rng, int rank, std::size_t max_symbols, Exponent bound);

/// Point of [-bound, bound]^len.
std::vector<Exponent> random_vector(Rng& rng, std::size_t len, Exponent bound);

}  // namespace commgroup

#endif
