#ifndef COMMGROUP_BASIS_HPP
#define COMMGROUP_BASIS_HPP

// Tomaszewski generators [x_i,x_j]^{x_i^{k_i} ... x_n^{k_n}} and words in them.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "commgroup/word.hpp"

namespace commgroup {

struct TSymbol {
  int i = 1;
  int j = 2;
  /// Conjugator exponents for x_i, ..., x_n (n - i + 1 entries).
  std::vector<Exponent> k;

  int rank() const { return i + static_cast<int>(k.size()) - 1; }

  auto operator<=>(const TSymbol&) const = default;
  bool operator==(const TSymbol&) const = default;
};

/// Throws InvalidSymbol unless 1 <= i < j <= rank and k has rank-i+1 entries.
void validate_symbol(const TSymbol& s, int rank);

struct BasisLetter {
  TSymbol symbol;
  int sign = 1;

  auto operator<=>(const BasisLetter&) const = default;
  bool operator==(const BasisLetter&) const = default;
};

/// Freely reduced word in the Tomaszewski symbols.
class BasisWord {
 public:
  BasisWord() = default;

  const std::vector<BasisLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Appends one letter, cancelling against the last letter if inverse.
  void push(const TSymbol& s, int sign);
  void push(const BasisLetter& l) { push(l.symbol, l.sign); }
  void append(const BasisWord& other);

  bool operator==(const BasisWord&) const = default;

 private:
  std::vector<BasisLetter> letters_;
};

BasisWord inverse(const BasisWord& w);
/// w^-1 s w reduced.
BasisWord sandwich(const BasisWord& w, const TSymbol& s);

/// u^-1 [x_i,x_j] u with u = x_i^{k_i} ... x_n^{k_n}.
Word expand_symbol(const TSymbol& s);
Word expand(const BasisWord& bw, int rank);

/// All symbols over rank n whose exponent entries lie in [-bound, bound].
std::vector<TSymbol> free_basis_enumerate(int n, Exponent bound);
/// Rank-2g symbols with (i,j) != (1,2), entries in [-bound, bound].
std::vector<TSymbol> surface_basis_enumerate(int genus, Exponent bound);

/// `C[i,j](k_i,...,k_n)`.
std::string to_string(const TSymbol& s);
TSymbol parse_symbol(std::string_view text);
/// One line per letter: `+ C[1,2](0,0)`.
std::string to_string(const BasisWord& bw);
/// Parses the line format; blank lines are ignored.
BasisWord parse_basis_word(std::string_view text);

}  // namespace commgroup

#endif
