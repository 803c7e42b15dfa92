#ifndef COMMGROUP_WORD_HPP
#define COMMGROUP_WORD_HPP

// Reduced words in a free group of finite rank.
//
// A word is stored as a sequence of runs x_i^e (e != 0, adjacent indices
// distinct). Generators are indexed 1..rank. Every operation that takes two
// words requires them to live over the same rank; there is no implicit
// embedding (see embed()).

#include <compare>
#include <functional>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commgroup/error.hpp"

namespace commgroup {

using Exponent = std::int64_t;

/// Checked exponent arithmetic; throws ErrorCode::Overflow.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);
Exponent checked_neg(Exponent a);

struct Run {
  int index = 0;
  Exponent exp = 0;

  auto operator<=>(const Run&) const = default;
};

/// A signed letter: +i is x_i, -i is x_i^-1.
using Letter = int;

class Word {
 public:
  Word() = default;
  explicit Word(int rank);

  /// x_index^exp over the given rank.
  static Word generator(int rank, int index, Exponent exp = 1);
  /// Free reduction of a raw sequence of runs (exponent 0 runs allowed).
  static Word from_runs(int rank, std::span<const Run> runs);
  static Word from_letters(int rank, std::span<const Letter> letters);

  int rank() const { return rank_; }
  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  /// Number of letters, i.e. the sum of |exponent| over the runs.
  std::size_t length() const;
  std::vector<Letter> letters() const;

  /// Right-multiplies by x_index^exp, keeping the word reduced.
  void append(int index, Exponent exp);
  void append(const Word& other);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  int rank_ = 0;
  std::vector<Run> runs_;
};

using AbelianVector = std::vector<Exponent>;

Word reduce(int rank, std::span<const Letter> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, Exponent e);
/// y^-1 x y.
Word conjugate(const Word& x, const Word& y);
/// x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);
/// Exponent-sum vector of length rank (entry i-1 is the x_i coordinate).
AbelianVector abelianize_vector(const Word& w);
/// Deletes every run whose index lies in `drop`, then reduces.
Word retract_delete(const Word& w, const std::set<int>& drop);
/// Sorted word x_first^{v[first-1]} ... x_rank^{v[rank-1]}.
Word sorted_word(int rank, std::span<const Exponent> v, int first = 1);
/// Re-expresses w over `new_rank`, shifting every index by `offset`.
Word embed(const Word& w, int new_rank, int offset = 0);

/// Canonical text: `x3^-2 x1`, exponent 1 omitted, identity is "".
std::string to_string(const Word& w);
/// Parses the word grammar `('x' INT ('^' SIGNED_INT)?)*`.
Word parse_word(int rank, std::string_view text);

void require_same_rank(const Word& u, const Word& v);

/// Calls fn on every point of [-bound, bound]^len in lexicographic order.
void for_each_box_point(std::size_t len, Exponent bound,
                        const std::function<void(const std::vector<Exponent>&)>& fn);

}  // namespace commgroup

#endif
