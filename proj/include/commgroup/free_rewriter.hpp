#ifndef COMMGROUP_FREE_REWRITER_HPP
#define COMMGROUP_FREE_REWRITER_HPP

// Rewriting elements of [F_n,F_n] in the Tomaszewski basis.
//
// The recursion peels off one generator at a time. Write h for the current
// head generator (h = 1 at the top level) and T = {x_{h+1}, ..., x_n}.
// Every w in [F,F] splits as w = b a where a is w with x_h deleted (so a lies
// in [F(T),F(T)] and is handled recursively) and b lies in the normal closure
// K of x_h. Inside K, b is read as a word in the conjugates z_v = v x_h v^-1
// (v in F(T)); the zero-exponent-sum words in the z_v are rewritten in the
// generators [x_h,x_j]^{x_h^k u}; finally each conjugator u is replaced by its
// sorted form, the difference being absorbed by a recursive rewrite.

#include <map>
#include <vector>

#include "commgroup/basis.hpp"
#include "commgroup/word.hpp"

namespace commgroup {

/// z_v^sign with z_v = v x_h v^-1.
struct ZLetter {
  Word vertex;
  int sign = 1;

  bool operator==(const ZLetter&) const = default;
};
using ZWord = std::vector<ZLetter>;

/// [x_head, x_j]^{x_head^k u} with u a word in x_{head+1}..x_n.
struct SSymbol {
  int head = 1;
  int j = 2;
  Exponent k = 0;
  Word u;

  auto operator<=>(const SSymbol&) const = default;
  bool operator==(const SSymbol&) const = default;
};

struct SignedSSymbol {
  SSymbol symbol;
  int sign = 1;

  bool operator==(const SignedSSymbol&) const = default;
};

/// Scans b (which must die when x_head is deleted) and emits one z-letter per
/// x_head letter, tagged with the x_head-free prefix at that point.
ZWord rs_scan_K(const Word& b, int head = 1);

/// Product of the z-letters as a plain word.
Word expand_zword(const ZWord& zw, int rank, int head = 1);

/// Rewrites a zero-exponent-sum z-word in the generators [x_head,x_j]^{x_head^k u}.
///
/// The z-word is a closed loop in the cover of the rose with vertex set
/// F(T) x Z. With the maximal tree made of all x_head-edges plus the level-0
/// copy of the Cayley tree of F(T), the Schreier generator of the x_j-edge
/// from (b, m) to (a, m), a = b x_j, is a D_m a^-1 where
/// D_m = x_j^-1 x_head^m x_j x_head^-m. D_m telescopes into conjugates
/// c_k = x_head^-k [x_head,x_j] x_head^k:
///   D_m = c_{-1} c_{-2} ... c_{-m}           (m > 0)
///   D_m = c_0^-1 c_1^-1 ... c_{p-1}^-1       (m = -p < 0)
/// and a c_k a^-1 = [x_head,x_j]^{x_head^k a^-1}.
std::vector<SignedSSymbol> express_zero_sum(const ZWord& zw, int head = 1);

Word expand_ssymbol(const SSymbol& s);

class FreeRewriter {
 public:
  /// Rewrites w over generators x_head..x_n; symbols come out with i >= head.
  BasisWord rewrite(const Word& w, int head = 1);

  /// Moves the conjugator of s to sorted form, absorbing the commutator
  /// correction with a recursive rewrite.
  BasisWord normalize_conjugator(const SSymbol& s);

 private:
  const BasisWord& correction(const Word& c, int head);

  std::map<std::pair<int, Word>, BasisWord> corrections_;
};

BasisWord rewrite(const Word& w);
BasisWord normalize_conjugator(const SSymbol& s);

}  // namespace commgroup

#endif
