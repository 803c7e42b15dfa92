#ifndef COMMGROUP_SURFACE_HPP
#define COMMGROUP_SURFACE_HPP

// The closed surface group pi_1(Sigma_g) = < x1..x2g | [x1,x2]...[x2g-1,x2g] >
// and its word problem.

#include <map>
#include <utility>
#include <vector>

#include "commgroup/word.hpp"

namespace commgroup {

/// [x1,x2][x3,x4]...[x2g-1,x2g] over rank 2g.
Word surface_relator(int genus);

class SurfacePresentation {
 public:
  explicit SurfacePresentation(int genus);

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  const Word& relator() const { return relator_; }
  /// [x3,x4]...[x2g-1,x2g]; in the group [x1,x2] = rho^-1.
  const Word& rho() const { return rho_; }

  /// Cyclic rotations of the relator and of its inverse, as letters.
  const std::vector<std::vector<Letter>>& rotations() const { return rotations_; }

  /// For every subword P of a rotation R = P Q with |P| > |R|/2, maps P to
  /// Q^-1. Pieces are single letters, so P determines R.
  const std::map<std::vector<Letter>, std::vector<Letter>>& dehn_rules() const {
    return rules_;
  }

  void require_rank(const Word& w) const;

 private:
  int genus_;
  Word relator_;
  Word rho_;
  std::vector<std::vector<Letter>> rotations_;
  std::map<std::vector<Letter>, std::vector<Letter>> rules_;
};

/// Returns (core, conj) with w = conj^-1 core conj and core cyclically reduced.
std::pair<Word, Word> cyclically_reduce(const Word& w);

/// Dehn's algorithm for g >= 2, abelianization for g = 1.
bool is_trivial(const SurfacePresentation& p, const Word& w);

/// Residue of Dehn's algorithm: a word equal to w in the group containing no
/// subword of more than half of a relator rotation. Empty iff w = 1 (g >= 2).
Word dehn_reduce(const SurfacePresentation& p, const Word& w);

bool surface_equal(const SurfacePresentation& p, const Word& w1, const Word& w2);

}  // namespace commgroup

#endif
