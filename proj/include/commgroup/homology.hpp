#ifndef COMMGROUP_HOMOLOGY_HPP
#define COMMGROUP_HOMOLOGY_HPP

// Homology of Z^n (resp. Z^2g) with coefficients in [F_n,F_n]^ab (resp.
// [pi,pi]^ab), computed from free resolutions specialized at t = 1.
//
// [F_n,F_n]^ab is resolved by the Koszul complex of (t_1-1, ..., t_n-1)
// truncated at Lambda^2; [pi,pi]^ab is its quotient by the cyclic submodule
// generated by the relator class, resolved by the mapping cone of
// R -> Lambda^2 R^2g, 1 -> lambda.

#include <cstddef>
#include <vector>

#include "commgroup/laurent.hpp"
#include "commgroup/smith.hpp"

namespace commgroup {

/// C_0 <- C_1 <- ... <- C_top; differential(k) : C_k -> C_{k-1} for k >= 1.
class ChainComplex {
 public:
  /// differentials[k-1] is d_k; checks shapes and d_k d_{k+1} = 0.
  ChainComplex(std::vector<std::size_t> dims, std::vector<IntegerMatrix> differentials);

  int top() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int k) const;
  const IntegerMatrix& differential(int k) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<IntegerMatrix> d_;
};

struct HomologyResult {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  bool operator==(const HomologyResult&) const = default;
};

HomologyResult homology_at(const ChainComplex& c, int k);

/// Dense matrix of Laurent polynomials.
struct LaurentMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<LaurentPoly> entries;

  LaurentMatrix(std::size_t r, std::size_t c, int rank);
  LaurentPoly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool is_zero() const;
  IntegerMatrix augment() const;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

/// Subsets of {1..n} of size p in lexicographic order.
std::vector<std::vector<int>> wedge_basis(int n, int p);

/// Koszul differential Lambda^p R^n -> Lambda^{p-1} R^n over R = Z[Z^n]:
/// e_S -> sum_m (-1)^m (t_{s_m} - 1) e_{S - s_m}.
LaurentMatrix koszul_differential(int n, int p);

/// H_k for k <= max_k, built with C_k = Lambda^{k+2} Z^n, k = 0..max_k+1.
ChainComplex free_case_complex(int n, int max_k);

/// Coordinates of sum_i e_{2i-1} ^ e_{2i} in the Lambda^2 basis of rank 2g.
std::vector<Integer> symplectic_form(int genus);

/// Mapping cone: C_0 = Lambda^2, C_1 = Lambda^3 + Z, C_k = Lambda^{k+2}.
ChainComplex surface_case_complex(int genus, int max_k);

/// Whether the classes t^h {r}, h in [-box, box]^2g, are linearly independent
/// in [F_2g,F_2g]^ab.
bool injectivity_truncation_check(int genus, Exponent box);

}  // namespace commgroup

#endif
