#ifndef COMMGROUP_MODULE_HPP
#define COMMGROUP_MODULE_HPP

// [F_n,F_n]^ab and [pi,pi]^ab (pi the genus-g surface group) as modules over
// Z[Z^n], in the coordinates given by the rewriting bases. t^h acts on the
// class of c by conjugation, c -> (x1^h1 ... xn^hn)^-1 c (x1^h1 ... xn^hn).

#include <map>
#include <span>
#include <string>
#include <vector>

#include "commgroup/basis.hpp"
#include "commgroup/laurent.hpp"
#include "commgroup/surface.hpp"

namespace commgroup {

enum class ModuleCase { Free, Surface };

std::string to_string(ModuleCase c);

class ModuleElement {
 public:
  ModuleElement() = default;
  /// Surface elements have even rank 2g.
  ModuleElement(int rank, ModuleCase c);

  int rank() const { return rank_; }
  ModuleCase module_case() const { return case_; }
  const std::map<TSymbol, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const TSymbol& s) const;

  /// Validates the symbol against the rank and, in the surface case, (i,j) != (1,2).
  void add_term(const TSymbol& s, const Integer& c);

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement& operator*=(const Integer& c);

  bool operator==(const ModuleElement&) const = default;

 private:
  void require_compatible(const ModuleElement& o) const;

  int rank_ = 0;
  ModuleCase case_ = ModuleCase::Free;
  std::map<TSymbol, Integer> terms_;
};

ModuleElement operator+(ModuleElement a, const ModuleElement& b);
ModuleElement operator-(ModuleElement a, const ModuleElement& b);
ModuleElement operator*(ModuleElement a, const Integer& c);

/// `-2 C[1,2](0,0) + C[1,3](1,0,0)`; zero prints as "0".
std::string to_string(const ModuleElement& m);

/// Signed symbol count of a basis word.
ModuleElement count_symbols(const BasisWord& bw, int rank, ModuleCase c);

ModuleElement abelianize_free(const Word& w);
ModuleElement abelianize_surface(const SurfacePresentation& p, const Word& w);

/// Class of [x_i,x_j]^{x1^h1 ... xn^hn}; h has n entries.
ModuleElement braces(int n, int i, int j, std::span<const Exponent> h);

/// Module action; p must have the rank of m.
ModuleElement act(const LaurentPoly& p, const ModuleElement& m);

/// Abelianized Fox derivatives (d w / d x_i) for i = 1..n.
using FoxVector = std::vector<LaurentPoly>;

FoxVector fox_vector(const Word& w);
/// Sum_i fox_i (t_i - 1); equals t^{ab(w)} - 1.
LaurentPoly fox_identity(const FoxVector& f);
/// Magnus image of a free-case element: sum of c * fox_vector(expand(s)).
FoxVector magnus_image(const ModuleElement& m);

/// (t_i-1){x_j,x_k}^h - (t_j-1){x_i,x_k}^h + (t_k-1){x_i,x_j}^h, which is zero.
ModuleElement koszul_relation_check(int n, int i, int j, int k, std::span<const Exponent> h);

/// Kills the i = 1 symbols and shifts the rest down to rank n-1.
ModuleElement filtration_project(const ModuleElement& m);

/// Class of the surface relator in [F_2g,F_2g]^ab.
ModuleElement relator_class(int genus);

/// Free-case element of rank 2g mapped to [pi,pi]^ab.
ModuleElement surface_quotient(const ModuleElement& m);

}  // namespace commgroup

#endif
