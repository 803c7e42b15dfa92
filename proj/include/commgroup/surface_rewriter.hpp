#ifndef COMMGROUP_SURFACE_REWRITER_HPP
#define COMMGROUP_SURFACE_REWRITER_HPP

// Rewriting elements of [pi,pi], pi = pi_1(Sigma_g), in the basis of symbols
// C[i,j](k) with (i,j) != (1,2).
//
// Pipeline: y_scan writes w as a product of conjugates x_j^{x1^a x2^b}
// (j >= 3) followed by x2^B x1^A; the only use of the surface relation is
// there. Everything after that is exact in the free group F_2g:
// phi_project / tree_substitute / kernel_rs / conjugator normalization, with
// the [F,F] tail (F = <x3..x2g>) handed to the free rewriter.

#include <span>
#include <variant>
#include <vector>

#include "commgroup/basis.hpp"
#include "commgroup/free_rewriter.hpp"
#include "commgroup/surface.hpp"

namespace commgroup {

/// (x_j^{x1^a x2^b})^sign = (x2^-b x1^-a x_j x1^a x2^b)^sign.
struct YLetter {
  int j = 3;
  Exponent a = 0;
  Exponent b = 0;
  int sign = 1;

  bool operator==(const YLetter&) const = default;
};

struct YScan {
  std::vector<YLetter> letters;
  /// Residual coset normal form x2^B x1^A.
  Exponent A = 0;
  Exponent B = 0;
};

/// Scans w keeping the prefix equal (in pi) to (Y-letters) x2^B x1^A.
YScan y_scan(const SurfacePresentation& p, const Word& w);

Word expand_yword(std::span<const YLetter> yw, int rank);
/// Sends each Y-letter to x_j^sign.
Word phi_project(std::span<const YLetter> yw, int rank);

/// family 1: [x1,x_j]^{x1^k1 x2^k2}; family 2: [x2,x_j]^{x2^k2}.
struct DSymbol {
  int family = 1;
  int j = 3;
  Exponent k1 = 0;
  Exponent k2 = 0;

  auto operator<=>(const DSymbol&) const = default;
  bool operator==(const DSymbol&) const = default;
};

Word expand_dsymbol(const DSymbol& d, int rank);

struct PlainLetter {
  int j = 3;
  int sign = 1;
  bool operator==(const PlainLetter&) const = default;
};
struct DLetter {
  DSymbol d;
  int sign = 1;
  bool operator==(const DLetter&) const = default;
};
using MixedLetter = std::variant<PlainLetter, DLetter>;

/// Moves each Y-letter to the root (0,0) of the tree made of every horizontal
/// edge (a,b)-(a+1,b) and the vertical axis (0,b)-(0,b+1):
///   Y(j;a,b) = x_j * V_b * H_{a,b},
///   V_b = D2(0)^-1 ... D2(b-1)^-1   or  D2(-1) ... D2(b)      (b < 0),
///   H_{a,b} = D1(0,b)^-1 ... D1(a-1,b)^-1  or  D1(-1,b) ... D1(a,b)  (a < 0).
std::vector<MixedLetter> tree_substitute(std::span<const YLetter> yw);
Word expand_mixed(std::span<const MixedLetter> mixed, int rank);

/// D^v = v^-1 D v.
struct KernelLetter {
  DSymbol d;
  Word v;
  int sign = 1;
  bool operator==(const KernelLetter&) const = default;
};

/// Pulls the plain letters to the left; the plain part must cancel.
std::vector<KernelLetter> kernel_rs(std::span<const MixedLetter> mixed, int rank);
Word expand_kernel(std::span<const KernelLetter> kw, int rank);

class SurfaceRewriter {
 public:
  explicit SurfaceRewriter(int genus) : p_(genus) {}

  const SurfacePresentation& presentation() const { return p_; }

  BasisWord rewrite(const Word& w);
  /// D^v as a basis word (sorted conjugator plus [F,F] correction).
  BasisWord normalize(const KernelLetter& l);

 private:
  SurfacePresentation p_;
  FreeRewriter free_;
};

BasisWord rewrite_surface(const SurfacePresentation& p, const Word& w);

}  // namespace commgroup

#endif
