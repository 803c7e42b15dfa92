#include "commgroup/surface_rewriter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace commgroup {

namespace {

struct StreamLetter {
  Letter letter;
  bool spliced;
};

void push_y(std::vector<YLetter>& out, const YLetter& y) {
  if (!out.empty()) {
    const YLetter& last = out.back();
    if (last.j == y.j && last.a == y.a && last.b == y.b && last.sign == -y.sign) {
      out.pop_back();
      return;
    }
  }
  out.push_back(y);
}

// Letters of (x1 rho^-1)^e.
void append_twisted_power(std::vector<Letter>& out, const Word& rho, Exponent e) {
  const std::vector<Letter> rho_letters = rho.letters();
  for (Exponent t = 0; t < std::abs(e); ++t) {
    if (e > 0) {
      out.push_back(1);
      for (auto it = rho_letters.rbegin(); it != rho_letters.rend(); ++it) out.push_back(-*it);
    } else {
      out.insert(out.end(), rho_letters.begin(), rho_letters.end());
      out.push_back(-1);
    }
  }
}

void push_plain(std::vector<MixedLetter>& out, int j, int sign) {
  out.emplace_back(PlainLetter{j, sign});
}

void push_d(std::vector<MixedLetter>& out, DSymbol d, int sign) {
  out.emplace_back(DLetter{d, sign});
}

// V_b H_{a,b} as D-letters, in order.
std::vector<DLetter> tree_path(int j, Exponent a, Exponent b) {
  std::vector<DLetter> path;
  if (b > 0) {
    for (Exponent t = 0; t < b; ++t) path.push_back({{2, j, 0, t}, -1});
  } else {
    for (Exponent t = -1; t >= b; --t) path.push_back({{2, j, 0, t}, 1});
  }
  if (a > 0) {
    for (Exponent t = 0; t < a; ++t) path.push_back({{1, j, t, b}, -1});
  } else {
    for (Exponent t = -1; t >= a; --t) path.push_back({{1, j, t, b}, 1});
  }
  return path;
}

}  // namespace

YScan y_scan(const SurfacePresentation& p, const Word& w) {
  p.require_rank(w);
  YScan out;
  if (p.genus() < 2) {
    throw Error(ErrorCode::InvalidArgument, "y_scan needs genus >= 2");
  }
  std::deque<StreamLetter> stream;
  std::size_t original_x2 = 0;
  for (Letter l : w.letters()) {
    stream.push_back({l, false});
    if (std::abs(l) == 2) ++original_x2;
  }

  Exponent& A = out.A;
  Exponent& B = out.B;
  while (!stream.empty()) {
    const StreamLetter cur = stream.front();
    stream.pop_front();
    const int index = std::abs(cur.letter);
    const int eps = cur.letter > 0 ? 1 : -1;
    if (index == 1) {
      A = checked_add(A, eps);
    } else if (index >= 3) {
      push_y(out.letters, {index, checked_neg(A), checked_neg(B), eps});
    } else if (A == 0) {
      B = checked_add(B, eps);
    } else {
      COMMGROUP_CHECK(!cur.spliced, "a spliced x2 is always read at A = 0");
      COMMGROUP_CHECK(original_x2 > 0, "x2 crossings consume input letters");
      --original_x2;
      // x2^-1 x1 x2 = x1 rho^-1 in pi.
      std::vector<Letter> text;
      std::vector<bool> marks;
      if (eps > 0) {
        // x1^A x2 = x2 x1^A . x1^-A (x1 rho^-1)^A
        B = checked_add(B, 1);
        for (Exponent t = 0; t < std::abs(A); ++t) text.push_back(A > 0 ? -1 : 1);
        append_twisted_power(text, p.rho(), A);
        marks.assign(text.size(), false);
      } else {
        // x1^A x2^-1 = x1^A (x1 rho^-1)^-A x2^-1 x1^A
        append_twisted_power(text, p.rho(), checked_neg(A));
        text.push_back(-2);
        for (Exponent t = 0; t < std::abs(A); ++t) text.push_back(A > 0 ? 1 : -1);
        marks.assign(text.size(), false);
        marks[text.size() - 1 - static_cast<std::size_t>(std::abs(A))] = true;
      }
      for (std::size_t t = text.size(); t > 0; --t) {
        stream.push_front({text[t - 1], marks[t - 1]});
      }
    }
  }
  return out;
}

Word expand_yword(std::span<const YLetter> yw, int rank) {
  Word out(rank);
  for (const auto& y : yw) {
    Word conj = Word::generator(rank, 1, y.a);
    conj.append(2, y.b);
    const Word e = conjugate(Word::generator(rank, y.j, y.sign), conj);
    out.append(e);
  }
  return out;
}

Word phi_project(std::span<const YLetter> yw, int rank) {
  Word out(rank);
  for (const auto& y : yw) out.append(y.j, y.sign);
  return out;
}

Word expand_dsymbol(const DSymbol& d, int rank) {
  const int i = d.family == 1 ? 1 : 2;
  Word conj(rank);
  if (d.family == 1) conj.append(1, d.k1);
  conj.append(2, d.k2);
  return conjugate(commutator(Word::generator(rank, i), Word::generator(rank, d.j)), conj);
}

std::vector<MixedLetter> tree_substitute(std::span<const YLetter> yw) {
  std::vector<MixedLetter> out;
  for (const auto& y : yw) {
    const std::vector<DLetter> path = tree_path(y.j, y.a, y.b);
    if (y.sign > 0) {
      push_plain(out, y.j, 1);
      for (const auto& d : path) push_d(out, d.d, d.sign);
    } else {
      for (auto it = path.rbegin(); it != path.rend(); ++it) push_d(out, it->d, -it->sign);
      push_plain(out, y.j, -1);
    }
  }
  return out;
}

Word expand_mixed(std::span<const MixedLetter> mixed, int rank) {
  Word out(rank);
  for (const auto& m : mixed) {
    if (const auto* pl = std::get_if<PlainLetter>(&m)) {
      out.append(pl->j, pl->sign);
    } else {
      const auto& dl = std::get<DLetter>(m);
      const Word e = expand_dsymbol(dl.d, rank);
      out.append(dl.sign > 0 ? e : invert(e));
    }
  }
  return out;
}

std::vector<KernelLetter> kernel_rs(std::span<const MixedLetter> mixed, int rank) {
  // s^e u = u (s^u)^e, so each D-letter is conjugated by the plain suffix,
  // which equals the inverse of the plain prefix once the plain part cancels.
  std::vector<KernelLetter> out;
  Word prefix(rank);
  for (const auto& m : mixed) {
    if (const auto* pl = std::get_if<PlainLetter>(&m)) {
      prefix.append(pl->j, pl->sign);
    } else {
      const auto& dl = std::get<DLetter>(m);
      out.push_back({dl.d, invert(prefix), dl.sign});
    }
  }
  if (!prefix.empty()) {
    throw Error(ErrorCode::NotInKernel,
                "plain letters multiply to \"" + to_string(prefix) + "\", not the identity");
  }
  return out;
}

Word expand_kernel(std::span<const KernelLetter> kw, int rank) {
  Word out(rank);
  for (const auto& l : kw) {
    const Word e = conjugate(expand_dsymbol(l.d, rank), l.v);
    out.append(l.sign > 0 ? e : invert(e));
  }
  return out;
}

BasisWord SurfaceRewriter::normalize(const KernelLetter& l) {
  const int n = p_.rank();
  const AbelianVector ab = abelianize_vector(l.v);
  TSymbol sym;
  sym.j = l.d.j;
  if (l.d.family == 1) {
    sym.i = 1;
    sym.k = {l.d.k1, l.d.k2};
  } else {
    sym.i = 2;
    sym.k = {l.d.k2};
  }
  for (int t = 3; t <= n; ++t) sym.k.push_back(ab[static_cast<std::size_t>(t - 1)]);
  Word c = invert(sorted_word(n, ab, 3));
  c.append(l.v);
  return sandwich(free_.rewrite(c, 3), sym);
}

BasisWord SurfaceRewriter::rewrite(const Word& w) {
  p_.require_rank(w);
  const AbelianVector ab = abelianize_vector(w);
  if (std::any_of(ab.begin(), ab.end(), [](Exponent e) { return e != 0; })) {
    throw Error(ErrorCode::NotInCommutatorSubgroup,
                "\"" + to_string(w) + "\" has nonzero abelianization");
  }
  BasisWord out;
  // pi_1(Sigma_1) = Z^2, so its commutator subgroup is trivial.
  if (p_.genus() == 1) return out;

  const int n = p_.rank();
  YScan scan = y_scan(p_, w);
  COMMGROUP_CHECK(scan.A == 0 && scan.B == 0, "zero abelianization leaves no residual");

  const Word a_f = phi_project(scan.letters, n);
  std::vector<YLetter> b_k = scan.letters;
  const Word a_f_inv = invert(a_f);
  for (const Run& r : a_f_inv.runs()) {
    const int sign = r.exp > 0 ? 1 : -1;
    for (Exponent t = 0; t < std::abs(r.exp); ++t) push_y(b_k, {r.index, 0, 0, sign});
  }

  const std::vector<MixedLetter> mixed = tree_substitute(b_k);
  for (const auto& l : kernel_rs(mixed, n)) {
    BasisWord piece = normalize(l);
    out.append(l.sign > 0 ? piece : inverse(piece));
  }
  out.append(free_.rewrite(a_f, 3));
  return out;
}

BasisWord rewrite_surface(const SurfacePresentation& p, const Word& w) {
  return SurfaceRewriter(p.genus()).rewrite(w);
}

}  // namespace commgroup
