#include "commgroup/free_rewriter.hpp"

#include <algorithm>
#include <cstdlib>

namespace commgroup {

namespace {

void require_sub_alphabet(const Word& w, int head) {
  for (const Run& r : w.runs()) {
    if (r.index < head) {
      throw Error(ErrorCode::Alphabet, "x" + std::to_string(r.index) +
                                           " lies outside the sub-alphabet starting at x" +
                                           std::to_string(head));
    }
  }
}

void push_reduced(std::vector<SignedSSymbol>& out, SSymbol s, int sign) {
  if (!out.empty() && out.back().sign == -sign && out.back().symbol == s) {
    out.pop_back();
    return;
  }
  out.push_back({std::move(s), sign});
}

// Schreier generator of the x_j-edge ending at vertex a, at level m, raised to
// `sign`.
void emit_rung(std::vector<SignedSSymbol>& out, int head, int j, const Word& a,
               Exponent level, int sign) {
  if (level == 0) return;
  const Word u = invert(a);
  std::vector<std::pair<Exponent, int>> factors;
  if (level > 0) {
    for (Exponent t = 1; t <= level; ++t) factors.emplace_back(-t, 1);
  } else {
    for (Exponent t = 0; t < -level; ++t) factors.emplace_back(t, -1);
  }
  if (sign < 0) {
    std::reverse(factors.begin(), factors.end());
    for (auto& f : factors) f.second = -f.second;
  }
  for (const auto& [k, s] : factors) push_reduced(out, SSymbol{head, j, k, u}, s);
}

struct Rung {
  int j;
  Word a;
  int sign;
};

// Edges of the geodesic from the root to v in the Cayley tree of F(T).
std::vector<Rung> path_rungs(const Word& v) {
  std::vector<Rung> rungs;
  Word cur(v.rank());
  for (const Run& r : v.runs()) {
    const Exponent step = r.exp > 0 ? 1 : -1;
    for (Exponent t = 0; t < std::abs(r.exp); ++t) {
      if (step > 0) {
        cur.append(r.index, 1);
        rungs.push_back({r.index, cur, 1});
      } else {
        rungs.push_back({r.index, cur, -1});
        cur.append(r.index, -1);
      }
    }
  }
  return rungs;
}

}  // namespace

ZWord rs_scan_K(const Word& b, int head) {
  if (!retract_delete(b, {head}).empty()) {
    throw Error(ErrorCode::NotInNormalClosure,
                "\"" + to_string(b) + "\" is not in the normal closure of x" +
                    std::to_string(head));
  }
  require_sub_alphabet(b, head);
  ZWord out;
  Word v(b.rank());
  for (const Run& r : b.runs()) {
    if (r.index != head) {
      v.append(r.index, r.exp);
      continue;
    }
    const int sign = r.exp > 0 ? 1 : -1;
    for (Exponent t = 0; t < std::abs(r.exp); ++t) out.push_back({v, sign});
  }
  return out;
}

Word expand_zword(const ZWord& zw, int rank, int head) {
  Word out(rank);
  for (const auto& z : zw) {
    require_same_rank(out, z.vertex);
    out.append(z.vertex);
    out.append(head, z.sign);
    out.append(invert(z.vertex));
  }
  return out;
}

std::vector<SignedSSymbol> express_zero_sum(const ZWord& zw, int head) {
  Exponent total = 0;
  for (const auto& z : zw) total += z.sign;
  if (total != 0) {
    throw Error(ErrorCode::NonzeroExponentSum,
                "z-word has exponent sum " + std::to_string(total));
  }
  std::vector<SignedSSymbol> out;
  Exponent level = 0;
  for (const auto& z : zw) {
    require_sub_alphabet(z.vertex, head + 1);
    const std::vector<Rung> rungs = path_rungs(z.vertex);
    // Out along v at the current level, up or down one x_head edge, back home.
    for (const auto& r : rungs) emit_rung(out, head, r.j, r.a, level, r.sign);
    level += z.sign;
    for (auto it = rungs.rbegin(); it != rungs.rend(); ++it) {
      emit_rung(out, head, it->j, it->a, level, -it->sign);
    }
  }
  return out;
}

Word expand_ssymbol(const SSymbol& s) {
  const int n = s.u.rank();
  Word conj = Word::generator(n, s.head, s.k);
  conj.append(s.u);
  return conjugate(commutator(Word::generator(n, s.head), Word::generator(n, s.j)), conj);
}

const BasisWord& FreeRewriter::correction(const Word& c, int head) {
  auto key = std::make_pair(head, c);
  auto it = corrections_.find(key);
  if (it != corrections_.end()) return it->second;
  BasisWord w = rewrite(c, head);
  return corrections_.emplace(std::move(key), std::move(w)).first->second;
}

BasisWord FreeRewriter::normalize_conjugator(const SSymbol& s) {
  const int n = s.u.rank();
  require_sub_alphabet(s.u, s.head + 1);
  if (s.j <= s.head || s.j > n) {
    throw Error(ErrorCode::InvalidSymbol, "conjugated generator index out of range");
  }
  const AbelianVector ab = abelianize_vector(s.u);
  TSymbol sym{s.head, s.j, {s.k}};
  for (int t = s.head + 1; t <= n; ++t) sym.k.push_back(ab[static_cast<std::size_t>(t - 1)]);
  if (s.head + 1 > n) return sandwich(BasisWord{}, sym);
  // u = ubar c with c in [F(T),F(T)].
  Word c = invert(sorted_word(n, ab, s.head + 1));
  c.append(s.u);
  if (c.empty()) return sandwich(BasisWord{}, sym);
  return sandwich(correction(c, s.head + 1), sym);
}

BasisWord FreeRewriter::rewrite(const Word& w, int head) {
  const int n = w.rank();
  require_sub_alphabet(w, head);
  const AbelianVector ab = abelianize_vector(w);
  if (std::any_of(ab.begin(), ab.end(), [](Exponent e) { return e != 0; })) {
    throw Error(ErrorCode::NotInCommutatorSubgroup,
                "\"" + to_string(w) + "\" has nonzero abelianization");
  }
  BasisWord out;
  if (w.empty() || head >= n) return out;

  Word a = retract_delete(w, {head});
  Word b = multiply(w, invert(a));
  for (const auto& s : express_zero_sum(rs_scan_K(b, head), head)) {
    BasisWord piece = normalize_conjugator(s.symbol);
    out.append(s.sign > 0 ? piece : inverse(piece));
  }
  out.append(rewrite(a, head + 1));
  return out;
}

BasisWord rewrite(const Word& w) { return FreeRewriter{}.rewrite(w, 1); }

BasisWord normalize_conjugator(const SSymbol& s) {
  return FreeRewriter{}.normalize_conjugator(s);
}

}  // namespace commgroup
