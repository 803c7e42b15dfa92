#include "commgroup/module.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "commgroup/free_rewriter.hpp"
#include "commgroup/surface_rewriter.hpp"

namespace commgroup {

std::string to_string(ModuleCase c) { return c == ModuleCase::Free ? "free" : "surface"; }

ModuleElement::ModuleElement(int rank, ModuleCase c) : rank_(rank), case_(c) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "module rank must be >= 1");
  if (c == ModuleCase::Surface && rank % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "surface modules have even rank");
  }
}

Integer ModuleElement::coefficient(const TSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ModuleElement::add_term(const TSymbol& s, const Integer& c) {
  validate_symbol(s, rank_);
  if (case_ == ModuleCase::Surface && s.i == 1 && s.j == 2) {
    throw Error(ErrorCode::InvalidSymbol, "C[1,2] symbols are not surface coordinates");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ModuleElement::require_compatible(const ModuleElement& o) const {
  if (rank_ != o.rank_ || case_ != o.case_) {
    throw Error(ErrorCode::InvalidArgument, "module elements over different modules");
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) coeff *= c;
  return *this;
}

ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
ModuleElement operator*(ModuleElement a, const Integer& c) { return a *= c; }

std::string to_string(const ModuleElement& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : m.terms()) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (mag != 1) os << mag.get_str() << ' ';
    os << to_string(s);
  }
  return os.str();
}

ModuleElement count_symbols(const BasisWord& bw, int rank, ModuleCase c) {
  ModuleElement out(rank, c);
  for (const auto& l : bw.letters()) out.add_term(l.symbol, l.sign);
  return out;
}

ModuleElement abelianize_free(const Word& w) {
  return count_symbols(rewrite(w), w.rank(), ModuleCase::Free);
}

ModuleElement abelianize_surface(const SurfacePresentation& p, const Word& w) {
  return count_symbols(rewrite_surface(p, w), p.rank(), ModuleCase::Surface);
}

namespace {

void require_vector(std::span<const Exponent> h, int n) {
  if (static_cast<int>(h.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "exponent vector has " + std::to_string(h.size()) +
                                                " entries, expected " + std::to_string(n));
  }
}

TSymbol base_symbol(int n, int i, int j) {
  return TSymbol{i, j, std::vector<Exponent>(static_cast<std::size_t>(n - i + 1), 0)};
}

}  // namespace

ModuleElement braces(int n, int i, int j, std::span<const Exponent> h) {
  if (i < 1 || i >= j || j > n) {
    throw Error(ErrorCode::InvalidArgument, "braces needs 1 <= i < j <= n");
  }
  require_vector(h, n);
  ModuleElement base(n, ModuleCase::Free);
  base.add_term(base_symbol(n, i, j), 1);
  return act(LaurentPoly::monomial(n, h), base);
}

ModuleElement act(const LaurentPoly& p, const ModuleElement& m) {
  const int n = m.rank();
  if (p.rank() != n) {
    throw Error(ErrorCode::InvalidArgument, "polynomial rank " + std::to_string(p.rank()) +
                                                " does not match module rank " +
                                                std::to_string(n));
  }
  ModuleElement out(n, m.module_case());
  FreeRewriter free_rewriter;
  std::optional<SurfaceRewriter> surface_rewriter;
  if (m.module_case() == ModuleCase::Surface) surface_rewriter.emplace(n / 2);

  for (const auto& [e, pc] : p.terms()) {
    for (const auto& [s, c] : m.terms()) {
      const Integer coeff = pc * c;
      const auto below = e.begin() + (s.i - 1);
      if (std::all_of(e.begin(), below, [](Exponent x) { return x == 0; })) {
        // The conjugator stays sorted: only the exponents shift.
        TSymbol shifted = s;
        for (std::size_t t = 0; t < shifted.k.size(); ++t) {
          shifted.k[t] = checked_add(shifted.k[t], e[static_cast<std::size_t>(s.i - 1) + t]);
        }
        out.add_term(shifted, coeff);
        continue;
      }
      const Word w = conjugate(expand_symbol(s), sorted_word(n, e, 1));
      const BasisWord bw = surface_rewriter ? surface_rewriter->rewrite(w)
                                            : free_rewriter.rewrite(w, 1);
      out += count_symbols(bw, n, m.module_case()) * coeff;
    }
  }
  return out;
}

FoxVector fox_vector(const Word& w) {
  const int n = w.rank();
  FoxVector out(static_cast<std::size_t>(n), LaurentPoly(n));
  Monomial prefix(static_cast<std::size_t>(n), 0);
  for (const Run& r : w.runs()) {
    const std::size_t i = static_cast<std::size_t>(r.index - 1);
    for (Exponent t = 0; t < std::abs(r.exp); ++t) {
      if (r.exp > 0) {
        out[i].add_term(prefix, 1);
        ++prefix[i];
      } else {
        --prefix[i];
        out[i].add_term(prefix, -1);
      }
    }
  }
  return out;
}

LaurentPoly fox_identity(const FoxVector& f) {
  const int n = static_cast<int>(f.size());
  LaurentPoly out(n);
  for (int i = 1; i <= n; ++i) {
    out += f[static_cast<std::size_t>(i - 1)] * LaurentPoly::t_minus_one(n, i);
  }
  return out;
}

FoxVector magnus_image(const ModuleElement& m) {
  if (m.module_case() != ModuleCase::Free) {
    throw Error(ErrorCode::InvalidArgument, "the Magnus image is defined for the free case");
  }
  const int n = m.rank();
  FoxVector out(static_cast<std::size_t>(n), LaurentPoly(n));
  for (const auto& [s, c] : m.terms()) {
    const FoxVector f = fox_vector(expand_symbol(s));
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += f[t] * c;
  }
  return out;
}

ModuleElement koszul_relation_check(int n, int i, int j, int k, std::span<const Exponent> h) {
  if (!(1 <= i && i < j && j < k && k <= n)) {
    throw Error(ErrorCode::InvalidArgument, "Koszul relation needs 1 <= i < j < k <= n");
  }
  require_vector(h, n);
  ModuleElement out = act(LaurentPoly::t_minus_one(n, i), braces(n, j, k, h));
  out -= act(LaurentPoly::t_minus_one(n, j), braces(n, i, k, h));
  out += act(LaurentPoly::t_minus_one(n, k), braces(n, i, j, h));
  return out;
}

ModuleElement filtration_project(const ModuleElement& m) {
  if (m.module_case() != ModuleCase::Free) {
    throw Error(ErrorCode::InvalidArgument, "filtration_project acts on the free case");
  }
  if (m.rank() < 3) {
    // [F_1,F_1] is trivial.
    if (m.rank() == 2) return ModuleElement(1, ModuleCase::Free);
    throw Error(ErrorCode::InvalidArgument, "filtration_project needs rank >= 2");
  }
  ModuleElement out(m.rank() - 1, ModuleCase::Free);
  for (const auto& [s, c] : m.terms()) {
    if (s.i == 1) continue;
    out.add_term(TSymbol{s.i - 1, s.j - 1, s.k}, c);
  }
  return out;
}

ModuleElement relator_class(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be >= 1");
  const int n = 2 * genus;
  ModuleElement out(n, ModuleCase::Free);
  for (int t = 1; t <= genus; ++t) out.add_term(base_symbol(n, 2 * t - 1, 2 * t), 1);
  return out;
}

ModuleElement surface_quotient(const ModuleElement& m) {
  if (m.module_case() != ModuleCase::Free || m.rank() % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "surface_quotient needs a free-case element of even rank");
  }
  const int n = m.rank();
  SurfaceRewriter rewriter(n / 2);
  ModuleElement out(n, ModuleCase::Surface);
  for (const auto& [s, c] : m.terms()) {
    out += count_symbols(rewriter.rewrite(expand_symbol(s)), n, ModuleCase::Surface) * c;
  }
  return out;
}

}  // namespace commgroup
