#include "commgroup/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace commgroup {

Word surface_relator(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be >= 1");
  const int rank = 2 * genus;
  Word r(rank);
  for (int i = 1; i <= genus; ++i) {
    r.append(commutator(Word::generator(rank, 2 * i - 1), Word::generator(rank, 2 * i)));
  }
  return r;
}

SurfacePresentation::SurfacePresentation(int genus)
    : genus_(genus), relator_(surface_relator(genus)), rho_(2 * genus) {
  for (int i = 2; i <= genus; ++i) {
    rho_.append(commutator(Word::generator(rank(), 2 * i - 1),
                           Word::generator(rank(), 2 * i)));
  }

  const std::vector<Letter> base = relator_.letters();
  const std::vector<Letter> inv = invert(relator_).letters();
  const std::size_t len = base.size();
  for (const auto* src : {&base, &inv}) {
    for (std::size_t s = 0; s < len; ++s) {
      std::vector<Letter> rot(len);
      for (std::size_t t = 0; t < len; ++t) rot[t] = (*src)[(s + t) % len];
      rotations_.push_back(std::move(rot));
    }
  }

  // P Q = 1 with |P| > len/2: rewrite P as Q^-1.
  for (const auto& rot : rotations_) {
    for (std::size_t plen = len / 2 + 1; plen <= len; ++plen) {
      std::vector<Letter> prefix(rot.begin(), rot.begin() + static_cast<long>(plen));
      std::vector<Letter> replacement;
      for (std::size_t t = len; t > plen; --t) replacement.push_back(-rot[t - 1]);
      rules_.emplace(std::move(prefix), std::move(replacement));
    }
  }
}

void SurfacePresentation::require_rank(const Word& w) const {
  if (w.rank() != rank()) {
    throw Error(ErrorCode::Alphabet, "word over rank " + std::to_string(w.rank()) +
                                         " but genus " + std::to_string(genus_) +
                                         " needs rank " + std::to_string(rank()));
  }
}

std::pair<Word, Word> cyclically_reduce(const Word& w) {
  std::deque<Run> core(w.runs().begin(), w.runs().end());
  Word conj(w.rank());
  while (core.size() >= 2 && core.front().index == core.back().index &&
         (core.front().exp > 0) != (core.back().exp > 0)) {
    const int index = core.front().index;
    const Exponent peel = std::min(std::abs(core.front().exp), std::abs(core.back().exp));
    const Exponent sign = core.front().exp > 0 ? 1 : -1;
    // w = x^{sign*peel} (inner) x^{-sign*peel}, so conj gains x^{-sign*peel} on the left.
    core.front().exp -= sign * peel;
    core.back().exp += sign * peel;
    Word left = Word::generator(w.rank(), index, -sign * peel);
    left.append(conj);
    conj = std::move(left);
    if (core.back().exp == 0) core.pop_back();
    if (!core.empty() && core.front().exp == 0) core.pop_front();
  }
  std::vector<Run> runs(core.begin(), core.end());
  return {Word::from_runs(w.rank(), runs), conj};
}

Word dehn_reduce(const SurfacePresentation& p, const Word& w) {
  p.require_rank(w);
  const auto& rules = p.dehn_rules();
  const std::size_t rel_len = p.relator().length();
  const std::size_t min_match = rel_len / 2 + 1;

  std::vector<Letter> stack;
  std::vector<Letter> pending = w.letters();
  std::reverse(pending.begin(), pending.end());
  std::vector<Letter> key;

  while (!pending.empty()) {
    const Letter l = pending.back();
    pending.pop_back();
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
      continue;
    }
    stack.push_back(l);
    // Every subword longer than half a relator that appears now ends at l.
    const std::size_t top = std::min(rel_len, stack.size());
    for (std::size_t len = top; len >= min_match && len > 0; --len) {
      key.assign(stack.end() - static_cast<long>(len), stack.end());
      auto it = rules.find(key);
      if (it == rules.end()) continue;
      const std::size_t before = stack.size() + pending.size();
      stack.resize(stack.size() - len);
      for (auto r = it->second.rbegin(); r != it->second.rend(); ++r) {
        pending.push_back(*r);
      }
      COMMGROUP_CHECK(stack.size() + pending.size() < before,
                      "Dehn replacement must shorten the word");
      break;
    }
  }
  return Word::from_letters(w.rank(), stack);
}

bool is_trivial(const SurfacePresentation& p, const Word& w) {
  p.require_rank(w);
  if (p.genus() == 1) {
    const AbelianVector v = abelianize_vector(w);
    return std::all_of(v.begin(), v.end(), [](Exponent e) { return e == 0; });
  }
  return dehn_reduce(p, w).empty();
}

bool surface_equal(const SurfacePresentation& p, const Word& w1, const Word& w2) {
  require_same_rank(w1, w2);
  return is_trivial(p, multiply(w1, invert(w2)));
}

}  // namespace commgroup
