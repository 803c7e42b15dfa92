#include "commgroup/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace commgroup {

namespace {

void require_rank(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::InvalidArgument, "Laurent polynomials of rank " +
                                                std::to_string(a.rank()) + " and " +
                                                std::to_string(b.rank()));
  }
}

}  // namespace

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
  if (rank < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
}

LaurentPoly LaurentPoly::constant(int rank, const Integer& c) {
  LaurentPoly p(rank);
  p.add_term(Monomial(static_cast<std::size_t>(rank), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int rank, std::span<const Exponent> e, const Integer& c) {
  LaurentPoly p(rank);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::t_minus_one(int rank, int i) {
  if (i < 1 || i > rank) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Monomial e(static_cast<std::size_t>(rank), 0);
  LaurentPoly p = constant(rank, -1);
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add_term(e, 1);
  return p;
}

Integer LaurentPoly::coefficient(std::span<const Exponent> e) const {
  auto it = terms_.find(Monomial(e.begin(), e.end()));
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(std::span<const Exponent> e, const Integer& c) {
  if (static_cast<int>(e.size()) != rank_) {
    throw Error(ErrorCode::InvalidArgument, "monomial has " + std::to_string(e.size()) +
                                                " exponents, expected " +
                                                std::to_string(rank_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial(e.begin(), e.end()), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    Monomial inv(e.size());
    for (std::size_t t = 0; t < e.size(); ++t) inv[t] = checked_neg(e[t]);
    out.add_term(inv, c);
  }
  return out;
}

Integer LaurentPoly::augmentation() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator-(LaurentPoly a) { return a *= Integer(-1); }
LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_rank(a, b);
  LaurentPoly out(a.rank());
  Monomial e(static_cast<std::size_t>(a.rank()));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = checked_add(ea[t], eb[t]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomial first, so the constant term of t_i - 1 comes last.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || unit_monomial) {
      os << mag.get_str();
      if (!unit_monomial) os << ' ';
    }
    bool first_var = true;
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] == 0) continue;
      if (!first_var) os << ' ';
      first_var = false;
      os << 't' << (t + 1);
      if (e[t] != 1) os << '^' << e[t];
    }
  }
  return os.str();
}

}  // namespace commgroup
