#ifndef COMMGROUP_LAURENT_HPP
#define COMMGROUP_LAURENT_HPP

// Sparse Laurent polynomials over Z in t_1..t_n, i.e. the group ring Z[Z^n].

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "commgroup/word.hpp"

namespace commgroup {

using Integer = mpz_class;
using Monomial = std::vector<Exponent>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int rank);

  static LaurentPoly constant(int rank, const Integer& c);
  static LaurentPoly monomial(int rank, std::span<const Exponent> e, const Integer& c = 1);
  /// t_i - 1.
  static LaurentPoly t_minus_one(int rank, int i);

  int rank() const { return rank_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::span<const Exponent> e) const;

  void add_term(std::span<const Exponent> e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  /// Image under t -> t^-1.
  LaurentPoly bar() const;
  /// Image under the augmentation t_i -> 1.
  Integer augmentation() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  int rank_ = 0;
  std::map<Monomial, Integer> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Integer& c);

/// `3 t1^2 t2^-1 - 1`; zero prints as "0".
std::string to_string(const LaurentPoly& p);

}  // namespace commgroup

#endif
