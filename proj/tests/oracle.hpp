#ifndef COMMGROUP_TESTS_ORACLE_HPP
#define COMMGROUP_TESTS_ORACLE_HPP

// Reference implementations used only by the tests. They share no code with
// the library beyond the Word type's letter view, so agreement is evidence.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "commgroup/word.hpp"

namespace oracle {

using Letters = std::vector<int>;

inline Letters reduce(const Letters& in) {
  Letters out;
  for (int l : in) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Letters inv(const Letters& w) {
  Letters out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Letters cat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return reduce(out);
}

inline Letters gen_power(int i, long e) {
  Letters out;
  for (long t = 0; t < (e < 0 ? -e : e); ++t) out.push_back(e > 0 ? i : -i);
  return out;
}

/// [x_i,x_j]^{x_i^k_i ... x_n^k_n} spelled letter by letter.
inline Letters symbol(int i, int j, const std::vector<long>& k) {
  Letters u;
  for (std::size_t t = 0; t < k.size(); ++t) {
    const Letters p = gen_power(i + static_cast<int>(t), k[t]);
    u.insert(u.end(), p.begin(), p.end());
  }
  const Letters c = {-i, -j, i, j};
  return cat({inv(u), c, u});
}

inline Letters letters(const commgroup::Word& w) { return w.letters(); }

/// Abelianized Fox derivatives as maps exponent-vector -> coefficient.
using Poly = std::map<std::vector<long>, long>;

inline std::vector<Poly> fox(const Letters& w, int n) {
  std::vector<Poly> out(static_cast<std::size_t>(n));
  std::vector<long> pos(static_cast<std::size_t>(n), 0);
  for (int l : w) {
    const std::size_t i = static_cast<std::size_t>((l > 0 ? l : -l) - 1);
    if (l > 0) {
      out[i][pos] += 1;
      ++pos[i];
    } else {
      --pos[i];
      out[i][pos] -= 1;
    }
  }
  for (auto& p : out) {
    for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  }
  return out;
}

/// Rank over F_p, p = 2^61 - 1, by Gaussian elimination. Never exceeds the
/// rank over Q; equality is generic.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> m) {
  using u128 = unsigned __int128;
  const std::uint64_t p = (1ULL << 61) - 1;
  auto norm = [&](long long x) {
    long long r = x % static_cast<long long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
  };
  auto mul = [&](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>((u128)a * b % p); };
  auto pw = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = norm(m[r][c]);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t invp = pw(a[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t f = mul(a[r][c], invp);
      for (std::size_t cc = c; cc < cols; ++cc) {
        a[r][cc] = (a[r][cc] + p - mul(f, a[rank][cc])) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// 2x2 matrices over Z/p, p prime, as a representation target.
struct Mat2 {
  std::array<long, 4> v{1, 0, 0, 1};
};

constexpr long kPrime = 1009;

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 out;
  out.v[0] = (a.v[0] * b.v[0] + a.v[1] * b.v[2]) % kPrime;
  out.v[1] = (a.v[0] * b.v[1] + a.v[1] * b.v[3]) % kPrime;
  out.v[2] = (a.v[2] * b.v[0] + a.v[3] * b.v[2]) % kPrime;
  out.v[3] = (a.v[2] * b.v[1] + a.v[3] * b.v[3]) % kPrime;
  return out;
}

/// Inverse of a determinant-one matrix.
inline Mat2 inverse(const Mat2& a) {
  Mat2 out;
  out.v = {a.v[3], (kPrime - a.v[1]) % kPrime, (kPrime - a.v[2]) % kPrime, a.v[0]};
  return out;
}

inline Mat2 evaluate(const Letters& w, const std::vector<Mat2>& images) {
  Mat2 out;
  for (int l : w) {
    const Mat2& g = images[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
    out = mul(out, l > 0 ? g : inverse(g));
  }
  return out;
}

inline bool same(const Mat2& a, const Mat2& b) { return a.v == b.v; }

inline long mod_pow(long b, long e) {
  long r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

template <typename Rng>
Mat2 random_sl2(Rng& rng) {
  std::uniform_int_distribution<long> any(0, kPrime - 1), unit(1, kPrime - 1);
  Mat2 m;
  const long a = unit(rng), b = any(rng), c = any(rng);
  m.v = {a, b, c, (1 + b * c) % kPrime * mod_pow(a, kPrime - 2) % kPrime};
  return m;
}

inline Mat2 mat_pow(Mat2 a, long e) {
  Mat2 out;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
  }
  return out;
}

/// Images x1..x2g in SL2(F_p) satisfying the surface relation: (A,B), (B,A)
/// for the first two handles, commuting pairs (C, C^m) for the rest.
template <typename Rng>
std::vector<Mat2> surface_representation(Rng& rng, int genus) {
  std::vector<Mat2> out;
  const Mat2 a = random_sl2(rng);
  const Mat2 b = random_sl2(rng);
  for (int h = 0; h < genus; ++h) {
    if (h == 0 && genus >= 2) {
      out.push_back(a);
      out.push_back(b);
    } else if (h == 1) {
      out.push_back(b);
      out.push_back(a);
    } else {
      const Mat2 c = random_sl2(rng);
      out.push_back(c);
      out.push_back(mat_pow(c, std::uniform_int_distribution<long>(1, 5)(rng)));
    }
  }
  return out;
}

}  // namespace oracle

#endif
