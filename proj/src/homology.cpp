#include "commgroup/homology.hpp"

#include <algorithm>
#include <map>

#include "commgroup/module.hpp"

namespace commgroup {

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<IntegerMatrix> differentials)
    : dims_(std::move(dims)), d_(std::move(differentials)) {
  if (dims_.empty()) throw Error(ErrorCode::InvalidArgument, "a chain complex needs C_0");
  if (d_.size() + 1 != dims_.size()) {
    throw Error(ErrorCode::InvalidArgument, "need one differential per positive degree");
  }
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    const IntegerMatrix& d = d_[k - 1];
    if (d.rows() != dims_[k - 1] || d.cols() != dims_[k]) {
      throw Error(ErrorCode::InvalidArgument, "differential d_" + std::to_string(k) +
                                                  " has the wrong shape");
    }
  }
  for (std::size_t k = 1; k + 1 < dims_.size(); ++k) {
    COMMGROUP_CHECK((d_[k - 1] * d_[k]).is_zero(), "d_k d_{k+1} = 0");
  }
}

std::size_t ChainComplex::dim(int k) const {
  if (k < 0 || k > top()) throw Error(ErrorCode::IndexOutOfRange, "degree out of range");
  return dims_[static_cast<std::size_t>(k)];
}

const IntegerMatrix& ChainComplex::differential(int k) const {
  if (k < 1 || k > top()) throw Error(ErrorCode::IndexOutOfRange, "no differential in that degree");
  return d_[static_cast<std::size_t>(k - 1)];
}

HomologyResult homology_at(const ChainComplex& c, int k) {
  if (k < 0 || k > c.top()) {
    throw Error(ErrorCode::IndexOutOfRange, "homology degree " + std::to_string(k) +
                                                " outside 0.." + std::to_string(c.top()));
  }
  const std::size_t rank_in = k >= 1 ? smith_normal_form(c.differential(k)).rank : 0;
  HomologyResult out;
  std::size_t rank_out = 0;
  if (k < c.top()) {
    const SmithResult s = smith_normal_form(c.differential(k + 1));
    rank_out = s.rank;
    for (const auto& d : s.divisors) {
      if (d > 1) out.torsion.push_back(d);
    }
  }
  out.betti = c.dim(k) - rank_in - rank_out;
  return out;
}

LaurentMatrix::LaurentMatrix(std::size_t r, std::size_t c, int rank)
    : rows(r), cols(c), entries(r * c, LaurentPoly(rank)) {}

bool LaurentMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

IntegerMatrix LaurentMatrix::augment() const {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = at(r, c).augmentation();
  }
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not compose");
  const int rank = a.entries.empty() ? (b.entries.empty() ? 0 : b.entries.front().rank())
                                     : a.entries.front().rank();
  LaurentMatrix out(a.rows, b.cols, rank);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols; ++c) {
        if (!b.at(k, c).is_zero()) out.at(r, c) += a.at(r, k) * b.at(k, c);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> wedge_basis(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> s(static_cast<std::size_t>(p));
  for (int t = 0; t < p; ++t) s[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    out.push_back(s);
    int t = p - 1;
    while (t >= 0 && s[static_cast<std::size_t>(t)] == n - p + t + 1) --t;
    if (t < 0) return out;
    ++s[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < p; ++u) {
      s[static_cast<std::size_t>(u)] = s[static_cast<std::size_t>(u - 1)] + 1;
    }
  }
}

LaurentMatrix koszul_differential(int n, int p) {
  const auto source = wedge_basis(n, p);
  const auto target = wedge_basis(n, p - 1);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t t = 0; t < target.size(); ++t) index[target[t]] = t;
  LaurentMatrix d(target.size(), source.size(), n);
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto& s = source[c];
    for (std::size_t m = 0; m < s.size(); ++m) {
      std::vector<int> face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(m));
      LaurentPoly entry = LaurentPoly::t_minus_one(n, s[m]);
      if (m % 2 == 1) entry = -entry;
      d.at(index.at(face), c) += entry;
    }
  }
  return d;
}

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int t = 1; t <= k; ++t) out = out * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
  return out;
}

// Specializes a chain of Laurent differentials after checking d d = 0 over R.
std::vector<IntegerMatrix> specialize(const std::vector<LaurentMatrix>& d) {
  std::vector<IntegerMatrix> out;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k + 1 < d.size()) COMMGROUP_CHECK((d[k] * d[k + 1]).is_zero(), "Koszul d d = 0 over R");
    out.push_back(d[k].augment());
  }
  return out;
}

}  // namespace

ChainComplex free_case_complex(int n, int max_k) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "free case needs n >= 2");
  if (max_k < 0) throw Error(ErrorCode::InvalidArgument, "homology degree must be >= 0");
  std::vector<std::size_t> dims;
  std::vector<LaurentMatrix> d;
  for (int k = 0; k <= max_k + 1; ++k) {
    dims.push_back(binomial(n, k + 2));
    if (k >= 1) d.push_back(koszul_differential(n, k + 2));
  }
  std::vector<IntegerMatrix> special = specialize(d);
  for (const auto& m : special) {
    COMMGROUP_CHECK(m.is_zero(), "Koszul differentials vanish at t = 1");
  }
  return ChainComplex(std::move(dims), std::move(special));
}

std::vector<Integer> symplectic_form(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be >= 1");
  const auto basis = wedge_basis(2 * genus, 2);
  std::vector<Integer> out(basis.size(), 0);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (basis[t][0] % 2 == 1 && basis[t][1] == basis[t][0] + 1) out[t] = 1;
  }
  return out;
}

namespace {

// lambda read off from relator_class: C[i,j](0..0) -> e_i ^ e_j.
std::vector<Integer> relator_lift(int genus) {
  const auto basis = wedge_basis(2 * genus, 2);
  std::vector<Integer> out(basis.size(), 0);
  const ModuleElement r = relator_class(genus);
  for (const auto& [s, c] : r.terms()) {
    COMMGROUP_CHECK(std::all_of(s.k.begin(), s.k.end(), [](Exponent x) { return x == 0; }),
                    "relator class has unshifted symbols");
    const auto it = std::find(basis.begin(), basis.end(), std::vector<int>{s.i, s.j});
    out[static_cast<std::size_t>(it - basis.begin())] += c;
  }
  return out;
}

}  // namespace

ChainComplex surface_case_complex(int genus, int max_k) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be >= 1");
  if (max_k < 0) throw Error(ErrorCode::InvalidArgument, "homology degree must be >= 0");
  const int n = 2 * genus;
  const std::vector<Integer> lambda = symplectic_form(genus);
  COMMGROUP_CHECK(lambda == relator_lift(genus), "lambda matches the relator class");

  std::vector<std::size_t> dims;
  std::vector<LaurentMatrix> d;
  for (int k = 0; k <= max_k + 1; ++k) {
    dims.push_back(binomial(n, k + 2) + (k == 1 ? 1 : 0));
    if (k == 1) {
      const LaurentMatrix kos = koszul_differential(n, 3);
      LaurentMatrix m(dims[0], dims[1], n);
      for (std::size_t r = 0; r < kos.rows; ++r) {
        for (std::size_t c = 0; c < kos.cols; ++c) m.at(r, c) = kos.at(r, c);
        m.at(r, kos.cols) = LaurentPoly::constant(n, lambda[r]);
      }
      d.push_back(std::move(m));
    } else if (k == 2) {
      const LaurentMatrix kos = koszul_differential(n, 4);
      LaurentMatrix m(dims[1], dims[2], n);
      for (std::size_t r = 0; r < kos.rows; ++r) {
        for (std::size_t c = 0; c < kos.cols; ++c) m.at(r, c) = kos.at(r, c);
      }
      d.push_back(std::move(m));
    } else if (k >= 3) {
      d.push_back(koszul_differential(n, k + 2));
    }
  }
  return ChainComplex(std::move(dims), specialize(d));
}

bool injectivity_truncation_check(int genus, Exponent box) {
  if (box < 0) throw Error(ErrorCode::InvalidArgument, "box bound must be >= 0");
  const int n = 2 * genus;
  const ModuleElement r = relator_class(genus);
  std::map<TSymbol, std::size_t> coordinate;
  SparseIntegerMatrix m(0, 0);
  std::size_t columns = 0;
  for_each_box_point(static_cast<std::size_t>(n), box, [&](const std::vector<Exponent>& h) {
    const ModuleElement image = act(LaurentPoly::monomial(n, h), r);
    const std::size_t row = m.add_row();
    ++columns;
    for (const auto& [s, c] : image.terms()) {
      auto [it, inserted] = coordinate.try_emplace(s, coordinate.size());
      if (inserted) m.add_cols(1);
      m.add(row, it->second, c);
    }
  });
  return rank(m) == columns;
}

}  // namespace commgroup
