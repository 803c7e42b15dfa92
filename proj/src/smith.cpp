#include "commgroup/smith.hpp"

#include <algorithm>
#include <utility>

namespace commgroup {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t t = 0; t < n; ++t) m.at(t, t) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not compose");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  }
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

SparseIntegerMatrix::SparseIntegerMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

SparseIntegerMatrix SparseIntegerMatrix::from_dense(const IntegerMatrix& m) {
  SparseIntegerMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s.add(r, c, m.at(r, c));
  }
  return s;
}

void SparseIntegerMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_.size() || c >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "sparse matrix entry out of range");
  }
  if (v == 0) return;
  auto [it, inserted] = rows_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) rows_[r].erase(it);
  }
}

std::size_t SparseIntegerMatrix::add_row() {
  rows_.emplace_back();
  return rows_.size() - 1;
}

SparseIntegerMatrix SparseIntegerMatrix::transpose() const {
  SparseIntegerMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  }
  return t;
}

std::vector<Integer> divisor_chain(std::vector<Integer> d) {
  for (auto& x : d) {
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "divisor_chain takes nonzero entries");
    x = abs(x);
  }
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

// ---------------------------------------------------------------- dense route

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[dst] += q * row[src]
void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.at(src, c) != 0) m.at(dst, c) += q * m.at(src, c);
  }
}

void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.at(r, src) != 0) m.at(r, dst) += q * m.at(r, src);
  }
}

}  // namespace

SmithDecomposition smith_decomposition(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);

  auto row_swap = [&](std::size_t x, std::size_t y) {
    swap_rows(a, x, y);
    swap_rows(u, x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    swap_cols(a, x, y);
    swap_cols(v, x, y);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    add_row_multiple(a, dst, src, q);
    add_row_multiple(u, dst, src, q);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    add_col_multiple(a, dst, src, q);
    add_col_multiple(v, dst, src, q);
  };

  const std::size_t diag = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    // Smallest nonzero entry of the trailing block as the first pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (a.at(r, c) == 0) continue;
        if (!found || abs(a.at(r, c)) < abs(a.at(pr, pc))) {
          found = true;
          pr = r;
          pc = c;
        }
      }
    }
    if (!found) break;
    row_swap(t, pr);
    col_swap(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a.at(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(r, t).get_mpz_t(), a.at(t, t).get_mpz_t());
        row_add(r, t, -q);
        if (a.at(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a.at(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(t, c).get_mpz_t(), a.at(t, t).get_mpz_t());
        col_add(c, t, -q);
        if (a.at(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t br = t, bc = t;
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (a.at(r, t) != 0 && abs(a.at(r, t)) < abs(a.at(br, bc))) {
            br = r;
            bc = t;
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a.at(t, c) != 0 && abs(a.at(t, c)) < abs(a.at(br, bc))) {
            br = t;
            bc = c;
          }
        }
        row_swap(t, br);
        col_swap(t, bc);
        continue;
      }
      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (!mpz_divisible_p(a.at(r, c).get_mpz_t(), a.at(t, t).get_mpz_t())) {
            row_add(t, r, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a.at(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a.at(t, c) = -a.at(t, c);
      for (std::size_t c = 0; c < rows; ++c) u.at(t, c) = -u.at(t, c);
    }
  }

  SmithDecomposition out{u, a, v, {}};
  for (std::size_t k = 0; k < t; ++k) out.result.divisors.push_back(a.at(k, k));
  out.result.rank = t;
  return out;
}

SmithResult smith_normal_form(const IntegerMatrix& m) {
  return smith_normal_form(SparseIntegerMatrix::from_dense(m));
}

// --------------------------------------------------------------- sparse route

namespace {

using Row = SparseIntegerMatrix::Row;

// dst -= q * src
void subtract_multiple(Row& dst, const Row& src, const Integer& q) {
  for (const auto& [c, v] : src) {
    auto [it, inserted] = dst.try_emplace(c, 0);
    it->second -= q * v;
    if (it->second == 0) dst.erase(it);
  }
}

// Row echelon form by unimodular row operations (Euclid on leading entries).
// Returns the nonzero rows, with strictly increasing leading columns.
std::vector<Row> echelon(std::vector<Row> rows) {
  std::map<std::size_t, std::vector<Row>> buckets;
  for (auto& r : rows) {
    if (!r.empty()) buckets[r.begin()->first].push_back(std::move(r));
  }
  std::vector<Row> out;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const std::size_t col = node.key();
    std::vector<Row>& cand = node.mapped();
    while (cand.size() > 1) {
      auto pivot_it = std::min_element(cand.begin(), cand.end(), [&](const Row& x, const Row& y) {
        const Integer ax = abs(x.begin()->second);
        const Integer ay = abs(y.begin()->second);
        if (ax != ay) return ax < ay;
        return x.size() < y.size();
      });
      std::swap(*pivot_it, cand.back());
      Row pivot = std::move(cand.back());
      cand.pop_back();
      std::vector<Row> keep;
      const Integer& lead = pivot.begin()->second;
      for (auto& r : cand) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.begin()->second.get_mpz_t(), lead.get_mpz_t());
        subtract_multiple(r, pivot, q);
        if (r.empty()) continue;
        if (r.begin()->first == col) {
          keep.push_back(std::move(r));
        } else {
          buckets[r.begin()->first].push_back(std::move(r));
        }
      }
      keep.push_back(std::move(pivot));
      cand = std::move(keep);
    }
    out.push_back(std::move(cand.front()));
  }
  return out;
}

bool is_diagonal_shape(const std::vector<Row>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.size() == 1; });
}

std::vector<Row> transpose_rows(const std::vector<Row>& rows) {
  std::map<std::size_t, Row> cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) cols[c].emplace(r, v);
  }
  std::vector<Row> out;
  out.reserve(cols.size());
  for (auto& [c, row] : cols) out.push_back(std::move(row));
  return out;
}

}  // namespace

SmithResult smith_normal_form(const SparseIntegerMatrix& m) {
  std::vector<Row> rows = echelon(m.row_data());
  // Alternate row and column echelon passes until only a diagonal is left.
  while (!is_diagonal_shape(rows)) rows = echelon(transpose_rows(rows));
  std::vector<Integer> diagonal;
  diagonal.reserve(rows.size());
  for (const auto& r : rows) diagonal.push_back(r.begin()->second);
  SmithResult out;
  out.rank = diagonal.size();
  out.divisors = divisor_chain(std::move(diagonal));
  return out;
}

std::size_t rank(const SparseIntegerMatrix& m) { return echelon(m.row_data()).size(); }

}  // namespace commgroup
