#ifndef COMMGROUP_SMITH_HPP
#define COMMGROUP_SMITH_HPP

// Exact integer matrices and their Smith normal form.
//
// Two routes: a dense one that also returns the unimodular transforms (for
// small matrices and for checking), and a sparse one for the large, very
// sparse matrices built from truncation boxes.

#include <cstddef>
#include <map>
#include <vector>

#include "commgroup/laurent.hpp"

namespace commgroup {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntegerMatrix transpose() const;

  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Bareiss fraction-free elimination; square matrices only.
Integer determinant(const IntegerMatrix& m);

/// Row-major sparse matrix: one column -> value map per row, zeros never stored.
class SparseIntegerMatrix {
 public:
  using Row = std::map<std::size_t, Integer>;

  SparseIntegerMatrix() = default;
  SparseIntegerMatrix(std::size_t rows, std::size_t cols);
  static SparseIntegerMatrix from_dense(const IntegerMatrix& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Row>& row_data() const { return rows_; }

  void add(std::size_t r, std::size_t c, const Integer& v);
  /// Appends an empty row and returns its index.
  std::size_t add_row();
  void add_cols(std::size_t extra) { cols_ += extra; }

  SparseIntegerMatrix transpose() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

struct SmithResult {
  /// Nonzero invariant factors, positive, each dividing the next.
  std::vector<Integer> divisors;
  std::size_t rank = 0;
};

/// U * M * V = D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  SmithResult result;
};

SmithDecomposition smith_decomposition(const IntegerMatrix& m);
SmithResult smith_normal_form(const IntegerMatrix& m);
SmithResult smith_normal_form(const SparseIntegerMatrix& m);

/// Rank via one echelon pass of the sparse route.
std::size_t rank(const SparseIntegerMatrix& m);

/// Replaces a list of nonzero diagonal entries by the equivalent divisor chain.
std::vector<Integer> divisor_chain(std::vector<Integer> diagonal);

}  // namespace commgroup

#endif
