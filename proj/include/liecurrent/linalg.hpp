#pragma once

#include <optional>
#include <vector>

#include "liecurrent/rational.hpp"

namespace liecurrent {

using RatVec = std::vector<Rat>;

/// Dense matrix over Q with exact Gauss elimination. Pivot choice is
/// deterministic (first nonzero entry scanning rows in order), so every
/// derived basis and report is reproducible byte for byte.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    data_.assign(rows, RatVec(cols, Rat(0)));
  }
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return data_[r][c]; }
  const Rat& at(int r, int c) const { return data_[r][c]; }
  const RatVec& row(int r) const { return data_[r]; }

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVec apply(const RatVec& v) const;

  /// Reduced row echelon form; returns the pivot column of each pivot row.
  std::vector<int> rref();
  int rank() const;
  Rat determinant() const;
  /// Inverse; std::nullopt when singular.
  std::optional<RatMatrix> inverse() const;
  /// One solution of A x = b, or std::nullopt when inconsistent.
  std::optional<RatVec> solve(const RatVec& b) const;
  /// Basis of the right nullspace {x : A x = 0}.
  std::vector<RatVec> nullspace() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RatVec> data_;
};

}  // namespace liecurrent
