#include "liecurrent/linalg.hpp"

#include <stdexcept>

namespace liecurrent {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = data_[r][c];
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (data_[r][k] == 0) continue;
      for (int c = 0; c < o.cols_; ++c)
        m.at(r, c) += data_[r][k] * o.data_[k][c];
    }
  return m;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector size mismatch");
  RatVec out(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (data_[r][c] != 0) out[r] += data_[r][c] * v[c];
  return out;
}

std::vector<int> RatMatrix::rref() {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int sel = -1;
    for (int r = lead; r < rows_; ++r)
      if (data_[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(data_[sel], data_[lead]);
    Rat inv = 1 / data_[lead][col];
    for (int c = col; c < cols_; ++c) data_[lead][c] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || data_[r][col] == 0) continue;
      Rat f = data_[r][col];
      for (int c = col; c < cols_; ++c) data_[r][c] -= f * data_[lead][c];
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return static_cast<int>(m.rref().size());
}

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square");
  RatMatrix m = *this;
  Rat det(1);
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int r = col; r < rows_; ++r)
      if (m.data_[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != col) {
      std::swap(m.data_[sel], m.data_[col]);
      det = -det;
    }
    det *= m.data_[col][col];
    Rat inv = 1 / m.data_[col][col];
    for (int r = col + 1; r < rows_; ++r) {
      if (m.data_[r][col] == 0) continue;
      Rat f = m.data_[r][col] * inv;
      for (int c = col; c < cols_; ++c) m.data_[r][c] -= f * m.data_[col][c];
    }
  }
  return det;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
  RatMatrix aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = data_[r][c];
    aug.at(r, cols_ + r) = 1;
  }
  auto piv = aug.rref();
  if (static_cast<int>(piv.size()) != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (piv[i] != i) return std::nullopt;
  RatMatrix inv(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

std::optional<RatVec> RatMatrix::solve(const RatVec& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("rhs size mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = data_[r][c];
    aug.at(r, cols_) = b[r];
  }
  auto piv = aug.rref();
  RatVec x(cols_, Rat(0));
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == cols_) return std::nullopt;  // 0 = 1 row
    x[piv[i]] = aug.at(static_cast<int>(i), cols_);
  }
  return x;
}

std::vector<RatVec> RatMatrix::nullspace() const {
  RatMatrix m = *this;
  auto piv = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols_, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < piv.size(); ++i)
      v[piv[i]] = -m.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace liecurrent
