#include "clusteralg/int_matrix.hpp"

#include "clusteralg/errors.hpp"

#include <limits>

namespace clusteralg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  const std::size_t r = cols.empty() ? 0 : cols.front().size();
  IntMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw InvalidArgument("ragged matrix columns");
    for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  if (i >= rows_) throw IndexOutOfRange("row index out of range");
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  if (j >= cols_) throw IndexOutOfRange("column index out of range");
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw RankMismatch("matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r(i, j) = checked::add(r(i, j), checked::mul(a, o(k, j)));
    }
  return r;
}

IntVector IntMatrix::operator*(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw RankMismatch("matrix-vector dimension mismatch");
  IntVector r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] = checked::add(r[i], checked::mul((*this)(i, j), v[j]));
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& e : r.data_) e = checked::neg(e);
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  IntMatrix r(row_idx.size(), col_idx.size());
  for (std::size_t a = 0; a < row_idx.size(); ++a) {
    if (row_idx[a] >= rows_) throw IndexOutOfRange("submatrix row out of range");
    for (std::size_t b = 0; b < col_idx.size(); ++b) {
      if (col_idx[b] >= cols_) throw IndexOutOfRange("submatrix column out of range");
      r(a, b) = (*this)(row_idx[a], col_idx[b]);
    }
  }
  return r;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> row_idx) const {
  std::vector<std::size_t> all(cols_);
  for (std::size_t j = 0; j < cols_; ++j) all[j] = j;
  return submatrix(row_idx, all);
}

BigInt IntMatrix::determinant() const {
  if (!is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<BigInt> a(data_.begin(), data_.end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntMatrix IntMatrix::adjugate() const {
  if (!is_square()) throw InvalidArgument("adjugate of a non-square matrix");
  const std::size_t n = rows_;
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<std::size_t> ri, ci;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ri.clear();
      ci.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) ri.push_back(k);
        if (k != j) ci.push_back(k);
      }
      BigInt minor = submatrix(ri, ci).determinant();
      if ((i + j) % 2 == 1) minor = -minor;
      if (minor > std::numeric_limits<std::int64_t>::max() ||
          minor < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("adjugate entry out of range");
      adj(j, i) = static_cast<std::int64_t>(minor);
    }
  return adj;
}

IntMatrix IntMatrix::inverse_unimodular() const {
  const BigInt det = determinant();
  if (det != 1 && det != -1)
    throw NonUnimodular("matrix determinant is " + det.str() + ", expected +-1");
  IntMatrix adj = adjugate();
  return det == 1 ? adj : -adj;
}

bool rows_sign_coherent(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool pos = false, neg = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      pos |= m(i, j) > 0;
      neg |= m(i, j) < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

bool columns_sign_coherent(const IntMatrix& m) { return rows_sign_coherent(m.transposed()); }

}  // namespace clusteralg
