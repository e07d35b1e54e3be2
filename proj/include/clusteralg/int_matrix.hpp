#pragma once

#include "clusteralg/laurent.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace clusteralg {

/// Dense exact integer matrix. Entries are 64-bit with checked arithmetic;
/// determinants are computed in arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix operator*(const IntMatrix& o) const;
  IntVector operator*(std::span<const std::int64_t> v) const;
  IntMatrix operator-() const;
  IntMatrix transposed() const;

  /// Rows in `row_idx`, columns in `col_idx`, in the given order.
  IntMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  IntMatrix select_rows(std::span<const std::size_t> row_idx) const;

  BigInt determinant() const;
  IntMatrix adjugate() const;
  /// Exact inverse of a matrix with determinant +-1; throws NonUnimodular otherwise.
  IntMatrix inverse_unimodular() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// No row holds both a positive and a negative entry.
bool rows_sign_coherent(const IntMatrix& m);
/// No column holds both a positive and a negative entry.
bool columns_sign_coherent(const IntMatrix& m);

}  // namespace clusteralg
