#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lfsrcyc/gf.hpp"

namespace lfsrcyc {

/// Dense row-major matrix over GF(q). States are row vectors and act on the
/// left: s' = s * A.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GFElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GFElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const GFElem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.data_ == b.data_ && a.cols_ == b.cols_; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GFElem> data_;
};

// Row vector times matrix.
std::vector<GFElem> operator*(std::span<const GFElem> v, const Matrix& a);

Matrix pow(const Matrix& a, std::uint64_t k);

// Gauss-Jordan. Empty when a is singular; DomainError when not square.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace lfsrcyc
