#include "lfsrcyc/matrix.hpp"

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GFElem& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
    }
  }
  return out;
}

std::vector<GFElem> operator*(std::span<const GFElem> v, const Matrix& a) {
  if (v.size() != a.rows()) throw DomainError("vector length does not match matrix rows");
  std::vector<GFElem> out(a.cols(), a.field().zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[k] * a.at(k, j);
  }
  return out;
}

Matrix pow(const Matrix& a, std::uint64_t k) {
  if (a.rows() != a.cols()) throw DomainError("matrix power needs a square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("only square matrices can be inverted");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(a.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const GFElem scale = work.at(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      const GFElem factor = work.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace lfsrcyc
