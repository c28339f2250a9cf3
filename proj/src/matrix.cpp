#include "motkit/matrix.hpp"

#include <sstream>
#include <utility>

namespace motkit {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InvalidStructure("matrix of shape " + std::to_string(rows) + "x" +
                           std::to_string(cols) + " given " +
                           std::to_string(entries_.size()) + " entries");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw InvalidStructure("block_diagonal: non-square block");
    n += b.rows();
  }
  Matrix out(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, offset + c) = b(r, c);
    }
    offset += b.rows();
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool Matrix::is_symmetric() const { return is_square() && *this == transposed(); }

bool Matrix::is_integral() const {
  for (const auto& e : entries_) {
    if (boost::multiprecision::denominator(e) != 1) return false;
  }
  return true;
}

Rational Matrix::determinant() const {
  if (!is_square()) throw InvalidStructure("determinant of a non-square matrix");
  Matrix work = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work(pivot, c), work(col, c));
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col) == 0) continue;
      const Rational factor = work(r, col) / work(col, col);
      for (std::size_t c = col; c < n; ++c) work(r, c) -= factor * work(col, c);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw InvalidStructure("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix work = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InvalidStructure("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

void Matrix::require_same_shape(const Matrix& other, const char* op) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InvalidStructure(std::string("matrix ") + op + ": shape mismatch " +
                           std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                           std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  }
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(other, "addition");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(other, "subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw InvalidStructure("matrix product: shape mismatch " + std::to_string(a.rows_) + "x" +
                           std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                           std::to_string(b.cols_));
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out << ", ";
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out << ", ";
      out << format_scalar((*this)(r, c));
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace motkit
