// Dense exact linear algebra over Q(i).
//
// Elimination always pivots on the first nonzero entry scanning columns left
// to right, so every basis returned here is deterministic.
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddbar/exactnum.hpp"

namespace ddbar {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a quotient or induced map is requested on subspaces that do
/// not nest the way the operation requires.
class NotContained : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Scalar> entries() const { return entries_; }

  std::vector<Scalar> column(std::size_t c) const;
  bool is_zero() const;

  /// Entrywise complex conjugate.
  Matrix conj() const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a += -b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// [this | o]
  Matrix hconcat(const Matrix& o) const;
  /// [this ; o]
  Matrix vconcat(const Matrix& o) const;
  Matrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);

/// A linear subspace of K^ambient, stored as a matrix with independent columns.
class Subspace {
 public:
  /// Zero subspace of K^ambient.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
  /// `basis` must have independent columns; throws std::invalid_argument otherwise.
  explicit Subspace(Matrix basis);

  /// Column span of an arbitrary matrix.
  static Subspace span(const Matrix& generators);
  static Subspace whole(std::size_t ambient) { return Subspace(Matrix::identity(ambient)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.contains(b) && b.contains(a);
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// Image of a subspace under a linear map.
Subspace apply(const Matrix& map, const Subspace& u);

/// dim(big / small); throws NotContained unless small is a subspace of big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

/// Columns of `big` extending a basis of `small` to one of `big`, in the
/// deterministic order of elimination. These represent a basis of big/small.
Matrix quotient_representatives(const Subspace& big, const Subspace& small);

/// Rank of the map srcNum/srcDen -> dstNum/dstDen induced by `map`.
/// Throws NotContained when the map does not descend to the quotients.
std::size_t induced_map_rank(const Matrix& map, const Subspace& src_num, const Subspace& src_den,
                             const Subspace& dst_num, const Subspace& dst_den);

}  // namespace ddbar
