#include "ddbar/linalg.hpp"

#include <utility>

namespace ddbar {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix entry count " + std::to_string(entries_.size()) + " != " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& e : m.entries_) e = e.conj();
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  }
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
      }
    }
  }
  return m;
}

std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Scalar> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch("hconcat row mismatch");
  Matrix m(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) m(r, cols_ + c) = o(r, c);
  }
  return m;
}

Matrix Matrix::vconcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw DimensionMismatch("vconcat column mismatch");
  Matrix m(rows_ + o.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
  std::copy(o.entries_.begin(), o.entries_.end(), m.entries_.begin() + static_cast<long>(entries_.size()));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  }
  return m;
}

Echelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    }
    const Scalar scale = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Echelon e = row_reduce(m.hconcat(Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw DivisionByZero();
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

Subspace::Subspace(Matrix basis) : ambient_(basis.rows()), basis_(std::move(basis)) {
  if (rank(basis_) != basis_.cols()) {
    throw std::invalid_argument("subspace basis columns are linearly dependent");
  }
}

Subspace Subspace::span(const Matrix& generators) { return image_basis(generators); }

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length != ambient dimension");
  return rank(basis_.hconcat(Matrix(ambient_, 1, std::vector<Scalar>(v.begin(), v.end())))) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimension mismatch");
  if (other.dim() == 0) return true;
  return rank(basis_.hconcat(other.basis_)) == dim();
}

Subspace kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> columns;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    columns.push_back(std::move(v));
  }
  Matrix basis = Matrix::from_columns(m.cols(), columns);
  return Subspace(std::move(basis));
}

Subspace image_basis(const Matrix& m) {
  if (m.cols() == 0) return Subspace(m.rows());
  const Echelon e = row_reduce(m);
  Matrix basis(m.rows(), e.pivots.size());
  for (std::size_t j = 0; j < e.pivots.size(); ++j) {
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, j) = m(r, e.pivots[j]);
  }
  return Subspace(std::move(basis));
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("sum: ambient dimension mismatch");
  return image_basis(u.basis().hconcat(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionMismatch("intersect: ambient dimension mismatch");
  }
  if (u.dim() == 0 || v.dim() == 0) return Subspace(u.ambient_dim());
  // u x = v y  <=>  [u | -v] (x, y) = 0
  const Subspace k = kernel_basis(u.basis().hconcat(-v.basis()));
  Matrix coeffs(u.dim(), k.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < k.dim(); ++c) coeffs(r, c) = k.basis()(r, c);
  }
  return image_basis(u.basis() * coeffs);
}

Subspace apply(const Matrix& map, const Subspace& u) {
  if (map.cols() != u.ambient_dim()) throw DimensionMismatch("apply: map source != ambient");
  return image_basis(map * u.basis());
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) {
    throw NotContained("quotient: denominator (dim " + std::to_string(small.dim()) +
                       ") is not contained in numerator (dim " + std::to_string(big.dim()) + ")");
  }
  return big.dim() - small.dim();
}

Matrix quotient_representatives(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw NotContained("quotient representatives: small is not contained in big");
  const Echelon e = row_reduce(small.basis().hconcat(big.basis()));
  std::vector<std::vector<Scalar>> reps;
  for (auto p : e.pivots) {
    if (p >= small.dim()) reps.push_back(big.basis().column(p - small.dim()));
  }
  return Matrix::from_columns(big.ambient_dim(), reps);
}

std::size_t induced_map_rank(const Matrix& map, const Subspace& src_num, const Subspace& src_den,
                             const Subspace& dst_num, const Subspace& dst_den) {
  if (map.cols() != src_num.ambient_dim() || map.rows() != dst_num.ambient_dim() ||
      src_den.ambient_dim() != src_num.ambient_dim() || dst_den.ambient_dim() != dst_num.ambient_dim()) {
    throw DimensionMismatch("induced map: shape mismatch");
  }
  const Subspace image_num = apply(map, src_num);
  if (!dst_num.contains(image_num)) throw NotContained("induced map: image of numerator leaves target numerator");
  if (!dst_den.contains(apply(map, src_den))) {
    throw NotContained("induced map: image of denominator leaves target denominator");
  }
  return sum(image_num, dst_den).dim() - dst_den.dim();
}

}  // namespace ddbar
