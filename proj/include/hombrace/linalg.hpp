#pragma once

/// Dense exact linear algebra: matrices over a `Field`, reduced row echelon
/// form, rank, kernels and affine solves.
///
/// Convention: entry (i, j) is the coefficient of output coordinate i in the
/// image of input basis vector j, so matrices act on column vectors.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hombrace/errors.hpp"
#include "hombrace/field.hpp"

namespace hombrace {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const Field& field, std::size_t n) { return Vec(n, field.zero()); }

inline Vec unit_vec(const Field& field, std::size_t n, std::size_t i) {
  Vec v = zero_vec(field, n);
  v.at(i) = field.one();
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec& axpy(Vec& y, const Scalar& a, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw InputError("vector length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(a, x[i]);
  return y;
}

inline Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(const Scalar& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline std::string to_string(std::span<const Scalar> v);

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  // Rows given explicitly; all entries must live in `field`.
  static Matrix from_rows(const Field& field, const std::vector<Vec>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    m.check_field();
    return m;
  }

  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InputError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    m.check_field();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec column(std::size_t j) const {
    Vec c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Vec apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw InputError("matrix/vector dimension mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, j).is_zero()) out[i].add_product((*this)(i, j), v[j]);
    }
    return out;
  }

  bool is_zero() const { return hombrace::is_zero(data_); }

  // Throws InputError if any entry lives outside field().
  void check_field() const {
    for (const auto& x : data_)
      if (!(x.field() == field_)) throw InputError("mixed fields in matrix: " + x.field().name() + " entry in " + field_.name() + " matrix");
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
    if (!(a.field_ == b.field_)) throw InputError("mixed fields in matrix product");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j).add_product(aik, b(k, j));
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Non-negative powers for any square matrix, negative powers via inverse().
  Matrix power(int k) const;

 private:
  void check_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix shape mismatch");
    if (!(field_ == b.field_)) throw InputError("mixed fields");
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with pivots chosen left to right, top to bottom.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

inline Echelon row_reduce(Matrix m) {
  m.check_field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(row, j));
    Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < cols; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar factor = -m(i, col);
      for (std::size_t j = col; j < cols; ++j)
        if (!m(row, j).is_zero()) m(i, j).add_product(factor, m(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

namespace detail {

// Scales v so its first nonzero entry is 1.
inline void normalize_leading(Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      Scalar inv = x.inverse();
      for (auto& y : v) y *= inv;
      return;
    }
}

inline std::vector<Vec> kernel_from_echelon(const Echelon& e) {
  const Matrix& r = e.reduced;
  const std::size_t cols = r.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(r.field(), cols);
    v[free] = r.field().one();
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -r(k, free);
    normalize_leading(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Basis of {v : m v = 0}: one vector per free column of the RREF, free columns
/// in increasing order, each scaled so its leading nonzero entry is 1.
inline std::vector<Vec> kernel_basis(const Matrix& m) { return detail::kernel_from_echelon(row_reduce(m)); }

struct AffineSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

/// Solves m x = b. The particular solution sets every free variable to zero.
inline std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw InputError("solve_affine: right-hand side has length " + std::to_string(b.size()) + ", expected " + std::to_string(m.rows()));
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;

  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.reduced(k, m.cols());

  Matrix lhs(m.field(), e.reduced.rows(), m.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) lhs(i, j) = e.reduced(i, j);
  return AffineSolution{std::move(x), detail::kernel_from_echelon({std::move(lhs), e.pivot_cols})};
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw DomainError("matrix is singular");
  return *inv;
}

inline Matrix Matrix::power(int k) const {
  if (!is_square()) throw InputError("power of a non-square matrix");
  if (k < 0) return inverse(*this).power(-k);
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

/// Coordinates with respect to a fixed linearly independent family.
/// Built once by elimination; `coordinates(v)` then costs one k x N product.
class BasisCoordinates {
 public:
  BasisCoordinates(const Field& field, std::size_t ambient, const std::vector<Vec>& basis)
      : field_(field), ambient_(ambient), size_(basis.size()), left_inverse_(field, basis.size(), ambient) {
    const std::size_t k = basis.size();
    Matrix aug(field, ambient, k + ambient);
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j].size() != ambient) throw InputError("basis vector length mismatch");
      for (std::size_t i = 0; i < ambient; ++i) aug(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < ambient; ++i) aug(i, k + i) = field.one();
    Echelon e = row_reduce(std::move(aug));
    for (std::size_t j = 0; j < k; ++j)
      if (j >= e.pivot_cols.size() || e.pivot_cols[j] != j) throw InputError("basis is linearly dependent");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < ambient; ++j) left_inverse_(i, j) = e.reduced(i, k + j);
    basis_ = basis;
  }

  std::size_t size() const { return size_; }

  // Throws DomainError when v is outside the span.
  Vec coordinates(std::span<const Scalar> v) const {
    Vec c = left_inverse_.apply(v);
    Vec back = zero_vec(field_, ambient_);
    for (std::size_t j = 0; j < size_; ++j) axpy(back, c[j], basis_[j]);
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!(back[i] == v[i])) throw DomainError("vector is not in the span of the basis");
    return c;
  }

 private:
  Field field_;
  std::size_t ambient_;
  std::size_t size_;
  Matrix left_inverse_;
  std::vector<Vec> basis_;
};

inline std::string to_string(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace hombrace
