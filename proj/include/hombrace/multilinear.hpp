#pragma once

/// Dense multilinear maps V_1 x ... x V_n -> W over an exact field.
///
/// Storage is row-major over the input multi-index (i_1, ..., i_n) followed by
/// the output coordinate k, so a structure tensor mu[i][j][k] (coefficient of
/// e_k in e_i . e_j) is exactly the flat layout of a bilinear map.
/// Arity 0 is allowed: the map is then a single vector of W.
///
/// Everything the cochain calculus needs is expressed through a handful of
/// tensor operations: precomposition of one slot with a linear map,
/// postcomposition, insertion of one map into a slot of another, and the
/// "bilinear product" B(P(x...), Q(y...)).

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hombrace/errors.hpp"
#include "hombrace/field.hpp"
#include "hombrace/linalg.hpp"

namespace hombrace {

using Index = std::vector<std::size_t>;

namespace detail {

inline std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// Calls fn(index) for every multi-index in lexicographic (row-major) order.
template <class Fn>
void for_each_index(std::span<const std::size_t> dims, Fn&& fn) {
  Index idx(dims.size(), 0);
  for (auto d : dims)
    if (d == 0) return;
  while (true) {
    fn(std::as_const(idx));
    std::size_t pos = dims.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < dims[pos]) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (dims.empty()) return;
  }
}

}  // namespace detail

class Multilinear {
 public:
  Multilinear(Field field, std::vector<std::size_t> in_dims, std::size_t out_dim)
      : field_(field),
        in_dims_(std::move(in_dims)),
        out_dim_(out_dim),
        coeffs_(detail::product(in_dims_) * out_dim, field.zero()) {}

  // Zero map on V^{(x)arity} -> W with all input slots of dimension in_dim.
  static Multilinear uniform(Field field, std::size_t arity, std::size_t in_dim, std::size_t out_dim) {
    return Multilinear(field, std::vector<std::size_t>(arity, in_dim), out_dim);
  }

  static Multilinear constant(const Field& field, const Vec& value) {
    Multilinear m(field, {}, value.size());
    m.coeffs_ = value;
    m.check_field();
    return m;
  }

  static Multilinear linear(const Matrix& a) {
    Multilinear m(a.field(), {a.cols()}, a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t i = 0; i < a.rows(); ++i) m.coeffs_[j * a.rows() + i] = a(i, j);
    return m;
  }

  static Multilinear from_coeffs(Field field, std::vector<std::size_t> in_dims, std::size_t out_dim, Vec coeffs) {
    Multilinear m(field, std::move(in_dims), out_dim);
    if (coeffs.size() != m.coeffs_.size())
      throw InputError("coefficient count " + std::to_string(coeffs.size()) + " does not match shape (expected " +
                       std::to_string(m.coeffs_.size()) + ")");
    m.coeffs_ = std::move(coeffs);
    m.check_field();
    return m;
  }

  // Builds the map from its values on basis tuples.
  template <class Fn>
  static Multilinear from_basis(Field field, std::vector<std::size_t> in_dims, std::size_t out_dim, Fn&& value_at) {
    Multilinear m(field, std::move(in_dims), out_dim);
    std::size_t flat = 0;
    detail::for_each_index(m.in_dims_, [&](const Index& idx) {
      Vec v = value_at(idx);
      if (v.size() != out_dim) throw InputError("basis value has wrong length");
      for (std::size_t k = 0; k < out_dim; ++k) m.coeffs_[flat * out_dim + k] = std::move(v[k]);
      ++flat;
    });
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t arity() const { return in_dims_.size(); }
  const std::vector<std::size_t>& in_dims() const { return in_dims_; }
  std::size_t in_dim(std::size_t slot) const { return in_dims_.at(slot); }
  std::size_t out_dim() const { return out_dim_; }
  std::size_t num_input_tuples() const { return detail::product(in_dims_); }
  const Vec& coeffs() const { return coeffs_; }
  Vec& coeffs() { return coeffs_; }

  // True when every slot has the same dimension d (a cochain on a single space).
  bool is_uniform(std::size_t d) const {
    for (auto x : in_dims_)
      if (x != d) return false;
    return true;
  }

  std::size_t flat_index(std::span<const std::size_t> idx) const {
    if (idx.size() != in_dims_.size()) throw InputError("wrong number of indices");
    std::size_t flat = 0;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (idx[s] >= in_dims_[s]) throw InputError("basis index out of range");
      flat = flat * in_dims_[s] + idx[s];
    }
    return flat;
  }

  std::span<const Scalar> at(std::span<const std::size_t> idx) const {
    return {coeffs_.data() + flat_index(idx) * out_dim_, out_dim_};
  }

  Scalar& coeff(std::span<const std::size_t> idx, std::size_t k) { return coeffs_[flat_index(idx) * out_dim_ + k]; }

  Vec value_at(std::span<const std::size_t> idx) const {
    auto s = at(idx);
    return Vec(s.begin(), s.end());
  }

  // Evaluation on arbitrary vectors by multilinear expansion (zero terms skipped).
  Vec eval(std::span<const Vec> args) const {
    if (args.size() != arity()) throw InputError("wrong number of arguments");
    for (std::size_t s = 0; s < args.size(); ++s)
      if (args[s].size() != in_dims_[s]) throw InputError("argument dimension mismatch");
    Vec out = zero_vec(field_, out_dim_);
    std::vector<std::vector<std::size_t>> support(args.size());
    for (std::size_t s = 0; s < args.size(); ++s)
      for (std::size_t i = 0; i < args[s].size(); ++i)
        if (!args[s][i].is_zero()) support[s].push_back(i);
    Index idx(args.size());
    std::function<void(std::size_t, std::size_t, const Scalar&)> rec = [&](std::size_t s, std::size_t flat, const Scalar& w) {
      if (s == args.size()) {
        axpy(out, w, std::span<const Scalar>(coeffs_.data() + flat * out_dim_, out_dim_));
        return;
      }
      for (auto i : support[s]) rec(s + 1, flat * in_dims_[s] + i, w * args[s][i]);
    };
    rec(0, 0, field_.one());
    return out;
  }

  Matrix as_matrix() const {
    if (arity() != 1) throw InputError("as_matrix needs a linear map");
    Matrix a(field_, out_dim_, in_dims_[0]);
    for (std::size_t j = 0; j < in_dims_[0]; ++j)
      for (std::size_t i = 0; i < out_dim_; ++i) a(i, j) = coeffs_[j * out_dim_ + i];
    return a;
  }

  bool is_zero() const { return hombrace::is_zero(coeffs_); }

  // f'(..., x_slot, ...) = f(..., L x_slot, ...).
  Multilinear precompose(std::size_t slot, const Matrix& l) const {
    if (slot >= arity()) throw InputError("precompose: slot out of range");
    if (l.rows() != in_dims_[slot]) throw InputError("precompose: dimension mismatch");
    std::vector<std::size_t> dims = in_dims_;
    dims[slot] = l.cols();
    Multilinear h(field_, dims, out_dim_);
    const std::size_t outer = detail::product(std::span(in_dims_).first(slot));
    const std::size_t inner = detail::product(std::span(in_dims_).subspan(slot + 1)) * out_dim_;
    const std::size_t old_d = in_dims_[slot], new_d = l.cols();
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t c = 0; c < old_d; ++c) {
        const Scalar* src = coeffs_.data() + (o * old_d + c) * inner;
        for (std::size_t j = 0; j < new_d; ++j) {
          const Scalar& w = l(c, j);
          if (w.is_zero()) continue;
          Scalar* dst = h.coeffs_.data() + (o * new_d + j) * inner;
          for (std::size_t r = 0; r < inner; ++r)
            if (!src[r].is_zero()) dst[r].add_product(w, src[r]);
        }
      }
    return h;
  }

  Multilinear precompose_all(const Matrix& l) const {
    Multilinear h = *this;
    for (std::size_t s = 0; s < arity(); ++s) h = h.precompose(s, l);
    return h;
  }

  Multilinear precompose_all_except(std::size_t skip, const Matrix& l) const {
    Multilinear h = *this;
    for (std::size_t s = 0; s < arity(); ++s)
      if (s != skip) h = h.precompose(s, l);
    return h;
  }

  // f' = L o f.
  Multilinear postcompose(const Matrix& l) const {
    if (l.cols() != out_dim_) throw InputError("postcompose: dimension mismatch");
    Multilinear h(field_, in_dims_, l.rows());
    const std::size_t tuples = num_input_tuples();
    for (std::size_t t = 0; t < tuples; ++t)
      for (std::size_t k = 0; k < out_dim_; ++k) {
        const Scalar& v = coeffs_[t * out_dim_ + k];
        if (v.is_zero()) continue;
        for (std::size_t i = 0; i < l.rows(); ++i)
          if (!l(i, k).is_zero()) h.coeffs_[t * l.rows() + i].add_product(l(i, k), v);
      }
    return h;
  }

  // (f o_slot g)(x_1.., y_1..y_q, ..x_n) = f(x_1.., g(y_1..y_q), ..x_n).
  Multilinear insert(std::size_t slot, const Multilinear& g) const {
    if (slot >= arity()) throw InputError("insert: slot out of range");
    if (g.out_dim_ != in_dims_[slot]) throw InputError("insert: dimension mismatch");
    std::vector<std::size_t> dims(in_dims_.begin(), in_dims_.begin() + slot);
    dims.insert(dims.end(), g.in_dims_.begin(), g.in_dims_.end());
    dims.insert(dims.end(), in_dims_.begin() + slot + 1, in_dims_.end());
    Multilinear h(field_, dims, out_dim_);
    const std::size_t outer = detail::product(std::span(in_dims_).first(slot));
    const std::size_t inner = detail::product(std::span(in_dims_).subspan(slot + 1)) * out_dim_;
    const std::size_t d = in_dims_[slot];
    const std::size_t g_tuples = g.num_input_tuples();
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t t = 0; t < g_tuples; ++t) {
        Scalar* dst = h.coeffs_.data() + (o * g_tuples + t) * inner;
        for (std::size_t c = 0; c < d; ++c) {
          const Scalar& w = g.coeffs_[t * d + c];
          if (w.is_zero()) continue;
          const Scalar* src = coeffs_.data() + (o * d + c) * inner;
          for (std::size_t r = 0; r < inner; ++r)
            if (!src[r].is_zero()) dst[r].add_product(w, src[r]);
        }
      }
    return h;
  }

  Multilinear& operator+=(const Multilinear& o) {
    check_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Multilinear& operator-=(const Multilinear& o) {
    check_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Multilinear& operator*=(const Scalar& s) {
    for (auto& x : coeffs_) x *= s;
    return *this;
  }

  // this += s * o
  Multilinear& add_scaled(const Scalar& s, const Multilinear& o) {
    check_shape(o);
    axpy(coeffs_, s, o.coeffs_);
    return *this;
  }

  friend Multilinear operator+(Multilinear a, const Multilinear& b) { return a += b; }
  friend Multilinear operator-(Multilinear a, const Multilinear& b) { return a -= b; }
  friend Multilinear operator*(const Scalar& s, Multilinear a) { return a *= s; }
  Multilinear operator-() const { return field_.from_int(-1) * *this; }

  friend bool operator==(const Multilinear& a, const Multilinear& b) {
    return a.field_ == b.field_ && a.in_dims_ == b.in_dims_ && a.out_dim_ == b.out_dim_ && a.coeffs_ == b.coeffs_;
  }

  bool same_shape(const Multilinear& o) const {
    return field_ == o.field_ && in_dims_ == o.in_dims_ && out_dim_ == o.out_dim_;
  }

  void check_field() const {
    for (const auto& x : coeffs_)
      if (!(x.field() == field_)) throw InputError("mixed fields in tensor");
  }

 private:
  void check_shape(const Multilinear& o) const {
    if (!(field_ == o.field_)) throw InputError("mixed fields in tensor arithmetic");
    if (in_dims_ != o.in_dims_ || out_dim_ != o.out_dim_) throw InputError("tensor shape mismatch");
  }

  Field field_;
  std::vector<std::size_t> in_dims_;
  std::size_t out_dim_;
  Vec coeffs_;
};

/// h(x_1..x_p, y_1..y_q) = B(P(x_1..x_p), Q(y_1..y_q)) for a bilinear B.
inline Multilinear bilinear_product(const Multilinear& b, const Multilinear& p, const Multilinear& q) {
  if (b.arity() != 2) throw InputError("bilinear_product: B must be bilinear");
  if (p.out_dim() != b.in_dim(0) || q.out_dim() != b.in_dim(1))
    throw InputError("bilinear_product: dimension mismatch");
  std::vector<std::size_t> dims = p.in_dims();
  dims.insert(dims.end(), q.in_dims().begin(), q.in_dims().end());
  Multilinear h(b.field(), dims, b.out_dim());
  const std::size_t pt = p.num_input_tuples(), qt = q.num_input_tuples();
  const std::size_t a = b.in_dim(0), c = b.in_dim(1), out = b.out_dim();
  const Vec& pc = p.coeffs();
  const Vec& qc = q.coeffs();
  const Vec& bc = b.coeffs();
  Vec& hc = h.coeffs();
  for (std::size_t i = 0; i < pt; ++i)
    for (std::size_t x = 0; x < a; ++x) {
      const Scalar& pv = pc[i * a + x];
      if (pv.is_zero()) continue;
      for (std::size_t j = 0; j < qt; ++j)
        for (std::size_t y = 0; y < c; ++y) {
          const Scalar& qv = qc[j * c + y];
          if (qv.is_zero()) continue;
          Scalar w = pv * qv;
          const Scalar* bv = bc.data() + (x * c + y) * out;
          Scalar* dst = hc.data() + (i * qt + j) * out;
          for (std::size_t k = 0; k < out; ++k)
            if (!bv[k].is_zero()) dst[k].add_product(w, bv[k]);
        }
    }
  return h;
}

}  // namespace hombrace
