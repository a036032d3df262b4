#pragma once

/// Concrete algebras, bimodules and operators used by the CLI and the tests,
/// plus exhaustive O-operator search over small prime fields.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hombrace/hom_algebra.hpp"
#include "hombrace/o_operator.hpp"

namespace hombrace {

// Basis x1, x2, x3; parameters a, b.
inline HomAlgebra example25(const Field& f, const Scalar& a, const Scalar& b) {
  Multilinear mu(f, {3, 3}, 3);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { mu.coeff(Index{i, j}, k) = v; };
  set(0, 0, 0, a);
  set(0, 1, 1, a);
  set(1, 0, 1, a);
  set(0, 2, 2, b);
  set(2, 0, 2, b);
  set(1, 1, 1, a);
  set(1, 2, 2, b);
  Matrix alpha(f, 3, 3);
  alpha(0, 0) = a;
  alpha(1, 1) = a;
  alpha(2, 2) = b;
  return HomAlgebra(std::move(mu), std::move(alpha));
}

inline HomAlgebra example25(const Field& f, long a, long b) { return example25(f, f.from_int(a), f.from_int(b)); }

// R(x1) = rho1 x3, R(x2) = rho2 x3, R(x3) = 0.
inline Matrix example25_operator(const Field& f, const Scalar& rho1, const Scalar& rho2) {
  Matrix r(f, 3, 3);
  r(2, 0) = rho1;
  r(2, 1) = rho2;
  return r;
}

inline Matrix example25_operator(const Field& f, long rho1, long rho2) {
  return example25_operator(f, f.from_int(rho1), f.from_int(rho2));
}

// <e> with e.e = e and identity twist.
inline HomAlgebra line_algebra(const Field& f) {
  return HomAlgebra(Multilinear::from_coeffs(f, {1, 1}, 1, {f.one()}), Matrix::identity(f, 1));
}

// M = <f> over the line algebra with l(e,f) = left f, r(f,e) = right f, phi = id.
inline Bimodule line_module(const Field& f, long left, long right) {
  return Bimodule(Multilinear::from_coeffs(f, {1, 1}, 1, {f.from_int(left)}),
                  Multilinear::from_coeffs(f, {1, 1}, 1, {f.from_int(right)}), Matrix::identity(f, 1));
}

inline Matrix scalar_map(const Field& f, long t) { return Matrix::from_rows(f, {{f.from_int(t)}}); }

// e1 e1 = e1, e2 e2 = e2.
inline HomAlgebra diagonal_algebra(const Field& f) {
  Multilinear mu(f, {2, 2}, 2);
  mu.coeff(Index{0, 0}, 0) = f.one();
  mu.coeff(Index{1, 1}, 1) = f.one();
  return HomAlgebra(std::move(mu), Matrix::identity(f, 2));
}

// 1 = e1, eps = e2, eps^2 = 0.
inline HomAlgebra dual_numbers(const Field& f) {
  Multilinear mu(f, {2, 2}, 2);
  mu.coeff(Index{0, 0}, 0) = f.one();
  mu.coeff(Index{0, 1}, 1) = f.one();
  mu.coeff(Index{1, 0}, 1) = f.one();
  return HomAlgebra(std::move(mu), Matrix::identity(f, 2));
}

// Twisting an associative algebra by an endomorphism: (A, alpha o mu, alpha).
inline HomAlgebra yau_twist(const HomAlgebra& assoc, const Matrix& alpha) {
  return HomAlgebra(assoc.mu.postcompose(alpha), alpha);
}

// (M, phi o l, phi o r, phi) over the twisted algebra.
inline Bimodule yau_twist(const Bimodule& m, const Matrix& phi) {
  return Bimodule(m.l.postcompose(phi), m.r.postcompose(phi), phi);
}

inline Bimodule trivial_module(const Field& f, std::size_t a, std::size_t m) {
  return Bimodule(Multilinear(f, {a, m}, m), Multilinear(f, {m, a}, m), Matrix::identity(f, m));
}

struct Instance {
  std::string name;
  HomAlgebra algebra;
  Bimodule module;
};

// Small valid (A, M) pairs with dim A, dim M <= 2; several have nontrivial twists.
inline std::vector<Instance> small_instances(const Field& f) {
  std::vector<Instance> out;
  const HomAlgebra line = line_algebra(f);
  out.push_back({"line/left", line, line_module(f, 1, 0)});
  out.push_back({"line/right", line, line_module(f, 0, 1)});
  out.push_back({"line/adjoint", line, line_module(f, 1, 1)});
  out.push_back({"line/trivial", line, trivial_module(f, 1, 1)});
  const HomAlgebra diag = diagonal_algebra(f);
  const Matrix swap = Matrix::from_rows(f, {{f.zero(), f.one()}, {f.one(), f.zero()}});
  out.push_back({"diagonal/adjoint", diag, adjoint_bimodule(diag)});
  const HomAlgebra diag_tw = yau_twist(diag, swap);
  out.push_back({"diagonal-swap/adjoint", diag_tw, adjoint_bimodule(diag_tw)});
  const HomAlgebra dual = dual_numbers(f);
  out.push_back({"dual/adjoint", dual, adjoint_bimodule(dual)});
  const Matrix scale = Matrix::from_rows(f, {{f.one(), f.zero()}, {f.zero(), f.from_int(-1)}});
  const HomAlgebra dual_tw = yau_twist(dual, scale);
  out.push_back({"dual-scaled/adjoint", dual_tw, adjoint_bimodule(dual_tw)});
  // eps acts by zero on a one-dimensional module: l(1,f) = f, r(f,1) = f.
  Multilinear l(f, {2, 1}, 1), r(f, {1, 2}, 1);
  l.coeff(Index{0, 0}, 0) = f.one();
  r.coeff(Index{0, 0}, 0) = f.one();
  out.push_back({"dual/point", dual, Bimodule(l, r, Matrix::identity(f, 1))});
  // Twists with alpha != phi that still carry nonzero O-operators.
  const Matrix a12 = Matrix::from_rows(f, {{f.one(), f.zero()}, {f.zero(), f.from_int(2)}});
  const Matrix p24 = Matrix::from_rows(f, {{f.from_int(2), f.zero()}, {f.zero(), f.from_int(4)}});
  out.push_back({"dual-twisted/adjoint", yau_twist(dual, a12), yau_twist(adjoint_bimodule(dual), p24)});
  Multilinear idem(f, {2, 2}, 2);
  idem.coeff(Index{0, 0}, 0) = f.one();
  const HomAlgebra idem_alg(idem, Matrix::identity(f, 2));
  const Matrix p22 = Matrix::from_rows(f, {{f.from_int(2), f.zero()}, {f.zero(), f.from_int(2)}});
  out.push_back({"idempotent-twisted/adjoint", yau_twist(idem_alg, a12), yau_twist(adjoint_bimodule(idem_alg), p22)});
  return out;
}

// Calls visit(T) for every T : M -> A with entries from `values`, in
// lexicographic order of the row-major entries.
template <class Visit>
void for_each_map(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& values, Visit&& visit) {
  const std::size_t cells = rows * cols;
  std::vector<std::size_t> digits(cells, 0);
  while (true) {
    Matrix t(f, rows, cols);
    for (std::size_t c = 0; c < cells; ++c) t(c / cols, c % cols) = values[digits[c]];
    visit(t);
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < values.size()) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
    if (cells == 0) return;
  }
}

inline std::vector<Scalar> field_elements(const Field& f) {
  if (f.is_rational()) throw InputError("enumeration needs a prime field");
  std::vector<Scalar> out;
  for (std::uint32_t i = 0; i < f.characteristic(); ++i) out.push_back(f.from_int(i));
  return out;
}

// Integers -bound..bound, for bounded scans over Q.
inline std::vector<Scalar> integer_grid(const Field& f, long bound) {
  std::vector<Scalar> out;
  for (long i = -bound; i <= bound; ++i) out.push_back(f.from_int(i));
  return out;
}

// Every O-operator over F_p (p <= 7, dims <= 2), in lexicographic order.
inline std::vector<Matrix> search_o_operators(const HomAlgebra& a, const Bimodule& m) {
  const Field& f = a.field();
  if (f.is_rational()) throw InputError("search needs a prime field");
  if (f.characteristic() > 7) throw InputError("search needs p <= 7");
  if (a.dim() > 2 || m.dim() > 2) throw InputError("search needs dims <= 2");
  std::vector<Matrix> found;
  for_each_map(f, a.dim(), m.dim(), field_elements(f), [&](const Matrix& t) {
    if (verify_o_operator(a, m, t).ok()) found.push_back(t);
  });
  return found;
}

// Every vector of F_p^n, lexicographic.
inline std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  if (f.is_rational()) throw InputError("enumeration needs a prime field");
  std::vector<Vec> out;
  Vec v = zero_vec(f, n);
  std::vector<std::uint32_t> digits(n, 0);
  const std::uint32_t p = f.characteristic();
  while (true) {
    for (std::size_t i = 0; i < n; ++i) v[i] = f.from_int(digits[i]);
    out.push_back(v);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace hombrace
