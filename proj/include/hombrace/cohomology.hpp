#pragma once

/// Cohomology of an O-operator: differential matrices on compatible cochain
/// bases, cocycle/coboundary tests, and H^0 with its commutator bracket.

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "hombrace/cochain.hpp"
#include "hombrace/linalg.hpp"
#include "hombrace/report.hpp"

namespace hombrace {

// HOMBRACE_MAX_DEGREE, default 3.
inline std::size_t max_degree() {
  if (const char* env = std::getenv("HOMBRACE_MAX_DEGREE")) {
    try {
      long v = std::stol(env);
      if (v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("HOMBRACE_MAX_DEGREE is not a non-negative integer: ") + env);
  }
  return 3;
}

enum class Differential { T, H };

struct ComplexOptions {
  Differential which = Differential::T;
  bool unconstrained = false;
};

inline Cochain apply_differential(const OContext& c, const Matrix& t, const Cochain& f, Differential which) {
  return which == Differential::T ? d_T(c, t, f) : d_H(c, t, f);
}

struct ComplexSlice {
  std::size_t degree;
  std::vector<Cochain> basis;
  std::vector<Cochain> next_basis;
  Matrix d;  // column j = d(basis[j]) in next_basis coordinates
};

inline std::vector<Cochain> cochain_basis(const OContext& c, std::size_t n, bool unconstrained) {
  return compatible_basis(c.module.phi, c.algebra.alpha, n, unconstrained);
}

inline ComplexSlice differential_matrix(const OContext& c, const Matrix& t, std::size_t n, ComplexOptions opt = {}) {
  if (n > max_degree()) throw InputError("degree " + std::to_string(n) + " exceeds HOMBRACE_MAX_DEGREE");
  ComplexSlice s{n, cochain_basis(c, n, opt.unconstrained), cochain_basis(c, n + 1, opt.unconstrained),
                 Matrix(c.field(), 0, 0)};
  const std::size_t target = detail::product(std::vector<std::size_t>(n + 1, c.m())) * c.a();
  std::vector<Vec> next;
  for (const auto& b : s.next_basis) next.push_back(b.coeffs());
  BasisCoordinates coords(c.field(), target, next);
  std::vector<Vec> cols;
  for (const auto& b : s.basis) cols.push_back(coords.coordinates(apply_differential(c, t, b, opt.which).coeffs()));
  s.d = Matrix::from_columns(c.field(), s.next_basis.size(), cols);
  return s;
}

struct CohomologyDims {
  std::size_t z;
  std::size_t b;
  std::size_t h;
  std::vector<Cochain> representatives;  // cocycles spanning a complement of B in Z
};

inline CohomologyDims cohomology_dims(const OContext& c, const Matrix& t, std::size_t n, ComplexOptions opt = {}) {
  const ComplexSlice here = differential_matrix(c, t, n, opt);
  const std::vector<Vec> z = kernel_basis(here.d);
  std::vector<Vec> image;
  std::size_t b = 0;
  if (n > 0) {
    const ComplexSlice prev = differential_matrix(c, t, n - 1, opt);
    const Echelon e = row_reduce(prev.d);
    b = e.pivot_cols.size();
    for (auto col : e.pivot_cols) image.push_back(prev.d.column(col));
  }
  std::vector<Vec> cols = image;
  cols.insert(cols.end(), z.begin(), z.end());
  CohomologyDims out{z.size(), b, 0, {}};
  if (!cols.empty()) {
    const Echelon e = row_reduce(Matrix::from_columns(c.field(), here.basis.size(), cols));
    for (auto col : e.pivot_cols) {
      if (col < image.size()) continue;
      Cochain rep = Multilinear::uniform(c.field(), n, c.m(), c.a());
      const Vec& v = cols[col];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) rep.add_scaled(v[i], here.basis[i]);
      out.representatives.push_back(std::move(rep));
    }
  }
  out.h = out.representatives.size();
  if (out.h + out.b != out.z) throw DomainError("cohomology: image is not contained in the kernel");
  return out;
}

inline bool is_cocycle(const OContext& c, const Matrix& t, const Cochain& f, Differential which = Differential::T) {
  return apply_differential(c, t, f, which).is_zero();
}

// A witness g with d g = f, or absent. Degree 0 has no coboundaries.
inline std::optional<Cochain> is_coboundary(const OContext& c, const Matrix& t, const Cochain& f,
                                            ComplexOptions opt = {}) {
  c.check(f);
  const std::size_t n = f.arity();
  if (n == 0) return std::nullopt;
  const ComplexSlice prev = differential_matrix(c, t, n - 1, opt);
  std::vector<Vec> basis;
  for (const auto& b : prev.next_basis) basis.push_back(b.coeffs());
  Vec coords;
  try {
    coords = BasisCoordinates(c.field(), f.coeffs().size(), basis).coordinates(f.coeffs());
  } catch (const DomainError&) {
    return std::nullopt;
  }
  auto sol = solve_affine(prev.d, coords);
  if (!sol) return std::nullopt;
  Cochain g = Multilinear::uniform(c.field(), n - 1, c.m(), c.a());
  for (std::size_t i = 0; i < sol->particular.size(); ++i)
    if (!sol->particular[i].is_zero()) g.add_scaled(sol->particular[i], prev.basis[i]);
  return g;
}

struct H0Space {
  std::vector<Vec> basis;
  Report closure;  // commutators of basis pairs that leave the space
};

inline H0Space h0_space(const OContext& c, const Matrix& t) {
  const ComplexSlice s = differential_matrix(c, t, 0);
  H0Space out;
  for (const auto& k : kernel_basis(s.d)) {
    Vec a = zero_vec(c.field(), c.a());
    for (std::size_t i = 0; i < k.size(); ++i)
      if (!k[i].is_zero()) axpy(a, k[i], s.basis[i].coeffs());
    out.basis.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
      Vec br = commutator(c.algebra, out.basis[i], out.basis[j]);
      const Cochain bc = Multilinear::constant(c.field(), br);
      if (!(c.algebra.alpha.apply(br) == br)) {
        out.closure.add("h0-closure-twist", {i, j}, br);
        continue;
      }
      const Cochain d = d_T(c, t, bc);
      if (!d.is_zero()) out.closure.add("h0-closure", {i, j}, d.coeffs());
    }
  return out;
}

}  // namespace hombrace
