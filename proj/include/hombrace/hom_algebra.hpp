#pragma once

/// Hom-associative algebras (A, mu, alpha) and their bimodules (M, l, r, phi).
///
/// Index conventions:
///   mu[i][j][k]  coefficient of e_k in e_i . e_j
///   alpha(k, i)  coefficient of e_k in alpha(e_i)
///   l[i][u][v]   coefficient of f_v in l(e_i, f_u)
///   r[u][i][v]   coefficient of f_v in r(f_u, e_i)
///
/// Hom-associativity is the defining axiom. Multiplicativity
/// alpha(ab) = alpha(a)alpha(b) is an extra property checked on request.

#include <cstddef>
#include <string>

#include "hombrace/errors.hpp"
#include "hombrace/linalg.hpp"
#include "hombrace/multilinear.hpp"
#include "hombrace/report.hpp"
#include "hombrace/split.hpp"

namespace hombrace {

using LinearMap = Matrix;

struct HomAlgebra {
  Multilinear mu;
  Matrix alpha;

  HomAlgebra(Multilinear mu_, Matrix alpha_) : mu(std::move(mu_)), alpha(std::move(alpha_)) {
    const std::size_t n = alpha.rows();
    if (!alpha.is_square()) throw InputError("twist must be square");
    if (mu.arity() != 2 || !mu.is_uniform(n) || mu.out_dim() != n)
      throw InputError("multiplication tensor must be " + std::to_string(n) + "x" + std::to_string(n) + "x" +
                       std::to_string(n));
    if (!(mu.field() == alpha.field())) throw InputError("mixed fields in algebra");
  }

  std::size_t dim() const { return alpha.rows(); }
  const Field& field() const { return alpha.field(); }

  Vec mul(const Vec& a, const Vec& b) const { return mu.eval(std::vector<Vec>{a, b}); }
};

struct Bimodule {
  Multilinear l;
  Multilinear r;
  Matrix phi;
  std::size_t algebra_dim;

  Bimodule(Multilinear l_, Multilinear r_, Matrix phi_) : l(std::move(l_)), r(std::move(r_)), phi(std::move(phi_)) {
    const std::size_t m = phi.rows();
    if (!phi.is_square()) throw InputError("module twist must be square");
    if (l.arity() != 2 || r.arity() != 2) throw InputError("actions must be bilinear");
    algebra_dim = l.in_dim(0);
    if (l.in_dim(1) != m || l.out_dim() != m || r.in_dim(0) != m || r.in_dim(1) != algebra_dim || r.out_dim() != m)
      throw InputError("action tensor shapes do not match dims (" + std::to_string(algebra_dim) + ", " +
                       std::to_string(m) + ")");
    if (!(l.field() == phi.field()) || !(r.field() == phi.field())) throw InputError("mixed fields in bimodule");
  }

  std::size_t dim() const { return phi.rows(); }
  const Field& field() const { return phi.field(); }

  Vec left(const Vec& x, const Vec& v) const { return l.eval(std::vector<Vec>{x, v}); }
  Vec right(const Vec& v, const Vec& x) const { return r.eval(std::vector<Vec>{v, x}); }
};

inline void check_compatible(const HomAlgebra& a, const Bimodule& m) {
  if (m.algebra_dim != a.dim()) throw InputError("bimodule is over an algebra of a different dimension");
  if (!(a.field() == m.field())) throw InputError("algebra and bimodule over different fields");
}

inline void check_map(const Matrix& t, std::size_t source, std::size_t target, const Field& field) {
  if (t.cols() != source || t.rows() != target)
    throw InputError("map must be " + std::to_string(target) + "x" + std::to_string(source) + ", got " +
                     std::to_string(t.rows()) + "x" + std::to_string(t.cols()));
  if (!(t.field() == field)) throw InputError("map over a different field");
}

// (ab)alpha(c) - alpha(a)(bc), indexed by (a, b, c).
inline Multilinear associator(const Multilinear& mu, const Matrix& alpha) {
  return mu.insert(0, mu).precompose(2, alpha) - mu.precompose(0, alpha).insert(1, mu);
}

// alpha(ab) - alpha(a)alpha(b), indexed by (a, b).
inline Multilinear multiplicativity_defect(const HomAlgebra& a) {
  return a.mu.postcompose(a.alpha) - a.mu.precompose_all(a.alpha);
}

struct AlgebraChecks {
  bool multiplicative = false;
};

inline Report verify_hom_algebra(const HomAlgebra& a, AlgebraChecks checks = {}) {
  Report report;
  report_nonzero(report, "hom-associativity", associator(a.mu, a.alpha));
  if (checks.multiplicative) report_nonzero(report, "multiplicativity", multiplicativity_defect(a));
  return report;
}

inline Report verify_multiplicativity(const HomAlgebra& a) {
  Report report;
  report_nonzero(report, "multiplicativity", multiplicativity_defect(a));
  return report;
}

inline Report verify_bimodule(const HomAlgebra& a, const Bimodule& m) {
  check_compatible(a, m);
  const auto& l = m.l;
  const auto& r = m.r;
  const auto& al = a.alpha;
  const auto& ph = m.phi;
  Report report;
  // (x, v)
  report_nonzero(report, "left-twist", l.postcompose(ph) - l.precompose(0, al).precompose(1, ph));
  // (v, x)
  report_nonzero(report, "right-twist", r.postcompose(ph) - r.precompose(0, ph).precompose(1, al));
  // (x, y, v)
  report_nonzero(report, "left-action", l.insert(0, a.mu).precompose(2, ph) - l.precompose(0, al).insert(1, l));
  // (v, x, y)
  report_nonzero(report, "right-action", r.precompose(0, ph).insert(1, a.mu) - r.insert(0, r).precompose(2, al));
  // (x, v, y)
  report_nonzero(report, "bimodule-compat", l.precompose(0, al).insert(1, r) - r.insert(0, l).precompose(2, al));
  return report;
}

inline Bimodule adjoint_bimodule(const HomAlgebra& a) { return Bimodule(a.mu, a.mu, a.alpha); }

// (x,u).(y,v) = (xy, l(x,v) + r(u,y)) with twist alpha (+) phi; no validity check.
inline HomAlgebra split_extension(const HomAlgebra& a, const Bimodule& m) {
  check_compatible(a, m);
  Split s{a.field(), a.dim(), m.dim()};
  Multilinear mu = s.lift(a.mu, {Part::A, Part::A}, Part::A) + s.lift(m.l, {Part::A, Part::M}, Part::M) +
                   s.lift(m.r, {Part::M, Part::A}, Part::M);
  return HomAlgebra(std::move(mu), s.direct_sum(a.alpha, m.phi));
}

inline HomAlgebra semidirect_product(const HomAlgebra& a, const Bimodule& m) {
  if (Report rep = verify_bimodule(a, m); !rep.ok()) throw DomainError("not a bimodule:\n" + rep.to_string());
  return split_extension(a, m);
}

// N(x)y + xN(y) - N(xy).
inline Multilinear deformed_tensor(const HomAlgebra& a, const Matrix& n) {
  return a.mu.precompose(0, n) + a.mu.precompose(1, n) - a.mu.postcompose(n);
}

inline Report verify_nijenhuis(const HomAlgebra& a, const Matrix& n) {
  check_map(n, a.dim(), a.dim(), a.field());
  Report report;
  if (!(n * a.alpha == a.alpha * n)) report.add("nijenhuis-twist");
  report_nonzero(report, "nijenhuis-torsion", a.mu.precompose_all(n) - deformed_tensor(a, n).postcompose(n));
  return report;
}

inline HomAlgebra deformed_product(const HomAlgebra& a, const Matrix& n) {
  if (Report rep = verify_nijenhuis(a, n); !rep.ok()) throw DomainError("not a Nijenhuis operator:\n" + rep.to_string());
  return HomAlgebra(deformed_tensor(a, n), a.alpha);
}

inline Multilinear commutator_tensor(const Multilinear& mu) {
  Multilinear swapped = Multilinear::from_basis(mu.field(), mu.in_dims(), mu.out_dim(),
                                                [&](const Index& idx) { return mu.value_at(Index{idx[1], idx[0]}); });
  return mu - swapped;
}

inline Vec commutator(const HomAlgebra& a, const Vec& x, const Vec& y) { return a.mul(x, y) - a.mul(y, x); }

}  // namespace hombrace
