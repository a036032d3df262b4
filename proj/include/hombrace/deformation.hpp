#pragma once

/// Deformations of an O-operator T: infinitesimal generators, Nijenhuis
/// elements, equivalences, order-n series, obstruction and extension.
///
/// Throughout, D_x = L_x - R_x on A (y -> xy - yx) and g_x = l_x - r_x on M
/// (u -> l(x,u) - r(u,x)).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hombrace/cochain.hpp"
#include "hombrace/cohomology.hpp"
#include "hombrace/o_operator.hpp"
#include "hombrace/report.hpp"

namespace hombrace {

inline Matrix inner_derivation(const HomAlgebra& a, const Vec& x) {
  const Multilinear xv = Multilinear::constant(a.field(), x);
  return (a.mu.insert(0, xv) - a.mu.insert(1, xv)).as_matrix();
}

inline Matrix module_inner(const Bimodule& m, const Vec& x) {
  const Multilinear xv = Multilinear::constant(m.field(), x);
  return (m.l.insert(0, xv) - m.r.insert(1, xv)).as_matrix();
}

inline Matrix as_map(const Cochain& f) { return f.as_matrix(); }

// ---------------------------------------------------------------------------
// Infinitesimal deformations T + t gen.

// T(u)G(v) + G(u)T(v) - T(l(Gu,v) + r(u,Gv)) - G(l(Tu,v) + r(u,Tv)).
inline Multilinear infinitesimal_cocycle_defect(const HomAlgebra& a, const Bimodule& m, const Matrix& t,
                                                const Matrix& g) {
  return a.mu.precompose(0, t).precompose(1, g) + a.mu.precompose(0, g).precompose(1, t) -
         star_tensor(m, g).postcompose(t) - star_tensor(m, t).postcompose(g);
}

inline Report verify_infinitesimal(const OContext& c, const Matrix& t, const Cochain& gen) {
  c.check(gen);
  if (gen.arity() != 1) throw InputError("an infinitesimal generator is a degree-1 cochain");
  const Matrix g = as_map(gen);
  Report report;
  report_nonzero(report, "generator-twist", Multilinear::linear(g * c.module.phi - c.algebra.alpha * g));
  report_nonzero(report, "generator-cocycle", infinitesimal_cocycle_defect(c.algebra, c.module, t, g));
  report_nonzero(report, "generator-o-operator", o_operator_defect(c.algebra, c.module, g));
  return report;
}

// The three dendriform defects with the outer product taken from (op, os) and the inner from (ip, is).
inline std::vector<Multilinear> dendriform_defects(const Multilinear& op, const Multilinear& os, const Multilinear& ip,
                                                   const Multilinear& is, const Matrix& phi) {
  return {op.insert(0, ip).precompose(2, phi) - op.precompose(0, phi).insert(1, ip + is),
          op.insert(0, is).precompose(2, phi) - os.precompose(0, phi).insert(1, ip),
          os.insert(0, ip + is).precompose(2, phi) - os.precompose(0, phi).insert(1, is)};
}

struct DendriformDeformation {
  HomDendriform base;
  Multilinear omega_prec;  // r(u, G v)
  Multilinear omega_succ;  // l(G u, v)
  Report report;           // coefficientwise check of the deformed identities and the deformed star product
};

inline DendriformDeformation induced_dendriform_deformation(const OContext& c, const Matrix& t, const Cochain& gen) {
  if (Report rep = verify_infinitesimal(c, t, gen); !rep.ok())
    throw DomainError("not an infinitesimal generator:\n" + rep.to_string());
  const Matrix g = as_map(gen);
  DendriformDeformation out{induced_dendriform(c.algebra, c.module, t), c.module.r.precompose(1, g),
                            c.module.l.precompose(0, g), {}};
  const auto& bp = out.base.prec;
  const auto& bs = out.base.succ;
  const auto& wp = out.omega_prec;
  const auto& ws = out.omega_succ;
  const Matrix& phi = c.module.phi;
  const auto d0 = dendriform_defects(bp, bs, bp, bs, phi);
  const auto d1a = dendriform_defects(wp, ws, bp, bs, phi);
  const auto d1b = dendriform_defects(bp, bs, wp, ws, phi);
  const auto d2 = dendriform_defects(wp, ws, wp, ws, phi);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string law = "dendriform-" + std::to_string(i + 1);
    report_nonzero(out.report, law + "[t^0]", d0[i]);
    report_nonzero(out.report, law + "[t^1]", d1a[i] + d1b[i]);
    report_nonzero(out.report, law + "[t^2]", d2[i]);
  }
  const Multilinear s0 = bp + bs, s1 = wp + ws;
  report_nonzero(out.report, "star-deformation[t^0]", associator(s0, phi));
  report_nonzero(out.report, "star-deformation[t^1]",
                 s1.insert(0, s0).precompose(2, phi) + s0.insert(0, s1).precompose(2, phi) -
                     s1.precompose(0, phi).insert(1, s0) - s0.precompose(0, phi).insert(1, s1));
  report_nonzero(out.report, "star-deformation[t^2]", associator(s1, phi));
  return out;
}

// ---------------------------------------------------------------------------
// Nijenhuis elements and equivalence of infinitesimal deformations.

// The generator of the trivial deformation attached to x: u -> l_T(u,x) - r_T(x,u).
inline Cochain trivial_generator(const OContext& c, const Matrix& t, const Vec& x) { return zero_diff(c, t, x); }

inline Report verify_nijenhuis_element(const OContext& c, const Matrix& t, const Vec& x) {
  if (x.size() != c.a()) throw InputError("element has wrong dimension");
  const HomAlgebra& a = c.algebra;
  const Bimodule& m = c.module;
  const Matrix dx = inner_derivation(a, x);
  const Matrix gx = module_inner(m, x);
  Report report;
  if (!(a.alpha.apply(x) == x)) report.add("fixed-point", {}, a.alpha.apply(x) - x);
  // (y, z)
  report_nonzero(report, "nij-1", a.mu.precompose(0, dx).precompose(1, dx));
  // (u)
  report_nonzero(report, "nij-2", Multilinear::linear(dx * as_map(trivial_generator(c, t, x))));
  // (y, u)
  report_nonzero(report, "nij-3", m.l.precompose(0, dx).precompose(1, gx));
  // (u, y)
  report_nonzero(report, "nij-4", m.r.precompose(0, gx).precompose(1, dx));
  return report;
}

// The three Hom-Lie conditions for the commutator bracket and rho(x)v = l(x,v) - r(v,x).
inline Report hom_lie_nijenhuis_comparison(const OContext& c, const Matrix& t, const Vec& x) {
  const HomAlgebra& a = c.algebra;
  const Bimodule& m = c.module;
  const Matrix dx = inner_derivation(a, x);
  const Matrix rho_x = module_inner(m, x);
  const Multilinear br = commutator_tensor(a.mu);
  // rho as a bilinear map (y, v) -> l(y,v) - r(v,y)
  const Multilinear rho = m.l - Multilinear::from_basis(c.field(), {c.a(), c.m()}, c.m(), [&](const Index& idx) {
                            return m.r.value_at(Index{idx[1], idx[0]});
                          });
  Report report;
  report_nonzero(report, "hom-lie-1", br.precompose(0, dx).precompose(1, dx));
  report_nonzero(report, "hom-lie-2", rho.precompose(0, dx).precompose(1, rho_x));
  // v -> T(rho(x)v) + [Tv, x], then [x, .]
  const Matrix inner = t * rho_x - dx * t;
  report_nonzero(report, "hom-lie-3", Multilinear::linear(dx * inner));
  return report;
}

inline Cochain trivial_deformation_from(const OContext& c, const Matrix& t, const Vec& x) {
  if (Report rep = verify_nijenhuis_element(c, t, x); !rep.ok())
    throw DomainError("not a Nijenhuis element:\n" + rep.to_string());
  return trivial_generator(c, t, x);
}

// (id + t D_x, id + t g_x) is a morphism from T + t gen1 to T + t gen2, coefficientwise.
inline Report verify_equivalence_infinitesimal(const OContext& c, const Matrix& t, const Cochain& gen1,
                                               const Cochain& gen2, const Vec& x) {
  c.check(gen1);
  c.check(gen2);
  if (x.size() != c.a()) throw InputError("element has wrong dimension");
  const HomAlgebra& a = c.algebra;
  const Bimodule& m = c.module;
  const Matrix g1 = as_map(gen1), g2 = as_map(gen2);
  const Matrix dx = inner_derivation(a, x);
  const Matrix gx = module_inner(m, x);
  Report report;
  if (!(a.alpha.apply(x) == x)) report.add("fixed-point", {}, a.alpha.apply(x) - x);
  // (i) homomorphism
  report_nonzero(report, "comm-comm-zero", a.mu.precompose(0, dx).precompose(1, dx));
  report_nonzero(report, "derivation[t^1]",
                 a.mu.postcompose(dx) - a.mu.precompose(0, dx) - a.mu.precompose(1, dx));
  report_nonzero(report, "algebra-twist[t^1]", Multilinear::linear(dx * a.alpha - a.alpha * dx));
  // (ii)
  report_nonzero(report, "module-twist[t^1]", Multilinear::linear(gx * m.phi - m.phi * gx));
  // (iii)
  report_nonzero(report, "1-cocycle-linear", Multilinear::linear(g1 - g2 - (t * gx - dx * t)));
  report_nonzero(report, "T1-T2", Multilinear::linear(dx * g1 - g2 * gx));
  // (iv) on (y, u)
  report_nonzero(report, "ll-lr[t^1]",
                 m.l.precompose(0, dx) + m.l.precompose(1, gx) - m.l.postcompose(gx));
  report_nonzero(report, "ll-lr", m.l.precompose(0, dx).precompose(1, gx));
  // (v) on (u, y)
  report_nonzero(report, "rl-rr[t^1]",
                 m.r.precompose(0, gx) + m.r.precompose(1, dx) - m.r.postcompose(gx));
  report_nonzero(report, "rl-rr", m.r.precompose(0, gx).precompose(1, dx));
  return report;
}

// Best-effort search for x with verify_equivalence_infinitesimal passing: solve the
// linear conditions zero_diff(x) = gen1 - gen2, alpha(x) = x, then filter the
// affine solution set (all of it over F_p, coefficients in -bound..bound over Q).
inline std::optional<Vec> find_equivalence_witness(const OContext& c, const Matrix& t, const Cochain& gen1,
                                                   const Cochain& gen2, long bound = 2) {
  const Field& f = c.field();
  const std::size_t n = c.a(), g = c.m() * c.a();
  Matrix sys(f, g + n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = unit_vec(f, n, i);
    const Vec col = trivial_generator(c, t, e).coeffs();
    for (std::size_t r = 0; r < g; ++r) sys(r, i) = col[r];
    const Vec ae = c.algebra.alpha.apply(e) - e;
    for (std::size_t r = 0; r < n; ++r) sys(g + r, i) = ae[r];
  }
  Vec rhs = (gen1 - gen2).coeffs();
  rhs.resize(g + n, f.zero());
  const auto sol = solve_affine(sys, rhs);
  if (!sol) return std::nullopt;
  std::vector<Scalar> values;
  if (f.is_rational())
    for (long v = -bound; v <= bound; ++v) values.push_back(f.from_int(v));
  else
    for (std::uint32_t v = 0; v < f.characteristic(); ++v) values.push_back(f.from_int(v));
  const std::size_t k = sol->kernel.size();
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    Vec x = sol->particular;
    for (std::size_t j = 0; j < k; ++j) axpy(x, values[digits[j]], sol->kernel[j]);
    if (verify_equivalence_infinitesimal(c, t, gen1, gen2, x).ok()) return x;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < values.size()) break;
      digits[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Order-n deformations T_t = T + sum t^i T_i.

struct DeformationSeries {
  Matrix base;
  std::vector<Matrix> terms;  // T_1 .. T_n

  std::size_t order() const { return terms.size(); }
  const Matrix& at(std::size_t i) const { return i == 0 ? base : terms.at(i - 1); }
};

// sum_{i+j=k} T_i(u)T_j(v) - T_i(l(T_j u, v) + r(u, T_j v)).
inline Multilinear order_defect(const OContext& c, const DeformationSeries& s, std::size_t k) {
  Multilinear out = Multilinear::uniform(c.field(), 2, c.m(), c.a());
  for (std::size_t i = 0; i <= k; ++i) {
    const Matrix& ti = s.at(i);
    const Matrix& tj = s.at(k - i);
    out += c.algebra.mu.precompose(0, ti).precompose(1, tj);
    out -= star_tensor(c.module, tj).postcompose(ti);
  }
  return out;
}

inline Report verify_order_n(const OContext& c, const DeformationSeries& s) {
  Report report;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    check_map(s.at(i), c.m(), c.a(), c.field());
    report_nonzero(report, "term-twist[" + std::to_string(i) + "]",
                   Multilinear::linear(s.at(i) * c.module.phi - c.algebra.alpha * s.at(i)));
  }
  for (std::size_t k = 0; k <= s.order(); ++k) report_nonzero(report, "order-" + std::to_string(k), order_defect(c, s, k));
  return report;
}

// Theta = -1/2 sum_{i+j=n+1; i,j>0} [[T_i, T_j]].
inline Cochain obstruction(const OContext& c, const DeformationSeries& s) {
  if (c.field().characteristic() == 2) throw InputError("the obstruction needs 1/2; characteristic 2 is unsupported");
  if (Report rep = verify_order_n(c, s); !rep.ok())
    throw DomainError("not a deformation of order " + std::to_string(s.order()) + ":\n" + rep.to_string());
  const std::size_t n = s.order();
  Cochain sum = Multilinear::uniform(c.field(), 2, c.m(), c.a());
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t j = n + 1 - i;
    if (j < 1 || j > n) continue;
    sum += derived_bracket(c, Multilinear::linear(s.at(i)), Multilinear::linear(s.at(j)));
  }
  return -(c.field().from_int(2).inverse()) * sum;
}

struct Extension {
  Cochain theta;
  std::optional<Matrix> next;  // T_{n+1} solving [[T, X]] = Theta
};

inline Extension extend(const OContext& c, const DeformationSeries& s) {
  Extension out{obstruction(c, s), std::nullopt};
  if (auto x = is_coboundary(c, s.base, out.theta)) {
    DeformationSeries longer = s;
    longer.terms.push_back(as_map(*x));
    if (Report rep = verify_order_n(c, longer); !rep.ok())
      throw DomainError("extension failed re-verification:\n" + rep.to_string());
    out.next = as_map(*x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rigidity and formal equivalence.

struct RigidityProbe {
  std::size_t z1;
  std::size_t span;          // dim span of the candidate generators
  bool inside_z1;            // every candidate generator is a 1-cocycle
  bool sufficient() const { return inside_z1 && span == z1; }
};

inline RigidityProbe rigidity_probe(const OContext& c, const Matrix& t, const std::vector<Vec>& candidates) {
  for (const auto& x : candidates)
    if (Report rep = verify_nijenhuis_element(c, t, x); !rep.ok())
      throw DomainError("candidate is not a Nijenhuis element:\n" + rep.to_string());
  const CohomologyDims h1 = cohomology_dims(c, t, 1);
  std::vector<Vec> gens;
  for (const auto& x : candidates) gens.push_back(trivial_generator(c, t, x).coeffs());
  const std::size_t size = c.m() * c.a();
  RigidityProbe out{h1.z, 0, true};
  if (!gens.empty()) out.span = rank(Matrix::from_columns(c.field(), size, gens));
  for (const auto& x : candidates)
    if (!is_cocycle(c, t, trivial_generator(c, t, x))) out.inside_z1 = false;
  return out;
}

struct EquivalenceWitness {
  Vec x;
  std::vector<Matrix> higher_f;  // f_2, f_3, ...
  std::vector<Matrix> higher_g;  // g_2, g_3, ...
};

// f_t T_t = Tbar_t g_t, f_t multiplicative and twist-commuting, g_t intertwining the
// actions and phi; all modulo t^{k+1}.
inline Report verify_formal_equivalence(const OContext& c, const DeformationSeries& s1, const DeformationSeries& s2,
                                        const EquivalenceWitness& w, std::size_t k) {
  const HomAlgebra& a = c.algebra;
  const Bimodule& m = c.module;
  const Field& field = c.field();
  auto coeff = [](const std::vector<Matrix>& series, std::size_t i, const Matrix& zero) -> Matrix {
    return i < series.size() ? series[i] : zero;
  };
  const Matrix za(field, c.a(), c.a()), zm(field, c.m(), c.m()), zt(field, c.a(), c.m());
  std::vector<Matrix> f{Matrix::identity(field, c.a()), inner_derivation(a, w.x)};
  std::vector<Matrix> g{Matrix::identity(field, c.m()), module_inner(m, w.x)};
  for (const auto& h : w.higher_f) f.push_back(h);
  for (const auto& h : w.higher_g) g.push_back(h);
  std::vector<Matrix> t1{s1.base}, t2{s2.base};
  t1.insert(t1.end(), s1.terms.begin(), s1.terms.end());
  t2.insert(t2.end(), s2.terms.begin(), s2.terms.end());

  Report report;
  if (!(a.alpha.apply(w.x) == w.x)) report.add("fixed-point", {}, a.alpha.apply(w.x) - w.x);
  for (std::size_t e = 0; e <= k; ++e) {
    const std::string tag = "[t^" + std::to_string(e) + "]";
    Matrix intertwine = zt;
    Multilinear mult = a.mu.postcompose(coeff(f, e, za));
    Multilinear left = m.l.postcompose(coeff(g, e, zm));
    Multilinear right = m.r.postcompose(coeff(g, e, zm));
    for (std::size_t i = 0; i <= e; ++i) {
      const std::size_t j = e - i;
      intertwine = intertwine + coeff(f, i, za) * coeff(t1, j, zt) - coeff(t2, i, zt) * coeff(g, j, zm);
      mult -= a.mu.precompose(0, coeff(f, i, za)).precompose(1, coeff(f, j, za));
      left -= m.l.precompose(0, coeff(f, i, za)).precompose(1, coeff(g, j, zm));
      right -= m.r.precompose(0, coeff(g, i, zm)).precompose(1, coeff(f, j, za));
    }
    report_nonzero(report, "intertwine" + tag, Multilinear::linear(intertwine));
    report_nonzero(report, "multiplicative" + tag, mult);
    report_nonzero(report, "left-action" + tag, left);
    report_nonzero(report, "right-action" + tag, right);
    report_nonzero(report, "algebra-twist" + tag,
                   Multilinear::linear(coeff(f, e, za) * a.alpha - a.alpha * coeff(f, e, za)));
    report_nonzero(report, "module-twist" + tag,
                   Multilinear::linear(coeff(g, e, zm) * m.phi - m.phi * coeff(g, e, zm)));
  }
  return report;
}

// The order-1 partner of s under (id + t D_x, id + t g_x): Tbar_1 = T_1 + D_x T - T g_x.
inline DeformationSeries conjugate_first_order(const OContext& c, const DeformationSeries& s, const Vec& x) {
  const Matrix t1 = s.order() ? s.terms[0] : Matrix(c.field(), c.a(), c.m());
  DeformationSeries out{s.base, {t1 + inner_derivation(c.algebra, x) * s.base - s.base * module_inner(c.module, x)}};
  return out;
}

}  // namespace hombrace
