#pragma once

/// Cochains, the twisted Gerstenhaber bracket, lifts to A (+) M, the derived
/// bracket on Hom(M^n, A) and the differentials d_T, d_H.
///
/// A cochain of degree n is a Multilinear map with n uniform input slots.
/// Twist compatibility means out_twist o f = f o in_twist^(x)n; degree-0
/// cochains are twist-fixed vectors.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hombrace/errors.hpp"
#include "hombrace/hom_algebra.hpp"
#include "hombrace/linalg.hpp"
#include "hombrace/multilinear.hpp"
#include "hombrace/o_operator.hpp"
#include "hombrace/split.hpp"

namespace hombrace {

using Cochain = Multilinear;

inline Scalar sign(const Field& field, long exponent) { return field.from_int(exponent % 2 == 0 ? 1 : -1); }

// f -> out_twist o f - f o in_twist^(x)n, as a matrix on flat coefficient vectors.
inline Matrix compatibility_operator(const Matrix& in_twist, const Matrix& out_twist, std::size_t n) {
  const Field& field = in_twist.field();
  const std::size_t di = in_twist.rows(), dout = out_twist.rows();
  Multilinear probe = Multilinear::uniform(field, n, di, dout);
  const std::size_t size = probe.coeffs().size();
  Matrix op(field, size, size);
  for (std::size_t c = 0; c < size; ++c) {
    Multilinear e = probe;
    e.coeffs()[c] = field.one();
    Multilinear image = e.postcompose(out_twist) - e.precompose_all(in_twist);
    for (std::size_t r = 0; r < size; ++r) op(r, c) = image.coeffs()[r];
  }
  return op;
}

inline Cochain cochain_from_coeffs(const Field& field, std::size_t n, std::size_t in_dim, std::size_t out_dim, Vec c) {
  return Multilinear::from_coeffs(field, std::vector<std::size_t>(n, in_dim), out_dim, std::move(c));
}

// Basis of the twist-compatible subspace of Hom(In^(x)n, Out); the full
// coordinate basis when `unconstrained`.
inline std::vector<Cochain> compatible_basis(const Matrix& in_twist, const Matrix& out_twist, std::size_t n,
                                             bool unconstrained = false) {
  const Field& field = in_twist.field();
  const std::size_t di = in_twist.rows(), dout = out_twist.rows();
  std::vector<Vec> vectors;
  if (unconstrained) {
    const std::size_t size = detail::product(std::vector<std::size_t>(n, di)) * dout;
    for (std::size_t i = 0; i < size; ++i) vectors.push_back(unit_vec(field, size, i));
  } else {
    vectors = kernel_basis(compatibility_operator(in_twist, out_twist, n));
  }
  std::vector<Cochain> basis;
  for (auto& v : vectors) basis.push_back(cochain_from_coeffs(field, n, di, dout, std::move(v)));
  return basis;
}

inline bool is_compatible(const Cochain& f, const Matrix& in_twist, const Matrix& out_twist) {
  return f.postcompose(out_twist) == f.precompose_all(in_twist);
}

// ---------------------------------------------------------------------------
// Twisted Gerstenhaber bracket on maps V^n -> V with twist alpha.

// f o g = sum_i (-1)^{(i-1)(n-1)} f(alpha^{n-1} a_1, .., g(a_i, .., a_{i+n-1}), .., alpha^{n-1} a_{m+n-1}).
inline Multilinear gerstenhaber_circ(const Multilinear& f, const Multilinear& g, const Matrix& alpha) {
  const std::size_t m = f.arity(), n = g.arity();
  if (m == 0 || n == 0) throw InputError("Gerstenhaber bracket needs degree >= 1 on both sides");
  const std::size_t d = alpha.rows();
  if (!f.is_uniform(d) || !g.is_uniform(d) || f.out_dim() != d || g.out_dim() != d)
    throw InputError("Gerstenhaber bracket: cochains are not on the twisted space");
  const Matrix an = alpha.power(static_cast<int>(n) - 1);
  Multilinear out = Multilinear::uniform(f.field(), m + n - 1, d, d);
  for (std::size_t i = 0; i < m; ++i)
    out.add_scaled(sign(f.field(), static_cast<long>(i * (n - 1))), f.precompose_all_except(i, an).insert(i, g));
  return out;
}

inline Multilinear gerstenhaber_bracket(const Multilinear& f, const Multilinear& g, const Matrix& alpha) {
  const long m = static_cast<long>(f.arity()), n = static_cast<long>(g.arity());
  Multilinear out = gerstenhaber_circ(f, g, alpha);
  out.add_scaled(-sign(f.field(), (m - 1) * (n - 1)), gerstenhaber_circ(g, f, alpha));
  return out;
}

// ---------------------------------------------------------------------------
// Lifts and bidegree on V = A (+) M.

struct Bidegree {
  int k;
  int l;
  bool operator==(const Bidegree&) const = default;
};

// k|l: an A-output block with l A-inputs and k-1 M-inputs, or an M-output
// block with l-1 A-inputs and k M-inputs. Absent for zero or mixed support.
inline std::optional<Bidegree> bidegree_of(const Multilinear& f, const Split& s) {
  if (!f.is_uniform(s.total()) || f.out_dim() != s.total()) throw InputError("bidegree_of: not a cochain on A (+) M");
  std::optional<Bidegree> found;
  const std::size_t out = f.out_dim();
  std::size_t flat = 0;
  bool mixed = false;
  detail::for_each_index(f.in_dims(), [&](const Index& idx) {
    int a_inputs = 0, m_inputs = 0;
    for (auto i : idx) (s.part_of(i) == Part::A ? a_inputs : m_inputs)++;
    for (std::size_t k = 0; k < out; ++k) {
      if (f.coeffs()[flat * out + k].is_zero()) continue;
      Bidegree b = s.part_of(k) == Part::A ? Bidegree{m_inputs + 1, a_inputs} : Bidegree{m_inputs, a_inputs + 1};
      if (found && !(*found == b)) mixed = true;
      found = b;
    }
    ++flat;
  });
  if (mixed) return std::nullopt;
  return found;
}

// Lift of a map between summands; a thin alias kept for call-site readability.
inline Multilinear lift(const Split& s, const Multilinear& f, const std::vector<Part>& inputs, Part output) {
  return s.lift(f, inputs, output);
}

// The lift of H : M^n -> A.
inline Multilinear lift_cochain(const Split& s, const Cochain& h) {
  return s.lift(h, std::vector<Part>(h.arity(), Part::M), Part::A);
}

// ---------------------------------------------------------------------------
// Maurer-Cartan check for pi = mu + l + r on A (+) M.

struct MaurerCartan {
  Multilinear defect;     // (1/2)[pi, pi] = pi o pi
  bool twist_compatible;  // pi o (alpha (+) phi)^2 = (alpha (+) phi) o pi
  bool ok() const { return twist_compatible && defect.is_zero(); }
};

inline MaurerCartan mc_check_semidirect(const HomAlgebra& a, const Bimodule& m) {
  HomAlgebra v = split_extension(a, m);
  return {gerstenhaber_circ(v.mu, v.mu, v.alpha), is_compatible(v.mu, v.alpha, v.alpha)};
}

// ---------------------------------------------------------------------------
// Derived bracket on C^n(M, A) = Hom(M^n, A).

struct OContext {
  const HomAlgebra& algebra;
  const Bimodule& module;

  const Field& field() const { return algebra.field(); }
  std::size_t a() const { return algebra.dim(); }
  std::size_t m() const { return module.dim(); }
  Split split() const { return Split{field(), a(), m()}; }

  void check(const Cochain& f) const {
    if (!f.is_uniform(m()) || f.out_dim() != a())
      throw InputError("cochain shape does not match Hom(M^n, A) with dim M = " + std::to_string(m()) +
                       ", dim A = " + std::to_string(a()));
    if (!(f.field() == field())) throw InputError("cochain over a different field");
  }

  Matrix phi_inverse() const {
    auto inv = try_inverse(module.phi);
    if (!inv) throw DomainError("module twist is not invertible");
    return *inv;
  }
};

// Degrees p, q >= 1. Expanded form of (-1)^p [[mu + l + r, P^], Q^] restricted to M-inputs.
inline Cochain derived_bracket_pos(const OContext& c, const Cochain& pc, const Cochain& qc) {
  c.check(pc);
  c.check(qc);
  const long p = static_cast<long>(pc.arity()), q = static_cast<long>(qc.arity());
  if (p == 0 || q == 0) throw InputError("derived_bracket_pos needs degrees >= 1");
  const Field& field = c.field();
  const auto& mu = c.algebra.mu;
  const auto& l = c.module.l;
  const auto& r = c.module.r;
  const Matrix& phi = c.module.phi;
  const Matrix& alpha = c.algebra.alpha;
  const Multilinear phi_q1 = Multilinear::linear(phi.power(static_cast<int>(q - 1)));
  const Multilinear phi_p1 = Multilinear::linear(phi.power(static_cast<int>(p - 1)));
  const Matrix phi_q = phi.power(static_cast<int>(q));
  const Matrix phi_p = phi.power(static_cast<int>(p));

  Cochain out = Multilinear::uniform(field, static_cast<std::size_t>(p + q), c.m(), c.a());
  Cochain inner = out;

  out.add_scaled(sign(field, p * (q - 1)),
                 bilinear_product(mu, pc.precompose_all(phi.power(static_cast<int>(q - 1))),
                                  qc.postcompose(alpha.power(static_cast<int>(p - 1)))));
  out.add_scaled(sign(field, p - 1),
                 bilinear_product(mu, qc.postcompose(alpha.power(static_cast<int>(p - 1))),
                                  pc.precompose_all(phi.power(static_cast<int>(q - 1)))));

  const Multilinear lq = bilinear_product(l, qc, phi_q1);
  const Multilinear rq = bilinear_product(r, phi_q1, qc);
  for (long j = 1; j <= p; ++j) {
    const auto slot = static_cast<std::size_t>(j - 1);
    const Multilinear base = pc.precompose_all_except(slot, phi_q);
    out.add_scaled(-sign(field, (p - 1) + (j - 1) + (j - 1) * (q - 1)), base.insert(slot, lq));
    out.add_scaled(-sign(field, (p - 1) + (j - 1) + j * (q - 1)), base.insert(slot, rq));
  }

  Multilinear lp = bilinear_product(l, pc, phi_p1);
  lp.add_scaled(sign(field, p - 1), bilinear_product(r, phi_p1, pc));
  for (long i = 1; i <= q; ++i) {
    const auto slot = static_cast<std::size_t>(i - 1);
    out.add_scaled(-sign(field, p * (q - 1) + (i - 1) * p), qc.precompose_all_except(slot, phi_p).insert(slot, lp));
  }
  out *= sign(field, p);
  return out;
}

// [[P, a]] for deg P >= 1 and a in A; needs phi invertible.
inline Cochain derived_bracket_deg0(const OContext& c, const Cochain& pc, const Vec& a) {
  c.check(pc);
  if (a.size() != c.a()) throw InputError("degree-0 cochain has wrong dimension");
  const std::size_t p = pc.arity();
  if (p == 0) throw InputError("derived_bracket_deg0 needs deg P >= 1");
  const Matrix phi_inv = c.phi_inverse();
  const Vec ap = c.algebra.alpha.power(static_cast<int>(p) - 1).apply(a);
  const Multilinear av = Multilinear::constant(c.field(), ap);
  const Multilinear pt = pc.precompose_all(phi_inv);
  // u -> l(a, phi^{-1} u) - r(phi^{-1} u, a)
  const Multilinear act = (c.module.l.insert(0, Multilinear::constant(c.field(), a)) -
                           c.module.r.insert(1, Multilinear::constant(c.field(), a)))
                              .precompose(0, phi_inv);
  Cochain out = bilinear_product(c.algebra.mu, pt, av) - bilinear_product(c.algebra.mu, av, pt);
  for (std::size_t j = 0; j < p; ++j) out += pc.insert(j, act);
  return out;
}

// Graded antisymmetric extension to all degrees; degree-0 cochains are vectors
// stored as arity-0 maps.
inline Cochain derived_bracket(const OContext& c, const Cochain& pc, const Cochain& qc) {
  if (pc.arity() > 0 && qc.arity() > 0) return derived_bracket_pos(c, pc, qc);
  if (pc.arity() > 0) return derived_bracket_deg0(c, pc, qc.coeffs());
  if (qc.arity() > 0) return -derived_bracket_deg0(c, qc, pc.coeffs());
  c.check(pc);
  c.check(qc);
  const Vec& x = pc.coeffs();
  const Vec& y = qc.coeffs();
  return Multilinear::constant(c.field(), commutator(c.algebra, x, y));
}

// The definition itself: (-1)^p [[pi, P^], Q^] on V, restricted to M-inputs and
// A-output. Degrees >= 1 only; used as an independent oracle.
inline Cochain derived_bracket_by_lift(const OContext& c, const Cochain& pc, const Cochain& qc) {
  c.check(pc);
  c.check(qc);
  const Split s = c.split();
  const HomAlgebra v = split_extension(c.algebra, c.module);
  const Multilinear outer =
      gerstenhaber_bracket(gerstenhaber_bracket(v.mu, lift_cochain(s, pc), v.alpha), lift_cochain(s, qc), v.alpha);
  const std::size_t n = pc.arity() + qc.arity();
  return sign(c.field(), static_cast<long>(pc.arity())) * s.restrict(outer, std::vector<Part>(n, Part::M), Part::A);
}

// ---------------------------------------------------------------------------
// Differentials.

// The equivalent characterizations of an O-operator, each computed independently.
struct OOperatorVerdicts {
  bool definition;         // verify_o_operator
  bool graph;              // Gr(T) is a Hom-subalgebra of the split extension
  bool lift_nijenhuis;     // [[0,T],[0,0]] is Nijenhuis on the split extension
  bool maurer_cartan;      // T twist-compatible and [[T,T]] = 0
  bool agree() const {
    return definition == graph && graph == lift_nijenhuis && lift_nijenhuis == maurer_cartan;
  }
};

inline OOperatorVerdicts o_operator_verdicts(const HomAlgebra& a, const Bimodule& m, const Matrix& t) {
  const OContext c{a, m};
  const Cochain tc = Multilinear::linear(t);
  return {verify_o_operator(a, m, t).ok(), graph_is_subalgebra(a, m, t),
          verify_nijenhuis(split_extension(a, m), hat_lift(a, m, t)).ok(),
          is_compatible(tc, m.phi, a.alpha) && derived_bracket(c, tc, tc).is_zero()};
}

// The untwisted degree-0 expression u -> T(u)x - T(r(u,x)) - xT(u) + T(l(x,u)).
inline Cochain zero_diff(const OContext& c, const Matrix& t, const Vec& x) {
  if (x.size() != c.a()) throw InputError("element has wrong dimension");
  const Multilinear xv = Multilinear::constant(c.field(), x);
  const Multilinear tl = Multilinear::linear(t);
  return bilinear_product(c.algebra.mu, tl, xv) - c.module.r.insert(1, xv).postcompose(t) -
         bilinear_product(c.algebra.mu, xv, tl) + c.module.l.insert(0, xv).postcompose(t);
}

inline Cochain d_T(const OContext& c, const Matrix& t, const Cochain& f) {
  return derived_bracket(c, Multilinear::linear(t), f);
}

inline Cochain d_H(const OContext& c, const Matrix& t, const Cochain& f) {
  c.check(f);
  const std::size_t n = f.arity();
  if (n == 0) return zero_diff(c, t, f.coeffs()).precompose(0, c.phi_inverse());
  const Field& field = c.field();
  const Matrix& phi = c.module.phi;
  const Matrix phi_n1 = phi.power(static_cast<int>(n) - 1);
  const Multilinear tphi = Multilinear::linear(t * phi_n1);
  const Multilinear phil = Multilinear::linear(phi_n1);
  const Multilinear star = star_tensor(c.module, t);

  Cochain out = bilinear_product(c.algebra.mu, tphi, f) - bilinear_product(c.module.r, phil, f).postcompose(t);
  for (std::size_t i = 1; i <= n; ++i)
    out.add_scaled(sign(field, static_cast<long>(i)), f.precompose_all_except(i - 1, phi).insert(i - 1, star));
  Multilinear tail = bilinear_product(c.algebra.mu, f, tphi) - bilinear_product(c.module.l, f, phil).postcompose(t);
  out.add_scaled(sign(field, static_cast<long>(n) + 1), tail);
  return out;
}

// Hom-Hochschild differential of (B, mu_B, beta) with values in a bimodule (N, l, r, psi):
// (df)(a_1..a_{n+1}) = l(beta^{n-1} a_1, f(a_2..)) + sum_i (-1)^i f(beta a_1, .., a_i a_{i+1}, .., beta a_{n+1})
//                      + (-1)^{n+1} r(f(a_1..a_n), beta^{n-1} a_{n+1}).  n >= 1.
inline Cochain hochschild_d(const HomAlgebra& b, const Bimodule& n_mod, const Cochain& f) {
  check_compatible(b, n_mod);
  const std::size_t n = f.arity();
  if (n == 0) throw InputError("hochschild_d is defined for degree >= 1");
  if (!f.is_uniform(b.dim()) || f.out_dim() != n_mod.dim()) throw InputError("hochschild_d: cochain shape mismatch");
  const Field& field = b.field();
  const Multilinear bn = Multilinear::linear(b.alpha.power(static_cast<int>(n) - 1));
  Cochain out = bilinear_product(n_mod.l, bn, f);
  for (std::size_t i = 1; i <= n; ++i)
    out.add_scaled(sign(field, static_cast<long>(i)), f.precompose_all_except(i - 1, b.alpha).insert(i - 1, b.mu));
  out.add_scaled(sign(field, static_cast<long>(n) + 1), bilinear_product(n_mod.r, f, bn));
  return out;
}

}  // namespace hombrace
