#pragma once

/// O-operators T : M -> A, their characterizations, and induced structures.
///
/// Juxtaposition in the literature is always spelled out here:
///   T(u)v = l(T(u), v),  uT(v) = r(u, T(v)).

#include <string>
#include <vector>

#include "hombrace/errors.hpp"
#include "hombrace/hom_algebra.hpp"
#include "hombrace/report.hpp"
#include "hombrace/split.hpp"

namespace hombrace {

// l(Tu, v) + r(u, Tv), indexed by (u, v).
inline Multilinear star_tensor(const Bimodule& m, const Matrix& t) {
  return m.l.precompose(0, t) + m.r.precompose(1, t);
}

// T(u)T(v) - T(l(Tu,v) + r(u,Tv)).
inline Multilinear o_operator_defect(const HomAlgebra& a, const Bimodule& m, const Matrix& t) {
  return a.mu.precompose(0, t).precompose(1, t) - star_tensor(m, t).postcompose(t);
}

inline Report verify_o_operator(const HomAlgebra& a, const Bimodule& m, const Matrix& t) {
  check_compatible(a, m);
  check_map(t, m.dim(), a.dim(), a.field());
  Report report;
  report_nonzero(report, "twist-compat", Multilinear::linear(t * m.phi - a.alpha * t));
  report_nonzero(report, "o-operator", o_operator_defect(a, m, t));
  return report;
}

inline Report verify_rota_baxter(const HomAlgebra& a, const Matrix& r) {
  return verify_o_operator(a, adjoint_bimodule(a), r);
}

// [[0, T], [0, 0]] on A (+) M.
inline Matrix hat_lift(const HomAlgebra& a, const Bimodule& m, const Matrix& t) {
  check_map(t, m.dim(), a.dim(), a.field());
  Split s{a.field(), a.dim(), m.dim()};
  return s.inclusion(Part::A) * t * s.projection(Part::M);
}

inline Matrix nijenhuis_lift(const HomAlgebra& a, const Bimodule& m, const Matrix& t) { return hat_lift(a, m, t); }

// Gr(T) = {(Tu, u)} closed under the split-extension product and under alpha (+) phi.
inline bool graph_is_subalgebra(const HomAlgebra& a, const Bimodule& m, const Matrix& t) {
  check_map(t, m.dim(), a.dim(), a.field());
  HomAlgebra v = split_extension(a, m);
  Split s{a.field(), a.dim(), m.dim()};
  const Matrix pa = s.projection(Part::A), pm = s.projection(Part::M);
  auto in_graph = [&](const Vec& w) { return pa.apply(w) == t.apply(pm.apply(w)); };
  std::vector<Vec> graph;
  for (std::size_t u = 0; u < m.dim(); ++u) {
    Vec e = unit_vec(a.field(), m.dim(), u);
    graph.push_back(s.pair(t.apply(e), e));
  }
  for (const auto& g : graph) {
    if (!in_graph(v.alpha.apply(g))) return false;
    for (const auto& h : graph)
      if (!in_graph(v.mul(g, h))) return false;
  }
  return true;
}

struct HomDendriform {
  Multilinear prec;
  Multilinear succ;
  Matrix phi;

  HomDendriform(Multilinear prec_, Multilinear succ_, Matrix phi_)
      : prec(std::move(prec_)), succ(std::move(succ_)), phi(std::move(phi_)) {
    const std::size_t d = phi.rows();
    if (!phi.is_square()) throw InputError("twist must be square");
    for (const auto* p : {&prec, &succ})
      if (p->arity() != 2 || !p->is_uniform(d) || p->out_dim() != d) throw InputError("dendriform product shape mismatch");
  }

  std::size_t dim() const { return phi.rows(); }
};

inline Report verify_hom_dendriform(const HomDendriform& d) {
  const auto& p = d.prec;
  const auto& s = d.succ;
  const auto& f = d.phi;
  const Multilinear sum = p + s;
  Report report;
  report_nonzero(report, "dendriform-1", p.insert(0, p).precompose(2, f) - p.precompose(0, f).insert(1, sum));
  report_nonzero(report, "dendriform-2", p.insert(0, s).precompose(2, f) - s.precompose(0, f).insert(1, p));
  report_nonzero(report, "dendriform-3", s.insert(0, sum).precompose(2, f) - s.precompose(0, f).insert(1, s));
  return report;
}

namespace detail {
inline void require_o_operator(const HomAlgebra& a, const Bimodule& m, const Matrix& t, bool force) {
  if (force) {
    check_compatible(a, m);
    check_map(t, m.dim(), a.dim(), a.field());
    return;
  }
  if (Report rep = verify_o_operator(a, m, t); !rep.ok()) throw DomainError("not an O-operator:\n" + rep.to_string());
}
}  // namespace detail

// u < v = r(u, Tv), u > v = l(Tu, v).
inline HomDendriform induced_dendriform(const HomAlgebra& a, const Bimodule& m, const Matrix& t, bool force = false) {
  detail::require_o_operator(a, m, t, force);
  return HomDendriform(m.r.precompose(1, t), m.l.precompose(0, t), m.phi);
}

// (M, star_T, phi).
inline HomAlgebra induced_module_algebra(const HomAlgebra& a, const Bimodule& m, const Matrix& t, bool force = false) {
  detail::require_o_operator(a, m, t, force);
  return HomAlgebra(star_tensor(m, t), m.phi);
}

struct InducedBimodule {
  HomAlgebra base;
  Bimodule module;
};

// A as a bimodule over (M, star_T, phi):
//   l_T(u, x) = T(u)x - T(r(u, x)),  r_T(x, u) = xT(u) - T(l(x, u)).
inline InducedBimodule induced_bimodule_on_A(const HomAlgebra& a, const Bimodule& m, const Matrix& t,
                                             bool force = false) {
  detail::require_o_operator(a, m, t, force);
  Multilinear lt = a.mu.precompose(0, t) - m.r.postcompose(t);
  Multilinear rt = a.mu.precompose(1, t) - m.l.postcompose(t);
  return {HomAlgebra(star_tensor(m, t), m.phi), Bimodule(std::move(lt), std::move(rt), a.alpha)};
}

}  // namespace hombrace
