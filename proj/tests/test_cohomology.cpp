#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

using namespace hombrace;
using hombrace::testing::f7_corpus;
using hombrace::testing::LineLeft;
using hombrace::testing::Random;

namespace {

const Field Q = Field::rationals();

struct Dims {
  std::size_t z, b, h;
  bool operator==(const Dims&) const = default;
};

Dims dims(const OContext& c, const Matrix& t, std::size_t n, ComplexOptions opt = {}) {
  const CohomologyDims d = cohomology_dims(c, t, n, opt);
  return {d.z, d.b, d.h};
}

}  // namespace

TEST(DifferentialMatrix, ZeroOperatorGivesZeroDegreeZeroMatrix) {
  const HomAlgebra a = dual_numbers(Q);
  const Bimodule m = adjoint_bimodule(a);
  const OContext c{a, m};
  const ComplexSlice s = differential_matrix(c, Matrix(Q, 2, 2), 0);
  EXPECT_EQ(s.d, Matrix(Q, s.next_basis.size(), s.basis.size()));
}

TEST(DifferentialMatrix, DimOneDegreeZeroIsOne) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  for (Differential which : {Differential::T, Differential::H}) {
    const ComplexSlice s = differential_matrix(c, o.t, 0, {which});
    EXPECT_EQ(s.d, Matrix::identity(Q, 1));
  }
}

// Brute-force oracle: evaluate d on every basis cochain at every basis tuple.
TEST(DifferentialMatrix, MatchesPointwiseEvaluationOnExample25) {
  const HomAlgebra a = example25(Q, 1, 1);
  const Bimodule m = adjoint_bimodule(a);
  const OContext c{a, m};
  const Matrix t = example25_operator(Q, 3L, 5L);
  const ComplexSlice s = differential_matrix(c, t, 1);
  for (std::size_t j = 0; j < s.basis.size(); ++j) {
    Multilinear rebuilt = Multilinear::uniform(Q, 2, 3, 3);
    for (std::size_t i = 0; i < s.next_basis.size(); ++i) rebuilt.add_scaled(s.d(i, j), s.next_basis[i]);
    const Cochain direct = d_T(c, t, s.basis[j]);
    detail::for_each_index(std::vector<std::size_t>{3, 3}, [&](const Index& idx) {
      EXPECT_EQ(rebuilt.value_at(idx), direct.value_at(idx));
    });
  }
}

TEST(DifferentialMatrix, DegreeCapIsEnforced) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  EXPECT_THROW(differential_matrix(c, o.t, max_degree() + 1), InputError);
}

TEST(CohomologyDims, TrivialActionsZeroOperator) {
  const HomAlgebra a = line_algebra(Q);
  const Bimodule m = trivial_module(Q, 1, 1);
  const OContext c{a, m};
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(dims(c, Matrix(Q, 1, 1), n), (Dims{1, 0, 1})) << n;
}

TEST(CohomologyDims, DimOneOracle) {
  // d^0 = (1), d^1 = 0, d^2 = (1): hand-derived from the degree-0 expression and the cocycle expression.
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  EXPECT_EQ(dims(c, o.t, 0), (Dims{0, 0, 0}));
  EXPECT_EQ(dims(c, o.t, 1), (Dims{1, 1, 0}));
  EXPECT_EQ(dims(c, o.t, 2), (Dims{0, 0, 0}));
}

TEST(CohomologyDims, BothDifferentialsAgree) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 3))
      for (std::size_t n = 0; n <= 2; ++n)
        EXPECT_EQ(dims(c, t, n, {Differential::T}), dims(c, t, n, {Differential::H})) << e.instance.name;
  }
}

TEST(CohomologyDims, SliceCompositionIsZero) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2))
      for (std::size_t n = 0; n + 1 <= 2; ++n) {
        const ComplexSlice lo = differential_matrix(c, t, n), hi = differential_matrix(c, t, n + 1);
        EXPECT_EQ(hi.d * lo.d, Matrix(c.field(), hi.d.rows(), lo.d.cols())) << e.instance.name;
      }
  }
}

TEST(CohomologyDims, UnconstrainedComplexIsLarger) {
  const Field f = Field::prime(7);
  const auto inst = small_instances(f)[9];  // twisted dual numbers
  const OContext c{inst.algebra, inst.module};
  const Matrix t(f, 2, 2);
  EXPECT_LT(cochain_basis(c, 1, false).size(), cochain_basis(c, 1, true).size());
  const Dims d = dims(c, t, 1, {Differential::T, true});
  EXPECT_EQ(d.z, d.b + d.h);
}

TEST(Coboundary, DifferentialOfAnElementHasAWitness) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2))
      for (const auto& b : cochain_basis(c, 0, false)) {
        const Cochain f = d_H(c, t, b);
        EXPECT_TRUE(is_cocycle(c, t, f));
        const auto w = is_coboundary(c, t, f);
        ASSERT_TRUE(w) << e.instance.name;
        EXPECT_EQ(d_T(c, t, *w), f);
      }
  }
}

TEST(Coboundary, DimOneOperatorItself) {
  // d^0 = (1) and T is a 1-cocycle, so T = d(e) up to scale.
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  const Cochain tl = Multilinear::linear(o.t);
  EXPECT_TRUE(is_cocycle(c, o.t, tl));
  const auto w = is_coboundary(c, o.t, tl);
  ASSERT_TRUE(w);
  EXPECT_EQ(d_T(c, o.t, *w), tl);
  EXPECT_FALSE(is_coboundary(c, o.t, Multilinear::constant(Q, unit_vec(Q, 1, 0))));
}

TEST(Coboundary, NonCocyclesAreNotCoboundaries) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  const Cochain f = cochain_basis(c, 2, false).front();
  EXPECT_FALSE(is_cocycle(c, o.t, f));
  EXPECT_FALSE(is_coboundary(c, o.t, f));
}

TEST(H0, Examples) {
  const HomAlgebra a = dual_numbers(Q);
  const Bimodule m = adjoint_bimodule(a);
  const OContext c{a, m};
  Matrix t(Q, 2, 2);
  t(1, 0) = Q.one();
  ASSERT_TRUE(verify_o_operator(a, m, t).ok());
  EXPECT_EQ(h0_space(c, t).basis.size(), 2u);

  const LineLeft o;
  const OContext d{o.algebra, o.module};
  EXPECT_TRUE(h0_space(d, o.t).basis.empty());
}

TEST(H0, ClosedUnderCommutatorOnCorpus) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : e.operators) EXPECT_TRUE(h0_space(c, t).closure.ok()) << e.instance.name;
  }
}

TEST(H0, MembershipMatchesDisplayedCondition) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    const HomAlgebra& a = e.instance.algebra;
    const Bimodule& m = e.instance.module;
    if (!(a.alpha == Matrix::identity(a.field(), a.dim())) || !(m.phi == Matrix::identity(a.field(), m.dim())))
      continue;
    for (const auto& t : hombrace::testing::sample_operators(e, 3)) {
      const std::size_t h0 = h0_space(c, t).basis.size();
      std::size_t members = 0;
      for (const auto& x : all_vectors(c.field(), c.a())) {
        bool in = true;
        for (std::size_t u = 0; u < c.m() && in; ++u) {
          const Vec mu = unit_vec(c.field(), c.m(), u);
          // a T(m) - T(m) a = T(l(a,m) - r(m,a))
          in = a.mul(x, t.apply(mu)) - a.mul(t.apply(mu), x) == t.apply(m.left(x, mu) - m.right(mu, x));
        }
        if (in) ++members;
      }
      std::size_t expected = 1;
      for (std::size_t i = 0; i < h0; ++i) expected *= 7;
      EXPECT_EQ(members, expected) << e.instance.name;
    }
  }
}

TEST(MaxDegree, ReadsEnvironment) {
  ::setenv("HOMBRACE_MAX_DEGREE", "1", 1);
  EXPECT_EQ(max_degree(), 1u);
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  EXPECT_THROW(cohomology_dims(c, o.t, 2), InputError);
  ::setenv("HOMBRACE_MAX_DEGREE", "lots", 1);
  EXPECT_THROW(max_degree(), InputError);
  ::unsetenv("HOMBRACE_MAX_DEGREE");
  EXPECT_EQ(max_degree(), 3u);
}
