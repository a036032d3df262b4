#include <gtest/gtest.h>

#include "support.hpp"

using namespace hombrace;
using hombrace::testing::f7_corpus;
using hombrace::testing::LineLeft;
using hombrace::testing::Random;

namespace {

const Field Q = Field::rationals();

Cochain zero1(const OContext& c) { return Multilinear::uniform(c.field(), 1, c.m(), c.a()); }

// Basis of Z^1 as maps.
std::vector<Matrix> z1_basis(const OContext& c, const Matrix& t) {
  const ComplexSlice s = differential_matrix(c, t, 1);
  std::vector<Matrix> out;
  for (const auto& k : kernel_basis(s.d)) {
    Cochain g = zero1(c);
    for (std::size_t i = 0; i < k.size(); ++i) g.add_scaled(k[i], s.basis[i]);
    out.push_back(as_map(g));
  }
  return out;
}

}  // namespace

TEST(Infinitesimal, Examples) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 3)) {
      EXPECT_TRUE(verify_infinitesimal(c, t, zero1(c)).ok());
      EXPECT_TRUE(verify_infinitesimal(c, t, Multilinear::linear(t)).ok()) << e.instance.name;
    }
  }
}

TEST(Infinitesimal, GeneratorsAreCocycles) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    const auto basis = cochain_basis(c, 1, false);
    if (basis.size() > 3) continue;
    for (const auto& t : hombrace::testing::sample_operators(e, 3)) {
      for_each_map(c.field(), 1, basis.size(), field_elements(c.field()), [&](const Matrix& coeffs) {
        Cochain g = zero1(c);
        for (std::size_t i = 0; i < basis.size(); ++i) g.add_scaled(coeffs(0, i), basis[i]);
        if (!verify_infinitesimal(c, t, g).ok()) return;
        EXPECT_TRUE(is_cocycle(c, t, g)) << e.instance.name;
      });
    }
  }
}

TEST(Infinitesimal, WrongDegreeIsInputError) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  EXPECT_THROW(verify_infinitesimal(c, o.t, Multilinear::uniform(Q, 2, 1, 1)), InputError);
}

TEST(DendriformDeformation, Examples) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  const DendriformDeformation zero = induced_dendriform_deformation(c, o.t, zero1(c));
  EXPECT_TRUE(zero.omega_prec.is_zero());
  EXPECT_TRUE(zero.omega_succ.is_zero());
  EXPECT_TRUE(zero.report.ok());
  const DendriformDeformation self = induced_dendriform_deformation(c, o.t, Multilinear::linear(o.t));
  EXPECT_EQ(self.omega_prec, self.base.prec);
  EXPECT_EQ(self.omega_succ, self.base.succ);
  EXPECT_TRUE(self.report.ok());
}

TEST(DendriformDeformation, HoldsForCorpusGenerators) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 3))
      for (const auto& g : z1_basis(c, t)) {
        if (!verify_infinitesimal(c, t, Multilinear::linear(g)).ok()) continue;
        EXPECT_TRUE(induced_dendriform_deformation(c, t, Multilinear::linear(g)).report.ok()) << e.instance.name;
      }
  }
}

TEST(NijenhuisElement, Examples) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2)) {
      EXPECT_TRUE(verify_nijenhuis_element(c, t, zero_vec(c.field(), c.a())).ok());
      EXPECT_TRUE(hom_lie_nijenhuis_comparison(c, t, zero_vec(c.field(), c.a())).ok());
    }
  }
  // Commutative algebra with symmetric actions: every fixed x passes.
  const HomAlgebra a = dual_numbers(Q);
  const Bimodule m = adjoint_bimodule(a);
  const OContext c{a, m};
  Matrix t(Q, 2, 2);
  t(1, 0) = Q.one();
  for (long p = -2; p <= 2; ++p)
    for (long q = -2; q <= 2; ++q)
      EXPECT_TRUE(verify_nijenhuis_element(c, t, Vec{Q.from_int(p), Q.from_int(q)}).ok());
}

TEST(NijenhuisElement, Example25FixedPointPrecondition) {
  const HomAlgebra a = example25(Q, 1, 2);
  const Bimodule m = adjoint_bimodule(a);
  const OContext c{a, m};
  const Matrix t(Q, 3, 3);
  EXPECT_TRUE(verify_nijenhuis_element(c, t, unit_vec(Q, 3, 2)).violates("fixed-point"));
  EXPECT_FALSE(verify_nijenhuis_element(c, t, unit_vec(Q, 3, 0)).violates("fixed-point"));
}

TEST(NijenhuisElement, HomLieComparisonHolds) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 3))
      for (const auto& x : all_vectors(c.field(), c.a())) {
        if (!verify_nijenhuis_element(c, t, x).ok()) continue;
        EXPECT_TRUE(hom_lie_nijenhuis_comparison(c, t, x).ok()) << e.instance.name;
      }
  }
}

TEST(TrivialDeformation, Examples) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  EXPECT_TRUE(trivial_deformation_from(c, o.t, zero_vec(Q, 1)).is_zero());
  // x = s e: T(f)x - T(r(f,x)) - xT(f) + T(l(x,f)) = s e - 0 - s e + s e = s e
  for (long s = -2; s <= 2; ++s) {
    const Vec x{Q.from_int(s)};
    ASSERT_TRUE(verify_nijenhuis_element(c, o.t, x).ok());
    EXPECT_EQ(trivial_deformation_from(c, o.t, x), Q.from_int(s) * Multilinear::linear(o.t));
  }
}

TEST(TrivialDeformation, EveryNijenhuisElementGivesAnEquivalentToZeroDeformation) {
  std::size_t elements = 0;
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : e.operators)
      for (const auto& x : all_vectors(c.field(), c.a())) {
        if (!verify_nijenhuis_element(c, t, x).ok()) continue;
        ++elements;
        const Cochain g = trivial_deformation_from(c, t, x);
        EXPECT_TRUE(verify_infinitesimal(c, t, g).ok()) << e.instance.name;
        EXPECT_TRUE(verify_equivalence_infinitesimal(c, t, g, zero1(c), x).ok()) << e.instance.name;
        EXPECT_TRUE(is_cocycle(c, t, g));
      }
  }
  EXPECT_GT(elements, 100u);
}

TEST(Equivalence, Examples) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2)) {
      const Cochain g = Multilinear::linear(t);
      EXPECT_TRUE(verify_equivalence_infinitesimal(c, t, g, g, zero_vec(c.field(), c.a())).ok());
      for (const auto& x : all_vectors(c.field(), c.a())) {
        if (!verify_nijenhuis_element(c, t, x).ok()) continue;
        const Cochain shifted = g + trivial_deformation_from(c, t, x);
        // Shifts by a Nijenhuis element stay in the class; the witness also needs the quadratic term.
        EXPECT_TRUE(is_coboundary(c, t, shifted - g)) << e.instance.name;
      }
    }
  }
}

TEST(Equivalence, NonCoboundaryDifferenceHasNoWitness) {
  std::size_t scanned = 0;
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2))
      for (const auto& g : z1_basis(c, t)) {
        const Cochain gc = Multilinear::linear(g);
        if (is_coboundary(c, t, gc) || !verify_infinitesimal(c, t, gc).ok()) continue;
        for (const auto& x : all_vectors(c.field(), c.a()))
          EXPECT_FALSE(verify_equivalence_infinitesimal(c, t, gc, zero1(c), x).ok()) << e.instance.name;
        EXPECT_FALSE(find_equivalence_witness(c, t, gc, zero1(c)));
        ++scanned;
      }
  }
  EXPECT_GT(scanned, 0u);
}

TEST(Equivalence, WitnessSearchFindsNijenhuisShifts) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2))
      for (const auto& x : all_vectors(c.field(), c.a())) {
        if (!verify_nijenhuis_element(c, t, x).ok()) continue;
        const auto w = find_equivalence_witness(c, t, trivial_deformation_from(c, t, x), zero1(c));
        ASSERT_TRUE(w) << e.instance.name;
        EXPECT_TRUE(verify_equivalence_infinitesimal(c, t, trivial_deformation_from(c, t, x), zero1(c), *w).ok());
      }
  }
}

TEST(OrderN, Examples) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2)) {
      const Matrix z(c.field(), c.a(), c.m());
      EXPECT_TRUE(verify_order_n(c, DeformationSeries{t, {z, z, z}}).ok());
      // (1 + s) T is an O-operator only when T(u)T(v) terms cancel, i.e. always here.
      EXPECT_TRUE(verify_order_n(c, DeformationSeries{t, {t}}).ok()) << e.instance.name;
      for (const auto& g : z1_basis(c, t))
        EXPECT_FALSE(verify_order_n(c, DeformationSeries{t, {g}}).violates("order-1")) << e.instance.name;
    }
  }
}

TEST(Obstruction, Examples) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  EXPECT_TRUE(obstruction(c, DeformationSeries{o.t, {Matrix(Q, 1, 1)}}).is_zero());
  for (const auto& e : f7_corpus()) {
    const OContext d{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2))
      for (const auto& g : z1_basis(d, t)) {
        const DeformationSeries s{t, {g}};
        if (!verify_order_n(d, s).ok()) continue;
        const Cochain theta = obstruction(d, s);
        const Cochain gc = Multilinear::linear(g);
        EXPECT_EQ(theta, -(d.field().from_int(2).inverse()) * derived_bracket(d, gc, gc));
        EXPECT_TRUE(d_T(d, t, theta).is_zero()) << e.instance.name;
      }
  }
}

TEST(Obstruction, RequiresAValidSeries) {
  const HomAlgebra a = line_algebra(Q);
  const Bimodule m = line_module(Q, 1, 1);
  const OContext c{a, m};
  EXPECT_THROW(obstruction(c, DeformationSeries{scalar_map(Q, 1), {}}), DomainError);
  const Field f2 = Field::prime(2);
  const HomAlgebra a2 = line_algebra(f2);
  const Bimodule m2 = line_module(f2, 1, 0);
  EXPECT_THROW(obstruction(OContext{a2, m2}, DeformationSeries{scalar_map(f2, 1), {scalar_map(f2, 1)}}), InputError);
}

TEST(Extend, SucceedsExactlyWhenObstructionIsExact) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2))
      for (const auto& g : z1_basis(c, t)) {
        const DeformationSeries s{t, {g}};
        if (!verify_order_n(c, s).ok()) continue;
        const Extension x = extend(c, s);
        EXPECT_EQ(x.next.has_value(), is_coboundary(c, t, x.theta).has_value()) << e.instance.name;
        if (x.next) {
          DeformationSeries longer = s;
          longer.terms.push_back(*x.next);
          EXPECT_TRUE(verify_order_n(c, longer).ok());
        }
      }
  }
}

TEST(Extend, ZeroObstructionExtendsByZero) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  const Extension x = extend(c, DeformationSeries{o.t, {Matrix(Q, 1, 1)}});
  ASSERT_TRUE(x.next);
  EXPECT_TRUE(verify_order_n(c, DeformationSeries{o.t, {Matrix(Q, 1, 1), *x.next}}).ok());
}

TEST(Extend, VanishingSecondCohomologyReachesOrderFour) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  ASSERT_EQ(cohomology_dims(c, o.t, 2).h, 0u);
  DeformationSeries s{o.t, {scalar_map(Q, 3)}};
  while (s.order() < 4) {
    const Extension x = extend(c, s);
    ASSERT_TRUE(x.next) << "order " << s.order();
    s.terms.push_back(*x.next);
    EXPECT_TRUE(verify_order_n(c, s).ok());
  }
  EXPECT_EQ(s.order(), 4u);
}

TEST(Rigidity, Examples) {
  const LineLeft o;
  const OContext c{o.algebra, o.module};
  // Z^1 = span(T) = d_H(span e) and e is a Nijenhuis element.
  const RigidityProbe p = rigidity_probe(c, o.t, {unit_vec(Q, 1, 0)});
  EXPECT_TRUE(p.sufficient());
  const RigidityProbe q = rigidity_probe(c, o.t, {zero_vec(Q, 1)});
  EXPECT_FALSE(q.sufficient());
  EXPECT_EQ(q.z1, 1u);
}

TEST(FormalEquivalence, Examples) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2)) {
      const DeformationSeries s{t, {t}};
      EXPECT_TRUE(verify_formal_equivalence(c, s, s, {zero_vec(c.field(), c.a()), {}, {}}, 1).ok());
      for (const auto& x : all_vectors(c.field(), c.a())) {
        if (!verify_nijenhuis_element(c, t, x).ok()) continue;
        const DeformationSeries bar = conjugate_first_order(c, s, x);
        EXPECT_TRUE(verify_formal_equivalence(c, s, bar, {x, {}, {}}, 1).ok()) << e.instance.name;
      }
    }
  }
}

TEST(FormalEquivalence, MismatchedInfinitesimalsFail) {
  for (const auto& e : f7_corpus()) {
    const OContext c{e.instance.algebra, e.instance.module};
    for (const auto& t : hombrace::testing::sample_operators(e, 2))
      for (const auto& g : z1_basis(c, t)) {
        if (is_coboundary(c, t, Multilinear::linear(g))) continue;
        const DeformationSeries s1{t, {g}}, s2{t, {Matrix(c.field(), c.a(), c.m())}};
        for (const auto& x : all_vectors(c.field(), c.a()))
          EXPECT_FALSE(verify_formal_equivalence(c, s1, s2, {x, {}, {}}, 1).ok()) << e.instance.name;
      }
  }
}
