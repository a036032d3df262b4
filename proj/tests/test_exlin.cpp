#include <gtest/gtest.h>

#include "hombrace/field.hpp"
#include "hombrace/linalg.hpp"
#include "support.hpp"

using namespace hombrace;

namespace {

const Field Q = Field::rationals();

Vec vec(const Field& f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

Matrix mat(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> r;
  for (auto row : rows) r.push_back(vec(f, row));
  return Matrix::from_rows(f, r);
}

}  // namespace

TEST(Field, ParsesNamesAndScalars) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("Fp:7").characteristic(), 7u);
  EXPECT_THROW(Field::parse("Fp:8"), InputError);
  EXPECT_THROW(Field::parse("R"), InputError);
  EXPECT_EQ(Q.parse_scalar("6/4").to_string(), "3/2");
  EXPECT_EQ(Field::prime(7).parse_scalar("-1").to_string(), "6");
  EXPECT_EQ(Field::prime(7).parse_scalar("1/2").to_string(), "4");
  EXPECT_THROW(Q.parse_scalar("x"), InputError);
  EXPECT_THROW(Q.parse_scalar("1/0"), InputError);
}

TEST(Field, ArithmeticAndInverse) {
  const Field f = Field::prime(65521);
  for (long v : {1L, 2L, 12345L, 65520L}) EXPECT_TRUE((f.from_int(v) * f.from_int(v).inverse()).is_one());
  EXPECT_THROW(Q.zero().inverse(), DomainError);
  EXPECT_EQ((Q.from_int(1) / Q.from_int(3) + Q.from_int(1) / Q.from_int(6)).to_string(), "1/2");
}

TEST(Field, MixedFieldsThrow) {
  EXPECT_THROW(Q.one() + Field::prime(5).one(), InputError);
  EXPECT_THROW(Field::prime(3).one() * Field::prime(5).one(), InputError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(Q, 3)), 3u);
  EXPECT_EQ(rank(mat(Q, {{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(Matrix(Q, 2, 5)), 0u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(Q, 2)).empty());
  const auto k = kernel_basis(mat(Q, {{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], vec(Q, {1, -1}));
  const auto z = kernel_basis(Matrix(Q, 1, 3));
  ASSERT_EQ(z.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(z[i], unit_vec(Q, 3, i));
}

TEST(SolveAffine, Examples) {
  const Vec b = vec(Q, {4, -1, 7});
  const auto id = solve_affine(Matrix::identity(Q, 3), b);
  ASSERT_TRUE(id);
  EXPECT_EQ(id->particular, b);
  EXPECT_TRUE(id->kernel.empty());

  const auto s = solve_affine(mat(Q, {{1, 1}}), vec(Q, {2}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, vec(Q, {2, 0}));
  ASSERT_EQ(s->kernel.size(), 1u);
  EXPECT_EQ(s->kernel[0], vec(Q, {1, -1}));

  EXPECT_FALSE(solve_affine(mat(Q, {{0}}), vec(Q, {1})));
}

TEST(Linalg, RankNullityAndSolutionsOnRandomMatrices) {
  hombrace::testing::Random rng(11);
  for (const Field& f : {Q, Field::prime(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = rng.integer(1, 5), c = rng.integer(1, 5);
      const Matrix m = rng.matrix(f, r, c, 2);
      const auto k = kernel_basis(m);
      EXPECT_EQ(rank(m) + k.size(), c);
      for (const auto& v : k) EXPECT_TRUE(is_zero(m.apply(v)));
      const Vec x = rng.matrix(f, c, 1).column(0);
      const auto sol = solve_affine(m, m.apply(x));
      ASSERT_TRUE(sol);
      EXPECT_EQ(m.apply(sol->particular), m.apply(x));
    }
  }
}

TEST(Linalg, EchelonIsCanonical) {
  const Matrix m = mat(Q, {{2, 4, 6}, {1, 2, 4}});
  const Echelon a = row_reduce(m);
  Matrix swapped = mat(Q, {{1, 2, 4}, {2, 4, 6}});
  const Echelon b = row_reduce(swapped);
  EXPECT_EQ(a.reduced, b.reduced);
  EXPECT_EQ(a.pivot_cols, (std::vector<std::size_t>{0, 2}));
}

TEST(Linalg, InverseAndPowers) {
  const Matrix m = mat(Q, {{2, 1}, {0, 3}});
  EXPECT_EQ(m * inverse(m), Matrix::identity(Q, 2));
  EXPECT_EQ(m.power(-2) * m.power(2), Matrix::identity(Q, 2));
  EXPECT_EQ(m.power(0), Matrix::identity(Q, 2));
  EXPECT_FALSE(try_inverse(mat(Q, {{1, 2}, {2, 4}})));
  EXPECT_THROW(inverse(mat(Q, {{1, 2}, {2, 4}})), DomainError);
}

TEST(BasisCoordinates, RecoversCoefficientsAndRejectsOutsiders) {
  const std::vector<Vec> basis{vec(Q, {1, 1, 0}), vec(Q, {0, 1, 1})};
  BasisCoordinates bc(Q, 3, basis);
  EXPECT_EQ(bc.coordinates(vec(Q, {2, 5, 3})), vec(Q, {2, 3}));
  EXPECT_THROW(bc.coordinates(vec(Q, {1, 0, 0})), DomainError);
}
