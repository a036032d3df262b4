#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "hombrace/io.hpp"
#include "support.hpp"

using namespace hombrace;
using namespace hombrace::io;
using hombrace::testing::f7_corpus;
using hombrace::testing::Random;

namespace {

const Field Q = Field::rationals();

std::filesystem::path scratch_dir() {
  const auto p = std::filesystem::temp_directory_path() / ("hombrace_io_" + std::to_string(::getpid()));
  std::filesystem::create_directories(p);
  return p;
}

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Json, AlgebraRoundTrip) {
  for (const Field& f : {Q, Field::prime(7)})
    for (const auto& inst : small_instances(f)) {
      const Json j = algebra_to_json(inst.algebra);
      const HomAlgebra back = algebra_from_json(j);
      EXPECT_EQ(back.mu, inst.algebra.mu) << inst.name;
      EXPECT_EQ(back.alpha, inst.algebra.alpha) << inst.name;
      EXPECT_EQ(algebra_to_json(back).dump(), j.dump());
      const Bimodule m = bimodule_from_json(bimodule_to_json(inst.module, "a.json"), f, inst.algebra.dim());
      EXPECT_EQ(m.l, inst.module.l);
      EXPECT_EQ(m.r, inst.module.r);
      EXPECT_EQ(m.phi, inst.module.phi);
    }
}

TEST(Json, RationalsAreLowestTerms) {
  Matrix t(Q, 1, 2);
  t(0, 0) = Q.parse_scalar("-6/4");
  t(0, 1) = Q.parse_scalar("10/5");
  const Json j = map_to_json(t);
  EXPECT_EQ(j["entries"][0][0], "-3/2");
  EXPECT_EQ(j["entries"][0][1], "2");
  EXPECT_EQ(map_from_json(j, Q), t);
  EXPECT_EQ(j.dump(), R"({"kind":"map","rows":1,"cols":2,"entries":[["-3/2","2"]]})");
}

TEST(Json, KeyOrderIsFixed) {
  const Json j = algebra_to_json(line_algebra(Q));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"kind", "field", "dim", "mu", "alpha"}));
}

TEST(Json, CochainRoundTripAllDegrees) {
  Random rng(11);
  for (std::size_t n = 0; n <= 3; ++n) {
    Cochain c = Multilinear::uniform(Q, n, 2, 3);
    for (auto& x : c.coeffs()) x = rng.scalar(Q);
    const Cochain back = cochain_from_json(cochain_to_json(c, 2), Q);
    EXPECT_EQ(back, c) << n;
    EXPECT_EQ(cochain_to_json(back, 2).dump(), cochain_to_json(c, 2).dump());
  }
}

TEST(Json, DendriformRoundTrip) {
  for (const auto& e : f7_corpus())
    for (const auto& t : hombrace::testing::sample_operators(e, 1)) {
      const HomDendriform d = induced_dendriform(e.instance.algebra, e.instance.module, t);
      const HomDendriform back = dendriform_from_json(dendriform_to_json(d), e.instance.algebra.field());
      EXPECT_EQ(back.prec, d.prec);
      EXPECT_EQ(back.succ, d.succ);
      EXPECT_EQ(back.phi, d.phi);
    }
}

TEST(Json, ErrorsCarryPositions) {
  Json j = algebra_to_json(example25(Q, 1, 2));
  j["mu"][1][2][0] = "x";
  EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("mu[1][2][0]"), std::string::npos);
  j = algebra_to_json(example25(Q, 1, 2));
  j["alpha"][2].erase(0);
  EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("alpha[2]"), std::string::npos);
  j.erase("dim");
  EXPECT_NE(error_of([&] { algebra_from_json(j); }).find("\"dim\""), std::string::npos);
  EXPECT_THROW(algebra_from_json(Json{{"kind", "map"}}), InputError);
  EXPECT_THROW(algebra_from_json(Json{{"kind", "hom-algebra"}, {"field", "Fp:8"}, {"dim", 1}}), InputError);
}

TEST(Files, WriteReadAndResolveAlgebraReference) {
  const auto dir = scratch_dir();
  const HomAlgebra a = example25(Q, 1, 2);
  write_json(dir / "alg.json", algebra_to_json(a));
  write_json(dir / "mod.json", bimodule_to_json(adjoint_bimodule(a), "alg.json"));
  EXPECT_EQ(referenced_algebra(dir / "mod.json"), dir / "alg.json");
  const HomAlgebra back = load_algebra(referenced_algebra(dir / "mod.json"));
  EXPECT_EQ(back.mu, a.mu);
  EXPECT_EQ(load_bimodule(dir / "mod.json", back).l, a.mu);
  EXPECT_EQ(load_algebra(dir / "alg.json", Field::prime(7)).field(), Field::prime(7));
  EXPECT_THROW(load_algebra(dir / "absent.json"), InputError);
  {
    std::ofstream bad(dir / "bad.json");
    bad << "{\"kind\": \"hom-algebra\",";
  }
  EXPECT_NE(error_of([&] { load_algebra(dir / "bad.json"); }).find("bad.json"), std::string::npos);
  std::filesystem::remove_all(dir);
}
