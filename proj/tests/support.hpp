#pragma once

// Shared fixtures: the searched F_7 corpus and seeded random cochains.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hombrace/corpus.hpp"
#include "hombrace/hombrace.hpp"

namespace hombrace::testing {

struct CorpusEntry {
  Instance instance;
  std::vector<Matrix> operators;  // every O-operator found by exhaustive search
};

inline const std::vector<CorpusEntry>& f7_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (auto& inst : small_instances(Field::prime(7))) {
      auto ops = search_o_operators(inst.algebra, inst.module);
      out.push_back({std::move(inst), std::move(ops)});
    }
    return out;
  }();
  return corpus;
}

// At most `cap` operators per instance, spread over the search order.
inline std::vector<Matrix> sample_operators(const CorpusEntry& e, std::size_t cap) {
  if (e.operators.size() <= cap) return e.operators;
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < cap; ++i) out.push_back(e.operators[i * e.operators.size() / cap]);
  return out;
}

class Random {
 public:
  explicit Random(std::uint32_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Scalar scalar(const Field& f, long bound = 3) { return f.from_int(integer(-bound, bound)); }

  Matrix matrix(const Field& f, std::size_t rows, std::size_t cols, long bound = 3) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar(f, bound);
    return m;
  }

  // Random element of the span of `basis`, which must be non-empty.
  Multilinear combination(const std::vector<Multilinear>& basis, long bound = 3) {
    Multilinear out = basis.front();
    out *= scalar(out.field(), bound);
    for (std::size_t i = 1; i < basis.size(); ++i) out.add_scaled(scalar(out.field(), bound), basis[i]);
    return out;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

// The dim-1 oracle instance: e.e = e, l(e,f) = f, r = 0, T(f) = e.
struct LineLeft {
  Field f = Field::rationals();
  HomAlgebra algebra = line_algebra(f);
  Bimodule module = line_module(f, 1, 0);
  Matrix t = scalar_map(f, 1);
};

}  // namespace hombrace::testing
