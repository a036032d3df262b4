#pragma once

/// A direct sum V = A (+) M with A first. Multilinear maps between the
/// summands lift to V by projecting each input and including the output.

#include <cstddef>
#include <optional>
#include <vector>

#include "hombrace/linalg.hpp"
#include "hombrace/multilinear.hpp"

namespace hombrace {

enum class Part { A, M };

struct Split {
  Field field;
  std::size_t a;
  std::size_t m;

  std::size_t total() const { return a + m; }
  std::size_t dim(Part p) const { return p == Part::A ? a : m; }
  std::size_t offset(Part p) const { return p == Part::A ? 0 : a; }
  Part part_of(std::size_t index) const { return index < a ? Part::A : Part::M; }

  Matrix inclusion(Part p) const {
    Matrix e(field, total(), dim(p));
    for (std::size_t i = 0; i < dim(p); ++i) e(offset(p) + i, i) = field.one();
    return e;
  }

  Matrix projection(Part p) const { return inclusion(p).transpose(); }

  Matrix direct_sum(const Matrix& on_a, const Matrix& on_m) const {
    Matrix s(field, total(), total());
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) s(i, j) = on_a(i, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s(a + i, a + j) = on_m(i, j);
    return s;
  }

  Vec pair(const Vec& x, const Vec& u) const {
    Vec v = x;
    v.insert(v.end(), u.begin(), u.end());
    return v;
  }

  // f : P_1 x ... x P_n -> P_out, extended by zero to V^n -> V.
  Multilinear lift(const Multilinear& f, const std::vector<Part>& inputs, Part output) const {
    if (inputs.size() != f.arity()) throw InputError("lift: part list does not match arity");
    Multilinear g = f.postcompose(inclusion(output));
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      if (f.in_dim(s) != dim(inputs[s])) throw InputError("lift: slot dimension mismatch");
      g = g.precompose(s, projection(inputs[s]));
    }
    return g;
  }

  // The block of F : V^n -> V with the given input parts and output part.
  Multilinear restrict(const Multilinear& f, const std::vector<Part>& inputs, Part output) const {
    if (inputs.size() != f.arity() || !f.is_uniform(total()) || f.out_dim() != total())
      throw InputError("restrict: cochain is not on the split space");
    Multilinear g = f.postcompose(projection(output));
    for (std::size_t s = 0; s < inputs.size(); ++s) g = g.precompose(s, inclusion(inputs[s]));
    return g;
  }
};

}  // namespace hombrace
