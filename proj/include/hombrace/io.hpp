#pragma once

/// Canonical JSON files for algebras, bimodules, maps, cochains and
/// Hom-dendriform structures. Field elements are strings ("p/q" over Q,
/// a residue over F_p); tensors are nested arrays indexed like the in-memory
/// convention, output coordinate last.

#include <filesystem>
#include <functional>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hombrace/cochain.hpp"
#include "hombrace/hom_algebra.hpp"
#include "hombrace/o_operator.hpp"

namespace hombrace::io {

using Json = nlohmann::ordered_json;

inline Json scalar_to_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from_json(const Json& j, const Field& f, const std::string& where) {
  if (j.is_string()) {
    try {
      return f.parse_scalar(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return f.from_int(j.get<long>());
  throw InputError(where + ": expected a field element string");
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols,
                               const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) throw InputError(at + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[i][c], f, at + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

inline Vec vector_from_json(const Json& j, const Field& f, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw InputError(where + ": expected " + std::to_string(n) + " entries");
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_from_json(j[i], f, where + "[" + std::to_string(i) + "]"));
  return v;
}

// Nested arrays over the input slots, with the output vector innermost.
inline Json tensor_to_json(const Multilinear& t) {
  const std::size_t out = t.out_dim();
  std::function<Json(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t flat) -> Json {
    if (slot == t.arity()) return vector_to_json(std::span(t.coeffs().data() + flat * out, out));
    Json arr = Json::array();
    for (std::size_t i = 0; i < t.in_dim(slot); ++i) arr.push_back(rec(slot + 1, flat * t.in_dim(slot) + i));
    return arr;
  };
  return rec(0, 0);
}

inline Multilinear tensor_from_json(const Json& j, const Field& f, std::vector<std::size_t> in_dims, std::size_t out_dim,
                                    const std::string& where) {
  Multilinear t(f, in_dims, out_dim);
  std::function<void(const Json&, std::size_t, std::size_t, const std::string&)> rec =
      [&](const Json& node, std::size_t slot, std::size_t flat, const std::string& at) {
        if (slot == in_dims.size()) {
          Vec v = vector_from_json(node, f, out_dim, at);
          for (std::size_t k = 0; k < out_dim; ++k) t.coeffs()[flat * out_dim + k] = std::move(v[k]);
          return;
        }
        if (!node.is_array() || node.size() != in_dims[slot])
          throw InputError(at + ": expected " + std::to_string(in_dims[slot]) + " entries");
        for (std::size_t i = 0; i < in_dims[slot]; ++i)
          rec(node[i], slot + 1, flat * in_dims[slot] + i, at + "[" + std::to_string(i) + "]");
      };
  rec(j, 0, 0, where);
  return t;
}

inline std::size_t count_from_json(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw InputError(where + ": missing or invalid \"" + key + "\"");
  return j[key].get<std::size_t>();
}

inline void expect_kind(const Json& j, const std::string& kind, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || j["kind"] != kind)
    throw InputError(where + ": expected an object with \"kind\": \"" + kind + "\"");
}

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j[key];
}

// ---------------------------------------------------------------------------

inline Json algebra_to_json(const HomAlgebra& a) {
  return Json{{"kind", "hom-algebra"},
              {"field", a.field().name()},
              {"dim", a.dim()},
              {"mu", tensor_to_json(a.mu)},
              {"alpha", matrix_to_json(a.alpha)}};
}

// `field` overrides the file's own field when given.
inline HomAlgebra algebra_from_json(const Json& j, std::optional<Field> field = std::nullopt,
                                    const std::string& where = "algebra") {
  expect_kind(j, "hom-algebra", where);
  const Field f = field ? *field : Field::parse(member(j, "field", where).get<std::string>());
  const std::size_t n = count_from_json(j, "dim", where);
  return HomAlgebra(tensor_from_json(member(j, "mu", where), f, {n, n}, n, where + ".mu"),
                    matrix_from_json(member(j, "alpha", where), f, n, n, where + ".alpha"));
}

inline Json bimodule_to_json(const Bimodule& m, const std::string& algebra_path) {
  return Json{{"kind", "bimodule"},
              {"algebra", algebra_path},
              {"dim", m.dim()},
              {"l", tensor_to_json(m.l)},
              {"r", tensor_to_json(m.r)},
              {"phi", matrix_to_json(m.phi)}};
}

inline Bimodule bimodule_from_json(const Json& j, const Field& f, std::size_t algebra_dim,
                                   const std::string& where = "bimodule") {
  expect_kind(j, "bimodule", where);
  const std::size_t m = count_from_json(j, "dim", where);
  return Bimodule(tensor_from_json(member(j, "l", where), f, {algebra_dim, m}, m, where + ".l"),
                  tensor_from_json(member(j, "r", where), f, {m, algebra_dim}, m, where + ".r"),
                  matrix_from_json(member(j, "phi", where), f, m, m, where + ".phi"));
}

inline Json map_to_json(const Matrix& t) {
  return Json{{"kind", "map"}, {"rows", t.rows()}, {"cols", t.cols()}, {"entries", matrix_to_json(t)}};
}

inline Matrix map_from_json(const Json& j, const Field& f, const std::string& where = "map") {
  expect_kind(j, "map", where);
  const std::size_t rows = count_from_json(j, "rows", where), cols = count_from_json(j, "cols", where);
  return matrix_from_json(member(j, "entries", where), f, rows, cols, where + ".entries");
}

// Degree-0 cochains carry no input dimension; `module_dim` supplies it.
inline Json cochain_to_json(const Cochain& c, std::size_t module_dim = 0) {
  return Json{{"kind", "cochain"},
              {"degree", c.arity()},
              {"module_dim", c.arity() ? c.in_dim(0) : module_dim},
              {"algebra_dim", c.out_dim()},
              {"coeffs", vector_to_json(c.coeffs())}};
}

inline Cochain cochain_from_json(const Json& j, const Field& f, const std::string& where = "cochain") {
  expect_kind(j, "cochain", where);
  const std::size_t n = count_from_json(j, "degree", where);
  const std::size_t m = count_from_json(j, "module_dim", where);
  const std::size_t a = count_from_json(j, "algebra_dim", where);
  const std::size_t size = detail::product(std::vector<std::size_t>(n, m)) * a;
  return cochain_from_coeffs(f, n, m, a, vector_from_json(member(j, "coeffs", where), f, size, where + ".coeffs"));
}

inline Json dendriform_to_json(const HomDendriform& d) {
  return Json{{"kind", "hom-dendriform"},
              {"dim", d.dim()},
              {"prec", tensor_to_json(d.prec)},
              {"succ", tensor_to_json(d.succ)},
              {"phi", matrix_to_json(d.phi)}};
}

inline HomDendriform dendriform_from_json(const Json& j, const Field& f, const std::string& where = "dendriform") {
  expect_kind(j, "hom-dendriform", where);
  const std::size_t m = count_from_json(j, "dim", where);
  return HomDendriform(tensor_from_json(member(j, "prec", where), f, {m, m}, m, where + ".prec"),
                       tensor_from_json(member(j, "succ", where), f, {m, m}, m, where + ".succ"),
                       matrix_from_json(member(j, "phi", where), f, m, m, where + ".phi"));
}

// ---------------------------------------------------------------------------
// Files.

inline Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

inline void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

inline HomAlgebra load_algebra(const std::filesystem::path& path, std::optional<Field> field = std::nullopt) {
  return algebra_from_json(read_json(path), field, path.string());
}

// The bimodule's "algebra" entry is resolved relative to the bimodule file.
inline std::filesystem::path referenced_algebra(const std::filesystem::path& module_path) {
  const Json j = read_json(module_path);
  expect_kind(j, "bimodule", module_path.string());
  const std::filesystem::path ref = member(j, "algebra", module_path.string()).get<std::string>();
  return ref.is_absolute() ? ref : module_path.parent_path() / ref;
}

inline Bimodule load_bimodule(const std::filesystem::path& path, const HomAlgebra& a) {
  return bimodule_from_json(read_json(path), a.field(), a.dim(), path.string());
}

inline Matrix load_map(const std::filesystem::path& path, const Field& f) {
  return map_from_json(read_json(path), f, path.string());
}

inline Cochain load_cochain(const std::filesystem::path& path, const Field& f) {
  return cochain_from_json(read_json(path), f, path.string());
}

inline HomDendriform load_dendriform(const std::filesystem::path& path, const Field& f) {
  return dendriform_from_json(read_json(path), f, path.string());
}

}  // namespace hombrace::io
