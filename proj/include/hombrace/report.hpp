#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hombrace/linalg.hpp"
#include "hombrace/multilinear.hpp"

namespace hombrace {

// One failed instance of a law: the basis tuple it failed on and lhs - rhs there.
struct Violation {
  std::string law;
  Index indices;
  Vec defect;
};

class Report {
 public:
  bool ok() const { return violations_.empty(); }
  explicit operator bool() const { return ok(); }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t size() const { return violations_.size(); }

  void add(std::string law, Index indices, Vec defect) {
    violations_.push_back({std::move(law), std::move(indices), std::move(defect)});
  }

  // A violation that has no basis tuple (structural failures such as a twist mismatch).
  void add(std::string law) { violations_.push_back({std::move(law), {}, {}}); }

  Report& merge(const Report& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
    return *this;
  }

  bool violates(const std::string& law) const {
    for (const auto& v : violations_)
      if (v.law == law) return true;
    return false;
  }

  std::string to_string() const {
    if (ok()) return "ok\n";
    std::string s;
    for (const auto& v : violations_) {
      s += v.law;
      if (!v.indices.empty()) {
        s += " at (";
        for (std::size_t i = 0; i < v.indices.size(); ++i) s += (i ? "," : "") + std::to_string(v.indices[i]);
        s += ")";
      }
      if (!v.defect.empty()) s += " defect " + hombrace::to_string(v.defect);
      s += "\n";
    }
    return s;
  }

 private:
  std::vector<Violation> violations_;
};

// Records every basis tuple on which the defect tensor is nonzero.
inline void report_nonzero(Report& report, const std::string& law, const Multilinear& defect) {
  const std::size_t out = defect.out_dim();
  std::size_t flat = 0;
  detail::for_each_index(defect.in_dims(), [&](const Index& idx) {
    std::span<const Scalar> v(defect.coeffs().data() + flat * out, out);
    if (!is_zero(v)) report.add(law, idx, Vec(v.begin(), v.end()));
    ++flat;
  });
}

}  // namespace hombrace
