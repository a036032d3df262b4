#pragma once

/// Exact scalars over Q (GMP rationals) or a prime field F_p.
///
/// A `Field` is a small descriptor; a `Scalar` carries its field with it so that
/// accidental mixing of Q and F_p values is caught at the first arithmetic op.
/// Text form: "p/q" in lowest terms ("/1" omitted) for Q, the residue in [0, p)
/// for F_p.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hombrace/errors.hpp"

namespace hombrace {

class Scalar;

class Field {
 public:
  enum class Kind { rational, prime };

  static Field rationals() { return Field(Kind::rational, 0); }

  static Field prime(std::uint32_t p) {
    if (p < 2 || p > 65521 || !is_prime(p))
      throw InputError("F_p needs a prime 2 <= p <= 65521, got " + std::to_string(p));
    return Field(Kind::prime, p);
  }

  // Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.substr(0, 3) == "Fp:") {
      std::string digits(text.substr(3));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad field selector '" + std::string(text) + "'");
      return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw InputError("bad field selector '" + std::string(text) + "' (expected Q or Fp:<p>)");
  }

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  std::uint32_t characteristic() const { return p_; }

  std::string name() const {
    return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  // Parses "p/q", "p" (Q) or a residue; rational text is reduced into F_p.
  Scalar parse_scalar(std::string_view text) const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  static bool is_prime(std::uint32_t n) {
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Kind kind_;
  std::uint32_t p_;
};

class Scalar {
 public:
  // Default: rational zero. Prefer Field::zero() in field-generic code.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }

  static Scalar residue(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Scalar(Residue{static_cast<std::uint32_t>(r), p});
  }

  Field field() const {
    if (auto* res = std::get_if<Residue>(&value_)) return Field::prime(res->p);
    return Field::rationals();
  }

  bool same_field(const Scalar& other) const {
    if (value_.index() != other.value_.index()) return false;
    if (auto* res = std::get_if<Residue>(&value_)) return res->p == std::get<Residue>(other.value_).p;
    return true;
  }

  bool is_zero() const {
    if (auto* res = std::get_if<Residue>(&value_)) return res->r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }

  bool is_one() const {
    if (auto* res = std::get_if<Residue>(&value_)) return res->r == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  // Only meaningful for Q.
  const mpq_class& as_rational() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw InputError("scalar is not rational");
  }

  std::uint32_t as_residue() const {
    if (auto* res = std::get_if<Residue>(&value_)) return res->r;
    throw InputError("scalar is not an F_p residue");
  }

  Scalar inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (auto* res = std::get_if<Residue>(&value_))
      return Scalar(Residue{pow_mod(res->r, res->p - 2, res->p), res->p});
    mpq_class inv = 1 / std::get<mpq_class>(value_);
    inv.canonicalize();
    return Scalar(std::move(inv));
  }

  Scalar operator-() const {
    if (auto* res = std::get_if<Residue>(&value_))
      return Scalar(Residue{res->r == 0 ? 0 : res->p - res->r, res->p});
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (auto* res = std::get_if<Residue>(&value_)) {
      res->r = static_cast<std::uint32_t>((std::uint64_t(res->r) + std::get<Residue>(o.value_).r) % res->p);
    } else {
      std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    check(o);
    if (auto* res = std::get_if<Residue>(&value_)) {
      res->r = static_cast<std::uint32_t>((std::uint64_t(res->r) + res->p - std::get<Residue>(o.value_).r) % res->p);
    } else {
      std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (auto* res = std::get_if<Residue>(&value_)) {
      res->r = static_cast<std::uint32_t>((std::uint64_t(res->r) * std::get<Residue>(o.value_).r) % res->p);
    } else {
      std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  // this += a * b, the inner loop of every contraction.
  void add_product(const Scalar& a, const Scalar& b) {
    if (auto* res = std::get_if<Residue>(&value_)) {
      a.check(b);
      check(a);
      std::uint64_t prod = std::uint64_t(std::get<Residue>(a.value_).r) * std::get<Residue>(b.value_).r;
      res->r = static_cast<std::uint32_t>((res->r + prod) % res->p);
    } else {
      a.check(b);
      check(a);
      mpq_class& q = std::get<mpq_class>(value_);
      q += std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
    }
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.same_field(b)) return false;
    if (auto* res = std::get_if<Residue>(&a.value_)) return res->r == std::get<Residue>(b.value_).r;
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  }

  std::string to_string() const {
    if (auto* res = std::get_if<Residue>(&value_)) return std::to_string(res->r);
    const mpq_class& q = std::get<mpq_class>(value_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

 private:
  struct Residue {
    std::uint32_t r;
    std::uint32_t p;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  void check(const Scalar& o) const {
    if (!same_field(o))
      throw InputError("mixed fields: " + field().name() + " vs " + o.field().name());
  }

  static std::uint32_t pow_mod(std::uint64_t base, std::uint32_t exp, std::uint32_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }

  std::variant<mpq_class, Residue> value_;
};

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(long value) const {
  if (is_rational()) return Scalar::rational(mpq_class(value));
  return Scalar::residue(value, p_);
}

inline Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start && t.find_first_not_of("0123456789", start) == std::string::npos;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("bad field element '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  if (is_rational()) return Scalar::rational(mpq_class(n, d));
  mpz_class pz(p_);
  mpz_class rn = n % pz, rd = d % pz;
  if (rn < 0) rn += pz;
  if (rd == 0) throw InputError("denominator of '" + s + "' vanishes in " + name());
  return Scalar::residue(static_cast<std::int64_t>(rn.get_si()), p_) *
         Scalar::residue(static_cast<std::int64_t>(rd.get_si()), p_).inverse();
}

}  // namespace hombrace
