#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopf/errors.hpp"

namespace hopf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The base field: F_p for a prime p, or Q (characteristic 0).
class Field {
 public:
  static Field rationals() { return Field(0); }

  static Field prime(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError("core_linear", "characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
  }

  /// 0 selects Q, anything else must be prime.
  static Field of_characteristic(std::uint32_t c) { return c == 0 ? rationals() : prime(c); }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }

  std::string name() const { return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_); }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

namespace detail {

inline std::uint32_t mod_reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

}  // namespace detail

/// An exact element of a Field. Residues are kept in [0, p); rationals are kept
/// in lowest terms by the multiprecision backend.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : v_(Residue{0, 2}) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }

  static Scalar from_int(const Field& f, long long v) {
    if (f.is_rational()) return Scalar(Rational(v));
    return Scalar(Residue{detail::mod_reduce(v, f.characteristic()), f.characteristic()});
  }

  static Scalar from_rational(const Field& f, const Rational& q) {
    if (f.is_rational()) return Scalar(q);
    const std::uint32_t p = f.characteristic();
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    long long n = static_cast<long long>(Integer(num % p));
    long long d = static_cast<long long>(Integer(den % p));
    std::uint32_t dr = detail::mod_reduce(d, p);
    if (dr == 0) throw DomainError("core_linear", "denominator vanishes modulo " + std::to_string(p));
    return Scalar(Residue{static_cast<std::uint32_t>((std::uint64_t(detail::mod_reduce(n, p)) * detail::mod_inverse(dr, p)) % p), p});
  }

  Field field() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return Field::prime(r->p);
    return Field::rationals();
  }

  bool is_zero() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
    return std::get<Rational>(v_) == 0;
  }
  bool is_one() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
    return std::get<Rational>(v_) == 1;
  }

  /// Residue in [0, p) for prime fields.
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }
  const Rational& rational() const { return std::get<Rational>(v_); }
  bool is_residue() const { return std::holds_alternative<Residue>(v_); }

  Scalar operator-() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
    return Scalar(Rational(-std::get<Rational>(v_)));
  }

  Scalar& operator+=(const Scalar& o) {
    if (auto* r = std::get_if<Residue>(&v_)) {
      const auto& s = residue_of(o, r->p);
      std::uint32_t v = r->value + s.value;
      if (v >= r->p) v -= r->p;
      r->value = v;
    } else {
      std::get<Rational>(v_) += rational_of(o);
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    if (auto* r = std::get_if<Residue>(&v_)) {
      const auto& s = residue_of(o, r->p);
      r->value = static_cast<std::uint32_t>((std::uint64_t(r->value) * s.value) % r->p);
    } else {
      std::get<Rational>(v_) *= rational_of(o);
    }
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw DomainError("core_linear", "division by zero");
    if (const auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{detail::mod_inverse(r->value, r->p), r->p});
    return Scalar(Rational(1 / std::get<Rational>(v_)));
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

  std::string to_string() const {
    if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
    std::ostringstream os;
    os << std::get<Rational>(v_);
    return os.str();
  }

  /// Sign and magnitude for printing signed combinations: over F_p the
  /// representative is taken in [0, p), so the sign is always +.
  bool is_negative() const {
    if (is_residue()) return false;
    return std::get<Rational>(v_) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(Rational q) : v_(std::move(q)) {}

  static const Residue& residue_of(const Scalar& o, std::uint32_t p) {
    const auto* r = std::get_if<Residue>(&o.v_);
    if (r == nullptr || r->p != p) throw StructuralError("core_linear", "scalar field mismatch");
    return *r;
  }
  static const Rational& rational_of(const Scalar& o) {
    const auto* q = std::get_if<Rational>(&o.v_);
    if (q == nullptr) throw StructuralError("core_linear", "scalar field mismatch");
    return *q;
  }

  std::variant<Residue, Rational> v_;
};

/// (-1)^k as a scalar of f.
inline Scalar sign_scalar(const Field& f, long long k) { return Scalar::from_int(f, (k % 2 == 0) ? 1 : -1); }

}  // namespace hopf
