#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

/// Integer power series c_0 + c_1 t + ... + c_N t^N. Ring operations drop
/// everything above N. Coefficients are 64-bit with overflow detection; the
/// series met here (word counts at N in the tens) stay far below that.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int bound = 0) : c_(check_bound(bound) + 1, 0) {}
  TruncatedSeries(int bound, std::vector<long long> coeffs) : c_(check_bound(bound) + 1, 0) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
  }

  static TruncatedSeries one(int bound) { return monomial(bound, 0, 1); }
  static TruncatedSeries monomial(int bound, int degree, long long c = 1) {
    TruncatedSeries s(bound);
    if (degree >= 0 && degree <= bound) s.c_[degree] = c;
    return s;
  }

  int bound() const noexcept { return static_cast<int>(c_.size()) - 1; }
  long long operator[](int d) const { return (d < 0 || d > bound()) ? 0 : c_[d]; }
  long long& at(int d) {
    if (d < 0 || d > bound()) throw TruncationError("core_linear", "series coefficient beyond bound", d);
    return c_[d];
  }
  const std::vector<long long>& coefficients() const noexcept { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_bound(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_bound(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_bound(b);
    TruncatedSeries r(a.bound());
    for (int i = 0; i <= a.bound(); ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= a.bound(); ++j)
        if (b.c_[j] != 0) r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const {
    std::string s;
    for (int d = 0; d <= bound(); ++d) {
      if (c_[d] == 0) continue;
      long long c = c_[d];
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long m = c < 0 ? -c : c;
      if (d == 0) s += std::to_string(m);
      else {
        if (m != 1) s += std::to_string(m);
        s += d == 1 ? "t" : "t^" + std::to_string(d);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  static int check_bound(int b) {
    if (b < 0) throw DomainError("core_linear", "negative truncation bound");
    return b;
  }
  void same_bound(const TruncatedSeries& o) const {
    if (o.bound() != bound()) throw StructuralError("core_linear", "series truncation bounds differ");
  }
  static long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("core_linear", "series coefficient overflow");
    return r;
  }
  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("core_linear", "series coefficient overflow");
    return r;
  }

  std::vector<long long> c_;
};

/// Multiplicative inverse up to the bound. The constant term must be a unit of
/// Z, i.e. +1 or -1.
inline TruncatedSeries series_inverse(const TruncatedSeries& s) {
  const long long c0 = s[0];
  if (c0 != 1 && c0 != -1)
    throw DomainError("core_linear", "series constant term " + std::to_string(c0) + " is not invertible");
  TruncatedSeries u(s.bound());
  u.at(0) = c0;  // 1/c0 == c0 for units of Z
  for (int n = 1; n <= s.bound(); ++n) {
    long long acc = 0;
    for (int k = 1; k <= n; ++k) acc -= s[k] * u[n - k];
    u.at(n) = acc * c0;
  }
  return u;
}

/// t -> t^q.
inline TruncatedSeries series_substitute(const TruncatedSeries& s, int q) {
  if (q < 1) throw DomainError("core_linear", "substitution power must be at least 1");
  TruncatedSeries r(s.bound());
  for (int k = 0; static_cast<long long>(k) * q <= s.bound(); ++k) r.at(k * q) = s[k];
  return r;
}

}  // namespace hopf
