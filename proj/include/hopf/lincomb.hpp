#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

/// Sparse linear combination of basis keys with exact coefficients. Zero
/// coefficients are never stored, so equality is structural.
template <class Key>
class LinComb {
 public:
  using container = std::map<Key, Scalar>;

  LinComb() : field_(Field::prime(2)) {}
  explicit LinComb(const Field& f) : field_(f) {}

  static LinComb single(const Field& f, const Key& k, const Scalar& c) {
    LinComb l(f);
    l.add(k, c);
    return l;
  }
  static LinComb single(const Field& f, const Key& k) { return single(f, k, Scalar::one(f)); }

  const Field& field() const noexcept { return field_; }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const container& terms() const noexcept { return terms_; }

  LinComb& add_scaled(const LinComb& o, const Scalar& c) {
    if (c.is_zero()) return *this;
    for (const auto& [k, v] : o.terms_) add(k, v * c);
    return *this;
  }
  LinComb& operator+=(const LinComb& o) { return add_scaled(o, Scalar::one(field_)); }
  LinComb& operator-=(const LinComb& o) { return add_scaled(o, -Scalar::one(field_)); }

  LinComb scaled(const Scalar& c) const {
    LinComb r(field_);
    r.add_scaled(*this, c);
    return r;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Field field_;
  container terms_;
};

/// Element of a graded space with a global basis index.
using Element = LinComb<int>;
/// Element of a two-fold tensor power, keyed by pairs of basis indices.
using Tensor2 = LinComb<std::pair<int, int>>;
/// Element of a three-fold tensor power.
using Tensor3 = LinComb<std::array<int, 3>>;

/// Span of sparse vectors kept in fully reduced echelon form; the pivot of a
/// row is its smallest key.
template <class Key>
class SparseRowSpace {
 public:
  explicit SparseRowSpace(const Field& f) : field_(f) {}

  LinComb<Key> reduce(LinComb<Key> v) const {
    std::vector<std::pair<Key, Scalar>> hits;
    for (const auto& [k, c] : v)
      if (rows_.count(k)) hits.emplace_back(k, c);
    for (const auto& [k, c] : hits) v.add_scaled(rows_.at(k), -c);
    return v;
  }

  bool contains(const LinComb<Key>& v) const { return reduce(v).is_zero(); }

  /// Adds v; returns false if it was already in the span.
  bool insert(const LinComb<Key>& v) {
    auto r = reduce(v);
    if (r.is_zero()) return false;
    const Key pivot = r.begin()->first;
    r = r.scaled(r.begin()->second.inverse());
    for (auto& [k, row] : rows_) {
      Scalar c = row.coeff(pivot);
      if (!c.is_zero()) row.add_scaled(r, -c);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  std::size_t dimension() const noexcept { return rows_.size(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) > 0; }
  const std::map<Key, LinComb<Key>>& rows() const noexcept { return rows_; }

 private:
  Field field_;
  std::map<Key, LinComb<Key>> rows_;
};

}  // namespace hopf
