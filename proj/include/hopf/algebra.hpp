#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/basis.hpp"
#include "hopf/errors.hpp"
#include "hopf/lincomb.hpp"

namespace hopf {

inline Element basis_element(const Field& f, int i) { return Element::single(f, i); }

/// Degree of a homogeneous element; -1 for zero, throws if inhomogeneous.
inline int element_degree(const Basis& b, const Element& x) {
  int d = -1;
  for (const auto& [i, c] : x) {
    if (d >= 0 && b.degree(i) != d) throw DomainError("hopf_core", "element is not homogeneous");
    d = b.degree(i);
  }
  return d;
}

/// Connected graded algebra given by structure constants. Row i of the table
/// stores e_i·e_j for every j with |e_i| + |e_j| ≤ N.
class GradedAlgebra {
 public:
  using Rule = std::function<Element(int, int)>;

  GradedAlgebra() = default;

  static GradedAlgebra from_rule(const Field& f, const Basis& basis, const Rule& rule, bool commutative) {
    GradedAlgebra a;
    a.field_ = f;
    a.basis_ = basis;
    a.commutative_ = commutative;
    a.table_.resize(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
      const int room = basis.bound() - basis.degree(i);
      const int limit = basis.end(room);
      a.table_[i].reserve(limit);
      for (int j = 0; j < limit; ++j) a.table_[i].push_back(rule(i, j));
    }
    return a;
  }

  const Field& field() const noexcept { return field_; }
  const Basis& basis() const noexcept { return basis_; }
  int bound() const noexcept { return basis_.bound(); }
  bool is_commutative() const noexcept { return commutative_; }
  void set_commutative(bool c) { commutative_ = c; }

  const Element& product(int i, int j) const {
    const auto& row = table_.at(i);
    if (j < 0 || j >= static_cast<int>(row.size())) {
      if (j >= 0 && j < basis_.size())
        throw TruncationError("hopf_core", "product above the truncation bound", basis_.degree(i) + basis_.degree(j));
      throw StructuralError("hopf_core", "basis index out of range");
    }
    return row[j];
  }

  Element multiply(const Element& x, const Element& y) const {
    Element r(field_);
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) r.add_scaled(product(i, j), a * b);
    return r;
  }

  /// Product with the result known to vanish when it would leave the bound.
  Element multiply_truncated(const Element& x, const Element& y) const {
    Element r(field_);
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y)
        if (basis_.degree(i) + basis_.degree(j) <= bound()) r.add_scaled(product(i, j), a * b);
    return r;
  }

  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
    return a.field_ == b.field_ && a.basis_ == b.basis_ && a.table_ == b.table_;
  }

 private:
  Field field_ = Field::prime(2);
  Basis basis_;
  bool commutative_ = false;
  std::vector<std::vector<Element>> table_;
};

/// Connected graded coalgebra: Δ(e_i) stored per basis element.
class GradedCoalgebra {
 public:
  GradedCoalgebra() = default;
  GradedCoalgebra(const Field& f, const Basis& basis, std::vector<Tensor2> delta, bool cocommutative)
      : field_(f), basis_(basis), cocommutative_(cocommutative), delta_(std::move(delta)) {
    if (static_cast<int>(delta_.size()) != basis.size())
      throw StructuralError("hopf_core", "coproduct table does not match the basis");
  }

  const Field& field() const noexcept { return field_; }
  const Basis& basis() const noexcept { return basis_; }
  int bound() const noexcept { return basis_.bound(); }
  bool is_cocommutative() const noexcept { return cocommutative_; }
  void set_cocommutative(bool c) { cocommutative_ = c; }

  const Tensor2& coproduct(int i) const { return delta_.at(i); }
  Tensor2 apply(const Element& x) const {
    Tensor2 r(field_);
    for (const auto& [i, c] : x) r.add_scaled(delta_.at(i), c);
    return r;
  }

  /// Δ(x) - x⊗1 - 1⊗x.
  Tensor2 reduced(const Element& x) const {
    Tensor2 r = apply(x);
    for (const auto& [i, c] : x) {
      if (i == 0) continue;
      r.add({i, 0}, -c);
      r.add({0, i}, -c);
    }
    return r;
  }

  const std::vector<Tensor2>& table() const noexcept { return delta_; }

  friend bool operator==(const GradedCoalgebra& a, const GradedCoalgebra& b) {
    return a.field_ == b.field_ && a.basis_ == b.basis_ && a.delta_ == b.delta_;
  }

 private:
  Field field_ = Field::prime(2);
  Basis basis_;
  bool cocommutative_ = false;
  std::vector<Tensor2> delta_;
};

/// Word coordinates of a basis: each basis element is a word in a letter
/// alphabet. When `concatenation` is set the algebra is free on the letters
/// and e_w = product of its letters.
struct WordStructure {
  std::vector<std::string> letter_labels;
  std::vector<int> letter_degrees;
  std::vector<std::vector<int>> words;  // per basis index
  bool concatenation = false;
  std::map<std::vector<int>, int> index;

  int index_of(const std::vector<int>& w) const {
    auto it = index.find(w);
    if (it == index.end()) throw TruncationError("hopf_core", "word outside the basis");
    return it->second;
  }
  bool contains(const std::vector<int>& w) const { return index.count(w) > 0; }
  int letter_count() const { return static_cast<int>(letter_labels.size()); }
  /// Basis index of the one-letter word.
  int letter_index(int letter) const { return index_of({letter}); }
};

/// A connected graded bialgebra: algebra and coalgebra on one basis.
class BialgebraData {
 public:
  BialgebraData() = default;
  BialgebraData(GradedAlgebra a, GradedCoalgebra c, std::optional<WordStructure> words = std::nullopt)
      : alg_(std::move(a)), coalg_(std::move(c)), words_(std::move(words)) {
    if (!(alg_.basis() == coalg_.basis()) || !(alg_.field() == coalg_.field()))
      throw StructuralError("hopf_core", "algebra and coalgebra live on different bases");
  }

  const Field& field() const noexcept { return alg_.field(); }
  const Basis& basis() const noexcept { return alg_.basis(); }
  int bound() const noexcept { return alg_.bound(); }
  const GradedAlgebra& algebra() const noexcept { return alg_; }
  const GradedCoalgebra& coalgebra() const noexcept { return coalg_; }
  GradedAlgebra& algebra() noexcept { return alg_; }
  GradedCoalgebra& coalgebra() noexcept { return coalg_; }
  bool is_commutative() const noexcept { return alg_.is_commutative(); }
  bool is_cocommutative() const noexcept { return coalg_.is_cocommutative(); }
  const std::optional<WordStructure>& words() const noexcept { return words_; }

  Element e(int i) const { return basis_element(field(), i); }
  Element e(const std::string& label) const { return e(basis().index_of(label)); }
  Element multiply(const Element& x, const Element& y) const { return alg_.multiply(x, y); }
  Tensor2 coproduct(const Element& x) const { return coalg_.apply(x); }
  Tensor2 reduced_coproduct(const Element& x) const { return coalg_.reduced(x); }

  friend bool operator==(const BialgebraData& a, const BialgebraData& b) { return a.alg_ == b.alg_ && a.coalg_ == b.coalg_; }

 private:
  GradedAlgebra alg_;
  GradedCoalgebra coalg_;
  std::optional<WordStructure> words_;
};

/// (a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd in A⊗A.
inline Tensor2 tensor_multiply(const GradedAlgebra& a, const Tensor2& x, const Tensor2& y) {
  const Field& f = a.field();
  const Basis& b = a.basis();
  Tensor2 r(f);
  for (const auto& [k1, c1] : x)
    for (const auto& [k2, c2] : y) {
      const Element& left = a.product(k1.first, k2.first);
      const Element& right = a.product(k1.second, k2.second);
      if (left.is_zero() || right.is_zero()) continue;
      Scalar c = c1 * c2 * sign_scalar(f, static_cast<long long>(b.degree(k1.second)) * b.degree(k2.first));
      for (const auto& [l, cl] : left)
        for (const auto& [m, cm] : right) r.add({l, m}, c * cl * cm);
    }
  return r;
}

/// τ(a⊗b) = (-1)^{|a||b|} b⊗a.
inline Tensor2 twist(const Basis& b, const Tensor2& x) {
  Tensor2 r(x.field());
  for (const auto& [k, c] : x)
    r.add({k.second, k.first}, c * sign_scalar(x.field(), static_cast<long long>(b.degree(k.first)) * b.degree(k.second)));
  return r;
}

namespace detail {

inline std::string coefficient_prefix(const Scalar& c, bool first) {
  std::string s;
  Scalar mag = c;
  if (c.is_negative()) {
    s = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    s = " + ";
  }
  if (!mag.is_one()) s += mag.to_string();
  return s;
}

}  // namespace detail

inline std::string format_element(const Basis& b, const Element& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : x) {
    s += detail::coefficient_prefix(c, first) + b.label(i);
    first = false;
  }
  return s;
}

/// Terms ordered by falling left degree, as in z⊗1 + y⊗y + 1⊗z.
inline std::string format_tensor(const Basis& b, const Tensor2& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::pair<int, int>, Scalar>> terms(x.begin(), x.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& u, const auto& v) { return b.degree(u.first.first) > b.degree(v.first.first); });
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms) {
    s += detail::coefficient_prefix(c, first) + b.label(k.first) + "⊗" + b.label(k.second);
    first = false;
  }
  return s;
}

}  // namespace hopf
