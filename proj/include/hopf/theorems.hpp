#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopf/free_cofree.hpp"
#include "hopf/fv_module.hpp"
#include "hopf/hopf_ops.hpp"
#include "hopf/monomial.hpp"
#include "hopf/words.hpp"

namespace hopf {

namespace detail {

/// Rows Σ a_v x_v + c = 0, keyed by anything ordered.
template <class Key>
class LinearSystem {
 public:
  LinearSystem(const Field& f, int vars) : f_(f), vars_(vars) {}

  void add(const Key& row, int var, const Scalar& c) {
    if (c.is_zero()) {
      touch(row);
      return;
    }
    auto& r = coeffs_[touch(row)];
    auto it = r.find(var);
    if (it == r.end())
      r.emplace(var, c);
    else
      it->second += c;
  }

  void add_constant(const Key& row, const Scalar& c) { constants_[touch(row)] += c; }

  int vars() const noexcept { return vars_; }
  std::size_t equations() const noexcept { return coeffs_.size(); }

  /// Lexicographically least solution: the reduced echelon form with each
  /// row pivoting on its highest variable, free variables set to zero. This
  /// is the same solution Matrix::solve returns, computed on sparse rows.
  std::optional<Vector> solve() const {
    auto ech = echelon();
    if (!ech) return std::nullopt;
    Vector x = zero_vector(f_, static_cast<std::size_t>(vars_));
    for (const auto& [piv, row] : ech->rows) x[piv] = -row.constant;
    return x;
  }

  std::vector<Vector> kernel() const {
    Echelon e = reduce_rows(true).value();
    std::vector<Vector> out;
    // Column f of the reduced rows, per free variable.
    std::map<int, std::vector<std::pair<int, Scalar>>> by_free;
    for (const auto& [piv, row] : e.rows)
      for (const auto& [v, c] : row.coeffs)
        if (v != piv) by_free[v].push_back({piv, c});
    for (int v = 0; v < vars_; ++v) {
      if (e.rows.count(v)) continue;
      Vector k = zero_vector(f_, static_cast<std::size_t>(vars_));
      k[v] = Scalar::one(f_);
      auto it = by_free.find(v);
      if (it != by_free.end())
        for (const auto& [piv, c] : it->second) k[piv] = -c;
      out.push_back(std::move(k));
    }
    return out;
  }

 private:
  std::size_t touch(const Key& row) {
    auto it = index_.find(row);
    if (it != index_.end()) return it->second;
    index_.emplace(row, coeffs_.size());
    coeffs_.emplace_back();
    constants_.push_back(Scalar::zero(f_));
    return coeffs_.size() - 1;
  }

  struct Row {
    std::map<int, Scalar> coeffs;
    Scalar constant;
  };
  struct Echelon {
    std::map<int, Row> rows;  // keyed by pivot (the highest variable)
  };

  std::optional<Echelon> echelon() const { return reduce_rows(false); }

  // Incremental Gauss-Jordan; nullopt when a row reduces to 0 = c ≠ 0 and
  // the caller cares about consistency.
  std::optional<Echelon> reduce_rows(bool ignore_constants) const {
    Echelon e;
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
      Row row{coeffs_[r], ignore_constants ? Scalar::zero(f_) : constants_[r]};
      for (auto it = row.coeffs.begin(); it != row.coeffs.end();) it = it->second.is_zero() ? row.coeffs.erase(it) : std::next(it);
      // Eliminate existing pivots, highest first.
      for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend();) {
        auto p = e.rows.find(it->first);
        if (p == e.rows.end()) {
          ++it;
          continue;
        }
        const Scalar c = it->second;
        axpy(row, p->second, -c);
        it = std::make_reverse_iterator(row.coeffs.upper_bound(p->first));
      }
      if (row.coeffs.empty()) {
        if (!row.constant.is_zero()) return std::nullopt;
        continue;
      }
      const int piv = row.coeffs.rbegin()->first;
      const Scalar inv = row.coeffs.rbegin()->second.inverse();
      for (auto& [v, c] : row.coeffs) c *= inv;
      row.constant *= inv;
      for (auto& [other, orow] : e.rows) {
        auto hit = orow.coeffs.find(piv);
        if (hit == orow.coeffs.end()) continue;
        const Scalar c = hit->second;
        axpy(orow, row, -c);
      }
      e.rows.emplace(piv, std::move(row));
    }
    return e;
  }

  // a += c·b, dropping zeros.
  void axpy(Row& a, const Row& b, const Scalar& c) const {
    for (const auto& [v, x] : b.coeffs) {
      auto it = a.coeffs.find(v);
      if (it == a.coeffs.end()) {
        a.coeffs.emplace(v, c * x);
      } else {
        it->second += c * x;
        if (it->second.is_zero()) a.coeffs.erase(it);
      }
    }
    a.constant += c * b.constant;
  }

  Field f_;
  int vars_;
  std::map<Key, std::size_t> index_;
  std::vector<std::map<int, Scalar>> coeffs_;
  std::vector<Scalar> constants_;
};

inline void require_char_p_cocommutative(const BialgebraData& h, const std::string& what) {
  if (!h.field().is_prime_field()) throw DomainError("theorems", what + " needs a prime field");
  if (!h.is_cocommutative()) throw DomainError("theorems", what + " needs a cocommutative Hopf algebra");
}

// Basis of the decomposables in degree d, as the reduced rows of the span.
inline std::vector<Element> decomposable_basis(const Indecomposables& q, int d) {
  std::vector<Element> out;
  for (const auto& [k, row] : q.decomposables.at(d).rows()) out.push_back(row);
  return out;
}

inline Element vector_to_element(const Basis& b, int d, const Vector& v) {
  Element e(v.empty() ? Field::prime(2) : v[0].field());
  for (std::size_t i = 0; i < v.size(); ++i) e.add(b.begin(d) + static_cast<int>(i), v[i]);
  return e;
}

inline Vector element_to_vector(const Field& f, const Basis& b, int d, const Element& x) {
  Vector v = zero_vector(f, static_cast<std::size_t>(b.dim(d)));
  for (const auto& [i, c] : x) {
    if (b.degree(i) != d) throw StructuralError("theorems", "element is not homogeneous", d);
    v[b.local(i)] = c;
  }
  return v;
}

// V_H as a matrix applied to a homogeneous element of degree p n.
inline Element apply_matrix(const Basis& b, const Matrix& m, int from, int to, const Element& x) {
  Element r(m.field());
  for (const auto& [i, c] : x) {
    if (b.degree(i) != from) continue;
    for (std::size_t row = 0; row < m.rows(); ++row)
      if (!m(row, b.local(i)).is_zero()) r.add(b.begin(to) + static_cast<int>(row), m(row, b.local(i)) * c);
  }
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------- splitness

/// A section s: QH → H̄ of V-modules, or the degree where none exists.
struct SplitnessCertificate {
  bool split = false;
  std::optional<GradedMap> section;
  int failure_degree = -1;

  std::string to_string() const {
    if (split) return "split";
    return "not split (no V-equivariant section through degree " + std::to_string(failure_degree) + ")";
  }
};

/// Checks π∘s = id and V∘s = s∘V on every degree.
inline bool verify_section(const BialgebraData& h, const Indecomposables& q, const GradedMap& s) {
  const Basis& b = h.basis();
  const Field& f = h.field();
  VModule hv = verschiebung_module(h.coalgebra());
  const VModule& qv = q.v_module.value();
  const int p = static_cast<int>(hv.prime());
  auto image = [&](int d, int k) { return detail::vector_to_element(b, d, s.block(d).column(static_cast<std::size_t>(k))); };
  for (int d = 1; d <= b.bound(); ++d) {
    for (int k = 0; k < q.dim(d); ++k) {
      Vector pv = q.project(d, image(d, k));
      for (int k2 = 0; k2 < q.dim(d); ++k2)
        if (!(pv[k2] == (k2 == k ? Scalar::one(f) : Scalar::zero(f)))) return false;
    }
  }
  for (int n = 1; hv.has_structure(n); ++n) {
    const int t = n * p;
    for (int k = 0; k < q.dim(t); ++k) {
      Element lhs = detail::apply_matrix(b, hv.structure(n), t, n, image(t, k));
      Element rhs(f);
      const Matrix& vq = qv.structure(n);
      for (int k2 = 0; k2 < q.dim(n); ++k2)
        if (!vq(k2, k).is_zero()) rhs.add_scaled(image(n, k2), vq(k2, k));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

/// Searches for s(e_k) = rep_k + (decomposables) with V s = s V. Equations are
/// added one target degree at a time, so a failure names the first degree at
/// which the system has no solution.
inline SplitnessCertificate is_split(const BialgebraData& h) {
  detail::require_char_p_cocommutative(h, "is_split");
  const Basis& b = h.basis();
  const Field& f = h.field();
  const int bound = b.bound();
  Indecomposables q = indecomposables_Q(h);
  VModule hv = verschiebung_module(h.coalgebra());
  const VModule& qv = q.v_module.value();
  const int p = static_cast<int>(hv.prime());

  // Variable (d, k, m): coefficient of decomposable m in s(e_k), degree d.
  std::vector<std::vector<Element>> dec(bound + 1);
  std::vector<std::vector<int>> first_var(bound + 1);
  int vars = 0;
  for (int d = 1; d <= bound; ++d) {
    dec[d] = detail::decomposable_basis(q, d);
    for (int k = 0; k < q.dim(d); ++k) {
      first_var[d].push_back(vars);
      vars += static_cast<int>(dec[d].size());
    }
  }

  detail::LinearSystem<std::array<int, 3>> sys(f, vars);
  SplitnessCertificate cert;
  std::optional<Vector> sol = zero_vector(f, static_cast<std::size_t>(vars));
  for (int t = 1; t <= bound; ++t) {
    if (t % p != 0) continue;
    const int n = t / p;
    if (!hv.has_structure(n)) continue;
    const Matrix& vh = hv.structure(n);
    const Matrix& vq = qv.structure(n);
    bool added = false;
    for (int k = 0; k < q.dim(t); ++k) {
      // V(rep_k) + Σ_m c V(dec_m) - Σ_k' vq(k',k) (rep_k' + Σ_m' c' dec_m') = 0
      auto put = [&](const Element& x, int var, const Scalar& sgn) {
        for (const auto& [i, c] : x) {
          std::array<int, 3> key{t, k, i};
          if (var < 0)
            sys.add_constant(key, c * sgn);
          else
            sys.add(key, var, c * sgn);
          added = true;
        }
      };
      const Scalar one = Scalar::one(f);
      put(detail::apply_matrix(b, vh, t, n, q.section(t, k)), -1, one);
      for (std::size_t m = 0; m < dec[t].size(); ++m)
        put(detail::apply_matrix(b, vh, t, n, dec[t][m]), first_var[t][k] + static_cast<int>(m), one);
      for (int k2 = 0; k2 < q.dim(n); ++k2) {
        if (vq(k2, k).is_zero()) continue;
        put(q.section(n, k2), -1, -vq(k2, k));
        for (std::size_t m = 0; m < dec[n].size(); ++m) put(dec[n][m], first_var[n][k2] + static_cast<int>(m), -vq(k2, k));
      }
    }
    if (!added) continue;
    sol = sys.solve();
    if (!sol) {
      cert.failure_degree = t;
      return cert;
    }
  }

  GradedMap s = GradedMap::zero(q.space, b.reduced_space(f));
  for (int d = 1; d <= bound; ++d) {
    Matrix blk(f, static_cast<std::size_t>(b.dim(d)), static_cast<std::size_t>(q.dim(d)));
    for (int k = 0; k < q.dim(d); ++k) {
      Element x = q.section(d, k);
      for (std::size_t m = 0; m < dec[d].size(); ++m) x.add_scaled(dec[d][m], (*sol)[first_var[d][k] + m]);
      blk.set_column(static_cast<std::size_t>(k), detail::element_to_vector(f, b, d, x));
    }
    s.set_block(d, std::move(blk));
  }
  if (!verify_section(h, q, s)) throw InvariantViolation("theorems", "solved section fails its own equations");
  cert.split = true;
  cert.section = std::move(s);
  return cert;
}

// ---------------------------------------------------------------- primitive lifts

/// x' primitive with x' ≡ x modulo decomposables. In characteristic p on a
/// cocommutative H the hypothesis V(x) = 0 is checked first.
inline Element find_primitive_lift(const BialgebraData& h, const Element& x) {
  const Basis& b = h.basis();
  const Field& f = h.field();
  const int d = element_degree(b, x);
  if (d <= 0) throw DomainError("theorems", "primitive lift needs a homogeneous element of positive degree");
  if (f.is_prime_field() && h.is_cocommutative()) {
    VModule v = verschiebung_module(h.coalgebra());
    if (d % static_cast<int>(v.prime()) == 0 && v.has_structure(d / static_cast<int>(v.prime())) &&
        !apply_V(h, v, x).is_zero())
      throw DomainError("theorems", "V(x) is not zero, so x has no primitive lift", d);
  }
  Indecomposables q = indecomposables_Q(h.algebra(), nullptr, h.words() ? &*h.words() : nullptr);
  auto dec = detail::decomposable_basis(q, d);
  detail::LinearSystem<std::pair<int, int>> sys(f, static_cast<int>(dec.size()));
  for (const auto& [k, c] : h.reduced_coproduct(x)) sys.add_constant(k, c);
  for (std::size_t m = 0; m < dec.size(); ++m)
    for (const auto& [k, c] : h.reduced_coproduct(dec[m])) sys.add(k, static_cast<int>(m), c);
  auto sol = sys.solve();
  if (!sol) throw SearchFailure("theorems", "no primitive lift", d);
  Element out = x;
  for (std::size_t m = 0; m < dec.size(); ++m) out.add_scaled(dec[m], (*sol)[m]);
  return out;
}

// ---------------------------------------------------------------- H(M)

namespace detail {

// D for the next generator of a chain whose earlier generators are `sub`'s
// letters. Unknowns are the coefficients of u⊗v over word pairs of total
// degree `degree`; previous is the letter V should land on (or -1).
inline WordTensor solve_chain_coproduct(const BialgebraData& sub, int letter, int degree, int previous) {
  const Basis& b = sub.basis();
  const Field& f = sub.field();
  const WordStructure& ws = sub.words().value();
  const int p = static_cast<int>(f.characteristic());

  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> var;
  for (int u = 1; u < b.size(); ++u) {
    const int rest = degree - b.degree(u);
    if (rest < 1 || rest > b.bound()) continue;
    for (int v = b.begin(rest); v < b.end(rest); ++v) {
      var.emplace(std::make_pair(u, v), static_cast<int>(pairs.size()));
      pairs.push_back({u, v});
    }
  }
  LinearSystem<std::array<int, 4>> sys(f, static_cast<int>(pairs.size()));
  const Scalar one = Scalar::one(f);
  // (Δ̄⊗1)D = (1⊗Δ̄)D, rows tagged 0.
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [u, v] = pairs[k];
    for (const auto& [ab, c] : sub.reduced_coproduct(sub.e(u))) sys.add({0, ab.first, ab.second, v}, static_cast<int>(k), c);
    for (const auto& [ab, c] : sub.reduced_coproduct(sub.e(v))) sys.add({0, u, ab.first, ab.second}, static_cast<int>(k), -c);
  }
  // τD = D, rows tagged 1.
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [u, v] = pairs[k];
    const Scalar s = sign_scalar(f, static_cast<long long>(b.degree(u)) * b.degree(v));
    const auto lo = std::min(u, v), hi = std::max(u, v);
    sys.add({1, lo, hi, 0}, static_cast<int>(k), u <= v ? one : -s);
    if (u == v) sys.add({1, lo, hi, 0}, static_cast<int>(k), -s);
  }
  // V(g) = previous: the coefficient of b^{⊗p} in the iterated coproduct,
  // rows tagged 2.
  if (degree % p == 0) {
    const int n = degree / p;
    for (int c = b.begin(n); c < b.end(n); ++c) {
      const bool target = previous >= 0 && c == ws.letter_index(previous);
      sys.add_constant({2, c, 0, 0}, target ? -one : Scalar::zero(f));
      for (int v = 1; v < b.size(); ++v) {
        auto it = var.find({c, v});
        if (it == var.end()) continue;
        Scalar diag = diagonal_coefficient(sub.coalgebra(), v, c, p - 1);
        sys.add({2, c, 0, 0}, it->second, diag);
      }
    }
  }
  auto sol = sys.solve();
  if (!sol) throw SearchFailure("theorems", "no coproduct extends the chain", degree);
  WordTensor t = primitive_word_tensor(f, letter);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!(*sol)[k].is_zero()) t.add({ws.words[pairs[k].first], ws.words[pairs[k].second]}, (*sol)[k]);
  return t;
}

}  // namespace detail

/// Free presentation of H(M): one tensor generator per chain element,
/// g{s}_{i} in degree n p^i, coproducts solved chain by chain.
inline FreePresentation construct_H_presentation(const Decomposition& dec, int bound) {
  const std::uint32_t p = dec.prime();
  const Field f = Field::prime(p);
  FreePresentation out;
  out.field = f;
  int s = 0;
  for (const auto& [summand, mult] : dec.counts()) {
    for (int copy = 0; copy < mult; ++copy, ++s) {
      std::vector<int> degrees;
      for (long long d = summand.n, i = 0; d <= bound && (summand.at_least || i <= summand.j); d *= p, ++i)
        degrees.push_back(static_cast<int>(d));
      FreePresentation chain;
      chain.field = f;
      for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::string name = "g" + std::to_string(s + 1) + "_" + std::to_string(i);
        const int g = chain.add_generator(name, degrees[i]);
        if (i == 0) continue;
        FreePresentation before = chain;
        before.names.pop_back();
        before.degrees.pop_back();
        before.coproducts.pop_back();
        BialgebraData sub = build_bialgebra(before, degrees[i]);
        chain.coproducts[g] = detail::solve_chain_coproduct(sub, g, degrees[i], g - 1);
      }
      // Append the chain with letters shifted past the earlier summands.
      const int offset = static_cast<int>(out.names.size());
      for (std::size_t i = 0; i < chain.names.size(); ++i) out.add_generator(chain.names[i], chain.degrees[i]);
      for (std::size_t i = 0; i < chain.names.size(); ++i) {
        WordTensor t(f);
        for (const auto& [k, c] : chain.coproducts[i]) {
          Word u = k.first, v = k.second;
          for (int& l : u) l += offset;
          for (int& l : v) l += offset;
          t.add({u, v}, c);
        }
        out.coproducts[offset + i] = std::move(t);
      }
    }
  }
  return out;
}

inline BialgebraData construct_H(const Decomposition& dec, int bound) {
  return build_bialgebra(construct_H_presentation(dec, bound), bound);
}

inline BialgebraData construct_H(const VModule& m) { return construct_H(classify(m), m.bound()); }

// ---------------------------------------------------------------- morphism search

struct HopfMorphismWitness {
  std::vector<Element> generator_images;  // per source letter
  BialgebraMorphism morphism;
  bool is_iso_on_Q = false;
  bool is_iso = false;
  long long evaluations = 0;

  std::vector<Matrix> blocks() const {
    std::vector<Matrix> out;
    for (int d = 0; d <= morphism.source.bound(); ++d) out.push_back(morphism_block(morphism, d));
    return out;
  }
};

namespace detail {

inline std::vector<int> letters_by_degree(const WordStructure& ws) {
  std::vector<int> order(ws.letter_labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ws.letter_degrees[a] < ws.letter_degrees[b]; });
  return order;
}

// Image of a source word under the algebra map fixed by letter images.
inline Element word_image(const BialgebraData& target, const std::vector<Element>& letter_images, const Word& w) {
  Element r = target.e(0);
  for (int l : w) r = target.multiply(r, letter_images.at(l));
  return r;
}

inline Tensor2 tensor_image(const BialgebraData& source, const BialgebraData& target, const std::vector<Element>& letter_images,
                            const Tensor2& t) {
  const WordStructure& ws = source.words().value();
  Tensor2 r(target.field());
  std::map<int, Element> memo;
  auto img = [&](int i) -> const Element& {
    auto it = memo.find(i);
    if (it == memo.end()) it = memo.emplace(i, word_image(target, letter_images, ws.words[i])).first;
    return it->second;
  };
  for (const auto& [k, c] : t)
    for (const auto& [i, a] : img(k.first))
      for (const auto& [j, b] : img(k.second)) r.add({i, j}, c * a * b);
  return r;
}

inline bool q_spec_is_iso(const BialgebraData& source, const Indecomposables& qt, const std::vector<Vector>& q_spec) {
  const WordStructure& ws = source.words().value();
  const Field& f = source.field();
  for (int d = 1; d <= source.bound(); ++d) {
    std::vector<int> letters;
    for (std::size_t l = 0; l < ws.letter_degrees.size(); ++l)
      if (ws.letter_degrees[l] == d) letters.push_back(static_cast<int>(l));
    if (static_cast<int>(letters.size()) != qt.dim(d)) return false;
    Matrix m(f, static_cast<std::size_t>(qt.dim(d)), letters.size());
    for (std::size_t c = 0; c < letters.size(); ++c) m.set_column(c, q_spec[letters[c]]);
    if (m.rank() != letters.size()) return false;
  }
  return true;
}

}  // namespace detail

/// Hopf map from a free source, fixed on Q by q_spec (one target-Q coordinate
/// vector per source letter). Letters are assigned in increasing degree; each
/// image solves Δ̄(φg) = (φ⊗φ)Δ̄(g) over decomposable corrections, and other
/// points of the affine solution space are tried when a later letter is
/// obstructed. Over Q only the least solution is tried.
inline HopfMorphismWitness hopf_morphism_search(const BialgebraData& source, const BialgebraData& target,
                                                const std::vector<Vector>& q_spec, long long budget = 1000000) {
  if (!source.words() || !source.words()->concatenation)
    throw DomainError("theorems", "morphism search needs a source free on its letters");
  if (!(source.field() == target.field()) || source.bound() != target.bound())
    throw StructuralError("theorems", "source and target differ in field or bound");
  const WordStructure& ws = *source.words();
  const Field& f = source.field();
  if (q_spec.size() != ws.letter_labels.size()) throw ValidationError("theorems", "q_spec needs one vector per source letter");
  Indecomposables qt = indecomposables_Q(target);
  for (std::size_t l = 0; l < q_spec.size(); ++l)
    if (static_cast<int>(q_spec[l].size()) != qt.dim(ws.letter_degrees[l]))
      throw ValidationError("theorems", "q_spec vector has the wrong length", ws.letter_degrees[l]);

  // V-compatibility of q_spec, when both sides carry V.
  if (f.is_prime_field() && source.is_cocommutative() && target.is_cocommutative()) {
    Indecomposables qs = indecomposables_Q(source);
    const int p = static_cast<int>(f.characteristic());
    for (std::size_t l = 0; l < q_spec.size(); ++l) {
      const int t = ws.letter_degrees[l];
      if (t % p != 0 || !qt.v_module->has_structure(t / p)) continue;
      const int n = t / p;
      Vector lhs = qt.v_module->structure(n).apply(q_spec[l]);
      Vector src = qs.v_module->structure(n).apply(qs.project(t, source.e(ws.letter_index(static_cast<int>(l)))));
      Vector rhs = zero_vector(f, static_cast<std::size_t>(qt.dim(n)));
      for (int k = 0; k < qs.dim(n); ++k) {
        if (src[k].is_zero()) continue;
        const int letter = ws.words[qs.representatives[n][k]].at(0);
        for (int r = 0; r < qt.dim(n); ++r) rhs[r] += src[k] * q_spec[letter][r];
      }
      if (lhs != rhs) throw ValidationError("theorems", "q_spec does not commute with V", t);
    }
  }

  const auto order = detail::letters_by_degree(ws);
  std::vector<Element> images(ws.letter_labels.size(), Element(f));
  long long evaluations = 0;
  int obstructed = -1;
  const std::uint32_t p = f.characteristic();

  std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const int l = order[pos];
    const int d = ws.letter_degrees[l];
    Element base(f);
    for (int k = 0; k < qt.dim(d); ++k)
      if (!q_spec[l][k].is_zero()) base.add_scaled(qt.section(d, k), q_spec[l][k]);
    auto dec = detail::decomposable_basis(qt, d);
    Tensor2 rhs = detail::tensor_image(source, target, images, source.reduced_coproduct(source.e(ws.letter_index(l))));
    detail::LinearSystem<std::pair<int, int>> sys(f, static_cast<int>(dec.size()));
    for (const auto& [k, c] : target.reduced_coproduct(base)) sys.add_constant(k, c);
    for (const auto& [k, c] : rhs) sys.add_constant(k, -c);
    for (std::size_t m = 0; m < dec.size(); ++m)
      for (const auto& [k, c] : target.reduced_coproduct(dec[m])) sys.add(k, static_cast<int>(m), c);
    auto particular = sys.solve();
    ++evaluations;
    if (!particular) {
      if (obstructed < 0) obstructed = d;
      return false;
    }
    std::vector<Vector> kernel = p == 0 ? std::vector<Vector>{} : sys.kernel();
    // Candidates: particular + Σ a_i k_i, a in counting order over F_p.
    std::vector<std::uint32_t> digits(kernel.size(), 0);
    while (true) {
      if (evaluations > budget) throw SearchFailure("theorems", "search budget exhausted", obstructed < 0 ? d : obstructed);
      Element img = base;
      for (std::size_t m = 0; m < dec.size(); ++m) {
        Scalar c = (*particular)[m];
        for (std::size_t i = 0; i < kernel.size(); ++i)
          if (digits[i]) c += Scalar::from_int(f, digits[i]) * kernel[i][m];
        img.add_scaled(dec[m], c);
      }
      images[l] = img;
      if (assign(pos + 1)) return true;
      ++evaluations;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    images[l] = Element(f);
    return false;
  };
  if (!assign(0)) throw SearchFailure("theorems", "no Hopf map realises q_spec", obstructed);

  HopfMorphismWitness w;
  w.generator_images = images;
  w.evaluations = evaluations;
  std::vector<Element> all(source.basis().size(), Element(f));
  std::map<Word, Element> memo{{Word{}, target.e(0)}};
  for (int i = 0; i < source.basis().size(); ++i) {
    const Word& word = ws.words[i];
    Word prefix(word.begin(), word.end() - (word.empty() ? 0 : 1));
    if (!word.empty()) memo[word] = target.multiply(memo.at(prefix), images[word.back()]);
    all[i] = memo.at(word);
  }
  w.morphism = BialgebraMorphism{source, target, std::move(all)};
  w.is_iso_on_Q = detail::q_spec_is_iso(source, qt, q_spec);
  w.is_iso = is_degreewise_bijective(w.morphism);
  const bool target_free = target.words() && target.words()->concatenation;
  if (w.is_iso_on_Q && target_free && !w.is_iso)
    throw InvariantViolation("theorems", "a map of free algebras that is an isomorphism on Q is not bijective");
  return w;
}

/// q_spec read off a graded map QS → QT (source letters are the Q basis).
inline std::vector<Vector> q_spec_from_map(const BialgebraData& source, const Indecomposables& qs, const GradedMap& g) {
  const WordStructure& ws = source.words().value();
  std::vector<Vector> out;
  for (std::size_t l = 0; l < ws.letter_labels.size(); ++l) {
    const int d = ws.letter_degrees[l];
    const int idx = ws.letter_index(static_cast<int>(l));
    const auto& reps = qs.representatives[d];
    auto it = std::find(reps.begin(), reps.end(), idx);
    if (it == reps.end()) throw StructuralError("theorems", "source letter is not a Q representative", d);
    out.push_back(g.block(d).column(static_cast<std::size_t>(it - reps.begin())));
  }
  return out;
}

/// A V-module isomorphism A → B, found as a random point of Hom_V(A, B)
/// that is invertible in every degree. nullopt when none turns up.
inline std::optional<GradedMap> find_vmodule_iso(const VModule& a, const VModule& b, std::uint64_t seed = 1, int tries = 200) {
  if (a.prime() != b.prime() || a.bound() != b.bound()) return std::nullopt;
  const Field& f = a.field();
  const int bound = a.bound();
  for (int d = 1; d <= bound; ++d)
    if (a.dim(d) != b.dim(d)) return std::nullopt;
  // Variable (d, r, c): entry (r, c) of the degree-d block.
  std::vector<int> first(bound + 2, 0);
  for (int d = 1; d <= bound; ++d) first[d + 1] = first[d] + b.dim(d) * a.dim(d);
  const int vars = first[bound + 1];
  auto var = [&](int d, int r, int c) { return first[d] + r * a.dim(d) + c; };
  detail::LinearSystem<std::array<int, 3>> sys(f, vars);
  const int p = static_cast<int>(a.prime());
  for (int n = 1; a.has_structure(n); ++n) {
    const int t = n * p;
    const Matrix& va = a.structure(n);  // dim_a(n) × dim_a(t)
    const Matrix& vb = b.structure(n);
    // (vb · g_t)(r, c) - (g_n · va)(r, c) = 0
    for (int r = 0; r < b.dim(n); ++r)
      for (int c = 0; c < a.dim(t); ++c) {
        std::array<int, 3> key{n, r, c};
        sys.add_constant(key, Scalar::zero(f));
        for (int k = 0; k < b.dim(t); ++k)
          if (!vb(r, k).is_zero()) sys.add(key, var(t, k, c), vb(r, k));
        for (int k = 0; k < a.dim(n); ++k)
          if (!va(k, c).is_zero()) sys.add(key, var(n, r, k), -va(k, c));
      }
  }
  auto basis = sys.kernel();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(0, f.is_rational() ? 5 : static_cast<long long>(f.characteristic()) - 1);
  for (int attempt = 0; attempt < tries; ++attempt) {
    Vector x = zero_vector(f, static_cast<std::size_t>(vars));
    for (const auto& v : basis) {
      Scalar c = Scalar::from_int(f, coeff(rng));
      for (int i = 0; i < vars; ++i) x[i] += c * v[i];
    }
    GradedMap g = GradedMap::zero(a.space(), b.space());
    bool ok = true;
    for (int d = 1; d <= bound && ok; ++d) {
      Matrix blk(f, static_cast<std::size_t>(b.dim(d)), static_cast<std::size_t>(a.dim(d)));
      for (int r = 0; r < b.dim(d); ++r)
        for (int c = 0; c < a.dim(d); ++c) blk(r, c) = x[var(d, r, c)];
      ok = blk.rank() == static_cast<std::size_t>(a.dim(d));
      g.set_block(d, std::move(blk));
    }
    if (ok) return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- iso tests

struct IsoVerdict {
  Tri verdict = Tri::Unknown;
  std::string evidence;
  std::optional<Decomposition> left;
  std::optional<Decomposition> right;

  bool is_true() const { return verdict == Tri::Yes; }
};

namespace detail {

inline std::string dims_string(const Basis& b) {
  std::string s = "(";
  for (int d = 1; d <= b.bound(); ++d) s += (d > 1 ? "," : "") + std::to_string(b.dim(d));
  return s + ")";
}

template <FVKind K>
IsoVerdict compare_modules(const FVModule<K>& a, const FVModule<K>& b, const std::string& what) {
  IsoVerdict v;
  v.left = classify(a);
  v.right = classify(b);
  const bool same = *v.left == *v.right;
  v.verdict = same ? Tri::Yes : Tri::No;
  v.evidence = what + (same ? " agree: " + v.left->to_string() : " differ: " + v.left->to_string() + " vs " + v.right->to_string());
  return v;
}

}  // namespace detail

/// J^∨(A) ≅ J^∨(B): compares Ā and B̄ as F-modules in characteristic p and as
/// graded vector spaces in characteristic 0.
inline IsoVerdict iso_test_jvee(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field()) || a.bound() != b.bound())
    throw StructuralError("theorems", "algebras differ in field or bound");
  if (a.field().is_rational()) {
    IsoVerdict v;
    const std::string da = detail::dims_string(a.basis()), db = detail::dims_string(b.basis());
    v.verdict = da == db ? Tri::Yes : Tri::No;
    v.evidence = "graded dimensions " + da + (da == db ? " agree" : " vs " + db);
    return v;
  }
  return detail::compare_modules(frobenius_module(a), frobenius_module(b), "F-modules");
}

/// J(C) ≅ J(D), the dual statement with V-modules.
inline IsoVerdict iso_test_j(const GradedCoalgebra& c, const GradedCoalgebra& d) {
  if (!(c.field() == d.field()) || c.bound() != d.bound())
    throw StructuralError("theorems", "coalgebras differ in field or bound");
  if (c.field().is_rational()) {
    IsoVerdict v;
    const std::string dc = detail::dims_string(c.basis()), dd = detail::dims_string(d.basis());
    v.verdict = dc == dd ? Tri::Yes : Tri::No;
    v.evidence = "graded dimensions " + dc + (dc == dd ? " agree" : " vs " + dd);
    return v;
  }
  return detail::compare_modules(verschiebung_module(c), verschiebung_module(d), "V-modules");
}

/// Compares QH and QH' as V-modules. Different modules rule out an
/// isomorphism; equal modules decide it when both sides are split.
inline IsoVerdict iso_test_hopf(const BialgebraData& h, const BialgebraData& k) {
  detail::require_char_p_cocommutative(h, "iso_test_hopf");
  detail::require_char_p_cocommutative(k, "iso_test_hopf");
  if (!(h.field() == k.field()) || h.bound() != k.bound())
    throw StructuralError("theorems", "Hopf algebras differ in field or bound");
  IsoVerdict v = detail::compare_modules(*indecomposables_Q(h).v_module, *indecomposables_Q(k).v_module, "Q V-modules");
  if (v.verdict == Tri::Yes) {
    const bool split = is_split(h).split && is_split(k).split;
    if (!split) {
      v.verdict = Tri::Unknown;
      v.evidence += "; not both split";
    } else {
      v.evidence += "; both split";
    }
  }
  return v;
}

// ---------------------------------------------------------------- primitively generated

struct PrimitiveGenerationReport {
  bool verdict = false;
  bool by_primitives = false;      // P → Q onto in every degree
  int primitives_failure = -1;     // first degree where it is not
  bool by_split = false;           // split and V trivial on Q
  SplitnessCertificate split;
  bool v_trivial_on_Q = false;
};

inline PrimitiveGenerationReport is_primitively_generated(const BialgebraData& h) {
  detail::require_char_p_cocommutative(h, "is_primitively_generated");
  PrimitiveGenerationReport r;
  Indecomposables q = indecomposables_Q(h);
  r.by_primitives = true;
  for (int d = 1; d <= h.bound() && r.by_primitives; ++d) {
    if (q.dim(d) == 0) continue;
    Matrix m(h.field(), static_cast<std::size_t>(q.dim(d)), 0);
    auto prims = primitives(h, d);
    Matrix cols(h.field(), static_cast<std::size_t>(q.dim(d)), prims.size());
    for (std::size_t c = 0; c < prims.size(); ++c) cols.set_column(c, q.project(d, prims[c]));
    if (cols.rank() != static_cast<std::size_t>(q.dim(d))) {
      r.by_primitives = false;
      r.primitives_failure = d;
    }
  }
  r.split = is_split(h);
  r.v_trivial_on_Q = true;
  for (int n = 1; q.v_module->has_structure(n); ++n) r.v_trivial_on_Q = r.v_trivial_on_Q && q.v_module->structure(n).is_zero();
  r.by_split = r.split.split && r.v_trivial_on_Q;
  if (r.by_primitives != r.by_split)
    throw InvariantViolation("theorems", "primitive generation routes disagree", r.primitives_failure);
  r.verdict = r.by_primitives;
  return r;
}

// ---------------------------------------------------------------- Borel

/// A(n,j) = k[x]/(x^{p^{j+1}}), Λ(x) for odd n at odd p (j = 0), and k[x]
/// when at_least marks a height beyond the bound.
struct MonogenicFactor {
  int n = 1;
  int j = 0;
  bool at_least = false;

  friend auto operator<=>(const MonogenicFactor&, const MonogenicFactor&) = default;

  std::string to_string() const { return "A(" + std::to_string(n) + "," + (at_least ? "≥" : "") + std::to_string(j) + ")"; }

  TruncatedSeries series(std::uint32_t p, int bound) const {
    TruncatedSeries s = TruncatedSeries::one(bound);
    if (p != 2 && n % 2 == 1) {
      if (n <= bound) s.at(n) += 1;
      return s;
    }
    long long height = 1;
    for (int i = 0; i <= j; ++i) height *= p;
    for (long long i = 1; i * n <= bound && (at_least || i < height); ++i) s.at(static_cast<int>(i * n)) += 1;
    return s;
  }
};

struct BorelDecomposition {
  std::uint32_t p = 2;
  int bound = 0;
  std::map<MonogenicFactor, int> factors;

  int multiplicity(const MonogenicFactor& f) const {
    auto it = factors.find(f);
    return it == factors.end() ? 0 : it->second;
  }

  TruncatedSeries series() const {
    TruncatedSeries s = TruncatedSeries::one(bound);
    for (const auto& [f, m] : factors)
      for (int i = 0; i < m; ++i) s = s * f.series(p, bound);
    return s;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [f, m] : factors) s += (s.empty() ? "" : " ⊗ ") + (m > 1 ? std::to_string(m) + "·" : "") + f.to_string();
    return s.empty() ? "k" : s;
  }
};

/// Monogenic factors of a commutative algebra underlying a Hopf algebra.
/// Modulo the ideal generated by positive degrees below n, the degree-n
/// generators have pairwise independent p^i-th powers while nonzero, so the
/// rank r_i of x ↦ x^{p^i} on degree n counts generators of height > p^i.
inline BorelDecomposition borel_decomposition(const GradedAlgebra& a) {
  const std::uint32_t p = detail::require_char_p(a.field());
  if (!a.is_commutative()) throw DomainError("theorems", "Borel decomposition needs a commutative algebra");
  const Basis& b = a.basis();
  const Field& f = a.field();
  const int bound = b.bound();
  BorelDecomposition out;
  out.p = p;
  out.bound = bound;
  std::vector<SparseRowSpace<int>> ideal(bound + 1, SparseRowSpace<int>(f));

  for (int n = 1; n <= bound; ++n) {
    // Generators are the basis elements that are not ideal pivots.
    std::vector<Element> gens;
    for (int i = b.begin(n); i < b.end(n); ++i)
      if (!ideal[n].is_pivot(i)) gens.push_back(basis_element(f, i));
    if (!gens.empty()) {
      std::vector<long long> r{static_cast<long long>(gens.size())};
      std::vector<Element> pw = gens;
      int top = 0;
      for (long long deg = static_cast<long long>(n) * p; deg <= bound; deg *= p) {
        SparseRowSpace<int> span(f);
        for (auto& x : pw) {
          x = detail::power(a, x, static_cast<int>(p));
          span.insert(ideal[deg].reduce(x));
        }
        r.push_back(static_cast<long long>(span.dimension()));
        ++top;
      }
      for (int j = 0; j < top; ++j) {
        const long long c = r[j] - r[j + 1];
        if (c < 0) throw InvariantViolation("theorems", "power ranks increase", n);
        if (c > 0) out.factors[MonogenicFactor{n, j, false}] += static_cast<int>(c);
      }
      if (r[top] > 0) {
        // Odd n at odd p squares to zero; that is exterior, not a truncation.
        if (p != 2 && n % 2 == 1)
          out.factors[MonogenicFactor{n, 0, false}] += static_cast<int>(r[top]);
        else
          out.factors[MonogenicFactor{n, top, true}] += static_cast<int>(r[top]);
      }
    }
    for (int i = b.begin(n); i < b.end(n); ++i)
      for (int c = 0; c < b.end(bound - n); ++c) ideal[n + b.degree(c)].insert(a.product(i, c));
  }

  TruncatedSeries chi = b.reduced_space(f).series() + TruncatedSeries::one(bound);
  if (!(out.series().coefficients() == chi.coefficients()))
    throw InvariantViolation("theorems", "factor series " + out.series().to_string() + " differs from " + chi.to_string());
  return out;
}

inline BorelDecomposition borel_decomposition(const BialgebraData& h) { return borel_decomposition(h.algebra()); }

// ---------------------------------------------------------------- polynomial criterion

struct PolynomialVerdict {
  std::uint32_t prime = 2;
  bool polynomial = true;
  int failure_degree = -1;
  std::string reason;
};

/// J^∨(A) is polynomial exactly when F is injective on Ā (and, for odd p, Ā
/// is concentrated in even degrees). Checked on every degree n with pn ≤ N.
inline PolynomialVerdict polynomial_criterion(const GradedAlgebra& a) {
  const std::uint32_t p = detail::require_char_p(a.field());
  const Basis& b = a.basis();
  PolynomialVerdict v;
  v.prime = p;
  FModule fm = frobenius_module(a);
  for (int d = 1; d <= b.bound(); ++d) {
    if (b.dim(d) == 0) continue;
    if (p != 2 && d % 2 == 1) {
      v.polynomial = false;
      v.failure_degree = d;
      v.reason = "odd-degree class " + b.label(b.begin(d));
      return v;
    }
    if (!fm.has_structure(d)) continue;
    const Matrix& m = fm.structure(d);
    if (m.rank() < static_cast<std::size_t>(b.dim(d))) {
      Element x = detail::vector_to_element(b, d, m.kernel().front());
      v.polynomial = false;
      v.failure_degree = d;
      v.reason = "F(" + format_element(b, x) + ") = 0";
      return v;
    }
  }
  return v;
}

/// The integral form: the presentation is reduced mod each listed prime.
inline std::vector<PolynomialVerdict> polynomial_criterion_integral(MonomialAlgebraPresentation pres, int bound,
                                                                    const std::vector<std::uint32_t>& primes) {
  std::vector<PolynomialVerdict> out;
  for (auto p : primes) {
    pres.field = Field::prime(p);
    out.push_back(polynomial_criterion(build_algebra(pres, bound)));
  }
  return out;
}

// ---------------------------------------------------------------- char 0

/// A with every product of positive-degree elements set to zero.
inline GradedAlgebra square_zero(const GradedAlgebra& a) {
  const Field f = a.field();
  return GradedAlgebra::from_rule(
      f, a.basis(),
      [f](int i, int j) {
        if (i == 0) return basis_element(f, j);
        if (j == 0) return basis_element(f, i);
        return Element(f);
      },
      true);
}

struct Char0Trivialization {
  HopfMorphismWitness witness;
  std::vector<int> primitive_dims;  // dim P in each degree
  std::vector<Matrix> retraction;   // q: QH → Ā per degree
};

/// J^∨(A) → J^∨(A_triv) coinduced by a retraction q of P → Q: the image of a
/// word sums q∘π over all ways to cut it into consecutive nonempty pieces.
inline Char0Trivialization char0_trivialize(const GradedAlgebra& a, int bound) {
  if (!a.field().is_rational()) throw DomainError("theorems", "trivialization is the characteristic-0 construction");
  const Field& f = a.field();
  BialgebraData h = build_Jvee(a, bound);
  BialgebraData t = build_Jvee(square_zero(a), bound);
  const Basis& hb = h.basis();
  const Basis& ab = a.basis();
  const WordStructure& hw = h.words().value();
  const WordStructure& tw = t.words().value();
  Indecomposables q = indecomposables_Q(h.algebra(), nullptr, h.words() ? &*h.words() : nullptr);

  Char0Trivialization out;
  out.primitive_dims.assign(bound + 1, 0);
  out.retraction.resize(bound + 1);
  for (int d = 1; d <= bound; ++d) {
    auto prims = primitives(h, d);
    out.primitive_dims[d] = static_cast<int>(prims.size());
    Matrix proj(f, static_cast<std::size_t>(q.dim(d)), prims.size());
    for (std::size_t c = 0; c < prims.size(); ++c) proj.set_column(c, q.project(d, prims[c]));
    if (proj.rank() != prims.size()) throw InvariantViolation("theorems", "P → Q is not injective", d);
    // The primitives are the letters; q sends π([a]) back to a.
    Matrix letters(f, static_cast<std::size_t>(q.dim(d)), static_cast<std::size_t>(ab.dim(d)));
    for (int i = ab.begin(d); i < ab.end(d); ++i)
      letters.set_column(static_cast<std::size_t>(ab.local(i)), q.project(d, h.e(hw.letter_index(i - 1))));
    // Solve X · letters = I row by row, i.e. lettersᵀ Xᵀ = I.
    Matrix lt = letters.transpose();
    Matrix qd(f, static_cast<std::size_t>(ab.dim(d)), static_cast<std::size_t>(q.dim(d)));
    for (int r = 0; r < ab.dim(d); ++r) {
      Vector e = zero_vector(f, static_cast<std::size_t>(ab.dim(d)));
      e[r] = Scalar::one(f);
      auto row = lt.solve(e);
      if (!row) throw InvariantViolation("theorems", "letters are dependent in Q", d);
      for (int c = 0; c < q.dim(d); ++c) qd(r, c) = (*row)[c];
    }
    out.retraction[d] = std::move(qd);
  }

  // q∘π on a word, as a combination of letters of A (0-based).
  std::map<int, LinComb<int>> qpi;
  auto q_of = [&](const Word& w) -> const LinComb<int>& {
    const int idx = hw.index_of(w);
    auto it = qpi.find(idx);
    if (it != qpi.end()) return it->second;
    const int d = hb.degree(idx);
    Vector v = out.retraction[d].apply(q.project(d, h.e(idx)));
    LinComb<int> r(f);
    for (int k = 0; k < ab.dim(d); ++k) r.add(ab.begin(d) + k - 1, v[k]);
    return qpi.emplace(idx, std::move(r)).first->second;
  };
  std::vector<Element> images(hb.size(), Element(f));
  for (int i = 0; i < hb.size(); ++i) {
    const Word& w = hw.words[i];
    if (w.empty()) {
      images[i] = t.e(0);
      continue;
    }
    // Walk cut points; partial words carry their coefficient.
    std::function<void(std::size_t, Word, Scalar)> cut = [&](std::size_t start, Word acc, Scalar c) {
      if (start == w.size()) {
        images[i].add(tw.index_of(acc), c);
        return;
      }
      for (std::size_t end = start + 1; end <= w.size(); ++end) {
        for (const auto& [letter, s] : q_of(Word(w.begin() + start, w.begin() + end))) {
          Word next = acc;
          next.push_back(letter);
          cut(end, std::move(next), c * s);
        }
      }
    };
    cut(0, {}, Scalar::one(f));
  }
  out.witness.morphism = BialgebraMorphism{h, t, std::move(images)};
  out.witness.is_iso = is_degreewise_bijective(out.witness.morphism);
  out.witness.is_iso_on_Q = true;
  return out;
}

// ---------------------------------------------------------------- realisations on a module

/// Exhaustive search for a cocommutative coalgebra structure on k ⊕ M whose
/// Verschiebung is the given one: every reduced coproduct on pairs of basis
/// vectors of M is tried. Returns the first structure found, if any, and the
/// number of candidates examined.
struct CoalgebraRealization {
  std::optional<GradedCoalgebra> coalgebra;
  long long candidates = 0;
  int unknowns = 0;
};

inline CoalgebraRealization find_coalgebra_realization(const VModule& m, long long budget = 1000000) {
  const Field& f = m.field();
  const int bound = m.bound();
  const std::uint32_t p = m.prime();
  std::vector<std::vector<std::string>> labels(bound + 1);
  labels[0].push_back("1");
  for (int d = 1; d <= bound; ++d) labels[d] = m.space().labels(d);
  Basis b(bound, labels);
  std::vector<std::pair<int, std::pair<int, int>>> unknowns;  // (x, (u, v))
  for (int x = 1; x < b.size(); ++x)
    for (int u = 1; u < b.size(); ++u)
      for (int v = 1; v < b.size(); ++v)
        if (b.degree(u) + b.degree(v) == b.degree(x)) unknowns.push_back({x, {u, v}});
  CoalgebraRealization out;
  out.unknowns = static_cast<int>(unknowns.size());
  std::vector<std::uint32_t> digits(unknowns.size(), 0);
  while (true) {
    if (++out.candidates > budget) throw SearchFailure("theorems", "realisation search budget exhausted");
    std::vector<Tensor2> delta(b.size(), Tensor2(f));
    delta[0].add({0, 0}, Scalar::one(f));
    for (int x = 1; x < b.size(); ++x) {
      delta[x].add({x, 0}, Scalar::one(f));
      delta[x].add({0, x}, Scalar::one(f));
    }
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      if (digits[k]) delta[unknowns[k].first].add(unknowns[k].second, Scalar::from_int(f, digits[k]));
    GradedCoalgebra c(f, b, std::move(delta), true);
    AxiomReport rep = check_axioms(c);
    bool ok = rep.ok();
    if (ok) {
      VModule v = verschiebung_module(c);
      for (int n = 1; ok && v.has_structure(n); ++n) ok = v.structure(n) == m.structure(n);
    }
    if (ok) {
      out.coalgebra = std::move(c);
      return out;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace hopf
