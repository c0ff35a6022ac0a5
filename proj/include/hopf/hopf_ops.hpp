#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/fv_module.hpp"
#include "hopf/words.hpp"

namespace hopf {

// ---------------------------------------------------------------- axioms

struct AxiomFailure {
  std::string axiom;
  std::vector<int> indices;
  int degree = 0;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;
  std::vector<std::string> checked;

  bool ok() const { return failures.empty(); }
  bool passed(const std::string& axiom) const {
    for (const auto& f : failures)
      if (f.axiom == axiom) return false;
    return true;
  }
  /// Lowest degree at which the axiom fails, or -1.
  int first_failure(const std::string& axiom) const {
    int d = -1;
    for (const auto& f : failures)
      if (f.axiom == axiom && (d < 0 || f.degree < d)) d = f.degree;
    return d;
  }

  std::string to_string(const Basis& b) const {
    std::string s;
    for (const auto& a : checked) {
      int n = 0;
      for (const auto& f : failures) n += f.axiom == a;
      s += a + ": " + (n == 0 ? "ok" : std::to_string(n) + " failures") + "\n";
    }
    for (const auto& f : failures) {
      s += "  " + f.axiom + " fails on (";
      for (std::size_t i = 0; i < f.indices.size(); ++i) s += (i ? ", " : "") + b.label(f.indices[i]);
      s += ") in degree " + std::to_string(f.degree) + "\n";
    }
    return s;
  }
};

namespace detail {

inline void check_algebra(const GradedAlgebra& a, AxiomReport& rep) {
  const Basis& b = a.basis();
  const Field& f = a.field();
  const int n = b.bound();
  rep.checked.insert(rep.checked.end(), {"unit", "associativity"});
  for (int i = 0; i < b.size(); ++i) {
    Element ei = basis_element(f, i);
    if (!(a.product(0, i) == ei) || !(a.product(i, 0) == ei)) rep.failures.push_back({"unit", {i}, b.degree(i)});
  }
  for (int i = 1; i < b.size(); ++i)
    for (int j = 1; j < b.end(n - b.degree(i)); ++j) {
      const Element& ij = a.product(i, j);
      const int dij = b.degree(i) + b.degree(j);
      for (int k = 1; k < b.end(n - dij); ++k) {
        Element left = a.multiply(ij, basis_element(f, k));
        Element right = a.multiply(basis_element(f, i), a.product(j, k));
        if (!(left == right)) rep.failures.push_back({"associativity", {i, j, k}, dij + b.degree(k)});
      }
    }
  if (a.is_commutative()) {
    rep.checked.push_back("commutativity");
    for (int i = 1; i < b.size(); ++i)
      for (int j = i + 1; j < b.end(n - b.degree(i)); ++j) {
        Element swapped = a.product(j, i).scaled(sign_scalar(f, static_cast<long long>(b.degree(i)) * b.degree(j)));
        if (!(a.product(i, j) == swapped)) rep.failures.push_back({"commutativity", {i, j}, b.degree(i) + b.degree(j)});
      }
  }
}

inline void check_coalgebra(const GradedCoalgebra& c, AxiomReport& rep) {
  const Basis& b = c.basis();
  const Field& f = c.field();
  rep.checked.insert(rep.checked.end(), {"counit", "coassociativity"});
  {
    Tensor2 one(f);
    one.add({0, 0}, Scalar::one(f));
    if (!(c.coproduct(0) == one)) rep.failures.push_back({"counit", {0}, 0});
  }
  for (int i = 0; i < b.size(); ++i) {
    Element left(f), right(f);
    bool homogeneous = true;
    for (const auto& [k, s] : c.coproduct(i)) {
      if (b.degree(k.first) + b.degree(k.second) != b.degree(i)) homogeneous = false;
      if (k.second == 0) left.add(k.first, s);
      if (k.first == 0) right.add(k.second, s);
    }
    Element ei = basis_element(f, i);
    if (!homogeneous || !(left == ei) || !(right == ei)) rep.failures.push_back({"counit", {i}, b.degree(i)});

    Tensor3 l3(f), r3(f);
    for (const auto& [k, s] : c.coproduct(i)) {
      for (const auto& [k1, s1] : c.coproduct(k.first)) l3.add({k1.first, k1.second, k.second}, s * s1);
      for (const auto& [k2, s2] : c.coproduct(k.second)) r3.add({k.first, k2.first, k2.second}, s * s2);
    }
    if (!(l3 == r3)) rep.failures.push_back({"coassociativity", {i}, b.degree(i)});
  }
  if (c.is_cocommutative()) {
    rep.checked.push_back("cocommutativity");
    for (int i = 0; i < b.size(); ++i)
      if (!(twist(b, c.coproduct(i)) == c.coproduct(i))) rep.failures.push_back({"cocommutativity", {i}, b.degree(i)});
  }
}

}  // namespace detail

inline AxiomReport check_axioms(const GradedAlgebra& a) {
  AxiomReport r;
  detail::check_algebra(a, r);
  return r;
}

inline AxiomReport check_axioms(const GradedCoalgebra& c) {
  AxiomReport r;
  detail::check_coalgebra(c, r);
  return r;
}

/// Every connected bialgebra axiom, degree by degree up to the bound. Failing
/// index tuples are listed in the report.
inline AxiomReport check_axioms(const BialgebraData& h) {
  AxiomReport r;
  detail::check_algebra(h.algebra(), r);
  detail::check_coalgebra(h.coalgebra(), r);
  r.checked.push_back("compatibility");
  const Basis& b = h.basis();
  for (int i = 1; i < b.size(); ++i)
    for (int j = 1; j < b.end(b.bound() - b.degree(i)); ++j) {
      Tensor2 left = h.coalgebra().apply(h.algebra().product(i, j));
      Tensor2 right = tensor_multiply(h.algebra(), h.coalgebra().coproduct(i), h.coalgebra().coproduct(j));
      if (!(left == right)) r.failures.push_back({"compatibility", {i, j}, b.degree(i) + b.degree(j)});
    }
  return r;
}

// ---------------------------------------------------------------- antipode

/// S on every basis element via S(x) = -Σ_{(x',x'') ≠ (x,1)} S(x')x''.
inline std::vector<Element> antipode(const BialgebraData& h) {
  const Basis& b = h.basis();
  const Field& f = h.field();
  std::vector<Element> s(b.size(), Element(f));
  s[0].add(0, Scalar::one(f));
  for (int i = 1; i < b.size(); ++i) {
    Element acc(f);
    for (const auto& [k, c] : h.coalgebra().coproduct(i)) {
      if (k.first == i && k.second == 0) continue;
      if (k.first == i) throw InvariantViolation("hopf_core", "coproduct is not counital", b.degree(i));
      acc.add_scaled(h.algebra().multiply(s[k.first], basis_element(f, k.second)), c);
    }
    s[i] = acc.scaled(-Scalar::one(f));
  }
  return s;
}

inline Element apply_linear(const std::vector<Element>& images, const Element& x) {
  Element r(x.field());
  for (const auto& [i, c] : x) r.add_scaled(images.at(i), c);
  return r;
}

/// The antipode as a degree-preserving graded map.
inline GradedMap antipode_map(const BialgebraData& h) {
  const Basis& b = h.basis();
  auto s = antipode(h);
  GradedSpace sp = b.space(h.field());
  GradedMap m = GradedMap::zero(sp, sp);
  for (int d = 0; d <= b.bound(); ++d) {
    Matrix blk(h.field(), b.dim(d), b.dim(d));
    for (int i = b.begin(d); i < b.end(d); ++i)
      for (const auto& [k, c] : s[i]) blk(b.local(k), b.local(i)) = c;
    m.set_block(d, std::move(blk));
  }
  return m;
}

// ---------------------------------------------------------------- primitives

namespace detail {

// Columns: basis of degree d. Rows: the (i,j) pairs that occur.
inline Matrix reduced_coproduct_matrix(const BialgebraData& h, int d) {
  const Basis& b = h.basis();
  std::map<std::pair<int, int>, int> rows;
  std::vector<Tensor2> cols;
  for (int i = b.begin(d); i < b.end(d); ++i) {
    cols.push_back(h.reduced_coproduct(h.e(i)));
    for (const auto& [k, c] : cols.back()) rows.emplace(k, 0);
  }
  int r = 0;
  for (auto& [k, v] : rows) v = r++;
  Matrix m(h.field(), rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [k, s] : cols[c]) m(rows.at(k), c) = s;
  return m;
}

}  // namespace detail

/// Basis of the primitives in degree d.
inline std::vector<Element> primitives(const BialgebraData& h, int d) {
  const Basis& b = h.basis();
  if (d < 1) return {};
  if (d > b.bound()) throw TruncationError("hopf_core", "degree above the truncation bound", d);
  std::vector<Element> out;
  for (const auto& v : detail::reduced_coproduct_matrix(h, d).kernel()) {
    Element e(h.field());
    for (std::size_t i = 0; i < v.size(); ++i) e.add(b.begin(d) + static_cast<int>(i), v[i]);
    out.push_back(std::move(e));
  }
  return out;
}

inline bool is_primitive(const BialgebraData& h, const Element& x) { return h.reduced_coproduct(x).is_zero(); }

// ---------------------------------------------------------------- F and V

namespace detail {

inline Element power(const GradedAlgebra& a, const Element& x, int k) {
  Element r = basis_element(a.field(), 0);
  for (int i = 0; i < k; ++i) r = a.multiply(r, x);
  return r;
}

// Coefficient of b^{⊗k} in the (k-1)-fold iterated coproduct of e_x.
inline Scalar diagonal_coefficient(const GradedCoalgebra& c, int x, int b, int k) {
  const Field& f = c.field();
  if (k == 1) return x == b ? Scalar::one(f) : Scalar::zero(f);
  Scalar s = Scalar::zero(f);
  for (const auto& [key, coeff] : c.coproduct(x))
    if (key.first == b) s += coeff * diagonal_coefficient(c, key.second, b, k - 1);
  return s;
}

}  // namespace detail

/// F(x) = x^p on the augmentation ideal of a commutative algebra.
inline FModule frobenius_module(const GradedAlgebra& a) {
  const Basis& b = a.basis();
  const std::uint32_t p = detail::require_char_p(a.field());
  if (!a.is_commutative()) throw DomainError("hopf_core", "Frobenius needs a commutative algebra");
  FModule m(b.reduced_space(a.field()));
  for (int n = 1; m.has_structure(n); ++n) {
    if (!detail::structured_degree(n, p)) continue;
    const int t = n * static_cast<int>(p);
    Matrix blk(a.field(), b.dim(t), b.dim(n));
    for (int i = b.begin(n); i < b.end(n); ++i)
      for (const auto& [k, c] : detail::power(a, basis_element(a.field(), i), static_cast<int>(p)))
        blk(b.local(k), b.local(i)) = c;
    m.set_structure(n, std::move(blk));
  }
  return m;
}

/// V(x) = Σ_b (coefficient of b^{⊗p} in the iterated coproduct of x) b.
inline VModule verschiebung_module(const GradedCoalgebra& c) {
  const Basis& b = c.basis();
  const std::uint32_t p = detail::require_char_p(c.field());
  if (!c.is_cocommutative()) throw DomainError("hopf_core", "Verschiebung needs a cocommutative coalgebra");
  VModule m(b.reduced_space(c.field()));
  for (int n = 1; m.has_structure(n); ++n) {
    const int t = n * static_cast<int>(p);
    Matrix blk(c.field(), b.dim(n), b.dim(t));
    for (int x = b.begin(t); x < b.end(t); ++x)
      for (int y = b.begin(n); y < b.end(n); ++y) blk(b.local(y), b.local(x)) = detail::diagonal_coefficient(c, x, y, static_cast<int>(p));
    if (!detail::structured_degree(n, p) && !blk.is_zero())
      throw DomainError("hopf_core", "nonzero Verschiebung out of an odd degree at odd p", t);
    m.set_structure(n, std::move(blk));
  }
  return m;
}

inline FModule fv_forgetful_F(const BialgebraData& h) { return frobenius_module(h.algebra()); }
inline VModule fv_forgetful_V(const BialgebraData& h) { return verschiebung_module(h.coalgebra()); }

/// V applied to an element, read off the V-module of h.
inline Element apply_V(const BialgebraData& h, const VModule& v, const Element& x) {
  const Basis& b = h.basis();
  const int d = element_degree(b, x);
  Element r(h.field());
  if (d <= 0 || d % static_cast<int>(v.prime()) != 0) return r;
  const int n = d / static_cast<int>(v.prime());
  const Matrix& m = v.structure(n);
  for (const auto& [i, c] : x)
    for (std::size_t row = 0; row < m.rows(); ++row)
      if (!m(row, b.local(i)).is_zero()) r.add(b.begin(n) + static_cast<int>(row), m(row, b.local(i)) * c);
  return r;
}

// ---------------------------------------------------------------- Q

/// QH = H̄/H̄² with its quotient map, a section through the basis, and (in
/// characteristic p for cocommutative H) the induced Verschiebung.
struct Indecomposables {
  Field field = Field::prime(2);
  GradedSpace space;
  std::vector<SparseRowSpace<int>> decomposables;  // per degree
  std::vector<std::vector<int>> representatives;   // basis index of each Q basis vector
  std::optional<VModule> v_module;

  int dim(int d) const { return static_cast<int>(representatives.at(d).size()); }

  /// Coordinates of the class of a homogeneous x in degree d.
  Vector project(int d, const Element& x) const {
    Vector v = zero_vector(field, representatives.at(d).size());
    Element r = decomposables.at(d).reduce(x);
    for (std::size_t k = 0; k < representatives[d].size(); ++k) v[k] = r.coeff(representatives[d][k]);
    for (const auto& [i, c] : r) {
      bool found = false;
      for (int rep : representatives[d]) found = found || rep == i;
      if (!found) throw InvariantViolation("hopf_core", "projection left a decomposable pivot", d);
    }
    return v;
  }

  Element section(int d, int k) const { return Element::single(field, representatives.at(d).at(k)); }
  bool is_decomposable(int d, const Element& x) const { return decomposables.at(d).contains(x); }
};

/// With `words` describing a free algebra on its letters, the decomposables
/// are read off as the words of length at least two.
inline Indecomposables indecomposables_Q(const GradedAlgebra& a, const GradedCoalgebra* coalg = nullptr,
                                         const WordStructure* words = nullptr) {
  const Basis& b = a.basis();
  const Field& f = a.field();
  Indecomposables q;
  q.field = f;
  q.decomposables.assign(b.bound() + 1, SparseRowSpace<int>(f));
  q.representatives.resize(b.bound() + 1);
  if (words && words->concatenation) {
    for (int i = 1; i < b.size(); ++i)
      if (words->words[i].size() >= 2) q.decomposables[b.degree(i)].insert(Element::single(f, i));
  } else {
    for (int i = 1; i < b.size(); ++i)
      for (int j = 1; j < b.end(b.bound() - b.degree(i)); ++j) q.decomposables[b.degree(i) + b.degree(j)].insert(a.product(i, j));
  }
  std::vector<std::vector<std::string>> labels(b.bound() + 1);
  for (int d = 1; d <= b.bound(); ++d)
    for (int i = b.begin(d); i < b.end(d); ++i)
      if (!q.decomposables[d].is_pivot(i)) {
        q.representatives[d].push_back(i);
        labels[d].push_back(b.label(i));
      }
  q.space = GradedSpace(f, b.bound(), std::move(labels));
  if (f.is_prime_field() && coalg && coalg->is_cocommutative()) {
    VModule hv = verschiebung_module(*coalg);
    VModule qv(q.space);
    for (int n = 1; qv.has_structure(n); ++n) {
      const int t = n * static_cast<int>(hv.prime());
      Matrix blk(f, q.dim(n), q.dim(t));
      const Matrix& hm = hv.structure(n);
      for (int k = 0; k < q.dim(t); ++k) {
        const int src = q.representatives[t][k];
        Element image(f);
        for (std::size_t row = 0; row < hm.rows(); ++row) image.add(b.begin(n) + static_cast<int>(row), hm(row, b.local(src)));
        blk.set_column(k, q.project(n, image));
      }
      qv.set_structure(n, std::move(blk));
    }
    q.v_module = std::move(qv);
  }
  return q;
}

inline Indecomposables indecomposables_Q(const BialgebraData& h) {
  return indecomposables_Q(h.algebra(), &h.coalgebra(), h.words() ? &*h.words() : nullptr);
}

// ---------------------------------------------------------------- free product

namespace detail {

inline std::string strip_brackets(const std::string& s) {
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']' && s.find('|') == std::string::npos) return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace detail

/// H_1 * ... * H_r: alternating words in the positive parts, adjacent letters
/// of one factor merged by its product, coproduct extended multiplicatively.
inline BialgebraData free_product(const std::vector<BialgebraData>& factors) {
  if (factors.empty()) throw DomainError("hopf_core", "free product of no factors");
  const Field f = factors[0].field();
  const int bound = factors[0].bound();
  for (const auto& h : factors)
    if (!(h.field() == f) || h.bound() != bound) throw StructuralError("hopf_core", "free product factors differ in field or bound");

  std::vector<int> factor_of, index_of;
  std::vector<std::vector<int>> letter_of(factors.size());
  WordAlgebraSpec spec;
  spec.field = f;
  spec.bound = bound;
  std::set<std::string> used;
  bool cocomm = true;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Basis& b = factors[k].basis();
    cocomm = cocomm && factors[k].is_cocommutative();
    letter_of[k].assign(b.size(), -1);
    for (int i = 1; i < b.size(); ++i) {
      std::string l = detail::unique_label(detail::strip_brackets(b.label(i)), used);
      used.insert(l);
      letter_of[k][i] = static_cast<int>(spec.letter_labels.size());
      spec.letter_labels.push_back(l);
      spec.letter_degrees.push_back(b.degree(i));
      factor_of.push_back(static_cast<int>(k));
      index_of.push_back(i);
    }
  }
  spec.may_follow = [&](int a, int c) { return factor_of[a] != factor_of[c]; };
  spec.merge = [&](int a, int c) {
    const auto& h = factors[factor_of[a]];
    LinComb<int> r(f);
    for (const auto& [i, s] : h.algebra().product(index_of[a], index_of[c])) r.add(letter_of[factor_of[a]][i], s);
    return r;
  };
  for (std::size_t l = 0; l < spec.letter_labels.size(); ++l) {
    const auto& h = factors[factor_of[l]];
    WordTensor t(f);
    auto as_word = [&](int i) { return i == 0 ? Word{} : Word{letter_of[factor_of[l]][i]}; };
    for (const auto& [k, s] : h.coalgebra().coproduct(index_of[l])) t.add({as_word(k.first), as_word(k.second)}, s);
    spec.letter_coproducts.push_back(std::move(t));
  }
  spec.cocommutative = cocomm;
  BialgebraData r = build_word_bialgebra(spec);
  return r;
}

// ---------------------------------------------------------------- duality

namespace detail {

inline std::string toggle_star(const std::string& l) {
  if (l.size() > 1 && l.back() == '*') return l.substr(0, l.size() - 1);
  return l + "*";
}

}  // namespace detail

inline Basis dual_basis(const Basis& b) {
  auto labels = b.labels_by_degree(false);
  for (auto& deg : labels)
    for (auto& l : deg) l = detail::toggle_star(l);
  return Basis(b.bound(), std::move(labels));
}

/// The dual coalgebra: Δ(e_k*) = Σ (coefficient of e_k in e_i e_j) e_i*⊗e_j*.
inline GradedCoalgebra dualize_algebra(const GradedAlgebra& a) {
  const Basis& b = a.basis();
  const Field& f = a.field();
  std::vector<Tensor2> delta(b.size(), Tensor2(f));
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.end(b.bound() - b.degree(i)); ++j)
      for (const auto& [k, c] : a.product(i, j)) delta[k].add({i, j}, c);
  return GradedCoalgebra(f, dual_basis(b), std::move(delta), a.is_commutative());
}

/// The dual algebra: e_i*·e_j* = Σ_k (coefficient of e_i⊗e_j in Δ e_k) e_k*.
inline GradedAlgebra dualize_coalgebra(const GradedCoalgebra& c) {
  const Basis& b = c.basis();
  const Field& f = c.field();
  std::map<std::pair<int, int>, Element> prod;
  for (int k = 0; k < b.size(); ++k)
    for (const auto& [key, s] : c.coproduct(k)) prod.try_emplace(key, Element(f)).first->second.add(k, s);
  return GradedAlgebra::from_rule(
      f, dual_basis(b),
      [&](int i, int j) {
        auto it = prod.find({i, j});
        return it == prod.end() ? Element(f) : it->second;
      },
      c.is_cocommutative());
}

/// Degreewise dual with plain transposes; labels toggle a trailing "*".
/// Word coordinates carry over; the concatenation flag flips, since the dual
/// of a concatenation product is deconcatenation and vice versa.
inline BialgebraData dualize_hopf(const BialgebraData& h) {
  std::optional<WordStructure> ws = h.words();
  if (ws) ws->concatenation = !ws->concatenation;
  return BialgebraData(dualize_coalgebra(h.coalgebra()), dualize_algebra(h.algebra()), std::move(ws));
}

/// Structure constants and degrees agree; labels are ignored.
inline bool same_structure_constants(const BialgebraData& a, const BialgebraData& b) {
  if (!(a.field() == b.field()) || a.basis().size() != b.basis().size() || a.bound() != b.bound()) return false;
  for (int i = 0; i < a.basis().size(); ++i)
    if (a.basis().degree(i) != b.basis().degree(i)) return false;
  return a.algebra().table() == b.algebra().table() && a.coalgebra().table() == b.coalgebra().table();
}

// ---------------------------------------------------------------- morphisms

/// A degree-preserving linear map between bialgebras, given on basis elements.
struct BialgebraMorphism {
  BialgebraData source;
  BialgebraData target;
  std::vector<Element> images;

  Element apply(const Element& x) const { return apply_linear(images, x); }

  Tensor2 apply(const Tensor2& t) const {
    Tensor2 r(target.field());
    for (const auto& [k, c] : t)
      for (const auto& [i, a] : images.at(k.first))
        for (const auto& [j, b] : images.at(k.second)) r.add({i, j}, c * a * b);
    return r;
  }
};

namespace detail {

inline void require_degree_preserving(const BialgebraMorphism& m) {
  const Basis& s = m.source.basis();
  const Basis& t = m.target.basis();
  if (static_cast<int>(m.images.size()) != s.size()) throw StructuralError("hopf_core", "morphism needs one image per basis element");
  for (int i = 0; i < s.size(); ++i)
    for (const auto& [k, c] : m.images[i])
      if (k < 0 || k >= t.size() || t.degree(k) != s.degree(i))
        throw StructuralError("hopf_core", "morphism does not preserve degree", s.degree(i));
}

}  // namespace detail

/// Basis indices i with Δ(f e_i) ≠ (f⊗f)Δ(e_i).
inline std::vector<int> coalgebra_morphism_failures(const BialgebraMorphism& m) {
  detail::require_degree_preserving(m);
  std::vector<int> bad;
  for (int i = 0; i < m.source.basis().size(); ++i)
    if (!(m.target.coproduct(m.images[i]) == m.apply(m.source.coalgebra().coproduct(i)))) bad.push_back(i);
  return bad;
}

/// Pairs (i, j) with f(e_i e_j) ≠ f(e_i) f(e_j), over all pairs within the bound.
inline std::vector<std::pair<int, int>> algebra_morphism_failures(const BialgebraMorphism& m) {
  detail::require_degree_preserving(m);
  const Basis& b = m.source.basis();
  std::vector<std::pair<int, int>> bad;
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.end(b.bound() - b.degree(i)); ++j)
      if (!(m.apply(m.source.algebra().product(i, j)) == m.target.multiply(m.images[i], m.images[j]))) bad.push_back({i, j});
  return bad;
}

inline bool is_coalgebra_morphism(const BialgebraMorphism& m) { return coalgebra_morphism_failures(m).empty(); }
inline bool is_algebra_morphism(const BialgebraMorphism& m) { return algebra_morphism_failures(m).empty(); }
inline bool is_hopf_morphism(const BialgebraMorphism& m) { return is_coalgebra_morphism(m) && is_algebra_morphism(m); }

/// The matrix of f in degree d, columns indexed by source basis.
inline Matrix morphism_block(const BialgebraMorphism& m, int d) {
  const Basis& s = m.source.basis();
  const Basis& t = m.target.basis();
  Matrix blk(m.source.field(), t.dim(d), s.dim(d));
  for (int i = s.begin(d); i < s.end(d); ++i)
    for (const auto& [k, c] : m.images.at(i)) blk(t.local(k), s.local(i)) = c;
  return blk;
}

inline bool is_degreewise_bijective(const BialgebraMorphism& m) {
  const Basis& s = m.source.basis();
  const Basis& t = m.target.basis();
  if (s.bound() != t.bound()) return false;
  for (int d = 0; d <= s.bound(); ++d) {
    if (s.dim(d) != t.dim(d)) return false;
    if (morphism_block(m, d).rank() != static_cast<std::size_t>(s.dim(d))) return false;
  }
  return true;
}

}  // namespace hopf
