#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

using Word = std::vector<int>;
using WordComb = LinComb<Word>;
using WordTensor = LinComb<std::pair<Word, Word>>;

/// Recipe for an algebra whose basis is a set of words in letters: free
/// algebras (every word allowed, concatenation) and free products (adjacent
/// letters from one factor are merged by that factor's product).
struct WordAlgebraSpec {
  Field field = Field::prime(2);
  int bound = 0;
  std::vector<std::string> letter_labels;
  std::vector<int> letter_degrees;
  /// May letter b directly follow letter a? Unset means always.
  std::function<bool(int, int)> may_follow;
  /// Product of adjacent letters a, b when b may not follow a, as a
  /// combination of letters.
  std::function<LinComb<int>(int, int)> merge;
  /// Full coproduct of each letter; empty for a plain algebra.
  std::vector<WordTensor> letter_coproducts;
  bool commutative = false;
  bool cocommutative = false;
};

inline std::string word_label(const std::vector<std::string>& letters, const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + letters.at(w[i]);
  return s + "]";
}

/// Σ c (u⊗v) from a brace list, for writing letter coproducts.
inline WordTensor word_tensor(const Field& f, std::initializer_list<std::tuple<Word, Word, long long>> terms) {
  WordTensor t(f);
  for (const auto& [u, v, c] : terms) t.add({u, v}, Scalar::from_int(f, c));
  return t;
}

/// Coproduct making a letter primitive.
inline WordTensor primitive_word_tensor(const Field& f, int letter) { return word_tensor(f, {{{letter}, {}, 1}, {{}, {letter}, 1}}); }

namespace detail {

inline int word_degree(const std::vector<int>& degrees, const Word& w) {
  int d = 0;
  for (int l : w) d += degrees.at(l);
  return d;
}

inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class WordBuilder {
 public:
  explicit WordBuilder(const WordAlgebraSpec& s) : spec_(s) {}

  bool follows(int a, int b) const { return !spec_.may_follow || spec_.may_follow(a, b); }

  std::vector<std::vector<Word>> enumerate() const {
    std::vector<std::vector<Word>> by_degree(spec_.bound + 1);
    by_degree[0].push_back({});
    for (int d = 1; d <= spec_.bound; ++d) {
      for (int l = 0; l < static_cast<int>(spec_.letter_degrees.size()); ++l) {
        const int dl = spec_.letter_degrees[l];
        if (dl <= 0) throw ValidationError("hopf_core", "letter " + spec_.letter_labels[l] + " must have positive degree");
        if (dl > d) continue;
        for (const auto& w : by_degree[d - dl]) {
          if (!w.empty() && !follows(w.back(), l)) continue;
          Word n = w;
          n.push_back(l);
          by_degree[d].push_back(std::move(n));
        }
      }
      std::sort(by_degree[d].begin(), by_degree[d].end(), word_less);
    }
    return by_degree;
  }

  WordComb product(const Word& u, const Word& v) const {
    WordComb r(spec_.field);
    if (u.empty() || v.empty() || follows(u.back(), v.front())) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, Scalar::one(spec_.field));
      return r;
    }
    if (!spec_.merge) throw StructuralError("hopf_core", "non-adjacent letters without a merge rule");
    LinComb<int> m = spec_.merge(u.back(), v.front());
    for (const auto& [l, c] : m) {
      Word w(u.begin(), u.end() - 1);
      if (!w.empty() && !follows(w.back(), l)) throw InvariantViolation("hopf_core", "merge produced an inadmissible word");
      w.push_back(l);
      if (v.size() > 1 && !follows(l, v[1])) throw InvariantViolation("hopf_core", "merge produced an inadmissible word");
      w.insert(w.end(), v.begin() + 1, v.end());
      r.add(w, c);
    }
    return r;
  }

 private:
  const WordAlgebraSpec& spec_;
};

inline void validate_letter_coproduct(const WordAlgebraSpec& s, int l) {
  const Field& f = s.field;
  const WordTensor& t = s.letter_coproducts[l];
  const int d = s.letter_degrees[l];
  const std::string& name = s.letter_labels[l];
  if (!(t.coeff({Word{l}, Word{}}) == Scalar::one(f)) || !(t.coeff({Word{}, Word{l}}) == Scalar::one(f)))
    throw ValidationError("hopf_core", "coproduct of " + name + " is not counital", d);
  for (const auto& [k, c] : t) {
    const int total = word_degree(s.letter_degrees, k.first) + word_degree(s.letter_degrees, k.second);
    if (total != d) throw ValidationError("hopf_core", "coproduct of " + name + " is not homogeneous", d);
    const bool edge = (k.first.empty() && k.second == Word{l}) || (k.second.empty() && k.first == Word{l});
    if (!edge && (k.first.empty() || k.second.empty()))
      throw ValidationError("hopf_core", "coproduct of " + name + " is not counital", d);
  }
}

}  // namespace detail

/// Materialises the word algebra (and bialgebra, when letter coproducts are
/// given) up to the bound. Coproducts extend multiplicatively,
/// Δ(w·l) = Δ(w)Δ(l).
inline BialgebraData build_word_bialgebra(const WordAlgebraSpec& spec) {
  const Field& f = spec.field;
  if (spec.letter_labels.size() != spec.letter_degrees.size())
    throw StructuralError("hopf_core", "letter labels and degrees differ in length");
  detail::WordBuilder builder(spec);
  auto by_degree = builder.enumerate();

  WordStructure ws;
  ws.letter_labels = spec.letter_labels;
  ws.letter_degrees = spec.letter_degrees;
  ws.concatenation = !spec.may_follow;
  std::vector<std::vector<std::string>> labels(spec.bound + 1);
  for (int d = 0; d <= spec.bound; ++d)
    for (const auto& w : by_degree[d]) {
      ws.index.emplace(w, static_cast<int>(ws.words.size()));
      ws.words.push_back(w);
      labels[d].push_back(word_label(spec.letter_labels, w));
    }
  Basis basis(spec.bound, std::move(labels));

  auto to_element = [&](const WordComb& c) {
    Element e(f);
    for (const auto& [w, s] : c) e.add(ws.index_of(w), s);
    return e;
  };
  GradedAlgebra alg = GradedAlgebra::from_rule(
      f, basis, [&](int i, int j) { return to_element(builder.product(ws.words[i], ws.words[j])); }, spec.commutative);

  std::vector<Tensor2> delta(basis.size(), Tensor2(f));
  delta[0].add({0, 0}, Scalar::one(f));
  if (!spec.letter_coproducts.empty()) {
    if (spec.letter_coproducts.size() != spec.letter_labels.size())
      throw StructuralError("hopf_core", "one coproduct per letter required");
    std::vector<Tensor2> letter_delta;
    for (int l = 0; l < static_cast<int>(spec.letter_labels.size()); ++l) {
      detail::validate_letter_coproduct(spec, l);
      Tensor2 t(f);
      if (spec.letter_degrees[l] <= spec.bound)
        for (const auto& [k, c] : spec.letter_coproducts[l]) t.add({ws.index_of(k.first), ws.index_of(k.second)}, c);
      letter_delta.push_back(std::move(t));
    }
    for (int i = 1; i < basis.size(); ++i) {
      const Word& w = ws.words[i];
      if (w.size() == 1) {
        delta[i] = letter_delta[w[0]];
        continue;
      }
      Word prefix(w.begin(), w.end() - 1);
      delta[i] = tensor_multiply(alg, delta[ws.index_of(prefix)], letter_delta[w.back()]);
    }
  } else {
    for (int i = 1; i < basis.size(); ++i) {
      delta[i].add({i, 0}, Scalar::one(f));
      delta[i].add({0, i}, Scalar::one(f));
    }
  }
  GradedCoalgebra coalg(f, basis, std::move(delta), spec.cocommutative);
  return BialgebraData(std::move(alg), std::move(coalg), std::move(ws));
}

/// Tensor algebra on named generators with a chosen coproduct for each.
struct FreePresentation {
  Field field = Field::prime(2);
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<WordTensor> coproducts;  // full Δ(g); primitive when left empty

  int add_generator(const std::string& name, int degree) {
    names.push_back(name);
    degrees.push_back(degree);
    coproducts.push_back(WordTensor(field));
    return static_cast<int>(names.size()) - 1;
  }
  int generator(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw ValidationError("hopf_core", "unknown generator " + name);
  }
};

/// T(g_1, ..., g_r) with the multiplicative extension of the generator
/// coproducts. The cocommutative flag is taken as given; check_axioms tests it.
inline BialgebraData build_bialgebra(const FreePresentation& pres, int bound, bool cocommutative = true) {
  WordAlgebraSpec spec;
  spec.field = pres.field;
  spec.bound = bound;
  spec.letter_labels = pres.names;
  spec.letter_degrees = pres.degrees;
  spec.cocommutative = cocommutative;
  for (std::size_t g = 0; g < pres.names.size(); ++g) {
    WordTensor t = pres.coproducts[g];
    if (t.is_zero()) t = primitive_word_tensor(pres.field, static_cast<int>(g));
    spec.letter_coproducts.push_back(std::move(t));
  }
  return build_word_bialgebra(spec);
}

}  // namespace hopf
