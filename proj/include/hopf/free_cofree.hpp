#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/hopf_ops.hpp"
#include "hopf/words.hpp"

namespace hopf {

/// Order-preserving injections α: {0..l-1} → {0..n-1}, β: {0..m-1} → {0..n-1}
/// whose images cover {0..n-1}.
struct SurjectionPair {
  int n = 0;
  std::vector<int> alpha;
  std::vector<int> beta;

  int overlaps() const { return static_cast<int>(alpha.size() + beta.size()) - n; }
  friend bool operator==(const SurjectionPair&, const SurjectionPair&) = default;
};

namespace detail {

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace detail

/// The pairs with images covering exactly {0..n-1}.
inline std::vector<SurjectionPair> enumerate_surjection_pairs(int l, int m, int n) {
  if (l < 0 || m < 0) throw DomainError("free_cofree", "negative word length");
  std::vector<SurjectionPair> out;
  if (n < std::max(l, m) || n > l + m) return out;
  for (const auto& a : detail::subsets(n, l)) {
    std::vector<bool> covered(n, false);
    for (int i : a) covered[i] = true;
    for (const auto& b : detail::subsets(n, m)) {
      std::vector<bool> c = covered;
      for (int j : b) c[j] = true;
      bool all = true;
      for (bool x : c) all = all && x;
      if (all) out.push_back({n, a, b});
    }
  }
  return out;
}

/// All pairs for every n from l + m down to max(l, m).
inline std::vector<SurjectionPair> enumerate_surjection_pairs(int l, int m) {
  std::vector<SurjectionPair> out;
  for (int n = l + m; n >= std::max(l, m); --n) {
    auto part = enumerate_surjection_pairs(l, m, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// (prefix of length l) ⊗ (suffix of length m).
inline std::pair<Word, Word> deconcat_component(const Word& w, int l, int m) {
  if (l < 0 || m < 0 || static_cast<int>(w.size()) != l + m)
    throw DomainError("free_cofree", "word length does not split as l + m");
  return {Word(w.begin(), w.begin() + l), Word(w.begin() + l, w.end())};
}

namespace detail {

inline std::vector<std::string> letter_labels_of(const Basis& b) {
  std::vector<std::string> out;
  for (int i = 1; i < b.size(); ++i) out.push_back(strip_brackets(b.label(i)));
  return out;
}

inline std::vector<int> letter_degrees_of(const Basis& b) {
  std::vector<int> out;
  for (int i = 1; i < b.size(); ++i) out.push_back(b.degree(i));
  return out;
}

}  // namespace detail

/// J(C): the tensor algebra on C̄ with the coproduct extended
/// multiplicatively from Δ_C. Letter k is basis element k+1 of C.
inline BialgebraData build_J(const GradedCoalgebra& c, int bound) {
  if (!c.is_cocommutative()) throw DomainError("free_cofree", "J(C) needs a cocommutative coalgebra");
  if (bound > c.bound()) throw TruncationError("free_cofree", "coalgebra is known only to a lower degree", c.bound());
  const Basis& b = c.basis();
  WordAlgebraSpec spec;
  spec.field = c.field();
  spec.bound = bound;
  spec.letter_labels = detail::letter_labels_of(b);
  spec.letter_degrees = detail::letter_degrees_of(b);
  spec.cocommutative = true;
  auto as_word = [](int i) { return i == 0 ? Word{} : Word{i - 1}; };
  for (int i = 1; i < b.size(); ++i) {
    WordTensor t(c.field());
    for (const auto& [k, s] : c.coproduct(i)) t.add({as_word(k.first), as_word(k.second)}, s);
    spec.letter_coproducts.push_back(std::move(t));
  }
  return build_word_bialgebra(spec);
}

/// The (l, m) component of Δ on a word of J(C), computed directly as the sum
/// over surjection pairs: positions hit only by α go left, only by β go right,
/// and positions hit by both contribute the reduced coproduct of the letter.
inline WordTensor coproduct_component_via_pairs(const GradedCoalgebra& c, const Word& w, int l, int m) {
  const Field& f = c.field();
  const Basis& b = c.basis();
  WordTensor out(f);
  const int n = static_cast<int>(w.size());
  for (const auto& sp : enumerate_surjection_pairs(l, m, n)) {
    std::vector<int> in_a(n, 0), in_b(n, 0);
    for (int i : sp.alpha) in_a[i] = 1;
    for (int j : sp.beta) in_b[j] = 1;
    // Expand position by position: each partial term is (left word, right word,
    // coefficient, degree of the right part so far) for the Koszul sign.
    struct Partial {
      Word left, right;
      Scalar coeff;
      int right_degree;
    };
    std::vector<Partial> terms{{{}, {}, Scalar::one(f), 0}};
    for (int pos = 0; pos < n; ++pos) {
      const int letter = w[pos];
      const int e = letter + 1;
      std::vector<Partial> next;
      for (const auto& t : terms) {
        if (in_a[pos] && !in_b[pos]) {
          Partial u = t;
          u.coeff *= sign_scalar(f, static_cast<long long>(t.right_degree) * b.degree(e));
          u.left.push_back(letter);
          next.push_back(std::move(u));
        } else if (in_b[pos] && !in_a[pos]) {
          Partial u = t;
          u.right.push_back(letter);
          u.right_degree += b.degree(e);
          next.push_back(std::move(u));
        } else {
          for (const auto& [k, s] : c.coproduct(e)) {
            if (k.first == 0 || k.second == 0) continue;
            Partial u = t;
            u.coeff *= s * sign_scalar(f, static_cast<long long>(t.right_degree) * b.degree(k.first));
            u.left.push_back(k.first - 1);
            u.right.push_back(k.second - 1);
            u.right_degree += b.degree(k.second);
            next.push_back(std::move(u));
          }
        }
      }
      terms = std::move(next);
    }
    for (const auto& t : terms) out.add({t.left, t.right}, t.coeff);
  }
  return out;
}

/// J^∨(A): deconcatenation coalgebra on words in Ā with the quasi-shuffle
/// product. A term places v_j before u_i whenever β(j) < α(i), costing
/// (-1)^{|u_i||v_j|}; a shared slot holds the product u_i·v_j in A, with the
/// α-letter written first.
inline BialgebraData build_Jvee(const GradedAlgebra& a, int bound) {
  if (!a.is_commutative()) throw DomainError("free_cofree", "J^∨(A) needs a commutative algebra");
  if (bound > a.bound()) throw TruncationError("free_cofree", "algebra is known only to a lower degree", a.bound());
  const Field& f = a.field();
  const Basis& ab = a.basis();

  WordAlgebraSpec spec;
  spec.field = f;
  spec.bound = bound;
  spec.letter_labels = detail::letter_labels_of(ab);
  spec.letter_degrees = detail::letter_degrees_of(ab);
  detail::WordBuilder builder(spec);
  auto by_degree = builder.enumerate();

  WordStructure ws;
  ws.letter_labels = spec.letter_labels;
  ws.letter_degrees = spec.letter_degrees;
  ws.concatenation = false;
  std::vector<std::vector<std::string>> labels(bound + 1);
  for (int d = 0; d <= bound; ++d)
    for (const auto& w : by_degree[d]) {
      ws.index.emplace(w, static_cast<int>(ws.words.size()));
      ws.words.push_back(w);
      labels[d].push_back(word_label(spec.letter_labels, w));
    }
  Basis basis(bound, std::move(labels));
  auto letter_degree = [&](int l) { return spec.letter_degrees[l]; };

  std::map<std::pair<int, int>, std::vector<SurjectionPair>> pair_cache;
  auto quasi_shuffle = [&](int i, int j) {
    const Word& u = ws.words[i];
    const Word& v = ws.words[j];
    const int l = static_cast<int>(u.size()), m = static_cast<int>(v.size());
    auto it = pair_cache.find({l, m});
    if (it == pair_cache.end()) it = pair_cache.emplace(std::make_pair(l, m), enumerate_surjection_pairs(l, m)).first;
    Element out(f);
    for (const auto& sp : it->second) {
      long long sign = 0;
      for (int x = 0; x < l; ++x)
        for (int y = 0; y < m; ++y)
          if (sp.beta[y] < sp.alpha[x]) sign += static_cast<long long>(letter_degree(u[x])) * letter_degree(v[y]);
      // Slots: each holds a combination of letters.
      std::vector<LinComb<int>> slots(sp.n, LinComb<int>(f));
      std::vector<int> from_a(sp.n, -1), from_b(sp.n, -1);
      for (int x = 0; x < l; ++x) from_a[sp.alpha[x]] = x;
      for (int y = 0; y < m; ++y) from_b[sp.beta[y]] = y;
      bool dead = false;
      for (int s = 0; s < sp.n && !dead; ++s) {
        if (from_a[s] >= 0 && from_b[s] >= 0) {
          for (const auto& [k, c] : a.product(u[from_a[s]] + 1, v[from_b[s]] + 1)) slots[s].add(k - 1, c);
        } else if (from_a[s] >= 0) {
          slots[s].add(u[from_a[s]], Scalar::one(f));
        } else {
          slots[s].add(v[from_b[s]], Scalar::one(f));
        }
        dead = slots[s].is_zero();
      }
      if (dead) continue;
      // Expand the product of slot combinations into words.
      std::vector<std::pair<Word, Scalar>> partial{{{}, sign_scalar(f, sign)}};
      for (const auto& slot : slots) {
        std::vector<std::pair<Word, Scalar>> next;
        for (const auto& [w, c] : partial)
          for (const auto& [k, s] : slot) {
            Word n = w;
            n.push_back(k);
            next.emplace_back(std::move(n), c * s);
          }
        partial = std::move(next);
      }
      for (const auto& [w, c] : partial) out.add(ws.index_of(w), c);
    }
    return out;
  };
  GradedAlgebra alg = GradedAlgebra::from_rule(f, basis, quasi_shuffle, true);

  std::vector<Tensor2> delta(basis.size(), Tensor2(f));
  for (int i = 0; i < basis.size(); ++i) {
    const Word& w = ws.words[i];
    for (std::size_t k = 0; k <= w.size(); ++k) {
      auto [left, right] = deconcat_component(w, static_cast<int>(k), static_cast<int>(w.size() - k));
      delta[i].add({ws.index_of(left), ws.index_of(right)}, Scalar::one(f));
    }
  }
  GradedCoalgebra coalg(f, basis, std::move(delta), false);
  return BialgebraData(std::move(alg), std::move(coalg), std::move(ws));
}

}  // namespace hopf
