#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/words.hpp"

namespace hopf {

/// Algebra on generators subject to monomial relations g^e = 0 and
/// g_a g_b = 0. Commutative presentations use sorted exponent vectors with the
/// Koszul sign; odd-degree generators square to zero away from characteristic
/// 2. Noncommutative presentations use words avoiding the relation patterns.
struct MonomialAlgebraPresentation {
  struct Power {
    int generator;
    int exponent;
  };
  struct Pair {
    int first;
    int second;
  };

  Field field = Field::prime(2);
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<Power> powers;
  std::vector<Pair> pairs;
  bool commutative = true;

  int add_generator(const std::string& name, int degree) {
    if (degree <= 0) throw ValidationError("hopf_core", "generator " + name + " must have positive degree");
    names.push_back(name);
    degrees.push_back(degree);
    return static_cast<int>(names.size()) - 1;
  }
  int generator(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw ValidationError("hopf_core", "unknown generator " + name);
  }
  void add_power(int g, int e) {
    if (e < 1) throw ValidationError("hopf_core", "relation exponent must be positive");
    powers.push_back({g, e});
  }
  void add_pair(int a, int b) { pairs.push_back({a, b}); }
};

namespace detail {

inline std::string monomial_label(const std::vector<std::string>& names, const std::vector<int>& exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

// Run-length label for a word: [y, y, z] -> "y^2*z".
inline std::string word_monomial_label(const std::vector<std::string>& names, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += names[w[i]];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

class CommutativeMonomials {
 public:
  CommutativeMonomials(const MonomialAlgebraPresentation& p, int bound) : p_(p), bound_(bound) {
    const int r = static_cast<int>(p.names.size());
    cap_.assign(r, bound + 1);
    for (int g = 0; g < r; ++g)
      if (p.field.characteristic() != 2 && p.degrees[g] % 2 == 1) cap_[g] = 1;
    for (const auto& pw : p.powers) cap_[pw.generator] = std::min(cap_[pw.generator], pw.exponent - 1);
    for (const auto& pr : p.pairs)
      if (pr.first == pr.second) cap_[pr.first] = std::min(cap_[pr.first], 1);
  }

  bool admissible(const std::vector<int>& e) const {
    for (std::size_t g = 0; g < e.size(); ++g)
      if (e[g] > cap_[g]) return false;
    for (const auto& pr : p_.pairs)
      if (pr.first != pr.second && e[pr.first] > 0 && e[pr.second] > 0) return false;
    return true;
  }

  int degree(const std::vector<int>& e) const {
    int d = 0;
    for (std::size_t g = 0; g < e.size(); ++g) d += e[g] * p_.degrees[g];
    return d;
  }

  std::vector<std::vector<std::vector<int>>> enumerate() const {
    std::vector<std::vector<std::vector<int>>> by_degree(bound_ + 1);
    std::vector<int> e(p_.names.size(), 0);
    walk(e, 0, 0, by_degree);
    for (auto& v : by_degree) std::sort(v.begin(), v.end(), std::greater<>());
    return by_degree;
  }

  // Sign of e·f: every generator of f moves left past the later generators of e.
  long long sign_exponent(const std::vector<int>& e, const std::vector<int>& f) const {
    long long s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) s += static_cast<long long>(e[i]) * f[j] * p_.degrees[i] * p_.degrees[j];
    return s;
  }

 private:
  void walk(std::vector<int>& e, std::size_t g, int deg, std::vector<std::vector<std::vector<int>>>& out) const {
    if (g == e.size()) {
      if (admissible(e)) out[deg].push_back(e);
      return;
    }
    for (int k = 0; deg + k * p_.degrees[g] <= bound_ && k <= cap_[g]; ++k) {
      e[g] = k;
      walk(e, g + 1, deg + k * p_.degrees[g], out);
    }
    e[g] = 0;
  }

  const MonomialAlgebraPresentation& p_;
  int bound_;
  std::vector<int> cap_;
};

inline bool word_avoids(const MonomialAlgebraPresentation& p, const Word& w) {
  for (const auto& pr : p.pairs)
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == pr.first && w[i + 1] == pr.second) return false;
  for (const auto& pw : p.powers) {
    int run = 0;
    for (int l : w) {
      run = (l == pw.generator) ? run + 1 : 0;
      if (run >= pw.exponent) return false;
    }
  }
  return true;
}

}  // namespace detail

/// The algebra of a monomial presentation up to the bound.
inline GradedAlgebra build_algebra(const MonomialAlgebraPresentation& p, int bound) {
  const Field& f = p.field;
  if (p.commutative) {
    detail::CommutativeMonomials mono(p, bound);
    auto by_degree = mono.enumerate();
    std::vector<std::vector<int>> exps;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<std::string>> labels(bound + 1);
    for (int d = 0; d <= bound; ++d)
      for (const auto& e : by_degree[d]) {
        index.emplace(e, static_cast<int>(exps.size()));
        exps.push_back(e);
        labels[d].push_back(detail::monomial_label(p.names, e));
      }
    Basis basis(bound, std::move(labels));
    return GradedAlgebra::from_rule(
        f, basis,
        [&](int i, int j) {
          Element r(f);
          std::vector<int> s(exps[i].size());
          for (std::size_t g = 0; g < s.size(); ++g) s[g] = exps[i][g] + exps[j][g];
          if (!mono.admissible(s)) return r;
          r.add(index.at(s), sign_scalar(f, mono.sign_exponent(exps[i], exps[j])));
          return r;
        },
        true);
  }

  WordAlgebraSpec spec;
  spec.field = f;
  spec.bound = bound;
  spec.letter_labels = p.names;
  spec.letter_degrees = p.degrees;
  detail::WordBuilder builder(spec);
  auto all = builder.enumerate();
  std::vector<Word> words;
  std::map<Word, int> index;
  std::vector<std::vector<std::string>> labels(bound + 1);
  for (int d = 0; d <= bound; ++d)
    for (const auto& w : all[d]) {
      if (!detail::word_avoids(p, w)) continue;
      index.emplace(w, static_cast<int>(words.size()));
      words.push_back(w);
      labels[d].push_back(detail::word_monomial_label(p.names, w));
    }
  Basis basis(bound, std::move(labels));
  return GradedAlgebra::from_rule(
      f, basis,
      [&](int i, int j) {
        Element r(f);
        Word w = words[i];
        w.insert(w.end(), words[j].begin(), words[j].end());
        auto it = index.find(w);
        if (it != index.end()) r.add(it->second, Scalar::one(f));
        return r;
      },
      false);
}

}  // namespace hopf
