#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/graded.hpp"
#include "hopf/matrix.hpp"

namespace hopf {

enum class FVKind { F, V };

/// Chain length marker for N(n,∞) / M(n,∞).
inline constexpr int kInfinite = -1;

namespace detail {

inline std::uint32_t require_char_p(const Field& f) {
  if (f.is_rational()) throw DomainError("fv_mod", "F/V-modules need a field of positive characteristic");
  return f.characteristic();
}

// Lower degree n carries structure (F out of n, V into n) unless p is odd and
// n is odd.
inline bool structured_degree(int n, std::uint32_t p) { return n > 0 && (p == 2 || n % 2 == 0); }

inline std::string unique_label(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int k = 2;; ++k) {
    std::string s = base + "_" + std::to_string(k);
    if (!taken.count(s)) return s;
  }
}

}  // namespace detail

/// A reduced graded space with a Frobenius (M_n → M_{pn}) or Verschiebung
/// (M_{pn} → M_n) structure map, truncated at N. Structure is addressed by the
/// lower degree n in both cases.
template <FVKind K>
class FVModule {
 public:
  static constexpr FVKind kind = K;

  explicit FVModule(const GradedSpace& space) : space_(space) {
    p_ = detail::require_char_p(space.field());
    if (!space.is_reduced()) throw DomainError("fv_mod", "F/V-module must be reduced", 0);
    map_ = GradedMap::zero(space, space, K == FVKind::F ? 1 : -1);
  }

  static FVModule zero(const Field& f, int bound) { return FVModule(GradedSpace(f, bound, {})); }

  const GradedSpace& space() const noexcept { return space_; }
  const Field& field() const noexcept { return space_.field(); }
  std::uint32_t prime() const noexcept { return p_; }
  int bound() const noexcept { return space_.bound(); }
  int dim(int d) const { return space_.dim(d); }
  const GradedMap& structure_map() const noexcept { return map_; }

  /// True when both n and pn lie within the bound, so the structure out of
  /// (or into) degree n is known.
  bool has_structure(int n) const { return n > 0 && static_cast<long long>(n) * p_ <= bound(); }

  /// F: dim(pn) × dim(n). V: dim(n) × dim(pn).
  const Matrix& structure(int n) const {
    if (!has_structure(n)) throw TruncationError("fv_mod", "structure map leaves the truncation range", n);
    return map_.block(K == FVKind::F ? n : n * static_cast<int>(p_));
  }

  void set_structure(int n, Matrix m) {
    if (!has_structure(n)) throw TruncationError("fv_mod", "structure map leaves the truncation range", n);
    if (!detail::structured_degree(n, p_) && !m.is_zero())
      throw DomainError("fv_mod", "odd-degree structure map must vanish for odd p", n);
    map_.set_block(K == FVKind::F ? n : n * static_cast<int>(p_), std::move(m));
  }

  /// The structure map as an F-shaped matrix dim(pn) × dim(n): F itself, or
  /// the transpose of V. Classification of V-modules runs through this.
  Matrix forward(int n) const { return K == FVKind::F ? structure(n) : structure(n).transpose(); }

  friend bool operator==(const FVModule& a, const FVModule& b) { return a.space_ == b.space_ && a.map_ == b.map_; }

 private:
  GradedSpace space_;
  GradedMap map_;
  std::uint32_t p_ = 2;
};

using FModule = FVModule<FVKind::F>;
using VModule = FVModule<FVKind::V>;

/// An indecomposable N(n,j) or M(n,j). When at_least is set, j is the longest
/// chain visible below the bound and the true length may be larger.
struct Summand {
  int n = 1;
  int j = 0;
  bool at_least = false;

  friend auto operator<=>(const Summand&, const Summand&) = default;

  std::string to_string() const {
    return "(" + std::to_string(n) + "," + (at_least ? "≥" : "") + std::to_string(j) + ")";
  }
};

enum class Tri { No, Yes, Unknown };

inline std::string to_string(Tri t) { return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown"; }

/// Multiset of summands, with the bound at which it was observed.
class Decomposition {
 public:
  Decomposition(std::uint32_t p, int bound) : p_(p), bound_(bound) {}

  void add(const Summand& s, int mult = 1) {
    if (mult <= 0) return;
    counts_[s] += mult;
  }

  std::uint32_t prime() const noexcept { return p_; }
  int bound() const noexcept { return bound_; }
  const std::map<Summand, int>& counts() const noexcept { return counts_; }
  int multiplicity(const Summand& s) const {
    auto it = counts_.find(s);
    return it == counts_.end() ? 0 : it->second;
  }
  int size() const {
    int t = 0;
    for (const auto& [s, m] : counts_) t += m;
    return t;
  }

  /// Sum of the truncated series of the summands.
  TruncatedSeries series() const {
    TruncatedSeries s(bound_);
    for (const auto& [sm, m] : counts_)
      for (long long d = sm.n, i = 0; d <= bound_ && (sm.at_least || i <= sm.j); d *= p_, ++i) s.at(static_cast<int>(d)) += m;
    return s;
  }

  /// "{(1,0),2*(6,0),(2,≥3)}", sorted by (n, j).
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [s, m] : counts_) {
      if (!first) out += ",";
      first = false;
      if (m != 1) out += std::to_string(m) + "*";
      out += s.to_string();
    }
    return out + "}";
  }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.p_ == b.p_ && a.bound_ == b.bound_ && a.counts_ == b.counts_;
  }

 private:
  std::uint32_t p_;
  int bound_;
  std::map<Summand, int> counts_;
};

/// N(n,j) (F) or M(n,j) (V) with basis x0, x1, ... in degrees n p^i, cut at N.
/// j = kInfinite gives the chain up to the bound.
template <FVKind K>
FVModule<K> standard_summand(int n, int j, std::uint32_t p, int bound) {
  const Field f = Field::prime(p);
  if (n < 1) throw DomainError("fv_mod", "summand bottom degree must be positive");
  if (j < 0 && j != kInfinite) throw DomainError("fv_mod", "negative chain length");
  if (n > bound) throw DomainError("fv_mod", "summand bottom degree above the truncation bound", n);
  if (p != 2 && n % 2 == 1 && j != 0)
    throw DomainError("fv_mod", "odd-degree summands are one-dimensional for odd p", n);
  std::vector<std::vector<std::string>> labels(bound + 1);
  std::vector<int> degs;
  for (long long d = n, i = 0; d <= bound && (j == kInfinite || i <= j); d *= p, ++i) {
    labels[d].push_back("x" + std::to_string(i));
    degs.push_back(static_cast<int>(d));
  }
  FVModule<K> m(GradedSpace(f, bound, std::move(labels)));
  for (std::size_t i = 0; i + 1 < degs.size(); ++i) {
    Matrix one(f, 1, 1);
    one(0, 0) = Scalar::one(f);
    m.set_structure(degs[i], one);
  }
  return m;
}

inline FModule standard_f_summand(int n, int j, std::uint32_t p, int bound) { return standard_summand<FVKind::F>(n, j, p, bound); }
inline VModule standard_v_summand(int n, int j, std::uint32_t p, int bound) { return standard_summand<FVKind::V>(n, j, p, bound); }

/// M ⊕ M'. Clashing labels from the second summand get a numeric suffix.
template <FVKind K>
FVModule<K> direct_sum(const FVModule<K>& a, const FVModule<K>& b) {
  if (!(a.field() == b.field()) || a.bound() != b.bound())
    throw StructuralError("fv_mod", "direct sum of modules with different fields or bounds");
  const int bound = a.bound();
  std::vector<std::vector<std::string>> labels(bound + 1);
  for (int d = 0; d <= bound; ++d) {
    std::set<std::string> taken(a.space().labels(d).begin(), a.space().labels(d).end());
    labels[d] = a.space().labels(d);
    for (const auto& l : b.space().labels(d)) {
      auto u = detail::unique_label(l, taken);
      taken.insert(u);
      labels[d].push_back(u);
    }
  }
  FVModule<K> s(GradedSpace(a.field(), bound, std::move(labels)));
  for (int n = 1; s.has_structure(n); ++n) {
    const Matrix& ma = a.structure(n);
    const Matrix& mb = b.structure(n);
    Matrix m(a.field(), ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (std::size_t r = 0; r < ma.rows(); ++r)
      for (std::size_t c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
    for (std::size_t r = 0; r < mb.rows(); ++r)
      for (std::size_t c = 0; c < mb.cols(); ++c) m(ma.rows() + r, ma.cols() + c) = mb(r, c);
    s.set_structure(n, std::move(m));
  }
  return s;
}

/// Direct sum of standard summands realising a decomposition. at_least
/// summands are rebuilt as chains running to the bound.
template <FVKind K>
FVModule<K> rebuild(const Decomposition& dec) {
  FVModule<K> m = FVModule<K>::zero(Field::prime(dec.prime()), dec.bound());
  for (const auto& [s, mult] : dec.counts())
    for (int i = 0; i < mult; ++i)
      m = direct_sum(m, standard_summand<K>(s.n, s.at_least ? kInfinite : s.j, dec.prime(), dec.bound()));
  return m;
}

/// Φ: regrades n ↦ pn (for odd p only even degrees survive). The bound is kept,
/// so every nonzero degree d that survives needs pd ≤ N.
template <FVKind K>
FVModule<K> phi(const FVModule<K>& m) {
  const std::uint32_t p = m.prime();
  const int bound = m.bound();
  std::vector<std::vector<std::string>> labels(bound + 1);
  for (int d = 1; d <= bound; ++d) {
    if (m.dim(d) == 0 || !detail::structured_degree(d, p)) continue;
    if (static_cast<long long>(d) * p > bound) throw TruncationError("fv_mod", "Φ moves this degree above the bound", d);
    labels[d * p] = m.space().labels(d);
  }
  FVModule<K> r(GradedSpace(m.field(), bound, std::move(labels)));
  for (int n = 1; r.has_structure(n); ++n) {
    if (n % static_cast<int>(p) != 0 || r.dim(n) == 0) continue;
    const int src = n / static_cast<int>(p);
    if (!m.has_structure(src)) continue;
    if (r.dim(n * p) == 0) continue;
    r.set_structure(n, m.structure(src));
  }
  return r;
}

namespace detail {

inline std::string dual_label(const std::string& l) {
  const std::string star = "*";
  if (l.size() > 1 && l.compare(l.size() - 1, 1, star) == 0) return l.substr(0, l.size() - 1);
  return l + star;
}

}  // namespace detail

/// Degreewise dual: an F-module becomes a V-module with V = Fᵀ and vice versa.
/// Labels gain a trailing "*" (or lose one).
template <FVKind K>
auto dualize(const FVModule<K>& m) {
  constexpr FVKind D = K == FVKind::F ? FVKind::V : FVKind::F;
  std::vector<std::vector<std::string>> labels(m.bound() + 1);
  for (int d = 0; d <= m.bound(); ++d)
    for (const auto& l : m.space().labels(d)) labels[d].push_back(detail::dual_label(l));
  FVModule<D> r(GradedSpace(m.field(), m.bound(), std::move(labels)));
  for (int n = 1; r.has_structure(n); ++n) r.set_structure(n, m.structure(n).transpose());
  return r;
}

/// M ⊗ M' with F(a⊗b) = F(a)⊗F(b) (resp. V).
template <FVKind K>
FVModule<K> tensor_fv(const FVModule<K>& a, const FVModule<K>& b) {
  if (!(a.field() == b.field()) || a.bound() != b.bound())
    throw StructuralError("fv_mod", "tensor of modules with different fields or bounds");
  GradedMap t = tensor_of_maps(a.structure_map(), b.structure_map());
  FVModule<K> r(t.source());
  const int p = static_cast<int>(a.prime());
  for (int n = 1; r.has_structure(n); ++n) r.set_structure(n, t.block(K == FVKind::F ? n : n * p));
  return r;
}

namespace detail {

struct Lane {
  std::vector<int> degrees;  // n p^0, n p^1, ... all ≤ N
};

inline std::vector<Lane> lanes(std::uint32_t p, int bound) {
  std::vector<Lane> out;
  for (int s = 1; s <= bound; ++s) {
    bool seed = p == 2 ? (s % 2 == 1) : (s % 2 == 0 && (s / 2) % static_cast<int>(p) != 0);
    if (!seed) continue;
    Lane l;
    for (long long d = s; d <= bound; d *= p) l.degrees.push_back(static_cast<int>(d));
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace detail

/// Decomposition into N(n,j) / M(n,j). Each lane is a graded k[t]-module;
/// with r(a,b) the rank of the composite from lane index a to b, the number
/// of chains occupying exactly [a,b] is
///   r(a,b) - r(a,b+1) - r(a-1,b) + r(a-1,b+1),
/// and chains reaching the last index L are reported as at_least, counted by
/// r(a,L) - r(a-1,L).
template <FVKind K>
Decomposition classify(const FVModule<K>& m) {
  const std::uint32_t p = m.prime();
  const int bound = m.bound();
  Decomposition dec(p, bound);
  if (p != 2)
    for (int d = 1; d <= bound; d += 2) dec.add(Summand{d, 0, false}, m.dim(d));

  for (const auto& lane : detail::lanes(p, bound)) {
    const auto& deg = lane.degrees;
    const int L = static_cast<int>(deg.size()) - 1;
    // rank[a][b] for a ≤ b
    std::vector<std::vector<long long>> rank(deg.size(), std::vector<long long>(deg.size(), 0));
    for (int a = 0; a <= L; ++a) {
      rank[a][a] = m.dim(deg[a]);
      if (rank[a][a] == 0) continue;
      Matrix comp = Matrix::identity(m.field(), m.dim(deg[a]));
      for (int b = a + 1; b <= L; ++b) {
        comp = m.forward(deg[b - 1]) * comp;
        rank[a][b] = static_cast<long long>(comp.rank());
        if (rank[a][b] == 0) break;
      }
    }
    auto r = [&](int a, int b) -> long long {
      if (a < 0 || b > L || a > b) return 0;
      return rank[a][b];
    };
    for (int a = 0; a <= L; ++a) {
      for (int b = a; b < L; ++b) {
        long long mult = r(a, b) - r(a, b + 1) - r(a - 1, b) + r(a - 1, b + 1);
        if (mult < 0) throw InvariantViolation("fv_mod", "negative chain multiplicity", deg[a]);
        dec.add(Summand{deg[a], b - a, false}, static_cast<int>(mult));
      }
      long long top = r(a, L) - r(a - 1, L);
      if (top < 0) throw InvariantViolation("fv_mod", "negative chain multiplicity", deg[a]);
      dec.add(Summand{deg[a], L - a, true}, static_cast<int>(top));
    }
  }
  return dec;
}

template <FVKind K>
bool iso_test_fv(const FVModule<K>& a, const FVModule<K>& b) {
  if (a.prime() != b.prime() || a.bound() != b.bound())
    throw StructuralError("fv_mod", "comparing modules with different characteristic or bound");
  return classify(a) == classify(b);
}

namespace detail {

// Projective/injective table for F-modules; the V table swaps the roles.
inline Tri f_projective(const Summand& s, std::uint32_t p) {
  if (p != 2 && s.n % 2 == 1) return Tri::Yes;  // N(2m+1,0)
  return s.at_least ? Tri::Unknown : Tri::No;   // only N(n,∞) among chains
}

inline Tri f_injective(const Summand& s, std::uint32_t p) {
  if (p == 2) return s.n % 2 == 1 ? Tri::Yes : Tri::No;
  if (s.n % 2 == 1) return Tri::Yes;
  return (s.n / 2) % static_cast<int>(p) != 0 ? Tri::Yes : Tri::No;
}

}  // namespace detail

/// Projectivity of an indecomposable in F-M(k) or V-M(k). Unknown when the
/// answer depends on whether an at_least chain is really infinite.
template <FVKind K>
Tri is_projective(const Summand& s, std::uint32_t p) {
  return K == FVKind::F ? detail::f_projective(s, p) : detail::f_injective(s, p);
}

template <FVKind K>
Tri is_injective(const Summand& s, std::uint32_t p) {
  return K == FVKind::F ? detail::f_injective(s, p) : detail::f_projective(s, p);
}

}  // namespace hopf
