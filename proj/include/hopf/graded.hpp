#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/matrix.hpp"
#include "hopf/scalar.hpp"
#include "hopf/series.hpp"

namespace hopf {

/// Finite-type graded vector space known in degrees 0..N. Each basis vector is
/// addressed by (degree, ordinal) and carries a human-readable label.
class GradedSpace {
 public:
  GradedSpace() : field_(Field::prime(2)) {}
  GradedSpace(const Field& f, int bound, std::vector<std::vector<std::string>> labels)
      : field_(f), bound_(bound), labels_(std::move(labels)) {
    if (bound < 0) throw DomainError("core_linear", "negative truncation bound");
    labels_.resize(bound + 1);
    for (int d = 0; d <= bound; ++d) {
      std::set<std::string> seen(labels_[d].begin(), labels_[d].end());
      if (seen.size() != labels_[d].size()) throw ValidationError("core_linear", "duplicate basis label", d);
    }
  }

  /// Space with the given dimensions and labels prefix<degree>_<ordinal>.
  static GradedSpace from_dims(const Field& f, int bound, const std::vector<int>& dims, const std::string& prefix = "e") {
    std::vector<std::vector<std::string>> labels(bound + 1);
    for (int d = 0; d <= bound && d < static_cast<int>(dims.size()); ++d)
      for (int i = 0; i < dims[d]; ++i) labels[d].push_back(prefix + std::to_string(d) + "_" + std::to_string(i));
    return GradedSpace(f, bound, std::move(labels));
  }

  const Field& field() const noexcept { return field_; }
  int bound() const noexcept { return bound_; }

  int dim(int d) const {
    if (d < 0) return 0;
    if (d > bound_) throw TruncationError("core_linear", "degree above truncation bound", d);
    return static_cast<int>(labels_[d].size());
  }
  const std::vector<std::string>& labels(int d) const {
    if (d < 0 || d > bound_) throw TruncationError("core_linear", "degree above truncation bound", d);
    return labels_[d];
  }
  const std::vector<std::vector<std::string>>& all_labels() const noexcept { return labels_; }

  bool is_reduced() const { return bound_ < 0 || labels_[0].empty(); }
  int total_dim() const {
    int t = 0;
    for (const auto& l : labels_) t += static_cast<int>(l.size());
    return t;
  }

  TruncatedSeries series() const {
    TruncatedSeries s(bound_);
    for (int d = 0; d <= bound_; ++d) s.at(d) = dim(d);
    return s;
  }

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.field_ == b.field_ && a.bound_ == b.bound_ && a.labels_ == b.labels_;
  }

 private:
  Field field_;
  int bound_ = 0;
  std::vector<std::vector<std::string>> labels_;
};

/// Basis of (M ⊗ N)_k: ordered pairs (i, a, b) with a ∈ M_i, b ∈ N_{k-i},
/// sorted by i, then a, then b.
class TensorSpace {
 public:
  using Part = std::tuple<int, int, int>;

  TensorSpace(const GradedSpace& m, const GradedSpace& n) {
    if (!(m.field() == n.field()) || m.bound() != n.bound())
      throw StructuralError("core_linear", "tensor factors have different fields or bounds");
    const int bound = m.bound();
    parts_.resize(bound + 1);
    index_.resize(bound + 1);
    std::vector<std::vector<std::string>> labels(bound + 1);
    for (int k = 0; k <= bound; ++k)
      for (int i = 0; i <= k; ++i)
        for (int a = 0; a < m.dim(i); ++a)
          for (int b = 0; b < n.dim(k - i); ++b) {
            index_[k][{i, a, b}] = static_cast<int>(parts_[k].size());
            parts_[k].emplace_back(i, a, b);
            labels[k].push_back(m.labels(i)[a] + "⊗" + n.labels(k - i)[b]);
          }
    space_ = GradedSpace(m.field(), bound, std::move(labels));
  }

  const GradedSpace& space() const noexcept { return space_; }
  const std::vector<Part>& parts(int k) const { return parts_.at(k); }
  int index(int k, int i, int a, int b) const { return index_.at(k).at({i, a, b}); }

 private:
  GradedSpace space_;
  std::vector<std::vector<Part>> parts_;
  std::vector<std::map<Part, int>> index_;
};

/// Linear map of graded spaces sending degree d to d·p^e. e = 0 is an ordinary
/// degree-preserving map, e = 1 a Frobenius-type stretch, e = -1 a
/// Verschiebung-type contraction; composites give other exponents. Blocks exist
/// for every source degree whose image degree is integral and ≤ N; a block is
/// the matrix (target dim × source dim). Over F_p the Frobenius twist acts
/// trivially on scalars, so semilinear maps are plain matrices.
class GradedMap {
 public:
  GradedMap() = default;

  static GradedMap zero(const GradedSpace& source, const GradedSpace& target, int exponent = 0) {
    GradedMap f;
    f.init(source, target, exponent);
    return f;
  }

  static GradedMap identity(const GradedSpace& space) {
    GradedMap f = zero(space, space, 0);
    for (auto& [d, m] : f.blocks_) m = Matrix::identity(space.field(), space.dim(d));
    return f;
  }

  static GradedMap frobenius_stretch(const GradedSpace& s, const GradedSpace& t) { return zero(s, t, 1); }
  static GradedMap verschiebung_contract(const GradedSpace& s, const GradedSpace& t) { return zero(s, t, -1); }

  const GradedSpace& source() const noexcept { return source_; }
  const GradedSpace& target() const noexcept { return target_; }
  int exponent() const noexcept { return exponent_; }

  /// Degree of the image of degree d, or -1 if there is no block for d.
  int target_degree(int d) const {
    auto it = blocks_.find(d);
    return it == blocks_.end() ? -1 : image_degree(d);
  }

  bool has_block(int d) const { return blocks_.count(d) > 0; }
  const Matrix& block(int d) const {
    auto it = blocks_.find(d);
    if (it == blocks_.end()) throw TruncationError("core_linear", "map has no block for this degree", d);
    return it->second;
  }
  const std::map<int, Matrix>& blocks() const noexcept { return blocks_; }

  void set_block(int d, Matrix m) {
    auto it = blocks_.find(d);
    if (it == blocks_.end()) throw TruncationError("core_linear", "map has no block for this degree", d);
    if (m.rows() != it->second.rows() || m.cols() != it->second.cols())
      throw StructuralError("core_linear", "block shape does not match source/target dimensions", d);
    it->second = std::move(m);
  }
  Matrix& mutable_block(int d) {
    auto it = blocks_.find(d);
    if (it == blocks_.end()) throw TruncationError("core_linear", "map has no block for this degree", d);
    return it->second;
  }

  /// (*this) ∘ inner. Degrees whose intermediate image lies above N get no block.
  GradedMap after(const GradedMap& inner) const {
    if (!(inner.target_ == source_)) throw StructuralError("core_linear", "composition of maps with mismatched spaces");
    GradedMap r;
    r.source_ = inner.source_;
    r.target_ = target_;
    r.exponent_ = inner.exponent_ + exponent_;
    r.p_ = p_ ? p_ : inner.p_;
    for (const auto& [d, m] : inner.blocks_) {
      int mid = inner.image_degree(d);
      auto it = blocks_.find(mid);
      if (it == blocks_.end()) continue;
      r.blocks_.emplace(d, it->second * m);
    }
    return r;
  }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.exponent_ == b.exponent_ && a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
  }

 private:
  void init(const GradedSpace& source, const GradedSpace& target, int exponent) {
    if (!(source.field() == target.field()) || source.bound() != target.bound())
      throw StructuralError("core_linear", "map between spaces with different fields or bounds");
    if (exponent != 0 && source.field().is_rational())
      throw DomainError("core_linear", "degree-scaling maps need a field of positive characteristic");
    source_ = source;
    target_ = target;
    exponent_ = exponent;
    p_ = source.field().characteristic();
    for (int d = 0; d <= source.bound(); ++d) {
      int t = image_degree(d);
      if (t < 0 || t > target.bound()) continue;
      blocks_.emplace(d, Matrix(source.field(), target.dim(t), source.dim(d)));
    }
  }

  int image_degree(int d) const {
    long long t = d;
    if (exponent_ >= 0) {
      for (int i = 0; i < exponent_; ++i) t *= p_;
    } else {
      for (int i = 0; i < -exponent_; ++i) {
        if (t % p_ != 0) return -1;
        t /= p_;
      }
    }
    return t > (1 << 28) ? -1 : static_cast<int>(t);
  }

  GradedSpace source_;
  GradedSpace target_;
  int exponent_ = 0;
  std::uint32_t p_ = 0;
  std::map<int, Matrix> blocks_;
};

/// f ⊗ g on the truncated tensor product, (f⊗g)(a⊗b) = f(a)⊗g(b). Both maps
/// scale degrees by the same factor, so no Koszul sign arises from moving g
/// past a; a component vanishes when either factor has no block.
inline GradedMap tensor_of_maps(const GradedMap& f, const GradedMap& g) {
  const auto& fs = f.source();
  const auto& gs = g.source();
  if (!(fs.field() == gs.field()) || fs.bound() != gs.bound())
    throw StructuralError("core_linear", "tensor of maps with different fields or bounds");
  if (f.exponent() != g.exponent()) throw StructuralError("core_linear", "tensor of maps with different degree rules");
  TensorSpace src(fs, gs);
  TensorSpace tgt(f.target(), g.target());
  GradedMap r = GradedMap::zero(src.space(), tgt.space(), f.exponent());
  for (const auto& [k, blk] : r.blocks()) {
    const int kt = r.target_degree(k);
    Matrix m = blk;
    const auto& parts = src.parts(k);
    for (std::size_t col = 0; col < parts.size(); ++col) {
      auto [i, a, b] = parts[col];
      const int j = k - i;
      if (!f.has_block(i) || !g.has_block(j)) continue;
      const int it = f.target_degree(i);
      const int jt = g.target_degree(j);
      if (it + jt != kt) continue;
      const Matrix& fm = f.block(i);
      const Matrix& gm = g.block(j);
      for (std::size_t ra = 0; ra < fm.rows(); ++ra) {
        if (fm(ra, a).is_zero()) continue;
        for (std::size_t rb = 0; rb < gm.rows(); ++rb) {
          if (gm(rb, b).is_zero()) continue;
          m(tgt.index(kt, it, static_cast<int>(ra), static_cast<int>(rb)), col) += fm(ra, a) * gm(rb, b);
        }
      }
    }
    r.set_block(k, std::move(m));
  }
  return r;
}

/// The symmetry τ: M⊗N → N⊗M, τ(x⊗y) = (-1)^{|x||y|} y⊗x.
inline GradedMap braiding(const GradedSpace& m, const GradedSpace& n) {
  TensorSpace src(m, n);
  TensorSpace tgt(n, m);
  GradedMap r = GradedMap::zero(src.space(), tgt.space(), 0);
  const Field& f = m.field();
  for (int k = 0; k <= m.bound(); ++k) {
    Matrix blk = r.block(k);
    const auto& parts = src.parts(k);
    for (std::size_t col = 0; col < parts.size(); ++col) {
      auto [i, a, b] = parts[col];
      const int j = k - i;
      blk(tgt.index(k, j, b, a), col) = sign_scalar(f, static_cast<long long>(i) * j);
    }
    r.set_block(k, std::move(blk));
  }
  return r;
}

}  // namespace hopf
