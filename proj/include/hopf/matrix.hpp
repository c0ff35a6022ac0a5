#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/scalar.hpp"

namespace hopf {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline bool is_zero_vector(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

namespace detail {

// Arithmetic policies for the elimination kernel. Residues are unpacked to raw
// integers so that F_p elimination does not pay for the Scalar variant.
struct ModOps {
  using T = std::uint32_t;
  std::uint32_t p;
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(T v, const Field& f) const { return Scalar::from_int(f, v); }
  bool zero(T v) const { return v == 0; }
  T sub_mul(T a, T c, T b) const {  // a - c*b
    std::uint64_t cb = (std::uint64_t(c) * b) % p;
    return static_cast<T>((a + p - cb) % p);
  }
  T mul(T a, T b) const { return static_cast<T>((std::uint64_t(a) * b) % p); }
  T inv(T a) const { return mod_inverse(a, p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
};

struct RatOps {
  using T = Rational;
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const T& v, const Field& f) const { return Scalar::from_rational(f, v); }
  bool zero(const T& v) const { return v == 0; }
  T sub_mul(const T& a, const T& c, const T& b) const { return a - c * b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T neg(const T& a) const { return -a; }
};

// Reduced row echelon form over the first `ncols` columns, visiting columns in
// the given order. Extra (augmented) columns ride along.
template <class Ops>
struct Echelon {
  std::vector<std::vector<typename Ops::T>> rows;  // reduced rows, one per pivot
  std::vector<std::size_t> pivots;                 // pivot column of each row
};

template <class Ops>
Echelon<Ops> eliminate(const Ops& ops, std::vector<std::vector<typename Ops::T>> a, std::size_t ncols,
                       const std::vector<std::size_t>& order) {
  Echelon<Ops> out;
  std::size_t next = 0;
  const std::size_t nrows = a.size();
  for (std::size_t c : order) {
    if (c >= ncols) continue;
    std::size_t piv = nrows;
    for (std::size_t r = next; r < nrows; ++r)
      if (!ops.zero(a[r][c])) {
        piv = r;
        break;
      }
    if (piv == nrows) continue;
    std::swap(a[piv], a[next]);
    auto& prow = a[next];
    auto inv = ops.inv(prow[c]);
    for (auto& e : prow) e = ops.mul(e, inv);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == next || ops.zero(a[r][c])) continue;
      auto factor = a[r][c];
      auto& row = a[r];
      for (std::size_t k = 0; k < row.size(); ++k)
        if (!ops.zero(prow[k])) row[k] = ops.sub_mul(row[k], factor, prow[k]);
    }
    out.pivots.push_back(c);
    ++next;
    if (next == nrows) break;
  }
  a.resize(next);
  out.rows = std::move(a);
  return out;
}

}  // namespace detail

/// Dense matrix over an exact field. Sizes here are at most a few thousand
/// rows, so dense storage with zero-skipping elimination is adequate.
class Matrix {
 public:
  Matrix() : field_(Field::prime(2)) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  void set_column(std::size_t c, const Vector& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const { return is_zero_vector(data_); }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_))
      throw StructuralError("core_linear", "matrix product shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(r, k);
        if (a.is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          if (!o(k, c).is_zero()) m(r, c) += a * o(k, c);
      }
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("core_linear", "matrix sum shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw StructuralError("core_linear", "vector length mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::size_t rank() const {
    return dispatch([&](const auto& ops) -> std::size_t {
      return detail::eliminate(ops, unpack(ops), cols_, natural_order()).pivots.size();
    });
  }

  /// Basis of the null space. Each vector has its first nonzero coordinate at
  /// a distinct free column, equal to 1, and the other vectors vanish there;
  /// this is the form in which lexicographic minimisation is trivial.
  std::vector<Vector> kernel() const {
    return dispatch([&](const auto& ops) -> std::vector<Vector> {
      auto ech = detail::eliminate(ops, unpack(ops), cols_, reversed_order());
      return kernel_from(ops, ech);
    });
  }

  /// Lexicographically least solution x of A x = b (coordinates compared in
  /// column order, residues as integers in [0, p)), or nullopt if none.
  std::optional<Vector> solve(const Vector& b) const {
    if (b.size() != rows_) throw StructuralError("core_linear", "right-hand side length mismatch");
    return dispatch([&](const auto& ops) -> std::optional<Vector> { return back_substitute(ops, b); });
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix inv(field_, rows_, rows_);
    for (std::size_t c = 0; c < rows_; ++c) {
      Vector e = zero_vector(field_, rows_);
      e[c] = Scalar::one(field_);
      auto x = solve(e);
      if (!x) return std::nullopt;
      inv.set_column(c, *x);
    }
    if (rank() != rows_) return std::nullopt;
    return inv;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      s += "[";
      for (std::size_t c = 0; c < cols_; ++c) s += (c ? " " : "") + (*this)(r, c).to_string();
      s += "]\n";
    }
    return s;
  }

 private:
  template <class F>
  auto dispatch(F&& fn) const -> decltype(fn(detail::ModOps{2})) {
    if (field_.is_rational()) return fn(detail::RatOps{});
    return fn(detail::ModOps{field_.characteristic()});
  }

  template <class Ops>
  std::vector<std::vector<typename Ops::T>> unpack(const Ops& ops) const {
    std::vector<std::vector<typename Ops::T>> a(rows_, std::vector<typename Ops::T>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) a[r][c] = ops.from((*this)(r, c));
    return a;
  }

  std::vector<std::size_t> natural_order() const {
    std::vector<std::size_t> o(cols_);
    for (std::size_t i = 0; i < cols_; ++i) o[i] = i;
    return o;
  }
  std::vector<std::size_t> reversed_order() const {
    std::vector<std::size_t> o(cols_);
    for (std::size_t i = 0; i < cols_; ++i) o[i] = cols_ - 1 - i;
    return o;
  }

  template <class Ops>
  std::vector<Vector> kernel_from(const Ops& ops, const detail::Echelon<Ops>& ech) const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      Vector v = zero_vector(field_, cols_);
      v[f] = Scalar::one(field_);
      for (std::size_t r = 0; r < ech.rows.size(); ++r)
        if (!ops.zero(ech.rows[r][f])) v[ech.pivots[r]] = ops.to(ops.neg(ech.rows[r][f]), field_);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  template <class Ops>
  std::optional<Vector> back_substitute(const Ops& ops, const Vector& b) const {
    auto a = unpack(ops);
    for (std::size_t r = 0; r < rows_; ++r) a[r].push_back(ops.from(b[r]));
    // Pivots only on coefficient columns, so the augmented column never holds
    // one; rows beyond the rank are dropped, hence the final consistency check.
    auto ech = detail::eliminate(ops, std::move(a), cols_, reversed_order());
    Vector x = zero_vector(field_, cols_);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) x[ech.pivots[r]] = ops.to(ech.rows[r][cols_], field_);
    if (apply(x) != b) return std::nullopt;
    return x;
  }

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace hopf
