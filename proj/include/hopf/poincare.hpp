#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/fv_module.hpp"
#include "hopf/series.hpp"

namespace hopf {

/// Cokernel series of the powers of F on an F-module, truncated at N.
///   coker[j]  = χ^j, the series of coker(F^{j+1})
///   image[j]  = total − χ^j
///   torsion_free = χ^∞, with torsion judged inside the bound only
struct SeriesProfile {
  std::uint32_t prime = 2;
  int bound = 0;
  int j_max = 0;
  TruncatedSeries total;
  std::vector<TruncatedSeries> coker;
  std::vector<TruncatedSeries> image;
  TruncatedSeries torsion_free;

  /// χ^j for any j ≥ -1: zero at -1 and the full series past j_max.
  TruncatedSeries chi(int j) const {
    if (j < 0) return TruncatedSeries(bound);
    if (j > j_max) return total;
    return coker[j];
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "deg";
    for (int d = 0; d <= bound; ++d) os << '\t' << d;
    os << '\n';
    auto row = [&](const std::string& name, const TruncatedSeries& s) {
      os << name;
      for (int d = 0; d <= bound; ++d) os << '\t' << s[d];
      os << '\n';
    };
    row("total", total);
    for (int j = 0; j <= j_max; ++j) row("chi^" + std::to_string(j), coker[j]);
    row("chi^inf", torsion_free);
    return os.str();
  }
};

/// Multiplicity series a^j recovered from χ data. determined[j][n] is false
/// where the formula needs coefficients above the bound. a^∞ is read off the
/// torsion-free series, so it counts chains that leave the bound.
struct RecoveredSeries {
  std::uint32_t prime = 2;
  int bound = 0;
  std::vector<TruncatedSeries> a;
  std::vector<std::vector<bool>> determined;
  TruncatedSeries a_infinite;

  bool is_determined(int j, int n) const {
    return j >= 0 && j < static_cast<int>(a.size()) && n >= 0 && n <= bound && determined[j][n];
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "deg";
    for (int d = 1; d <= bound; ++d) os << '\t' << d;
    os << '\n';
    for (std::size_t j = 0; j < a.size(); ++j) {
      os << "a^" << j;
      for (int d = 1; d <= bound; ++d) {
        os << '\t';
        if (determined[j][d]) os << a[j][d];
        else os << '?';
      }
      os << '\n';
    }
    os << "a^inf";
    for (int d = 1; d <= bound; ++d) os << '\t' << a_infinite[d];
    os << "\t(within bound)\n";
    return os.str();
  }
};

namespace detail {

inline int default_j_max(std::uint32_t p, int bound) {
  int j = 0;
  for (long long q = p; q <= bound; q *= p) ++j;
  return j;
}

inline long long ipow(long long p, int k) {
  long long r = 1;
  while (k-- > 0) r *= p;
  return r;
}

// rank(k, e) is the rank of F^k out of degree e, for k ≥ 1 and p^k e ≤ N.
inline SeriesProfile assemble_profile(std::uint32_t p, int bound, int j_max, const TruncatedSeries& total,
                                      const std::function<long long(int, int)>& rank) {
  SeriesProfile s;
  s.prime = p;
  s.bound = bound;
  s.j_max = j_max < 0 ? default_j_max(p, bound) : j_max;
  s.total = total;
  for (int j = 0; j <= s.j_max; ++j) {
    const long long q = ipow(p, j + 1);
    TruncatedSeries im(bound);
    for (int e = 1; e * q <= bound; ++e) im.at(static_cast<int>(e * q)) = rank(j + 1, e);
    s.image.push_back(im);
    s.coker.push_back(total - im);
  }
  s.torsion_free = TruncatedSeries(bound);
  s.torsion_free.at(0) = total[0];
  for (int e = 1; e <= bound; ++e) {
    int k = 0;
    while (ipow(p, k + 1) * e <= bound) ++k;
    if (!structured_degree(e, p)) continue;  // F vanishes there by fiat
    s.torsion_free.at(e) = k == 0 ? total[e] : rank(k, e);
  }
  return s;
}

// Sparse row reduction over F_p; rows are sorted (column, value) lists.
class ModpRank {
 public:
  explicit ModpRank(std::uint32_t p) : p_(p) {}

  void insert(std::vector<std::pair<int, std::uint32_t>> row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const std::uint64_t inv = mod_inverse(row.front().second, p_);
        for (auto& [c, v] : row) v = static_cast<std::uint32_t>(v * inv % p_);
        pivots_.emplace(row.front().first, std::move(row));
        return;
      }
      const std::uint64_t f = p_ - row.front().second;
      std::vector<std::pair<int, std::uint32_t>> out;
      out.reserve(row.size() + it->second.size());
      auto a = row.begin();
      auto b = it->second.begin();
      while (a != row.end() || b != it->second.end()) {
        if (b == it->second.end() || (a != row.end() && a->first < b->first)) {
          out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
          out.emplace_back(b->first, static_cast<std::uint32_t>(f * b->second % p_));
          ++b;
        } else {
          const std::uint32_t v = static_cast<std::uint32_t>((a->second + f * b->second) % p_);
          if (v != 0) out.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::uint32_t p_;
  std::map<int, std::vector<std::pair<int, std::uint32_t>>> pivots_;
};

// F^k as a matrix out of degree e: dim(p^k e) × dim(e).
inline Matrix f_power(const FModule& m, int k, int e) {
  Matrix r = Matrix::identity(m.field(), m.dim(e));
  long long d = e;
  for (int i = 0; i < k; ++i, d *= m.prime()) r = m.structure(static_cast<int>(d)) * r;
  return r;
}

}  // namespace detail

/// χ^j for j = 0..j_max (default floor(log_p N)) and χ^∞ of an F-module.
inline SeriesProfile series_profile(const FModule& m, int j_max = -1) {
  return detail::assemble_profile(m.prime(), m.bound(), j_max, m.space().series(), [&](int k, int e) {
    return static_cast<long long>(detail::f_power(m, k, e).rank());
  });
}

/// The profile of the tensor algebra TM = ⊕_k M^{⊗k} with F acting letterwise
/// on words, computed on the word basis. F is not defined out of degree 0, so
/// the unit counts towards every cokernel.
inline SeriesProfile tensor_algebra_profile(const FModule& m, int j_max = -1) {
  const int bound = m.bound();
  const std::uint32_t p = m.prime();
  TruncatedSeries total(bound);
  total.at(0) = 1;
  for (int e = 1; e <= bound; ++e) {
    long long acc = 0;
    for (int d = 1; d <= e; ++d) acc += static_cast<long long>(m.dim(d)) * total[e - d];
    total.at(e) = acc;
  }

  // Letters are (degree, local index); offsets give global ids.
  std::vector<int> offset(bound + 2, 0);
  for (int d = 0; d <= bound; ++d) offset[d + 1] = offset[d] + m.dim(d);

  auto rank = [&](int k, int e) -> long long {
    const long long q = detail::ipow(p, k);
    // Images of letters of degree d ≤ e under F^k, as (global id, residue) lists.
    std::vector<std::vector<std::vector<std::pair<int, std::uint32_t>>>> img(e + 1);
    for (int d = 1; d <= e; ++d) {
      if (m.dim(d) == 0) continue;
      Matrix fk = detail::f_power(m, k, d);
      const int t = static_cast<int>(d * q);
      img[d].resize(m.dim(d));
      for (int c = 0; c < m.dim(d); ++c)
        for (int r = 0; r < m.dim(t); ++r)
          if (!fk(r, c).is_zero()) img[d][c].emplace_back(offset[t] + r, fk(r, c).residue());
    }
    std::map<std::vector<int>, int> ids;
    detail::ModpRank rows(p);
    std::vector<int> word;
    std::map<std::vector<int>, std::uint32_t> acc;
    // Expand the image of the current source word letter by letter.
    std::function<void(std::size_t, std::vector<int>&, std::uint64_t)> expand =
        [&](std::size_t i, std::vector<int>& out, std::uint64_t coeff) {
          if (i == word.size()) {
            auto& slot = acc[out];
            slot = static_cast<std::uint32_t>((slot + coeff) % p);
            return;
          }
          const int letter = word[i];
          int d = 1;
          while (offset[d + 1] <= letter) ++d;
          for (const auto& [g, v] : img[d][letter - offset[d]]) {
            out.push_back(g);
            expand(i + 1, out, coeff * v % p);
            out.pop_back();
          }
        };
    std::function<void(int)> enumerate = [&](int left) {
      if (left == 0) {
        acc.clear();
        std::vector<int> out;
        expand(0, out, 1);
        std::vector<std::pair<int, std::uint32_t>> row;
        for (const auto& [w, v] : acc) {
          if (v == 0) continue;
          auto it = ids.try_emplace(w, static_cast<int>(ids.size())).first;
          row.emplace_back(it->second, v);
        }
        std::sort(row.begin(), row.end());
        rows.insert(std::move(row));
        return;
      }
      for (int d = 1; d <= left; ++d)
        for (int c = 0; c < m.dim(d); ++c) {
          word.push_back(offset[d] + c);
          enumerate(left - d);
          word.pop_back();
        }
    };
    enumerate(e);
    return static_cast<long long>(rows.rank());
  };
  return detail::assemble_profile(p, bound, j_max, total, rank);
}

/// a^∞ = χ^∞ − χ^∞(t^p) and a^j(t^{p^{j+1}}) = [χ^j(t^p) − χ^{j−1}(t^p)] − [χ^{j+1}(t) − χ^j(t)].
inline RecoveredSeries decomposition_series(const SeriesProfile& s) {
  RecoveredSeries r;
  r.prime = s.prime;
  r.bound = s.bound;
  const int p = static_cast<int>(s.prime);
  r.a_infinite = s.torsion_free - series_substitute(s.torsion_free, p);
  r.a_infinite.at(0) = 0;
  for (int j = 0; detail::ipow(p, j + 1) <= s.bound; ++j) {
    const long long q = detail::ipow(p, j + 1);
    TruncatedSeries lhs = series_substitute(s.chi(j) - s.chi(j - 1), p) - (s.chi(j + 1) - s.chi(j));
    TruncatedSeries a(s.bound);
    std::vector<bool> det(s.bound + 1, false);
    for (int n = 1; n * q <= s.bound; ++n) {
      a.at(n) = lhs[static_cast<int>(n * q)];
      det[n] = true;
    }
    r.a.push_back(a);
    r.determined.push_back(det);
  }
  return r;
}

/// Recovers the multiplicity series of N from the profile of TN. The tensor
/// algebra is handled through image series: the image of F^{j+1} on N^{⊗k} is
/// the k-th tensor power of the image on N, so ι_{TN} = ι_N / (1 − ι_N) and
/// χ_{TN} = 1 / (1 − χ_N).
inline RecoveredSeries recover_decomposition(const SeriesProfile& tn) {
  const int bound = tn.bound;
  const TruncatedSeries one = TruncatedSeries::one(bound);
  if (tn.total[0] != 1) throw DomainError("poincare", "tensor algebra profile must have a unit in degree 0");
  SeriesProfile n;
  n.prime = tn.prime;
  n.bound = bound;
  n.j_max = tn.j_max;
  n.total = one - series_inverse(tn.total);
  for (int j = 0; j <= tn.j_max; ++j) {
    TruncatedSeries iota = one - series_inverse(one + tn.image[j]);
    n.image.push_back(iota);
    n.coker.push_back(n.total - iota);
  }
  // χ^∞ at e is the rank of F^k out of e for the largest k with p^k e ≤ N,
  // which is the image of F^k in degree p^k e.
  const int p = static_cast<int>(tn.prime);
  n.torsion_free = TruncatedSeries(bound);
  for (int e = 1; e <= bound; ++e) {
    int k = 0;
    while (detail::ipow(p, k + 1) * e <= bound) ++k;
    if (!detail::structured_degree(e, tn.prime)) continue;
    n.torsion_free.at(e) = k == 0 ? n.total[e] : n.image[k - 1][static_cast<int>(detail::ipow(p, k) * e)];
  }
  return decomposition_series(n);
}

/// First disagreement between two series tables, j-major.
struct IdentityCheck {
  bool holds = true;
  int j = -1;
  int degree = -1;
  long long left = 0;
  long long right = 0;

  std::string to_string() const {
    if (holds) return "holds";
    return "fails at j=" + std::to_string(j) + ", degree " + std::to_string(degree) + ": " + std::to_string(left) +
           " vs " + std::to_string(right);
  }
};

namespace detail {

inline IdentityCheck compare_tables(const std::vector<TruncatedSeries>& left, const std::vector<TruncatedSeries>& right) {
  IdentityCheck c;
  for (std::size_t j = 0; j < left.size(); ++j)
    for (int d = 0; d <= left[j].bound(); ++d)
      if (left[j][d] != right[j][d]) {
        c.holds = false;
        c.j = static_cast<int>(j);
        c.degree = d;
        c.left = left[j][d];
        c.right = right[j][d];
        return c;
      }
  return c;
}

}  // namespace detail

/// χ^j_{TM} = 1/(1 − χ^j_M) for every j, both sides computed independently.
inline IdentityCheck verify_tensor_identity(const FModule& m) {
  SeriesProfile tm = tensor_algebra_profile(m);
  SeriesProfile sm = series_profile(m, tm.j_max);
  const TruncatedSeries one = TruncatedSeries::one(m.bound());
  std::vector<TruncatedSeries> right;
  for (int j = 0; j <= sm.j_max; ++j) right.push_back(series_inverse(one - sm.coker[j]));
  return detail::compare_tables(tm.coker, right);
}

/// The image form ι^j_{TM} = ι^j_M / (1 − ι^j_M) that recover_decomposition uses.
inline IdentityCheck verify_image_identity(const FModule& m) {
  SeriesProfile tm = tensor_algebra_profile(m);
  SeriesProfile sm = series_profile(m, tm.j_max);
  const TruncatedSeries one = TruncatedSeries::one(m.bound());
  std::vector<TruncatedSeries> right;
  for (int j = 0; j <= sm.j_max; ++j) right.push_back(series_inverse(one - sm.image[j]) - one);
  return detail::compare_tables(tm.image, right);
}

/// Compares recovered series with a classification: determined a^j coefficients
/// against exact summands (n, j), and a^∞ against the chains that leave the bound.
inline std::string recovery_mismatch(const RecoveredSeries& r, const Decomposition& d) {
  std::map<std::pair<int, int>, long long> exact;
  std::map<int, long long> open;
  for (const auto& [s, mult] : d.counts()) {
    if (s.at_least || s.j == kInfinite) open[s.n] += mult;
    else exact[{s.n, s.j}] += mult;
  }
  for (std::size_t j = 0; j < r.a.size(); ++j)
    for (int n = 1; n <= r.bound; ++n) {
      if (!r.determined[j][n]) continue;
      auto it = exact.find({n, static_cast<int>(j)});
      const long long want = it == exact.end() ? 0 : it->second;
      if (r.a[j][n] != want)
        return "a^" + std::to_string(j) + " at degree " + std::to_string(n) + ": " + std::to_string(r.a[j][n]) +
               " vs " + std::to_string(want);
    }
  for (int n = 1; n <= r.bound; ++n) {
    auto it = open.find(n);
    const long long want = it == open.end() ? 0 : it->second;
    if (r.a_infinite[n] != want)
      return "a^inf at degree " + std::to_string(n) + ": " + std::to_string(r.a_infinite[n]) + " vs " +
             std::to_string(want);
  }
  return {};
}

}  // namespace hopf
