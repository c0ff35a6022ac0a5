#pragma once

#include <random>

#include "hopf/fv_module.hpp"

namespace hopf::testing {

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, static_cast<int>(f.characteristic()) - 1);
  while (true) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::from_int(f, dist(rng));
    if (m.rank() == n) return m;
  }
}

// Conjugates the structure by an independent random basis change in every
// degree, so that classify sees no trace of the block structure.
template <FVKind K>
FVModule<K> scramble(const FVModule<K>& m, std::mt19937& rng) {
  std::vector<Matrix> change(m.bound() + 1), inverse(m.bound() + 1);
  for (int d = 0; d <= m.bound(); ++d) {
    change[d] = random_invertible(m.field(), m.dim(d), rng);
    inverse[d] = *change[d].inverse();
  }
  FVModule<K> r(m.space());
  const int p = static_cast<int>(m.prime());
  for (int n = 1; r.has_structure(n); ++n) {
    if (K == FVKind::F) r.set_structure(n, change[n * p] * m.structure(n) * inverse[n]);
    else r.set_structure(n, change[n] * m.structure(n) * inverse[n * p]);
  }
  return r;
}

// A random F-module of total dimension at most max_dim, as a scrambled direct
// sum of chains. The bottom degrees are drawn from [min_degree, bound].
inline FModule random_fmodule(std::uint32_t p, int bound, int max_dim, int min_degree, std::mt19937& rng) {
  const Field f = Field::prime(p);
  FModule m = FModule::zero(f, bound);
  int used = 0;
  const int target = 1 + static_cast<int>(rng() % max_dim);
  for (int tries = 0; used < target && tries < 50; ++tries) {
    int n = min_degree + static_cast<int>(rng() % (bound - min_degree + 1));
    int j = (p != 2 && n % 2 == 1) ? 0 : static_cast<int>(rng() % 4);
    FModule s = standard_f_summand(n, j, p, bound);
    if (used + s.space().total_dim() > target) continue;
    used += s.space().total_dim();
    m = direct_sum(m, s);
  }
  return scramble(m, rng);
}

}  // namespace hopf::testing
