#include <gtest/gtest.h>

#include <random>

#include "hopf/graded.hpp"
#include "hopf/matrix.hpp"
#include "hopf/scalar.hpp"
#include "hopf/series.hpp"

using namespace hopf;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> dist(0, static_cast<int>(f.characteristic()) - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(f, dist(rng));
  return m;
}

// Every vector of F_p^n, in lexicographic order of coordinates.
std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vector> out;
  const int p = static_cast<int>(f.characteristic());
  std::vector<int> digits(n, 0);
  while (true) {
    Vector v;
    for (int d : digits) v.push_back(Scalar::from_int(f, d));
    out.push_back(v);
    int k = static_cast<int>(n) - 1;
    while (k >= 0 && digits[k] == p - 1) digits[k--] = 0;
    if (k < 0) break;
    ++digits[k];
  }
  return out;
}

}  // namespace

TEST(Scalar, ResidueArithmetic) {
  Field f3 = Field::prime(3);
  Scalar a = Scalar::from_int(f3, 2);
  EXPECT_EQ((a + a).residue(), 1u);
  EXPECT_EQ((a * a).residue(), 1u);
  EXPECT_EQ(a.inverse().residue(), 2u);
  EXPECT_EQ((-a).residue(), 1u);
  EXPECT_EQ(Scalar::from_int(f3, -4).residue(), 2u);
  EXPECT_THROW(Scalar::zero(f3).inverse(), DomainError);
}

TEST(Scalar, RationalsInLowestTerms) {
  Field q = Field::rationals();
  Scalar a = Scalar::from_rational(q, Rational(2, 4));
  EXPECT_EQ(a.to_string(), "1/2");
  EXPECT_EQ((a + a).to_string(), "1");
  EXPECT_EQ(Scalar::from_rational(q, Rational(-3, 6)).to_string(), "-1/2");
}

TEST(Scalar, FieldMismatchIsStructural) {
  EXPECT_THROW(Scalar::one(Field::prime(2)) + Scalar::one(Field::prime(3)), StructuralError);
  EXPECT_THROW(Scalar::one(Field::prime(2)) * Scalar::one(Field::rationals()), StructuralError);
  EXPECT_THROW(Field::prime(4), DomainError);
}

TEST(Scalar, RationalReducesModP) {
  Scalar s = Scalar::from_rational(Field::prime(5), Rational(1, 2));
  EXPECT_EQ(s.residue(), 3u);
  EXPECT_THROW(Scalar::from_rational(Field::prime(2), Rational(1, 2)), DomainError);
}

TEST(Matrix, RankPlusNullityOnRandomMatrices) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int trial = 0; trial < 40; ++trial) {
      Field f = Field::prime(p);
      Matrix m = random_matrix(f, rng() % 6, rng() % 6 + 1, rng);
      auto ker = m.kernel();
      EXPECT_EQ(m.rank() + ker.size(), m.cols());
      for (const auto& v : ker) EXPECT_TRUE(is_zero_vector(m.apply(v)));
    }
}

TEST(Matrix, SolveGivesLexLeastSolution) {
  // Brute force over all of F_p^n in lexicographic order.
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u})
    for (int trial = 0; trial < 60; ++trial) {
      Field f = Field::prime(p);
      const std::size_t rows = rng() % 4 + 1, cols = rng() % 4 + 1;
      Matrix m = random_matrix(f, rows, cols, rng);
      Vector b = random_matrix(f, rows, 1, rng).column(0);
      std::optional<Vector> expected;
      for (const auto& x : all_vectors(f, cols))
        if (m.apply(x) == b) {
          expected = x;
          break;
        }
      auto got = m.solve(b);
      ASSERT_EQ(got.has_value(), expected.has_value());
      if (got) {
        EXPECT_EQ(*got, *expected);
      }
    }
}

TEST(Matrix, RationalInverse) {
  Field q = Field::rationals();
  Matrix m(q, 2, 2);
  m(0, 0) = Scalar::from_int(q, 2);
  m(0, 1) = Scalar::from_int(q, 1);
  m(1, 0) = Scalar::from_int(q, 1);
  m(1, 1) = Scalar::from_int(q, 1);
  auto inv = m.inverse();
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix::identity(q, 2));
  Matrix s(q, 2, 2);
  s(0, 0) = Scalar::one(q);
  EXPECT_FALSE(s.inverse());
}

TEST(Series, GeometricInverse) {
  TruncatedSeries s(6, {1, -1});
  EXPECT_EQ(series_inverse(s), TruncatedSeries(6, {1, 1, 1, 1, 1, 1, 1}));
}

TEST(Series, CompositionCountingSeries) {
  // 1 - t^2/(1-t^2) = (1 - 2t^2)/(1 - t^2); its inverse counts words in
  // letters of degree 2, 4, 6, ...
  const int n = 8;
  TruncatedSeries abar(n);
  for (int d = 2; d <= n; d += 2) abar.at(d) = 1;
  TruncatedSeries inv = series_inverse(TruncatedSeries::one(n) - abar);
  // oracle: compositions of d/2 counted by dynamic programming
  std::vector<long long> words(n + 1, 0);
  words[0] = 1;
  for (int d = 1; d <= n; ++d)
    for (int l = 2; l <= d; l += 2) words[d] += words[d - l];
  EXPECT_EQ(inv, TruncatedSeries(n, words));
  EXPECT_EQ(inv, TruncatedSeries(n, {1, 0, 1, 0, 2, 0, 4, 0, 8}));
}

TEST(Series, InverseIsInvolutionAndExact) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    TruncatedSeries s(10);
    s.at(0) = (rng() % 2) ? 1 : -1;
    for (int d = 1; d <= 10; ++d) s.at(d) = static_cast<long long>(rng() % 7) - 3;
    TruncatedSeries u = series_inverse(s);
    EXPECT_EQ(s * u, TruncatedSeries::one(10));
    EXPECT_EQ(series_inverse(u), s);
  }
  EXPECT_THROW(series_inverse(TruncatedSeries(4, {2, 1})), DomainError);
  EXPECT_THROW(series_inverse(TruncatedSeries(4, {0, 1})), DomainError);
}

TEST(Series, Substitution) {
  TruncatedSeries s(4, {0, 1, 1});
  EXPECT_EQ(series_substitute(s, 1), s);
  EXPECT_EQ(series_substitute(s, 2), TruncatedSeries(4, {0, 0, 1, 0, 1}));
  TruncatedSeries even(8, {0, 0, 1, 0, 1, 0, 1, 0, 1});
  EXPECT_EQ(series_substitute(even, 2), TruncatedSeries(8, {0, 0, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_THROW(series_substitute(s, 0), DomainError);
}

TEST(Series, PrintsSignedTerms) {
  EXPECT_EQ(TruncatedSeries(4, {1, 0, -2, 0, 3}).to_string(), "1 - 2t^2 + 3t^4");
  EXPECT_EQ(TruncatedSeries(4).to_string(), "0");
  EXPECT_THROW(TruncatedSeries(2, {1}) + TruncatedSeries(3, {1}), StructuralError);
}

TEST(Graded, SpaceRejectsDuplicateLabels) {
  EXPECT_THROW(GradedSpace(Field::prime(2), 2, {{}, {"a", "a"}}), ValidationError);
  GradedSpace s(Field::prime(2), 3, {{"1"}, {"x"}});
  EXPECT_FALSE(s.is_reduced());
  EXPECT_EQ(s.dim(3), 0);
  EXPECT_THROW(s.dim(4), TruncationError);
}

TEST(Graded, TensorOfIdentitiesInDegreeTwo) {
  Field f = Field::prime(2);
  GradedSpace x(f, 2, {{}, {"x"}});
  GradedMap id = GradedMap::identity(x);
  GradedMap t = tensor_of_maps(id, id);
  EXPECT_EQ(t.source().dim(2), 1);
  EXPECT_EQ(t.block(2), Matrix::identity(f, 1));
  EXPECT_EQ(t.source().labels(2)[0], "x⊗x");
}

TEST(Graded, BraidingSignsOverQAndF2) {
  for (auto f : {Field::rationals(), Field::prime(2)}) {
    GradedSpace m(f, 2, {{}, {"x"}});
    GradedSpace n(f, 2, {{}, {"y"}});
    GradedMap tau = braiding(m, n);
    Scalar expected = f.is_rational() ? -Scalar::one(f) : Scalar::one(f);
    EXPECT_EQ(tau.block(2)(0, 0), expected);
  }
}

TEST(Graded, BraidingIsAnInvolution) {
  Field q = Field::rationals();
  GradedSpace m = GradedSpace::from_dims(q, 6, {0, 1, 2, 1}, "m");
  GradedMap tau = braiding(m, m);
  GradedMap twice = tau.after(tau);
  TensorSpace mm(m, m);
  EXPECT_EQ(twice, GradedMap::identity(mm.space()));
}

TEST(Graded, TensorOfMapsIsFunctorial) {
  std::mt19937 rng(5);
  Field f = Field::prime(3);
  GradedSpace m = GradedSpace::from_dims(f, 5, {0, 2, 1, 2}, "m");
  GradedSpace n = GradedSpace::from_dims(f, 5, {0, 1, 2, 0, 1}, "n");
  auto random_endo = [&](const GradedSpace& s) {
    GradedMap g = GradedMap::zero(s, s);
    for (const auto& [d, blk] : g.blocks()) g.set_block(d, random_matrix(f, blk.rows(), blk.cols(), rng));
    return g;
  };
  for (int trial = 0; trial < 10; ++trial) {
    GradedMap a = random_endo(m), a2 = random_endo(m), b = random_endo(n), b2 = random_endo(n);
    EXPECT_EQ(tensor_of_maps(a.after(a2), b.after(b2)), tensor_of_maps(a, b).after(tensor_of_maps(a2, b2)));
  }
}

TEST(Graded, MismatchedBoundsAreStructural) {
  Field f = Field::prime(2);
  GradedSpace a(f, 2, {});
  GradedSpace b(f, 3, {});
  EXPECT_THROW(tensor_of_maps(GradedMap::identity(a), GradedMap::identity(b)), StructuralError);
  EXPECT_THROW(GradedMap::identity(a).after(GradedMap::identity(b)), StructuralError);
}

TEST(Graded, FrobeniusStretchBlocks) {
  Field f = Field::prime(2);
  GradedSpace s = GradedSpace::from_dims(f, 8, {0, 1, 1, 1, 1, 0, 0, 0, 1});
  GradedMap fr = GradedMap::frobenius_stretch(s, s);
  EXPECT_TRUE(fr.has_block(4));
  EXPECT_FALSE(fr.has_block(5));
  EXPECT_EQ(fr.target_degree(3), 6);
  GradedMap v = GradedMap::verschiebung_contract(s, s);
  EXPECT_FALSE(v.has_block(3));
  EXPECT_EQ(v.target_degree(8), 4);
  EXPECT_EQ(v.after(fr).exponent(), 0);
}
