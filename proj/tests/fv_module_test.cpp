#include <gtest/gtest.h>

#include <random>

#include "hopf/fv_module.hpp"
#include "support.hpp"

using namespace hopf;
using hopf::testing::random_invertible;
using hopf::testing::scramble;

namespace {

Matrix one_by_one(const Field& f, int v) {
  Matrix m(f, 1, 1);
  m(0, 0) = Scalar::from_int(f, v);
  return m;
}

// A random legal summand (n, j) for p with bottom degree ≤ bound.
Summand random_summand(std::uint32_t p, int bound, std::mt19937& rng) {
  while (true) {
    int n = static_cast<int>(rng() % bound) + 1;
    if (p != 2 && n % 2 == 1) return Summand{n, 0, false};
    int j = static_cast<int>(rng() % 4);
    return Summand{n, j, false};
  }
}

// Expected classification of a standard summand at the bound: a chain whose
// last basis element x has p|x| > N is only known to be at least that long.
Summand observed(const Summand& s, std::uint32_t p, int bound) {
  if (p != 2 && s.n % 2 == 1) return s;
  long long top = s.n;
  int len = 0;
  while (len < s.j && top * p <= bound) {
    top *= p;
    ++len;
  }
  return Summand{s.n, len, top * p > bound};
}

}  // namespace

TEST(StandardSummand, N21AtTwo) {
  FModule m = standard_f_summand(2, 1, 2, 12);
  EXPECT_EQ(m.dim(2), 1);
  EXPECT_EQ(m.dim(4), 1);
  EXPECT_EQ(m.dim(8), 0);
  EXPECT_EQ(m.structure(2), one_by_one(m.field(), 1));
  EXPECT_TRUE(m.structure(4).is_zero());
}

TEST(StandardSummand, OddPrimeOddDegree) {
  FModule m = standard_f_summand(3, 0, 3, 12);
  EXPECT_EQ(m.dim(3), 1);
  EXPECT_TRUE(m.structure(3).is_zero());
  EXPECT_THROW(standard_f_summand(3, 1, 3, 12), DomainError);
  EXPECT_THROW(standard_f_summand(0, 1, 2, 12), DomainError);
  EXPECT_THROW(standard_f_summand(14, 0, 2, 12), DomainError);
}

TEST(StandardSummand, InfiniteChainReportsObservableFloor) {
  FModule m = standard_f_summand(1, kInfinite, 2, 8);
  for (int d : {1, 2, 4, 8}) EXPECT_EQ(m.dim(d), 1);
  Decomposition dec = classify(m);
  EXPECT_EQ(dec.to_string(), "{(1,≥3)}");
}

TEST(Classify, AlreadyDecomposed) {
  FModule m = direct_sum(standard_f_summand(2, 1, 2, 12), standard_f_summand(6, 0, 2, 12));
  Decomposition d = classify(m);
  EXPECT_EQ(d.to_string(), "{(2,1),(6,0)}");
}

TEST(Classify, TruncatedCubeAugmentationIdeal) {
  // F_2[y]/(y^3): y in degree 2, y^2 in degree 4, F(y) = y^2, F(y^2) = 0.
  Field f = Field::prime(2);
  FModule m(GradedSpace(f, 12, {{}, {}, {"y"}, {}, {"y^2"}}));
  m.set_structure(2, one_by_one(f, 1));
  EXPECT_EQ(classify(m).to_string(), "{(2,1)}");
}

TEST(Classify, RankOneLaneMap) {
  // Two 2-dimensional pieces in degrees 2 and 4 joined by [[1,1],[0,0]].
  Field f = Field::prime(2);
  FModule m(GradedSpace::from_dims(f, 12, {0, 0, 2, 0, 2}));
  Matrix a(f, 2, 2);
  a(0, 0) = Scalar::one(f);
  a(0, 1) = Scalar::one(f);
  m.set_structure(2, a);
  Decomposition d = classify(m);
  EXPECT_EQ(d.to_string(), "{(2,0),(2,1),(4,0)}");
  // The degree-4 singleton is the cokernel of the rank-1 map.
  EXPECT_EQ(d.size(), 3);
}

TEST(Classify, RecoversScrambledRandomSums) {
  std::mt19937 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int trial = 0; trial < 40; ++trial) {
      const int bound = 12;
      Field f = Field::prime(p);
      FModule m = FModule::zero(f, bound);
      Decomposition expected(p, bound);
      int total = 0;
      const int parts = static_cast<int>(rng() % 4) + 1;
      for (int i = 0; i < parts && total < 8; ++i) {
        Summand s = random_summand(p, bound, rng);
        FModule piece = standard_f_summand(s.n, s.j, p, bound);
        total += piece.space().total_dim();
        m = direct_sum(m, piece);
        expected.add(observed(s, p, bound));
      }
      FModule scrambled = scramble(m, rng);
      EXPECT_EQ(classify(scrambled), expected) << "p=" << p << " trial " << trial;
      EXPECT_EQ(classify(scrambled).series(), m.space().series());
      VModule dual = dualize(scrambled);
      EXPECT_EQ(classify(dual), expected);
    }
}

TEST(Classify, RebuildIsIsomorphic) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Field f = Field::prime(2);
    FModule m = FModule::zero(f, 12);
    for (int i = 0; i < 3; ++i) {
      Summand s = random_summand(2, 12, rng);
      m = direct_sum(m, standard_f_summand(s.n, s.j, 2, 12));
    }
    m = scramble(m, rng);
    EXPECT_TRUE(iso_test_fv(m, rebuild<FVKind::F>(classify(m))));
  }
}

TEST(Classify, SameSeriesDifferentModules) {
  const std::uint32_t p = 2;
  FModule a = direct_sum(standard_f_summand(2, 1, p, 12), standard_f_summand(2, 1, p, 12));
  FModule b = direct_sum(direct_sum(standard_f_summand(2, 0, p, 12), standard_f_summand(2, 1, p, 12)),
                         standard_f_summand(4, 0, p, 12));
  EXPECT_EQ(a.space().series(), b.space().series());
  EXPECT_FALSE(iso_test_fv(a, b));
  EXPECT_TRUE(iso_test_fv(a, a));
}

TEST(Classify, CautionaryIndecomposablesDiffer) {
  // Q of the two cautionary Hopf algebras: x, y, z in degrees 1, 2, 4 with
  // V(z) = y in the first and V = 0 in the second.
  Field f = Field::prime(2);
  GradedSpace q(f, 12, {{}, {"x"}, {"y"}, {}, {"z"}});
  VModule q1(q), q2(q);
  q1.set_structure(2, one_by_one(f, 1));
  EXPECT_EQ(classify(q1).to_string(), "{(1,0),(2,1)}");
  EXPECT_EQ(classify(q2).to_string(), "{(1,0),(2,0),(4,0)}");
  EXPECT_FALSE(iso_test_fv(q1, q2));
}

TEST(Phi, ShiftsSummands) {
  VModule m = standard_v_summand(1, 1, 2, 12);
  VModule pm = phi(m);
  EXPECT_EQ(classify(pm).to_string(), "{(2,1)}");
  EXPECT_EQ(classify(phi(phi(standard_v_summand(1, 0, 2, 12)))).to_string(), "{(4,0)}");
  EXPECT_EQ(classify(phi(VModule::zero(Field::prime(2), 12))).size(), 0);
  EXPECT_THROW(phi(standard_v_summand(7, 0, 2, 12)), TruncationError);
}

TEST(Phi, OddPrimeDropsOddDegrees) {
  FModule m = direct_sum(standard_f_summand(1, 0, 3, 54), standard_f_summand(2, 1, 3, 54));
  FModule pm = phi(m);
  EXPECT_EQ(pm.dim(3), 0);
  EXPECT_EQ(classify(pm).to_string(), "{(6,1)}");
}

TEST(Dual, TransposeAndInvolution) {
  FModule n21 = standard_f_summand(2, 1, 2, 12);
  VModule m21 = dualize(n21);
  EXPECT_EQ(m21.space().labels(2)[0], "x0*");
  EXPECT_EQ(classify(m21).to_string(), "{(2,1)}");
  EXPECT_EQ(dualize(m21), n21);
}

TEST(Tensor, SquareOfN21) {
  FModule n = standard_f_summand(2, 1, 2, 24);
  FModule sq = tensor_fv(n, n);
  EXPECT_EQ(classify(sq).to_string(), "{(4,1),2*(6,0)}");
  EXPECT_EQ(classify(tensor_fv(n, FModule::zero(n.field(), 24))).size(), 0);
}

TEST(Tensor, CubeOfN21) {
  FModule n = standard_f_summand(2, 1, 2, 24);
  FModule cube = tensor_fv(tensor_fv(n, n), n);
  Decomposition d = classify(cube);
  EXPECT_EQ(d.multiplicity(Summand{6, 1, false}), 1);
  int trivial = 0;
  for (const auto& [s, m] : d.counts())
    if (s.j == 0) trivial += m;
  EXPECT_EQ(trivial, 6);
  EXPECT_EQ(d.size(), 7);
}

TEST(Tensor, DualityCommutesWithTensor) {
  std::mt19937 rng(4);
  FModule a = scramble(direct_sum(standard_f_summand(1, 2, 2, 12), standard_f_summand(3, 1, 2, 12)), rng);
  FModule b = scramble(standard_f_summand(2, 1, 2, 12), rng);
  EXPECT_EQ(classify(dualize(tensor_fv(a, b))), classify(tensor_fv(dualize(a), dualize(b))));
}

TEST(Predicates, ProjectivesAndInjectives) {
  EXPECT_EQ(is_projective<FVKind::F>(Summand{2, 3, true}, 2), Tri::Unknown);
  EXPECT_EQ(is_projective<FVKind::F>(Summand{2, 1, false}, 2), Tri::No);
  EXPECT_EQ(is_injective<FVKind::F>(Summand{3, 1, false}, 2), Tri::Yes);
  EXPECT_EQ(is_injective<FVKind::F>(Summand{2, 1, false}, 2), Tri::No);
  EXPECT_EQ(is_projective<FVKind::F>(Summand{5, 0, false}, 3), Tri::Yes);
  EXPECT_EQ(is_injective<FVKind::F>(Summand{6, 0, false}, 3), Tri::No);
  EXPECT_EQ(is_injective<FVKind::F>(Summand{4, 0, false}, 3), Tri::Yes);
  // V mirrors F.
  EXPECT_EQ(is_projective<FVKind::V>(Summand{1, 2, false}, 2), Tri::Yes);
  EXPECT_EQ(is_injective<FVKind::V>(Summand{1, 2, true}, 2), Tri::Unknown);
}
