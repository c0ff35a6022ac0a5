#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hopf/free_cofree.hpp"
#include "hopf/gallery.hpp"
#include "hopf/monomial.hpp"

using namespace hopf;

namespace {

const Field F2 = Field::prime(2);
const Field QQ = Field::rationals();

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Positions split three ways: α only, β only, both.
long long pair_count(int l, int m, int n) {
  const int both = l + m - n;
  if (both < 0 || both > std::min(l, m)) return 0;
  return factorial(n) / (factorial(l - both) * factorial(m - both) * factorial(both));
}

Element word(const BialgebraData& h, const Word& w) { return h.e(h.words()->index_of(w)); }

// Word-label → coefficient, the printable multiset of signed words.
std::map<std::string, std::string> by_label(const BialgebraData& h, const Element& x) {
  std::map<std::string, std::string> out;
  for (const auto& [i, c] : x) out[h.basis().label(i)] = c.to_string();
  return out;
}

GradedAlgebra polynomial_algebra(const Field& f, const std::vector<std::pair<std::string, int>>& gens, int bound) {
  MonomialAlgebraPresentation p;
  p.field = f;
  for (const auto& [n, d] : gens) p.add_generator(n, d);
  return build_algebra(p, bound);
}

// Random commutative monomial algebra: a few generators with random degrees
// and random power / pair relations.
GradedAlgebra random_commutative(const Field& f, std::mt19937& rng, int bound) {
  MonomialAlgebraPresentation p;
  p.field = f;
  std::uniform_int_distribution<int> ngen(1, 3), deg(1, 3), coin(0, 1), power(2, 4);
  const int r = ngen(rng);
  for (int g = 0; g < r; ++g) {
    int d = deg(rng);
    if (f.characteristic() != 2 && coin(rng)) d = 2 * (d % 2 + 1);  // mix in even degrees away from 2
    p.add_generator(std::string(1, static_cast<char>('a' + g)), d);
    if (coin(rng)) p.add_power(g, power(rng));
  }
  if (r > 1 && coin(rng)) p.add_pair(0, 1);
  return build_algebra(p, bound);
}

GradedCoalgebra s1_wedge_cp2() {
  std::vector<std::vector<std::string>> labels(8);
  labels[0] = {"1"};
  labels[1] = {"x"};
  labels[2] = {"y"};
  labels[4] = {"z"};
  Basis b(7, labels);
  std::vector<Tensor2> delta(4, Tensor2(F2));
  for (int i = 0; i < 4; ++i) {
    delta[i].add({i, 0}, Scalar::one(F2));
    if (i) delta[i].add({0, i}, Scalar::one(F2));
  }
  delta[3].add({2, 2}, Scalar::one(F2));
  return GradedCoalgebra(F2, b, delta, true);
}

}  // namespace

TEST(SurjectionPairs, SmallCounts) {
  auto p11 = enumerate_surjection_pairs(1, 1);
  ASSERT_EQ(p11.size(), 3u);
  EXPECT_EQ(p11[0].n, 2);
  EXPECT_EQ(p11[1].n, 2);
  EXPECT_EQ(p11[2].n, 1);
  auto p22 = enumerate_surjection_pairs(2, 2);
  EXPECT_EQ(p22.size(), 13u);
  int shuffles = 0;
  for (const auto& sp : p22) shuffles += sp.n == 4;
  EXPECT_EQ(shuffles, 6);
}

TEST(SurjectionPairs, MultinomialOracle) {
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m) {
      std::map<int, long long> seen;
      for (const auto& sp : enumerate_surjection_pairs(l, m)) {
        ++seen[sp.n];
        std::vector<int> hit(sp.n, 0);
        for (std::size_t i = 0; i < sp.alpha.size(); ++i) {
          if (i) EXPECT_LT(sp.alpha[i - 1], sp.alpha[i]);
          hit[sp.alpha[i]] = 1;
        }
        for (std::size_t j = 0; j < sp.beta.size(); ++j) {
          if (j) EXPECT_LT(sp.beta[j - 1], sp.beta[j]);
          hit[sp.beta[j]] = 1;
        }
        for (int h : hit) EXPECT_EQ(h, 1);
        EXPECT_EQ(sp.overlaps(), l + m - sp.n);
      }
      for (int n = 0; n <= l + m; ++n) EXPECT_EQ(seen[n], pair_count(l, m, n)) << l << "," << m << "," << n;
    }
}

TEST(Deconcat, Components) {
  auto [u, v] = deconcat_component({3, 5}, 1, 1);
  EXPECT_EQ(u, Word{3});
  EXPECT_EQ(v, Word{5});
  auto [e, w] = deconcat_component({3, 5}, 0, 2);
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(w, (Word{3, 5}));
  EXPECT_THROW(deconcat_component({3, 5}, 1, 2), DomainError);
}

TEST(BuildJ, NSym) {
  auto h = gallery_build("nsym", 2, 8).bialgebra();
  EXPECT_TRUE(check_axioms(h).ok());
  EXPECT_TRUE(is_primitive(h, word(h, {0})));
  EXPECT_EQ(format_tensor(h.basis(), h.coproduct(word(h, {1}))), "[t2]⊗[] + [t1]⊗[t1] + []⊗[t2]");
}

TEST(BuildJ, TrivialCoalgebraGivesPrimitiveGenerators) {
  std::vector<std::vector<std::string>> labels(5);
  labels[0] = {"1"};
  labels[2] = {"a", "b"};
  Basis b(4, labels);
  std::vector<Tensor2> delta(3, Tensor2(QQ));
  delta[0].add({0, 0}, Scalar::one(QQ));
  for (int i = 1; i < 3; ++i) delta[i].add({i, 0}, Scalar::one(QQ)), delta[i].add({0, i}, Scalar::one(QQ));
  auto h = build_J(GradedCoalgebra(QQ, b, delta, true), 4);
  EXPECT_TRUE(check_axioms(h).ok());
  EXPECT_EQ(h.basis().dim(4), 4);
  EXPECT_EQ(primitives(h, 2).size(), 2u);
}

TEST(BuildJ, S1WedgeCP2IsH1) {
  auto j = build_J(s1_wedge_cp2(), 7);
  auto h1 = gallery_build("H1", 2, 7).bialgebra();
  EXPECT_TRUE(same_structure_constants(j, h1));
  EXPECT_EQ(j.basis(), h1.basis());
}

TEST(BuildJ, RejectsNonCocommutative) {
  auto c = gallery_build("loops-cp2", 2, 6).bialgebra().coalgebra();
  EXPECT_THROW(build_J(c, 6), DomainError);
}

TEST(BuildJ, ComponentsMatchSurjectionSum) {
  std::vector<GradedCoalgebra> inputs = {
      divided_power_coalgebra(F2, "t", 1, 8),
      s1_wedge_cp2(),
      dualize_algebra(polynomial_algebra(QQ, {{"a", 1}, {"b", 2}}, 8)),
      dualize_algebra(polynomial_algebra(Field::prime(3), {{"a", 1}, {"c", 2}}, 8)),
  };
  for (const auto& c : inputs) {
    const int n = std::min(c.bound(), 7);
    auto j = build_J(c, n);
    const auto& ws = *j.words();
    for (int i = 0; i < j.basis().size(); ++i) {
      const Word& w = ws.words[i];
      // Split Δ(w) by word lengths and compare each piece.
      std::map<std::pair<int, int>, WordTensor> pieces;
      for (const auto& [k, s] : j.coalgebra().coproduct(i)) {
        const Word& u = ws.words[k.first];
        const Word& v = ws.words[k.second];
        pieces.try_emplace({static_cast<int>(u.size()), static_cast<int>(v.size())}, WordTensor(c.field()))
            .first->second.add({u, v}, s);
      }
      const int len = static_cast<int>(w.size());
      for (int l = 0; l <= len; ++l)
        for (int m = len - l; m <= len; ++m) {
          WordTensor expect = coproduct_component_via_pairs(c, w, l, m);
          auto it = pieces.find({l, m});
          WordTensor got = it == pieces.end() ? WordTensor(c.field()) : it->second;
          EXPECT_EQ(got, expect) << j.basis().label(i) << " (" << l << "," << m << ")";
        }
    }
  }
}

TEST(BuildJ, LettersFormASubcoalgebraIsomorphicToC) {
  auto c = divided_power_coalgebra(F2, "t", 1, 8);
  auto j = build_J(c, 8);
  const auto& ws = *j.words();
  for (int i = 1; i < c.basis().size(); ++i) {
    Tensor2 mapped(F2);
    auto to_j = [&](int k) { return k == 0 ? 0 : ws.index_of({k - 1}); };
    for (const auto& [k, s] : c.coproduct(i)) mapped.add({to_j(k.first), to_j(k.second)}, s);
    EXPECT_EQ(j.coalgebra().coproduct(ws.index_of({i - 1})), mapped);
  }
}

TEST(BuildJ, QIsCBarAsVModule) {
  auto c = divided_power_coalgebra(F2, "t", 1, 12);
  auto j = build_J(c, 12);
  auto q = indecomposables_Q(j);
  EXPECT_EQ(classify(*q.v_module), classify(verschiebung_module(c)));
  auto h1 = build_J(s1_wedge_cp2(), 7);
  EXPECT_EQ(classify(*indecomposables_Q(h1).v_module), classify(verschiebung_module(s1_wedge_cp2())));
}

TEST(BuildJvee, ShuffleWhenProductIsZero) {
  for (int degree : {1, 2}) {
    MonomialAlgebraPresentation p;
    p.field = QQ;
    const int a = p.add_generator("a", degree);
    const int b = p.add_generator("b", degree + 2);
    p.add_power(a, 2);
    p.add_power(b, 2);
    p.add_pair(a, b);
    auto h = build_Jvee(build_algebra(p, 8), 8);
    auto prod = h.multiply(word(h, {0}), word(h, {1}));
    const std::string sign = degree % 2 ? "-1" : "1";
    EXPECT_EQ(by_label(h, prod), (std::map<std::string, std::string>{{"[a|b]", "1"}, {"[b|a]", sign}}));
  }
}

TEST(BuildJvee, OverlapSurvivesModTwo) {
  auto h = gallery_build("loops-cp2", 2, 8).bialgebra();
  auto prod = h.multiply(word(h, {0}), word(h, {0}));
  EXPECT_EQ(format_element(h.basis(), prod), "[y^2]");
  // y·y² = 0 in A, so the overlap term of [y]*[y^2] drops.
  auto prod2 = h.multiply(word(h, {0}), word(h, {1}));
  EXPECT_EQ(by_label(h, prod2), (std::map<std::string, std::string>{{"[y|y^2]", "1"}, {"[y^2|y]", "1"}}));
}

TEST(BuildJvee, ThirteenTerms) {
  auto a = polynomial_algebra(QQ, {{"w", 2}, {"x", 2}, {"y", 2}, {"z", 2}}, 8);
  auto h = build_Jvee(a, 8);
  auto prod = h.multiply(word(h, {0, 1}), word(h, {2, 3}));
  std::map<std::string, std::string> expect;
  for (const char* t : {"[w|x|y|z]", "[w|y|x|z]", "[w|y|z|x]", "[y|w|x|z]", "[y|w|z|x]", "[y|z|w|x]", "[w|x*y|z]",
                        "[w|y|x*z]", "[w*y|x|z]", "[w*y|z|x]", "[y|w|x*z]", "[y|w*z|x]", "[w*y|x*z]"})
    expect[t] = "1";
  EXPECT_EQ(by_label(h, prod), expect);
}

TEST(BuildJvee, AxiomsAndGradedCommutativity) {
  EXPECT_TRUE(check_axioms(gallery_build("loops-cp2", 2, 8).bialgebra()).ok());
  EXPECT_TRUE(check_axioms(gallery_build("qsym", 0, 10).bialgebra()).ok());
  EXPECT_TRUE(check_axioms(gallery_build("qsym", 3, 10).bialgebra()).ok());
  // Odd letters over Q exercise the Koszul sign in the quasi-shuffle.
  auto h = build_Jvee(polynomial_algebra(QQ, {{"a", 1}, {"b", 2}, {"c", 3}}, 7), 7);
  auto rep = check_axioms(h);
  EXPECT_TRUE(rep.ok()) << rep.to_string(h.basis());
  EXPECT_TRUE(rep.passed("commutativity"));
}

TEST(BuildJvee, RejectsNonCommutative) {
  MonomialAlgebraPresentation p;
  p.commutative = false;
  p.add_generator("a", 1);
  p.add_generator("b", 1);
  EXPECT_THROW(build_Jvee(build_algebra(p, 4), 4), DomainError);
}

TEST(BuildJvee, PoincareSeriesIsGeometric) {
  std::vector<GradedAlgebra> inputs = {truncated_polynomial(F2, "y", 2, 2, 12), truncated_polynomial(QQ, "t", 2, -1, 12),
                                       polynomial_algebra(Field::prime(3), {{"a", 1}, {"b", 2}}, 12)};
  for (const auto& a : inputs) {
    auto h = build_Jvee(a, 12);
    TruncatedSeries bar = a.basis().reduced_space(a.field()).series();
    EXPECT_EQ(h.basis().space(a.field()).series(), series_inverse(TruncatedSeries::one(12) - bar));
  }
}

TEST(Duality, DualOfJIsJveeOfDual) {
  std::mt19937 rng(20240611);
  const std::vector<Field> fields = {F2, F2, F2, F2, Field::prime(3), Field::prime(3), Field::prime(5), QQ, QQ, QQ};
  for (const auto& f : fields) {
    GradedCoalgebra c = dualize_algebra(random_commutative(f, rng, 7));
    auto lhs = dualize_hopf(build_J(c, 7));
    auto rhs = build_Jvee(dualize_coalgebra(c), 7);
    EXPECT_TRUE(same_structure_constants(lhs, rhs)) << f.name();
  }
}
