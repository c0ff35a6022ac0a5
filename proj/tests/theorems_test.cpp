#include <gtest/gtest.h>

#include "hopf/gallery.hpp"
#include "hopf/theorems.hpp"

using namespace hopf;

namespace {

BialgebraData gallery(const std::string& name, int p = 2, int n = 12) { return *gallery_build(name, p, n).hopf; }

Element sum(std::initializer_list<Element> xs) {
  Element r = *xs.begin();
  for (auto it = xs.begin() + 1; it != xs.end(); ++it) r += *it;
  return r;
}

Decomposition single_chain(int n, int j, std::uint32_t p, int bound) {
  Decomposition d(p, bound);
  d.add(Summand{n, j, false});
  return d;
}

std::vector<Vector> identity_q_spec(const BialgebraData& source, const BialgebraData& target) {
  // Letters of source map to the Q class of the same-position letter of target.
  Indecomposables qt = indecomposables_Q(target);
  const auto& sw = *source.words();
  const auto& tw = *target.words();
  std::vector<Vector> out;
  for (std::size_t l = 0; l < sw.letter_labels.size(); ++l) {
    const int d = sw.letter_degrees[l];
    out.push_back(qt.project(d, target.e(tw.letter_index(static_cast<int>(l)))));
  }
  return out;
}

GradedAlgebra poly(const Field& f, int degree, int cap, int bound) { return truncated_polynomial(f, "y", degree, cap, bound); }

}  // namespace

// ---------------------------------------------------------------- splitness

TEST(Split, LettersSplitH1) {
  auto h1 = gallery("H1");
  auto cert = is_split(h1);
  ASSERT_TRUE(cert.split);
  EXPECT_TRUE(verify_section(h1, indecomposables_Q(h1), *cert.section));
}

TEST(Split, H2HasNoSectionThroughDegreeFour) {
  auto cert = is_split(gallery("H2"));
  EXPECT_FALSE(cert.split);
  EXPECT_EQ(cert.failure_degree, 4);
}

TEST(Split, TrivialVOnQAndHIsSplit) {
  auto cert = is_split(gallery("witt-1-0"));
  EXPECT_TRUE(cert.split);
}

TEST(Split, WittFixturesAreSplit) {
  for (auto name : {"witt-1-1", "witt-1-2", "loops-cp3", "nsym"}) EXPECT_TRUE(is_split(gallery(name)).split) << name;
}

TEST(Split, OmegaCFailsLikeH2) {
  // Δz carries x²⊗x², so V(z) = x² is decomposable while V vanishes on Q.
  auto cert = is_split(gallery("omega-c"));
  EXPECT_FALSE(cert.split);
  EXPECT_EQ(cert.failure_degree, 4);
}

TEST(Split, RejectsNonCocommutative) { EXPECT_THROW(is_split(gallery("qsym")), DomainError); }

// ---------------------------------------------------------------- lifts

TEST(Lift, PrimitiveInputComesBack) {
  auto h = gallery("witt-1-1");
  EXPECT_EQ(find_primitive_lift(h, h.e("[x]")), h.e("[x]"));
}

TEST(Lift, LoopsCp3Generator) {
  auto h = gallery("loops-cp3");
  Element x = h.e("[y3]");
  Element lift = find_primitive_lift(h, x);
  EXPECT_TRUE(is_primitive(h, lift));
  Indecomposables q = indecomposables_Q(h.algebra());
  EXPECT_TRUE(q.is_decomposable(6, lift - x));
  Element printed = sum({h.e("[y3]"), h.e("[y1|y2]"), h.e("[y1|y1|y1]")});
  EXPECT_TRUE(is_primitive(h, printed));
}

TEST(Lift, RequiresVanishingV) {
  auto h = gallery("H2");
  EXPECT_THROW(find_primitive_lift(h, h.e("[z]")), DomainError);
}

TEST(Lift, UnbalancedCoproductHasNoLift) {
  // Over Q, Δw ∋ x⊗y alone: xy and yx bring x⊗y and y⊗x together.
  FreePresentation p;
  p.field = Field::rationals();
  const int x = p.add_generator("x", 2);
  const int y = p.add_generator("y", 4);
  const int w = p.add_generator("w", 6);
  p.coproducts[w] = primitive_word_tensor(p.field, w);
  p.coproducts[w].add({{x}, {y}}, Scalar::one(p.field));
  auto h = build_bialgebra(p, 6, false);
  ASSERT_TRUE(check_axioms(h).ok());
  EXPECT_THROW(find_primitive_lift(h, h.e("[w]")), SearchFailure);
}

TEST(Lift, RationalLiftHalvesTheSquare) {
  FreePresentation p;
  p.field = Field::rationals();
  const int x = p.add_generator("x", 2);
  const int y = p.add_generator("y", 4);
  p.coproducts[y] = primitive_word_tensor(p.field, y);
  p.coproducts[y].add({{x}, {x}}, Scalar::one(p.field));
  auto h = build_bialgebra(p, 4);
  Element lift = find_primitive_lift(h, h.e("[y]"));
  EXPECT_EQ(format_element(h.basis(), lift), format_element(h.basis(), h.e("[y]") - h.e("[x|x]").scaled(Scalar::from_rational(p.field, Rational(1, 2)))));
}

// ---------------------------------------------------------------- H(M)

TEST(ConstructH, SingleGeneratorIsPrimitive) {
  auto h = construct_H(single_chain(1, 0, 2, 8), 8);
  ASSERT_EQ(h.words()->letter_count(), 1);
  EXPECT_TRUE(is_primitive(h, h.e("[g1_0]")));
}

TEST(ConstructH, LengthTwoChain) {
  auto h = construct_H(single_chain(1, 1, 2, 8), 8);
  EXPECT_EQ(format_tensor(h.basis(), h.coproduct(h.e("[g1_1]"))), "[g1_1]⊗[] + [g1_0]⊗[g1_0] + []⊗[g1_1]");
}

TEST(ConstructH, LengthThreeChainMatchesWittFixture) {
  auto h = construct_H(single_chain(1, 2, 2, 12), 12);
  EXPECT_TRUE(check_axioms(h).ok());
  auto q = indecomposables_Q(h);
  EXPECT_EQ(classify(*q.v_module).to_string(), "{(1,2)}");
  VModule v = verschiebung_module(h.coalgebra());
  EXPECT_EQ(apply_V(h, v, h.e("[g1_2]")), h.e("[g1_1]"));
  EXPECT_EQ(apply_V(h, v, h.e("[g1_1]")), h.e("[g1_0]"));

  auto target = gallery("witt-1-2");
  auto w = hopf_morphism_search(h, target, identity_q_spec(h, target));
  EXPECT_TRUE(w.is_iso_on_Q);
  EXPECT_TRUE(w.is_iso);
  EXPECT_TRUE(is_coalgebra_morphism(w.morphism));
}

TEST(ConstructH, FromVModuleWithSeveralSummands) {
  auto m = direct_sum(standard_v_summand(1, 1, 2, 10), standard_v_summand(3, 0, 2, 10));
  m = direct_sum(m, standard_v_summand(2, 2, 2, 10));
  auto h = construct_H(m);
  EXPECT_TRUE(check_axioms(h).ok());
  EXPECT_EQ(classify(*indecomposables_Q(h).v_module), classify(m));
  EXPECT_TRUE(is_split(h).split);
}

TEST(ConstructH, OddPrimeChain) {
  // M(2,1) at p = 3: generators in degrees 2 and 6.
  auto h = construct_H(single_chain(2, 1, 3, 12), 12);
  EXPECT_TRUE(check_axioms(h).ok());
  // Degree 18 is past the bound, so the chain is only known to reach length 1.
  EXPECT_EQ(classify(*indecomposables_Q(h).v_module).to_string(), "{(2,≥1)}");
}

// ---------------------------------------------------------------- morphism search

TEST(MorphismSearch, IdentityOnWittOneOne) {
  auto h = gallery("witt-1-1");
  auto w = hopf_morphism_search(h, h, identity_q_spec(h, h));
  EXPECT_TRUE(w.is_iso);
  for (int i = 0; i < h.basis().size(); ++i) EXPECT_EQ(w.morphism.images[i], h.e(i));
}

TEST(MorphismSearch, PrimitiveGeneratorIntoLoopsCp3) {
  FreePresentation p;
  p.field = Field::prime(2);
  p.add_generator("z", 6);
  auto source = build_bialgebra(p, 12);
  auto target = gallery("loops-cp3");
  Indecomposables qt = indecomposables_Q(target);
  std::vector<Vector> spec{qt.project(6, target.e("[y3]"))};
  auto w = hopf_morphism_search(source, target, spec);
  EXPECT_TRUE(is_primitive(target, w.generator_images[0]));
  EXPECT_EQ(qt.project(6, w.generator_images[0]), spec[0]);
  EXPECT_TRUE(is_coalgebra_morphism(w.morphism));
  EXPECT_FALSE(w.is_iso);
}

TEST(MorphismSearch, ObstructionIsReported) {
  // T(z), z primitive in degree 4, cannot hit z in H2 modulo decomposables.
  FreePresentation p;
  p.field = Field::prime(2);
  p.add_generator("z", 4);
  auto source = build_bialgebra(p, 8);
  auto target = gallery("H2", 2, 8);
  Indecomposables qt = indecomposables_Q(target);
  try {
    hopf_morphism_search(source, target, {qt.project(4, target.e("[z]"))});
    FAIL() << "expected a search failure";
  } catch (const SearchFailure& e) {
    EXPECT_EQ(e.degree(), 4);
  }
}

TEST(MorphismSearch, BacktracksPastTheLeastSolution) {
  // Source T(a, b), Δb ∋ a⊗a. Target T(x, c, w) with u = c + x² primitive and
  // Δ̄w = u⊗u. The least image of a is c, after which b has no image; the
  // search has to return to a and take c + x².
  const Field f = Field::prime(2);
  FreePresentation s;
  s.field = f;
  const int a = s.add_generator("a", 2);
  const int b = s.add_generator("b", 4);
  s.coproducts[b] = primitive_word_tensor(f, b);
  s.coproducts[b].add({{a}, {a}}, Scalar::one(f));
  auto source = build_bialgebra(s, 8);

  FreePresentation t;
  t.field = f;
  const int x = t.add_generator("x", 1);
  const int c = t.add_generator("c", 2);
  const int w = t.add_generator("w", 4);
  t.coproducts[w] = primitive_word_tensor(f, w);
  for (const auto& u : {Word{c}, Word{x, x}})
    for (const auto& v : {Word{c}, Word{x, x}}) t.coproducts[w].add({u, v}, Scalar::one(f));
  auto target = build_bialgebra(t, 8);
  ASSERT_TRUE(check_axioms(target).ok());

  Indecomposables qt = indecomposables_Q(target);
  auto wit = hopf_morphism_search(source, target, {qt.project(2, target.e("[c]")), qt.project(4, target.e("[w]"))});
  EXPECT_EQ(wit.generator_images[0], target.e("[c]") + target.e("[x|x]"));
  EXPECT_GT(wit.evaluations, 2);
  EXPECT_TRUE(is_coalgebra_morphism(wit.morphism));
}

TEST(MorphismSearch, RejectsNonVMapQSpec) {
  auto h1 = gallery("H1", 2, 8);
  auto h2 = gallery("H2", 2, 8);
  EXPECT_THROW(hopf_morphism_search(h1, h2, identity_q_spec(h1, h2)), ValidationError);
}

TEST(MorphismSearch, SplitTheoremOnGalleryCoalgebras) {
  std::vector<std::pair<GradedCoalgebra, int>> coalgebras;
  coalgebras.emplace_back(divided_power_coalgebra(Field::prime(2), "t", 2, 12), 12);
  // Degree-one letters grow like 2^n; keep the bound small.
  coalgebras.emplace_back(divided_power_coalgebra(Field::prime(2), "t", 1, 9), 9);
  // S¹∨CP² style: x, y primitive, z with Δz ∋ y⊗y.
  {
    Basis b(12, {{"1"}, {"x"}, {"y"}, {}, {"z"}, {}, {}, {}, {}, {}, {}, {}, {}});
    const Field f = Field::prime(2);
    std::vector<Tensor2> delta(4, Tensor2(f));
    delta[0].add({0, 0}, Scalar::one(f));
    for (int i = 1; i < 4; ++i) {
      delta[i].add({i, 0}, Scalar::one(f));
      delta[i].add({0, i}, Scalar::one(f));
    }
    delta[3].add({2, 2}, Scalar::one(f));
    coalgebras.emplace_back(GradedCoalgebra(f, b, std::move(delta), true), 12);
  }
  for (const auto& [c, bound] : coalgebras) {
    BialgebraData j = build_J(c, bound);
    auto qj = indecomposables_Q(j);
    BialgebraData hm = construct_H(*qj.v_module);
    auto qh = indecomposables_Q(hm);
    auto iso = find_vmodule_iso(*qh.v_module, *qj.v_module, 7);
    ASSERT_TRUE(iso.has_value());
    auto w = hopf_morphism_search(hm, j, q_spec_from_map(hm, qh, *iso));
    EXPECT_TRUE(w.is_iso);
  }
}

// ---------------------------------------------------------------- iso tests

TEST(IsoTest, SameAlgebra) {
  auto a = poly(Field::prime(2), 2, 2, 12);
  EXPECT_TRUE(iso_test_jvee(a, a).is_true());
}

TEST(IsoTest, TruncationHeightsDiffer) {
  // F_2[y]/(y³) against F_2[u]/(u²) ⊗ F_2[v]/(v²), |u| = 2, |v| = 4: same dims.
  auto a = poly(Field::prime(2), 2, 2, 12);
  MonomialAlgebraPresentation p;
  p.field = Field::prime(2);
  p.commutative = true;
  const int u = p.add_generator("u", 2);
  const int v = p.add_generator("v", 4);
  p.add_power(u, 2);
  p.add_power(v, 2);
  auto b = build_algebra(p, 12);
  auto r = iso_test_jvee(a, b);
  EXPECT_EQ(r.verdict, Tri::No);
  EXPECT_EQ(r.left->to_string(), "{(2,1)}");
  EXPECT_NE(*r.left, *r.right);
}

TEST(IsoTest, CharZeroComparesDimensions) {
  const Field q = Field::rationals();
  auto a = poly(q, 2, 2, 12);
  MonomialAlgebraPresentation p;
  p.field = q;
  p.commutative = true;
  const int u = p.add_generator("u", 2);
  const int v = p.add_generator("v", 4);
  p.add_power(u, 2);
  p.add_power(v, 2);
  p.add_pair(u, v);
  auto b = build_algebra(p, 12);
  EXPECT_TRUE(iso_test_jvee(a, b).is_true());
}

TEST(IsoTest, CautionaryPairDiffersOnQ) {
  auto r = iso_test_hopf(gallery("H1"), gallery("H2"));
  EXPECT_EQ(r.verdict, Tri::No);
  EXPECT_EQ(r.evidence, "Q V-modules differ: {(1,0),(2,1)} vs {(1,0),(2,0),(4,0)}");
}

TEST(IsoTest, IsoImpliesEqualSeriesAndQ) {
  auto a = poly(Field::prime(2), 2, 2, 10);
  auto b = poly(Field::prime(2), 2, 2, 10);
  ASSERT_TRUE(iso_test_jvee(a, b).is_true());
  auto ja = build_Jvee(a, 10), jb = build_Jvee(b, 10);
  EXPECT_EQ(ja.basis().space(ja.field()).series().coefficients(), jb.basis().space(jb.field()).series().coefficients());
  EXPECT_EQ(indecomposables_Q(ja.algebra()).space, indecomposables_Q(jb.algebra()).space);
}

TEST(IsoTest, DualVariantOnCoalgebras) {
  auto c = divided_power_coalgebra(Field::prime(2), "t", 2, 12);
  EXPECT_TRUE(iso_test_j(c, c).is_true());
}

// ---------------------------------------------------------------- primitive generation

TEST(PrimitiveGeneration, TensorAlgebraOnAPrimitive) {
  auto r = is_primitively_generated(gallery("witt-1-0"));
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.by_split);
}

TEST(PrimitiveGeneration, CautionaryPair) {
  auto r1 = is_primitively_generated(gallery("H1"));
  EXPECT_FALSE(r1.verdict);
  EXPECT_FALSE(r1.v_trivial_on_Q);
  auto r2 = is_primitively_generated(gallery("H2"));
  EXPECT_FALSE(r2.verdict);
  EXPECT_FALSE(r2.split.split);
}

TEST(PrimitiveGeneration, RoutesAgreeOnCocommutativeGallery) {
  for (const auto& name : gallery_names()) {
    auto obj = gallery_build(name);
    if (!obj.hopf || !obj.hopf->is_cocommutative()) continue;
    EXPECT_NO_THROW(is_primitively_generated(*obj.hopf)) << name;
  }
}

// ---------------------------------------------------------------- Borel

TEST(Borel, PolynomialInput) {
  auto d = borel_decomposition(poly(Field::prime(2), 2, -1, 12));
  EXPECT_EQ(d.to_string(), "A(2,≥2)");
}

TEST(Borel, QuasiShuffleOnTruncatedPolynomial) {
  auto h8 = build_Jvee(poly(Field::prime(2), 2, 2, 8), 8);
  auto d8 = borel_decomposition(h8);
  EXPECT_EQ(d8.multiplicity({2, 1, false}), 1);
  EXPECT_EQ(d8.multiplicity({4, 1, true}), 1);

  auto h16 = build_Jvee(poly(Field::prime(2), 2, 2, 16), 16);
  auto d16 = borel_decomposition(h16);
  EXPECT_EQ(d16.multiplicity({2, 1, false}), 1);
  EXPECT_EQ(d16.multiplicity({4, 1, false}), 1);
  EXPECT_EQ(d16.series().coefficients(), (h16.basis().reduced_space(h16.field()).series() + TruncatedSeries::one(16)).coefficients());
}

TEST(Borel, ExteriorFactorAtOddPrime) {
  MonomialAlgebraPresentation p;
  p.field = Field::prime(3);
  p.commutative = true;
  const int x = p.add_generator("x", 3);
  p.add_generator("y", 2);
  p.add_power(x, 2);
  auto d = borel_decomposition(build_algebra(p, 12));
  EXPECT_EQ(d.multiplicity({3, 0, false}), 1);
  EXPECT_EQ(d.multiplicity({2, 1, true}), 1);
}

TEST(Borel, RejectsAlgebraWithNoHopfStructure) {
  // F_2[y, z]/(yz): two polynomial generators would need yz ≠ 0.
  MonomialAlgebraPresentation p;
  p.field = Field::prime(2);
  p.commutative = true;
  const int y = p.add_generator("y", 2);
  const int z = p.add_generator("z", 2);
  p.add_pair(y, z);
  EXPECT_THROW(borel_decomposition(build_algebra(p, 8)), InvariantViolation);
}

// ---------------------------------------------------------------- polynomial criterion

TEST(Polynomial, PolynomialRingAtTwoAndThree) {
  for (std::uint32_t p : {2u, 3u}) EXPECT_TRUE(polynomial_criterion(poly(Field::prime(p), 2, -1, 12)).polynomial) << p;
}

TEST(Polynomial, TruncatedFailsAtDegreeFour) {
  auto v = polynomial_criterion(poly(Field::prime(2), 2, 2, 12));
  EXPECT_FALSE(v.polynomial);
  EXPECT_EQ(v.failure_degree, 4);
  EXPECT_EQ(v.reason, "F(y^2) = 0");
}

TEST(Polynomial, OddDegreeFailsAtOddPrime) {
  MonomialAlgebraPresentation p;
  p.field = Field::prime(3);
  p.commutative = true;
  p.add_power(p.add_generator("x", 1), 2);
  EXPECT_FALSE(polynomial_criterion(build_algebra(p, 6)).polynomial);
}

TEST(Polynomial, IntegralFormOfYZ) {
  MonomialAlgebraPresentation p;
  p.commutative = true;
  const int y = p.add_generator("y", 2);
  const int z = p.add_generator("z", 4);
  p.add_pair(y, z);
  for (const auto& v : polynomial_criterion_integral(p, 12, {2, 3, 5})) EXPECT_TRUE(v.polynomial) << v.prime;
}

TEST(Polynomial, PolynomialImpliesOnlyUnboundedFactors) {
  for (std::uint32_t p : {2u, 3u}) {
    auto a = poly(Field::prime(p), 2, -1, 12);
    ASSERT_TRUE(polynomial_criterion(a).polynomial);
    auto d = borel_decomposition(build_Jvee(a, 12));
    for (const auto& [f, m] : d.factors) EXPECT_TRUE(f.at_least) << f.to_string();
  }
}

// ---------------------------------------------------------------- char 0

TEST(Char0, TruncatedPolynomial) {
  auto r = char0_trivialize(poly(Field::rationals(), 2, 2, 10), 10);
  EXPECT_TRUE(r.witness.is_iso);
  EXPECT_TRUE(is_hopf_morphism(r.witness.morphism));
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(r.primitive_dims[d], d == 2 || d == 4 ? 1 : 0);
}

TEST(Char0, PolynomialMatchesCompositionCounts) {
  auto r = char0_trivialize(poly(Field::rationals(), 2, -1, 10), 10);
  EXPECT_TRUE(r.witness.is_iso);
  EXPECT_TRUE(is_hopf_morphism(r.witness.morphism));
  const auto& s = r.witness.morphism.source.basis();
  const auto& t = r.witness.morphism.target.basis();
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(s.dim(d), t.dim(d));
}

TEST(Char0, SquareZeroIsIdentity) {
  auto a = square_zero(poly(Field::rationals(), 2, 3, 10));
  auto r = char0_trivialize(a, 10);
  for (int i = 0; i < r.witness.morphism.source.basis().size(); ++i)
    EXPECT_EQ(r.witness.morphism.images[i], r.witness.morphism.target.e(i));
}

TEST(Char0, RejectsPrimeField) { EXPECT_THROW(char0_trivialize(poly(Field::prime(2), 2, 2, 8), 8), DomainError); }

// ---------------------------------------------------------------- realisations

TEST(Realization, ChainOfLengthThreeHasNoCoalgebra) {
  auto r = find_coalgebra_realization(standard_v_summand(1, 2, 2, 4));
  EXPECT_FALSE(r.coalgebra.has_value());
  EXPECT_EQ(r.unknowns, 2);
  EXPECT_EQ(r.candidates, 4);
}

TEST(Realization, ChainOfLengthTwoIsADividedPowerCoalgebra) {
  auto r = find_coalgebra_realization(standard_v_summand(1, 1, 2, 4));
  ASSERT_TRUE(r.coalgebra.has_value());
  EXPECT_TRUE(check_axioms(*r.coalgebra).ok());
}
