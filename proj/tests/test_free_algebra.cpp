#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace gts;

namespace {

const FieldConfig& F3 = FieldConfig::get(3, 1);

GVariable v(int i) { return {VarKind::V, i}; }
GVariable w(int i) { return {VarKind::W, i}; }
GVariable x(int i) { return {VarKind::X, i}; }
GVariable y(int i) { return {VarKind::Y, i}; }

}  // namespace

TEST_CASE("variable order") {
  CHECK(v(1) < v(2));
  CHECK(v(99) < w(1));
  CHECK(w(5) < x(1));
  CHECK(x(7) < y(1));
}

TEST_CASE("word bidegrees and degrees") {
  CHECK(word_bidegree({v(1), w(1)}) == Bidegree{1, 0});
  CHECK(word_bidegree({x(1), y(1)}) == Bidegree{1, 0});
  CHECK(deg_in_word({x(1), x(1), y(1)}, x(1)) == 2);
  CHECK(word_z2_parity({x(1), y(1)}) == 0);
}

TEST_CASE("parsing basics") {
  GPolynomial f = parse_polynomial("v1^2*w1", F3);
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms().begin()->first == GWord{v(1), v(1), w(1)});
  CHECK(f.terms().begin()->second.is_one());

  // odd-odd bracket expands with a plus sign
  CHECK(parse_polynomial("[x1,y2]", F3) ==
        GPolynomial::word(F3, {x(1), y(2)}, FieldElement::one(F3)) +
            GPolynomial::word(F3, {y(2), x(1)}, FieldElement::one(F3)));

  CHECK_THROWS_AS(parse_polynomial("v1*(", F3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z1", F3), ParseError);
  CHECK_THROWS_AS(parse_polynomial("v1^", F3), ParseError);
  CHECK(parse_polynomial("0", F3).is_zero());
  CHECK(parse_polynomial("v1 - v1", F3).is_zero());
  CHECK(parse_polynomial("2*v1 + v1", F3).is_zero());  // 3 = 0
}

TEST_CASE("parse error carries a position") {
  try {
    parse_polynomial("v1*(w1", F3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("extension field coefficients in brackets") {
  const FieldConfig& F9 = FieldConfig::get(3, 2);
  GPolynomial f = parse_polynomial("[2,1]*v1", F9);
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms().begin()->second == FieldElement::from_coeffs(F9, {2, 1}));
  // and a bracket of variables still parses as a commutator
  CHECK(parse_polynomial("[v1,v2]", F9) ==
        GPolynomial::word(F9, {v(1), v(2)}, FieldElement::one(F9)) -
            GPolynomial::word(F9, {v(2), v(1)}, FieldElement::one(F9)));
}

TEST_CASE("commutators by parity") {
  auto P = [&](const GVariable& z) { return GPolynomial::variable(F3, z); };
  CHECK(graded_commutator(P(v(1)), P(v(2))) == parse_polynomial("v1*v2 - v2*v1", F3));
  CHECK(graded_commutator(P(x(1)), P(x(2))) == parse_polynomial("x1*x2 + x2*x1", F3));
  CHECK(graded_commutator(P(v(1)), P(x(1))) == parse_polynomial("v1*x1 - x1*v1", F3));
  // left-normed bracket in the parser
  CHECK(parse_polynomial("[v1,v2,v3]", F3) ==
        graded_commutator(graded_commutator(P(v(1)), P(v(2))), P(v(3))));
}

TEST_CASE("print-parse round trip on random polynomials") {
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    GPolynomial f = testing::random_polynomial(F3, rng, 5, 3, 4);
    CHECK(parse_polynomial(f.to_string(), F3) == f);
  }
  const FieldConfig& F9 = FieldConfig::get(3, 2);
  SplitMix64 rng9(8);
  for (int i = 0; i < 200; ++i) {
    GPolynomial f = testing::random_polynomial(F9, rng9, 4, 2, 3);
    CHECK(parse_polynomial(f.to_string(), F9) == f);
  }
}

namespace {

EvaluationMap random_map(const std::vector<GVariable>& vars, SplitMix64& rng) {
  SamplerConfig sc;
  sc.nL = sc.nR = 8;
  sc.k = 2;
  sc.richness = 3;
  EvaluationMap em;
  em.field = &F3;
  em.nL = sc.nL;
  em.nR = sc.nR;
  em.k = sc.k;
  for (const auto& z : vars)
    em.images.emplace(z, sample_homogeneous(kind_bidegree(z.kind), F3, sc, rng));
  return em;
}

}  // namespace

TEST_CASE("substitution is an algebra homomorphism") {
  SplitMix64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    GPolynomial f = testing::random_polynomial(F3, rng, 3, 2, 3);
    GPolynomial g = testing::random_polynomial(F3, rng, 3, 2, 3);
    GPolynomial sum = f + g;
    GPolynomial prod = f * g;
    std::vector<GVariable> vars = sum.variables();
    for (const auto& z : prod.variables())
      if (std::find(vars.begin(), vars.end(), z) == vars.end()) vars.push_back(z);
    EvaluationMap em = random_map(vars, rng);
    CHECK(substitute(sum, em) == substitute(f, em) + substitute(g, em));
    CHECK(substitute(prod, em) == substitute(f, em) * substitute(g, em));
  }
}

TEST_CASE("substitution turns graded commutators into supercommutators") {
  SplitMix64 rng(10);
  for (int i = 0; i < 300; ++i) {
    // parity-homogeneous inputs: single words
    GWord wf, wg;
    for (int l = 0; l < 1 + static_cast<int>(rng.below(3)); ++l)
      wf.push_back({static_cast<VarKind>(rng.below(4)), 1 + static_cast<int>(rng.below(2))});
    for (int l = 0; l < 1 + static_cast<int>(rng.below(3)); ++l)
      wg.push_back({static_cast<VarKind>(rng.below(4)), 1 + static_cast<int>(rng.below(2))});
    GPolynomial f = GPolynomial::word(F3, wf, FieldElement::one(F3));
    GPolynomial g = GPolynomial::word(F3, wg, FieldElement::one(F3));
    std::vector<GVariable> vars = (f * g).variables();
    EvaluationMap em = random_map(vars, rng);
    CHECK(substitute(graded_commutator(f, g), em) ==
          supercommutator(substitute(f, em), substitute(g, em)));
  }
}

TEST_CASE("substitution respects bidegrees") {
  SplitMix64 rng(12);
  for (int i = 0; i < 200; ++i) {
    GWord word;
    for (int l = 0; l < 1 + static_cast<int>(rng.below(4)); ++l)
      word.push_back({static_cast<VarKind>(rng.below(4)), 1 + static_cast<int>(rng.below(2))});
    GPolynomial f = GPolynomial::word(F3, word, FieldElement::one(F3));
    EvaluationMap em = random_map(f.variables(), rng);
    CHECK(substitute(f, em).is_homogeneous(word_bidegree(word)));
  }
}

TEST_CASE("substitution errors") {
  GPolynomial f = parse_polynomial("v1*w1", F3);
  EvaluationMap em;
  em.field = &F3;
  em.nL = em.nR = 6;
  em.k = 2;
  em.images.emplace(v(1), TensorElement::unit(F3, 6, 6, 2));
  CHECK_THROWS_AS(substitute(f, em), Error);  // w1 missing
  // non-homogeneous image rejected
  EvaluationMap bad = em;
  TensorElement mixed = TensorElement::unit(F3, 6, 6, 2) +
                        TensorElement::single(F3, 6, 6, 2, TensorBlade{Blade({1}), Blade()},
                                              FieldElement::one(F3));
  bad.images.emplace(w(1), mixed);
  CHECK_THROWS_AS(substitute(f, bad), Error);
}

TEST_CASE("trivial substitution examples") {
  GPolynomial f = GPolynomial::variable(F3, v(1));
  EvaluationMap em;
  em.field = &F3;
  em.nL = em.nR = 4;
  em.k = 1;
  em.images.emplace(v(1), TensorElement::unit(F3, 4, 4, 1));
  CHECK(substitute(f, em) == TensorElement::unit(F3, 4, 4, 1));
}

TEST_CASE("polynomial text form") {
  CHECK(parse_polynomial("v1*v2 - v2*v1", F3).to_string() == "v1*v2 - v2*v1");
  CHECK(parse_polynomial("2*w1", F3).to_string() == "-w1");  // 2 = -1 over GF(3)
  CHECK(GPolynomial::zero(F3).to_string() == "0");
  CHECK(GPolynomial::unit(F3).to_string() == "1");
}
