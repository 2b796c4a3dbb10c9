#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace gts;

namespace {

const FieldConfig& F3 = FieldConfig::get(3, 1);

TensorElement blade_el(const FieldConfig& cfg, int nL, int nR, int k, std::vector<int> l,
                       std::vector<int> r, int coeff = 1) {
  return TensorElement::single(cfg, nL, nR, k, TensorBlade{Blade(std::move(l)), Blade(std::move(r))},
                               FieldElement::from_int(cfg, coeff));
}

}  // namespace

TEST_CASE("shape construction matches the displays") {
  // shape 5 at t=1, j=n=0, k=2: e3 (x) e1
  TypeDescriptor d5{5, 0, 0, 1, 2, 0, std::nullopt};
  CHECK(build_type(d5, F3, 6, 6) == blade_el(F3, 6, 6, 2, {3}, {1}));

  // shape 3 at t=2, k=2: e1e3 (x) e1e2 + e2e4 (x) e3e4
  TypeDescriptor d3{3, 0, 0, 2, 2, 0, std::nullopt};
  CHECK(build_type(d3, F3, 8, 8) ==
        blade_el(F3, 8, 8, 2, {1, 3}, {1, 2}) + blade_el(F3, 8, 8, 2, {2, 4}, {3, 4}));

  // shape 9 at alpha=1, t=1: 1 (x) 1 + e3e4 (x) e1e2
  TypeDescriptor d9{9, 0, 0, 1, 2, 0, FieldElement::one(F3)};
  CHECK(build_type(d9, F3, 8, 8) ==
        TensorElement::unit(F3, 8, 8, 2) + blade_el(F3, 8, 8, 2, {3, 4}, {1, 2}));

  // every shape is homogeneous of its kind's bidegree
  for (int id = 1; id <= 10; ++id) {
    TypeDescriptor d{id, 1, 2, 2, 3, 0, std::nullopt};
    if (id == 9 || id == 10) d.alpha = FieldElement::from_int(F3, 2);
    TensorElement val = build_type(d, F3, 16, 16);
    CHECK(val.is_homogeneous(kind_bidegree(d.kind())));
    CHECK(!val.is_zero());
  }
}

TEST_CASE("shape parameter errors") {
  TypeDescriptor bad{3, 0, 0, 4, 2, 0, std::nullopt};  // t > k
  CHECK_THROWS_AS(build_type(bad, F3, 10, 10), Error);
  TypeDescriptor nine{9, 0, 0, 1, 2, 0, std::nullopt};  // missing alpha
  CHECK_THROWS_AS(build_type(nine, F3, 10, 10), Error);
  TypeDescriptor d1{1, 0, 0, 3, 2, 0, std::nullopt};
  CHECK_THROWS_AS(build_type(d1, F3, 4, 20), Error);  // left truncation too small
}

TEST_CASE("calculus items on the pinned examples") {
  // 5.1 at t=2, k=2: square of e3|e1 + e4|e2 is 2 e3e4|e1e2
  CalculusResult r = verify_calculus("5.1", 0, 0, 2, 2, F3);
  CHECK(r.pass);
  CHECK(r.lhs == blade_el(F3, 9, 6, 2, {3, 4}, {1, 2}, 2));

  // 6.1 at even t is the zero case
  CalculusResult r6 = verify_calculus("6.1", 0, 0, 2, 2, F3);
  CHECK(r6.pass);
  CHECK(r6.lhs.is_zero());

  // 1.1 at t=1: single term with coefficient 1
  CalculusResult r1 = verify_calculus("1.1", 0, 0, 1, 2, F3);
  CHECK(r1.pass);
  CHECK(r1.lhs == blade_el(F3, 7, 4, 2, {3, 4}, {1, 2}));
}

TEST_CASE("calculus grid at k = 4 over p in {3, 5}") {
  for (int p : {3, 5}) {
    const FieldConfig& F = FieldConfig::get(p, 1);
    for (const auto& item : calculus_items()) {
      for (int t = 1; t <= 4; ++t) {
        if (item == "9.1" && t > p - 1) continue;
        if (item == "10.1" && t > p) continue;
        for (int j : {0, 3}) {
          for (int n : {0, 3}) {
            CalculusResult res = verify_calculus(item, j, n, t, 4, F);
            if (!res.pass)
              MESSAGE("item ", item, " failed at p=", p, " t=", t, " j=", j, " n=", n);
            CHECK(res.pass);
          }
        }
      }
    }
  }
}

TEST_CASE("calculus parameter validation") {
  CHECK_THROWS_AS(verify_calculus("3.1", 0, 0, 3, 2, F3), Error);   // t > k
  CHECK_THROWS_AS(verify_calculus("9.1", 0, 0, 3, 2, F3), Error);   // t! = 0
  CHECK_THROWS_AS(verify_calculus("10.1", 0, 0, 4, 4, F3), Error);  // (t-1)! = 0
  CHECK_THROWS_AS(verify_calculus("11.1", 0, 0, 1, 2, F3), Error);
  CHECK_THROWS_AS(verify_calculus("1.1", 0, 0, 0, 2, F3), Error);
}

TEST_CASE("suitable assignments pick the documented shapes") {
  // x1 alone, t = 1 odd, no bracket: shape 6
  SuitableAssignment s = build_suitable(parse_sse_monomial("x1"), 2, F3);
  REQUIRE(s.types.size() == 1);
  CHECK(s.types[0].second.type_id == 6);

  // inside a bracket at t = 1 odd: x gets shape 5, y gets shape 7
  s = build_suitable(parse_sse_monomial("[x1,y1]"), 2, F3);
  REQUIRE(s.types.size() == 2);
  CHECK(s.types[0].second.type_id == 5);
  CHECK(s.types[1].second.type_id == 7);

  // w1 y1: disjoint low blocks inside [1, k]
  s = build_suitable(parse_sse_monomial("w1*y1"), 2, F3);
  REQUIRE(s.types.size() == 2);
  CHECK(s.types[0].second.low == 0);
  CHECK(s.types[1].second.low == 1);
  CHECK(s.types[0].second.low_consumption() == 1);

  // total W∪Y degree above k has no assignment
  CHECK_THROWS_AS(build_suitable(parse_sse_monomial("w1*w2*[w3,x1]"), 2, F3), Error);
}

TEST_CASE("suitable shape table") {
  struct Row {
    const char* u;
    const char* var;
    int type_id;
  };
  // t and bracket occupancy drive the choice
  const Row rows[] = {
      {"v1", "v1", 1},          {"[v1,x1]", "v1", 2},    {"w1", "w1", 3},
      {"[w1,x1]", "w1", 4},     {"x1^2", "x1", 5},       {"x1", "x1", 6},
      {"x1*[x1,y1]", "x1", 6},  {"[x1,y1]", "x1", 5},    {"x1^2*[x1,x2]", "x1", 5},
      {"y1^2", "y1", 7},        {"y1", "y1", 8},         {"[y1,y2]", "y1", 7},
      {"y1*[x1,y1]", "y1", 8},
  };
  for (const auto& row : rows) {
    SseMonomial u = parse_sse_monomial(row.u);
    SuitableAssignment s = build_suitable(u, 4, F3);
    bool found = false;
    for (const auto& [z, d] : s.types) {
      if (z.to_string() == row.var) {
        CHECK(d.type_id == row.type_id);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("applying the assignment gives one complete blade") {
  // the pinned examples
  auto check_pinned = [&](const std::string& text, int k, int coeff,
                          std::vector<int> l, std::vector<int> r) {
    SseMonomial u = parse_sse_monomial(text);
    SuitableAssignment s = build_suitable(u, k, F3);
    ApplyOutcome out = apply_suitable(u, s);
    CHECK(out.ok);
    CHECK(out.complete);
    CHECK(out.alpha == FieldElement::from_int(F3, coeff));
    CHECK(out.blade == TensorBlade{Blade(l), Blade(r)});
  };
  check_pinned("x1", 2, 1, {3, 4}, {1});
  check_pinned("w1", 2, 1, {1, 3}, {1, 2});
  check_pinned("v1^2", 2, 2, {3, 4, 5, 6}, {1, 2, 3, 4});

  // the empty monomial evaluates to the unit
  SseMonomial unit = parse_sse_monomial("1");
  ApplyOutcome out = apply_suitable(unit, build_suitable(unit, 2, F3));
  CHECK(out.ok);
  CHECK(out.blade == TensorBlade{});
  CHECK(out.alpha.is_one());
}

TEST_CASE("random monomials all pass the witness construction") {
  SplitMix64 rng(77);
  const int k = 3;
  for (int i = 0; i < 60; ++i) {
    SseMonomial u = testing::random_sse_monomial(rng, 3, k, 6);
    SuitableAssignment s = build_suitable(u, k, F3);
    ApplyOutcome out = apply_suitable(u, s);
    if (!out.ok) MESSAGE("u = ", u.to_string(), ": ", out.detail);
    CHECK(out.ok);
    CHECK(!out.alpha.is_zero());
  }
}

TEST_CASE("associated homomorphism") {
  SseMonomial u = parse_sse_monomial("v1*x1");
  SuitableAssignment s = build_suitable(u, 2, F3);
  // alpha = 0 reproduces the plain assignment
  EvaluationMap phi = s.evaluation_map();
  EvaluationMap psi0 = associated_hom(s, {{1, FieldElement::zero(F3)}});
  CHECK(psi0.images.at({VarKind::V, 1}) == phi.images.at({VarKind::V, 1}));
  // alpha = 1 adds the unit, i.e. the shape-9 value
  EvaluationMap psi1 = associated_hom(s, {{1, FieldElement::one(F3)}});
  CHECK(psi1.images.at({VarKind::V, 1}) ==
        phi.images.at({VarKind::V, 1}) + TensorElement::unit(F3, s.nL, s.nR, s.k));
  CHECK(psi1.images.at({VarKind::V, 1}).is_homogeneous({0, 0}));
  CHECK(psi1.images.at({VarKind::X, 1}) == phi.images.at({VarKind::X, 1}));
}

TEST_CASE("scalar witnesses for p-polynomials") {
  PPolynomial f = PPolynomial::monomial(F3, {{1, 3}}, FieldElement::one(F3));
  auto tuple = ppoly_scalar_witness(f);
  REQUIRE(tuple.has_value());
  REQUIRE(tuple->size() == 1);
  CHECK((*tuple)[0] == FieldElement::one(F3));
  CHECK(f.evaluate({{1, (*tuple)[0]}}) == FieldElement::one(F3));

  // v1^3 + v2^3: first witness in lexicographic order is (0, 1)
  PPolynomial g = PPolynomial::monomial(F3, {{1, 3}}, FieldElement::one(F3)) +
                  PPolynomial::monomial(F3, {{2, 3}}, FieldElement::one(F3));
  auto gt = ppoly_scalar_witness(g);
  REQUIRE(gt.has_value());
  CHECK((*gt)[0].is_zero());
  CHECK((*gt)[1].is_one());

  PPolynomial h = PPolynomial::monomial(F3, {{1, 6}}, FieldElement::one(F3));  // v1^3*v1^3
  auto ht = ppoly_scalar_witness(h);
  REQUIRE(ht.has_value());
  CHECK((*ht)[0].is_one());

  CHECK(!ppoly_scalar_witness(PPolynomial::zero(F3)).has_value());
}

TEST_CASE("g-sum witness checks") {
  // u with no V variables and f = 1 reduces to the plain application
  GsumOutcome out = gsum_check(parse_sse_monomial("x1"), PPolynomial::unit(F3), 2);
  CHECK(out.ok);
  CHECK(out.beta == FieldElement::one(F3));
  CHECK(out.blade == TensorBlade{Blade({3, 4}), Blade({1})});

  // v-monomial with a p-polynomial coefficient
  out = gsum_check(parse_sse_monomial("v1"), PPolynomial::monomial(F3, {{1, 3}}, FieldElement::one(F3)), 2);
  CHECK(out.ok);
  CHECK(out.scalar_value.is_one());

  // bracketed v: the shape-10 pattern
  out = gsum_check(parse_sse_monomial("v1*[v1,x1]"),
                   PPolynomial::monomial(F3, {{1, 3}}, FieldElement::one(F3)), 2);
  CHECK(out.ok);

  // mismatched coefficient variables are rejected
  out = gsum_check(parse_sse_monomial("x1"), PPolynomial::monomial(F3, {{1, 3}}, FieldElement::one(F3)), 2);
  CHECK(!out.ok);
}

TEST_CASE("separation on the pinned pairs") {
  // case 1: lower degree loses support
  SseMonomial u1 = parse_sse_monomial("v1*v2");
  SseMonomial ui = parse_sse_monomial("v1");
  SeparationOutcome sep = separation_check(u1, ui, build_suitable(u1, 2, F3));
  CHECK(sep.pass);
  CHECK(sep.case_label == "case 1");
  CHECK(!sep.psi_zero);
  CHECK(sep.value_max_length < sep.target_length);

  // case 3.1: a W variable moved into a bracket dies under shape 3
  u1 = parse_sse_monomial("w1*x1");
  ui = parse_sse_monomial("[w1,x1]");
  sep = separation_check(u1, ui, build_suitable(u1, 2, F3));
  CHECK(sep.pass);
  CHECK(sep.case_label == "case 3.1");
  CHECK(sep.psi_zero);

  // case 3.2.1: X parity flip dies under shape 6
  u1 = parse_sse_monomial("x1*x2");
  ui = parse_sse_monomial("[x1,x2]");
  sep = separation_check(u1, ui, build_suitable(u1, 2, F3));
  CHECK(sep.pass);
  CHECK(sep.case_label == "case 3.2.1");
  CHECK(sep.psi_zero);

  // equal monomials rejected by the precondition
  CHECK_THROWS_AS(separation_check(u1, u1, build_suitable(u1, 2, F3)), Error);
  // and so is a greater one
  CHECK_THROWS_AS(separation_check(ui, u1, build_suitable(ui, 2, F3)), Error);
}

TEST_CASE("separation across constructed case families") {
  const int k = 3;
  struct Pair {
    const char* u1;
    const char* ui;
    const char* label;
  };
  const Pair pairs[] = {
      {"v1*v2*x1", "v1*x1", "case 1"},
      {"x1^2*y1", "x1^2", "case 1"},
      {"v1^2*x1", "v1*x1^2", "case 2"},
      {"w1*x1*x2", "w1*x1^2", "case 2"},
      {"v1*v2*w1", "w1*[v1,v2]", "case 3.1"},
      {"v9*v10*w1", "w1*[v9,v10]", "case 3.1"},
      {"x1*y1", "[x1,y1]", "case 3.2.1"},
      {"x1^2*x2*y1", "x1^2*[x2,y1]", "case 3.2.1"},
  };
  for (const auto& pr : pairs) {
    SseMonomial u1 = parse_sse_monomial(pr.u1);
    SseMonomial ui = parse_sse_monomial(pr.ui);
    REQUIRE(sse_compare(ui, u1) == Ordering::Less);
    SeparationOutcome sep = separation_check(u1, ui, build_suitable(u1, k, F3));
    if (!sep.pass) MESSAGE("pair (", pr.u1, ", ", pr.ui, "): ", sep.detail);
    CHECK(sep.pass);
    CHECK(sep.case_label == pr.label);
  }
}
