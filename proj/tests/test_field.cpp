#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gts/field.hpp"

using namespace gts;

namespace {

// independent irreducibility check: a quadratic over GF(p) is irreducible
// iff it has no root
bool quadratic_has_root(int c0, int c1, int p) {
  for (int a = 0; a < p; ++a)
    if ((a * a + c1 * a + c0) % p == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("prime field construction") {
  const FieldConfig& f = FieldConfig::get(3, 1);
  CHECK(f.p() == 3);
  CHECK(f.q() == 3);
  CHECK(f.modulus() == std::vector<int>{0, 1});  // modulus t
  CHECK(&FieldConfig::get(3, 1) == &f);          // interned
}

TEST_CASE("GF(9) gets the smallest irreducible quadratic") {
  const FieldConfig& f = FieldConfig::get(3, 2);
  CHECK(f.q() == 9);
  // oracle: scan monic quadratics t^2 + c1 t + c0 in lex order of (c0, c1)
  int oc0 = -1, oc1 = -1;
  for (int c0 = 0; c0 < 3 && oc0 < 0; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      if (!quadratic_has_root(c0, c1, 3)) {
        oc0 = c0;
        oc1 = c1;
        break;
      }
  CHECK(f.modulus() == std::vector<int>{oc0, oc1, 1});
  CHECK(f.modulus() == std::vector<int>{1, 0, 1});  // t^2 + 1
}

TEST_CASE("rejected characteristics") {
  CHECK_THROWS_AS(FieldConfig::get(2, 1), Error);
  CHECK_THROWS_AS(FieldConfig::get(4, 1), Error);
  CHECK_THROWS_AS(FieldConfig::get(9, 1), Error);
  CHECK_THROWS_AS(FieldConfig::get(5, 0), Error);
}

TEST_CASE("GF(3) arithmetic") {
  const FieldConfig& f = FieldConfig::get(3, 1);
  auto two = FieldElement::from_int(f, 2);
  CHECK((two + two) == FieldElement::one(f));
  CHECK(two.inverse() == two);  // 2*2 = 4 = 1
  CHECK((two * two.inverse()).is_one());
  CHECK_THROWS_AS(FieldElement::zero(f).inverse(), Error);
  CHECK(two.to_string() == "2");
}

TEST_CASE("mixed configurations are rejected") {
  auto a = FieldElement::one(FieldConfig::get(3, 1));
  auto b = FieldElement::one(FieldConfig::get(5, 1));
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("extension field element round trip") {
  const FieldConfig& f = FieldConfig::get(3, 2);
  auto e = FieldElement::from_coeffs(f, {2, 1});
  CHECK(e.to_string() == "[2,1]");
  CHECK_THROWS_AS(FieldElement::from_coeffs(f, {1}), Error);
}

namespace {

std::vector<FieldElement> all_elements(const FieldConfig& f) {
  std::vector<FieldElement> out;
  std::vector<std::int64_t> digits(f.m(), 0);
  for (std::int64_t i = 0; i < f.q(); ++i) {
    out.push_back(FieldElement::from_coeffs(f, digits));
    for (int d = 0; d < f.m(); ++d) {
      if (++digits[d] < f.p()) break;
      digits[d] = 0;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("a^q = a exhaustively for q up to 81") {
  for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {5, 1}, {7, 1}, {3, 4}}) {
    const FieldConfig& f = FieldConfig::get(p, m);
    for (const auto& a : all_elements(f))
      CHECK(a.pow(static_cast<std::uint64_t>(f.q())) == a);
  }
}

TEST_CASE("Frobenius additivity exhaustively for q up to 27") {
  for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {5, 1}, {3, 3}}) {
    const FieldConfig& f = FieldConfig::get(p, m);
    auto elems = all_elements(f);
    for (const auto& a : elems)
      for (const auto& b : elems)
        CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
  }
}

TEST_CASE("field axioms on GF(9)") {
  const FieldConfig& f = FieldConfig::get(3, 2);
  auto elems = all_elements(f);
  for (const auto& a : elems) {
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    for (const auto& b : elems) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : elems) CHECK(a * (b + c) == a * b + a * c);
    }
  }
}
