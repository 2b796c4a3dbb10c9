#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace gts;

namespace {

const FieldConfig& F3 = FieldConfig::get(3, 1);

TensorElement tb(const std::vector<int>& l, const std::vector<int>& r, int k = 2, int n = 10) {
  return TensorElement::single(F3, n, n, k, TensorBlade{Blade(l), Blade(r)},
                               FieldElement::one(F3));
}

std::vector<Blade> all_blades(int n) {
  std::vector<Blade> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i + 1);
    out.push_back(Blade(idx));
  }
  return out;
}

}  // namespace

TEST_CASE("tensor products") {
  CHECK(tb({1}, {}) * tb({}, {1}) == tb({1}, {1}));
  CHECK((tb({1}, {2}) * tb({1}, {3})).is_zero());
  // (e1|e2)(e2|e1) = -e1e2|e1e2, and -1 = 2 over GF(3)
  CHECK(tb({1}, {2}) * tb({2}, {1}) ==
        tb({1, 2}, {1, 2}).scale(FieldElement::from_int(F3, -1)));
}

TEST_CASE("bidegree and parity") {
  CHECK(bidegree_of(TensorBlade{Blade({1}), Blade()}, 2) == Bidegree{1, 0});
  CHECK(z2_parity(TensorBlade{Blade({1}), Blade()}) == 0);
  CHECK(bidegree_of(TensorBlade{Blade({3}), Blade({1})}, 2) == Bidegree{0, 1});
  CHECK(z2_parity(TensorBlade{Blade({3}), Blade({1})}) == 1);
  CHECK(bidegree_of(TensorBlade{Blade({1}), Blade({1})}, 2) == Bidegree{1, 1});
}

TEST_CASE("supercommutator basics") {
  // [e1|e1, e2|e2] = [e1,e2] (x) e1e2 = 2 e1e2|e1e2
  CHECK(supercommutator(tb({1}, {1}), tb({2}, {2})) ==
        tb({1, 2}, {1, 2}).scale(FieldElement::from_int(F3, 2)));
  // even arguments: [a, a] = 0
  TensorElement a = tb({1, 2}, {}) + tb({}, {3, 4});
  CHECK(supercommutator(a, a).is_zero());
  CHECK_THROWS_AS(left_normed_supercommutator({a}), Error);
}

TEST_CASE("supersymmetry on random homogeneous pairs") {
  SplitMix64 rng(17);
  SamplerConfig sc;
  sc.nL = sc.nR = 8;
  sc.k = 3;
  sc.richness = 3;
  int done = 0;
  while (done < 1000) {
    Bidegree da{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))};
    Bidegree db{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))};
    TensorElement x = sample_homogeneous(da, F3, sc, rng);
    TensorElement y = sample_homogeneous(db, F3, sc, rng);
    TensorElement lhs = supercommutator(x, y);
    TensorElement rhs = supercommutator(y, x);
    if (da.e2 * db.e2 == 0) rhs = -rhs;
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("bracket of basis blades is the left commutator, exhaustive at n = 5") {
  auto blades = all_blades(5);
  const int k = 2;
  long checked = 0;
  for (const auto& al : blades)
    for (const auto& bl : blades) {
      if (blade_product(al, bl) == std::nullopt) continue;  // left supports meet
      for (const auto& ar : blades)
        for (const auto& br : blades) {
          if (blade_product(ar, br) == std::nullopt) continue;
          TensorElement A = TensorElement::single(F3, 5, 5, k, TensorBlade{al, ar},
                                                  FieldElement::one(F3));
          TensorElement B = TensorElement::single(F3, 5, 5, k, TensorBlade{bl, br},
                                                  FieldElement::one(F3));
          // [a1 (x) b1, a2 (x) b2] = [a1,a2] (x) b1 b2
          Multivector lc = Multivector::single(F3, 5, al, FieldElement::one(F3)) *
                               Multivector::single(F3, 5, bl, FieldElement::one(F3)) -
                           Multivector::single(F3, 5, bl, FieldElement::one(F3)) *
                               Multivector::single(F3, 5, al, FieldElement::one(F3));
          Multivector rc = Multivector::single(F3, 5, ar, FieldElement::one(F3)) *
                           Multivector::single(F3, 5, br, FieldElement::one(F3));
          CHECK(supercommutator(A, B) == TensorElement::tensor(lc, rc, k));
          ++checked;
        }
    }
  CHECK(checked > 50000);
}

TEST_CASE("triple supercommutators vanish on random homogeneous triples") {
  SplitMix64 rng(19);
  SamplerConfig sc;
  sc.nL = sc.nR = 8;
  sc.k = 3;
  sc.richness = 3;
  for (int i = 0; i < 50; ++i) {
    TensorElement x = sample_homogeneous({static_cast<int>(rng.below(2)),
                                          static_cast<int>(rng.below(2))},
                                         F3, sc, rng);
    TensorElement y = sample_homogeneous({static_cast<int>(rng.below(2)),
                                          static_cast<int>(rng.below(2))},
                                         F3, sc, rng);
    TensorElement z = sample_homogeneous({static_cast<int>(rng.below(2)),
                                          static_cast<int>(rng.below(2))},
                                         F3, sc, rng);
    CHECK(left_normed_supercommutator({x, y, z}).is_zero());
  }
}

TEST_CASE("bidegree additivity under products") {
  SplitMix64 rng(23);
  SamplerConfig sc;
  sc.nL = sc.nR = 8;
  sc.k = 3;
  sc.richness = 3;
  for (int i = 0; i < 200; ++i) {
    Bidegree da{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))};
    Bidegree db{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))};
    TensorElement x = sample_homogeneous(da, F3, sc, rng);
    TensorElement y = sample_homogeneous(db, F3, sc, rng);
    TensorElement prod = x * y;
    if (!prod.is_zero()) CHECK(prod.is_homogeneous(da + db));
  }
}

TEST_CASE("basis product disjointness criterion") {
  auto blades = all_blades(4);
  for (const auto& al : blades)
    for (const auto& ar : blades)
      for (const auto& bl : blades)
        for (const auto& br : blades) {
          TensorElement A = TensorElement::single(F3, 4, 4, 1, TensorBlade{al, ar},
                                                  FieldElement::one(F3));
          TensorElement B = TensorElement::single(F3, 4, 4, 1, TensorBlade{bl, br},
                                                  FieldElement::one(F3));
          const bool disjoint =
              blade_product(al, bl).has_value() && blade_product(ar, br).has_value();
          CHECK((A * B).is_zero() == !disjoint);
        }
}

TEST_CASE("support statistics") {
  TensorElement c = tb({1}, {}) + tb({1, 2}, {3});
  CHECK(max_support_length(c) == 3);
  CHECK(g_sum(c) == tb({1, 2}, {3}));

  TensorElement d = tb({1}, {2}).scale(FieldElement::from_int(F3, 2)) + tb({3}, {4});
  CHECK(g_sum(d) == d);

  SupportUnion u = supp_union(c);
  CHECK(u.left == std::set<int>{1, 2});
  CHECK(u.right == std::set<int>{3});
  CHECK(supp_union(TensorElement::zero(F3, 5, 5, 0)).left.empty());

  CHECK_THROWS_AS(g_sum(TensorElement::zero(F3, 5, 5, 0)), Error);
  CHECK_THROWS_AS(max_support_length(TensorElement::zero(F3, 5, 5, 0)), Error);
}

TEST_CASE("g-sum is idempotent on random elements") {
  SplitMix64 rng(29);
  SamplerConfig sc;
  sc.nL = sc.nR = 8;
  sc.k = 2;
  sc.richness = 5;
  for (int i = 0; i < 100; ++i) {
    TensorElement c = sample_homogeneous({static_cast<int>(rng.below(2)),
                                          static_cast<int>(rng.below(2))},
                                         F3, sc, rng);
    CHECK(g_sum(g_sum(c)) == g_sum(c));
  }
}

TEST_CASE("incompatible operands rejected") {
  TensorElement a(F3, 10, 10, 2), b(F3, 8, 10, 2), c(F3, 10, 10, 3);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS(a + c, Error);
}

TEST_CASE("text form") {
  CHECK(tb({1, 2}, {3}).to_string() == "1*e1e2|e3");
  CHECK(TensorElement::unit(F3, 5, 5, 1).to_string() == "1*1|1");
}
