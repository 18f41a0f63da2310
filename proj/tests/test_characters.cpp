#include <doctest.h>

#include <random>

#include "fvect/characters.hpp"

using namespace fvect;

namespace {

std::vector<std::pair<i64, i64>> small_field_params() {
  std::vector<std::pair<i64, i64>> out;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79})
    for (i64 r = 1, q = p; q <= 81; ++r, q *= p) out.emplace_back(p, r);
  return out;
}

CharSum random_effective(const CharGroup& G, std::mt19937_64& rng, i64 terms, i64 max_coeff) {
  std::vector<std::pair<i64, i64>> v;
  for (i64 i = 0; i < terms; ++i)
    v.emplace_back(i64(rng() % u64(G.order)), 1 + i64(rng() % u64(max_coeff)));
  return cs_make(G, v);
}

}  // namespace

TEST_CASE("char_group basics and the q=2 degeneracy") {
  auto G = char_group(2, 2);
  CHECK(G.q == 4);
  CHECK(G.order == 3);
  CHECK(primitive_set(G) == std::vector<i64>{1, 2});
  CHECK(is_primitive(G, 1));
  CHECK(is_primitive(G, 2));
  CHECK_FALSE(is_primitive(G, 0));
  CHECK(is_primitive(G, 4));  // 4 mod 3 = 1

  auto G2 = char_group(2, 1);
  CHECK(G2.order == 1);
  CHECK(primitive_set(G2) == std::vector<i64>{0});
  CHECK(is_primitive(G2, 0));

  auto G3 = char_group(3, 2);
  CHECK(primitive_set(G3) == std::vector<i64>{1, 3});

  CHECK_THROWS_AS(char_group(6, 1), validation_error);
  CHECK_THROWS_AS(char_group(2, 0), validation_error);
}

TEST_CASE("power map is additive exactly on the frobenius orbit exponents") {
  for (auto [p, r] : small_field_params()) {
    auto G = char_group(p, r);
    for (i64 e = 0; e < G.order; ++e) {
      CAPTURE(p);
      CAPTURE(r);
      CAPTURE(e);
      CHECK(additivity_oracle(G, e) == is_primitive(G, e));
    }
  }
}

TEST_CASE("character multiplication and twist") {
  auto G = char_group(3, 2);  // order 8
  CHECK(char_mul(G, 5, 6) == 3);
  CHECK(char_twist(G, 1, 1) == 3);
  CHECK(char_twist(G, 3, 1) == 1);  // 9 mod 8
  CHECK(char_twist(G, 5, 2) == 5);  // twist by r is the identity
  CHECK(char_twist(G, 1, -1) == 3);

  std::mt19937_64 rng(2);
  for (auto [p, r] : {std::pair<i64, i64>{2, 3}, {3, 2}, {5, 2}}) {
    auto H = char_group(p, r);
    for (int trial = 0; trial < 60; ++trial) {
      i64 a = i64(rng() % u64(H.order)), b = i64(rng() % u64(H.order));
      i64 t = i64(rng() % 7) - 3;
      CHECK(char_twist(H, char_mul(H, a, b), t) ==
            char_mul(H, char_twist(H, a, t), char_twist(H, b, t)));
      CHECK(char_twist(H, char_twist(H, a, t), -t) == a);
      CHECK(char_twist(H, a, r) == a);
      CHECK(is_primitive(H, char_twist(H, 1, t)));
    }
  }
}

TEST_CASE("character sum ring operations") {
  auto G = char_group(3, 2);
  auto f = cs_make(G, {{1, 2}, {9, 1}, {3, 0}});
  CHECK(cs_coeff(f, 1) == 3);  // 9 mod 8 folds onto 1
  CHECK(cs_coeff(f, 3) == 0);
  CHECK(f.coeffs.size() == 1);
  CHECK(cs_mass(f) == 3);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_effective(G, rng, 3, 4);
    auto b = random_effective(G, rng, 3, 4);
    auto c = random_effective(G, rng, 2, 4);
    CHECK(cs_add(a, b) == cs_add(b, a));
    CHECK(cs_mul(a, b) == cs_mul(b, a));
    CHECK(cs_mul(a, cs_mul(b, c)) == cs_mul(cs_mul(a, b), c));
    CHECK(cs_mul(a, cs_add(b, c)) == cs_add(cs_mul(a, b), cs_mul(a, c)));
    CHECK(cs_sub(cs_add(a, b), b) == a);
    CHECK(cs_mass(cs_mul(a, b)) == cs_mass(a) * cs_mass(b));
    i64 t = i64(rng() % 5) - 2;
    CHECK(cs_twist(cs_mul(a, b), t) == cs_mul(cs_twist(a, t), cs_twist(b, t)));
    CHECK(cs_twist(cs_add(a, b), t) == cs_add(cs_twist(a, t), cs_twist(b, t)));
    CHECK(cs_twist(a, G.r) == a);
  }

  auto H = char_group(2, 2);
  CHECK_THROWS_AS(cs_add(f, cs_make(H, {{1, 1}})), validation_error);
}

TEST_CASE("exp_F: frozen values") {
  auto G = char_group(2, 2);
  auto f = cs_make(G, {{1, 1}, {2, 1}});
  auto e = exp_F(f);
  CHECK(e == cs_make(G, {{0, 2}, {1, 1}, {2, 1}}));

  // empty input gives the unit
  CHECK(exp_F(cs_make(G, {})) == cs_make(G, {{0, 1}}));

  // q = 2: the only character is trivial and exp_F doubles it
  auto G2 = char_group(2, 1);
  CHECK(exp_F(cs_make(G2, {{0, 1}})) == cs_make(G2, {{0, 2}}));

  auto G3 = char_group(3, 1);  // alpha_p-style input over F_3
  CHECK(exp_F(cs_make(G3, {{1, 1}})) == cs_make(G3, {{0, 2}, {1, 1}}));
}

TEST_CASE("exp_F of the full primitive sum is the regular character sum") {
  for (auto [p, r] : small_field_params()) {
    auto G = char_group(p, r);
    std::vector<std::pair<i64, i64>> prim;
    for (i64 e : primitive_set(G)) prim.emplace_back(e, 1);
    auto lhs = exp_F(cs_make(G, prim));
    std::vector<std::pair<i64, i64>> all = {{0, 1}};
    for (i64 e = 0; e < G.order; ++e) all.emplace_back(e, 1);
    CAPTURE(p);
    CAPTURE(r);
    CHECK(lhs == cs_make(G, all));
    CHECK(cs_mass(lhs) == G.q);
  }
}

TEST_CASE("exp_F turns sums into products and respects twists") {
  std::mt19937_64 rng(29);
  for (auto [p, r] : {std::pair<i64, i64>{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
    auto G = char_group(p, r);
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_effective(G, rng, 2, 3);
      auto b = random_effective(G, rng, 2, 3);
      if (cs_mass(a) + cs_mass(b) > 18) continue;
      CHECK(exp_F(cs_add(a, b)) == cs_mul(exp_F(a), exp_F(b)));
      i64 t = i64(rng() % 3);
      CHECK(exp_F(cs_twist(a, t)) == cs_twist(exp_F(a), t));
    }
  }
}

TEST_CASE("exp_F gates and validation") {
  auto G = char_group(2, 3);
  CHECK_THROWS_AS(exp_F(cs_make(G, {{1, 70}})), size_gate_error);
  CHECK_THROWS_AS(exp_F(cs_sub(cs_make(G, {}), cs_make(G, {{1, 1}}))), validation_error);
}
