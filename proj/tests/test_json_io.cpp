#include "fvect/json_io.hpp"

#include <random>

#include "doctest.h"
#include "module_gen.hpp"

using namespace fvect;
using nlohmann::json;

TEST_CASE("ring descriptors round-trip with the canonical modulus") {
  GaloisRing R = gr_make(2, 1, 2);
  json j = ring_to_json(R);
  CHECK(j.dump() == R"({"m":1,"modulus":[1,1,1],"p":2,"s":2})");
  CHECK(ring_from_json(j).same_ring(R));

  GaloisRing Z4 = gr_make(2, 2, 2);
  CHECK(ring_from_json(ring_to_json(Z4)).same_ring(Z4));
  // the modulus is optional on input
  CHECK(ring_from_json(json::parse(R"({"p":3,"m":1,"s":2})"))
            .same_ring(gr_make(3, 1, 2)));

  CHECK_THROWS_AS(
      ring_from_json(json::parse(R"({"p":2,"m":1,"s":2,"modulus":[0,1,1]})")),
      validation_error);
  CHECK_THROWS_AS(ring_from_json(json::parse(R"({"p":2,"m":1})")),
                  validation_error);
  CHECK_THROWS_AS(ring_from_json(json::parse(R"({"p":2,"m":1,"s":"2"})")),
                  validation_error);
  CHECK_THROWS_AS(
      ring_from_json(json::parse(R"({"p":2,"m":1,"s":2,"extra":0})")),
      validation_error);
  CHECK_THROWS_AS(ring_from_json(json::parse(R"({"p":4,"m":1,"s":1})")),
                  validation_error);
  CHECK_THROWS_AS(ring_from_json(json::parse("[1,2]")), validation_error);
}

TEST_CASE("character sums round-trip and normalize on input") {
  CharGroup G = char_group(2, 2);
  CharSum f = cs_make(G, {{1, 1}, {2, 1}});
  json j = charsum_to_json(f);
  CHECK(j.dump() == R"({"coeffs":{"1":1,"2":1},"p":2,"r":2})");
  CHECK(charsum_from_json(j) == f);

  // exponents fold mod q-1 and zero coefficients vanish
  CharSum g = charsum_from_json(
      json::parse(R"({"p":2,"r":2,"coeffs":{"4":1,"5":-1,"2":1}})"));
  CHECK(g == cs_make(G, {{1, 1}, {2, 0}}));

  CHECK(coeffs_to_json(f).dump() == R"({"1":1,"2":1})");
  CHECK(coeffs_to_json(cs_make(G, {})).dump() == "{}");

  CHECK_THROWS_AS(
      charsum_from_json(json::parse(R"({"p":2,"r":2,"coeffs":{"01":1}})")),
      validation_error);
  CHECK_THROWS_AS(
      charsum_from_json(json::parse(R"({"p":2,"r":2,"coeffs":{"x":1}})")),
      validation_error);
  CHECK_THROWS_AS(
      charsum_from_json(json::parse(R"({"p":2,"r":2,"coeffs":{"1":1.5}})")),
      validation_error);
  CHECK_THROWS_AS(charsum_from_json(json::parse(R"({"p":2,"r":2})")),
                  validation_error);
  CHECK_THROWS_AS(
      charsum_from_json(json::parse(R"({"p":2,"coeffs":{},"r":2,"q":4})")),
      validation_error);
}

TEST_CASE("graded modules round-trip through their JSON form") {
  std::mt19937_64 rng(7);
  for (i64 p : {2, 3}) {
    for (i64 r : {1, 2, 3}) {
      for (int t = 0; t < 8; ++t) {
        GradedModule M = testgen::random_graded_module(p, r, r, 3, rng);
        GradedModule N = module_from_json(module_to_json(M));
        CHECK(N.p == M.p);
        CHECK(N.r == M.r);
        CHECK(N.s == M.s);
        CHECK(N.dims == M.dims);
        CHECK(N.F == M.F);
        CHECK(N.V == M.V);
      }
    }
  }

  GradedModule Z = zero_module(2, 2, 2);
  json jz = module_to_json(Z);
  CHECK(jz.dump() ==
        R"({"F":{},"V":{},"dims":{"1":0,"2":0},"p":2,"r":2,"s":2})");
  GradedModule Z2 = module_from_json(jz);
  CHECK(Z2.dims == Z.dims);
  CHECK(Z2.F == Z.F);
}

TEST_CASE("module parsing rejects malformed block data") {
  // 1-dim components, F: comp 0 -> comp 1 the identity, V = 0
  json base = json::parse(
      R"({"p":2,"r":2,"s":2,"dims":{"1":1,"2":1},)"
      R"("F":{"1->2":[[[1,0]]]},"V":{}})");
  GradedModule M = module_from_json(base);
  CHECK(M.dims == std::vector<i64>{1, 1});
  CHECK(M.F.blocks[0].at(0, 0) == 1);
  CHECK(ff_mat_is_zero(M.V.blocks[0]));
  CHECK(module_to_json(M) == base);

  auto mutate = [&](const char* path, json v) {
    json j = base;
    j[json::json_pointer(path)] = std::move(v);
    return j;
  };
  // off-pattern block key: F must raise the component
  CHECK_THROWS_AS(module_from_json(mutate("/F", json::parse(
                      R"({"1->1":[[[1,0]]]})"))),
                  validation_error);
  // wrong row count
  CHECK_THROWS_AS(module_from_json(mutate("/F/1->2", json::parse(
                      "[[[1,0]],[[1,0]]]"))),
                  validation_error);
  // wrong column count
  CHECK_THROWS_AS(module_from_json(mutate("/F/1->2", json::parse(
                      "[[[1,0],[1,0]]]"))),
                  validation_error);
  // coefficient list of the wrong length
  CHECK_THROWS_AS(module_from_json(mutate("/F/1->2", json::parse("[[[1]]]"))),
                  validation_error);
  // coefficient out of range
  CHECK_THROWS_AS(module_from_json(mutate("/F/1->2", json::parse(
                      "[[[2,0]]]"))),
                  validation_error);
  // dims must cover every component exponent
  CHECK_THROWS_AS(module_from_json(mutate("/dims", json::parse(
                      R"({"1":1})"))),
                  validation_error);
  CHECK_THROWS_AS(module_from_json(mutate("/dims", json::parse(
                      R"({"0":1,"1":1,"2":1})"))),
                  validation_error);
  CHECK_THROWS_AS(module_from_json(mutate("/dims/1", json(-1))),
                  validation_error);
}

TEST_CASE("modules with Pi round-trip and pin the twist shift") {
  for (i64 p : {2, 3}) {
    ODModule M = make_special_drinfeld(p);
    ODModule N = od_from_json(od_to_json(M));
    CHECK(N.params.p == M.params.p);
    CHECK(N.params.f == M.params.f);
    CHECK(N.params.d == M.params.d);
    CHECK(N.dims == M.dims);
    CHECK(N.F == M.F);
    CHECK(N.V == M.V);
    CHECK(N.Pi == M.Pi);
  }

  ODGenConfig cfg;
  cfg.p = 3;
  cfg.h = 2;
  ODModule G = random_od(5, cfg);
  ODModule G2 = od_from_json(od_to_json(G));
  CHECK(G2.F == G.F);
  CHECK(G2.V == G.V);
  CHECK(G2.Pi == G.Pi);

  // default twist shift is left implicit
  json j = od_to_json(make_special_drinfeld(2));
  CHECK(!j.at("params").contains("twist_shift"));

  // a non-default shift survives the round trip: Pi fixes every component
  GaloisRing R = gr_make(2, 2, 2);
  GRMatrix b(R, 2, 2);
  b.at(0, 1) = R.from_int(2);
  b.at(1, 0) = R.one();
  std::vector<GRMatrix> blocks{b, b};
  ODModule S = make_od_module(ODParams{2, 1, 2, 2}, 2, 2, {2, 2}, blocks,
                              blocks, blocks);
  json js = od_to_json(S);
  CHECK(js.at("params").at("twist_shift") == 2);
  CHECK(js.at("Pi").contains("1->1"));
  ODModule S2 = od_from_json(js);
  CHECK(S2.Pi == S.Pi);

  // the override recolors the shift before validation
  CHECK_THROWS_AS(od_from_json(od_to_json(make_special_drinfeld(2)), 2),
                  validation_error);
  CHECK_THROWS_AS(
      od_from_json(json::parse(R"({"params":{"p":2,"f":1,"d":2,"m":2,"s":2},)"
                               R"("dims":{"1":0,"2":0},"F":{},"V":{},)"
                               R"("Pi":{},"extra":1})")),
      validation_error);
}

TEST_CASE("presentations and witnesses serialize") {
  GaloisRing R = gr_make(5, 1, 1);
  RaynaudParams P;
  P.R = R;
  P.w = R.zero();
  P.pairs = {{R.from_int(2), R.zero()}, {R.zero(), R.from_int(3)}};
  json j = raynaud_to_json(P);
  CHECK(j.dump() == R"({"pairs":[[[2],[0]],[[0],[3]]],"w":[0]})");
  RaynaudParams Q = raynaud_from_json(R, j);
  CHECK(Q.pairs == P.pairs);
  CHECK(Q.w == P.w);

  // parsing validates the presentation axioms
  CHECK_THROWS_AS(
      raynaud_from_json(R, json::parse(R"({"w":[1],"pairs":[[[2],[0]]]})")),
      validation_error);
  CHECK_THROWS_AS(
      raynaud_from_json(R, json::parse(R"({"w":[0],"pairs":[]})")),
      validation_error);
  CHECK_THROWS_AS(
      raynaud_from_json(R, json::parse(R"({"w":[0],"pairs":[[[2]]]})")),
      validation_error);

  IsoResult no{false, {}};
  CHECK(witness_to_json(no).dump() == R"({"isomorphic":false})");
  IsoResult yes{true, {R.one()}};
  CHECK(witness_to_json(yes).dump() == R"({"isomorphic":true,"lambda":[[1]]})");
}
