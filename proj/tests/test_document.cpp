#include <doctest.h>

#include <random>

#include "cyclerep/document.hpp"
#include "cyclerep/generator.hpp"
#include "support.hpp"

using namespace cyclerep;
using Q = Rational;
using G = GaussianRational;
using M = Matrix<Q>;
using C = Cycle<Q>;

TEST_CASE("scalars") {
  CHECK(scalar_to_json(Q(5L)) == Json(5));
  CHECK(scalar_to_json(Q(-3, 4)) == Json("-3/4"));
  CHECK(scalar_from_json<Q>(Json("6/8"), "x") == Q(3, 4));
  CHECK(scalar_from_json<Q>(Json(-2), "x") == Q(-2L));
  CHECK_THROWS_AS(scalar_from_json<Q>(Json(0.5), "x"), ParseError);
  CHECK_THROWS_AS(scalar_from_json<Q>(Json("1/0"), "x"), ParseError);
  CHECK_THROWS_AS(scalar_from_json<Q>(Json::array(), "x"), ParseError);
  CHECK(scalar_to_json(G(Q(1L), Q(-2L))) == Json("1-2*i"));
  CHECK(scalar_to_json(G(7L)) == Json(7));
  CHECK(scalar_from_json<G>(Json("i"), "x") == G::imaginary_unit());
  const Q big = Q::parse("123456789012345678901234567890");
  CHECK(scalar_to_json(big) == Json("123456789012345678901234567890"));
  CHECK(scalar_from_json<Q>(scalar_to_json(big), "x") == big);
}

TEST_CASE("cycle documents") {
  const C c = chain_cycle<Q>(2, 1, 0);  // dims (1, 0): A_1 is 0x1, A_2 is 1x0
  const Json doc = cycle_to_json(c);
  CHECK(doc["maps"][0] == Json::array());
  CHECK(doc["maps"][1] == Json::parse("[[]]"));
  CHECK(cycle_from_json<Q>(doc) == c);

  Json bad = doc;
  bad["format_version"] = "2.0";
  CHECK_THROWS_AS(cycle_from_json<Q>(bad), ParseError);
  bad = doc;
  bad.erase("maps");
  CHECK_THROWS_AS(cycle_from_json<Q>(bad), ParseError);
  bad = doc;
  bad["field"] = "R";
  CHECK_THROWS_AS(cycle_from_json<Q>(bad), ParseError);
  CHECK_THROWS_AS(cycle_from_json<G>(doc), ParseError);
  bad = Json::parse(R"({"format_version":"1.0","kind":"cycle","field":"Q","t":1,"dims":[2],"maps":[[[1,2],[3]]]})");
  CHECK_THROWS_AS(cycle_from_json<Q>(bad), ParseError);
}

TEST_CASE("round trip of generated cycles") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 100; ++n) {
    const auto spec = testing::random_spec<Q>(1 + rng() % 4, 12, rng);
    const auto g = random_cycle(spec, rng());
    const Json doc = cycle_to_json(g.cycle);
    CHECK(cycle_from_json<Q>(Json::parse(doc.dump())) == g.cycle);
    CHECK(system_from_json<Q>(Json::parse(system_to_json(g.truth.witness).dump())) == g.truth.witness);
  }
  GeneratorSpec<G> gs;
  gs.t = 2;
  gs.chains = {{1, 3, 1}};
  const auto gg = random_cycle(gs, 4);
  CHECK(cycle_from_json<G>(Json::parse(cycle_to_json(gg.cycle).dump())) == gg.cycle);
}

TEST_CASE("polynomial json") {
  const Poly<Q> p(std::vector<Q>{Q(1L), Q(-3, 2), Q(1L)});
  const Json j = poly_to_json(p);
  CHECK(j["text"] == "x^2 - 3/2*x + 1");
  CHECK(j["coeffs_low_to_high"] == Json::parse(R"(["1","-3/2","1"])"));
}
