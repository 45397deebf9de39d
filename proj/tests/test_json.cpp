#include <catch2/catch_amalgamated.hpp>

#include "torusfib/json_io.hpp"
#include "torusfib/selftest.hpp"

using namespace torusfib;

TEST_CASE("homology class wire format") {
  json j = HomologyClass{3, -7};
  CHECK(j.dump() == "[3,-7]");
  CHECK(j.get<HomologyClass>() == HomologyClass{3, -7});

  CHECK_THROWS_AS(json::parse("[1]").get<HomologyClass>(),
                  std::invalid_argument);
  CHECK_THROWS_AS(json::parse("{\"p\":1}").get<HomologyClass>(),
                  std::invalid_argument);
}

TEST_CASE("integers beyond 64 bits travel as decimal strings") {
  Int big("123456789012345678901234567890");
  json j = int_to_json(big);
  REQUIRE(j.is_string());
  CHECK(int_from_json(j) == big);

  HomologyClass c{big, Int(-1) * big};
  json jc = c;
  CHECK(jc.get<HomologyClass>() == c);

  CHECK(int_from_json(json(-42)) == -42);
  CHECK_THROWS_AS(int_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("mcg element wire format") {
  MCGElement e = compose(delta(), twist(u_class(), -9));
  json j = e;
  CHECK(j["ab"] == 3);
  CHECK(j["mat"].dump() == "[[1,0],[-9,1]]");
  CHECK(j.get<MCGElement>() == e);
}

TEST_CASE("factorization round trip") {
  const CanonicalRow& row = canonical_registry()[12];
  Factorization f = row.factorization();
  json j = f;
  CHECK(j.contains("factors"));
  CHECK(j.contains("boundary"));
  CHECK(j.get<Factorization>() == f);

  json malformed = json::parse(R"({"factors": [{"cycle": [1,0]}]})");
  CHECK_THROWS(malformed.get<Factorization>());
}

TEST_CASE("certificate round trip") {
  Rng rng(5);
  Factorization f = scramble_row(canonical_registry()[7], rng, 18, 6);
  Certificate cert = classify(f);
  json j = cert;
  Certificate back = j.get<Certificate>();
  CHECK(back == cert);
  CHECK(verify_certificate(f, back));
}

TEST_CASE("markov triple wire format") {
  markov::MarkovTriple t{2, 5, 29};
  json j = t;
  CHECK(j.dump() == "[2,5,29]");
  CHECK(j.get<markov::MarkovTriple>() == t);
}

TEST_CASE("primitive pair wire format") {
  auroux::PrimitivePair p = auroux::make_pair(u_class(), {5, 2});
  json j = p;
  CHECK(j.dump() == "[[0,1],[5,2]]");
  CHECK(j.get<auroux::PrimitivePair>() == p);
}
