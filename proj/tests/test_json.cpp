#include <doctest.h>

#include "octomod/json_io.hpp"
#include "support/random_values.hpp"

using namespace octomod;
using octomod::testing::Rng;
using octomod::testing::random_element;
using octomod::testing::random_octonion;

TEST_CASE("rational strings") {
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("octonion round trip") {
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    const Octonion o = random_octonion(rng);
    CHECK(octonion_from_json(to_json(o)) == o);
  }
  CHECK_THROWS_AS(octonion_from_json(json::array({"1/1"})), DomainError);
}

TEST_CASE("element round trip") {
  Rng rng(62);
  for (const ModuleSignature sig : {ModuleSignature(1, 0), ModuleSignature(2, 3)}) {
    for (int k = 0; k < 20; ++k) {
      const ModuleElement x = random_element(rng, sig);
      const json j = to_json(x);
      CHECK(j["n"] == sig.n);
      CHECK(j["m"] == sig.m);
      CHECK(element_from_json(j) == x);
    }
  }
  CHECK_THROWS_AS(element_from_json(json{{"n", 1}, {"m", 0}}), DomainError);
  CHECK_THROWS_AS(
      element_from_json(json{{"n", 1}, {"m", 0}, {"components", json::array()}}),
      DomainError);
}

TEST_CASE("candidate round trip") {
  const RightMultCandidate cand = canonical_bimodule(ModuleSignature(2, 0));
  const json j = to_json(cand);
  const RightMultCandidate back = candidate_from_json(j);
  CHECK(back.sig == cand.sig);
  for (int i = 0; i < 7; ++i) CHECK(back.R[i] == cand.R[i]);
}

TEST_CASE("square matrix payload") {
  json flat = json::array();
  for (int i = 0; i < 64; ++i) flat.push_back(i % 9 == 0 ? "1/1" : "0/1");
  const Mat m = square_matrix_from_json(flat);
  CHECK(m == Mat::Identity(8, 8));
  CHECK_THROWS_AS(square_matrix_from_json(json::array({"1/1", "2/1", "3/1"})), DomainError);
}

TEST_CASE("decomposition and outcome serialization") {
  const ModuleSignature sig(3, 0);
  const BimoduleElement m(ModuleElement(
      sig, {Octonion::unit(1), Octonion::unit(2), Octonion::unit(1) + Octonion::unit(2)}));
  const json dj = to_json(decompose(m));
  REQUIRE(dj.contains("terms"));
  CHECK(dj["terms"].size() == 2);
  for (const auto& term : dj["terms"]) {
    CHECK(octonion_from_json(term["root"]).is_zero() == false);
    CHECK(element_from_json(term["vector"]).sig == sig);
  }

  const SolveOutcome out = impose_quadratic(solve_linear_stage(ModuleSignature(0, 1)));
  const json oj = to_json(out);
  CHECK(oj["status"] == "Infeasible");
  CHECK(oj["solutions"].empty());
}

TEST_CASE("identity report shape") {
  const json j = to_json(verify_contraction_identities());
  CHECK(j["eq3"] == "pass");
  CHECK(j["eq4"] == "pass");
  CHECK(j["eq5"] == "pass");
  CHECK(j["eq6"] == "pass");
}
