#include <doctest.h>

#include "octomod/epsilon.hpp"
#include "octomod/octonion.hpp"

using namespace octomod;

TEST_CASE("table extraction succeeds and is cached") {
  const EpsilonTables t = build_epsilon_tables();
  CHECK(t.eps3(1, 2, 3) == 1);
  CHECK(t.eps3(2, 1, 3) == -1);
  CHECK(t.eps3(1, 1, 5) == 0);
  CHECK(t.eps4(1, 2, 4, 7) == 1);
  CHECK(t.eps4(1, 2, 4, 4) == 0);
  CHECK(t.eps4(1, 1, 4, 5) == 0);

  const EpsilonTables& shared = epsilon_tables();
  CHECK(&shared == &epsilon_tables());
}

TEST_CASE("eps3 reconstructs every basis product") {
  const EpsilonTables& t = epsilon_tables();
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      Octonion via = Octonion::scalar(Rational(i == j ? -1 : 0));
      for (int k = 1; k <= 7; ++k) via[k] = Rational(t.eps3(i, j, k));
      CHECK(via == mul(Octonion::unit(i), Octonion::unit(j)));
    }
}

TEST_CASE("eps4 reconstructs every basis associator") {
  const EpsilonTables& t = epsilon_tables();
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k) {
        Octonion via;
        for (int l = 1; l <= 7; ++l) via[l] = Rational(2 * t.eps4(i, j, k, l));
        CHECK(via == associator(Octonion::unit(i), Octonion::unit(j), Octonion::unit(k)));
      }
}

TEST_CASE("contraction identity report") {
  const IdentityReport rep = verify_contraction_identities();
  REQUIRE(rep.checks.size() == 4);
  for (const auto& c : rep.checks) {
    INFO(c.identity << " " << c.first_failure);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("spot values of the first contraction identity") {
  const EpsilonTables& t = epsilon_tables();
  int same = 0, diff = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      same += t.eps3(i, j, 3) * t.eps3(i, j, 3);
      diff += t.eps3(i, j, 3) * t.eps3(i, j, 4);
    }
  CHECK(same == 6);
  CHECK(diff == 0);
}
