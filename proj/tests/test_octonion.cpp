#include <doctest.h>

#include "octomod/octonion.hpp"
#include "support/random_values.hpp"

using namespace octomod;
using octomod::testing::Rng;
using octomod::testing::random_octonion;
using octomod::testing::random_nonzero_octonion;

namespace {
Octonion oct(std::initializer_list<int> coeffs) {
  typename Octonion::Coeffs c;
  int i = 0;
  for (int v : coeffs) c[i++] = Rational(v);
  return Octonion(c);
}
}  // namespace

TEST_CASE("basis anticommutation relations") {
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const Octonion s =
          mul(Octonion::unit(i), Octonion::unit(j)) + mul(Octonion::unit(j), Octonion::unit(i));
      CHECK(s == Octonion::scalar(Rational(i == j ? -2 : 0)));
    }
}

TEST_CASE("unit law and defining products") {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const Octonion x = random_octonion(rng);
    CHECK(mul(Octonion::one(), x) == x);
    CHECK(mul(x, Octonion::one()) == x);
  }
  CHECK(mul(Octonion::unit(1), Octonion::unit(1)) == Octonion::scalar(Rational(-1)));
  CHECK(mul(Octonion::unit(1), Octonion::unit(2)) == Octonion::unit(3));
}

TEST_CASE("conjugation, norm, inverse") {
  CHECK(conj(oct({1, 1, 0, 0, 0, 0, 0, 0})) == oct({1, -1, 0, 0, 0, 0, 0, 0}));
  CHECK(norm_sq(oct({1, 1, 0, 0, 0, 0, 0, 0})) == Rational(2));
  CHECK(inverse(Octonion::unit(1)) == -Octonion::unit(1));
  CHECK_THROWS_AS(inverse(Octonion::zero()), DomainError);

  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    const Octonion a = random_nonzero_octonion(rng);
    CHECK(norm_sq(a) == re(mul(a, conj(a))));
    CHECK(mul(a, inverse(a)) == Octonion::one());
  }
}

TEST_CASE("composition law on random rational pairs") {
  Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    CHECK(norm_sq(mul(a, b)) == norm_sq(a) * norm_sq(b));
  }
}

TEST_CASE("associator is alternating with zero real part on all basis triples") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        const Octonion a =
            associator(Octonion::unit(i), Octonion::unit(j), Octonion::unit(k));
        CHECK(re(a) == Rational(0));
        const Octonion swapped =
            associator(Octonion::unit(j), Octonion::unit(i), Octonion::unit(k));
        CHECK(a + swapped == Octonion::zero());
        if (i == j || j == k || i == k) CHECK(a == Octonion::zero());
      }
}

TEST_CASE("associator examples") {
  Rng rng(14);
  for (int k = 0; k < 50; ++k) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng);
    CHECK(associator(x, x, y) == Octonion::zero());
  }
  // [e1,e2,e4] = 2 e7 under the shipped table
  CHECK(associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(4)) ==
        Rational(2) * Octonion::unit(7));
  for (int k = 0; k < 20; ++k) {
    const Octonion p = random_octonion(rng), q = random_octonion(rng);
    CHECK(double_assoc(p, q, Octonion::one()) == commutator(p, q));
  }
}

TEST_CASE("Moufang identities on random triples") {
  Rng rng(15);
  for (int k = 0; k < 300; ++k) {
    const Octonion x = random_octonion(rng, 5, 2), y = random_octonion(rng, 5, 2),
                   z = random_octonion(rng, 5, 2);
    const Octonion xyx = mul(mul(x, y), x);
    CHECK(mul(xyx, z) == mul(x, mul(y, mul(x, z))));
    CHECK(mul(z, xyx) == mul(mul(mul(z, x), y), x));
    CHECK(mul(mul(x, mul(y, z)), x) == mul(mul(x, y), mul(z, x)));
  }
}

TEST_CASE("cross product") {
  CHECK(cross(Octonion::unit(1), Octonion::unit(2)) == Octonion::unit(3));
  CHECK(cross(Octonion::unit(1), Octonion::unit(3)) == -Octonion::unit(2));
  CHECK_THROWS_AS(cross(Octonion::one(), Octonion::unit(2)), DomainError);

  Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    Octonion u = im(random_octonion(rng)), v = im(random_octonion(rng));
    CHECK(cross(u, u) == Octonion::zero());
    CHECK(cross(u, v) + cross(v, u) == Octonion::zero());
    // orthogonal to both factors in the coefficient inner product
    Rational du(0), dv(0);
    const Octonion w = cross(u, v);
    for (int i = 0; i < 8; ++i) {
      du += w[i] * u[i];
      dv += w[i] * v[i];
    }
    CHECK(du == Rational(0));
    CHECK(dv == Rational(0));
  }
}

TEST_CASE("associative subspace Lambda(u,v)") {
  const RealSubspace s = assoc_subspace(Octonion::unit(1), Octonion::unit(2));
  REQUIRE(s.dim() == 3);
  // span{e1, e2, e3} in canonical form
  for (int k = 1; k <= 3; ++k) {
    Vec v = Vec::Zero(8);
    v[k] = 1;
    CHECK(s.contains(v));
  }

  CHECK_THROWS_AS(assoc_subspace(Octonion::unit(1), Octonion::unit(1)), DomainError);
  CHECK_THROWS_AS(assoc_subspace(Octonion::one(), Octonion::unit(1)), DomainError);

  Rng rng(17);
  int tested = 0;
  while (tested < 1000) {
    const Octonion u = im(random_octonion(rng, 4, 1)), v = im(random_octonion(rng, 4, 1));
    RealSubspace indep(8);
    Vec uc(8), vc(8);
    for (int i = 0; i < 8; ++i) {
      uc[i] = u[i];
      vc[i] = v[i];
    }
    indep.insert(uc);
    if (!indep.insert(vc)) continue;
    ++tested;
    const RealSubspace lam = assoc_subspace(u, v);
    CHECK(lam.dim() == 3);
    CHECK(lam.contains(uc));
    CHECK(lam.contains(vc));
    Vec cc(8);
    const Octonion c = cross(u, v);
    for (int i = 0; i < 8; ++i) cc[i] = c[i];
    CHECK(lam.contains(cc));
  }
}

TEST_CASE("imaginary units and directions") {
  CHECK(is_imaginary_unit(Octonion::unit(5)));
  CHECK_FALSE(is_imaginary_unit(Octonion::unit(1) + Octonion::unit(2)));
  CHECK_FALSE(is_imaginary_unit(Octonion::one()));

  const Octonion x = oct({3, 0, 4, 0, 0, 0, -2, 0});
  const Octonion dir = imaginary_direction(x);
  CHECK(dir == oct({0, 0, 2, 0, 0, 0, -1, 0}));
  CHECK_THROWS_AS(imaginary_direction(Octonion::scalar(Rational(3))), DomainError);

  // same slice C_J iff directions agree up to sign
  const Octonion y = oct({-5, 0, -8, 0, 0, 0, 4, 0});
  const Octonion dy = imaginary_direction(y);
  CHECK((dy == dir || dy == -dir));
}

TEST_CASE("commutant of a non-real octonion has real dimension 2") {
  Rng rng(18);
  for (int k = 0; k < 25; ++k) {
    Octonion x = random_octonion(rng, 4, 1);
    if (im(x).is_zero()) continue;
    Mat map(8, 8);
    for (int a = 0; a < 8; ++a) {
      const Octonion col = commutator(Octonion::unit(a), x);
      for (int r = 0; r < 8; ++r) map(r, a) = col[r];
    }
    CHECK(kernel_basis(map).rows() == 2);
  }
}
