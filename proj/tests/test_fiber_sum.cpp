#include <doctest.h>

#include "geographer/fiber_sum.hpp"

using namespace geographer;

TEST_CASE("elliptic surfaces") {
  const InvariantCertificate e1 = elliptic_invariants(EllipticSurface{1});
  CHECK(e1.sigma == -8);
  CHECK(e1.chi == 12);
  CHECK(e1.b_plus == 1);
  CHECK(e1.b_minus == 9);
  CHECK(e1.kappa == KodairaDimension::NegativeInfinity);
  CHECK_FALSE(e1.minimal.minimal);

  const InvariantCertificate k3 = elliptic_invariants(EllipticSurface{2});
  CHECK(k3.b_plus == 3);
  CHECK(k3.b_minus == 19);
  CHECK(k3.kappa == KodairaDimension::Zero);

  const InvariantCertificate e3 = elliptic_invariants(EllipticSurface{3});
  CHECK(e3.kappa == KodairaDimension::One);
  CHECK(e3.k_dot_omega.torus_multiple == Int{1});
  CHECK(e3.minimal.minimal);
}

TEST_CASE("Dolgachev surface") {
  const InvariantCertificate d = elliptic_invariants(DolgachevSurface{2, 3});
  CHECK(d.manifold == "E(1)_{2,3}");
  CHECK(d.sigma == -8);
  CHECK(d.b1 == 0);
  CHECK(d.kappa == KodairaDimension::One);
  CHECK_FALSE(d.k_dot_omega.torus_multiple.has_value());
  CHECK(d.k_dot_omega.sign == 1);
  CHECK_THROWS_AS(elliptic_invariants(DolgachevSurface{2, 4}), InvalidParameter);
  CHECK_THROWS_AS(elliptic_invariants(DolgachevSurface{1, 3}), InvalidParameter);
  CHECK_THROWS_AS(elliptic_invariants(EllipticSurface{0}), InvalidParameter);
}

TEST_CASE("E(2,1,2,2)") {
  const InvariantCertificate c = fiber_sum_invariants(FiberSumSpec{EllipticSurface{2}, 1, 2, 2});
  CHECK(c.manifold == "E(2,1,2,2)");
  CHECK(c.sigma == -16);
  CHECK(c.b1 == 3);
  CHECK(c.degeneracy == 1);
  CHECK(c.chi == 24);
  CHECK(c.k_dot_omega.torus_multiple == Int{4});
  CHECK(c.kappa == KodairaDimension::One);
  CHECK(c.minimal.minimal);
  CHECK_FALSE(c.nullity.has_value());
}

TEST_CASE("Dolgachev fiber sum") {
  const InvariantCertificate c = fiber_sum_invariants(FiberSumSpec{DolgachevSurface{2, 3}, 0, 0, 2});
  CHECK(c.manifold == "E(1)_{2,3}#B(0,0,2;0)");
  CHECK(c.sigma == -8);
  CHECK(c.b1 == 0);
  CHECK(c.chi == 12);
  CHECK(c.nullity == Int{0});
  CHECK(c.kappa == KodairaDimension::One);
}

TEST_CASE("fiber sum grid") {
  for (int n = 2; n <= 10; ++n)
    for (int g = 2; g <= 6; ++g)
      for (int k = 0; k <= g; ++k)
        for (int d = 0; d <= k; ++d) {
          const InvariantCertificate c = fiber_sum_invariants(FiberSumSpec{EllipticSurface{n}, d, k, g});
          CHECK(c.sigma == -8 * n);
          CHECK(c.b1 == 2 * k - d);
          CHECK(c.degeneracy == d);
          CHECK(c.k_dot_omega.torus_multiple == Int{n - 2 + 2 * g});
          CHECK(2 * c.chi + 3 * c.sigma == 0);
          CHECK(c.b_plus - c.b_minus == c.sigma);
        }
}

TEST_CASE("fiber sum validation") {
  CHECK_THROWS_AS(fiber_sum_invariants(FiberSumSpec{EllipticSurface{1}, 0, 0, 2}), InvalidParameter);
  CHECK_THROWS_AS(fiber_sum_invariants(FiberSumSpec{EllipticSurface{2}, 0, 3, 2}), InvalidParameter);
  CHECK_THROWS_AS(fiber_sum_invariants(FiberSumSpec{EllipticSurface{2}, 0, 1, 1}), InvalidParameter);
  CHECK_THROWS_AS(fiber_sum_invariants(FiberSumSpec{EllipticSurface{2}, 2, 1, 2}), InvalidParameter);
}

TEST_CASE("torus witness") {
  const TorusWitness t = torus_witness(bundle_spec(1, 2, 3, 0));
  CHECK(t.self_intersection == 0);
  CHECK(t.symplectic);
  CHECK_THROWS_AS(torus_witness(bundle_spec(1, 2, 3, 1)), InvalidParameter);
}
