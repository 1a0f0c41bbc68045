#include <set>

#include "doctest.h"
#include "mcgspin/constructions.hpp"
#include "mcgspin/errors.hpp"
#include "mcgspin/invariants.hpp"
#include "support.hpp"

using namespace mcgspin;
using testsupport::uniform;

namespace {

IntMatrix random_symplectic(int g, int steps) {
  IntMatrix m = IntMatrix::identity(2 * g);
  for (int i = 0; i < steps; ++i) multiply_by_transvection(m, testsupport::random_int(g, 1, true), uniform(0, 1) ? 1 : -1);
  return m;
}

PositiveFactorization chain_word(int g, int length) {
  const auto c = chain_curves(g);
  return PositiveFactorization(g, std::vector<Curve>(c.begin(), c.begin() + length), 0);
}

}  // namespace

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(u_v_factorizations(5).u) == 28);
  for (int k : {0, 3, 12}) CHECK(euler_characteristic(build_z(5, k)) == 12 * 6 + 4 * k);
}

TEST_CASE("Endo signature") {
  const HyperellipticCertificate hyp{"commutes with the hyperelliptic involution"};
  for (int g : {5, 7, 9}) CHECK(signature_endo(u_v_factorizations(g).u, hyp) == -4 * g - 4);
  const auto uv = u_v_factorizations(5);
  const auto w = phi_psi(5);
  CHECK(signature_endo(fiber_sum(conjugate(uv.v, w.phi), uv.u, w.psi), hyp) == -48);
  CHECK(signature_endo(chain_word(5, 11), hyp) == -6);
  // l = 1 at g = 5 gives -6/11
  CHECK_THROWS_AS(signature_endo(chain_word(5, 1), hyp), Error);
  const PositiveFactorization separating(2, {Curve("s", ClassMod2(2))}, 0);
  CHECK_THROWS_AS(signature_endo(separating, hyp), Error);
}

TEST_CASE("signature of symmetric matrices") {
  using R = Rational;
  CHECK(signature_of_symmetric({}) == 0);
  CHECK(signature_of_symmetric({{R(0), R(1)}, {R(1), R(0)}}) == 0);
  CHECK(signature_of_symmetric({{R(-2), R(0)}, {R(0), R(-3)}}) == -2);
  CHECK(signature_of_symmetric({{R(1), R(2)}, {R(2), R(1)}}) == 0);
  CHECK(signature_of_symmetric({{R(2), R(1)}, {R(1), R(2)}}) == 2);
  // diagonal oracle: congruence by a random unimodular change of basis keeps the signature
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform(1, 4);
    std::vector<int> diag(n);
    int expect = 0;
    for (auto& d : diag) {
      d = uniform(-2, 2);
      expect += (d > 0) - (d < 0);
    }
    std::vector<std::vector<R>> p(n, std::vector<R>(n, R(0)));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    for (int k = 0; k < 4; ++k) {
      const int i = uniform(0, n - 1), j = uniform(0, n - 1);
      if (i == j) continue;
      const int f = uniform(-2, 2);
      for (int c = 0; c < n; ++c) p[i][c] += f * p[j][c];
    }
    std::vector<std::vector<R>> s(n, std::vector<R>(n, R(0)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) s[a][b] += p[k][a] * diag[k] * p[k][b];
    CHECK(signature_of_symmetric(s) == expect);
  }
}

TEST_CASE("Meyer cocycle properties") {
  for (int trial = 0; trial < 200; ++trial) {
    const int g = uniform(1, 3);
    const auto a = random_symplectic(g, uniform(1, 4));
    const auto b = random_symplectic(g, uniform(1, 4));
    const auto c = random_symplectic(g, uniform(1, 4));
    CHECK(meyer_cocycle(IntMatrix::identity(2 * g), a) == 0);
    CHECK(meyer_cocycle(a, IntMatrix::identity(2 * g)) == 0);
    CHECK(meyer_cocycle(a, b) + meyer_cocycle(a * b, c) == meyer_cocycle(a, b * c) + meyer_cocycle(b, c));
    CHECK(meyer_cocycle(a, b) == meyer_cocycle(b, a));
  }
}

TEST_CASE("Meyer signature") {
  // E(1): (t_a t_b)^6 on the torus
  const Curve a = Curve::from_integral("a", ClassInt::basis_vector(1, 0));
  const Curve b = Curve::from_integral("b", ClassInt::basis_vector(1, 1));
  std::vector<Curve> e1;
  for (int i = 0; i < 6; ++i) e1.insert(e1.end(), {a, b});
  CHECK(signature_meyer(PositiveFactorization(1, e1, 1)) == -8);
  CHECK(signature_meyer(korkmaz_cadavid(3)) == -8);
  for (int g : {5, 7}) CHECK(signature_meyer(u_v_factorizations(g).u) == -4 * g - 4);
  CHECK(signature_meyer(PositiveFactorization(1, {a}, 0)) == 0);
  CHECK_THROWS_AS(signature_meyer(build_z(5, 1)), Error);
}

TEST_CASE("Meyer signature is additive on the twisted fiber sum") {
  const auto uv = u_v_factorizations(5);
  const auto w = phi_psi(5);
  const auto sum = fiber_sum(conjugate(uv.v, w.phi), uv.u, w.psi);
  CHECK(signature_meyer(sum) == 2 * signature_meyer(uv.u));
  CHECK(signature_meyer(sum) == -48);
}

TEST_CASE("invariants_of") {
  const auto u = u_v_factorizations(5).u;
  const auto endo = invariants_of(u, SignatureSource::EndoHyperelliptic, HyperellipticCertificate{"U"});
  const auto meyer = invariants_of(u, SignatureSource::Meyer);
  CHECK(endo.signature == meyer.signature);
  CHECK(4 * endo.chi_h == endo.euler + endo.signature);
  CHECK(endo.c1_squared == 2 * endo.euler + 3 * endo.signature);
  CHECK_THROWS_AS(invariants_of(u, SignatureSource::PaperFormula), Error);
  CHECK_THROWS_AS(invariants_of(u, SignatureSource::EndoHyperelliptic), Error);
  const auto z = invariants_of(build_z(5, 2), SignatureSource::PaperFormula);
  CHECK(z.euler == 80);
  CHECK(z.chi_h == 8);
  CHECK(z.c1_squared == 16);
}

TEST_CASE("geography") {
  CHECK(is_admissible({6, 0}));
  CHECK(is_admissible({7, 8}));
  CHECK_FALSE(is_admissible({6, 8}));
  CHECK_FALSE(is_admissible({4, 0}));
  CHECK(realize({6, 0}) == ZFamily{5, 0});
  CHECK(realize({7, 8}) == ZFamily{5, 1});
  CHECK_FALSE(realize({6, 8}).has_value());
  CHECK(enumerate_region(6) == std::vector<GeographyPoint>{{6, 0}});
  CHECK(enumerate_region(8) == std::vector<GeographyPoint>{{6, 0}, {7, 8}, {8, 0}, {8, 16}});
  CHECK_THROWS_AS(enumerate_region(kMaxRegionM + 1), Error);

  std::set<GeographyPoint> brute;
  for (std::int64_t m = 0; m <= 200; ++m)
    for (std::int64_t n = -16; n <= 16 * m; ++n)
      if (n >= 0 && (n - 8 * m) % 16 == 0 && n <= 8 * (m - 6) && 3 * n <= 16 * m) brute.insert({m, n});
  const auto region = enumerate_region(200);
  CHECK(std::set<GeographyPoint>(region.begin(), region.end()) == brute);
  for (const auto& pt : region) {
    const auto f = realize(pt);
    REQUIRE(f.has_value());
    CHECK(family_point(*f) == pt);
  }
  for (int g = 5; g <= 11; g += 2)
    for (int k = 0; k <= 2 * g + 2; ++k) {
      const auto pt = family_point({g, k});
      CHECK(is_admissible(pt));
      CHECK(realize(pt) == ZFamily{g, k});
    }
}
