#include <doctest.h>

#include <random>

#include "subfan/fan.hpp"
#include "subfan/linalg.hpp"

using namespace subfan;

namespace {

RationalVector random_point(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 97);
  RationalVector p(d);
  for (int i = 0; i < d; ++i) p(i) = Rational(num(rng), den(rng));
  return p;
}

Fan builtin_fan(Family f, int m) { return build_fan(builtin_group(f), builtin_word(f, m), builtin_rays(f, m)); }

// Number of cones containing p, solving each facet system from scratch.
int brute_cover(const Fan& fan, const RationalVector& p) {
  int count = 0;
  for (Face F : fan.complex.facets) {
    auto mu = solve(select_columns(fan.rays, face_positions(F)), RationalMatrix(p));
    REQUIRE(mu);
    bool inside = true;
    for (Eigen::Index i = 0; i < mu->rows(); ++i) inside = inside && (*mu)(i, 0) > 0;
    count += inside;
  }
  return count;
}

}  // namespace

TEST_CASE("builtin families have the right shapes") {
  for (int m = 3; m <= 6; ++m) {
    CHECK(builtin_rays(Family::M213, m).rows() == 3 * m - 6);
    CHECK(builtin_rays(Family::M213, m).cols() == 3 * m);
    CHECK(builtin_rays(Family::M123, m).rows() == 3 * m - 6);
    CHECK(builtin_rays(Family::M12, m).rows() == 2 * m - 4);
    CHECK(builtin_rays(Family::M12, m).cols() == 2 * m);
  }
  CHECK_THROWS(builtin_rays(Family::M213, 2));
  CHECK(parse_family("M_123") == Family::M123);
  CHECK_THROWS(parse_family("M_321"));
}

TEST_CASE("rays of M_213 are a Gale dual of the counting matrix") {
  for (int m = 3; m <= 6; ++m) {
    auto D = counting_matrix(3, {2, 1, 3}, m).D;
    CHECK(is_gale_dual(D, builtin_rays(Family::M213, m)));
    auto D2 = counting_matrix(3, {1, 2, 3}, m).D;
    CHECK(is_gale_dual(D2, builtin_rays(Family::M123, m)));
  }
}

TEST_CASE("folding recovers M_12") {
  for (int m = 3; m <= 8; ++m) CHECK(fold_to_b2(m) == builtin_rays(Family::M12, m));
}

TEST_CASE("builtin fans are complete") {
  std::mt19937_64 rng(21);
  for (Family f : {Family::M213, Family::M123, Family::M12}) {
    for (int m = 3; m <= 4; ++m) {
      Fan fan = builtin_fan(f, m);
      RationalMatrix D = kernel_basis(fan.rays);
      auto rep = check_complete(fan, &D);
      CHECK(rep.complete());
      REQUIRE(rep.signature_ok);
      CHECK(*rep.signature_ok);
      CoveringOracle oracle(fan);
      for (int t = 0; t < 10; ++t) {
        RationalVector p = random_point(rng, fan.dim());
        CHECK(oracle.covering_number(p) == 1);
        CHECK(brute_cover(fan, p) == 1);
      }
    }
  }
}

TEST_CASE("wall relations are linear dependencies") {
  Fan fan = builtin_fan(Family::M213, 4);
  auto walls = wall_relations(fan);
  CHECK(walls.size() == fan.complex.facets.size() * fan.dim() / 2);
  for (const auto& w : walls) {
    CHECK((fan.rays * w.coeffs).isZero());
    CHECK(w.coeffs(w.i) == 1);
    CHECK(w.coeffs(w.j) > 0);
    Face support = fan.complex.facets[w.facet_i] | fan.complex.facets[w.facet_j];
    for (int p = 0; p < fan.rays.cols(); ++p)
      if (!((support >> p) & 1)) CHECK(w.coeffs(p) == 0);
  }
}

TEST_CASE("broken fans are rejected") {
  Fan fan = builtin_fan(Family::M213, 4);
  SUBCASE("a repeated ray makes a facet singular") {
    Face F = fan.complex.facets[3];
    auto pos = face_positions(F);
    fan.rays.col(pos[1]) = fan.rays.col(pos[0]);
    auto rep = check_complete(fan);
    CHECK(!rep.basis_ok);
    CHECK(rep.singular_facet);
  }
  SUBCASE("reflecting one ray breaks the flip condition") {
    fan.rays.col(7) = -fan.rays.col(7);
    auto rep = check_complete(fan);
    CHECK(!rep.complete());
  }
  SUBCASE("a Gale dual of another matrix is refused") {
    RationalMatrix D = counting_matrix(3, {1, 2, 3}, 4).D;
    CHECK_THROWS(check_complete(fan, &D));
  }
}

TEST_CASE("positive rescaling keeps completeness") {
  Fan fan = builtin_fan(Family::M123, 4);
  for (int p = 0; p < fan.rays.cols(); ++p) fan.rays.col(p) *= Rational(p + 1, 3);
  CHECK(check_complete(fan).complete());
}

TEST_CASE("points on a cone boundary are reported") {
  Fan fan = builtin_fan(Family::M12, 4);
  CoveringOracle oracle(fan);
  RationalVector ray = fan.rays.col(0);
  CHECK_THROWS_AS(oracle.covering_number(ray), DegeneratePoint);
}

TEST_CASE("Gale normalization and links") {
  Fan fan = builtin_fan(Family::M213, 4);
  Face F = fan.complex.facets[5];
  RationalMatrix N = gale_normalize(fan.rays, F);
  auto pos = face_positions(F);
  CHECK(select_columns(N, pos).isIdentity());
  // Link of a vertex: restricted rays realize the link complex.
  Face v = Face(1) << pos[0];
  RationalMatrix L = restrict_to_link(N, v, F);
  CHECK(L.rows() == fan.dim() - 1);
  CHECK(L.cols() == fan.rays.cols() - 1);
  SimplicialComplex lk = link(fan.complex, v);
  for (Face G : lk.facets) {
    auto inv = inverse(select_columns(L, face_positions(G)));
    CHECK(inv);
  }
  CHECK_THROWS(restrict_to_link(N, Face(1) << 40, F));
}

TEST_CASE("reference facet is the negative orthant when present") {
  Fan fan = builtin_fan(Family::M213, 4);
  int ref = reference_facet(fan);
  RationalMatrix B = select_columns(fan.rays, face_positions(fan.complex.facets[ref]));
  CHECK((B * B.transpose()).isIdentity());
  CHECK(B.sum() == -fan.dim());
}
