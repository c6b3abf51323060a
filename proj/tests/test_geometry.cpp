#include <doctest.h>

#include <vector>

#include "nilgeo/algebra.hpp"
#include "nilgeo/geometry.hpp"
#include "nilgeo/report.hpp"

using namespace nilgeo;

namespace {

std::vector<MetricTwoStepAlgebra> catalog_sample() {
  return {heisenberg(1), heisenberg(2), quaternionic_heisenberg(), paper_nj(),
          paper_njprime()};
}

}  // namespace

TEST_CASE("closed forms match the definition-based oracles on the catalog") {
  for (const auto& A : catalog_sample()) {
    const auto s = run_oracle_checks(A);
    CHECK(s.failures == 0);
    CHECK(s.first_failure.empty());
    CHECK(s.checks_run > 0);
  }
}

TEST_CASE("closed forms match the oracles on random algebras") {
  const std::pair<std::size_t, std::size_t> dims[] = {{3, 2}, {4, 2}, {5, 3}};
  unsigned long seed = 100;
  for (const auto& [n, m] : dims)
    for (int t = 0; t < 4; ++t) {
      const auto A = random_algebra(seed++, n, m, 3);
      const auto s = run_oracle_checks(A);
      CHECK_MESSAGE(s.failures == 0, "seed ", seed - 1, ": ", s.first_failure);
    }
}

TEST_CASE("curvature identities hold on catalog and random algebras") {
  for (const auto& A : catalog_sample()) {
    const auto s = run_curvature_property_checks(A);
    CHECK_MESSAGE(s.failures == 0, s.first_failure);
  }
  for (unsigned long seed = 200; seed < 206; ++seed) {
    const auto A = random_algebra(seed, 4, 2, 3);
    const auto s = run_curvature_property_checks(A);
    CHECK_MESSAGE(s.failures == 0, "seed ", seed, ": ", s.first_failure);
  }
}

TEST_CASE("connection values on the classical Heisenberg algebra") {
  const auto A = heisenberg(1);
  const auto v1 = A.basis_v(0), v2 = A.basis_v(1), z = A.basis_z(0);

  // [v1, v2] carries the j entry: <[v1,v2], z> = <j v1, v2> = -1.
  CHECK(A.bracket(v1, v2) == -z);

  const Rational half(1, 2), mhalf(-1, 2);
  // nabla_{v1} v2 = 1/2 [v1, v2]; nabla between center and v rotates.
  CHECK(nabla(A, v1, v2) == mhalf * z);
  CHECK(nabla(A, v2, v1) == half * z);
  CHECK(nabla(A, v1, z) == half * v2);
  CHECK(nabla(A, z, v1) == half * v2);
  CHECK(nabla(A, v2, z) == mhalf * v1);
  CHECK(nabla(A, z, z).is_zero());
  CHECK(nabla(A, v1, v1).is_zero());
}

TEST_CASE("curvature invariants of the Heisenberg algebras") {
  const auto h3 = heisenberg(1);
  CHECK(endo_J(h3) == QMatrix::identity(2) * Rational(-1));
  CHECK(endo_B(h3) == QMatrix{{2}});
  CHECK(scalar_curvature(h3) == Rational(-1) / 2);

  // ric has eigenvalues -1/2 on v and +1/2 on z.
  const auto v1 = h3.basis_v(0), z = h3.basis_z(0);
  CHECK(ricci_tensor(h3, v1, v1) == Rational(-1) / 2);
  CHECK(ricci_tensor(h3, z, z) == Rational(1) / 2);
  CHECK(ricci_tensor(h3, v1, z) == Rational(0));

  const auto q = quaternionic_heisenberg();
  CHECK(endo_J(q) == QMatrix::identity(4) * Rational(-3));
  CHECK(endo_B(q) == QMatrix::identity(3) * Rational(4));
  CHECK(scalar_curvature(q) == Rational(-3));
}

TEST_CASE("Jacobi operator agrees with curvature") {
  const auto A = paper_nj();
  std::vector<ElementVector> e;
  for (std::size_t i = 0; i < 6; ++i) e.push_back(A.basis_v(i));
  for (std::size_t k = 0; k < 3; ++k) e.push_back(A.basis_z(k));
  for (const auto& V : e)
    for (const auto& X : e) CHECK(jacobi_operator(A, V, X) == curvature(A, X, V, V));
}

TEST_CASE("Ricci derivative is totally explicit for the pair") {
  // For both nine-dimensional algebras J and B are scalar, and
  // (nabla_X ric)(Y, Z) = (C/4 - D/8)(<j_{Y^z} X^v, Z^v> + <j_{Z^z} X^v, Y^v>)
  // with C = -2, D = 4, so the factor is -1.
  for (const auto& A : {paper_nj(), paper_njprime()}) {
    std::vector<ElementVector> e;
    for (std::size_t i = 0; i < 6; ++i) e.push_back(A.basis_v(i));
    for (std::size_t k = 0; k < 3; ++k) e.push_back(A.basis_z(k));
    for (const auto& X : e)
      for (const auto& Y : e)
        for (const auto& Z : e) {
          Rational expect = dot(A.j_of(Y.z) * X.v, Z.v);
          expect += dot(A.j_of(Z.z) * X.v, Y.v);
          expect *= Rational(-1);
          CHECK(nabla_ric(A, X, Y, Z) == expect);
        }
  }
}

TEST_CASE("abelian algebra is flat") {
  const auto A = MetricTwoStepAlgebra::from_j_maps(3, 1, {QMatrix(3, 3)});
  std::vector<ElementVector> e;
  for (std::size_t i = 0; i < 3; ++i) e.push_back(A.basis_v(i));
  e.push_back(A.basis_z(0));
  for (const auto& X : e)
    for (const auto& Y : e) {
      CHECK(nabla(A, X, Y).is_zero());
      for (const auto& Z : e) CHECK(curvature(A, X, Y, Z).is_zero());
    }
  CHECK(scalar_curvature(A) == Rational(0));
}
