#include <doctest.h>

#include <variant>
#include <vector>

#include "nilgeo/classify.hpp"
#include "nilgeo/geometry.hpp"
#include "nilgeo/linalg.hpp"

using namespace nilgeo;

namespace {

const QMatrix rot{{0, 1}, {-1, 0}};

// n = 4, m = 2 algebra whose J = diag(-2, -1, -5, -4) is not scalar and
// where J o j_2 fails skewness: not type A.
MetricTwoStepAlgebra type_a_counterexample() {
  QMatrix j1(4, 4), j2(4, 4);
  j1.at(0, 1) = 1;
  j1.at(1, 0) = -1;
  j1.at(2, 3) = 2;
  j1.at(3, 2) = -2;
  j2.at(0, 2) = 1;
  j2.at(2, 0) = -1;
  return MetricTwoStepAlgebra::from_j_maps(4, 2, {j1, j2});
}

MetricTwoStepAlgebra abelian(std::size_t n, std::size_t m) {
  return MetricTwoStepAlgebra::from_j_maps(n, m, std::vector<QMatrix>(m, QMatrix(n, n)));
}

QVec flatten(const QMatrix& M) {
  QVec out;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out.push_back(M.at(i, j));
  return out;
}

}  // namespace

TEST_CASE("type A: positives and the frozen counterexample") {
  for (const auto& A :
       {paper_nj(), paper_njprime(), heisenberg(1), heisenberg(3), quaternionic_heisenberg()}) {
    CHECK(is_type_A(A));
    CHECK(is_type_A_symbolic_oracle(A));
  }
  const auto C = type_a_counterexample();
  Rational scale;
  CHECK_FALSE(endo_J(C).is_scalar(scale));
  CHECK_FALSE(is_type_A(C));
  CHECK_FALSE(is_type_A_symbolic_oracle(C));
}

TEST_CASE("the two type A tests agree on random algebras") {
  for (unsigned long seed = 300; seed < 312; ++seed) {
    const auto A = random_algebra(seed, 4, 2, 2);
    CHECK(is_type_A(A) == is_type_A_symbolic_oracle(A));
  }
}

TEST_CASE("scalar invariants") {
  const auto inv_nj = scalar_invariants(paper_nj());
  REQUIRE(inv_nj.J_scalar.has_value());
  REQUIRE(inv_nj.B_scalar.has_value());
  CHECK(*inv_nj.J_scalar == Rational(-2));
  CHECK(*inv_nj.B_scalar == Rational(4));

  const auto inv_h3 = scalar_invariants(heisenberg(1));
  CHECK(*inv_h3.J_scalar == Rational(-1));
  CHECK(*inv_h3.B_scalar == Rational(2));

  const auto inv_q = scalar_invariants(quaternionic_heisenberg());
  CHECK(*inv_q.J_scalar == Rational(-3));
  CHECK(*inv_q.B_scalar == Rational(4));

  CHECK_FALSE(scalar_invariants(type_a_counterexample()).J_scalar.has_value());
}

TEST_CASE("Heisenberg-type and modified classification") {
  const auto h = heisenberg_classification(heisenberg(1));
  CHECK(h.heisenberg_type);
  CHECK(h.modified);
  REQUIRE(h.lambda_form.has_value());
  CHECK(*h.lambda_form == QMatrix{{-1}});

  const auto q = heisenberg_classification(quaternionic_heisenberg());
  CHECK(q.heisenberg_type);
  CHECK(q.modified);
  CHECK(*q.lambda_form == QMatrix::identity(3) * Rational(-1));

  // Scaled rotation: modified but not of Heisenberg type.
  const auto scaled = heisenberg_classification(
      MetricTwoStepAlgebra::from_j_maps(2, 1, {rot * Rational(2)}));
  CHECK_FALSE(scaled.heisenberg_type);
  CHECK(scaled.modified);
  CHECK(*scaled.lambda_form == QMatrix{{-4}});

  // j_Z^2 = -(c1 - c2)^2 Id: scalar lambda that degenerates on a line,
  // so neither of Heisenberg type nor modified.
  const auto degenerate = heisenberg_classification(
      MetricTwoStepAlgebra::from_j_maps(2, 2, {rot, rot * Rational(-1)}));
  CHECK_FALSE(degenerate.heisenberg_type);
  CHECK_FALSE(degenerate.modified);
  REQUIRE(degenerate.lambda_form.has_value());
  CHECK(*degenerate.lambda_form == QMatrix{{-1, 1}, {1, -1}});

  // The nine-dimensional pair is neither, and lambda is not even scalar.
  for (const auto& A : {paper_nj(), paper_njprime()}) {
    const auto c = heisenberg_classification(A);
    CHECK_FALSE(c.heisenberg_type);
    CHECK_FALSE(c.modified);
    CHECK_FALSE(c.lambda_form.has_value());
  }
}

TEST_CASE("parallel Ricci tensor") {
  CHECK(has_parallel_ricci(abelian(3, 1)));
  CHECK(has_parallel_ricci(abelian(2, 2)));
  for (const auto& A : {paper_nj(), paper_njprime(), heisenberg(1), heisenberg(2),
                        quaternionic_heisenberg()})
    CHECK_FALSE(has_parallel_ricci(A));
}

TEST_CASE("parallel Ricci agrees with the scalar shortcut where it applies") {
  std::vector<MetricTwoStepAlgebra> algebras = {paper_nj(), paper_njprime(), heisenberg(1),
                                                heisenberg(2), quaternionic_heisenberg(),
                                                abelian(3, 2)};
  for (unsigned long seed = 400; seed < 408; ++seed)
    algebras.push_back(random_algebra(seed, 3, 2, 2));
  for (const auto& A : algebras) {
    const auto inv = scalar_invariants(A);
    if (inv.J_scalar && inv.B_scalar) {
      Rational twoC = *inv.J_scalar;
      twoC *= 2;
      CHECK(has_parallel_ricci(A) == (*inv.B_scalar == twoC));
    }
    // Parallel implies cyclic-parallel.
    if (has_parallel_ricci(A)) CHECK(is_type_A(A));
  }
}

TEST_CASE("homogeneous structure applies the declared shape") {
  const auto A = heisenberg(1);
  const auto v1 = A.basis_v(0), v2 = A.basis_v(1), z = A.basis_z(0);
  const HomogeneousStructure T(A, {{QVec{Rational(0)}}});
  const Rational half(1, 2), mhalf(-1, 2);
  CHECK(T.apply(v1, v2) == mhalf * z);
  CHECK(T.apply(v1, z) == half * v2);
  CHECK(T.apply(z, v1) == mhalf * v2);
  CHECK(T.apply(z, z).is_zero());

  // nabla - T is the canonical connection -j_{X^z} Y^v - Ttilde(X^z, Y^z).
  RationalSampler s(17);
  for (int t = 0; t < 8; ++t) {
    ElementVector X = ElementVector::zero(2, 1), Y = ElementVector::zero(2, 1);
    X.v = s.next_vec(2);
    X.z = s.next_vec(1);
    Y.v = s.next_vec(2);
    Y.z = s.next_vec(1);
    ElementVector want = ElementVector::zero(2, 1);
    want.v = vec_scale(Rational(-1), A.j_of(X.z) * Y.v);
    CHECK(nabla(A, X, Y) - T.apply(X, Y) == want);
  }
}

TEST_CASE("equation verifier rejects a wrong central bracket") {
  const auto A = heisenberg(1);
  // Ttilde(z, z) = z violates T_X X = 0.
  const HomogeneousStructure bad(A, {{QVec{Rational(1)}}});
  const auto rep = verify_homogeneous_structure(bad);
  CHECK_FALSE(rep.nr4);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.first_failure.empty());
}

TEST_CASE("naturally reductive: classical Heisenberg carries a structure") {
  const auto out = naturally_reductive_structure(heisenberg(1));
  REQUIRE(std::holds_alternative<NRStructure>(out));
  const auto& s = std::get<NRStructure>(out);
  CHECK(s.unique_solution);
  CHECK(s.central_checks);
  CHECK(s.equations.all_pass());
  CHECK(vec_is_zero(s.central_bracket[0][0]));
}

TEST_CASE("naturally reductive: quaternionic structure is the scaled cross bracket") {
  const auto A = quaternionic_heisenberg();
  const auto out = naturally_reductive_structure(A);
  REQUIRE(std::holds_alternative<NRStructure>(out));
  const auto& s = std::get<NRStructure>(out);
  CHECK(s.unique_solution);
  CHECK(s.central_checks);
  CHECK(s.equations.all_pass());
  CHECK(s.central_bracket[0][1] == QVec{0, 0, 2});
  CHECK(s.central_bracket[1][2] == QVec{2, 0, 0});
  CHECK(s.central_bracket[0][2] == QVec{0, -2, 0});
  CHECK(s.central_bracket[1][0] == QVec{0, 0, -2});
  // Defining property: j of the table entry is the commutator.
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(A.j_of(s.central_bracket[a][b]) == commutator(A.j_map(a), A.j_map(b)));
}

TEST_CASE("naturally reductive: obstruction carries a checkable certificate") {
  const auto A = paper_njprime();
  const auto out = naturally_reductive_structure(A);
  REQUIRE(std::holds_alternative<Obstruction>(out));
  const auto& o = std::get<Obstruction>(out);
  CHECK(o.kind == Obstruction::Kind::CommutatorOutsideImage);
  CHECK_FALSE(o.residual.is_zero());
  CHECK_FALSE(o.detail.empty());

  // The certificate annihilates the whole image of Z -> j_Z but pairs
  // nonzero with the commutator it indicts.
  const QMatrix K = commutator(A.j_map(o.a), A.j_map(o.b));
  for (std::size_t k = 0; k < A.dim_z(); ++k)
    CHECK(dot(o.certificate, flatten(A.j_map(k))) == Rational(0));
  CHECK(dot(o.certificate, flatten(K)) != Rational(0));
}

TEST_CASE("naturally reductive: inapplicable hypotheses are named") {
  const auto not_scalar_J = naturally_reductive_structure(type_a_counterexample());
  REQUIRE(std::holds_alternative<Inapplicable>(not_scalar_J));
  CHECK(std::get<Inapplicable>(not_scalar_J).failed_hypothesis.find("J") !=
        std::string::npos);

  // J = -5 Id but B = [[2, 4], [4, 8]] is not scalar.
  const auto mixed = MetricTwoStepAlgebra::from_j_maps(2, 2, {rot, rot * Rational(2)});
  const auto not_scalar_B = naturally_reductive_structure(mixed);
  REQUIRE(std::holds_alternative<Inapplicable>(not_scalar_B));
  CHECK(std::get<Inapplicable>(not_scalar_B).failed_hypothesis.find("B") !=
        std::string::npos);

  const auto parallel = naturally_reductive_structure(abelian(2, 1));
  REQUIRE(std::holds_alternative<Inapplicable>(parallel));
  CHECK(std::get<Inapplicable>(parallel).failed_hypothesis.find("D = 2C") !=
        std::string::npos);
}

TEST_CASE("classification report aggregates the pieces") {
  const auto r = classify_algebra(quaternionic_heisenberg());
  CHECK(r.type_A);
  CHECK(r.heisenberg_type);
  CHECK(r.modified_heisenberg);
  REQUIRE(r.lambda_form.has_value());
  CHECK(*r.lambda_form == QMatrix::identity(3) * Rational(-1));
  CHECK(*r.scalar_J == Rational(-3));
  CHECK(*r.scalar_B == Rational(4));
  CHECK_FALSE(r.parallel_ricci);

  const auto c = classify_algebra(type_a_counterexample());
  CHECK_FALSE(c.type_A);
  CHECK_FALSE(c.scalar_J.has_value());
}
