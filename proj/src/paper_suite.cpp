#include "nilgeo/paper_suite.hpp"

#include <map>
#include <sstream>
#include <variant>

#include "nilgeo/abelian.hpp"
#include "nilgeo/classify.hpp"
#include "nilgeo/geometry.hpp"
#include "nilgeo/isospectral.hpp"
#include "nilgeo/linalg.hpp"

namespace nilgeo {

namespace {

QMatrix from_ints(const int (&a)[6][6]) {
  QMatrix M(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) M.at(i, j) = Rational(a[i][j]);
  return M;
}

QMatrix diag6(int d0, int d1, int d2, int d3, int d4, int d5) {
  QMatrix M(6, 6);
  const int d[6] = {d0, d1, d2, d3, d4, d5};
  for (std::size_t i = 0; i < 6; ++i) M.at(i, i) = Rational(d[i]);
  return M;
}

QVec zvec(int a, int b, int c) { return QVec{Rational(a), Rational(b), Rational(c)}; }

QVec flatten(const QMatrix& M) {
  QVec out;
  out.reserve(M.rows() * M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out.push_back(M.at(i, j));
  return out;
}

struct Recorder {
  std::vector<ClaimResult>& out;
  void check(const std::string& name, bool ok, const std::string& detail_on_fail = "") {
    out.push_back({name, ok, ok ? "" : detail_on_fail});
  }
};

}  // namespace

std::vector<ClaimResult> run_paper_claims(const MetricTwoStepAlgebra& nj,
                                          const MetricTwoStepAlgebra& njp) {
  std::vector<ClaimResult> claims;
  Recorder rec{claims};

  rec.check("both algebras have dim v = 6, dim z = 3",
            nj.dim_v() == 6 && nj.dim_z() == 3 && njp.dim_v() == 6 && njp.dim_z() == 3);
  if (!claims.back().pass) return claims;  // everything below assumes the shape

  // Structure matrices, entry by entry against independent literals.
  static const int J1[6][6] = {{0, 0, 0, 0, 0, 0},  {0, 0, 1, 0, 0, 0},
                               {0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, -1, 0}};
  static const int J2[6][6] = {{0, 0, -1, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
                               {1, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 0, 0},  {0, 0, 0, 1, 0, 0}};
  static const int J3[6][6] = {{0, 1, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0},
                               {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 0, 0}};
  static const int JP1[6][6] = {{0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, -1},
                                {0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 0},
                                {0, 0, -1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}};
  static const int JP2[6][6] = {{0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 0, 0},
                                {0, 0, 0, -1, 0, 0}, {0, 0, 1, 0, 0, 0},
                                {0, 0, 0, 0, 0, 0},  {-1, 0, 0, 0, 0, 0}};
  static const int JP3[6][6] = {{0, 0, 0, 0, -1, 0}, {0, 0, 0, 1, 0, 0},
                                {0, 0, 0, 0, 0, 0},  {0, -1, 0, 0, 0, 0},
                                {1, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 0}};
  rec.check("first algebra: j-maps are the displayed block-diagonal matrices",
            nj.j_map(0) == from_ints(J1) && nj.j_map(1) == from_ints(J2) &&
                nj.j_map(2) == from_ints(J3));
  rec.check("second algebra: j-maps are the displayed block-anti-diagonal matrices",
            njp.j_map(0) == from_ints(JP1) && njp.j_map(1) == from_ints(JP2) &&
                njp.j_map(2) == from_ints(JP3));

  // Bracket tables on v-basis pairs (a < b); unlisted pairs commute.
  const auto check_brackets = [&](const MetricTwoStepAlgebra& A,
                                  const std::map<std::pair<std::size_t, std::size_t>, QVec>&
                                      expected,
                                  const std::string& name) {
    bool ok = true;
    std::ostringstream bad;
    for (std::size_t a = 0; a < 6 && ok; ++a)
      for (std::size_t b = a + 1; b < 6; ++b) {
        const auto it = expected.find({a, b});
        const QVec want = it == expected.end() ? zvec(0, 0, 0) : it->second;
        if (A.bracket_v(A.basis_v(a).v, A.basis_v(b).v) != want) {
          ok = false;
          bad << "[v" << (a + 1) << ", v" << (b + 1) << "] differs";
          break;
        }
      }
    rec.check(name, ok, bad.str());
  };
  check_brackets(nj,
                 {{{0, 1}, zvec(0, 0, -1)},
                  {{0, 2}, zvec(0, 1, 0)},
                  {{1, 2}, zvec(-1, 0, 0)},
                  {{3, 4}, zvec(0, 0, -1)},
                  {{3, 5}, zvec(0, 1, 0)},
                  {{4, 5}, zvec(-1, 0, 0)}},
                 "first algebra: bracket table matches the derived values");
  check_brackets(njp,
                 {{{0, 4}, zvec(0, 0, 1)},
                  {{1, 3}, zvec(0, 0, -1)},
                  {{0, 5}, zvec(0, -1, 0)},
                  {{2, 3}, zvec(0, 1, 0)},
                  {{1, 5}, zvec(1, 0, 0)},
                  {{2, 4}, zvec(-1, 0, 0)}},
                 "second algebra: bracket table matches the derived values");

  // j_Z^2 on the central basis: the displayed rank-4 diagonals, identical
  // for the two algebras.
  const QMatrix sq1 = diag6(0, -1, -1, 0, -1, -1);
  const QMatrix sq2 = diag6(-1, 0, -1, -1, 0, -1);
  const QMatrix sq3 = diag6(-1, -1, 0, -1, -1, 0);
  rec.check("j_Z^2 on basis central directions is the displayed diagonal (both)",
            nj.j_squared(zvec(1, 0, 0)) == sq1 && nj.j_squared(zvec(0, 1, 0)) == sq2 &&
                nj.j_squared(zvec(0, 0, 1)) == sq3 &&
                njp.j_squared(zvec(1, 0, 0)) == sq1 &&
                njp.j_squared(zvec(0, 1, 0)) == sq2 &&
                njp.j_squared(zvec(0, 0, 1)) == sq3);

  // Invariants.
  rec.check("J = -2 Id on v for both",
            endo_J(nj) == QMatrix::identity(6) * Rational(-2) &&
                endo_J(njp) == QMatrix::identity(6) * Rational(-2));
  rec.check("B = 4 Id on z for both",
            endo_B(nj) == QMatrix::identity(3) * Rational(4) &&
                endo_B(njp) == QMatrix::identity(3) * Rational(4));
  rec.check("scalar curvature is -3 for both",
            scalar_curvature(nj) == Rational(-3) && scalar_curvature(njp) == Rational(-3));
  rec.check("Ricci: -1 on v directions, +1 on z directions (both)",
            ricci_tensor(nj, nj.basis_v(0), nj.basis_v(0)) == Rational(-1) &&
                ricci_tensor(nj, nj.basis_z(0), nj.basis_z(0)) == Rational(1) &&
                ricci_tensor(njp, njp.basis_v(0), njp.basis_v(0)) == Rational(-1) &&
                ricci_tensor(njp, njp.basis_z(0), njp.basis_z(0)) == Rational(1));

  // Classification.
  rec.check("both algebras are type A (matrix test and symbolic test)",
            is_type_A(nj) && is_type_A_symbolic_oracle(nj) && is_type_A(njp) &&
                is_type_A_symbolic_oracle(njp));
  const HeisenbergClassification h1 = heisenberg_classification(nj);
  const HeisenbergClassification h2 = heisenberg_classification(njp);
  rec.check("neither is of Heisenberg type nor a modified Heisenberg algebra",
            !h1.heisenberg_type && !h1.modified && !h1.lambda_form &&
                !h2.heisenberg_type && !h2.modified && !h2.lambda_form);
  rec.check("the Ricci tensor is not parallel for either",
            !has_parallel_ricci(nj) && !has_parallel_ricci(njp));

  // Homogeneous structure on the first algebra.
  {
    const NROutcome outcome = naturally_reductive_structure(nj);
    const auto* s = std::get_if<NRStructure>(&outcome);
    bool ok = s != nullptr;
    std::string detail = ok ? "" : "no structure returned";
    if (ok) {
      ok = s->unique_solution && s->central_checks && s->equations.all_pass() &&
           s->central_bracket[0][1] == zvec(0, 0, -1) &&
           s->central_bracket[0][2] == zvec(0, 1, 0) &&
           s->central_bracket[1][2] == zvec(-1, 0, 0);
      if (!ok) detail = "structure found but with unexpected data";
    }
    rec.check("first algebra: naturally reductive with Ttilde(z1,z2) = -z3 (cyclic)", ok,
              detail);
    rec.check("first algebra: commutator identities behind Ttilde hold directly",
              commutator(nj.j_map(0), nj.j_map(1)) == nj.j_of(zvec(0, 0, -1)) &&
                  commutator(nj.j_map(0), nj.j_map(2)) == nj.j_of(zvec(0, 1, 0)) &&
                  commutator(nj.j_map(1), nj.j_map(2)) == nj.j_of(zvec(-1, 0, 0)));
  }

  // Obstruction on the second algebra.
  {
    const NROutcome outcome = naturally_reductive_structure(njp);
    const auto* ob = std::get_if<Obstruction>(&outcome);
    bool ok = ob != nullptr && ob->kind == Obstruction::Kind::CommutatorOutsideImage &&
              ob->a == 0 && ob->b == 1;
    std::string detail = ok ? "" : "expected a commutator obstruction at (z1, z2)";
    if (ok) {
      // The commutator is block-diagonal while every j'_W is
      // block-anti-diagonal, so the projection is zero and the residual
      // is the commutator itself.
      const QMatrix K = commutator(njp.j_map(0), njp.j_map(1));
      ok = ob->residual == K && !K.is_zero();
      bool blocks = true;
      for (std::size_t i = 0; i < 3 && blocks; ++i)
        for (std::size_t j = 3; j < 6; ++j)
          if (K.at(i, j) != 0 || K.at(j, i) != 0) {
            blocks = false;
            break;
          }
      ok = ok && blocks;
      // Certificate re-check: annihilates every j'_k, pairs nonzero with
      // the commutator.
      for (std::size_t k = 0; k < 3; ++k)
        ok = ok && dot(ob->certificate, flatten(njp.j_map(k))) == 0;
      ok = ok && dot(ob->certificate, flatten(K)) != 0;
      if (!ok) detail = "obstruction certificate failed its re-check";
    }
    rec.check("second algebra: [j'_1, j'_2] obstructs a homogeneous structure", ok, detail);
  }

  // Isospectrality criteria for the standard pair of quotients.
  const NilmanifoldData N1 = NilmanifoldData::standard(nj);
  const NilmanifoldData N2 = NilmanifoldData::standard(njp);

  {
    const EigenvalueCriterion ec = criterion_eigenvalues(nj, njp);
    Poly s = Poly::zero(3);
    for (std::size_t k = 0; k < 3; ++k) s += Poly::variable(3, k) * Poly::variable(3, k);
    const Poly zero = Poly::zero(3), one = Poly::constant(3, Rational(1));
    const std::vector<Poly> expected = {zero, zero, s * s, zero, s + s, zero, one};
    rec.check("eigenvalue criterion: both charpolys equal t^2 (t^2 + |Z|^2)^2",
              ec.status == CriterionStatus::Pass && ec.charpoly_first == expected &&
                  ec.charpoly_second == expected,
              ec.detail);
  }

  rec.check("bracket criterion: [M, M] lies in 2L for both quotients",
            criterion_bracket_lattice(N1, N2).status == CriterionStatus::Pass);

  {
    const IntegerLattice dual = N1.L.dual();
    const IntegerLattice twoZ = IntegerLattice::scaled_standard(3, Rational(2));
    bool ok = dual.ambient_dim() == 3 && dual.rank() == 3;
    for (const QVec& v : dual.basis()) ok = ok && twoZ.contains(v);
    for (const QVec& v : twoZ.basis()) ok = ok && dual.contains(v);
    rec.check("the dual lattice of L = (Z/2)^3 is (2Z)^3", ok);
  }

  {
    KernelOptions opts;
    opts.mode = KernelMode::Symbolic;
    const KernelCriterion kc = criterion_kernel_lattices(N1, N2, opts);
    bool ok = kc.status == CriterionStatus::Pass && kc.strata.size() == 3;
    for (const auto& s : kc.strata)
      ok = ok && s.dims_equal && s.cross_annihilation && s.whole_stratum &&
           s.kernel_first.size() == 2;
    rec.check("kernel criterion: ker j_Z = ker j'_Z on every stratum, certified", ok,
              kc.detail);
  }

  {
    // Spot checks of the kernels at specific central points.
    const QMatrix j100 = nj.j_of(zvec(1, 0, 0));
    const QMatrix jp020 = njp.j_of(zvec(0, 2, 0));
    auto kills = [](const QMatrix& M, std::size_t col) {
      QVec e(6, Rational(0));
      e[col] = 1;
      return vec_is_zero(M * e);
    };
    rec.check("kernel spot checks: v1, v4 at Z = z1; v2, v5 at Z = 2 z2",
              rank(j100) == 4 && kills(j100, 0) && kills(j100, 3) && rank(jp020) == 4 &&
                  kills(jp020, 1) && kills(jp020, 4));
  }

  {
    KernelOptions opts;
    opts.mode = KernelMode::Sampled;
    const KernelCriterion kc = criterion_kernel_lattices(N1, N2, opts);
    rec.check("kernel criterion sampled over dual points agrees",
              kc.status == CriterionStatus::Pass && !kc.samples.empty(), kc.detail);
  }

  {
    const GordonWilsonReport gw = gordon_wilson(N1, N2);
    rec.check("all three criteria pass: the pair is isospectral", gw.isospectral_by_criterion);
  }

  // Abelian censuses.
  rec.check("first algebra: 9 abelian coordinate planes, none of dim 3",
            coordinate_abelian_census(nj, 2).abelian_subsets.size() == 9 &&
                coordinate_abelian_census(nj, 3).abelian_subsets.empty());
  {
    const AbelianReport c3 = coordinate_abelian_census(njp, 3);
    const std::vector<std::vector<std::size_t>> expected = {{0, 1, 2}, {3, 4, 5}};
    rec.check("second algebra: exactly the two expected abelian 3-spaces",
              c3.abelian_subsets == expected);
  }
  rec.check("censuses first differ at dim 3 (0 vs 2)",
            nonisomorphism_evidence(nj, njp).first_difference == std::size_t{3});

  return claims;
}

bool all_claims_pass(const std::vector<ClaimResult>& claims) {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

}  // namespace nilgeo
