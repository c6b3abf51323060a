// Acceptance gate: ten criteria, one line each, exact arithmetic
// throughout. Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "nilgeo/abelian.hpp"
#include "nilgeo/classify.hpp"
#include "nilgeo/geometry.hpp"
#include "nilgeo/isospectral.hpp"
#include "nilgeo/paper_suite.hpp"
#include "nilgeo/report.hpp"

using namespace nilgeo;

namespace {

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// True iff every named claim exists in the suite and passed. A missing
/// name counts as a failure so renames cannot hollow out the gate.
bool claims_subset(const std::vector<ClaimResult>& claims,
                   const std::vector<std::string>& names, std::string& detail) {
  for (const auto& want : names) {
    const ClaimResult* found = nullptr;
    for (const auto& c : claims)
      if (c.name == want) {
        found = &c;
        break;
      }
    if (!found) {
      detail = "claim not found: " + want;
      return false;
    }
    if (!found->pass) {
      detail = want + (found->detail.empty() ? "" : " (" + found->detail + ")");
      return false;
    }
  }
  return true;
}

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

}  // namespace

int main() {
  std::vector<Criterion> out;
  const auto nj = paper_nj();
  const auto njp = paper_njprime();
  const auto claims = run_paper_claims(nj, njp);

  // 1: the catalog pair reproduces the published matrices, bracket
  // tables, j_Z^2 displays, and the non-Heisenberg remarks.
  {
    Criterion c{"catalog fidelity: j-matrices, bracket tables, j_Z^2 displays"};
    c.pass = claims_subset(
        claims,
        {"both algebras have dim v = 6, dim z = 3",
         "first algebra: j-maps are the displayed block-diagonal matrices",
         "second algebra: j-maps are the displayed block-anti-diagonal matrices",
         "first algebra: bracket table matches the derived values",
         "second algebra: bracket table matches the derived values",
         "j_Z^2 on basis central directions is the displayed diagonal (both)",
         "neither is of Heisenberg type nor a modified Heisenberg algebra"},
        c.detail);
    out.push_back(c);
  }

  // 2: scalar invariants and the curvature displays.
  {
    Criterion c{"scalar invariants: J = -2 Id, B = 4 Id, curvature displays"};
    c.pass = claims_subset(claims,
                           {"J = -2 Id on v for both", "B = 4 Id on z for both",
                            "scalar curvature is -3 for both",
                            "Ricci: -1 on v directions, +1 on z directions (both)"},
                           c.detail);
    out.push_back(c);
  }

  // 3: closed forms vs definition-based oracles, pair + 50 random
  // algebras with n <= 6, m <= 3.
  {
    Criterion c{"oracle equivalence: pair + 50 seeded random algebras"};
    c.pass = true;
    std::size_t checks = 0;
    auto run = [&](const MetricTwoStepAlgebra& A, const std::string& label) {
      const auto s = run_oracle_checks(A);
      checks += s.checks_run;
      if (s.failures != 0 && c.pass) {
        c.pass = false;
        c.detail = label + ": " + s.first_failure;
      }
    };
    run(nj, "first algebra");
    run(njp, "second algebra");
    const std::pair<std::size_t, std::size_t> dims[] = {{3, 2}, {4, 2}, {3, 3}, {5, 2},
                                                        {4, 3}, {3, 2}, {6, 3}, {4, 2},
                                                        {5, 3}, {2, 2}};
    for (unsigned long seed = 1; seed <= 50; ++seed) {
      const auto [n, m] = dims[seed % 10];
      run(random_algebra(seed, n, m, 3), "seed " + std::to_string(seed));
    }
    if (c.pass) c.detail = std::to_string(checks) + " identities";
    out.push_back(c);
  }

  // 4: type A decisions, including the frozen counterexample, against
  // the symbolic oracle.
  {
    Criterion c{"type A: pair, Heisenberg family, quaternionic; counterexample rejected"};
    c.pass = claims_subset(claims, {"both algebras are type A (matrix test and symbolic test)"},
                           c.detail);
    auto expect = [&](const MetricTwoStepAlgebra& A, bool want, const char* label) {
      if (!c.pass) return;
      if (is_type_A(A) != want || is_type_A_symbolic_oracle(A) != want) {
        c.pass = false;
        c.detail = label;
      }
    };
    expect(heisenberg(1), true, "h3 should be type A");
    expect(heisenberg(2), true, "h5 should be type A");
    expect(quaternionic_heisenberg(), true, "quaternionic should be type A");
    expect(type_a_counterexample(), false, "counterexample should not be type A");
    out.push_back(c);
  }

  // 5: parallel Ricci; the full nabla-ric scan must agree with the
  // D = 2C shortcut wherever both J and B are scalar.
  {
    Criterion c{"parallel Ricci: catalog negatives, abelian positive, shortcut agreement"};
    c.pass = claims_subset(claims, {"the Ricci tensor is not parallel for either"}, c.detail);
    std::vector<std::pair<MetricTwoStepAlgebra, bool>> cases;
    for (std::size_t k = 1; k <= 3 && c.pass; ++k) cases.push_back({heisenberg(k), false});
    cases.push_back({quaternionic_heisenberg(), false});
    cases.push_back(
        {MetricTwoStepAlgebra::from_j_maps(3, 2, std::vector<QMatrix>(2, QMatrix(3, 3))),
         true});
    for (const auto& [A, want] : cases) {
      if (!c.pass) break;
      if (has_parallel_ricci(A) != want) {
        c.pass = false;
        c.detail = "catalog parallel-Ricci answer differs";
      }
    }
    for (unsigned long seed = 60; seed < 80 && c.pass; ++seed) {
      const auto A = random_algebra(seed, 3, 2, 2);
      const auto inv = scalar_invariants(A);
      if (inv.J_scalar && inv.B_scalar) {
        Rational twoC = *inv.J_scalar;
        twoC *= 2;
        if (has_parallel_ricci(A) != (*inv.B_scalar == twoC)) {
          c.pass = false;
          c.detail = "shortcut disagrees at seed " + std::to_string(seed);
        }
      }
    }
    out.push_back(c);
  }

  // 6: the dichotomy: fully verified structure on the first algebra,
  // exact commutator obstruction on the second.
  {
    Criterion c{"naturally reductive dichotomy: verified structure vs exact obstruction"};
    c.pass = claims_subset(
        claims, {"first algebra: naturally reductive with Ttilde(z1,z2) = -z3 (cyclic)",
                 "first algebra: commutator identities behind Ttilde hold directly",
                 "second algebra: [j'_1, j'_2] obstructs a homogeneous structure"},
        c.detail);
    if (c.pass) {
      const auto yes = naturally_reductive_structure(nj);
      const auto no = naturally_reductive_structure(njp);
      const auto* s = std::get_if<NRStructure>(&yes);
      const auto* o = std::get_if<Obstruction>(&no);
      if (!s || !s->unique_solution || !s->central_checks || !s->equations.all_pass()) {
        c.pass = false;
        c.detail = "first algebra: structure not fully verified";
      } else if (!o || o->kind != Obstruction::Kind::CommutatorOutsideImage ||
                 o->residual.is_zero()) {
        c.pass = false;
        c.detail = "second algebra: obstruction missing or degenerate";
      }
    }
    out.push_back(c);
  }

  // 7: the three isospectrality criteria with their certificates, on
  // M = Z^6 and L = (Z/2)^3.
  {
    Criterion c{"isospectrality criteria: eigenvalues, brackets, kernels certified"};
    c.pass = claims_subset(
        claims,
        {"eigenvalue criterion: both charpolys equal t^2 (t^2 + |Z|^2)^2",
         "bracket criterion: [M, M] lies in 2L for both quotients",
         "the dual lattice of L = (Z/2)^3 is (2Z)^3",
         "kernel criterion: ker j_Z = ker j'_Z on every stratum, certified",
         "kernel spot checks: v1, v4 at Z = z1; v2, v5 at Z = 2 z2",
         "kernel criterion sampled over dual points agrees",
         "all three criteria pass: the pair is isospectral"},
        c.detail);
    if (c.pass) {
      const auto gw = gordon_wilson(NilmanifoldData::standard(nj),
                                    NilmanifoldData::standard(njp));
      if (!gw.isospectral_by_criterion) {
        c.pass = false;
        c.detail = "aggregate verdict is not isospectral-by-criterion";
      }
    }
    out.push_back(c);
  }

  // 8: abelian censuses and the non-isomorphism evidence.
  {
    Criterion c{"abelian censuses: 9 planes / zero vs two 3-spaces, difference at 3"};
    c.pass = claims_subset(
        claims, {"first algebra: 9 abelian coordinate planes, none of dim 3",
                 "second algebra: exactly the two expected abelian 3-spaces",
                 "censuses first differ at dim 3 (0 vs 2)"},
        c.detail);
    if (c.pass) {
      const auto cmp = nonisomorphism_evidence(nj, njp);
      if (!cmp.first_difference || *cmp.first_difference != 3) {
        c.pass = false;
        c.detail = "census comparison does not separate the pair at dim 3";
      }
    }
    out.push_back(c);
  }

  // 9: structural curvature identities on 100 seeded random algebras.
  {
    Criterion c{"curvature identity suites: 100 seeded random algebras"};
    c.pass = true;
    std::size_t checks = 0;
    const std::pair<std::size_t, std::size_t> dims[] = {
        {3, 2}, {4, 2}, {4, 1}, {3, 3}, {5, 2}};
    for (unsigned long seed = 1000; seed < 1100; ++seed) {
      const auto [n, m] = dims[seed % 5];
      const auto s = run_curvature_property_checks(random_algebra(seed, n, m, 3));
      checks += s.checks_run;
      if (s.failures != 0) {
        c.pass = false;
        c.detail = "seed " + std::to_string(seed) + ": " + s.first_failure;
        break;
      }
    }
    if (c.pass) c.detail = std::to_string(checks) + " identities";
    out.push_back(c);
  }

  // 10: actual Laplace spectra are out of scope; isospectrality is
  // covered through the criterion gate above.
  {
    Criterion c{"spectral statement covered through the criterion gate"};
    c.pass = out[6].pass;
    c.detail = c.pass ? "no spectra are computed directly; criterion 7 carries the claim"
                      : "criterion 7 failed, so the coverage argument fails with it";
    out.push_back(c);
  }

  int failures = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& c = out[i];
    if (!c.pass) ++failures;
    std::printf("criterion %2zu: %s  %s%s%s\n", i + 1, c.pass ? "pass" : "FAIL",
                c.name.c_str(), c.detail.empty() ? "" : " -- ", c.detail.c_str());
  }
  if (failures == 0)
    std::printf("all %zu criteria pass\n", out.size());
  else
    std::printf("%d of %zu criteria FAIL\n", failures, out.size());
  return failures == 0 ? 0 : 1;
}
