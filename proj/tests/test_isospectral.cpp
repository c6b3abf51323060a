#include <doctest.h>

#include <algorithm>
#include <vector>

#include "nilgeo/abelian.hpp"
#include "nilgeo/isospectral.hpp"
#include "nilgeo/linalg.hpp"
#include "nilgeo/paper_suite.hpp"
#include "nilgeo/report.hpp"

using namespace nilgeo;

namespace {

NilmanifoldData standard_pair_first() { return NilmanifoldData::standard(paper_nj()); }
NilmanifoldData standard_pair_second() { return NilmanifoldData::standard(paper_njprime()); }

/// j_1 scaled by 2: same dimensions as the first pair member, different
/// eigenvalues along z_1.
MetricTwoStepAlgebra detuned_nj() {
  auto maps = paper_nj().j_maps();
  maps[0] = maps[0] * Rational(2);
  return MetricTwoStepAlgebra::from_j_maps(6, 3, maps);
}

}  // namespace

TEST_CASE("standard lattice choice") {
  const auto N = standard_pair_first();
  CHECK(N.M.rank() == 6);
  CHECK(N.M.contains(QVec{1, 0, 0, 0, 0, 0}));
  CHECK_FALSE(N.M.contains(QVec{Rational(1) / 2, 0, 0, 0, 0, 0}));
  // L = (Z/2)^3 for the nine-dimensional pair's dimensions.
  CHECK(N.L.contains(QVec{Rational(1) / 2, 0, 0}));

  const auto H = NilmanifoldData::standard(heisenberg(1));
  CHECK(H.L.contains(QVec{1}));
  CHECK_FALSE(H.L.contains(QVec{Rational(1) / 2}));
}

TEST_CASE("eigenvalue criterion on the pair") {
  const auto r = criterion_eigenvalues(paper_nj(), paper_njprime());
  CHECK(r.status == CriterionStatus::Pass);
  CHECK(r.charpoly_first == r.charpoly_second);
  REQUIRE(r.charpoly_first.size() == 7);

  // t^2 (t^2 + |Z|^2)^2 with |Z|^2 = c1^2 + c2^2 + c3^2, ascending in t.
  Poly s = Poly::zero(3);
  for (std::size_t k = 0; k < 3; ++k)
    s += Poly::variable(3, k) * Poly::variable(3, k);
  const std::vector<Poly> expect{Poly::zero(3), Poly::zero(3), s * s, Poly::zero(3),
                                 Poly(2) * s,   Poly::zero(3), Poly(1)};
  CHECK(r.charpoly_first == expect);
  CHECK_FALSE(r.witness_Z.has_value());
}

TEST_CASE("eigenvalue criterion fails with a witness on a detuned pair") {
  const auto r = criterion_eigenvalues(paper_nj(), detuned_nj());
  CHECK(r.status == CriterionStatus::Fail);
  REQUIRE(r.witness_Z.has_value());
  const auto& Z = *r.witness_Z;
  CHECK(charpoly(paper_nj().j_of(Z)) != charpoly(detuned_nj().j_of(Z)));
}

TEST_CASE("bracket criterion on the pair and its violation") {
  const auto pass = criterion_bracket_lattice(standard_pair_first(), standard_pair_second());
  CHECK(pass.status == CriterionStatus::Pass);
  CHECK(pass.first_ok);
  CHECK(pass.second_ok);

  // With L = Z^3 the brackets of unit vectors escape 2L on both sides.
  const auto bad = criterion_bracket_lattice(
      NilmanifoldData::with_scales(paper_nj(), Rational(1), Rational(1)),
      NilmanifoldData::with_scales(paper_njprime(), Rational(1), Rational(1)));
  CHECK(bad.status == CriterionStatus::Fail);
  CHECK_FALSE(bad.first_ok);
  CHECK_FALSE(bad.second_ok);
  REQUIRE(bad.witness_pair.has_value());
  CHECK(bad.witness_side == 1);
  const auto [a, b] = *bad.witness_pair;
  // Re-check the witness: the bracket of those generators is not in 2L.
  const auto N = NilmanifoldData::with_scales(paper_nj(), Rational(1), Rational(1));
  const QVec br = paper_nj().bracket_v(N.M.basis()[a], N.M.basis()[b]);
  CHECK(br == bad.witness_bracket);
  CHECK_FALSE(N.L.scaled(Rational(2)).contains(br));
}

TEST_CASE("kernel criterion, symbolic: certified on all strata") {
  const auto r =
      criterion_kernel_lattices(standard_pair_first(), standard_pair_second());
  CHECK(r.status == CriterionStatus::Pass);
  CHECK(r.mode == KernelMode::Symbolic);
  REQUIRE(r.strata.size() == 3);
  for (const auto& s : r.strata) {
    CHECK(s.dims_equal);
    CHECK(s.cross_annihilation);
    CHECK(s.whole_stratum);
    CHECK(s.kernel_first.size() == 2);
    CHECK(s.kernel_second.size() == 2);
    CHECK(s.independence_minor_first.has_value());
    CHECK(s.rank_minor_second.has_value());
  }

  // Spot check on the first stratum: the kernel vectors specialize to
  // genuine kernel vectors at Z = z_1.
  const QVec z1{1, 0, 0};
  const QMatrix j1 = paper_nj().j_of(z1);
  for (const auto& kv : r.strata[0].kernel_first) {
    QVec at;
    for (const auto& p : kv) at.push_back(p.eval(z1));
    CHECK_FALSE(vec_is_zero(at));
    CHECK(vec_is_zero(j1 * at));
  }
}

TEST_CASE("kernel criterion, symbolic: unequal lattices stay inconclusive") {
  auto N2 = standard_pair_second();
  N2.M = IntegerLattice::scaled_standard(6, Rational(2));
  const auto r = criterion_kernel_lattices(standard_pair_first(), N2);
  CHECK(r.status == CriterionStatus::Inconclusive);
  CHECK(r.detail.find("sampled") != std::string::npos);
}

TEST_CASE("kernel criterion, sampled: spectra agree at every dual point") {
  KernelOptions opts;
  opts.mode = KernelMode::Sampled;
  opts.length_bound = 16;
  opts.coeff_range = 2;
  const auto r =
      criterion_kernel_lattices(standard_pair_first(), standard_pair_second(), opts);
  CHECK(r.status == CriterionStatus::Pass);
  CHECK(r.mode == KernelMode::Sampled);
  CHECK_FALSE(r.samples.empty());
  for (const auto& s : r.samples) {
    CHECK(s.equal);
    CHECK(s.spectrum_first == s.spectrum_second);
    CHECK_FALSE(vec_is_zero(s.Z));
  }
}

TEST_CASE("kernel criterion, sampled: detuned kernels produce a witness") {
  // Shrinking M on one side changes the kernel lattice spectra.
  auto N1 = standard_pair_first();
  auto N2 = standard_pair_second();
  N2.M = IntegerLattice::scaled_standard(6, Rational(3));
  KernelOptions opts;
  opts.mode = KernelMode::Sampled;
  opts.length_bound = 16;
  opts.coeff_range = 1;
  const auto r = criterion_kernel_lattices(N1, N2, opts);
  CHECK(r.status == CriterionStatus::Fail);
  const auto bad = std::find_if(r.samples.begin(), r.samples.end(),
                                [](const KernelSampleRecord& s) { return !s.equal; });
  REQUIRE(bad != r.samples.end());
  CHECK(bad->spectrum_first != bad->spectrum_second);
}

TEST_CASE("the three criteria aggregate") {
  const auto gw = gordon_wilson(standard_pair_first(), standard_pair_second());
  CHECK(gw.eigenvalues.status == CriterionStatus::Pass);
  CHECK(gw.bracket_lattice.status == CriterionStatus::Pass);
  CHECK(gw.kernels.status == CriterionStatus::Pass);
  CHECK(gw.isospectral_by_criterion);

  const auto self = gordon_wilson(standard_pair_first(), standard_pair_first());
  CHECK(self.isospectral_by_criterion);

  // One failing criterion sinks the verdict.
  const auto bad = gordon_wilson(
      NilmanifoldData::with_scales(paper_nj(), Rational(1), Rational(1)),
      NilmanifoldData::with_scales(paper_njprime(), Rational(1), Rational(1)));
  CHECK(bad.bracket_lattice.status == CriterionStatus::Fail);
  CHECK_FALSE(bad.isospectral_by_criterion);
}

TEST_CASE("abelian subspace test") {
  const auto A = paper_njprime();
  CHECK(is_abelian_subspace(A, {QVec{1, 0, 0, 0, 0, 0}, QVec{0, 1, 0, 0, 0, 0},
                                QVec{0, 0, 1, 0, 0, 0}}));
  CHECK_FALSE(is_abelian_subspace(A, {QVec{1, 0, 0, 0, 0, 0}, QVec{0, 0, 0, 0, 1, 0}}));
  CHECK(is_abelian_subspace(A, {}));
}

TEST_CASE("coordinate censuses of the pair") {
  const auto nj = paper_nj();
  const auto d2 = coordinate_abelian_census(nj, 2);
  CHECK(d2.subset_size == 2);
  CHECK(d2.abelian_subsets.size() == 9);
  CHECK(d2.abelian_subsets.size() + d2.witnesses.size() == 15);
  // Every reported subset re-checks abelian; every witness re-checks not.
  for (const auto& S : d2.abelian_subsets) {
    std::vector<QVec> gens;
    for (std::size_t i : S) {
      QVec e(6, Rational(0));
      e[i] = 1;
      gens.push_back(e);
    }
    CHECK(is_abelian_subspace(nj, gens));
  }
  for (const auto& w : d2.witnesses) {
    CHECK_FALSE(vec_is_zero(w.bracket));
    QVec ea(6, Rational(0)), eb(6, Rational(0));
    ea[w.a] = 1;
    eb[w.b] = 1;
    CHECK(nj.bracket_v(ea, eb) == w.bracket);
  }

  CHECK(coordinate_abelian_census(nj, 3).abelian_subsets.empty());

  const auto d3p = coordinate_abelian_census(paper_njprime(), 3);
  const std::vector<std::vector<std::size_t>> expect{{0, 1, 2}, {3, 4, 5}};
  CHECK(d3p.abelian_subsets == expect);
}

TEST_CASE("census comparison distinguishes the pair") {
  const auto cmp = nonisomorphism_evidence(paper_nj(), paper_njprime());
  REQUIRE(cmp.first_difference.has_value());
  CHECK(*cmp.first_difference == 3);
  REQUIRE(cmp.counts_first.size() == 6);
  CHECK(cmp.counts_first[1] == 9);
  CHECK(cmp.counts_first[2] == 0);
  CHECK(cmp.counts_second[2] == 2);
  // Size-1 subsets are always abelian.
  CHECK(cmp.counts_first[0] == 6);
  CHECK(cmp.counts_second[0] == 6);

  const auto same = nonisomorphism_evidence(paper_nj(), paper_nj());
  CHECK_FALSE(same.first_difference.has_value());
}

TEST_CASE("diagnostic reports survive the JSON round trip") {
  for (const auto& A : {paper_nj(), paper_njprime(), heisenberg(1)}) {
    const auto rep = build_diagnostic_report(A, "round-trip");
    const auto back = diagnostic_report_from_json(to_json_string(rep));
    CHECK(back == rep);
  }
}

TEST_CASE("isospectral reports survive the JSON round trip") {
  for (const auto mode : {KernelMode::Symbolic, KernelMode::Sampled}) {
    KernelOptions opts;
    opts.mode = mode;
    opts.length_bound = 9;
    opts.coeff_range = 1;
    const auto rep = build_isospectral_report(standard_pair_first(), standard_pair_second(),
                                              "first", "second", opts);
    const auto back = isospectral_report_from_json(to_json_string(rep));
    CHECK(back == rep);
  }
}

TEST_CASE("malformed report JSON is rejected") {
  CHECK_THROWS_AS(diagnostic_report_from_json("{"), ReportError);
  CHECK_THROWS_AS(diagnostic_report_from_json(R"({"source": 3})"), ReportError);
  CHECK_THROWS_AS(isospectral_report_from_json(R"([1, 2])"), ReportError);
}

TEST_CASE("text rendering mentions the headline facts") {
  const auto rep = build_diagnostic_report(paper_nj(), "pair-first");
  const auto text = render_text(rep, false);
  CHECK(text.find("pair-first") != std::string::npos);
  CHECK(text.find("dim v = 6") != std::string::npos);
  CHECK(text.find("naturally reductive") != std::string::npos);
  CHECK(text.find("\x1b[") == std::string::npos);
  const auto colored = render_text(rep, true);
  CHECK(colored.find("\x1b[") != std::string::npos);

  const auto iso = build_isospectral_report(standard_pair_first(), standard_pair_second(),
                                            "first", "second");
  const auto itext = render_text(iso, false);
  CHECK(itext.find("pass") != std::string::npos);
  CHECK(itext.find("isospectral") != std::string::npos);
}

TEST_CASE("exit code mapping") {
  const auto good = build_diagnostic_report(paper_nj(), "x");
  CHECK(report_exit_code(good) == 0);
  CHECK(nr_exit_code(good.nr) == 0);
  const auto obstructed = build_diagnostic_report(paper_njprime(), "y");
  CHECK(nr_exit_code(obstructed.nr) == 1);

  const auto iso = build_isospectral_report(standard_pair_first(), standard_pair_second(),
                                            "a", "b");
  CHECK(report_exit_code(iso) == 0);
  auto detuned = build_isospectral_report(
      NilmanifoldData::with_scales(paper_nj(), Rational(1), Rational(1)),
      NilmanifoldData::with_scales(paper_njprime(), Rational(1), Rational(1)), "a", "b");
  CHECK(report_exit_code(detuned) == 1);
}

TEST_CASE("replication suite passes on the real pair and rejects a perturbed one") {
  const auto claims = run_paper_claims(paper_nj(), paper_njprime());
  CHECK(all_claims_pass(claims));
  for (const auto& c : claims) CHECK_MESSAGE(c.pass, c.name, ": ", c.detail);

  const auto tampered = run_paper_claims(detuned_nj(), paper_njprime());
  CHECK_FALSE(all_claims_pass(tampered));

  const auto swapped = run_paper_claims(paper_njprime(), paper_nj());
  CHECK_FALSE(all_claims_pass(swapped));
}
