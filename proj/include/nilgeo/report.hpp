#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilgeo/abelian.hpp"
#include "nilgeo/algebra.hpp"
#include "nilgeo/classify.hpp"
#include "nilgeo/isospectral.hpp"

namespace nilgeo {

struct ReportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Totals from comparing the closed-form geometry against the
/// definition-based reimplementations over the whole basis.
struct OracleCheckSummary {
  std::size_t checks_run = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool operator==(const OracleCheckSummary&) const = default;
};

OracleCheckSummary run_oracle_checks(const MetricTwoStepAlgebra& A);

/// Structural identities the geometry must satisfy regardless of the
/// algebra: antisymmetry and pair symmetry of R, skewness of
/// <R(X,Y)., .>, the first Bianchi identity, zero torsion, metric
/// compatibility, symmetry of ric, tr J = -tr B, and scalar curvature
/// = -1/4 tr B. Checked over all basis tuples.
OracleCheckSummary run_curvature_property_checks(const MetricTwoStepAlgebra& A);

struct DiagnosticReport {
  std::string source;
  std::size_t dim_v = 0, dim_z = 0;
  PropertyReport properties;
  OracleCheckSummary oracle_checks;
  NROutcome nr = Inapplicable{};
  /// Coordinate censuses for d = 2 and d = 3 (those with d <= dim v).
  std::vector<AbelianReport> censuses;

  bool operator==(const DiagnosticReport&) const = default;
};

DiagnosticReport build_diagnostic_report(const MetricTwoStepAlgebra& A,
                                         const std::string& source);

struct IsospectralReport {
  std::string source_first, source_second;
  GordonWilsonReport criteria;
  CensusComparison census;

  bool operator==(const IsospectralReport&) const = default;
};

IsospectralReport build_isospectral_report(const NilmanifoldData& N1,
                                           const NilmanifoldData& N2,
                                           const std::string& source1,
                                           const std::string& source2,
                                           const KernelOptions& opts = {});

/// JSON round-trip: from(to(r)) == r exactly; rationals travel as "p/q"
/// strings and polynomials as explicit term lists.
std::string to_json_string(const DiagnosticReport& r);
DiagnosticReport diagnostic_report_from_json(const std::string& text);
std::string to_json_string(const IsospectralReport& r);
IsospectralReport isospectral_report_from_json(const std::string& text);

std::string render_text(const DiagnosticReport& r, bool color);
std::string render_text(const IsospectralReport& r, bool color);

/// 0 when the headline of the report holds (internal checks consistent for
/// an inspection; all three criteria passed for a pair), 1 otherwise.
/// Input errors exit 2 at the CLI level before a report exists.
int report_exit_code(const DiagnosticReport& r);
int report_exit_code(const IsospectralReport& r);
/// 0 for a verified structure, 1 for an obstruction or inapplicable.
int nr_exit_code(const NROutcome& outcome);

}  // namespace nilgeo
