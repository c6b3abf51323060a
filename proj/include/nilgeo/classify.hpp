#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilgeo/algebra.hpp"
#include "nilgeo/matrix.hpp"

namespace nilgeo {

/// True iff J o j_{z_k} is skew-symmetric for every k; by linearity this
/// decides skewness of J o j_Z for all central Z.
bool is_type_A(const MetricTwoStepAlgebra& A);

/// Direct-definition check of the same property: the polynomial
/// <J j_{X^z} X^v, X^v> in the n + m coordinates of X vanishes
/// identically. Independent of is_type_A's matrix test.
bool is_type_A_symbolic_oracle(const MetricTwoStepAlgebra& A);

struct ScalarInvariants {
  /// C with J = C * Id, when J is exactly scalar.
  std::optional<Rational> J_scalar;
  /// D with B = D * Id, when B is exactly scalar.
  std::optional<Rational> B_scalar;

  bool operator==(const ScalarInvariants&) const = default;
};

ScalarInvariants scalar_invariants(const MetricTwoStepAlgebra& A);

struct HeisenbergClassification {
  /// j_Z^2 = -|Z|^2 Id for all central Z.
  bool heisenberg_type = false;
  /// j_Z^2 = lambda(Z) Id with lambda(Z) < 0 for all nonzero central Z.
  bool modified = false;
  /// When j_Z^2 is scalar for every Z: the symmetric matrix S with
  /// lambda(Z) = Z^T S Z. Absent otherwise.
  std::optional<QMatrix> lambda_form;

  bool operator==(const HeisenbergClassification&) const = default;
};

/// Decides both properties through the finite anticommutator conditions
/// j_a j_b + j_b j_a = s_ab * Id on basis pairs.
HeisenbergClassification heisenberg_classification(const MetricTwoStepAlgebra& A);

/// True iff the covariant derivative of the Ricci tensor vanishes on all
/// basis triples (equivalently everywhere, by trilinearity). When J and B
/// are both scalar the result is cross-checked against the D = 2C
/// criterion.
bool has_parallel_ricci(const MetricTwoStepAlgebra& A);

/// Candidate homogeneous structure of the shape
///   T_X Y = -1/2 j_{Y^z} X^v + 1/2 j_{X^z} Y^v + 1/2 [X^v, Y^v]
///           + Ttilde_{X^z} Y^z,
/// determined by the central bracket table Ttilde on basis pairs.
class HomogeneousStructure {
 public:
  HomogeneousStructure(MetricTwoStepAlgebra algebra,
                       std::vector<std::vector<QVec>> central_bracket);

  const MetricTwoStepAlgebra& algebra() const { return algebra_; }
  /// table[a][b] = Ttilde(z_a, z_b) as m central coordinates.
  const std::vector<std::vector<QVec>>& central_bracket() const {
    return central_bracket_;
  }

  /// T_X Y.
  ElementVector apply(const ElementVector& X, const ElementVector& Y) const;
  /// Ttilde_X Y for central coordinate vectors (bilinear extension).
  QVec central_apply(const QVec& Xz, const QVec& Yz) const;

 private:
  MetricTwoStepAlgebra algebra_;
  std::vector<std::vector<QVec>> central_bracket_;
};

/// Per-equation verification of a homogeneous structure candidate.
/// as1: parallel curvature under nabla - T, checked on all basis
///      quadruples with (nabla_V R) expanded through nabla and R;
/// as2: parallel T; as3: T_X metric-skew; nr4: T_X X = 0 (polarized);
/// contraction: the Ricci contraction of as1.
struct EquationReport {
  bool as1 = false, as2 = false, as3 = false, nr4 = false, contraction = false;
  /// Human-readable first failing instance, empty when everything passes.
  std::string first_failure;
  bool all_pass() const { return as1 && as2 && as3 && nr4 && contraction; }

  bool operator==(const EquationReport&) const = default;
};

EquationReport verify_homogeneous_structure(const HomogeneousStructure& T);

/// Successful outcome of the naturally-reductive solver.
struct NRStructure {
  /// Ttilde(z_a, z_b) table; antisymmetric, diagonal zero.
  std::vector<std::vector<QVec>> central_bracket;
  /// False when the solve was done modulo a nontrivial kernel of Z -> j_Z
  /// (the table is then one valid choice among several).
  bool unique_solution = true;
  /// All central-bracket side conditions: Ttilde_X skew on z, bracket
  /// antisymmetry, Jacobi identity, and the commutator identity
  /// [j_a, j_b] = j_{Ttilde(z_a,z_b)} verified symbolically.
  bool central_checks = false;
  EquationReport equations;

  bool operator==(const NRStructure&) const = default;
};

struct Obstruction {
  enum class Kind {
    CommutatorOutsideImage,
    CentralBracketNotSkew,
    CentralBracketNotJacobi,
    ASVerificationFailed,
  };
  Kind kind;
  /// Central basis pair for the commutator kinds.
  std::size_t a = 0, b = 0;
  /// [j_a, j_b] - j_W for the best (orthogonal-projection) W; nonzero.
  QMatrix residual;
  /// Functional on n x n matrices (flattened row-major) that annihilates
  /// every j_k but not [j_a, j_b]; certifies the commutator lies outside
  /// the image of Z -> j_Z. Empty for non-commutator kinds.
  QVec certificate;
  std::string detail;

  bool operator==(const Obstruction&) const = default;
};

struct Inapplicable {
  /// Which hypothesis of the solver failed (J or B not scalar, or D = 2C).
  std::string failed_hypothesis;

  bool operator==(const Inapplicable&) const = default;
};

using NROutcome = std::variant<NRStructure, Obstruction, Inapplicable>;

/// Decides natural reductivity for algebras with scalar J = C Id,
/// B = D Id and D != 2C: either builds the forced structure (and fully
/// verifies it) or exhibits an exact obstruction. Returns Inapplicable
/// when the hypotheses fail; no claim is made in that case.
NROutcome naturally_reductive_structure(const MetricTwoStepAlgebra& A);

struct PropertyReport {
  bool type_A = false;
  bool heisenberg_type = false;
  bool modified_heisenberg = false;
  std::optional<QMatrix> lambda_form;
  std::optional<Rational> scalar_J;
  std::optional<Rational> scalar_B;
  bool parallel_ricci = false;

  bool operator==(const PropertyReport&) const = default;
};

PropertyReport classify_algebra(const MetricTwoStepAlgebra& A);

}  // namespace nilgeo
