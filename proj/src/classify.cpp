#include "nilgeo/classify.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "nilgeo/geometry.hpp"
#include "nilgeo/linalg.hpp"

namespace nilgeo {

namespace {

const Rational kHalf(1, 2);

std::string basis_name(const MetricTwoStepAlgebra& A, std::size_t i) {
  std::ostringstream os;
  if (i < A.dim_v())
    os << "v" << (i + 1);
  else
    os << "z" << (i - A.dim_v() + 1);
  return os.str();
}

ElementVector basis_element(const MetricTwoStepAlgebra& A, std::size_t i) {
  return i < A.dim_v() ? A.basis_v(i) : A.basis_z(i - A.dim_v());
}

/// Coordinate of E along basis element i of v + z.
const Rational& component(const ElementVector& E, std::size_t n, std::size_t i) {
  return i < n ? E.v[i] : E.z[i - n];
}

}  // namespace

bool is_type_A(const MetricTwoStepAlgebra& A) {
  const QMatrix J = endo_J(A);
  for (const QMatrix& jk : A.j_maps())
    if (!(J * jk).is_skew()) return false;
  return true;
}

bool is_type_A_symbolic_oracle(const MetricTwoStepAlgebra& A) {
  const std::size_t n = A.dim_v(), m = A.dim_z(), nv = n + m;
  std::vector<Poly> Xv, Xz;
  Xv.reserve(n);
  Xz.reserve(m);
  for (std::size_t i = 0; i < n; ++i) Xv.push_back(Poly::variable(nv, i));
  for (std::size_t k = 0; k < m; ++k) Xz.push_back(Poly::variable(nv, n + k));
  const PMatrix jXz = A.j_of_poly(Xz);
  const PMatrix Jp = to_poly_matrix(endo_J(A), nv);
  const std::vector<Poly> t = Jp * (jXz * Xv);
  Poly s = Poly::zero(nv);
  for (std::size_t i = 0; i < n; ++i) s += t[i] * Xv[i];
  return s.is_zero();
}

ScalarInvariants scalar_invariants(const MetricTwoStepAlgebra& A) {
  ScalarInvariants si;
  Rational s;
  if (endo_J(A).is_scalar(s)) si.J_scalar = s;
  if (endo_B(A).is_scalar(s)) si.B_scalar = s;
  return si;
}

HeisenbergClassification heisenberg_classification(const MetricTwoStepAlgebra& A) {
  const std::size_t m = A.dim_z();
  HeisenbergClassification hc;
  QMatrix S(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const QMatrix anti = anticommutator(A.j_map(a), A.j_map(b));
      Rational s;
      // j_Z^2 scalar for every Z forces every anticommutator scalar, so a
      // single non-scalar pair already rules both properties out.
      if (!anti.is_scalar(s)) return hc;
      s /= 2;
      S.at(a, b) = s;
      S.at(b, a) = s;
    }
  hc.lambda_form = S;
  hc.heisenberg_type = (S == QMatrix::identity(m) * Rational(-1));
  // lambda negative definite <=> -S positive definite <=> the leading
  // principal minors of S alternate in sign starting negative.
  bool negative_definite = true;
  for (std::size_t k = 1; k <= m && negative_definite; ++k) {
    QMatrix Sk(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) Sk.at(i, j) = S.at(i, j);
    const Rational d = det(Sk);
    const int want = (k % 2 == 1) ? -1 : 1;
    if (sgn(d) != want) negative_definite = false;
  }
  hc.modified = negative_definite;
  return hc;
}

bool has_parallel_ricci(const MetricTwoStepAlgebra& A) {
  const std::size_t d = A.dim();
  bool parallel = true;
  for (std::size_t x = 0; x < d && parallel; ++x)
    for (std::size_t y = 0; y < d && parallel; ++y)
      for (std::size_t z = 0; z < d && parallel; ++z)
        if (nabla_ric(A, basis_element(A, x), basis_element(A, y),
                      basis_element(A, z)) != 0)
          parallel = false;
  const ScalarInvariants si = scalar_invariants(A);
  if (si.J_scalar && si.B_scalar) {
    Rational twoC = *si.J_scalar;
    twoC *= 2;
    if (parallel != (*si.B_scalar == twoC))
      throw std::logic_error(
          "parallel Ricci check contradicts the scalar D = 2C criterion");
  }
  return parallel;
}

HomogeneousStructure::HomogeneousStructure(MetricTwoStepAlgebra algebra,
                                           std::vector<std::vector<QVec>> central_bracket)
    : algebra_(std::move(algebra)), central_bracket_(std::move(central_bracket)) {
  const std::size_t m = algebra_.dim_z();
  if (central_bracket_.size() != m)
    throw std::invalid_argument("central bracket table has wrong size");
  for (const auto& row : central_bracket_) {
    if (row.size() != m)
      throw std::invalid_argument("central bracket table has wrong size");
    for (const auto& entry : row)
      if (entry.size() != m)
        throw std::invalid_argument("central bracket table has wrong size");
  }
}

QVec HomogeneousStructure::central_apply(const QVec& Xz, const QVec& Yz) const {
  const std::size_t m = algebra_.dim_z();
  QVec out(m, Rational(0));
  for (std::size_t a = 0; a < m; ++a) {
    if (Xz[a] == 0) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (Yz[b] == 0) continue;
      Rational c = Xz[a];
      c *= Yz[b];
      for (std::size_t k = 0; k < m; ++k) {
        Rational t = central_bracket_[a][b][k];
        t *= c;
        out[k] += t;
      }
    }
  }
  return out;
}

ElementVector HomogeneousStructure::apply(const ElementVector& X,
                                          const ElementVector& Y) const {
  const MetricTwoStepAlgebra& A = algebra_;
  QVec vpart = vec_sub(A.j_of(X.z) * Y.v, A.j_of(Y.z) * X.v);
  vpart = vec_scale(kHalf, vpart);
  QVec zpart = vec_scale(kHalf, A.bracket_v(X.v, Y.v));
  zpart = vec_add(zpart, central_apply(X.z, Y.z));
  return {vpart, zpart};
}

EquationReport verify_homogeneous_structure(const HomogeneousStructure& T) {
  const MetricTwoStepAlgebra& A = T.algebra();
  const std::size_t n = A.dim_v(), d = A.dim();
  EquationReport rep;
  rep.as1 = rep.as2 = rep.as3 = rep.nr4 = rep.contraction = true;

  std::vector<ElementVector> e;
  e.reserve(d);
  for (std::size_t i = 0; i < d; ++i) e.push_back(basis_element(A, i));

  // T on basis pairs, reused by every equation below.
  std::vector<std::vector<ElementVector>> Te(d, std::vector<ElementVector>(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) Te[x][y] = T.apply(e[x], e[y]);

  auto note = [&](const char* eq, std::initializer_list<std::size_t> idx) {
    if (!rep.first_failure.empty()) return;
    std::ostringstream os;
    os << eq << " fails at (";
    bool first = true;
    for (std::size_t i : idx) {
      if (!first) os << ", ";
      os << basis_name(A, i);
      first = false;
    }
    os << ")";
    rep.first_failure = os.str();
  };

  // Metric skewness: <T_x y, z> + <y, T_x z> = 0. Both inner products
  // read off a single coordinate of a precomputed T value.
  for (std::size_t x = 0; x < d && rep.as3; ++x)
    for (std::size_t y = 0; y < d && rep.as3; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Rational s = component(Te[x][y], n, z);
        s += component(Te[x][z], n, y);
        if (s != 0) {
          rep.as3 = false;
          note("metric skewness (AS3)", {x, y, z});
          break;
        }
      }

  // T_X X = 0, polarized to T_x y + T_y x = 0 on basis pairs.
  for (std::size_t x = 0; x < d && rep.nr4; ++x)
    for (std::size_t y = x; y < d; ++y)
      if (!(Te[x][y] + Te[y][x]).is_zero()) {
        rep.nr4 = false;
        note("natural reductivity (T_X X = 0)", {x, y});
        break;
      }

  // Parallel T: nabla_x(T_y z) - T_{nabla_x y} z - T_y(nabla_x z)
  //           = T_x(T_y z) - T_y(T_x z) - T_{T_x y} z.
  for (std::size_t x = 0; x < d && rep.as2; ++x)
    for (std::size_t y = 0; y < d && rep.as2; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        const ElementVector lhs = nabla(A, e[x], Te[y][z]) -
                                  T.apply(nabla(A, e[x], e[y]), e[z]) -
                                  T.apply(e[y], nabla(A, e[x], e[z]));
        const ElementVector rhs =
            T.apply(e[x], Te[y][z]) - T.apply(e[y], Te[x][z]) - T.apply(Te[x][y], e[z]);
        if (lhs != rhs) {
          rep.as2 = false;
          note("parallel T (AS2)", {x, y, z});
          break;
        }
      }

  // Ricci contraction of the curvature equation:
  // (nabla_x ric)(y, z) = -ric(T_x y, z) - ric(y, T_x z).
  for (std::size_t x = 0; x < d && rep.contraction; ++x)
    for (std::size_t y = 0; y < d && rep.contraction; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Rational lhs = nabla_ric(A, e[x], e[y], e[z]);
        lhs += ricci_tensor(A, Te[x][y], e[z]);
        lhs += ricci_tensor(A, e[y], Te[x][z]);
        if (lhs != 0) {
          rep.contraction = false;
          note("Ricci contraction", {x, y, z});
          break;
        }
      }

  // Parallel curvature: the covariant derivative of R in direction v,
  // expanded through nabla on the left and through T on the right.
  for (std::size_t x = 0; x < d && rep.as1; ++x)
    for (std::size_t y = 0; y < d && rep.as1; ++y)
      for (std::size_t z = 0; z < d && rep.as1; ++z) {
        const ElementVector Rxyz = curvature(A, e[x], e[y], e[z]);
        for (std::size_t v = 0; v < d; ++v) {
          const ElementVector lhs = nabla(A, e[v], Rxyz) -
                                    curvature(A, nabla(A, e[v], e[x]), e[y], e[z]) -
                                    curvature(A, e[x], nabla(A, e[v], e[y]), e[z]) -
                                    curvature(A, e[x], e[y], nabla(A, e[v], e[z]));
          const ElementVector rhs = T.apply(e[v], Rxyz) -
                                    curvature(A, Te[v][x], e[y], e[z]) -
                                    curvature(A, e[x], Te[v][y], e[z]) -
                                    curvature(A, e[x], e[y], Te[v][z]);
          if (lhs != rhs) {
            rep.as1 = false;
            note("parallel curvature (AS1)", {v, x, y, z});
            break;
          }
        }
      }

  return rep;
}

namespace {

/// Columns are the flattened j-maps; the central bracket solve works in
/// this coordinate system.
QMatrix j_span_matrix(const MetricTwoStepAlgebra& A) {
  const std::size_t n = A.dim_v(), m = A.dim_z();
  QMatrix M(n * n, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i * n + j, k) = A.j_map(k).at(i, j);
  return M;
}

QVec flatten(const QMatrix& M) {
  QVec out;
  out.reserve(M.rows() * M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out.push_back(M.at(i, j));
  return out;
}

/// Symbolic form of the commutator identity [j_X, j_Y] = j_{Ttilde_X Y}
/// in the 2m coordinates of X and Y. Implied by the basis-pair solves via
/// bilinearity, so a failure here means the solver itself is broken.
void assert_commutator_identity(const MetricTwoStepAlgebra& A,
                                const std::vector<std::vector<QVec>>& tilde) {
  const std::size_t m = A.dim_z(), nv = 2 * m;
  std::vector<Poly> X, Y;
  for (std::size_t a = 0; a < m; ++a) X.push_back(Poly::variable(nv, a));
  for (std::size_t b = 0; b < m; ++b) Y.push_back(Poly::variable(nv, m + b));
  const PMatrix jX = A.j_of_poly(X), jY = A.j_of_poly(Y);
  std::vector<Poly> W(m, Poly::zero(nv));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t k = 0; k < m; ++k)
        W[k] += X[a] * Y[b] * Poly::constant(nv, tilde[a][b][k]);
  if (!(jX * jY - jY * jX == A.j_of_poly(W)))
    throw std::logic_error("central bracket solve violates the commutator identity");
}

}  // namespace

NROutcome naturally_reductive_structure(const MetricTwoStepAlgebra& A) {
  const std::size_t m = A.dim_z();
  const ScalarInvariants si = scalar_invariants(A);
  if (!si.J_scalar)
    return Inapplicable{"J is not a scalar multiple of the identity"};
  if (!si.B_scalar)
    return Inapplicable{"B is not a scalar multiple of the identity"};
  Rational twoC = *si.J_scalar;
  twoC *= 2;
  if (*si.B_scalar == twoC)
    return Inapplicable{"D = 2C: the Ricci tensor is parallel and this solver does not apply"};

  const QMatrix M = j_span_matrix(A);
  const bool unique = kernel_basis(M).empty();

  std::vector<std::vector<QVec>> tilde(m, std::vector<QVec>(m, QVec(m, Rational(0))));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const QMatrix K = commutator(A.j_map(a), A.j_map(b));
      const LinearSolveResult sol = solve_linear(M, flatten(K));
      if (!sol.consistent) {
        // Orthogonal projection onto the span of the j-maps: W solves the
        // normal equations, so the residual is perpendicular to every j_k
        // and doubles as the certificate functional.
        const QMatrix Mt = M.transpose();
        const LinearSolveResult proj = solve_linear(Mt * M, Mt * flatten(K));
        if (!proj.consistent)
          throw std::logic_error("normal equations inconsistent");
        Obstruction ob;
        ob.kind = Obstruction::Kind::CommutatorOutsideImage;
        ob.a = a;
        ob.b = b;
        ob.residual = K - A.j_of(proj.particular);
        ob.certificate = flatten(ob.residual);
        std::ostringstream os;
        os << "[j_" << (a + 1) << ", j_" << (b + 1)
           << "] is not j_W for any central W";
        ob.detail = os.str();
        return ob;
      }
      tilde[a][b] = sol.particular;
      tilde[b][a] = vec_scale(Rational(-1), sol.particular);
    }

  // Ttilde_{z_a} must act skew-symmetrically on the center.
  for (std::size_t a = 0; a < m; ++a) {
    QMatrix Ma(m, m);
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) Ma.at(c, b) = tilde[a][b][c];
    if (!Ma.is_skew()) {
      Obstruction ob;
      ob.kind = Obstruction::Kind::CentralBracketNotSkew;
      ob.a = a;
      ob.b = a;
      ob.residual = Ma + Ma.transpose();
      std::ostringstream os;
      os << "central bracket operator of z_" << (a + 1) << " is not skew";
      if (!unique) os << " (one choice in the solution family; others not searched)";
      ob.detail = os.str();
      return ob;
    }
  }

  // Jacobi identity of the extended central bracket.
  auto tilde_apply = [&](const QVec& W, std::size_t c) {
    QVec out(m, Rational(0));
    for (std::size_t x = 0; x < m; ++x) {
      if (W[x] == 0) continue;
      for (std::size_t k = 0; k < m; ++k) {
        Rational t = tilde[x][c][k];
        t *= W[x];
        out[k] += t;
      }
    }
    return out;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        QVec jac = tilde_apply(tilde[a][b], c);
        jac = vec_add(jac, tilde_apply(tilde[b][c], a));
        jac = vec_add(jac, tilde_apply(tilde[c][a], b));
        if (!vec_is_zero(jac)) {
          Obstruction ob;
          ob.kind = Obstruction::Kind::CentralBracketNotJacobi;
          ob.a = a;
          ob.b = b;
          std::ostringstream os;
          os << "Jacobi identity fails on (z_" << (a + 1) << ", z_" << (b + 1)
             << ", z_" << (c + 1) << ")";
          if (!unique) os << " (one choice in the solution family; others not searched)";
          ob.detail = os.str();
          return ob;
        }
      }

  assert_commutator_identity(A, tilde);

  const HomogeneousStructure T(A, tilde);
  const EquationReport eq = verify_homogeneous_structure(T);
  if (!eq.all_pass()) {
    Obstruction ob;
    ob.kind = Obstruction::Kind::ASVerificationFailed;
    ob.detail = eq.first_failure;
    return ob;
  }

  NRStructure out;
  out.central_bracket = std::move(tilde);
  out.unique_solution = unique;
  out.central_checks = true;
  out.equations = eq;
  return out;
}

PropertyReport classify_algebra(const MetricTwoStepAlgebra& A) {
  PropertyReport pr;
  pr.type_A = is_type_A(A);
  const HeisenbergClassification hc = heisenberg_classification(A);
  pr.heisenberg_type = hc.heisenberg_type;
  pr.modified_heisenberg = hc.modified;
  pr.lambda_form = hc.lambda_form;
  const ScalarInvariants si = scalar_invariants(A);
  pr.scalar_J = si.J_scalar;
  pr.scalar_B = si.B_scalar;
  pr.parallel_ricci = has_parallel_ricci(A);
  return pr;
}

}  // namespace nilgeo
