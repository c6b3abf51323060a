#include "nilgeo/geometry.hpp"

namespace nilgeo {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

}  // namespace

ElementVector nabla(const MetricTwoStepAlgebra& A, const ElementVector& V,
                    const ElementVector& X) {
  ElementVector r = ElementVector::zero(A.dim_v(), A.dim_z());
  QVec t = A.j_of(V.z) * X.v;
  r.v = vec_sub(r.v, vec_scale(kHalf, t));
  t = A.j_of(X.z) * V.v;
  r.v = vec_sub(r.v, vec_scale(kHalf, t));
  r.z = vec_scale(kHalf, A.bracket_v(V.v, X.v));
  return r;
}

ElementVector curvature(const MetricTwoStepAlgebra& A, const ElementVector& X,
                        const ElementVector& Y, const ElementVector& Z) {
  const QMatrix jXz = A.j_of(X.z), jYz = A.j_of(Y.z), jZz = A.j_of(Z.z);
  ElementVector r = ElementVector::zero(A.dim_v(), A.dim_z());

  QVec v = vec_scale(kHalf, A.j_of(A.bracket_v(X.v, Y.v)) * Z.v);
  v = vec_add(v, vec_scale(kQuarter, A.j_of(A.bracket_v(X.v, Z.v)) * Y.v));
  v = vec_sub(v, vec_scale(kQuarter, A.j_of(A.bracket_v(Y.v, Z.v)) * X.v));
  v = vec_add(v, vec_scale(kQuarter, jXz * (jZz * Y.v)));
  v = vec_sub(v, vec_scale(kQuarter, jYz * (jZz * X.v)));
  v = vec_add(v, vec_scale(kQuarter, jXz * (jYz * Z.v)));
  v = vec_sub(v, vec_scale(kQuarter, jYz * (jXz * Z.v)));
  r.v = v;

  QVec z = vec_scale(Rational(-1, 4), A.bracket_v(X.v, jYz * Z.v));
  z = vec_add(z, vec_scale(kQuarter, A.bracket_v(Y.v, jXz * Z.v)));
  z = vec_sub(z, vec_scale(kQuarter, A.bracket_v(jZz * X.v, Y.v)));
  z = vec_sub(z, vec_scale(kQuarter, A.bracket_v(X.v, jZz * Y.v)));
  r.z = z;
  return r;
}

ElementVector jacobi_operator(const MetricTwoStepAlgebra& A, const ElementVector& V,
                              const ElementVector& X) {
  const QMatrix jVz = A.j_of(V.z), jXz = A.j_of(X.z);
  ElementVector r = ElementVector::zero(A.dim_v(), A.dim_z());

  QVec v = vec_scale(Rational(3, 4), A.j_of(A.bracket_v(X.v, V.v)) * V.v);
  v = vec_add(v, vec_scale(kHalf, jXz * (jVz * V.v)));
  v = vec_sub(v, vec_scale(kQuarter, jVz * (jXz * V.v)));
  v = vec_sub(v, vec_scale(kQuarter, jVz * (jVz * X.v)));
  r.v = v;

  QVec z = vec_scale(Rational(-1, 2), A.bracket_v(X.v, jVz * V.v));
  z = vec_add(z, vec_scale(kQuarter, A.bracket_v(V.v, jXz * V.v)));
  z = vec_sub(z, vec_scale(kQuarter, A.bracket_v(jVz * X.v, V.v)));
  r.z = z;
  return r;
}

QMatrix endo_J(const MetricTwoStepAlgebra& A) {
  QMatrix J(A.dim_v(), A.dim_v());
  for (const QMatrix& jk : A.j_maps()) J += jk * jk;
  return J;
}

QMatrix endo_B(const MetricTwoStepAlgebra& A) {
  QMatrix B(A.dim_z(), A.dim_z());
  for (std::size_t a = 0; a < A.dim_z(); ++a)
    for (std::size_t b = 0; b < A.dim_z(); ++b) {
      Rational s(0);
      for (std::size_t i = 0; i < A.dim_v(); ++i) {
        QVec ja_vi(A.dim_v()), jb_vi(A.dim_v());
        for (std::size_t r = 0; r < A.dim_v(); ++r) {
          ja_vi[r] = A.j_map(a).at(r, i);
          jb_vi[r] = A.j_map(b).at(r, i);
        }
        s += dot(ja_vi, jb_vi);
      }
      B.at(a, b) = s;
    }
  return B;
}

ElementVector ricci_operator(const MetricTwoStepAlgebra& A, const ElementVector& X) {
  ElementVector r = ElementVector::zero(A.dim_v(), A.dim_z());
  r.v = vec_scale(kHalf, endo_J(A) * X.v);
  r.z = vec_scale(kQuarter, endo_B(A) * X.z);
  return r;
}

Rational ricci_tensor(const MetricTwoStepAlgebra& A, const ElementVector& X,
                      const ElementVector& Y) {
  Rational s = kHalf * dot(endo_J(A) * X.v, Y.v);
  s += kQuarter * dot(endo_B(A) * X.z, Y.z);
  return s;
}

Rational nabla_ric(const MetricTwoStepAlgebra& A, const ElementVector& X,
                   const ElementVector& Y, const ElementVector& Z) {
  const QMatrix J = endo_J(A);
  const QMatrix B = endo_B(A);
  Rational s = kQuarter * dot(A.j_of(X.z) * Y.v, J * Z.v);
  s += kQuarter * dot(A.j_of(X.z) * Z.v, J * Y.v);
  s += kQuarter * dot(A.j_of(Y.z) * X.v, J * Z.v);
  s += kQuarter * dot(A.j_of(Z.z) * X.v, J * Y.v);
  s -= Rational(1, 8) * dot(A.bracket_v(X.v, Z.v), B * Y.z);
  s -= Rational(1, 8) * dot(A.bracket_v(X.v, Y.v), B * Z.z);
  return s;
}

Rational scalar_curvature(const MetricTwoStepAlgebra& A) {
  Rational s(0);
  for (std::size_t i = 0; i < A.dim_v(); ++i)
    s += ricci_tensor(A, A.basis_v(i), A.basis_v(i));
  for (std::size_t k = 0; k < A.dim_z(); ++k)
    s += ricci_tensor(A, A.basis_z(k), A.basis_z(k));
  return s;
}

namespace oracles {

ElementVector bracket_table(const MetricTwoStepAlgebra& A, const ElementVector& X,
                            const ElementVector& Y) {
  ElementVector r = ElementVector::zero(A.dim_v(), A.dim_z());
  const auto& sc = A.structure_constants();
  for (std::size_t a = 0; a < A.dim_v(); ++a) {
    if (X.v[a] == 0) continue;
    for (std::size_t b = 0; b < A.dim_v(); ++b) {
      if (Y.v[b] == 0) continue;
      Rational f = X.v[a] * Y.v[b];
      for (std::size_t k = 0; k < A.dim_z(); ++k) r.z[k] += f * sc[a][b][k];
    }
  }
  return r;
}

ElementVector koszul_nabla(const MetricTwoStepAlgebra& A, const ElementVector& V,
                           const ElementVector& X) {
  ElementVector r = ElementVector::zero(A.dim_v(), A.dim_z());
  // Coordinates against an orthonormal basis, one Koszul evaluation each.
  for (std::size_t idx = 0; idx < A.dim(); ++idx) {
    ElementVector W = idx < A.dim_v() ? A.basis_v(idx) : A.basis_z(idx - A.dim_v());
    Rational c = inner(bracket_table(A, V, X), W);
    c -= inner(bracket_table(A, X, W), V);
    c += inner(bracket_table(A, W, V), X);
    c /= 2;
    if (idx < A.dim_v())
      r.v[idx] = c;
    else
      r.z[idx - A.dim_v()] = c;
  }
  return r;
}

ElementVector curvature_def(const MetricTwoStepAlgebra& A, const ElementVector& X,
                            const ElementVector& Y, const ElementVector& Z) {
  ElementVector r = koszul_nabla(A, X, koszul_nabla(A, Y, Z));
  r = r - koszul_nabla(A, Y, koszul_nabla(A, X, Z));
  r = r - koszul_nabla(A, bracket_table(A, X, Y), Z);
  return r;
}

ElementVector ricci_by_trace(const MetricTwoStepAlgebra& A, const ElementVector& X) {
  ElementVector r = ElementVector::zero(A.dim_v(), A.dim_z());
  for (std::size_t i = 0; i < A.dim_v(); ++i) {
    ElementVector V = A.basis_v(i);
    r = r + curvature_def(A, X, V, V);
  }
  for (std::size_t k = 0; k < A.dim_z(); ++k) {
    ElementVector V = A.basis_z(k);
    r = r + curvature_def(A, X, V, V);
  }
  return r;
}

Rational ricci_tensor_by_trace(const MetricTwoStepAlgebra& A, const ElementVector& X,
                               const ElementVector& Y) {
  return inner(ricci_by_trace(A, X), Y);
}

Rational nabla_ric_leibniz(const MetricTwoStepAlgebra& A, const ElementVector& X,
                           const ElementVector& Y, const ElementVector& Z) {
  Rational s = -ricci_tensor_by_trace(A, koszul_nabla(A, X, Y), Z);
  s -= ricci_tensor_by_trace(A, Y, koszul_nabla(A, X, Z));
  return s;
}

}  // namespace oracles

}  // namespace nilgeo
