#pragma once

#include "nilgeo/algebra.hpp"
#include "nilgeo/matrix.hpp"

namespace nilgeo {

/// Levi-Civita connection for the left-invariant metric:
/// nabla_V X = -1/2 j_{V^z} X^v - 1/2 j_{X^z} V^v + 1/2 [V^v, X^v].
ElementVector nabla(const MetricTwoStepAlgebra& A, const ElementVector& V,
                    const ElementVector& X);

/// Curvature R(X,Y)Z in closed form (11 terms).
ElementVector curvature(const MetricTwoStepAlgebra& A, const ElementVector& X,
                        const ElementVector& Y, const ElementVector& Z);

/// Jacobi operator R_V(X) = R(X,V)V in its own closed form (7 terms).
ElementVector jacobi_operator(const MetricTwoStepAlgebra& A, const ElementVector& V,
                              const ElementVector& X);

/// rho(X) = 1/2 J(X^v) + 1/4 B(X^z).
ElementVector ricci_operator(const MetricTwoStepAlgebra& A, const ElementVector& X);

/// ric(X,Y) = 1/2 <J X^v, Y^v> + 1/4 <B X^z, Y^z>.
Rational ricci_tensor(const MetricTwoStepAlgebra& A, const ElementVector& X,
                      const ElementVector& Y);

/// J = sum_k j_k^2 on v (symmetric).
QMatrix endo_J(const MetricTwoStepAlgebra& A);

/// B on z with <B z_a, z_b> = sum_i <j_a v_i, j_b v_i> (symmetric).
QMatrix endo_B(const MetricTwoStepAlgebra& A);

/// Covariant derivative of the Ricci tensor, closed form (6 terms).
Rational nabla_ric(const MetricTwoStepAlgebra& A, const ElementVector& X,
                   const ElementVector& Y, const ElementVector& Z);

/// Sum of ric over the orthonormal basis; equals -1/4 tr B.
Rational scalar_curvature(const MetricTwoStepAlgebra& A);

/// Definition-based reimplementations used to cross-check the closed
/// forms. They touch only the structure-constant table and inner
/// products, never the closed-form code paths above.
namespace oracles {

/// [X, Y] assembled from the structure-constant table.
ElementVector bracket_table(const MetricTwoStepAlgebra& A, const ElementVector& X,
                            const ElementVector& Y);

/// Koszul formula on left-invariant fields:
/// 2 <nabla_V X, W> = <[V,X],W> - <[X,W],V> + <[W,V],X> over basis W.
ElementVector koszul_nabla(const MetricTwoStepAlgebra& A, const ElementVector& V,
                           const ElementVector& X);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
/// built on koszul_nabla.
ElementVector curvature_def(const MetricTwoStepAlgebra& A, const ElementVector& X,
                            const ElementVector& Y, const ElementVector& Z);

/// rho(X) = sum_i R_{v_i}(X) + sum_k R_{z_k}(X) with R_V(X) = R(X,V)V
/// from curvature_def.
ElementVector ricci_by_trace(const MetricTwoStepAlgebra& A, const ElementVector& X);

Rational ricci_tensor_by_trace(const MetricTwoStepAlgebra& A, const ElementVector& X,
                               const ElementVector& Y);

/// (nabla_X ric)(Y,Z) = -ric(nabla_X Y, Z) - ric(Y, nabla_X Z); the
/// directional term drops since ric of left-invariant fields is constant.
Rational nabla_ric_leibniz(const MetricTwoStepAlgebra& A, const ElementVector& X,
                           const ElementVector& Y, const ElementVector& Z);

}  // namespace oracles

}  // namespace nilgeo
