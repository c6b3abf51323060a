#include "nilgeo/isospectral.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilgeo {

namespace {

void check_lattice_dims(const NilmanifoldData& N) {
  if (N.M.ambient_dim() != N.algebra.dim_v() || N.L.ambient_dim() != N.algebra.dim_z())
    throw std::invalid_argument("lattice ambient dimensions do not match the algebra");
}

bool lattices_equal(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.rank() != b.rank()) return false;
  for (const QVec& v : a.basis())
    if (!b.contains(v)) return false;
  for (const QVec& v : b.basis())
    if (!a.contains(v)) return false;
  return true;
}

/// Odometer step over [-r, r]^len starting from all -r.
bool advance_odometer(std::vector<long>& c, long r) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < r) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = -r;
      return true;
    }
  }
  return false;
}

bool all_zero(const std::vector<long>& c) {
  for (long x : c)
    if (x != 0) return false;
  return true;
}

/// First nonzero coordinate positive; used to skip -Z, which has the same
/// j-kernel as Z.
bool canonical_sign(const std::vector<long>& c) {
  for (long x : c) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

std::string format_point(const QVec& Z) {
  std::string s = "(";
  for (std::size_t i = 0; i < Z.size(); ++i) {
    if (i) s += ", ";
    s += to_string(Z[i]);
  }
  return s + ")";
}

PMatrix substitute_entries(const PMatrix& M, const std::map<std::size_t, Rational>& values) {
  PMatrix out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out.at(i, j) = M.at(i, j).substitute(values);
  return out;
}

bool annihilates(const PMatrix& M, const std::vector<Poly>& v) {
  for (const Poly& p : M * v)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace

NilmanifoldData NilmanifoldData::standard(const MetricTwoStepAlgebra& A) {
  const std::size_t n = A.dim_v(), m = A.dim_z();
  IntegerLattice L = (n == 6 && m == 3)
                         ? IntegerLattice::scaled_standard(m, Rational(1, 2))
                         : IntegerLattice::standard(m);
  return {A, IntegerLattice::standard(n), std::move(L)};
}

NilmanifoldData NilmanifoldData::with_scales(const MetricTwoStepAlgebra& A,
                                             const Rational& M_scale,
                                             const Rational& L_scale) {
  return {A, IntegerLattice::scaled_standard(A.dim_v(), M_scale),
          IntegerLattice::scaled_standard(A.dim_z(), L_scale)};
}

std::string to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass:
      return "pass";
    case CriterionStatus::Fail:
      return "fail";
    case CriterionStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

EigenvalueCriterion criterion_eigenvalues(const MetricTwoStepAlgebra& A1,
                                          const MetricTwoStepAlgebra& A2) {
  EigenvalueCriterion out;
  if (A1.dim_v() != A2.dim_v() || A1.dim_z() != A2.dim_z()) {
    out.status = CriterionStatus::Fail;
    out.detail = "dimension mismatch";
    return out;
  }
  const std::size_t m = A1.dim_z();
  out.charpoly_first = charpoly(A1.j_of_symbolic());
  out.charpoly_second = charpoly(A2.j_of_symbolic());
  if (out.charpoly_first == out.charpoly_second) {
    out.status = CriterionStatus::Pass;
    out.detail = "characteristic polynomials of j_Z coincide identically in Z";
    return out;
  }
  out.status = CriterionStatus::Fail;
  // Small integer witness: a Z where some coefficient polynomial takes
  // different values, so the eigenvalue multisets differ there.
  std::vector<long> c(m, -3);
  do {
    if (all_zero(c)) continue;
    QVec Z(m);
    for (std::size_t i = 0; i < m; ++i) Z[i] = Rational(c[i]);
    for (std::size_t d = 0; d < out.charpoly_first.size(); ++d)
      if (out.charpoly_first[d].eval(Z) != out.charpoly_second[d].eval(Z)) {
        out.witness_Z = Z;
        break;
      }
    if (out.witness_Z) break;
  } while (advance_odometer(c, 3));
  out.detail = out.witness_Z
                   ? "characteristic polynomials differ at Z = " + format_point(*out.witness_Z)
                   : "characteristic polynomials differ (no small integer witness found)";
  return out;
}

BracketLatticeCriterion criterion_bracket_lattice(const NilmanifoldData& N1,
                                                  const NilmanifoldData& N2) {
  check_lattice_dims(N1);
  check_lattice_dims(N2);
  BracketLatticeCriterion out;
  const NilmanifoldData* sides[2] = {&N1, &N2};
  bool ok[2] = {true, true};
  for (int s = 0; s < 2; ++s) {
    const NilmanifoldData& N = *sides[s];
    const IntegerLattice twoL = N.L.scaled(2);
    const std::vector<QVec>& gen = N.M.basis();
    for (std::size_t a = 0; a < gen.size() && ok[s]; ++a)
      for (std::size_t b = a + 1; b < gen.size(); ++b) {
        QVec w = N.algebra.bracket_v(gen[a], gen[b]);
        if (!twoL.contains(w)) {
          ok[s] = false;
          if (out.witness_side == 0) {
            out.witness_side = s + 1;
            out.witness_pair = {a, b};
            out.witness_bracket = std::move(w);
          }
          break;
        }
      }
  }
  out.first_ok = ok[0];
  out.second_ok = ok[1];
  if (out.first_ok && out.second_ok) {
    out.status = CriterionStatus::Pass;
    out.detail = "[M, M] lies in 2L for both manifolds";
  } else {
    out.status = CriterionStatus::Fail;
    std::ostringstream os;
    os << "side " << out.witness_side << ": bracket of M generators "
       << (out.witness_pair->first + 1) << ", " << (out.witness_pair->second + 1)
       << " equals " << format_point(out.witness_bracket) << ", outside 2L";
    out.detail = os.str();
  }
  return out;
}

namespace {

KernelCriterion kernels_symbolic(const NilmanifoldData& N1, const NilmanifoldData& N2) {
  KernelCriterion out;
  out.mode = KernelMode::Symbolic;
  const MetricTwoStepAlgebra& A1 = N1.algebra;
  const MetricTwoStepAlgebra& A2 = N2.algebra;
  const std::size_t n = A1.dim_v(), m = A1.dim_z();

  if (!lattices_equal(N1.M, N2.M) || !lattices_equal(N1.L, N2.L)) {
    out.detail =
        "symbolic mode proves the kernels coincide, which settles the "
        "criterion only when both manifolds use the same lattices; they "
        "differ here, so use sampled mode to compare spectra directly";
    return out;
  }

  const PMatrix J1 = A1.j_of_symbolic(), J2 = A2.j_of_symbolic();
  bool all_ok = true;
  std::ostringstream why;
  for (std::size_t k = 0; k < m; ++k) {
    KernelStratumCertificate cert;
    cert.stratum = k + 1;
    std::map<std::size_t, Rational> zeros;
    for (std::size_t i = 0; i < k; ++i) zeros[i] = Rational(0);
    const PMatrix M1 = substitute_entries(J1, zeros);
    const PMatrix M2 = substitute_entries(J2, zeros);
    const SymbolicKernel K1 = symbolic_kernel(M1, k);
    const SymbolicKernel K2 = symbolic_kernel(M2, k);
    cert.kernel_first = K1.basis;
    cert.kernel_second = K2.basis;
    cert.dims_equal = K1.basis.size() == K2.basis.size();

    bool cross = true;
    for (const auto& v : K1.basis)
      if (!annihilates(M2, v)) cross = false;
    for (const auto& w : K2.basis)
      if (!annihilates(M1, w)) cross = false;
    cert.cross_annihilation = cross;

    if (cert.dims_equal && cross) {
      const std::size_t kd = K1.basis.size();
      const Poly one = Poly::constant(m, Rational(1));
      if (kd == 0) {
        cert.independence_minor_first = one;
        cert.independence_minor_second = one;
      } else {
        PMatrix B1(n, kd), B2(n, kd);
        for (std::size_t c = 0; c < kd; ++c)
          for (std::size_t r = 0; r < n; ++r) {
            B1.at(r, c) = K1.basis[c][r];
            B2.at(r, c) = K2.basis[c][r];
          }
        cert.independence_minor_first = find_monomial_minor(B1, kd, k);
        cert.independence_minor_second = find_monomial_minor(B2, kd, k);
      }
      if (n == kd) {
        cert.rank_minor_first = one;
        cert.rank_minor_second = one;
      } else {
        cert.rank_minor_first = find_monomial_minor(M1, n - kd, k);
        cert.rank_minor_second = find_monomial_minor(M2, n - kd, k);
      }
      cert.whole_stratum = cert.independence_minor_first && cert.independence_minor_second &&
                           cert.rank_minor_first && cert.rank_minor_second;
    }

    if (!(cert.dims_equal && cert.cross_annihilation && cert.whole_stratum)) {
      all_ok = false;
      if (why.tellp() > 0) why << "; ";
      why << "stratum " << cert.stratum << ": ";
      if (!cert.dims_equal)
        why << "kernel dimensions differ (" << K1.basis.size() << " vs "
            << K2.basis.size() << ")";
      else if (!cert.cross_annihilation)
        why << "kernels are not annihilated by the other map";
      else
        why << "no whole-stratum minor certificate found";
    }
    out.strata.push_back(std::move(cert));
  }

  if (all_ok) {
    out.status = CriterionStatus::Pass;
    out.detail =
        "ker j_Z = ker j'_Z for every Z != 0, certified stratum by stratum; "
        "the intersection lattices and their spectra coincide outright";
  } else {
    out.status = CriterionStatus::Inconclusive;
    out.detail = why.str() + "; try sampled mode";
  }
  return out;
}

KernelCriterion kernels_sampled(const NilmanifoldData& N1, const NilmanifoldData& N2,
                                const KernelOptions& opts) {
  KernelCriterion out;
  out.mode = KernelMode::Sampled;
  const MetricTwoStepAlgebra& A1 = N1.algebra;
  const MetricTwoStepAlgebra& A2 = N2.algebra;
  const std::size_t m = A1.dim_z();

  if (!lattices_equal(N1.L, N2.L)) {
    out.detail = "the manifolds use different central lattices, so their dual "
                 "sample points cannot be matched up";
    return out;
  }

  const IntegerLattice dual = N1.L.dual();
  std::vector<long> c(m, -opts.coeff_range);
  std::size_t tested = 0;
  do {
    if (all_zero(c) || !canonical_sign(c)) continue;
    QVec Z(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t d = 0; d < m; ++d) {
        Rational t = dual.basis()[i][d];
        t *= c[i];
        Z[d] += t;
      }
    KernelSampleRecord rec;
    rec.Z = Z;
    rec.spectrum_first =
        N1.M.intersect_subspace(kernel_basis(A1.j_of(Z))).length_spectrum(opts.length_bound);
    rec.spectrum_second =
        N2.M.intersect_subspace(kernel_basis(A2.j_of(Z))).length_spectrum(opts.length_bound);
    rec.equal = rec.spectrum_first == rec.spectrum_second;
    ++tested;
    const bool failed = !rec.equal;
    out.samples.push_back(std::move(rec));
    if (failed) {
      out.status = CriterionStatus::Fail;
      out.detail = "length spectra of ker(j_Z) intersected with M differ at Z = " +
                   format_point(Z);
      return out;
    }
  } while (advance_odometer(c, opts.coeff_range));

  out.status = CriterionStatus::Pass;
  std::ostringstream os;
  os << "length spectra up to " << to_string(opts.length_bound) << " agree at all "
     << tested << " sampled dual points";
  out.detail = os.str();
  return out;
}

}  // namespace

KernelCriterion criterion_kernel_lattices(const NilmanifoldData& N1,
                                          const NilmanifoldData& N2,
                                          const KernelOptions& opts) {
  check_lattice_dims(N1);
  check_lattice_dims(N2);
  if (N1.algebra.dim_v() != N2.algebra.dim_v() ||
      N1.algebra.dim_z() != N2.algebra.dim_z()) {
    KernelCriterion out;
    out.mode = opts.mode;
    out.status = CriterionStatus::Fail;
    out.detail = "dimension mismatch";
    return out;
  }
  return opts.mode == KernelMode::Symbolic ? kernels_symbolic(N1, N2)
                                           : kernels_sampled(N1, N2, opts);
}

GordonWilsonReport gordon_wilson(const NilmanifoldData& N1, const NilmanifoldData& N2,
                                 const KernelOptions& opts) {
  GordonWilsonReport r;
  r.eigenvalues = criterion_eigenvalues(N1.algebra, N2.algebra);
  r.bracket_lattice = criterion_bracket_lattice(N1, N2);
  r.kernels = criterion_kernel_lattices(N1, N2, opts);
  r.isospectral_by_criterion = r.eigenvalues.status == CriterionStatus::Pass &&
                               r.bracket_lattice.status == CriterionStatus::Pass &&
                               r.kernels.status == CriterionStatus::Pass;
  return r;
}

}  // namespace nilgeo
