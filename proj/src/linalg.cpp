#include "opclass/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace opclass {

namespace {

// Relative width below which a run of eigenvalues counts as one degenerate
// cluster for basis canonicalization.  Kept near machine precision so the
// re-fixed vectors stay eigenvectors to well below the `eig` tolerance.
constexpr double kDegenerate = 1e-12;

void canonical_phase(Eigen::Ref<ComplexVector> col) {
  Eigen::Index pick = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    double a = std::abs(col(i));
    if (a > best) {
      best = a;
      pick = i;
    }
  }
  if (best <= 0) return;
  Complex z = col(pick);
  col *= std::conj(z) / std::abs(z);
}

// Deterministic orthonormal basis of the span of Q's columns: Gram-Schmidt
// over the projections of the canonical basis vectors, taken in index order.
ComplexMatrix canonical_basis(const ComplexMatrix& q) {
  const Eigen::Index n = q.rows();
  const Eigen::Index d = q.cols();
  ComplexMatrix out(n, d);
  Eigen::Index got = 0;
  for (Eigen::Index i = 0; i < n && got < d; ++i) {
    ComplexVector cand = q * (q.adjoint().col(i));  // P e_i
    for (Eigen::Index j = 0; j < got; ++j)
      cand -= out.col(j).dot(cand) * out.col(j);
    double nrm = cand.norm();
    if (nrm > 1e-6) {
      out.col(got) = cand / nrm;
      canonical_phase(out.col(got));
      ++got;
    }
  }
  if (got < d) return q;  // numerically impossible for a projector; keep input
  return out;
}

}  // namespace

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite())
    throw input_error(std::string(what) + ": entries must be finite");
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw input_error(std::string(what) + ": matrix must be square");
}

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol, const char* what) {
  require_square(m, what);
  double scale = std::max(m.norm(), 1.0);  // Frobenius guard scale
  if ((m - m.adjoint()).norm() > tol.scaled(tol.hermitian, scale))
    throw input_error(std::string(what) + ": matrix must be Hermitian");
}

double op_norm(const ComplexMatrix& t) {
  if (t.size() == 0) return 0.0;
  require_finite(t, "op_norm");
  Eigen::JacobiSVD<ComplexMatrix> s(t);
  return s.singularValues()(0);
}

double min_modulus(const ComplexMatrix& t) {
  if (t.size() == 0) return 0.0;
  require_finite(t, "min_modulus");
  if (t.cols() > t.rows()) return 0.0;  // nontrivial kernel
  Eigen::JacobiSVD<ComplexMatrix> s(t);
  return s.singularValues()(s.singularValues().size() - 1);
}

HermEig herm_eig(const ComplexMatrix& a, const Tolerances& tol) {
  require_finite(a, "herm_eig");
  require_hermitian(a, tol, "herm_eig");
  ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigensolver failed to converge");

  HermEig out{es.eigenvalues(), es.eigenvectors()};
  const Eigen::Index n = out.values.size();
  if (n == 0) return out;

  double scale = std::max(std::abs(out.values(0)),
                          std::abs(out.values(n - 1)));
  double width = std::max(kDegenerate * scale, tol.abs_floor);

  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo;
    while (hi + 1 < n && out.values(hi + 1) - out.values(hi) <= width) ++hi;
    if (hi > lo) {
      out.vectors.middleCols(lo, hi - lo + 1) =
          canonical_basis(out.vectors.middleCols(lo, hi - lo + 1));
    } else {
      canonical_phase(out.vectors.col(lo));
    }
    lo = hi + 1;
  }
  return out;
}

SvdParts svd(const ComplexMatrix& t) {
  require_finite(t, "svd");
  Eigen::JacobiSVD<ComplexMatrix> s(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {s.matrixU(), s.singularValues(), s.matrixV()};
}

ComplexMatrix modulus(const ComplexMatrix& t) {
  require_square(t, "modulus");
  SvdParts p = svd(t);
  ComplexMatrix m = p.v * p.singular.asDiagonal() * p.v.adjoint();
  return 0.5 * (m + m.adjoint());
}

PolarParts polar(const ComplexMatrix& t, const Tolerances& tol) {
  require_square(t, "polar");
  SvdParts s = svd(t);
  const Eigen::Index n = t.rows();
  double smax = s.singular.size() ? s.singular(0) : 0.0;
  double cut = tol.scaled(tol.rank * smax, 1.0);
  Eigen::Index r = 0;
  while (r < s.singular.size() && s.singular(r) > cut) ++r;
  PolarParts out;
  out.w = s.u.leftCols(r) * s.v.leftCols(r).adjoint();
  if (r == 0) out.w = ComplexMatrix::Zero(n, n);
  ComplexMatrix m = s.v * s.singular.asDiagonal() * s.v.adjoint();
  out.p = 0.5 * (m + m.adjoint());
  return out;
}

PsdMin psd_min(const ComplexMatrix& a, const Tolerances& tol) {
  HermEig e = herm_eig(a, tol);
  if (e.values.size() == 0) throw input_error("psd_min: empty matrix");
  return {e.values(0), e.vectors.col(0)};
}

double commutator_norm(const ComplexMatrix& t) {
  require_square(t, "commutator_norm");
  return op_norm(t.adjoint() * t - t * t.adjoint());
}

}  // namespace opclass
