#include "opclass/decompose.hpp"

#include <cmath>

#include "opclass/spectra.hpp"

namespace opclass {

namespace {

constexpr double kBasisGuard = 1e-6;  // orthonormality rejection threshold

void require_basis(const ComplexMatrix& q, const char* what) {
  if (q.cols() == 0) return;
  ComplexMatrix g = q.adjoint() * q;
  g -= ComplexMatrix::Identity(q.cols(), q.cols());
  if (op_norm(g) > kBasisGuard)
    throw input_error(std::string(what) + ": basis columns are not orthonormal");
}

}  // namespace

InvariantReport invariant_check(const ComplexMatrix& t, const ComplexMatrix& basis,
                                const Tolerances& tol) {
  require_finite(t, "invariant_check");
  require_square(t, "invariant_check");
  if (basis.rows() != t.rows())
    throw input_error("invariant_check: basis dimension mismatch");
  if (basis.cols() < 1 || basis.cols() > basis.rows())
    throw input_error("invariant_check: basis must have between 1 and dim columns");
  require_basis(basis, "invariant_check");

  const Eigen::Index n = t.rows();
  double scale = std::max(op_norm(t), Tolerances{}.abs_floor);
  ComplexMatrix p = basis * basis.adjoint();
  ComplexMatrix q = ComplexMatrix::Identity(n, n) - p;
  InvariantReport out;
  out.residual_invariant = op_norm(q * t * p) / scale;
  out.residual_reducing = std::max(out.residual_invariant, op_norm(p * t * q) / scale);
  out.invariant = out.residual_invariant <= tol.check;
  out.reducing = out.residual_reducing <= tol.check;
  return out;
}

BlockCheckReport check_blocks(const ComplexMatrix& t, const BlockDecomposition& d,
                              const Tolerances& tol) {
  require_finite(t, "check_blocks");
  require_square(t, "check_blocks");
  const Eigen::Index n = t.rows();
  const Eigen::Index d0 = d.basis_h0.cols();
  const Eigen::Index d1 = d.basis_h1.cols();
  const Eigen::Index d2 = d.basis_h2.cols();
  if (d0 + d1 + d2 != n || d.basis_h0.rows() != n || d.basis_h1.rows() != n ||
      d.basis_h2.rows() != n)
    throw input_error("check_blocks: bases must tile the full space");
  ComplexMatrix u(n, n);
  u << d.basis_h0, d.basis_h1, d.basis_h2;
  require_basis(u, "check_blocks");
  if (d.lambda < 0) throw input_error("check_blocks: lambda must be nonnegative");

  const double nrm = op_norm(t);
  const double scale = std::max(nrm, tol.abs_floor);
  ComplexMatrix conj = u.adjoint() * t * u;

  BlockCheckReport r;
  r.zero_12 = op_norm(conj.block(0, d0, d0, d1)) / scale;
  r.zero_13 = op_norm(conj.block(0, d0 + d1, d0, d2)) / scale;
  r.zero_21 = op_norm(conj.block(d0, 0, d1, d0)) / scale;
  r.zero_31 = op_norm(conj.block(d0 + d1, 0, d2, d0)) / scale;
  // The coupling block maps H2 -> H1 in the upper form and H1 -> H2 in the
  // adjoint form; the mirrored position must vanish.
  ComplexMatrix a;
  if (d.adjoint_form) {
    r.zero_off = op_norm(conj.block(d0, d0 + d1, d1, d2)) / scale;  // (2,3)
    a = conj.block(d0 + d1, d0, d2, d1);                            // (3,2)
  } else {
    r.zero_off = op_norm(conj.block(d0 + d1, d0, d2, d1)) / scale;  // (3,2)
    a = conj.block(d0, d0 + d1, d1, d2);                            // (2,3)
  }
  ComplexMatrix raw1 = conj.block(d0, d0, d1, d1);
  ComplexMatrix b = conj.block(d0 + d1, d0 + d1, d2, d2);
  r.zero_ok = std::max({r.zero_12, r.zero_13, r.zero_21, r.zero_31, r.zero_off}) <=
              tol.check;

  // V0 = direct sum over alpha clusters of alpha_i * unitary
  r.v0_structure = 0;
  {
    ComplexMatrix v0 = conj.topLeftCorner(d0, d0);
    Eigen::Index off = 0;
    for (size_t i = 0; i < d.alphas.size(); ++i) {
      Eigen::Index mi = d.alpha_mults[i];
      if (off + mi > d0) throw input_error("check_blocks: alpha multiplicities exceed H0");
      double ai = d.alphas[i];
      if (ai <= 0) throw input_error("check_blocks: alpha centers must be positive");
      ComplexMatrix di = v0.block(off, off, mi, mi) / ai;
      r.v0_structure = std::max(
          r.v0_structure,
          op_norm(ComplexMatrix(di.adjoint() * di -
                                ComplexMatrix::Identity(mi, mi))));
      Eigen::Index coff = 0;
      for (size_t j = 0; j < d.alphas.size(); ++j) {
        Eigen::Index mj = d.alpha_mults[j];
        if (j != i)
          r.v0_structure = std::max(
              r.v0_structure, op_norm(ComplexMatrix(v0.block(off, coff, mi, mj))) / scale);
        coff += mj;
      }
      off += mi;
    }
    if (off != d0) throw input_error("check_blocks: alpha multiplicities must tile H0");
  }
  r.v0_ok = r.v0_structure <= tol.check;

  const bool degenerate = d.lambda <= tol.scaled(tol.check * scale, 1.0);
  ComplexMatrix v;
  if (d1 == 0) {
    r.v_isometry = 0;
    v = ComplexMatrix(0, 0);
  } else if (degenerate) {
    r.v_isometry = op_norm(raw1) / scale;
    v = raw1;
  } else {
    v = raw1 / d.lambda;
    ComplexMatrix g = d.adjoint_form ? ComplexMatrix(v * v.adjoint())
                                     : ComplexMatrix(v.adjoint() * v);
    r.v_isometry = op_norm(ComplexMatrix(g - ComplexMatrix::Identity(d1, d1)));
  }
  r.v_ok = r.v_isometry <= tol.check;

  // v is dimensionless after the lambda division, so the product scales like
  // T; in the degenerate branch v is the raw block and the product like T^2.
  const double va_scale = degenerate ? scale * scale : scale;
  if (d1 == 0 || d2 == 0) {
    r.vstar_a = 0;
  } else if (d.adjoint_form) {
    r.vstar_a = op_norm(ComplexMatrix(v * a.adjoint())) / va_scale;
  } else {
    r.vstar_a = op_norm(ComplexMatrix(v.adjoint() * a)) / va_scale;
  }
  r.vstar_a_ok = r.vstar_a <= tol.check;

  if (d2 == 0) {
    r.contraction = 0;
    r.b_norm_excess = 0;
  } else {
    ComplexMatrix gram =
        d.adjoint_form ? ComplexMatrix(a * a.adjoint() + b * b.adjoint())
                       : ComplexMatrix(a.adjoint() * a + b.adjoint() * b);
    double lmax = -psd_min(ComplexMatrix(-gram), tol).value;  // largest eigenvalue
    r.contraction = std::max(0.0, lmax - d.lambda * d.lambda) / (scale * scale);
    r.b_norm_excess = std::max(0.0, op_norm(b) - d.lambda) / scale;
  }
  r.contraction_ok = r.contraction <= tol.check;
  r.b_norm_ok = r.b_norm_excess <= tol.check;

  r.reassembly = op_norm(ComplexMatrix(u * conj * u.adjoint() - t)) / scale;
  r.reassembly_ok = r.reassembly <= tol.eig;

  r.all_ok = r.zero_ok && r.v0_ok && r.v_ok && r.vstar_a_ok && r.contraction_ok &&
             r.b_norm_ok && r.reassembly_ok;
  return r;
}

namespace {

// Split the |T| (or |T*|) eigendecomposition at lambda and build the
// decomposition record.  `gram` must be T*T (upper form) or TT* (adjoint).
BlockDecomposition split_at_lambda(const ComplexMatrix& t, const ComplexMatrix& gram,
                                   std::optional<double> lambda, bool adjoint_form,
                                   const Tolerances& tol) {
  const Eigen::Index n = t.rows();
  HermEig e = herm_eig(gram, tol);
  RealVector sigma(n);
  for (Eigen::Index i = 0; i < n; ++i)
    sigma(i) = std::sqrt(std::max(e.values(i), 0.0));

  std::vector<Cluster> cl = cluster(sigma, tol.cluster);
  BlockDecomposition d;
  d.adjoint_form = adjoint_form;
  if (lambda) {
    d.lambda = *lambda;
    if (d.lambda < 0) throw input_error("star_para_blocks: lambda must be nonnegative");
  } else {
    d.lambda = auto_lambda(cl);
    d.lambda_auto = true;
  }

  double smax = sigma(n - 1);
  double match = std::max(tol.cluster * std::max(smax, d.lambda), tol.abs_floor);
  // descending index walk keeps each basis ordered by descending value
  std::vector<Eigen::Index> h0, h1, h2;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    if (sigma(i) > d.lambda + match)
      h0.push_back(i);
    else if (sigma(i) >= d.lambda - match)
      h1.push_back(i);
    else
      h2.push_back(i);
  }

  auto take = [&](const std::vector<Eigen::Index>& idx) {
    ComplexMatrix m(n, static_cast<Eigen::Index>(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) m.col(j) = e.vectors.col(idx[j]);
    return m;
  };
  d.basis_h0 = take(h0);
  d.basis_h1 = take(h1);
  d.basis_h2 = take(h2);

  if (!h0.empty()) {
    RealVector top(static_cast<Eigen::Index>(h0.size()));
    for (size_t j = 0; j < h0.size(); ++j) top(h0.size() - 1 - j) = sigma(h0[j]);
    std::vector<Cluster> ac = cluster(top, tol.cluster);
    for (auto it = ac.rbegin(); it != ac.rend(); ++it) {
      d.alphas.push_back(it->center);
      d.alpha_mults.push_back(it->multiplicity);
    }
  }

  ComplexMatrix u(n, n);
  u << d.basis_h0, d.basis_h1, d.basis_h2;
  d.conjugated = u.adjoint() * t * u;

  const Eigen::Index d0 = d.basis_h0.cols();
  const Eigen::Index d1 = d.basis_h1.cols();
  const Eigen::Index d2 = d.basis_h2.cols();
  double scale = std::max(smax, tol.abs_floor);
  d.lambda_degenerate = d.lambda <= tol.scaled(tol.check * scale, 1.0);
  d.v0 = d.conjugated.topLeftCorner(d0, d0);
  ComplexMatrix raw1 = d.conjugated.block(d0, d0, d1, d1);
  d.v = d.lambda_degenerate ? raw1 : ComplexMatrix(raw1 / d.lambda);
  d.a = adjoint_form ? d.conjugated.block(d0 + d1, d0, d2, d1)
                     : d.conjugated.block(d0, d0 + d1, d1, d2);
  d.b = d.conjugated.block(d0 + d1, d0 + d1, d2, d2);
  return d;
}

}  // namespace

std::pair<BlockDecomposition, BlockCheckReport> star_para_blocks(
    const ComplexMatrix& t, std::optional<double> lambda, const Tolerances& tol) {
  require_finite(t, "star_para_blocks");
  require_square(t, "star_para_blocks");
  if (t.rows() == 0) throw input_error("star_para_blocks: empty matrix");
  BlockDecomposition d =
      split_at_lambda(t, ComplexMatrix(t.adjoint() * t), lambda, false, tol);
  BlockCheckReport r = check_blocks(t, d, tol);
  return {std::move(d), r};
}

std::pair<BlockDecomposition, BlockCheckReport> adjoint_blocks(
    const ComplexMatrix& t, std::optional<double> lambda, const Tolerances& tol) {
  require_finite(t, "adjoint_blocks");
  require_square(t, "adjoint_blocks");
  if (t.rows() == 0) throw input_error("adjoint_blocks: empty matrix");
  // eigenspaces of |T*|, i.e. of T T*
  BlockDecomposition d =
      split_at_lambda(t, ComplexMatrix(t * t.adjoint()), lambda, true, tol);
  BlockCheckReport r = check_blocks(t, d, tol);
  return {std::move(d), r};
}

HypoBlockReport hypo_block_check(const ComplexMatrix& c, const ComplexMatrix& a,
                                 const ComplexMatrix& b, const Tolerances& tol) {
  require_finite(c, "hypo_block_check");
  require_finite(a, "hypo_block_check");
  require_finite(b, "hypo_block_check");
  require_square(c, "hypo_block_check");
  require_square(b, "hypo_block_check");
  if (a.rows() != c.rows() || a.cols() != b.rows())
    throw input_error("hypo_block_check: A must map the B space into the C space");

  HypoBlockReport out;
  ComplexMatrix m1 = a.adjoint() * a + b.adjoint() * b - b * b.adjoint();
  ComplexMatrix m2 = c.adjoint() * c - c * c.adjoint() - a * a.adjoint();
  out.res1 = psd_min(m1, tol).value;
  out.res2 = psd_min(m2, tol).value;
  double s = std::max({op_norm(c), op_norm(a), op_norm(b), 1.0});
  double cut = tol.scaled(tol.check * s * s, 1.0);
  out.pass1 = out.res1 >= -cut;
  out.pass2 = out.res2 >= -cut;
  return out;
}

}  // namespace opclass
