#include "opclass/classify.hpp"

#include <cmath>
#include <queue>

#include <Eigen/Eigenvalues>

namespace opclass {

namespace {

constexpr int kGridPoints = 512;
constexpr int kGoldenMaxIter = 200;
constexpr int kSubdivideBudget = 4096;

double lambda_min_only(const ComplexMatrix& q) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(q, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

struct Interval {
  double lo, hi, vlo, vhi;
  double bound() const {
    double w = hi - lo;
    return std::min(vlo, vhi) - 0.25 * w * w;
  }
};

struct ByBound {
  bool operator()(const Interval& a, const Interval& b) const {
    return a.bound() > b.bound();  // smallest certified bound on top
  }
};

void phase_fix(ComplexVector& v) {
  Eigen::Index pick = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v(i));
    if (a > best) {
      best = a;
      pick = i;
    }
  }
  if (best > 0) v *= std::conj(v(pick)) / std::abs(v(pick));
}

ComplexVector pad_to(const ComplexVector& x, Eigen::Index n) {
  ComplexVector out = ComplexVector::Zero(n);
  out.head(x.size()) = x;
  return out;
}

}  // namespace

const char* to_string(PencilKind k) {
  switch (k) {
    case PencilKind::paranormal: return "paranormal";
    case PencilKind::star_paranormal: return "star_paranormal";
    default: return "generic";
  }
}

const char* to_string(PencilVerdict v) {
  switch (v) {
    case PencilVerdict::certified_nonneg: return "certified_nonneg";
    case PencilVerdict::violation: return "violation";
    default: return "inconclusive";
  }
}

PencilCertificate pencil_min(const ComplexMatrix& a, const ComplexMatrix& b,
                             const Tolerances& tol, PencilKind kind) {
  require_finite(a, "pencil_min");
  require_finite(b, "pencil_min");
  require_square(a, "pencil_min");
  require_square(b, "pencil_min");
  if (a.rows() != b.rows())
    throw input_error("pencil_min: A and B must have matching dimensions");
  if (a.rows() == 0) throw input_error("pencil_min: empty matrices");
  require_hermitian(a, tol, "pencil_min(A)");
  require_hermitian(b, tol, "pencil_min(B)");

  const ComplexMatrix as = 0.5 * (a + a.adjoint());
  const ComplexMatrix bs = 0.5 * (b + b.adjoint());
  const Eigen::Index n = as.rows();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(as, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(bs, Eigen::EigenvaluesOnly);
  const double a_max = std::max(std::abs(ea.eigenvalues()(0)),
                                std::abs(ea.eigenvalues()(n - 1)));
  const double k_max = eb.eigenvalues()(n - 1);
  const double psd_guard_a = tol.scaled(tol.membership * std::max(a_max, 1.0), 1.0);
  const double psd_guard_b = tol.scaled(tol.membership * std::max(k_max, 1.0), 1.0);
  if (ea.eigenvalues()(0) < -psd_guard_a)
    throw input_error("pencil_min: A is not positive semidefinite");
  if (eb.eigenvalues()(0) < -psd_guard_b)
    throw input_error("pencil_min: B is not positive semidefinite");

  PencilCertificate cert;
  cert.kind = kind;
  cert.k_max = std::max(k_max, 0.0);
  cert.lipschitz_bound = 2.0 * (cert.k_max + cert.k_max);

  const double scale = std::max({a_max, cert.k_max * cert.k_max, 0.0});
  const double tol_eff = tol.scaled(tol.membership * std::max(scale, 1.0), 1.0);

  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  int evals = 0;
  auto g = [&](double k) {
    ++evals;
    return lambda_min_only(as - (2.0 * k) * bs + (k * k) * eye);
  };

  // Degenerate range: B ~ 0, so g(k) = lambda_min(A) + k^2 has its minimum
  // at k = 0.
  if (cert.k_max <= tol.abs_floor) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(as);
    cert.min_value = es.eigenvalues()(0);
    cert.lower_bound = cert.min_value;
    cert.argmin_k = 0;
    cert.witness = es.eigenvectors().col(0);
    phase_fix(cert.witness);
    cert.evaluations = 1;
    cert.verdict = cert.min_value >= -tol_eff ? PencilVerdict::certified_nonneg
                                              : PencilVerdict::violation;
    return cert;
  }

  const double h = cert.k_max / (kGridPoints - 1);
  cert.grid_step = h;

  std::vector<double> ks(kGridPoints), vs(kGridPoints);
  double best_k = 0, best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGridPoints; ++i) {
    ks[i] = i * h;
    vs[i] = g(ks[i]);
    if (vs[i] < best_v) {
      best_v = vs[i];
      best_k = ks[i];
    }
  }

  std::priority_queue<Interval, std::vector<Interval>, ByBound> queue;
  for (int i = 0; i + 1 < kGridPoints; ++i)
    queue.push({ks[i], ks[i + 1], vs[i], vs[i + 1]});

  bool violation_seen = best_v < -tol_eff;
  bool budget_out = false;
  int budget = kSubdivideBudget;
  double lower = queue.top().bound();
  while (true) {
    lower = queue.top().bound();
    if (lower >= -tol_eff) break;   // every interval certified
    if (violation_seen) break;      // a real point already dips below -tol
    if (budget-- <= 0) {
      budget_out = true;
      break;
    }
    Interval cur = queue.top();
    queue.pop();
    double mid = 0.5 * (cur.lo + cur.hi);
    double vm = g(mid);
    if (vm < best_v) {
      best_v = vm;
      best_k = mid;
    }
    if (vm < -tol_eff) violation_seen = true;
    queue.push({cur.lo, mid, cur.vlo, vm});
    queue.push({mid, cur.hi, vm, cur.vhi});
  }

  // Golden-section refinement around the best located point.  Track the best
  // evaluated point so the reported minimum is always an achieved value.
  {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = std::max(0.0, best_k - h);
    double hi = std::min(cert.k_max, best_k + h);
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    if (f1 < best_v) { best_v = f1; best_k = x1; }
    if (f2 < best_v) { best_v = f2; best_k = x2; }
    const double kstop = std::max(1e-12 * std::max(cert.k_max, 1.0), 1e-15);
    for (int it = 0; it < kGoldenMaxIter && (hi - lo) > kstop; ++it) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = g(x1);
        if (f1 < best_v) { best_v = f1; best_k = x1; }
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = g(x2);
        if (f2 < best_v) { best_v = f2; best_k = x2; }
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      as - (2.0 * best_k) * bs + (best_k * best_k) * eye);
  ++evals;
  if (es.eigenvalues()(0) < best_v) best_v = es.eigenvalues()(0);
  cert.min_value = best_v;
  cert.argmin_k = best_k;
  cert.witness = es.eigenvectors().col(0);
  phase_fix(cert.witness);
  cert.lower_bound = std::min(lower, best_v);
  cert.evaluations = evals;

  if (cert.min_value < -tol_eff) {
    // The witness then violates the per-vector inequality:
    // <Ax,x> - <Bx,x>^2 <= g(argmin) < -tol.
    cert.verdict = PencilVerdict::violation;
  } else if (cert.lower_bound >= -tol_eff && !budget_out) {
    cert.verdict = PencilVerdict::certified_nonneg;
  } else {
    cert.verdict = PencilVerdict::inconclusive;
  }
  return cert;
}

namespace {

struct Normalized {
  double norm = 0;
  bool zero = false;
  ComplexMatrix n;  // t / ||t||
};

Normalized normalize(const ComplexMatrix& t, const Tolerances& tol, const char* what) {
  require_finite(t, what);
  require_square(t, what);
  if (t.rows() == 0) throw input_error(std::string(what) + ": empty matrix");
  Normalized out;
  out.norm = op_norm(t);
  if (out.norm <= tol.abs_floor) {
    out.zero = true;
    out.n = ComplexMatrix::Zero(t.rows(), t.cols());
  } else {
    out.n = t / out.norm;
  }
  return out;
}

ClassOutcome zero_outcome() {
  return {TriState::yes, 0.0, std::nullopt, std::nullopt};
}

// Shared pencil-based membership decision on pre-normalized Gram matrices.
// slack(x) = sqrt(<Ax,x>) - <Bx,x> is the defining inequality of the class
// on unit vectors; a `no` verdict requires the witness to violate it
// directly by more than the tolerance.
ClassOutcome pencil_outcome(const ComplexMatrix& a, const ComplexMatrix& bgram,
                            const Tolerances& tol, PencilKind kind) {
  ClassOutcome out;
  PencilCertificate cert = pencil_min(a, bgram, tol, kind);
  const double tol_eff = tol.scaled(tol.membership, 1.0);
  switch (cert.verdict) {
    case PencilVerdict::certified_nonneg:
      out.verdict = TriState::yes;
      out.margin = cert.min_value;
      break;
    case PencilVerdict::violation: {
      const ComplexVector& x = cert.witness;
      double qa = std::real(Complex(x.dot(a * x)));
      double qb = std::real(Complex(x.dot(bgram * x)));
      double slack = std::sqrt(std::max(qa, 0.0)) - qb;
      out.margin = slack;
      if (slack <= -tol_eff) {
        out.verdict = TriState::no;
        out.witness = x;
      } else {
        out.verdict = TriState::inconclusive;
      }
      break;
    }
    default:
      out.verdict = TriState::inconclusive;
      out.margin = cert.lower_bound;
      break;
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace

ClassOutcome is_normal(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_normal");
  if (nt.zero) return zero_outcome();
  ClassOutcome out;
  double res = commutator_norm(nt.n);
  out.margin = -res;
  out.verdict = res <= tol.scaled(tol.membership, 1.0) ? TriState::yes : TriState::no;
  return out;
}

ClassOutcome is_self_adjoint(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_self_adjoint");
  if (nt.zero) return zero_outcome();
  ClassOutcome out;
  double res = op_norm(nt.n - nt.n.adjoint());
  out.margin = -res;
  out.verdict = res <= tol.scaled(tol.membership, 1.0) ? TriState::yes : TriState::no;
  return out;
}

ClassOutcome is_positive(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_positive");
  if (nt.zero) return zero_outcome();
  ClassOutcome out;
  const double tol_eff = tol.scaled(tol.membership, 1.0);
  double herm_res = op_norm(nt.n - nt.n.adjoint());
  if (herm_res > tol_eff) {
    out.verdict = TriState::no;
    out.margin = -herm_res;
    return out;
  }
  PsdMin pm = psd_min(0.5 * (nt.n + nt.n.adjoint()), tol);
  out.margin = pm.value;
  out.verdict = pm.value >= -tol_eff ? TriState::yes : TriState::no;
  if (out.verdict == TriState::no) out.witness = pm.witness;
  return out;
}

ClassOutcome is_unitary(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_unitary");
  ClassOutcome out;
  if (nt.zero) {
    out.verdict = TriState::no;
    out.margin = -1.0;
    return out;
  }
  const Eigen::Index n = nt.n.rows();
  double res = op_norm(nt.n.adjoint() * nt.n - ComplexMatrix::Identity(n, n));
  out.margin = -res;
  out.verdict = res <= tol.scaled(tol.membership, 1.0) ? TriState::yes : TriState::no;
  return out;
}

IsometryOutcome is_isometry_multiple(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_isometry_multiple");
  IsometryOutcome out;
  if (nt.zero) {
    out.verdict = TriState::yes;  // degenerate fit c = 0
    return out;
  }
  const Eigen::Index n = nt.n.rows();
  ComplexMatrix gram = nt.n.adjoint() * nt.n;
  double c2 = std::real(gram.trace()) / static_cast<double>(n);
  out.residual = op_norm(gram - c2 * ComplexMatrix::Identity(n, n));
  out.c = std::sqrt(std::max(c2, 0.0)) * nt.norm;
  out.verdict = out.residual <= tol.scaled(tol.membership, 1.0) ? TriState::yes
                                                                : TriState::no;
  return out;
}

ClassOutcome is_hyponormal(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_hyponormal");
  if (nt.zero) return zero_outcome();
  ClassOutcome out;
  PsdMin pm = psd_min(nt.n.adjoint() * nt.n - nt.n * nt.n.adjoint(), tol);
  out.margin = pm.value;
  if (pm.value >= -tol.scaled(tol.membership, 1.0)) {
    out.verdict = TriState::yes;
  } else {
    out.verdict = TriState::no;
    out.witness = pm.witness;
  }
  return out;
}

ClassOutcome is_paranormal(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_paranormal");
  if (nt.zero) return zero_outcome();
  ComplexMatrix t2 = nt.n * nt.n;
  return pencil_outcome(t2.adjoint() * t2, nt.n.adjoint() * nt.n, tol,
                        PencilKind::paranormal);
}

ClassOutcome is_star_paranormal(const ComplexMatrix& t, const Tolerances& tol) {
  Normalized nt = normalize(t, tol, "is_star_paranormal");
  if (nt.zero) return zero_outcome();
  ComplexMatrix t2 = nt.n * nt.n;
  return pencil_outcome(t2.adjoint() * t2, nt.n * nt.n.adjoint(), tol,
                        PencilKind::star_paranormal);
}

Compressions compress(const ComplexMatrix& t_ambient, int m) {
  require_finite(t_ambient, "compress");
  require_square(t_ambient, "compress");
  const Eigen::Index n = t_ambient.rows();
  if (m < 1) throw input_error("compress: window must be at least 1");
  if (n < m + 2)
    throw input_error("compress: ambient dimension must be at least window + 2");
  ComplexMatrix t2 = t_ambient * t_ambient;
  ComplexMatrix tt = t_ambient.adjoint() * t_ambient;
  ComplexMatrix tts = t_ambient * t_ambient.adjoint();
  Compressions out;
  out.a = (t2.adjoint() * t2).topLeftCorner(m, m);
  out.b_para = tt.topLeftCorner(m, m);
  out.b_star = tts.topLeftCorner(m, m);
  out.b_hypo = (tt - tts).topLeftCorner(m, m);
  out.window = m;
  out.ambient = static_cast<int>(n);
  return out;
}

namespace {

// Normalize the ambient matrix, compress its Gram products, then decide.
struct CompressedSetup {
  Normalized nt;
  Compressions c;
};

CompressedSetup compressed_setup(const ComplexMatrix& t_ambient, int m,
                                 const Tolerances& tol, const char* what) {
  CompressedSetup s{normalize(t_ambient, tol, what), {}};
  if (!s.nt.zero) s.c = compress(s.nt.n, m);
  return s;
}

}  // namespace

ClassOutcome is_hyponormal_compressed(const ComplexMatrix& t_ambient, int m,
                                      const Tolerances& tol) {
  CompressedSetup s = compressed_setup(t_ambient, m, tol, "is_hyponormal_compressed");
  if (s.nt.zero) return zero_outcome();
  ClassOutcome out;
  PsdMin pm = psd_min(s.c.b_hypo, tol);
  out.margin = pm.value;
  if (pm.value >= -tol.scaled(tol.membership, 1.0)) {
    out.verdict = TriState::yes;
  } else {
    out.verdict = TriState::no;
    out.witness = pad_to(pm.witness, t_ambient.rows());
  }
  return out;
}

ClassOutcome is_paranormal_compressed(const ComplexMatrix& t_ambient, int m,
                                      const Tolerances& tol) {
  CompressedSetup s = compressed_setup(t_ambient, m, tol, "is_paranormal_compressed");
  if (s.nt.zero) return zero_outcome();
  ClassOutcome out = pencil_outcome(s.c.a, s.c.b_para, tol, PencilKind::paranormal);
  if (out.witness) out.witness = pad_to(*out.witness, t_ambient.rows());
  return out;
}

ClassOutcome is_star_paranormal_compressed(const ComplexMatrix& t_ambient, int m,
                                           const Tolerances& tol) {
  CompressedSetup s =
      compressed_setup(t_ambient, m, tol, "is_star_paranormal_compressed");
  if (s.nt.zero) return zero_outcome();
  ClassOutcome out = pencil_outcome(s.c.a, s.c.b_star, tol, PencilKind::star_paranormal);
  if (out.witness) out.witness = pad_to(*out.witness, t_ambient.rows());
  return out;
}

IsometryOutcome is_isometry_multiple_compressed(const ComplexMatrix& t_ambient, int m,
                                                const Tolerances& tol) {
  CompressedSetup s =
      compressed_setup(t_ambient, m, tol, "is_isometry_multiple_compressed");
  IsometryOutcome out;
  if (s.nt.zero) {
    out.verdict = TriState::yes;
    return out;
  }
  double c2 = std::real(s.c.b_para.trace()) / static_cast<double>(m);
  out.residual = op_norm(s.c.b_para - c2 * ComplexMatrix::Identity(m, m));
  out.c = std::sqrt(std::max(c2, 0.0)) * s.nt.norm;
  out.verdict = out.residual <= tol.scaled(tol.membership, 1.0) ? TriState::yes
                                                                : TriState::no;
  return out;
}

namespace {

ClassReport classify_impl(const ComplexMatrix& t, std::optional<int> window,
                          const Tolerances& tol) {
  ClassReport r;
  r.dim = static_cast<int>(t.rows());
  r.window = window;
  r.norm = op_norm(t);
  r.commutator = commutator_norm(t);
  r.tolerances = tol;

  auto run_hypo = window ? is_hyponormal_compressed(t, *window, tol)
                         : is_hyponormal(t, tol);
  auto run_para = window ? is_paranormal_compressed(t, *window, tol)
                         : is_paranormal(t, tol);
  auto run_star = window ? is_star_paranormal_compressed(t, *window, tol)
                         : is_star_paranormal(t, tol);
  auto run_iso = window ? is_isometry_multiple_compressed(t, *window, tol)
                        : is_isometry_multiple(t, tol);

  r.normal = is_normal(t, tol).verdict;
  r.self_adjoint = is_self_adjoint(t, tol).verdict;
  r.positive = is_positive(t, tol).verdict;
  r.unitary = is_unitary(t, tol).verdict;
  r.isometry_multiple = run_iso.verdict;
  r.isometry_scale = run_iso.c;
  r.hyponormal = run_hypo.verdict;
  r.hypo_margin = run_hypo.margin;
  r.hypo_witness = run_hypo.witness;
  r.paranormal = run_para.verdict;
  r.para_witness = run_para.witness;
  r.para_certificate = run_para.certificate;
  r.star_paranormal = run_star.verdict;
  r.star_witness = run_star.witness;
  r.star_certificate = run_star.certificate;
  return r;
}

}  // namespace

ClassReport classify(const ComplexMatrix& t, const Tolerances& tol) {
  return classify_impl(t, std::nullopt, tol);
}

ClassReport classify_compressed(const ComplexMatrix& t_ambient, int m,
                                const Tolerances& tol) {
  Normalized nt = normalize(t_ambient, tol, "classify_compressed");
  if (!nt.zero) compress(nt.n, m);  // validate window before running
  return classify_impl(t_ambient, m, tol);
}

ComplexMatrix norm_attaining_subspace(const ComplexMatrix& t, const Tolerances& tol) {
  require_finite(t, "norm_attaining_subspace");
  require_square(t, "norm_attaining_subspace");
  if (t.rows() == 0) throw input_error("norm_attaining_subspace: empty matrix");
  HermEig e = herm_eig(t.adjoint() * t, tol);
  const Eigen::Index n = e.values.size();
  double smax = std::sqrt(std::max(e.values(n - 1), 0.0));
  if (smax <= tol.abs_floor) return ComplexMatrix::Identity(n, n);  // zero matrix
  double cut = smax * (1.0 - tol.cluster);
  Eigen::Index first = n;
  while (first > 0 && std::sqrt(std::max(e.values(first - 1), 0.0)) >= cut) --first;
  ComplexMatrix basis(n, n - first);
  for (Eigen::Index j = n - 1; j >= first; --j)
    basis.col(n - 1 - j) = e.vectors.col(j);  // descending order
  return basis;
}

std::vector<double> powers_chain(const ComplexMatrix& t, const ComplexVector& x,
                                 int n_powers) {
  require_finite(t, "powers_chain");
  require_square(t, "powers_chain");
  if (x.size() != t.rows())
    throw input_error("powers_chain: vector dimension mismatch");
  double xn = x.norm();
  if (!(xn > 0) || !x.allFinite())
    throw input_error("powers_chain: vector must be nonzero and finite");
  if (n_powers < 1) throw input_error("powers_chain: need at least one power");
  double nrm = op_norm(t);
  std::vector<double> out;
  out.reserve(n_powers);
  ComplexVector y = x;
  double expected = xn;
  for (int k = 1; k <= n_powers; ++k) {
    y = t * y;
    expected *= nrm;
    out.push_back(std::abs(y.norm() - expected));
  }
  return out;
}

ComplexMatrix joint_norm_attaining_set(const ComplexMatrix& t, int n_powers,
                                       const Tolerances& tol) {
  require_finite(t, "joint_norm_attaining_set");
  require_square(t, "joint_norm_attaining_set");
  if (n_powers < 1) throw input_error("joint_norm_attaining_set: need at least one power");
  const Eigen::Index n = t.rows();
  if (n == 0) throw input_error("joint_norm_attaining_set: empty matrix");
  double nrm = op_norm(t);
  if (nrm <= tol.abs_floor) return ComplexMatrix::Identity(n, n);

  ComplexMatrix gsum = ComplexMatrix::Zero(n, n);
  ComplexMatrix pk = ComplexMatrix::Identity(n, n);
  double target = 1.0;
  ComplexMatrix nt = t / nrm;
  for (int k = 1; k <= n_powers; ++k) {
    pk = pk * nt;  // (T/||T||)^k, so the target level is always 1
    target = 1.0;
    HermEig e = herm_eig(pk.adjoint() * pk, tol);
    ComplexMatrix sel(n, n);
    Eigen::Index d = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      double sigma = std::sqrt(std::max(e.values(j), 0.0));
      if (std::abs(sigma - target) <= tol.cluster * target) sel.col(d++) = e.vectors.col(j);
    }
    if (d == 0) return ComplexMatrix(n, 0);
    ComplexMatrix q = sel.leftCols(d);
    gsum += ComplexMatrix::Identity(n, n) - q * q.adjoint();
  }
  HermEig eg = herm_eig(gsum, tol);
  double cut = tol.scaled(tol.check * n_powers, 1.0);
  Eigen::Index d = 0;
  ComplexMatrix basis(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    if (eg.values(j) <= cut) basis.col(d++) = eg.vectors.col(j);
  return basis.leftCols(d);
}

KernelCompare kernel_compare(const ComplexMatrix& t, const Tolerances& tol) {
  require_finite(t, "kernel_compare");
  require_square(t, "kernel_compare");
  const Eigen::Index n = t.rows();
  if (n == 0) throw input_error("kernel_compare: empty matrix");
  SvdParts s = svd(t);
  double smax = s.singular(0);
  double cut = tol.scaled(tol.rank * smax, 1.0);
  Eigen::Index r = 0;
  while (r < s.singular.size() && s.singular(r) > cut) ++r;
  KernelCompare out;
  out.ker = s.v.rightCols(n - r);
  out.ker_star = s.u.rightCols(n - r);
  ComplexMatrix p1 = out.ker * out.ker.adjoint();
  ComplexMatrix p2 = out.ker_star * out.ker_star.adjoint();
  out.projector_gap = op_norm(p1 - p2);
  out.equal = out.projector_gap <= tol.scaled(tol.check, 1.0);
  return out;
}

}  // namespace opclass
