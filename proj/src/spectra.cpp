#include "opclass/spectra.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace opclass {

namespace {

// Shortest round-trip decimal form; deterministic across runs.
std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<Cluster> cluster(const RealVector& ascending, double rel_gap) {
  if (rel_gap < 0) throw input_error("cluster: rel_gap must be nonnegative");
  std::vector<Cluster> out;
  const Eigen::Index n = ascending.size();
  if (n == 0) return out;
  for (Eigen::Index i = 1; i < n; ++i)
    if (ascending(i) < ascending(i - 1))
      throw input_error("cluster: values must be ascending");
  double scale = std::max(std::abs(ascending(0)), std::abs(ascending(n - 1)));
  double gap = rel_gap * scale;
  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo;
    while (hi + 1 < n && ascending(hi + 1) - ascending(hi) <= gap) ++hi;
    double sum = 0;
    for (Eigen::Index j = lo; j <= hi; ++j) sum += ascending(j);
    out.push_back({sum / static_cast<double>(hi - lo + 1),
                   static_cast<int>(hi - lo + 1)});
    lo = hi + 1;
  }
  return out;
}

RealVector singular_spectrum(const ComplexMatrix& t) {
  require_finite(t, "singular_spectrum");
  require_square(t, "singular_spectrum");
  if (t.rows() == 0) throw input_error("singular_spectrum: empty matrix");
  SvdParts s = svd(t);
  return s.singular.reverse();
}

double auto_lambda(const std::vector<Cluster>& clusters) {
  if (clusters.empty()) throw input_error("auto_lambda: no clusters");
  const Cluster* best = &clusters[0];
  for (const Cluster& c : clusters) {
    if (c.multiplicity > best->multiplicity ||
        (c.multiplicity == best->multiplicity && c.center < best->center))
      best = &c;
  }
  return best->center;
}

SpectrumDiagram make_diagram(const ComplexMatrix& t, std::optional<double> lambda,
                             double rel_gap) {
  SpectrumDiagram d;
  RealVector vals = singular_spectrum(t);
  d.values.assign(vals.data(), vals.data() + vals.size());
  d.clusters = cluster(vals, rel_gap);
  d.norm = vals(vals.size() - 1);
  d.min_mod = vals(0);
  double lam = lambda ? *lambda : auto_lambda(d.clusters);
  d.essential = lam;
  double match = rel_gap * std::max(d.norm, std::abs(lam));
  for (const Cluster& c : d.clusters) {
    if (c.center > lam + match)
      d.above.push_back(c.center);
    else if (c.center < lam - match)
      d.below.push_back(c.center);
  }
  std::sort(d.above.begin(), d.above.end(), std::greater<double>());
  std::sort(d.below.begin(), d.below.end());
  return d;
}

std::string diagram_emit_json(const SpectrumDiagram& d);  // in io.cpp

std::string diagram_emit(const SpectrumDiagram& d, DiagramFormat format) {
  if (format == DiagramFormat::json) return diagram_emit_json(d);

  auto region_of = [&](const Cluster& c) -> int {
    // -1 below, 0 essential, 1 above; read back from the stored lists so the
    // emitted regions always agree with the diagram fields.
    for (double v : d.above)
      if (v == c.center) return 1;
    for (double v : d.below)
      if (v == c.center) return -1;
    return 0;
  };

  std::ostringstream os;
  if (format == DiagramFormat::csv) {
    os << "value,multiplicity,region\n";
    for (const Cluster& c : d.clusters) {
      int r = region_of(c);
      os << fmt_double(c.center) << ',' << c.multiplicity << ','
         << (r < 0 ? "below" : r > 0 ? "above" : "essential") << '\n';
    }
    return os.str();
  }

  // text: ascending clusters; beta_j counts up from the bottom, alpha_i
  // counts down toward lambda so alpha_1 is the norm cluster.
  int n_above = static_cast<int>(d.above.size());
  int beta_idx = 1;
  int alpha_idx = n_above;
  for (const Cluster& c : d.clusters) {
    int r = region_of(c);
    if (r < 0)
      os << "beta_" << beta_idx++;
    else if (r > 0)
      os << "alpha_" << alpha_idx--;
    else
      os << "lambda";
    os << ' ' << fmt_double(c.center) << " x" << c.multiplicity << '\n';
  }
  return os.str();
}

namespace {

bool nearly_hermitian(const ComplexMatrix& m) {
  double scale = std::max(m.norm(), 1.0);
  return (m - m.adjoint()).norm() <= 1e-10 * scale;
}

}  // namespace

EssentialCandidate essential_candidate(const std::vector<ComplexMatrix>& family,
                                       double rel_gap) {
  if (family.size() < 3)
    throw input_error("essential_candidate: need at least three truncation sizes");
  for (size_t i = 0; i < family.size(); ++i) {
    require_finite(family[i], "essential_candidate");
    require_square(family[i], "essential_candidate");
    if (i > 0 && family[i].rows() <= family[i - 1].rows())
      throw input_error("essential_candidate: sizes must be strictly increasing");
  }

  EssentialCandidate out;
  out.hermitian_mode = true;
  for (const ComplexMatrix& m : family)
    if (!nearly_hermitian(m)) out.hermitian_mode = false;

  Tolerances tol;
  for (const ComplexMatrix& m : family) {
    RealVector vals;
    if (out.hermitian_mode) {
      vals = herm_eig(0.5 * (m + m.adjoint()), tol).values;
    } else {
      vals = singular_spectrum(m);
    }
    out.per_size.push_back({static_cast<int>(m.rows()), cluster(vals, rel_gap)});
  }

  const SizeClusters& ref = out.per_size.back();
  const size_t nsizes = out.per_size.size();
  for (const Cluster& rc : ref.clusters) {
    ClusterTrack tr;
    tr.center = rc.center;
    for (size_t s = 0; s < nsizes; ++s) {
      const auto& cl = out.per_size[s].clusters;
      int best = 0;
      double bestd = std::numeric_limits<double>::infinity();
      for (size_t j = 0; j < cl.size(); ++j) {
        double dd = std::abs(cl[j].center - rc.center);
        if (dd < bestd) {
          bestd = dd;
          best = static_cast<int>(j);
        }
      }
      tr.mults.push_back(cl[best].multiplicity);
    }
    // least-squares slope of multiplicity against size
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t s = 0; s < nsizes; ++s) {
      double x = out.per_size[s].size, y = tr.mults[s];
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double denom = nsizes * sxx - sx * sx;
    tr.slope = denom > 0 ? (nsizes * sxy - sx * sy) / denom : 0.0;
    tr.growing = tr.slope > 0 && tr.mults.back() > tr.mults.front();
    out.tracks.push_back(tr);
  }

  int n_growing = 0;
  const ClusterTrack* pick = nullptr;
  for (const ClusterTrack& tr : out.tracks) {
    if (tr.growing) {
      ++n_growing;
      if (!pick || tr.slope > pick->slope) pick = &tr;
    }
  }
  out.singleton = n_growing == 1;
  if (pick) {
    out.lambda = pick->center;
  } else {
    // no growth anywhere: fall back to the heaviest cluster at the top size
    out.lambda = auto_lambda(ref.clusters);
  }
  return out;
}

}  // namespace opclass
