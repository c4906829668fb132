#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opclass/linalg.hpp"

namespace opclass {

struct Cluster {
  double center = 0;     // mean of the clustered values
  int multiplicity = 0;
};

// Greedy single-linkage grouping of sorted values: adjacent values merge
// while the gap is at most rel_gap * (largest absolute value).
std::vector<Cluster> cluster(const RealVector& ascending, double rel_gap);

// Spectrum of |T| (the singular values), ascending.
RealVector singular_spectrum(const ComplexMatrix& t);

// Default relative gaps: exact spectra vs truncation families.
inline constexpr double kExactGap = 1e-8;
inline constexpr double kFamilyGap = 1e-3;

// Rule shared with the block decomposition: the cluster of largest
// multiplicity, ties resolved toward the smallest center.
double auto_lambda(const std::vector<Cluster>& clusters);

struct SpectrumDiagram {
  std::vector<double> values;        // ascending spectrum of |T|
  std::vector<Cluster> clusters;
  std::optional<double> essential;   // the lambda the diagram is split at
  std::vector<double> above;         // alpha_i, descending (alpha_1 = ||T||)
  std::vector<double> below;         // beta_j, ascending (beta_1 = min modulus)
  double norm = 0;
  double min_mod = 0;
};

SpectrumDiagram make_diagram(const ComplexMatrix& t,
                             std::optional<double> lambda = std::nullopt,
                             double rel_gap = kExactGap);

enum class DiagramFormat { text, csv, json };

// text: one line per cluster, ascending, labeled beta_j / lambda / alpha_i
//       (alpha_1 is the largest cluster).
// csv:  header "value,multiplicity,region"; region in {below, essential,
//       above}; shortest round-trip float formatting, so output is
//       byte-stable across runs.
// json: lossless mirror of the type (implemented with the other JSON
//       serializers in the io unit).
std::string diagram_emit(const SpectrumDiagram& d, DiagramFormat format);

struct SizeClusters {
  int size = 0;
  std::vector<Cluster> clusters;
};

// One reference cluster at the largest size, matched by nearest center to a
// cluster at every smaller size.
struct ClusterTrack {
  double center = 0;
  std::vector<int> mults;  // one entry per family member, ascending sizes
  double slope = 0;        // least-squares slope of multiplicity vs size
  bool growing = false;
};

struct EssentialCandidate {
  double lambda = 0;     // center of the strongest growing track
  bool singleton = false;  // exactly one growing track
  bool hermitian_mode = false;
  std::vector<SizeClusters> per_size;
  std::vector<ClusterTrack> tracks;
};

// Finite surrogate for the essential spectrum along a truncation family of
// strictly increasing sizes (at least three).  Uses signed eigenvalues when
// every member is Hermitian (so two-sided accumulation is visible) and the
// spectrum of |T| otherwise.
EssentialCandidate essential_candidate(const std::vector<ComplexMatrix>& family,
                                       double rel_gap = kFamilyGap);

}  // namespace opclass
