#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "slocc4/families.hpp"
#include "slocc4/state.hpp"

namespace slocc4 {

struct Tolerances {
  double cluster = 1e-6;  // eigenvalue merge radius, relative to 1 + max|s|
  double rank = 1e-8;     // singular values <= rank * sigma_max(P) count as zero
};

struct SpectralSignature {
  // Principal square roots of the eigenvalues of R R^T (Re >= 0, ties
  // Im >= 0), ordered by decreasing modulus, then real part, then imaginary
  // part. Exact zeros and exact cluster means are substituted when the
  // Jordan analysis identifies them.
  std::array<Complex, 4> quad{};
  std::array<Complex, 4> rrt_eigenvalues{};  // quad[k]^2
  std::array<Complex, 4> raw_eigenvalues{};  // as returned by eig4
  bool refined = false;  // false when the Jordan analysis was ambiguous
  double norm2 = 0.0;    // squared norm of the source state
  Complex det_R;         // det R, an invariant of det-1 SLOCC
};

struct SegreCluster {
  Complex eigenvalue;            // eigenvalue of P
  std::vector<int> block_sizes;  // Jordan blocks of P at this eigenvalue
};

struct SegreCharacteristic {
  // Zero cluster first (when present), then +lambda / -lambda pairs in
  // signature order.
  std::vector<SegreCluster> clusters;
  std::vector<int> zero_blocks;
  // The +lambda member of each nonzero pair, lambda in signature convention.
  std::vector<SegreCluster> nonzero;
  // (rank R R^T, rank R^T R) minus the nonzero multiplicity: distinguishes
  // symmetric from asymmetric nilpotent parts.
  std::pair<int, int> nilpotent_ranks{0, 0};
  // >= 1; closest rank decision relative to the rank threshold.
  double rank_margin = 0.0;
  // Ratio of the smallest distance between accepted clusters to the merge
  // radius (infinite for a single cluster).
  double cluster_margin = 0.0;
};

struct ClassificationDiagnostics {
  // Label each qubit pairing (12|34, 13|24, 14|23) maps to.
  std::array<std::string, 3> pairing_labels;
  int chosen_pairing = 0;
  std::vector<std::string> collapse_rules;
  double rank_margin = 0.0;
  double cluster_margin = 0.0;
};

struct FamilyLabel {
  Family family;
  std::vector<Complex> params;
  ClassificationDiagnostics diagnostics;
};

// Uses the amplitudes as given (no normalization), so that the quad is
// invariant under determinant-one local operations.
SpectralSignature signature(const PureState4& state, const Tolerances& tol = {});

// Segre characteristic of P for the normalized state. Throws
// AmbiguousClassification when no consistent clustering exists or when the
// structure changes between tol and 2*tol.
SegreCharacteristic segre(const PureState4& state, const Tolerances& tol = {});

// One of the nine families. Evaluates the three qubit pairings and keeps the
// most specific label, so the result is invariant under qubit permutations.
// Throws InvalidInput for a (numerically) zero state and
// AmbiguousClassification when the structure cannot be resolved.
FamilyLabel classify(const PureState4& state, const Tolerances& tol = {});

// Family for a single pairing's Segre data, with the collapse rules applied.
// Throws AmbiguousClassification for structures outside the nine families.
FamilyLabel family_from_segre(const SegreCharacteristic& segre);

}  // namespace slocc4
