#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slocc4/spectral.hpp"
#include "slocc4/state.hpp"

namespace slocc4 {

using SqrtMatrix = Eigen::Matrix<Complex, 8, Eigen::Dynamic>;

struct MonotoneValue {
  int alpha;
  double value;
};

// |a^alpha + b^alpha + c^alpha + d^alpha|^(2/alpha) for the normalized state.
// Throws InvalidInput for alpha < 1.
MonotoneValue monotone_M(const PureState4& state, int alpha);
double monotone_from_quad(const std::array<Complex, 4>& quad, int alpha);

// Wootters concurrence of a two-qubit density matrix (any positive trace;
// the matrix is normalized first). Throws InvalidDensity for non-Hermitian
// or indefinite input.
double concurrence(const DensityMatrix& rho);

// Cayley hyperdeterminant; basis index 4*i1 + 2*i2 + i3.
Complex hyperdeterminant(const Vec8& psi);
// 4 |Hdet| of the normalized three-qubit state; 0 for the zero vector.
double three_tangle(const Vec8& psi);

// rho = M M^H for the three qubits left after tracing one out. The columns
// are the (unnormalized) branches <k|_traced |psi> of the normalized state.
struct SqrtDecomposition {
  SqrtMatrix sqrt_matrix;
  int traced_qubit = 0;
};

SqrtDecomposition square_root(const PureState4& state, int traced_qubit);

// Average sqrt(tau) over the pure-state decomposition given by the columns
// of M V: sum_j ||w_j||^2 sqrt(tau(w_j / ||w_j||)).
double witnessed_sqrt_tangle(const SqrtMatrix& m, const MatX& v);

struct TangleStatistics {
  double mean = 0.0;
  double stddev = 0.0;
  int samples = 0;
  double canonical = 0.0;  // value for the branch decomposition itself (V = I)
};

// Each sample draws a Haar k x n right-unitary V with n in {k, ..., k + 4}
// from its own stream (seed, index), so results do not depend on batching.
TangleStatistics sqrt_tangle_average(const SqrtDecomposition& dec, int samples,
                                     std::uint64_t seed);

struct GabcdTangleWitness {
  Complex beta;
  Complex q;
  Complex r;
  Eigen::Matrix<Complex, 2, 4> mixer;  // U, right-unitary
  SqrtMatrix sqrt_matrix;              // 8 x 2, qubit 1 traced out
  std::array<Vec8, 4> vectors;         // columns of sqrt_matrix * U
  std::array<double, 4> tangles{};
  int rank = 2;                        // rank of sqrt_matrix
};

// Decomposition of the qubit-1 reduction of G_abcd into four vectors with
// vanishing 3-tangle. beta solves 4 r beta^4 + 2 q beta^2 + 4 r = 0 (the
// inner root, |beta| <= 1), beta = 0 when r = 0.
GabcdTangleWitness gabcd_witness(Complex a, Complex b, Complex c, Complex d);

// beta = sqrt(-q + sqrt(q^2 - r)), kept for comparison with gabcd_witness.
Complex printed_beta(Complex a, Complex b, Complex c, Complex d);

struct ReportOptions {
  std::vector<int> alphas{1, 2, 3, 4, 6};
  int samples = 100;
  Tolerances tol{};
};

struct PairConcurrence {
  std::array<int, 2> kept;
  double value;
};

struct TracedTangle {
  int traced;
  TangleStatistics stats;
  // False when sampled mixings disagree, i.e. the average depends on the
  // decomposition and is only an estimate for one decomposition family.
  bool flat = false;
};

struct EntanglementReport {
  SpectralSignature signature;
  std::optional<SegreCharacteristic> segre;  // qubit pairing 12|34
  std::optional<FamilyLabel> family;
  std::string family_error;  // set when classification was ambiguous
  std::vector<MonotoneValue> monotones;
  std::vector<PairConcurrence> concurrences;  // 6 pairs, ascending
  std::vector<TracedTangle> tangles;          // traced qubit 0..3
};

EntanglementReport entanglement_report(const PureState4& state, std::uint64_t seed,
                                       const ReportOptions& options = {});

}  // namespace slocc4
