#pragma once

#include <array>
#include <limits>
#include <vector>

#include "slocc4/types.hpp"

namespace slocc4 {

// Monic characteristic polynomial x^4 + c[3] x^3 + c[2] x^2 + c[1] x + c[0].
std::array<Complex, 4> charpoly4(const Mat4& m);

// Eigenvalues of a 4x4 complex matrix: companion-matrix QR on the
// characteristic polynomial, then Newton polishing (kept only when it lowers
// the residual).
std::array<Complex, 4> eig4(const Mat4& m);

// Ferrari's closed form for the roots of the monic quartic above. Used as an
// independent cross-check of eig4.
std::array<Complex, 4> quartic_roots_closed_form(const std::array<Complex, 4>& c);

// Number of singular values above tol * sigma_max; 0 for the zero matrix.
int rank_tol(const MatX& m, double tol);

enum class Herm2Fn { sqrt, invsqrt };

// Spectral function of a 2x2 Hermitian matrix in closed form. invsqrt throws
// SingularFilter when an eigenvalue is not above `floor`.
Mat2 herm2_fn(const Mat2& h, Herm2Fn fn, double floor = 1e-12);

struct RealSvd {
  RealMat4 O1;
  Eigen::Vector4d sigma;  // decreasing |sigma|; sigma[3] may be negative
  RealMat4 O2;
  bool degenerate = false;
};

// M = O1 * diag(sigma) * O2 with O1, O2 in SO(4).
RealSvd real_svd_so4(const RealMat4& m);

struct Staircase {
  std::vector<int> dims;  // dims[k] = dim ker(A^k), dims[0] = 0
  // Smallest ratio between a singular value and the kernel threshold over
  // all decisions taken (>= 1; large means a clear-cut rank decision).
  double margin = std::numeric_limits<double>::infinity();

  int multiplicity() const { return dims.back(); }
  // Jordan block sizes of A at 0, largest first. Empty when the increments
  // are not non-increasing (no consistent Jordan structure).
  std::vector<int> block_sizes() const;
};

// Dimensions of ker(A^k) for k = 1, 2, ... via nested null spaces
// (x in ker A^k iff (I - N N^H) A x = 0, N a basis of ker A^(k-1)).
// A singular value counts as zero when <= threshold.
Staircase null_space_staircase(const MatX& a, double threshold);

}  // namespace slocc4
