#pragma once

#include <string_view>

#include "slocc4/state.hpp"

namespace slocc4 {

// Which quantity fixed the global phase. Only the first two are invariant
// under local unitaries; the others are fallbacks for states where both
// traces vanish.
enum class PhaseGauge { trace_rrt, trace_rrt_rrh, entry_11, largest_entry };

std::string_view to_string(PhaseGauge g);

struct LUNormalForm {
  Mat4 normal_R;          // Re part diagonal with decreasing |sigma|
  Complex phase;          // unit modulus
  RealMat4 left;          // normal_R = left * (phase * R) * right
  RealMat4 right;
  Eigen::Vector4d sigma;  // diagonal of Re(normal_R)
  bool degenerate = false;
  PhaseGauge gauge = PhaseGauge::trace_rrt;
};

// Local-unitary normal form of the normalized state: fix the global phase,
// then diagonalize Re(phase * R) with SO(4) x SO(4) and pick a canonical
// sign pattern.
LUNormalForm lu_normal_form(const PureState4& state);

struct LUComparison {
  bool equivalent = false;
  double residual = 0.0;  // best Frobenius distance between normal forms
};

// Compares normal forms, minimizing over the residual sign freedom and over
// reorderings inside degenerate singular-value groups.
LUComparison lu_equivalent(const PureState4& s1, const PureState4& s2, double tol = 1e-8);

}  // namespace slocc4
