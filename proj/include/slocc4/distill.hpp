#pragma once

#include <string>
#include <string_view>

#include "slocc4/state.hpp"

namespace slocc4 {

struct DistillStep {
  PureState4 state;  // normalized filtered state
  Mat2 filter;       // det 1
  double probability = 1.0;  // ||F psi||^2 for normalized psi
};

// One local filter F = det(2 rho_q)^(1/4) (2 rho_q)^(-1/2) on qubit q, after
// which rho_q = I/2. Throws SingularFilter when rho_q is numerically rank 1.
DistillStep distill_step(const PureState4& state, int qubit, double floor = 1e-12);

enum class DistillStatus { converged, diverging, max_iterations };

std::string_view to_string(DistillStatus s);

struct DistillOptions {
  int max_iter = 1000;   // full sweeps over the four qubits
  double tol = 1e-10;    // max_q ||2 rho_q - I||_F
  double floor = 1e-8;   // success probability below which the run diverges
};

struct DistillationResult {
  PureState4 final_state;       // normalized
  LocalOperation filters;       // accumulated, det 1 per qubit
  double success_probability = 1.0;
  int iterations = 0;           // completed sweeps
  DistillStatus status = DistillStatus::converged;
  double deviation = 0.0;       // max_q ||2 rho_q - I||_F of final_state
  std::string note;             // set when a singular reduction stopped the run
};

// Cyclic filtering towards the locally stochastic normal form (every
// single-qubit reduction equal to I/2).
DistillationResult distill(const PureState4& state, const DistillOptions& options = {});

// max_q ||2 rho_q - I||_F for a normalized state.
double local_deviation(const PureState4& state);

}  // namespace slocc4
