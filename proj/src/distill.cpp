#include "slocc4/distill.hpp"

#include <algorithm>
#include <cmath>

#include "slocc4/matrix.hpp"

namespace slocc4 {

std::string_view to_string(DistillStatus s) {
  switch (s) {
    case DistillStatus::converged: return "converged";
    case DistillStatus::diverging: return "diverging";
    case DistillStatus::max_iterations: return "max-iterations";
  }
  return "unknown";
}

double local_deviation(const PureState4& state) {
  double dev = 0.0;
  for (int q = 0; q < 4; ++q) {
    const MatX rho = reduced_density(state, {q}).entries;
    dev = std::max(dev, (2.0 * rho - MatX::Identity(2, 2)).norm());
  }
  return dev;
}

DistillStep distill_step(const PureState4& state, int qubit, double floor) {
  if (qubit < 0 || qubit > 3) throw InvalidInput("qubit index out of range");
  const Mat2 two_rho = 2.0 * Mat2(reduced_density(state, {qubit}).entries);
  const Mat2 inv = herm2_fn(two_rho, Herm2Fn::invsqrt, floor);
  const double det = two_rho.determinant().real();
  Mat2 filter = std::pow(det, 0.25) * inv;
  const PureState4 filtered = apply_on_qubit(state, qubit, filter);
  const double p = filtered.norm2();
  return {filtered.normalized(), filter, p};
}

DistillationResult distill(const PureState4& state, const DistillOptions& options) {
  if (options.max_iter < 1) throw InvalidInput("max_iter must be at least 1");
  const PureState4 input = state.normalized();

  LocalOperation::Ops acc;
  acc.fill(Mat2::Identity());
  PureState4 current = input;
  DistillationResult out{input, LocalOperation::identity(), 1.0, 0, DistillStatus::max_iterations,
                         0.0, {}};
  double p = 1.0;

  auto finish = [&](DistillStatus status) {
    out.status = status;
    out.filters = LocalOperation::determinant_one(acc, 1e-8);
    out.success_probability = p;
    out.final_state = current;
    out.deviation = local_deviation(current);
    return out;
  };

  for (int sweep = 0;; ++sweep) {
    out.iterations = sweep;
    if (local_deviation(current) < options.tol) return finish(DistillStatus::converged);
    if (sweep == options.max_iter) return finish(DistillStatus::max_iterations);
    for (int q = 0; q < 4; ++q) {
      DistillStep step;
      try {
        step = distill_step(current, q);
      } catch (const SingularFilter&) {
        // A pure single-qubit reduction: only a vanishing-probability branch
        // can make it maximally mixed.
        out.note = "single-qubit reduction of qubit " + std::to_string(q + 1) + " is pure";
        p = 0.0;
        return finish(DistillStatus::diverging);
      }
      Mat2 next = step.filter * acc[q];
      next /= std::sqrt(next.determinant());
      acc[q] = next;
      p *= step.probability;
      current = step.state;
      if (p < options.floor) {
        out.iterations = sweep + 1;
        return finish(DistillStatus::diverging);
      }
    }
  }
}

}  // namespace slocc4
