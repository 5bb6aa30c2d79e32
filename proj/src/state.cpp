#include "slocc4/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string_view>

namespace slocc4 {

namespace {

bool all_finite(const Vec16& v) {
  for (int i = 0; i < 16; ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  }
  return true;
}

bool all_finite(const Mat2& m) {
  for (int i = 0; i < 4; ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

int bit(int index, int qubit) { return (index >> (3 - qubit)) & 1; }

}  // namespace

PureState4::PureState4() : amps_(Vec16::Zero()) {}

PureState4::PureState4(const Vec16& amplitudes) : amps_(amplitudes) {
  if (!all_finite(amps_)) throw InvalidInput("state has non-finite amplitudes");
}

PureState4 PureState4::from_terms(std::initializer_list<std::pair<Complex, const char*>> terms) {
  Vec16 v = Vec16::Zero();
  for (const auto& [coeff, label] : terms) {
    std::string_view bits(label);
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string_view::npos) {
      throw InvalidInput("basis label must be four binary digits: " + std::string(bits));
    }
    int index = 0;
    for (char c : bits) index = 2 * index + (c - '0');
    v[index] += coeff;
  }
  return PureState4(v);
}

PureState4 PureState4::basis(int index) {
  if (index < 0 || index >= 16) throw InvalidInput("basis index out of range");
  Vec16 v = Vec16::Zero();
  v[index] = 1.0;
  return PureState4(v);
}

bool PureState4::is_valid() const { return norm2() > 0.0 && std::isfinite(norm2()); }

bool PureState4::is_normalized(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

PureState4 PureState4::normalized() const {
  const double n2 = norm2();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw InvalidInput("cannot normalize a zero state");
  return PureState4(amps_ / std::sqrt(n2));
}

// ---- LocalOperation ----------------------------------------------------------

LocalOperation LocalOperation::identity() {
  Ops ops;
  ops.fill(Mat2::Identity());
  return LocalOperation(ops, OpKind::unitary);
}

LocalOperation LocalOperation::unitary(const Ops& ops, double tol) {
  for (const auto& a : ops) {
    if (!all_finite(a)) throw InvalidInput("local operator has non-finite entries");
    if ((a * a.adjoint() - Mat2::Identity()).norm() > tol) {
      throw InvalidInput("local operator is not unitary");
    }
  }
  return LocalOperation(ops, OpKind::unitary);
}

LocalOperation LocalOperation::determinant_one(const Ops& ops, double tol) {
  for (const auto& a : ops) {
    if (!all_finite(a)) throw InvalidInput("local operator has non-finite entries");
    if (std::abs(a.determinant() - 1.0) > tol) {
      throw InvalidInput("local operator does not have determinant one");
    }
  }
  return LocalOperation(ops, OpKind::determinant_one);
}

LocalOperation LocalOperation::invertible(const Ops& ops) {
  for (const auto& a : ops) {
    if (!all_finite(a)) throw InvalidInput("local operator has non-finite entries");
    if (!(std::abs(a.determinant()) > 0.0)) throw InvalidInput("local operator is singular");
  }
  return LocalOperation(ops, OpKind::general_invertible);
}

LocalOperation LocalOperation::single(int qubit, const Mat2& op) {
  if (qubit < 0 || qubit > 3) throw InvalidInput("qubit index out of range");
  Ops ops;
  ops.fill(Mat2::Identity());
  ops[qubit] = op;
  return invertible(ops);
}

LocalOperation LocalOperation::compose(const LocalOperation& other) const {
  Ops out;
  for (int q = 0; q < 4; ++q) out[q] = ops_[q] * other.ops_[q];
  // The composite keeps the weaker of the two guarantees.
  const OpKind kind = std::max(kind_, other.kind_);
  return LocalOperation(out, kind);
}

// ---- QubitPermutation ------------------------------------------------------

QubitPermutation::QubitPermutation() : mapping_{0, 1, 2, 3} {}

QubitPermutation::QubitPermutation(const std::array<int, 4>& mapping) : mapping_(mapping) {
  std::array<bool, 4> seen{};
  for (int target : mapping_) {
    if (target < 0 || target > 3 || seen[target]) {
      throw InvalidInput("qubit permutation is not a bijection on {0,1,2,3}");
    }
    seen[target] = true;
  }
}

QubitPermutation QubitPermutation::swap(int a, int b) {
  std::array<int, 4> m{0, 1, 2, 3};
  std::swap(m.at(a), m.at(b));
  return QubitPermutation(m);
}

std::vector<QubitPermutation> QubitPermutation::all() {
  std::array<int, 4> m{0, 1, 2, 3};
  std::vector<QubitPermutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

QubitPermutation QubitPermutation::inverse() const {
  std::array<int, 4> inv{};
  for (int k = 0; k < 4; ++k) inv[mapping_[k]] = k;
  return QubitPermutation(inv);
}

// ---- actions -----------------------------------------------------------------

PureState4 apply_on_qubit(const PureState4& state, int qubit, const Mat2& op) {
  if (!all_finite(op)) throw InvalidInput("local operator has non-finite entries");
  const Vec16& in = state.amplitudes();
  Vec16 out = Vec16::Zero();
  const int stride = 1 << (3 - qubit);
  for (int i = 0; i < 16; ++i) {
    if (i & stride) continue;
    const Complex x0 = in[i];
    const Complex x1 = in[i | stride];
    out[i] = op(0, 0) * x0 + op(0, 1) * x1;
    out[i | stride] = op(1, 0) * x0 + op(1, 1) * x1;
  }
  return PureState4(out);
}

PureState4 apply_local(const PureState4& state, const LocalOperation& op) {
  PureState4 out = state;
  for (int q = 0; q < 4; ++q) out = apply_on_qubit(out, q, op[q]);
  return out;
}

PureState4 permute_qubits(const PureState4& state, const QubitPermutation& perm) {
  Vec16 out = Vec16::Zero();
  for (int i = 0; i < 16; ++i) {
    int j = 0;
    for (int k = 0; k < 4; ++k) {
      if (bit(i, k)) j |= 1 << (3 - perm(k));
    }
    out[j] = state[i];
  }
  return PureState4(out);
}

LocalOperation permute_ops(const LocalOperation& op, const QubitPermutation& perm) {
  LocalOperation::Ops ops;
  for (int k = 0; k < 4; ++k) ops[perm(k)] = op[k];
  switch (op.kind()) {
    case OpKind::unitary:
      return LocalOperation::unitary(ops, 1e-8);
    case OpKind::determinant_one:
      return LocalOperation::determinant_one(ops, 1e-8);
    default:
      return LocalOperation::invertible(ops);
  }
}

DensityMatrix reduced_density(const PureState4& state, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty() || keep.size() >= 4) {
    throw InvalidInput("reduced_density needs a nonempty proper subset of the qubits");
  }
  for (int q : keep) {
    if (q < 0 || q > 3) throw InvalidInput("qubit index out of range");
  }
  std::vector<int> traced;
  for (int q = 0; q < 4; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }

  const int nk = static_cast<int>(keep.size());
  const int dim = 1 << nk;
  const int nt = 1 << traced.size();
  // psi as a dim x nt matrix: rows = kept bits, columns = traced bits.
  MatX m(dim, nt);
  for (int i = 0; i < 16; ++i) {
    int row = 0;
    for (int q : keep) row = 2 * row + bit(i, q);
    int col = 0;
    for (int q : traced) col = 2 * col + bit(i, q);
    m(row, col) = state[i];
  }
  DensityMatrix rho;
  rho.entries = m * m.adjoint();
  rho.subsystem = keep;
  return rho;
}

bool DensityMatrix::is_valid(double tol) const {
  if (entries.rows() != entries.cols() || entries.rows() == 0) return false;
  if ((entries - entries.adjoint()).norm() > tol * std::max(1.0, entries.norm())) return false;
  const double tr = entries.trace().real();
  if (!(tr > 0.0)) return false;
  Eigen::SelfAdjointEigenSolver<MatX> es(entries, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol * std::max(1.0, tr);
}

}  // namespace slocc4
