#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slocc4/types.hpp"

namespace slocc4 {

// Pure state of four qubits. Basis label i1 i2 i3 i4 maps to index
// 8*i1 + 4*i2 + 2*i3 + i4, so qubit 0 is the most significant bit.
// Amplitudes need not be normalized; SLOCC does not preserve the norm.
class PureState4 {
 public:
  PureState4();
  explicit PureState4(const Vec16& amplitudes);

  // Sum of c * |bits> terms, bits given as a 4-character string like "0110".
  static PureState4 from_terms(std::initializer_list<std::pair<Complex, const char*>> terms);
  static PureState4 basis(int index);

  const Vec16& amplitudes() const { return amps_; }
  Complex operator[](int index) const { return amps_[index]; }

  double norm2() const { return amps_.squaredNorm(); }
  bool is_valid() const;
  bool is_normalized(double tol = 1e-12) const;

  // Throws InvalidInput for a zero or non-finite state.
  PureState4 normalized() const;

  PureState4 operator*(Complex s) const { return PureState4(amps_ * s); }
  PureState4 operator+(const PureState4& o) const { return PureState4(amps_ + o.amps_); }

 private:
  Vec16 amps_;
};

enum class OpKind { unitary, determinant_one, general_invertible };

// Ordered quadruple (A1, A2, A3, A4) of 2x2 matrices, one per qubit. The
// factories check the invariant that belongs to the requested kind.
class LocalOperation {
 public:
  using Ops = std::array<Mat2, 4>;

  static LocalOperation identity();
  static LocalOperation unitary(const Ops& ops, double tol = 1e-10);
  static LocalOperation determinant_one(const Ops& ops, double tol = 1e-10);
  static LocalOperation invertible(const Ops& ops);
  // Operator acting on a single qubit, identity elsewhere.
  static LocalOperation single(int qubit, const Mat2& op);

  const Ops& ops() const { return ops_; }
  const Mat2& operator[](int qubit) const { return ops_[qubit]; }
  OpKind kind() const { return kind_; }

  // (this ∘ other): apply `other` first.
  LocalOperation compose(const LocalOperation& other) const;

 private:
  LocalOperation(const Ops& ops, OpKind kind) : ops_(ops), kind_(kind) {}
  Ops ops_;
  OpKind kind_;
};

// Bijection on qubit positions; mapping[k] is the position that input qubit k
// occupies in the output.
class QubitPermutation {
 public:
  QubitPermutation();
  explicit QubitPermutation(const std::array<int, 4>& mapping);
  static QubitPermutation swap(int a, int b);
  static std::vector<QubitPermutation> all();

  int operator()(int qubit) const { return mapping_[qubit]; }
  const std::array<int, 4>& mapping() const { return mapping_; }
  QubitPermutation inverse() const;

 private:
  std::array<int, 4> mapping_;
};

struct DensityMatrix {
  MatX entries;
  std::vector<int> subsystem;  // retained qubits, ascending

  int dimension() const { return static_cast<int>(entries.rows()); }
  // Hermitian, positive semidefinite and positive trace within tol.
  bool is_valid(double tol = 1e-12) const;
};

// (A1 ⊗ A2 ⊗ A3 ⊗ A4)|psi>, not renormalized.
PureState4 apply_local(const PureState4& state, const LocalOperation& op);

// Applies a single 2x2 operator on one qubit.
PureState4 apply_on_qubit(const PureState4& state, int qubit, const Mat2& op);

PureState4 permute_qubits(const PureState4& state, const QubitPermutation& perm);

// Moves ops[k] to position perm(k), so that
// permute_qubits(apply_local(s, op), perm) == apply_local(permute_qubits(s, perm), permute_ops(op, perm)).
LocalOperation permute_ops(const LocalOperation& op, const QubitPermutation& perm);

// Partial trace keeping `keep` (qubit indices 0..3, any order; the result is
// ordered ascending). Expects a normalized state.
DensityMatrix reduced_density(const PureState4& state, std::vector<int> keep);

// ---- sampling ------------------------------------------------------------

enum class SampleKind { haar_state, su2, sl2_det1 };

// Deterministic random source. All randomness in the library flows through
// explicit seeds handed to a Sampler.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);
  // Independent stream for (seed, index); results do not depend on how a
  // batch of indices is split across workers.
  static Sampler stream(std::uint64_t seed, std::uint64_t index);

  double normal();
  double uniform();
  int uniform_int(int lo, int hi);  // inclusive
  Complex complex_normal();

  PureState4 haar_state();
  Mat2 su2();
  // Ginibre draw rescaled to det 1, rejected while cond > max_condition.
  Mat2 sl2(double max_condition = 10.0);
  LocalOperation local_unitary();
  LocalOperation local_sl2(double max_condition = 10.0);
  QubitPermutation permutation();
  // Haar-distributed k x n matrix with orthonormal rows (V V^H = I_k).
  MatX right_unitary(int rows, int cols);

 private:
  explicit Sampler(std::seed_seq& seq) : rng_(seq) {}
  std::mt19937_64 rng_;
};

using SampleResult = std::variant<PureState4, Mat2>;
SampleResult sample(SampleKind kind, std::uint64_t seed, double max_condition = 10.0);

std::string to_string(SampleKind kind);
SampleKind sample_kind_from_string(const std::string& name);

}  // namespace slocc4
