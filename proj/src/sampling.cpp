#include <cmath>

#include "slocc4/state.hpp"

namespace slocc4 {

namespace {

std::seed_seq make_seq(std::uint64_t seed, std::uint64_t index, bool with_index) {
  const auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); };
  const auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  if (with_index) return std::seed_seq{lo(seed), hi(seed), lo(index), hi(index), 0x5eedu};
  return std::seed_seq{lo(seed), hi(seed)};
}

double condition_number(const Mat2& m) {
  Eigen::JacobiSVD<Mat2> svd(m);
  const auto& s = svd.singularValues();
  return s[1] > 0.0 ? s[0] / s[1] : INFINITY;
}

}  // namespace

Sampler::Sampler(std::uint64_t seed) {
  auto seq = make_seq(seed, 0, false);
  rng_.seed(seq);
}

Sampler Sampler::stream(std::uint64_t seed, std::uint64_t index) {
  auto seq = make_seq(seed, index, true);
  return Sampler(seq);
}

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

double Sampler::uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Complex Sampler::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

PureState4 Sampler::haar_state() {
  Vec16 v;
  for (int i = 0; i < 16; ++i) v[i] = complex_normal();
  return PureState4(v).normalized();
}

MatX Sampler::right_unitary(int rows, int cols) {
  if (rows < 1 || cols < rows) throw InvalidInput("right_unitary needs 1 <= rows <= cols");
  MatX g(cols, cols);
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < cols; ++j) g(i, j) = complex_normal();
  }
  Eigen::HouseholderQR<MatX> qr(g);
  MatX q = qr.householderQ();
  const MatX r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so that Q is Haar distributed.
  for (int j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q.topRows(rows).eval();
}

Mat2 Sampler::su2() {
  MatX u = right_unitary(2, 2);
  Mat2 m = u;
  const Complex det = m.determinant();
  return m / std::sqrt(det);
}

Mat2 Sampler::sl2(double max_condition) {
  if (!(max_condition >= 1.0)) throw InvalidInput("condition bound must be >= 1");
  for (;;) {
    Mat2 g;
    g << complex_normal(), complex_normal(), complex_normal(), complex_normal();
    const Complex det = g.determinant();
    if (std::abs(det) < 1e-12) continue;
    g /= std::sqrt(det);
    if (condition_number(g) <= max_condition) return g;
  }
}

LocalOperation Sampler::local_unitary() {
  LocalOperation::Ops ops;
  for (auto& a : ops) a = su2();
  return LocalOperation::unitary(ops);
}

LocalOperation Sampler::local_sl2(double max_condition) {
  LocalOperation::Ops ops;
  for (auto& a : ops) a = sl2(max_condition);
  return LocalOperation::determinant_one(ops, 1e-9);
}

QubitPermutation Sampler::permutation() {
  std::array<int, 4> m{0, 1, 2, 3};
  for (int i = 3; i > 0; --i) std::swap(m[i], m[uniform_int(0, i)]);
  return QubitPermutation(m);
}

SampleResult sample(SampleKind kind, std::uint64_t seed, double max_condition) {
  Sampler s(seed);
  switch (kind) {
    case SampleKind::haar_state:
      return s.haar_state();
    case SampleKind::su2:
      return s.su2();
    case SampleKind::sl2_det1:
      return s.sl2(max_condition);
  }
  throw InvalidInput("unknown sample kind");
}

std::string to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::haar_state:
      return "haar_state";
    case SampleKind::su2:
      return "su2";
    case SampleKind::sl2_det1:
      return "sl2_det1";
  }
  return "unknown";
}

SampleKind sample_kind_from_string(const std::string& name) {
  if (name == "haar_state") return SampleKind::haar_state;
  if (name == "su2") return SampleKind::su2;
  if (name == "sl2_det1") return SampleKind::sl2_det1;
  throw InvalidInput("unknown sample kind: " + name);
}

}  // namespace slocc4
