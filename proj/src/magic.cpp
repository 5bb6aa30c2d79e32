#include "slocc4/magic.hpp"

#include <cmath>

namespace slocc4 {

namespace {

Mat4 make_T() {
  Mat4 t;
  // clang-format off
  t << 1.0, 0.0, 0.0, 1.0,
       0.0, kI,  kI,  0.0,
       0.0, -1.0, 1.0, 0.0,
       kI,  0.0, 0.0, -kI;
  // clang-format on
  return t * M_SQRT1_2;
}

Mat4 reshape(const Vec16& v) {
  Mat4 m;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) m(row, col) = v[4 * row + col];
  }
  return m;
}

}  // namespace

const Mat4& magic_T() {
  static const Mat4 t = make_T();
  return t;
}

RMatrix to_R(const PureState4& state) {
  const Mat4& t = magic_T();
  return {t * reshape(state.amplitudes()) * t.adjoint(), state.norm2()};
}

PureState4 from_R(const Mat4& r) {
  const Mat4& t = magic_T();
  const Mat4 psi = t.adjoint() * r * t;
  Vec16 v;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) v[4 * row + col] = psi(row, col);
  }
  return PureState4(v);
}

Mat8 to_P(const Mat4& r) {
  Mat8 p = Mat8::Zero();
  p.topRightCorner<4, 4>() = r;
  p.bottomLeftCorner<4, 4>() = r.transpose();
  return p;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

Mat4 left_factor(const Mat2& a1, const Mat2& a2) {
  const Mat4& t = magic_T();
  return t * kron(a1, a2) * t.adjoint();
}

Mat4 right_factor(const Mat2& a3, const Mat2& a4) {
  const Mat4& t = magic_T();
  return t * kron(a3, a4).transpose() * t.adjoint();
}

}  // namespace slocc4
