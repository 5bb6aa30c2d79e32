#pragma once

#include "slocc4/state.hpp"
#include "slocc4/types.hpp"

namespace slocc4 {

// T = (1/sqrt2) [[1,0,0,1],[0,i,i,0],[0,-1,1,0],[i,0,0,-i]]. Conjugation by T
// maps SU(2) x SU(2) onto SO(4) and SL(2,C) x SL(2,C) onto SO(4,C).
const Mat4& magic_T();

struct RMatrix {
  Mat4 entries;
  double source_norm2 = 0.0;  // squared norm of the originating state
};

// psi reshaped with rows 2*i1+i2 and columns 2*i3+i4, then R = T psi T^H.
RMatrix to_R(const PureState4& state);

// Exact inverse of to_R. A zero R gives the (invalid) zero state.
PureState4 from_R(const Mat4& r);

// [[0, R], [R^T, 0]]; complex symmetric.
Mat8 to_P(const Mat4& r);

// Complex orthogonal factors of a local operation: under
// (A1 x A2 x A3 x A4), R becomes O1 * R * O2 with
//   O1 = T (A1 x A2) T^H,  O2 = T (A3 x A4)^T T^H.
Mat4 left_factor(const Mat2& a1, const Mat2& a2);
Mat4 right_factor(const Mat2& a3, const Mat2& a4);

Mat4 kron(const Mat2& a, const Mat2& b);

}  // namespace slocc4
