#include <cmath>

#include "slocc4/magic.hpp"
#include "slocc4/matrix.hpp"
#include "test_support.hpp"

using namespace slocc4;
using namespace slocc4::test;

TEST_SUITE("magic") {

TEST_CASE("T is unitary") {
  const Mat4& t = magic_T();
  CHECK((t * t.adjoint() - Mat4::Identity()).norm() < 1e-15);
}

TEST_CASE("to_R examples against the direct summation oracle") {
  const double h = 0.5;
  Mat4 want = Mat4::Zero();
  want(0, 0) = h;
  want(0, 3) = Complex(0, -h);
  want(3, 0) = Complex(0, h);
  want(3, 3) = h;
  const RMatrix r0 = to_R(PureState4::basis(0));
  CHECK((r0.entries - want).norm() < 1e-15);
  CHECK((r0.entries - oracle::magic_R(vec(PureState4::basis(0)))).norm() < 1e-15);

  Mat4 g = Mat4::Zero();
  g(0, 0) = g(3, 3) = M_SQRT1_2;
  CHECK((to_R(ghz4()).entries - g).norm() < 1e-15);

  for (int t = 0; t < 20; ++t) {
    const PureState4 psi = Sampler::stream(31, t).haar_state();
    CHECK((to_R(psi).entries - oracle::magic_R(vec(psi))).norm() < 1e-14);
  }
}

TEST_CASE("to_R is linear and norm preserving") {
  Sampler s(32);
  const PureState4 psi = s.haar_state(), phi = s.haar_state();
  const Complex a = s.complex_normal(), b = s.complex_normal();
  const Mat4 lhs = to_R(psi * a + phi * b).entries;
  const Mat4 rhs = a * to_R(psi).entries + b * to_R(phi).entries;
  CHECK((lhs - rhs).norm() < 1e-14);
  for (int t = 0; t < 20; ++t) {
    const PureState4 x = apply_local(Sampler::stream(33, t).haar_state(), Sampler::stream(34, t).local_sl2());
    const RMatrix r = to_R(x);
    CHECK(std::abs(r.entries.squaredNorm() - x.norm2()) < 1e-12 * x.norm2());
    CHECK(r.source_norm2 == x.norm2());
  }
}

TEST_CASE("from_R inverts to_R") {
  for (int t = 0; t < 100; ++t) {
    const PureState4 psi = Sampler::stream(35, t).haar_state();
    CHECK(max_abs_diff(from_R(to_R(psi).entries), psi) < 1e-13);
  }
  Mat4 g = Mat4::Zero();
  g(0, 0) = g(3, 3) = M_SQRT1_2;
  CHECK(max_abs_diff(from_R(g), ghz4()) < 1e-15);
  CHECK(from_R(Mat4::Zero()).norm2() == 0.0);
  CHECK_THROWS_AS(from_R(Mat4::Zero()).normalized(), InvalidInput);
}

TEST_CASE("to_P examples") {
  const Mat8 p = to_P(Mat4::Identity());
  CHECK((p * p - Mat8::Identity()).norm() < 1e-15);
  CHECK(to_P(Mat4::Zero()).norm() == 0.0);
  const Mat8 q = to_P(to_R(Sampler(36).haar_state()).entries);
  CHECK((q - q.transpose()).norm() == 0.0);
}

TEST_CASE("eigenvalues of P are plus and minus square roots of those of R R^T") {
  for (int t = 0; t < 20; ++t) {
    const Mat4 r = to_R(Sampler::stream(37, t).haar_state()).entries;
    const Mat8 p = to_P(r);
    // P^2 = diag(R R^T, R^T R)
    const Mat8 p2 = p * p;
    CHECK((p2.topLeftCorner<4, 4>() - r * r.transpose()).norm() < 1e-14);
    CHECK((p2.bottomRightCorner<4, 4>() - r.transpose() * r).norm() < 1e-14);
    CHECK(p2.topRightCorner<4, 4>().norm() == 0.0);
    Eigen::ComplexEigenSolver<Mat8> es(p);
    const auto rrt = eig4(r * r.transpose());
    for (int k = 0; k < 8; ++k) {
      const Complex l = es.eigenvalues()[k];
      double best = 1e9;
      for (const Complex& s : rrt) best = std::min(best, std::abs(l * l - s));
      CHECK(best < 1e-10);
    }
  }
}

TEST_CASE("local special unitaries become SO(4)") {
  for (int t = 0; t < 50; ++t) {
    Sampler s = Sampler::stream(38, t);
    const Mat4 o = left_factor(s.su2(), s.su2());
    CHECK(o.imag().norm() < 1e-10);
    CHECK((o.real().transpose() * o.real() - RealMat4::Identity()).norm() < 1e-10);
    CHECK(o.real().determinant() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("SL(2) x SL(2) becomes SO(4, C)") {
  for (int t = 0; t < 50; ++t) {
    Sampler s = Sampler::stream(39, t);
    const Mat4 o = left_factor(s.sl2(), s.sl2());
    CHECK((o.transpose() * o - Mat4::Identity()).norm() < 1e-9);
  }
}

TEST_CASE("det-1 local operations act on R as O1 R O2") {
  for (int t = 0; t < 50; ++t) {
    Sampler s = Sampler::stream(40, t);
    const PureState4 psi = s.haar_state();
    const LocalOperation op = s.local_sl2();
    const Mat4 o1 = magic_T() * oracle::Mat(kron(op[0], op[1])) * magic_T().adjoint();
    const Mat4 o2 = magic_T() * oracle::Mat(kron(op[2], op[3])).transpose() * magic_T().adjoint();
    CHECK((o1 - left_factor(op[0], op[1])).norm() < 1e-12);
    CHECK((o2 - right_factor(op[2], op[3])).norm() < 1e-12);
    const Mat4 lhs = to_R(apply_local(psi, op)).entries;
    CHECK((lhs - o1 * to_R(psi).entries * o2).norm() < 1e-9);
    CHECK((o2 * o2.transpose() - Mat4::Identity()).norm() < 1e-9);
  }
}

}
