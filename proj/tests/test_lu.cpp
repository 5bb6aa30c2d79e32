#include <cmath>

#include "slocc4/lu_normal_form.hpp"
#include "slocc4/magic.hpp"
#include "slocc4/spectral.hpp"
#include "test_support.hpp"

using namespace slocc4;
using namespace slocc4::test;

TEST_SUITE("lu") {

TEST_CASE("GHZ4 normal form is the real diagonal R") {
  const LUNormalForm nf = lu_normal_form(ghz4());
  Mat4 want = Mat4::Zero();
  want(0, 0) = want(1, 1) = M_SQRT1_2;
  CHECK((nf.normal_R - want).norm() < 1e-12);
  CHECK(nf.degenerate);
}

TEST_CASE("normal form structure") {
  for (int t = 0; t < 50; ++t) {
    Sampler s = Sampler::stream(61, t);
    const PureState4 psi = s.haar_state();
    const LUNormalForm nf = lu_normal_form(psi);
    const Mat4 r = to_R(psi).entries;
    CHECK(std::abs(std::abs(nf.phase) - 1.0) < 1e-14);
    RealMat4 re = nf.normal_R.real();
    for (int k = 0; k < 4; ++k) CHECK(std::abs(re(k, k) - nf.sigma[k]) < 1e-12);
    re.diagonal().setZero();
    CHECK(re.norm() < 1e-9 * r.norm());
    CHECK((nf.left.cast<Complex>() * (nf.phase * r) * nf.right.cast<Complex>() - nf.normal_R).norm() < 1e-9);
    CHECK(nf.left.determinant() == doctest::Approx(1.0));
    CHECK(nf.right.determinant() == doctest::Approx(1.0));
    CHECK(nf.gauge == PhaseGauge::trace_rrt);
    // the gauge makes tr(normal_R normal_R^T) real positive
    const Complex tr = (nf.normal_R * nf.normal_R.transpose()).trace();
    CHECK(std::abs(tr.imag()) < 1e-12);
    CHECK(tr.real() > 0.0);
  }
}

TEST_CASE("global phase does not change the normal form") {
  for (int t = 0; t < 50; ++t) {
    Sampler s = Sampler::stream(62, t);
    const PureState4 psi = s.haar_state();
    const PureState4 phi = psi * std::polar(1.0, 2.0 * M_PI * s.uniform());
    CHECK((lu_normal_form(psi).normal_R - lu_normal_form(phi).normal_R).norm() < 1e-10);
  }
}

TEST_CASE("local unitaries do not change the normal form") {
  for (int t = 0; t < 100; ++t) {
    Sampler s = Sampler::stream(63, t);
    const PureState4 psi = s.haar_state();
    const auto a = lu_normal_form(psi);
    const auto b = lu_normal_form(apply_local(psi, s.local_unitary()));
    REQUIRE_FALSE(a.degenerate);
    CHECK((a.normal_R - b.normal_R).norm() < 1e-8);
  }
}

TEST_CASE("lu_equivalent examples and relation properties") {
  Sampler s(64);
  std::vector<PureState4> pop;
  for (int t = 0; t < 8; ++t) pop.push_back(s.haar_state());
  pop.push_back(apply_local(pop[0], s.local_unitary()));
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const auto self = lu_equivalent(pop[i], pop[i]);
    CHECK(self.equivalent);
    CHECK(self.residual < 1e-12);
    for (std::size_t j = 0; j < pop.size(); ++j) {
      CHECK(lu_equivalent(pop[i], pop[j]).equivalent == lu_equivalent(pop[j], pop[i]).equivalent);
    }
  }
  CHECK(lu_equivalent(pop[0], pop.back()).equivalent);
  CHECK_FALSE(lu_equivalent(ghz4(), w4()).equivalent);
}

TEST_CASE("lu_equivalent on LU pairs") {
  for (int t = 0; t < 100; ++t) {
    Sampler s = Sampler::stream(65, t);
    const PureState4 psi = s.haar_state();
    CHECK(lu_equivalent(psi, apply_local(psi, s.local_unitary())).equivalent);
  }
}

TEST_CASE("degenerate spectra are compared over reorderings") {
  // GHZ4 under a local unitary: degenerate sigma, still equivalent.
  for (int t = 0; t < 20; ++t) {
    Sampler s = Sampler::stream(66, t);
    const PureState4 phi = apply_local(ghz4(), s.local_unitary());
    CHECK(lu_normal_form(phi).degenerate);
    CHECK(lu_equivalent(ghz4(), phi).equivalent);
    // Global phases are searched when the gauge is a fallback.
    const PureState4 w = w4() * std::polar(1.0, 2.0 * M_PI * s.uniform());
    CHECK(lu_equivalent(w4(), w).equivalent);
  }
}

TEST_CASE("fallback gauges are reported") {
  // W4: R R^T is nilpotent, so both traces vanish.
  const LUNormalForm nf = lu_normal_form(w4());
  CHECK(nf.gauge != PhaseGauge::trace_rrt);
  CHECK(to_string(nf.gauge).size() > 0);
}

TEST_CASE("LU equivalence implies equal signatures up to global phase") {
  for (int t = 0; t < 50; ++t) {
    Sampler s = Sampler::stream(67, t);
    const PureState4 psi = s.haar_state();
    const PureState4 phi = apply_local(psi, s.local_unitary());
    REQUIRE(lu_equivalent(psi, phi).equivalent);
    const auto a = signature(psi), b = signature(phi);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(a.quad[k] - b.quad[k]) < 1e-8);
  }
}

TEST_CASE("the normal form has 18 real degrees of freedom") {
  // Normalized states have 31 real parameters; 12 local-unitary directions
  // and the global phase leave 18. Numerical Jacobian of the normal form.
  for (int t = 0; t < 5; ++t) {
    Sampler s = Sampler::stream(68, t);
    const PureState4 psi = s.haar_state();
    const Mat4 base = lu_normal_form(psi).normal_R;
    Eigen::MatrixXd jac(32, 32);
    const double h = 1e-6;
    for (int k = 0; k < 32; ++k) {
      Vec16 v = psi.amplitudes();
      v[k / 2] += (k % 2 == 0) ? Complex(h, 0.0) : Complex(0.0, h);
      const Mat4 d = (lu_normal_form(PureState4(v).normalized()).normal_R - base) / h;
      for (int e = 0; e < 16; ++e) {
        jac(2 * e, k) = d(e / 4, e % 4).real();
        jac(2 * e + 1, k) = d(e / 4, e % 4).imag();
      }
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(jac).singularValues();
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv[k] > 1e-4 * sv[0];
    CHECK(rank == 18);
  }
}

}
