#include <cmath>

#include "slocc4/spectral.hpp"
#include "test_support.hpp"

using namespace slocc4;
using namespace slocc4::test;

TEST_SUITE("families") {

TEST_CASE("constructor examples") {
  const PureState4 two = construct({Family::G_abcd, {1.0, 0.0, 0.0, 0.0}});
  const PureState4 want = PureState4::from_terms({{0.5, "0000"}, {0.5, "0011"}, {0.5, "1100"}, {0.5, "1111"}});
  CHECK(max_abs_diff(two, want) < 1e-15);
  CHECK(max_abs_diff(two, named_state(NamedState::two_epr)) < 1e-15);

  const PureState4 g = construct({Family::G_abcd, {M_SQRT1_2, 0.0, 0.0, M_SQRT1_2}});
  CHECK(max_abs_diff(g, ghz4()) < 1e-15);

  const PureState4 sep = construct({Family::L_abc2, {0.0, 0.0, 0.0}});
  CHECK(max_abs_diff(sep, PureState4::from_terms({{1.0, "0110"}})) == 0.0);
}

TEST_CASE("arity is enforced") {
  CHECK_THROWS_AS(FamilySpec(Family::G_abcd, {1.0, 2.0}), InvalidParameters);
  CHECK_THROWS_AS(FamilySpec(Family::L_0_71, {1.0}), InvalidParameters);
  CHECK_THROWS_AS(FamilySpec(Family::L_a4, {Complex(std::nan(""), 0.0)}), InvalidParameters);
  const int arity[] = {4, 3, 2, 2, 1, 1, 0, 0, 0};
  for (std::size_t k = 0; k < kAllFamilies.size(); ++k) CHECK(family_arity(kAllFamilies[k]) == arity[k]);
}

TEST_CASE("normalizing a zero-norm choice is an error") {
  CHECK_THROWS_AS(construct({Family::G_abcd, {0.0, 0.0, 0.0, 0.0}}, true), InvalidParameters);
  CHECK(construct({Family::G_abcd, {0.0, 0.0, 0.0, 0.0}}).norm2() == 0.0);
}

TEST_CASE("names round trip") {
  for (Family f : kAllFamilies) CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("L_abc3"), InvalidInput);
}

TEST_CASE("constructors match an independent transcription of the formulas") {
  for (Family f : kAllFamilies) {
    for (int t = 0; t < 3; ++t) {
      Sampler s = Sampler::stream(51 + static_cast<int>(f), t);
      const auto p = random_params(s, family_arity(f));
      const oracle::Vec want = oracle::family_state(std::string(family_name(f)), p);
      CAPTURE(family_name(f));
      CHECK((construct({f, p}).amplitudes() - want).norm() < 1e-15);
    }
  }
}

TEST_CASE("constructors are affine in each parameter") {
  for (Family f : kAllFamilies) {
    const int n = family_arity(f);
    if (n == 0) continue;
    Sampler s = Sampler::stream(52, static_cast<int>(f));
    const auto p = random_params(s, n);
    const auto base = construct({f, p}).amplitudes();
    for (int k = 0; k < n; ++k) {
      auto p1 = p, p2 = p;
      p1[k] += 1.0;
      p2[k] += 2.0;
      const Vec16 d1 = construct({f, p1}).amplitudes() - base;
      const Vec16 d2 = construct({f, p2}).amplitudes() - base;
      CHECK((d2 - 2.0 * d1).norm() < 1e-14);
    }
  }
}

TEST_CASE("named states") {
  const PureState4 w = PureState4::from_terms({{0.5, "0001"}, {0.5, "0010"}, {0.5, "0100"}, {0.5, "1000"}});
  CHECK(max_abs_diff(named_state(NamedState::w4), w) < 1e-16);
  const PureState4 g = PureState4::from_terms({{M_SQRT1_2, "0000"}, {M_SQRT1_2, "1111"}});
  CHECK(max_abs_diff(named_state(NamedState::ghz4), g) < 1e-15);
  const double r = 1.0 / std::sqrt(3.0);
  const PureState4 c = PureState4::from_terms({{r, "0001"}, {r, "0110"}, {r, "1000"}});
  CHECK(max_abs_diff(named_state(NamedState::la4_companion), c) < 1e-16);
  const PureState4 phi =
      PureState4::from_terms({{0.5, "0000"}, {0.5, "0011"}, {0.5, "1100"}, {-0.5, "1111"}});
  CHECK(max_abs_diff(named_state(NamedState::phi4_cluster), phi) < 1e-16);
  const PureState4 ghz3 = PureState4::from_terms({{M_SQRT1_2, "0000"}, {M_SQRT1_2, "1110"}});
  CHECK(max_abs_diff(named_state(NamedState::ghz3), ghz3) < 1e-15);
  const PureState4 w3 = PureState4::from_terms({{r, "0010"}, {r, "0100"}, {r, "1000"}});
  CHECK(max_abs_diff(named_state(NamedState::w3), w3) < 1e-16);
  CHECK_THROWS_AS(named_state("w5"), InvalidInput);
  CHECK(max_abs_diff(named_state("w4"), w) < 1e-16);
}

TEST_CASE("catalog entries classify as listed") {
  CHECK(catalog().size() == 9);
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const PureState4 psi = named_state(e.id);
    CHECK(std::abs(psi.norm2() - 1.0) < 1e-15);
    const FamilyLabel l = classify(psi);
    CHECK(l.family == e.expected_family);
    for (std::size_t k = 0; k < e.expected_params.size(); ++k) {
      CHECK(std::abs(l.params[k] - e.expected_params[k]) < 1e-10);
    }
  }
}

TEST_CASE("generic constructor draws classify to their family") {
  for (Family f : kAllFamilies) {
    for (int t = 0; t < 10; ++t) {
      Sampler s = Sampler::stream(53 + static_cast<int>(f), t);
      CAPTURE(family_name(f));
      CHECK(classify(construct({f, random_params(s, family_arity(f))}, true)).family == f);
    }
  }
}

}
