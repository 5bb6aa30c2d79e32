#include "slocc4/lu_normal_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "slocc4/magic.hpp"
#include "slocc4/matrix.hpp"

namespace slocc4 {

namespace {

constexpr double kGaugeFloor = 1e-10;

// The eight diagonal sign matrices with determinant +1.
std::array<Eigen::Vector4d, 8> even_sign_patterns() {
  std::array<Eigen::Vector4d, 8> out;
  int n = 0;
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Eigen::Vector4d s;
    for (int i = 0; i < 4; ++i) s[i] = (mask >> i) & 1 ? -1.0 : 1.0;
    out[n++] = s;
  }
  return out;
}

Complex unit(Complex z) { return z / std::abs(z); }

Mat4 conjugate_signs(const Mat4& m, const Eigen::Vector4d& s) {
  return s.asDiagonal() * m * s.asDiagonal();
}

// Lexicographic comparison of the off-diagonal imaginary parts, treating
// differences below `eps` as ties.
bool lex_greater(const Mat4& a, const Mat4& b, double eps) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const double x = a(i, j).imag();
      const double y = b(i, j).imag();
      if (std::abs(x - y) > eps) return x > y;
    }
  }
  return false;
}

// Fills the SO(4) x SO(4) part of the normal form for the phase already in nf.
void diagonalize(LUNormalForm& nf, const Mat4& r) {
  const Mat4 m = nf.phase * r;
  const RealSvd svd = real_svd_so4(m.real());
  nf.degenerate = svd.degenerate;
  RealMat4 left = svd.O1.transpose();
  RealMat4 right = svd.O2.transpose();
  Mat4 normal = left.cast<Complex>() * m * right.cast<Complex>();

  Eigen::Vector4d best_s = Eigen::Vector4d::Ones();
  Mat4 best = normal;
  for (const auto& s : even_sign_patterns()) {
    const Mat4 cand = conjugate_signs(normal, s);
    if (lex_greater(cand, best, 1e-9)) {
      best = cand;
      best_s = s;
    }
  }
  nf.normal_R = best;
  nf.left = best_s.asDiagonal() * left;
  nf.right = right * best_s.asDiagonal();
  nf.sigma = svd.sigma;
}

bool invariant_gauge(PhaseGauge g) { return g == PhaseGauge::trace_rrt || g == PhaseGauge::trace_rrt_rrh; }

// Smallest distance between two normal forms over signed permutations with
// determinant +1 that stay inside groups of equal |sigma|.
double residual(const LUNormalForm& a, const LUNormalForm& b, double tol) {
  const double smax = std::max(std::abs(a.sigma[0]), std::abs(b.sigma[0]));
  const double group_tol = std::max(1e-8 * smax, tol);
  std::array<int, 4> perm{0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      ok = std::abs(std::abs(b.sigma[i]) - std::abs(b.sigma[perm[i]])) <= group_tol;
    }
    if (!ok) continue;
    RealMat4 pm = RealMat4::Zero();
    for (int i = 0; i < 4; ++i) pm(i, perm[i]) = 1.0;
    const double parity = pm.determinant();
    for (int mask = 0; mask < 16; ++mask) {
      Eigen::Vector4d s;
      for (int i = 0; i < 4; ++i) s[i] = (mask >> i) & 1 ? -1.0 : 1.0;
      if (s.prod() * parity < 0.0) continue;
      const Mat4 q = (s.asDiagonal() * pm).cast<Complex>();
      best = std::min(best, (a.normal_R - q * b.normal_R * q.transpose()).norm());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::string_view to_string(PhaseGauge g) {
  switch (g) {
    case PhaseGauge::trace_rrt: return "trace_RRT";
    case PhaseGauge::trace_rrt_rrh: return "trace_RRT_RRH";
    case PhaseGauge::entry_11: return "entry_11";
    case PhaseGauge::largest_entry: return "largest_entry";
  }
  return "unknown";
}

LUNormalForm lu_normal_form(const PureState4& state) {
  const Mat4 r = to_R(state.normalized()).entries;
  LUNormalForm nf;

  // Both traces pick up e^{2 i theta} under a global phase and are invariant
  // under local unitaries, so they fix theta up to sign; R -> -R is itself in
  // SO(4) x SO(4).
  const Complex t1 = (r * r.transpose()).trace();
  const Complex t2 = (r * r.transpose() * r * r.adjoint()).trace();
  if (std::abs(t1) > kGaugeFloor) {
    nf.phase = std::sqrt(std::conj(unit(t1)));
    nf.gauge = PhaseGauge::trace_rrt;
  } else if (std::abs(t2) > kGaugeFloor) {
    nf.phase = std::sqrt(std::conj(unit(t2)));
    nf.gauge = PhaseGauge::trace_rrt_rrh;
  } else if (std::abs(r(0, 0)) > 1e-12) {
    nf.phase = std::conj(unit(r(0, 0)));
    nf.gauge = PhaseGauge::entry_11;
  } else {
    Eigen::Index i = 0, j = 0;
    r.cwiseAbs().maxCoeff(&i, &j);
    nf.phase = std::conj(unit(r(i, j)));
    nf.gauge = PhaseGauge::largest_entry;
  }

  diagonalize(nf, r);
  return nf;
}

LUComparison lu_equivalent(const PureState4& s1, const PureState4& s2, double tol) {
  const LUNormalForm a = lu_normal_form(s1);
  const LUNormalForm b = lu_normal_form(s2);
  double best = residual(a, b, tol);
  if (best <= tol || (invariant_gauge(a.gauge) && invariant_gauge(b.gauge))) return {best <= tol, best};

  // A fallback gauge is not LU invariant: search the global phase of s2
  // (theta mod pi, since -R is an SO(4) x SO(4) move). Grid, then golden
  // section around the best grid point.
  const Mat4 r2 = to_R(s2.normalized()).entries;
  auto at = [&](double theta) {
    LUNormalForm c;
    c.phase = std::polar(1.0, theta);
    diagonalize(c, r2);
    return residual(a, c, tol);
  };
  constexpr int kGrid = 720;
  const double step = M_PI / kGrid;
  double best_theta = 0.0;
  for (int k = 0; k < kGrid; ++k) {
    const double v = at(k * step);
    if (v < best) {
      best = v;
      best_theta = k * step;
    }
  }
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best_theta - step, hi = best_theta + step;
  for (int it = 0; it < 60 && best > tol; ++it) {
    const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    const double f1 = at(x1), f2 = at(x2);
    best = std::min({best, f1, f2});
    if (f1 < f2) {
      hi = x2;
    } else {
      lo = x1;
    }
  }
  return {best <= tol, best};
}

}  // namespace slocc4
