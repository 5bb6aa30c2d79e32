#include "slocc4/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace slocc4 {

namespace {

Complex horner(const std::array<Complex, 4>& c, Complex x) {
  return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
}

Complex horner_derivative(const std::array<Complex, 4>& c, Complex x) {
  return ((4.0 * x + 3.0 * c[3]) * x + 2.0 * c[2]) * x + c[1];
}

// Roots of x^3 + b x^2 + c x + d by Cardano's formula.
std::array<Complex, 3> cubic_roots(Complex b, Complex c, Complex d) {
  const Complex p = c - b * b / 3.0;
  const Complex q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // Pick the branch with the larger modulus to avoid cancellation.
  Complex u3 = -q / 2.0 + disc;
  if (std::abs(-q / 2.0 - disc) > std::abs(u3)) u3 = -q / 2.0 - disc;
  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  std::array<Complex, 3> out;
  if (std::abs(u3) == 0.0) {
    out.fill(-b / 3.0);
    return out;
  }
  Complex u = std::pow(u3, 1.0 / 3.0);
  for (int k = 0; k < 3; ++k) {
    out[k] = u - p / (3.0 * u) - b / 3.0;
    u *= omega;
  }
  return out;
}

}  // namespace

std::array<Complex, 4> charpoly4(const Mat4& m) {
  const Mat4 m2 = m * m;
  const Complex p1 = m.trace();
  const Complex p2 = m2.trace();
  const Complex p3 = (m2 * m).trace();
  const Complex e1 = p1;
  const Complex e2 = (e1 * p1 - p2) / 2.0;
  const Complex e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const Complex e4 = m.determinant();
  return {e4, -e3, e2, -e1};
}

std::array<Complex, 4> eig4(const Mat4& m) {
  for (int i = 0; i < 16; ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidInput("eig4: non-finite matrix entry");
    }
  }
  const auto c = charpoly4(m);

  Mat4 companion = Mat4::Zero();
  for (int i = 1; i < 4; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < 4; ++i) companion(i, 3) = -c[i];
  Eigen::ComplexEigenSolver<Mat4> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  std::array<Complex, 4> roots{ev[0], ev[1], ev[2], ev[3]};

  const double scale = std::max(m.norm(), 1e-300);
  const double target = 1e-13 * std::pow(scale, 4);
  const std::array<Complex, 4> start = roots;
  for (int k = 0; k < 4; ++k) {
    // Newton must not wander into a neighbouring root.
    double leash = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 4; ++j) {
      if (j != k) leash = std::min(leash, 0.5 * std::abs(start[j] - start[k]));
    }
    Complex x = roots[k];
    double res = std::abs(horner(c, x));
    for (int it = 0; it < 50 && res >= target; ++it) {
      const Complex dp = horner_derivative(c, x);
      if (std::abs(dp) == 0.0) break;
      const Complex next = x - horner(c, x) / dp;
      const double next_res = std::abs(horner(c, next));
      if (!(next_res < res) || std::abs(next - start[k]) > leash) break;
      x = next;
      res = next_res;
    }
    roots[k] = x;
  }
  return roots;
}

std::array<Complex, 4> quartic_roots_closed_form(const std::array<Complex, 4>& c) {
  // Depressed quartic y^4 + p y^2 + q y + r with x = y - c3/4.
  const Complex a = c[3];
  const Complex shift = -a / 4.0;
  const Complex p = c[2] - 3.0 * a * a / 8.0;
  const Complex q = c[1] - a * c[2] / 2.0 + a * a * a / 8.0;
  const Complex r = c[0] - a * c[1] / 4.0 + a * a * c[2] / 16.0 - 3.0 * a * a * a * a / 256.0;

  std::array<Complex, 4> y;
  const double size = std::abs(p) + std::sqrt(std::abs(r)) + std::cbrt(std::abs(q));
  if (std::abs(q) <= 1e-14 * std::max(size * size * size, 1e-300)) {
    const Complex disc = std::sqrt(p * p - 4.0 * r);
    const Complex z1 = (-p + disc) / 2.0;
    const Complex z2 = (-p - disc) / 2.0;
    y = {std::sqrt(z1), -std::sqrt(z1), std::sqrt(z2), -std::sqrt(z2)};
  } else {
    // Resolvent cubic 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0.
    const auto ms = cubic_roots(p, (p * p / 4.0 - r), -q * q / 8.0);
    Complex mm = ms[0];
    for (const Complex& cand : ms) {
      if (std::abs(cand) > std::abs(mm)) mm = cand;
    }
    const Complex s = std::sqrt(2.0 * mm);
    const Complex A = p / 2.0 + mm - q / (2.0 * s);
    const Complex B = p / 2.0 + mm + q / (2.0 * s);
    const Complex dA = std::sqrt(s * s - 4.0 * A);
    const Complex dB = std::sqrt(s * s - 4.0 * B);
    y = {(-s + dA) / 2.0, (-s - dA) / 2.0, (s + dB) / 2.0, (s - dB) / 2.0};
  }
  for (auto& v : y) v += shift;
  return y;
}

int rank_tol(const MatX& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatX> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || !(s[0] > 0.0)) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s[i] > tol * s[0]) ++r;
  }
  return r;
}

Mat2 herm2_fn(const Mat2& h, Herm2Fn fn, double floor) {
  if ((h - h.adjoint()).norm() > 1e-10 * std::max(1.0, h.norm())) {
    throw InvalidInput("herm2_fn: matrix is not Hermitian");
  }
  const Mat2 hs = 0.5 * (h + h.adjoint());
  const double mean = 0.5 * (hs(0, 0).real() + hs(1, 1).real());
  const double half = 0.5 * (hs(0, 0).real() - hs(1, 1).real());
  const double rad = std::hypot(half, std::abs(hs(0, 1)));
  const double mu_plus = mean + rad;
  double mu_minus = mean - rad;

  double alpha = 0.0;
  double beta = 0.0;
  if (fn == Herm2Fn::sqrt) {
    if (mu_minus < -1e-12 * std::max(1.0, std::abs(mu_plus))) {
      throw InvalidInput("herm2_fn: sqrt of a matrix with a negative eigenvalue");
    }
    mu_minus = std::max(mu_minus, 0.0);
    const double sp = std::sqrt(mu_plus);
    const double sm = std::sqrt(mu_minus);
    if (sp + sm == 0.0) return Mat2::Zero();
    beta = 1.0 / (sp + sm);
    alpha = sp * sm / (sp + sm);
  } else {
    if (!(mu_minus > floor)) {
      throw SingularFilter("herm2_fn: eigenvalue below the singular floor");
    }
    const double sp = std::sqrt(mu_plus);
    const double sm = std::sqrt(mu_minus);
    const double denom = sp * sm * (sp + sm);
    beta = -1.0 / denom;
    alpha = (mu_plus + mu_minus + sp * sm) / denom;
  }
  Mat2 out = beta * hs;
  out(0, 0) += alpha;
  out(1, 1) += alpha;
  return out;
}

RealSvd real_svd_so4(const RealMat4& m) {
  Eigen::JacobiSVD<RealMat4> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RealSvd out;
  out.sigma = svd.singularValues();
  RealMat4 u = svd.matrixU();
  RealMat4 v = svd.matrixV();
  if (u.determinant() < 0.0) {
    u.col(3) *= -1.0;
    out.sigma[3] *= -1.0;
  }
  if (v.determinant() < 0.0) {
    v.col(3) *= -1.0;
    out.sigma[3] *= -1.0;
  }
  out.O1 = u;
  out.O2 = v.transpose();
  const double smax = std::abs(out.sigma[0]);
  for (int i = 0; i + 1 < 4; ++i) {
    if (std::abs(std::abs(out.sigma[i]) - std::abs(out.sigma[i + 1])) < 1e-8 * smax) {
      out.degenerate = true;
    }
  }
  return out;
}

std::vector<int> Staircase::block_sizes() const {
  std::vector<int> g;
  for (std::size_t k = 1; k < dims.size(); ++k) g.push_back(dims[k] - dims[k - 1]);
  while (!g.empty() && g.back() == 0) g.pop_back();
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (g[k] > g[k - 1]) return {};
  }
  std::vector<int> sizes;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const int exact = g[k] - (k + 1 < g.size() ? g[k + 1] : 0);
    for (int j = 0; j < exact; ++j) sizes.push_back(static_cast<int>(k + 1));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Staircase null_space_staircase(const MatX& a, double threshold) {
  const Eigen::Index n = a.rows();
  Staircase st;
  st.dims.push_back(0);
  MatX basis(n, 0);
  for (Eigen::Index k = 1; k <= n; ++k) {
    const MatX proj = MatX::Identity(n, n) - basis * basis.adjoint();
    Eigen::JacobiSVD<MatX> svd(proj * a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int count = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s[i] <= threshold) {
        ++count;
        if (s[i] > 0.0) st.margin = std::min(st.margin, threshold / s[i]);
      } else {
        st.margin = std::min(st.margin, s[i] / threshold);
      }
    }
    if (count <= st.dims.back()) break;
    st.dims.push_back(count);
    basis = svd.matrixV().rightCols(count);
    if (count == n) break;
  }
  return st;
}

}  // namespace slocc4
