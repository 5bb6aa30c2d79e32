#include "slocc4/measures.hpp"

#include <algorithm>
#include <cmath>

#include "slocc4/matrix.hpp"

namespace slocc4 {

namespace {

Mat4 psd_sqrt(const Mat4& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
  const Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

Mat4 sigma_yy() {
  Mat4 m = Mat4::Zero();
  // sigma_y (x) sigma_y = antidiagonal (-1, 1, 1, -1).
  m(0, 3) = -1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 0) = -1.0;
  return m;
}

}  // namespace

double monotone_from_quad(const std::array<Complex, 4>& quad, int alpha) {
  if (alpha < 1) throw InvalidInput("monotone order alpha must be a positive integer");
  Complex sum = 0.0;
  for (const Complex& z : quad) {
    Complex p = 1.0;
    for (int k = 0; k < alpha; ++k) p *= z;
    sum += p;
  }
  return std::pow(std::abs(sum), 2.0 / alpha);
}

MonotoneValue monotone_M(const PureState4& state, int alpha) {
  if (alpha < 1) throw InvalidInput("monotone order alpha must be a positive integer");
  return {alpha, monotone_from_quad(signature(state.normalized()).quad, alpha)};
}

double concurrence(const DensityMatrix& rho) {
  if (rho.entries.rows() != 4 || rho.entries.cols() != 4) {
    throw InvalidDensity("concurrence needs a 4x4 density matrix");
  }
  if (!rho.is_valid(1e-10)) {
    throw InvalidDensity("density matrix is not Hermitian positive semidefinite");
  }
  const Mat4 r = rho.entries / rho.entries.trace().real();
  const Mat4 hermitian = 0.5 * (r + r.adjoint());
  const Mat4 s = psd_sqrt(hermitian);
  const Mat4 x = s * sigma_yy() * s.conjugate();
  Eigen::JacobiSVD<Mat4> svd(x);
  const auto& l = svd.singularValues();  // decreasing
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

Complex hyperdeterminant(const Vec8& p) {
  const Complex p000 = p[0], p001 = p[1], p010 = p[2], p011 = p[3];
  const Complex p100 = p[4], p101 = p[5], p110 = p[6], p111 = p[7];
  const Complex d1 = p000 * p000 * p111 * p111 + p001 * p001 * p110 * p110 +
                     p010 * p010 * p101 * p101 + p100 * p100 * p011 * p011;
  const Complex d2 = p000 * p111 * p011 * p100 + p000 * p111 * p101 * p010 +
                     p000 * p111 * p110 * p001 + p011 * p100 * p101 * p010 +
                     p011 * p100 * p110 * p001 + p101 * p010 * p110 * p001;
  const Complex d3 = p000 * p110 * p101 * p011 + p111 * p001 * p010 * p100;
  return d1 - 2.0 * d2 + 4.0 * d3;
}

double three_tangle(const Vec8& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) return 0.0;
  return 4.0 * std::abs(hyperdeterminant(psi)) / (n2 * n2);
}

SqrtDecomposition square_root(const PureState4& state, int traced_qubit) {
  if (traced_qubit < 0 || traced_qubit > 3) throw InvalidInput("qubit index out of range");
  const PureState4 s = state.normalized();
  SqrtDecomposition dec;
  dec.traced_qubit = traced_qubit;
  dec.sqrt_matrix = SqrtMatrix::Zero(8, 2);
  for (int i = 0; i < 16; ++i) {
    int row = 0;
    for (int q = 0; q < 4; ++q) {
      if (q != traced_qubit) row = 2 * row + ((i >> (3 - q)) & 1);
    }
    const int col = (i >> (3 - traced_qubit)) & 1;
    dec.sqrt_matrix(row, col) = s[i];
  }
  return dec;
}

double witnessed_sqrt_tangle(const SqrtMatrix& m, const MatX& v) {
  if (v.rows() != m.cols()) throw InvalidInput("mixing matrix has the wrong number of rows");
  const MatX w = m * v;
  double total = 0.0;
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    const Vec8 col = w.col(j);
    const double n2 = col.squaredNorm();
    if (n2 > 1e-300) total += n2 * std::sqrt(three_tangle(col));
  }
  return total;
}

TangleStatistics sqrt_tangle_average(const SqrtDecomposition& dec, int samples,
                                     std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("need at least one sample");
  const int k = static_cast<int>(dec.sqrt_matrix.cols());
  std::vector<double> values(samples);
  for (int i = 0; i < samples; ++i) {
    Sampler s = Sampler::stream(seed, static_cast<std::uint64_t>(i));
    const int n = k + s.uniform_int(0, 4);
    values[i] = witnessed_sqrt_tangle(dec.sqrt_matrix, s.right_unitary(k, n));
  }
  TangleStatistics out;
  out.samples = samples;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / samples;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.stddev = samples > 1 ? std::sqrt(ss / (samples - 1)) : 0.0;
  out.canonical = witnessed_sqrt_tangle(dec.sqrt_matrix, MatX::Identity(k, k));
  return out;
}

namespace {

struct QR {
  Complex q;
  Complex r;
};

QR gabcd_qr(Complex a, Complex b, Complex c, Complex d) {
  const Complex a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
  return {8.0 * a2 * d2 + 8.0 * b2 * c2 - 4.0 * a2 * b2 - 4.0 * a2 * c2 - 4.0 * d2 * b2 -
              4.0 * d2 * c2,
          (a2 - d2) * (b2 - c2)};
}

}  // namespace

Complex printed_beta(Complex a, Complex b, Complex c, Complex d) {
  const auto [q, r] = gabcd_qr(a, b, c, d);
  return std::sqrt(-q + std::sqrt(q * q - r));
}

GabcdTangleWitness gabcd_witness(Complex a, Complex b, Complex c, Complex d) {
  GabcdTangleWitness w;
  const auto [q, r] = gabcd_qr(a, b, c, d);
  w.q = q;
  w.r = r;

  // Columns are the branches of qubit 1; the printed rows carry a factor 2.
  SqrtMatrix m = SqrtMatrix::Zero(8, 2);
  m(0, 0) = a + d;
  m(3, 0) = a - d;
  m(5, 0) = b + c;
  m(6, 0) = b - c;
  m(1, 1) = b - c;
  m(2, 1) = b + c;
  m(4, 1) = a - d;
  m(7, 1) = a + d;
  const double norm = m.norm();
  if (!(norm > 0.0)) throw InvalidParameters("G_abcd with a = b = c = d = 0 is the zero state");
  w.sqrt_matrix = m / norm;
  w.rank = rank_tol(w.sqrt_matrix, 1e-10);

  // Hdet(v1 + t v2) = 4 r t^4 + 2 q t^2 + 4 r, so t^2 = x solves
  // 4 r x^2 + 2 q x + 4 r = 0; its roots are x and 1/x.
  const double scale = std::pow(std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}), 4);
  if (std::abs(r) <= 1e-13 * scale) {
    w.beta = 0.0;
  } else {
    const Complex disc = std::sqrt(q * q - 16.0 * r * r);
    Complex big = (-q + disc) / (4.0 * r);
    const Complex alt = (-q - disc) / (4.0 * r);
    if (std::abs(alt) > std::abs(big)) big = alt;
    w.beta = std::sqrt(1.0 / big);
  }

  const Complex beta = w.beta;
  const double f = 1.0 / std::sqrt(2.0 * (1.0 + std::norm(beta)));
  w.mixer << 1.0, beta, 1.0, -beta, beta, 1.0, -beta, 1.0;
  w.mixer *= f;
  const SqrtMatrix v = w.sqrt_matrix * w.mixer;
  for (int j = 0; j < 4; ++j) {
    w.vectors[j] = v.col(j);
    w.tangles[j] = three_tangle(w.vectors[j]);
  }
  return w;
}

EntanglementReport entanglement_report(const PureState4& state, std::uint64_t seed,
                                       const ReportOptions& options) {
  const PureState4 s = state.normalized();
  EntanglementReport rep;
  rep.signature = signature(s, options.tol);
  try {
    rep.segre = segre(s, options.tol);
    rep.family = classify(s, options.tol);
  } catch (const AmbiguousClassification& e) {
    rep.family_error = e.what();
  }
  for (int alpha : options.alphas) {
    rep.monotones.push_back({alpha, monotone_from_quad(rep.signature.quad, alpha)});
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      rep.concurrences.push_back({{i, j}, concurrence(reduced_density(s, {i, j}))});
    }
  }
  for (int t = 0; t < 4; ++t) {
    const std::uint64_t sub = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1);
    TracedTangle tt;
    tt.traced = t;
    tt.stats = sqrt_tangle_average(square_root(s, t), options.samples, sub);
    tt.flat = tt.stats.stddev < 1e-6;
    rep.tangles.push_back(tt);
  }
  return rep;
}

}  // namespace slocc4
