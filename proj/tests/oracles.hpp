// Slow, independent reference computations. Nothing here calls the library's
// numerical routines; only plain loops and Eigen's general decompositions.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline int bit(int index, int qubit, int n = 4) { return (index >> (n - 1 - qubit)) & 1; }

// Full 16x16 Kronecker product A1 (x) A2 (x) A3 (x) A4, entry by entry.
inline Mat kron4(const std::array<Eigen::Matrix2cd, 4>& a) {
  Mat k(16, 16);
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      C p = 1.0;
      for (int q = 0; q < 4; ++q) p *= a[q](bit(i, q), bit(j, q));
      k(i, j) = p;
    }
  }
  return k;
}

// Partial trace by explicit summation; keep sorted ascending.
inline Mat partial_trace(const Vec& psi, const std::vector<int>& keep) {
  std::vector<int> traced;
  for (int q = 0; q < 4; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  const int dk = 1 << keep.size();
  Mat rho = Mat::Zero(dk, dk);
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      bool same = true;
      for (int t : traced) same = same && bit(i, t) == bit(j, t);
      if (!same) continue;
      int a = 0, b = 0;
      for (int k : keep) {
        a = 2 * a + bit(i, k);
        b = 2 * b + bit(j, k);
      }
      rho(a, b) += psi[i] * std::conj(psi[j]);
    }
  }
  return rho;
}

// R_{jk} = sum_{m,n} T_{jm} psi~_{mn} conj(T_{kn}), T typed in again here.
inline Mat magic_R(const Vec& psi) {
  const double h = 1.0 / std::sqrt(2.0);
  const C i(0.0, 1.0);
  const C t[4][4] = {{h, 0, 0, h}, {0, i * h, i * h, 0}, {0, -h, h, 0}, {i * h, 0, 0, -i * h}};
  Mat r = Mat::Zero(4, 4);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) r(j, k) += t[j][m] * psi[4 * m + n] * std::conj(t[k][n]);
      }
    }
  }
  return r;
}

inline int rank_abs(const Mat& m, double tol) {
  Eigen::JacobiSVD<Mat> svd(m);
  int r = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) r += svd.singularValues()[k] > tol;
  return r;
}

// Jordan blocks of P at lambda from ranks of explicit matrix powers; meant
// for exactly representable P with O(1) entries.
inline std::vector<int> jordan_blocks(const Mat& p, C lambda, double tol = 1e-9) {
  const Eigen::Index n = p.rows();
  const Mat a = p - lambda * Mat::Identity(n, n);
  std::vector<int> ranks{static_cast<int>(n)};
  Mat pw = Mat::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    pw = pw * a;
    ranks.push_back(rank_abs(pw, tol));
  }
  // blocks of size >= k: r_{k-1} - r_k
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  std::vector<int> blocks;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < at_least[k] - next; ++c) blocks.push_back(static_cast<int>(k + 1));
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

inline Mat P_of(const Mat& r) {
  Mat p = Mat::Zero(8, 8);
  p.topRightCorner(4, 4) = r;
  p.bottomLeftCorner(4, 4) = r.transpose();
  return p;
}

// Cayley hyperdeterminant by epsilon contraction:
// Hdet = -1/2 sum psi_{i1 j1 k1} psi_{i2 j2 k2} psi_{i3 j3 k3} psi_{i4 j4 k4}
//        eps_{i1 i2} eps_{i3 i4} eps_{j1 j2} eps_{j3 j4} eps_{k1 k3} eps_{k2 k4}.
inline C hyperdet(const Vec& psi) {
  auto eps = [](int a, int b) { return a == b ? 0.0 : (a == 0 ? 1.0 : -1.0); };
  auto at = [&](int i, int j, int k) { return psi[4 * i + 2 * j + k]; };
  C s = 0.0;
  for (int m = 0; m < 4096; ++m) {
    int x[12];
    for (int b = 0; b < 12; ++b) x[b] = (m >> b) & 1;
    const int i1 = x[0], i2 = x[1], i3 = x[2], i4 = x[3];
    const int j1 = x[4], j2 = x[5], j3 = x[6], j4 = x[7];
    const int k1 = x[8], k2 = x[9], k3 = x[10], k4 = x[11];
    const double e = eps(i1, i2) * eps(i3, i4) * eps(j1, j2) * eps(j3, j4) * eps(k1, k3) * eps(k2, k4);
    if (e == 0.0) continue;
    s += e * at(i1, j1, k1) * at(i2, j2, k2) * at(i3, j3, k3) * at(i4, j4, k4);
  }
  return -0.5 * s;
}

// Wootters through the non-Hermitian product rho (sy x sy) rho* (sy x sy).
inline double concurrence(const Mat& rho) {
  Mat yy = Mat::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Mat prod = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Mat> es(prod);
  std::vector<double> l;
  for (int k = 0; k < 4; ++k) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()[k].real())));
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

// Printed normal forms as affine tables: amplitude[index] = c0 + sum_k c_k p_k.
struct Term {
  const char* bits;
  C constant;
  std::array<C, 4> coeff;
};

inline std::vector<Term> family_terms(const std::string& family) {
  const C h(0.0, 1.0 / std::sqrt(2.0));
  const C i(0.0, 1.0);
  if (family == "G_abcd") {
    return {{"0000", 0, {0.5, 0, 0, 0.5}},  {"1111", 0, {0.5, 0, 0, 0.5}},
            {"0011", 0, {0.5, 0, 0, -0.5}}, {"1100", 0, {0.5, 0, 0, -0.5}},
            {"0101", 0, {0, 0.5, 0.5, 0}},  {"1010", 0, {0, 0.5, 0.5, 0}},
            {"0110", 0, {0, 0.5, -0.5, 0}}, {"1001", 0, {0, 0.5, -0.5, 0}}};
  }
  if (family == "L_abc2") {
    return {{"0000", 0, {0.5, 0.5, 0, 0}},  {"1111", 0, {0.5, 0.5, 0, 0}},
            {"0011", 0, {0.5, -0.5, 0, 0}}, {"1100", 0, {0.5, -0.5, 0, 0}},
            {"0101", 0, {0, 0, 1, 0}},      {"1010", 0, {0, 0, 1, 0}},
            {"0110", 1, {0, 0, 0, 0}}};
  }
  if (family == "L_a2b2") {
    return {{"0000", 0, {1, 0, 0, 0}}, {"1111", 0, {1, 0, 0, 0}}, {"0101", 0, {0, 1, 0, 0}},
            {"1010", 0, {0, 1, 0, 0}}, {"0110", 1, {0, 0, 0, 0}}, {"0011", 1, {0, 0, 0, 0}}};
  }
  if (family == "L_ab3") {
    return {{"0000", 0, {1, 0, 0, 0}},      {"1111", 0, {1, 0, 0, 0}},
            {"0101", 0, {0.5, 0.5, 0, 0}},  {"1010", 0, {0.5, 0.5, 0, 0}},
            {"0110", 0, {0.5, -0.5, 0, 0}}, {"1001", 0, {0.5, -0.5, 0, 0}},
            {"0001", h, {0, 0, 0, 0}},      {"0010", h, {0, 0, 0, 0}},
            {"0111", h, {0, 0, 0, 0}},      {"1011", h, {0, 0, 0, 0}}};
  }
  if (family == "L_a4") {
    return {{"0000", 0, {1, 0, 0, 0}}, {"0101", 0, {1, 0, 0, 0}}, {"1010", 0, {1, 0, 0, 0}},
            {"1111", 0, {1, 0, 0, 0}}, {"0001", i, {0, 0, 0, 0}}, {"0110", 1, {0, 0, 0, 0}},
            {"1011", -i, {0, 0, 0, 0}}};
  }
  if (family == "L_a2_0_31") {
    return {{"0000", 0, {1, 0, 0, 0}}, {"1111", 0, {1, 0, 0, 0}}, {"0011", 1, {0, 0, 0, 0}},
            {"0101", 1, {0, 0, 0, 0}}, {"0110", 1, {0, 0, 0, 0}}};
  }
  if (family == "L_0_53") return {{"0000", 1, {}}, {"0101", 1, {}}, {"1000", 1, {}}, {"1110", 1, {}}};
  if (family == "L_0_71") return {{"0000", 1, {}}, {"1011", 1, {}}, {"1101", 1, {}}, {"1110", 1, {}}};
  if (family == "L_0_31_0_31") return {{"0000", 1, {}}, {"0111", 1, {}}};
  return {};
}

inline Vec family_state(const std::string& family, const std::vector<C>& p) {
  Vec v = Vec::Zero(16);
  for (const Term& t : family_terms(family)) {
    int idx = 0;
    for (int k = 0; k < 4; ++k) idx = 2 * idx + (t.bits[k] - '0');
    C amp = t.constant;
    for (std::size_t k = 0; k < p.size(); ++k) amp += t.coeff[k] * p[k];
    v[idx] += amp;
  }
  return v;
}

}  // namespace oracle
