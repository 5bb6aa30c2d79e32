#include "slocc4/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "slocc4/magic.hpp"
#include "slocc4/matrix.hpp"

namespace slocc4 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Square root with Re >= 0, ties broken towards Im >= 0.
Complex canonical_root(Complex s) {
  Complex r = std::sqrt(s);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return r;
}

bool signature_before(Complex x, Complex y) {
  if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
  if (x.real() != y.real()) return x.real() > y.real();
  return x.imag() > y.imag();
}

// All set partitions of {0..n-1}, coarsest first.
std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> label(n, 0);
  // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
  auto emit = [&] {
    const int blocks = n == 0 ? 0 : 1 + *std::max_element(label.begin(), label.end());
    std::vector<std::vector<int>> p(blocks);
    for (int i = 0; i < n; ++i) p[label[i]].push_back(i);
    out.push_back(std::move(p));
  };
  if (n == 0) {
    emit();
    return out;
  }
  for (;;) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(label.begin(), label.begin() + i);
      if (label[i] <= prefix_max) {
        ++label[i];
        std::fill(label.begin() + i + 1, label.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

struct Analysis {
  SegreCharacteristic segre;
  std::vector<Complex> eigenvalues;         // eig4 of R R^T, decreasing modulus
  std::vector<std::vector<int>> members;    // nonzero cluster -> indices into eigenvalues
  std::vector<Complex> means;               // nonzero cluster means
  int zero_count = 0;                       // zero eigenvalues of R R^T
};

int count_above(const MatX& m, double threshold) {
  Eigen::JacobiSVD<MatX> svd(m);
  const auto& s = svd.singularValues();
  int n = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > threshold) ++n;
  }
  return n;
}

Analysis analyze(const Mat4& r, const Tolerances& tol) {
  const Mat8 p = to_P(r);
  Eigen::JacobiSVD<Mat8> psvd(p);
  const double smax = psvd.singularValues()[0];
  if (!(smax > 0.0)) throw InvalidInput("state is zero");
  const double threshold = tol.rank * smax;

  Analysis out;
  SegreCharacteristic& seg = out.segre;

  const Staircase zero = null_space_staircase(p, threshold);
  double rank_margin = zero.margin;
  const int m0 = zero.multiplicity();
  if (m0 > 0) {
    seg.zero_blocks = zero.block_sizes();
    if (seg.zero_blocks.empty()) {
      throw AmbiguousClassification("inconsistent kernel staircase at eigenvalue 0");
    }
  }
  if (m0 % 2 != 0) {
    throw AmbiguousClassification("odd multiplicity of the zero eigenvalue of P");
  }
  const int n_nz = (8 - m0) / 2;

  const auto ev = eig4(r * r.transpose());
  out.eigenvalues.assign(ev.begin(), ev.end());
  std::stable_sort(out.eigenvalues.begin(), out.eigenvalues.end(),
                   [](Complex x, Complex y) { return std::abs(x) > std::abs(y); });
  out.zero_count = 4 - n_nz;

  double smax_ev = 0.0;
  for (int i = 0; i < n_nz; ++i) smax_ev = std::max(smax_ev, std::abs(out.eigenvalues[i]));
  const double scale = 1.0 + smax_ev;

  bool accepted = false;
  for (const auto& partition : set_partitions(n_nz)) {
    std::vector<Complex> means;
    bool admissible = true;
    for (const auto& block : partition) {
      Complex mean = 0.0;
      for (int i : block) mean += out.eigenvalues[i];
      mean /= static_cast<double>(block.size());
      double spread = 0.0;
      for (int i : block) spread = std::max(spread, std::abs(out.eigenvalues[i] - mean));
      const double radius = std::pow(tol.cluster, 1.0 / static_cast<double>(block.size())) * scale;
      if (spread > radius) {
        admissible = false;
        break;
      }
      means.push_back(mean);
    }
    if (!admissible) continue;

    std::vector<SegreCluster> clusters;
    double margin = rank_margin;
    bool consistent = true;
    for (std::size_t c = 0; c < partition.size() && consistent; ++c) {
      const Complex lambda = canonical_root(means[c]);
      const Mat8 shifted = p - lambda * Mat8::Identity();
      const Mat8 mirrored = p + lambda * Mat8::Identity();
      const Staircase plus = null_space_staircase(shifted, threshold);
      const Staircase minus = null_space_staircase(mirrored, threshold);
      const auto sizes = plus.block_sizes();
      consistent = plus.multiplicity() == static_cast<int>(partition[c].size()) && !sizes.empty() &&
                   minus.block_sizes() == sizes;
      margin = std::min({margin, plus.margin, minus.margin});
      clusters.push_back({lambda, sizes});
    }
    if (!consistent) continue;

    accepted = true;
    seg.nonzero = clusters;
    out.members = partition;
    out.means = means;
    rank_margin = margin;
    double sep = kInf;
    for (std::size_t i = 0; i < means.size(); ++i) {
      for (std::size_t j = i + 1; j < means.size(); ++j) sep = std::min(sep, std::abs(means[i] - means[j]));
      if (m0 > 0) sep = std::min(sep, std::abs(means[i]));  // distance to the zero cluster
    }
    seg.cluster_margin = sep / (tol.cluster * scale);
    break;
  }
  if (!accepted) {
    throw AmbiguousClassification("no eigenvalue clustering reproduces the Jordan multiplicities");
  }
  seg.rank_margin = rank_margin;

  // Order nonzero clusters by signature convention.
  std::vector<std::size_t> order(seg.nonzero.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return signature_before(seg.nonzero[i].eigenvalue, seg.nonzero[j].eigenvalue);
  });
  std::vector<SegreCluster> nz;
  std::vector<std::vector<int>> members;
  std::vector<Complex> means;
  for (std::size_t i : order) {
    nz.push_back(seg.nonzero[i]);
    members.push_back(out.members[i]);
    means.push_back(out.means[i]);
  }
  seg.nonzero = nz;
  out.members = members;
  out.means = means;

  if (m0 > 0) seg.clusters.push_back({0.0, seg.zero_blocks});
  for (const auto& c : seg.nonzero) {
    seg.clusters.push_back(c);
    seg.clusters.push_back({-c.eigenvalue, c.block_sizes});
  }

  const double t2 = tol.rank * smax * smax;
  seg.nilpotent_ranks = {count_above(r * r.transpose(), t2) - n_nz,
                         count_above(r.transpose() * r, t2) - n_nz};
  return out;
}

bool same_structure(const SegreCharacteristic& a, const SegreCharacteristic& b) {
  if (a.zero_blocks != b.zero_blocks || a.nilpotent_ranks != b.nilpotent_ranks) return false;
  auto shapes = [](const SegreCharacteristic& s) {
    std::vector<std::vector<int>> v;
    for (const auto& c : s.nonzero) v.push_back(c.block_sizes);
    std::sort(v.begin(), v.end());
    return v;
  };
  return shapes(a) == shapes(b);
}

std::string describe(const SegreCharacteristic& s) {
  std::string out = "zero:[";
  for (std::size_t i = 0; i < s.zero_blocks.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s.zero_blocks[i]);
  }
  out += "]";
  for (const auto& c : s.nonzero) {
    out += " nonzero:[";
    for (std::size_t i = 0; i < c.block_sizes.size(); ++i) {
      out += (i ? "," : "") + std::to_string(c.block_sizes[i]);
    }
    out += "]";
  }
  return out;
}

// Jordan analysis at tol and 2*tol; disagreement is reported as ambiguity.
Analysis analyze_checked(const Mat4& r, const Tolerances& tol) {
  Analysis a = analyze(r, tol);
  Analysis b;
  try {
    b = analyze(r, {2.0 * tol.cluster, 2.0 * tol.rank});
  } catch (const AmbiguousClassification& e) {
    throw AmbiguousClassification("structure " + describe(a.segre) +
                                  " is not stable at twice the tolerance: " + e.what());
  }
  if (!same_structure(a.segre, b.segre)) {
    throw AmbiguousClassification("structure " + describe(a.segre) + " at tolerance versus " +
                                  describe(b.segre) + " at twice the tolerance");
  }
  return a;
}

Mat4 normalized_R(const PureState4& state) {
  const double n2 = state.norm2();
  if (!(n2 > 1e-24) || !std::isfinite(n2)) throw InvalidInput("state norm is below tolerance");
  return to_R(state).entries / std::sqrt(n2);
}

constexpr std::array<std::array<int, 4>, 3> kPairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 2, 1}}};

int specificity(Family f) {
  switch (f) {
    case Family::L_0_71: return 8;
    case Family::L_0_53: return 7;
    case Family::L_0_31_0_31: return 6;
    case Family::L_a2_0_31: return 5;
    case Family::L_a4: return 4;
    case Family::L_ab3: return 3;
    case Family::L_a2b2: return 2;
    case Family::L_abc2: return 1;
    case Family::G_abcd: return 0;
  }
  return 0;
}

}  // namespace

SpectralSignature signature(const PureState4& state, const Tolerances& tol) {
  SpectralSignature sig;
  sig.norm2 = state.norm2();
  const Mat4 r = to_R(state).entries;
  sig.det_R = r.determinant();
  const Mat4 rn = normalized_R(state);

  std::vector<Complex> values;
  try {
    const Analysis a = analyze_checked(rn, tol);
    values.assign(4, 0.0);
    for (std::size_t c = 0; c < a.members.size(); ++c) {
      for (int i : a.members[c]) values[i] = a.means[c];
    }
    for (int i = 0; i < 4; ++i) sig.raw_eigenvalues[i] = a.eigenvalues[i] * sig.norm2;
    sig.refined = true;
  } catch (const AmbiguousClassification&) {
    const auto ev = eig4(rn * rn.transpose());
    values.assign(ev.begin(), ev.end());
    for (int i = 0; i < 4; ++i) sig.raw_eigenvalues[i] = ev[i] * sig.norm2;
  }
  std::vector<Complex> roots;
  for (Complex s : values) roots.push_back(canonical_root(s * sig.norm2));
  std::stable_sort(roots.begin(), roots.end(), signature_before);
  for (int i = 0; i < 4; ++i) {
    sig.quad[i] = roots[i];
    sig.rrt_eigenvalues[i] = roots[i] * roots[i];
  }
  return sig;
}

SegreCharacteristic segre(const PureState4& state, const Tolerances& tol) {
  return analyze_checked(normalized_R(state), tol).segre;
}

FamilyLabel family_from_segre(const SegreCharacteristic& seg) {
  struct Block {
    int size;
    Complex value;
    int cluster;  // -1 for the zero cluster
  };
  std::vector<Block> jordan;
  for (std::size_t c = 0; c < seg.nonzero.size(); ++c) {
    for (int m : seg.nonzero[c].block_sizes) {
      jordan.push_back({m, seg.nonzero[c].eigenvalue, static_cast<int>(c)});
    }
  }

  std::vector<std::pair<int, int>> kblocks;
  std::vector<std::string> rules;
  std::vector<int> z = seg.zero_blocks;
  std::sort(z.rbegin(), z.rend());
  const bool asymmetric = seg.nilpotent_ranks.first != seg.nilpotent_ranks.second;
  if (z == std::vector<int>{3, 3, 1, 1} && asymmetric) {
    kblocks = {{3, 1}, {3, 1}};
    rules.push_back("zero blocks (3,3,1,1) with asymmetric nilpotent ranks read as K31 + K31");
  } else {
    std::vector<int> leftover;
    for (std::size_t i = 0; i < z.size();) {
      if (i + 1 < z.size() && z[i] == z[i + 1]) {
        jordan.push_back({z[i], 0.0, -1});
        i += 2;
      } else {
        leftover.push_back(z[i]);
        ++i;
      }
    }
    if (leftover.size() % 2 != 0) {
      throw AmbiguousClassification("unpaired zero Jordan block of P: " + describe(seg));
    }
    for (std::size_t i = 0; i < leftover.size(); i += 2) {
      const int hi = leftover[i];
      const int lo = leftover[i + 1];
      if (hi % 2 == 0 || lo % 2 == 0) {
        throw AmbiguousClassification("even-sized degenerate zero pair: " + describe(seg));
      }
      kblocks.push_back({hi, lo});
    }
  }

  std::stable_sort(jordan.begin(), jordan.end(), [](const Block& a, const Block& b) {
    if (a.size != b.size) return a.size > b.size;
    return signature_before(a.value, b.value);
  });
  std::vector<int> sizes;
  for (const auto& b : jordan) sizes.push_back(b.size);
  using V = std::vector<int>;

  FamilyLabel label{Family::G_abcd, {}, {}};
  auto values = [&](std::initializer_list<int> idx) {
    std::vector<Complex> out;
    for (int i : idx) out.push_back(jordan[i].value);
    return out;
  };
  auto sorted_values = [&] {
    std::vector<Complex> out;
    for (const auto& b : jordan) out.push_back(b.value);
    std::stable_sort(out.begin(), out.end(), signature_before);
    return out;
  };

  if (kblocks.empty()) {
    if (sizes == V{1, 1, 1, 1}) {
      label.family = Family::G_abcd;
      label.params = sorted_values();
    } else if (sizes == V{2, 1, 1}) {
      // A (2,1) pair on a common nonzero eigenvalue with a separate J1 is the
      // L_ab3 orbit; otherwise the 2-block stands alone (L_abc2).
      const bool shared1 = jordan[1].cluster >= 0 && jordan[1].cluster == jordan[0].cluster;
      const bool shared2 = jordan[2].cluster >= 0 && jordan[2].cluster == jordan[0].cluster;
      if (shared1 != shared2) {
        label.family = Family::L_ab3;
        const int other = shared1 ? 2 : 1;
        label.params = values({other, 0});
        rules.push_back("J2(b) + J1(b) + J1(a) identified with J3(b) + J1(a)");
      } else {
        label.family = Family::L_abc2;
        std::vector<Complex> ab{jordan[1].value, jordan[2].value};
        std::stable_sort(ab.begin(), ab.end(), signature_before);
        label.params = {ab[0], ab[1], jordan[0].value};
      }
    } else if (sizes == V{2, 2}) {
      label.family = Family::L_a2b2;
      label.params = sorted_values();
    } else if (sizes == V{3, 1}) {
      label.family = Family::L_ab3;
      label.params = values({1, 0});
    } else if (sizes == V{4}) {
      label.family = Family::L_a4;
      label.params = values({0});
    } else {
      throw AmbiguousClassification("Jordan structure outside the nine families: " + describe(seg));
    }
  } else if (kblocks == std::vector<std::pair<int, int>>{{3, 1}} && sizes == V{2}) {
    label.family = Family::L_a2_0_31;
    label.params = values({0});
  } else if (kblocks == std::vector<std::pair<int, int>>{{3, 1}} && sizes == V{1, 1}) {
    label.family = Family::L_a2b2;
    label.params = sorted_values();
    rules.push_back("J1(a) + J1(b) + K31 -> L_a2b2 (qubit permutation)");
  } else if (kblocks == std::vector<std::pair<int, int>>{{5, 1}} && sizes == V{1}) {
    label.family = Family::L_a4;
    label.params = values({0});
    rules.push_back("J1(a) + K51 -> J4(a)");
  } else if (kblocks == std::vector<std::pair<int, int>>{{5, 3}} && sizes.empty()) {
    label.family = Family::L_0_53;
  } else if (kblocks == std::vector<std::pair<int, int>>{{7, 1}} && sizes.empty()) {
    label.family = Family::L_0_71;
  } else if (kblocks == std::vector<std::pair<int, int>>{{3, 1}, {3, 1}} && sizes.empty()) {
    label.family = Family::L_0_31_0_31;
  } else {
    throw AmbiguousClassification("Jordan structure outside the nine families: " + describe(seg));
  }
  label.diagnostics.collapse_rules = rules;
  label.diagnostics.rank_margin = seg.rank_margin;
  label.diagnostics.cluster_margin = seg.cluster_margin;
  return label;
}

FamilyLabel classify(const PureState4& state, const Tolerances& tol) {
  const double n2 = state.norm2();
  if (!(n2 > 1e-24) || !std::isfinite(n2)) throw InvalidInput("state norm is below tolerance");

  std::array<FamilyLabel, 3> labels{FamilyLabel{Family::G_abcd, {}, {}},
                                    FamilyLabel{Family::G_abcd, {}, {}},
                                    FamilyLabel{Family::G_abcd, {}, {}}};
  for (int k = 0; k < 3; ++k) {
    const PureState4 permuted = permute_qubits(state, QubitPermutation(kPairings[k]));
    try {
      labels[k] = family_from_segre(segre(permuted, tol));
    } catch (const AmbiguousClassification& e) {
      static const char* names[3] = {"12|34", "13|24", "14|23"};
      throw AmbiguousClassification(std::string("pairing ") + names[k] + ": " + e.what());
    }
  }
  // Qubit permutations only shuffle the three pairings, so picking the
  // largest parameters among the most specific labels keeps the whole label
  // permutation invariant.
  auto larger_params = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    constexpr double eps = 1e-9;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double keys_a[3] = {std::abs(a[i]), a[i].real(), a[i].imag()};
      const double keys_b[3] = {std::abs(b[i]), b[i].real(), b[i].imag()};
      for (int k = 0; k < 3; ++k) {
        if (keys_a[k] > keys_b[k] + eps) return true;
        if (keys_a[k] < keys_b[k] - eps) return false;
      }
    }
    return false;
  };
  int best = 0;
  for (int k = 1; k < 3; ++k) {
    const int sk = specificity(labels[k].family), sb = specificity(labels[best].family);
    if (sk > sb || (sk == sb && larger_params(labels[k].params, labels[best].params))) best = k;
  }
  FamilyLabel out = labels[best];
  out.diagnostics.chosen_pairing = best;
  out.diagnostics.rank_margin = kInf;
  out.diagnostics.cluster_margin = kInf;
  for (int k = 0; k < 3; ++k) {
    out.diagnostics.pairing_labels[k] = std::string(family_name(labels[k].family));
    out.diagnostics.rank_margin = std::min(out.diagnostics.rank_margin, labels[k].diagnostics.rank_margin);
    out.diagnostics.cluster_margin =
        std::min(out.diagnostics.cluster_margin, labels[k].diagnostics.cluster_margin);
  }
  if (best != 0) {
    out.diagnostics.collapse_rules.push_back(
        std::string("label taken from qubit pairing ") + (best == 1 ? "13|24" : "14|23") +
        " (most specific structure, then largest parameters)");
  }
  return out;
}

}  // namespace slocc4
