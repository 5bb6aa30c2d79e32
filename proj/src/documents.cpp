#include "slocc4/documents.hpp"

#include <cmath>

namespace slocc4 {

using nlohmann::json;

namespace {

double finite_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite value");
  return x;
}

json complex_array(const std::array<Complex, 4>& values) {
  json out = json::array();
  for (const Complex& z : values) out.push_back(to_json(z));
  return out;
}

json complex_array(const std::vector<Complex>& values) {
  json out = json::array();
  for (const Complex& z : values) out.push_back(to_json(z));
  return out;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string qubit_key(std::initializer_list<int> qubits) {
  std::string key;
  for (int q : qubits) key += std::to_string(q + 1);
  return key;
}

StateDocument parse_state(const json& doc) {
  if (!doc.is_object()) throw ParseError("state document must be a JSON object");
  if (!doc.contains("amplitudes")) throw ParseError("state document has no \"amplitudes\" field");
  const json& amps = doc.at("amplitudes");
  if (!amps.is_array()) throw ParseError("\"amplitudes\" must be an array of [re, im] pairs");
  if (amps.size() != 16) {
    throw ParseError("expected 16 amplitude pairs, got " + std::to_string(amps.size()));
  }
  Vec16 v;
  for (std::size_t i = 0; i < 16; ++i) {
    const std::string where = "amplitude " + std::to_string(i);
    const json& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2) throw ParseError(where + ": expected [re, im]");
    v[static_cast<Eigen::Index>(i)] = {finite_number(pair[0], where + " (re)"),
                                       finite_number(pair[1], where + " (im)")};
  }
  if (!(v.squaredNorm() > 0.0)) throw ParseError("all 16 amplitudes are zero");

  StateDocument out;
  if (doc.contains("normalized")) {
    if (!doc.at("normalized").is_boolean()) throw ParseError("\"normalized\" must be a boolean");
    out.normalized = doc.at("normalized").get<bool>();
  }
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw ParseError("\"label\" must be a string");
    out.label = doc.at("label").get<std::string>();
  }
  out.state = PureState4(v);
  // Already unit to working precision: keep the bits so emit/parse round trips.
  if (out.normalized && std::abs(out.state.norm2() - 1.0) > 1e-15) out.state = out.state.normalized();
  return out;
}

StateDocument parse_state(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_state(doc);
}

json emit_state(const PureState4& state, const std::optional<std::string>& label, bool normalized) {
  json amps = json::array();
  for (int i = 0; i < 16; ++i) amps.push_back(to_json(state[i]));
  json out{{"amplitudes", amps}};
  if (normalized) out["normalized"] = true;
  if (label) out["label"] = *label;
  return out;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const MatX& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const SpectralSignature& sig) {
  return {
      {"quad", complex_array(sig.quad)},
      {"ordering", "decreasing |z|, then Re z, then Im z; Re >= 0 (ties Im >= 0)"},
      {"rrtEigenvalues", complex_array(sig.rrt_eigenvalues)},
      {"rawEigenvalues", complex_array(sig.raw_eigenvalues)},
      {"refined", sig.refined},
      {"norm", sig.norm2},
      {"detR", to_json(sig.det_R)},
  };
}

json to_json(const SegreCharacteristic& seg) {
  json clusters = json::array();
  for (const auto& c : seg.clusters) {
    clusters.push_back({{"eigenvalue", to_json(c.eigenvalue)}, {"blockSizes", c.block_sizes}});
  }
  return {
      {"clusters", clusters},
      {"nilpotentRanks", {seg.nilpotent_ranks.first, seg.nilpotent_ranks.second}},
      {"rankMargin", finite_or_null(seg.rank_margin)},
      {"clusterMargin", finite_or_null(seg.cluster_margin)},
  };
}

json to_json(const FamilyLabel& label) {
  const auto& d = label.diagnostics;
  static const char* pairings[3] = {"12|34", "13|24", "14|23"};
  json per_pairing = json::object();
  for (int k = 0; k < 3; ++k) per_pairing[pairings[k]] = d.pairing_labels[k];
  return {
      {"family", std::string(family_name(label.family))},
      {"params", complex_array(label.params)},
      {"diagnostics",
       {
           {"pairings", per_pairing},
           {"chosenPairing", pairings[d.chosen_pairing]},
           {"collapseRules", d.collapse_rules},
           {"rankMargin", finite_or_null(d.rank_margin)},
           {"clusterMargin", finite_or_null(d.cluster_margin)},
       }},
  };
}

json to_json(const LUNormalForm& nf) {
  return {
      {"normalR", to_json(MatX(nf.normal_R))},
      {"phase", to_json(nf.phase)},
      {"left", to_json(MatX(nf.left.cast<Complex>()))},
      {"right", to_json(MatX(nf.right.cast<Complex>()))},
      {"sigma", {nf.sigma[0], nf.sigma[1], nf.sigma[2], nf.sigma[3]}},
      {"degenerate", nf.degenerate},
      {"phaseGauge", std::string(to_string(nf.gauge))},
      {"gaugeInvariant",
       nf.gauge == PhaseGauge::trace_rrt || nf.gauge == PhaseGauge::trace_rrt_rrh},
  };
}

json to_json(const DistillationResult& r) {
  json filters = json::array();
  for (int q = 0; q < 4; ++q) filters.push_back(to_json(MatX(r.filters[q])));
  json out{
      {"status", std::string(to_string(r.status))},
      {"iterations", r.iterations},
      {"successProbability", r.success_probability},
      {"deviation", r.deviation},
      {"finalState", emit_state(r.final_state)},
      {"filters", filters},
  };
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json to_json(const EntanglementReport& rep) {
  json monotones = json::object();
  for (const auto& m : rep.monotones) monotones[std::to_string(m.alpha)] = m.value;
  json conc = json::object();
  for (const auto& c : rep.concurrences) conc[qubit_key({c.kept[0], c.kept[1]})] = c.value;
  json tangles = json::object();
  for (const auto& t : rep.tangles) {
    tangles[qubit_key({t.traced})] = {
        {"mean", t.stats.mean},
        {"stddev", t.stats.stddev},
        {"samples", t.stats.samples},
        {"canonical", t.stats.canonical},
        {"flat", t.flat},
    };
  }
  json out{
      {"signature", to_json(rep.signature)},
      {"monotones", monotones},
      {"concurrence", conc},
      {"sqrtTangleAverage", tangles},
      {"sqrtTangleNote",
       "sampled average of sqrt(tau) over random right-unitary mixings of the branch "
       "decomposition; decomposition-dependent unless flat"},
  };
  if (rep.segre) out["segre"] = to_json(*rep.segre);
  if (rep.family) {
    out["family"] = to_json(*rep.family);
  } else {
    out["family"] = {{"family", nullptr}, {"error", rep.family_error}};
  }
  return out;
}

}  // namespace slocc4
