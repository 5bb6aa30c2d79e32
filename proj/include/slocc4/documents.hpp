#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "slocc4/distill.hpp"
#include "slocc4/families.hpp"
#include "slocc4/lu_normal_form.hpp"
#include "slocc4/measures.hpp"
#include "slocc4/spectral.hpp"
#include "slocc4/state.hpp"

namespace slocc4 {

inline constexpr const char* kToolVersion = "0.1.0";

// {"amplitudes": [[re, im] x 16], "normalized": bool?, "label": string?}
// Amplitudes in big-endian basis order (index 8*i1 + 4*i2 + 2*i3 + i4).
struct StateDocument {
  PureState4 state;  // normalized on load when the flag is set
  bool normalized = false;
  std::optional<std::string> label;
};

// Throws ParseError naming the offending position or count.
StateDocument parse_state(const nlohmann::json& doc);
StateDocument parse_state(const std::string& text);

nlohmann::json emit_state(const PureState4& state, const std::optional<std::string>& label = {},
                          bool normalized = false);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const MatX& m);
nlohmann::json to_json(const SpectralSignature& sig);
nlohmann::json to_json(const SegreCharacteristic& seg);
nlohmann::json to_json(const FamilyLabel& label);
nlohmann::json to_json(const LUNormalForm& nf);
nlohmann::json to_json(const DistillationResult& result);
nlohmann::json to_json(const EntanglementReport& report);

// Qubit labels in documents are 1-based: {0, 2} -> "13".
std::string qubit_key(std::initializer_list<int> qubits);

}  // namespace slocc4
