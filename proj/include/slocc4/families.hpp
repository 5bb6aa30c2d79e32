#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "slocc4/state.hpp"

namespace slocc4 {

// The nine SLOCC families of four qubits, named after the Jordan structure
// of P (e.g. L_a2_0_31: J2 at +-a plus a degenerate (3,1) pair at zero).
enum class Family {
  G_abcd,
  L_abc2,
  L_a2b2,
  L_ab3,
  L_a4,
  L_a2_0_31,
  L_0_53,
  L_0_71,
  L_0_31_0_31,
};

inline constexpr std::array<Family, 9> kAllFamilies{
    Family::G_abcd, Family::L_abc2,    Family::L_a2b2, Family::L_ab3,       Family::L_a4,
    Family::L_a2_0_31, Family::L_0_53, Family::L_0_71, Family::L_0_31_0_31,
};

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);  // throws InvalidInput
int family_arity(Family f);

struct FamilySpec {
  Family family;
  std::vector<Complex> params;

  // Throws InvalidParameters when the parameter count does not match the
  // family's arity or a parameter is not finite.
  FamilySpec(Family f, std::vector<Complex> p);
};

// Normal-form representative with the printed (unnormalized) amplitudes.
// With normalize=true a zero-norm choice throws InvalidParameters.
PureState4 construct(const FamilySpec& spec, bool normalize = false);

enum class NamedState {
  product_0000,
  epr_00,
  two_epr,
  ghz3,
  w3,
  ghz4,
  phi4_cluster,
  w4,
  la4_companion,
};

struct CatalogEntry {
  NamedState id;
  std::string name;
  std::string description;
  Family expected_family;
  // Expected parameters in signature order; empty when the catalog makes no
  // claim about them.
  std::vector<Complex> expected_params;
};

const std::vector<CatalogEntry>& catalog();

// Normalized amplitudes. GHZ3 and W3 carry a fourth qubit in |0>.
PureState4 named_state(NamedState id);
PureState4 named_state(std::string_view name);  // throws InvalidInput

}  // namespace slocc4
