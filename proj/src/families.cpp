#include "slocc4/families.hpp"

#include <cmath>

namespace slocc4 {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
};

constexpr std::array<FamilyInfo, 9> kInfo{{
    {Family::G_abcd, "G_abcd", 4},
    {Family::L_abc2, "L_abc2", 3},
    {Family::L_a2b2, "L_a2b2", 2},
    {Family::L_ab3, "L_ab3", 2},
    {Family::L_a4, "L_a4", 1},
    {Family::L_a2_0_31, "L_a2_0_31", 1},
    {Family::L_0_53, "L_0_53", 0},
    {Family::L_0_71, "L_0_71", 0},
    {Family::L_0_31_0_31, "L_0_31_0_31", 0},
}};

const FamilyInfo& info(Family f) { return kInfo[static_cast<std::size_t>(f)]; }

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

int family_arity(Family f) { return info(f).arity; }

Family family_from_name(std::string_view name) {
  for (const auto& i : kInfo) {
    if (i.name == name) return i.family;
  }
  throw InvalidInput("unknown family: " + std::string(name));
}

FamilySpec::FamilySpec(Family f, std::vector<Complex> p) : family(f), params(std::move(p)) {
  if (static_cast<int>(params.size()) != family_arity(f)) {
    throw InvalidParameters(std::string(family_name(f)) + " takes " +
                            std::to_string(family_arity(f)) + " parameters, got " +
                            std::to_string(params.size()));
  }
  for (const Complex& z : params) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidParameters("family parameters must be finite");
    }
  }
}

PureState4 construct(const FamilySpec& spec, bool normalize) {
  const auto& p = spec.params;
  const Complex a = p.size() > 0 ? p[0] : 0.0;
  const Complex b = p.size() > 1 ? p[1] : 0.0;
  const Complex c = p.size() > 2 ? p[2] : 0.0;
  const Complex d = p.size() > 3 ? p[3] : 0.0;
  const Complex h = kI * M_SQRT1_2;

  PureState4 s;
  switch (spec.family) {
    case Family::G_abcd:
      s = PureState4::from_terms({{(a + d) / 2.0, "0000"}, {(a + d) / 2.0, "1111"},
                                  {(a - d) / 2.0, "0011"}, {(a - d) / 2.0, "1100"},
                                  {(b + c) / 2.0, "0101"}, {(b + c) / 2.0, "1010"},
                                  {(b - c) / 2.0, "0110"}, {(b - c) / 2.0, "1001"}});
      break;
    case Family::L_abc2:
      s = PureState4::from_terms({{(a + b) / 2.0, "0000"}, {(a + b) / 2.0, "1111"},
                                  {(a - b) / 2.0, "0011"}, {(a - b) / 2.0, "1100"},
                                  {c, "0101"}, {c, "1010"}, {1.0, "0110"}});
      break;
    case Family::L_a2b2:
      s = PureState4::from_terms({{a, "0000"}, {a, "1111"}, {b, "0101"}, {b, "1010"},
                                  {1.0, "0110"}, {1.0, "0011"}});
      break;
    case Family::L_ab3:
      s = PureState4::from_terms({{a, "0000"}, {a, "1111"},
                                  {(a + b) / 2.0, "0101"}, {(a + b) / 2.0, "1010"},
                                  {(a - b) / 2.0, "0110"}, {(a - b) / 2.0, "1001"},
                                  {h, "0001"}, {h, "0010"}, {h, "0111"}, {h, "1011"}});
      break;
    case Family::L_a4:
      s = PureState4::from_terms({{a, "0000"}, {a, "0101"}, {a, "1010"}, {a, "1111"},
                                  {kI, "0001"}, {1.0, "0110"}, {-kI, "1011"}});
      break;
    case Family::L_a2_0_31:
      s = PureState4::from_terms({{a, "0000"}, {a, "1111"}, {1.0, "0011"}, {1.0, "0101"},
                                  {1.0, "0110"}});
      break;
    case Family::L_0_53:
      s = PureState4::from_terms({{1.0, "0000"}, {1.0, "0101"}, {1.0, "1000"}, {1.0, "1110"}});
      break;
    case Family::L_0_71:
      s = PureState4::from_terms({{1.0, "0000"}, {1.0, "1011"}, {1.0, "1101"}, {1.0, "1110"}});
      break;
    case Family::L_0_31_0_31:
      s = PureState4::from_terms({{1.0, "0000"}, {1.0, "0111"}});
      break;
  }
  if (!normalize) return s;
  if (!(s.norm2() > 0.0)) {
    throw InvalidParameters(std::string(family_name(spec.family)) +
                            ": parameters give a zero-norm state");
  }
  return s.normalized();
}

const std::vector<CatalogEntry>& catalog() {
  const double h = M_SQRT1_2;
  static const std::vector<CatalogEntry> entries{
      {NamedState::product_0000, "product_0000", "|0000>", Family::L_abc2, {0.0, 0.0, 0.0}},
      {NamedState::epr_00, "epr_00", "(|00>+|11>)/sqrt2 (x) |00>", Family::L_a2b2, {0.0, 0.0}},
      {NamedState::two_epr, "two_epr", "(|00>+|11>)(|00>+|11>)/2", Family::G_abcd,
       {1.0, 0.0, 0.0, 0.0}},
      {NamedState::ghz3, "ghz3", "(|000>+|111>)/sqrt2 (x) |0>", Family::L_0_31_0_31, {}},
      {NamedState::w3, "w3", "(|001>+|010>+|100>)/sqrt3 (x) |0>", Family::L_a2_0_31, {0.0}},
      {NamedState::ghz4, "ghz4", "(|0000>+|1111>)/sqrt2", Family::G_abcd, {h, h, 0.0, 0.0}},
      {NamedState::phi4_cluster, "phi4_cluster", "(|0000>+|0011>+|1100>-|1111>)/2",
       Family::G_abcd, {}},
      {NamedState::w4, "w4", "(|0001>+|0010>+|0100>+|1000>)/2", Family::L_ab3, {0.0, 0.0}},
      {NamedState::la4_companion, "la4_companion", "(|0001>+|0110>+|1000>)/sqrt3", Family::L_a4,
       {0.0}},
  };
  return entries;
}

PureState4 named_state(NamedState id) {
  switch (id) {
    case NamedState::product_0000:
      return PureState4::basis(0);
    case NamedState::epr_00:
      return PureState4::from_terms({{1.0, "0000"}, {1.0, "1100"}}).normalized();
    case NamedState::two_epr:
      return PureState4::from_terms({{1.0, "0000"}, {1.0, "0011"}, {1.0, "1100"}, {1.0, "1111"}})
          .normalized();
    case NamedState::ghz3:
      return PureState4::from_terms({{1.0, "0000"}, {1.0, "1110"}}).normalized();
    case NamedState::w3:
      return PureState4::from_terms({{1.0, "0010"}, {1.0, "0100"}, {1.0, "1000"}}).normalized();
    case NamedState::ghz4:
      return PureState4::from_terms({{1.0, "0000"}, {1.0, "1111"}}).normalized();
    case NamedState::phi4_cluster:
      return PureState4::from_terms({{1.0, "0000"}, {1.0, "0011"}, {1.0, "1100"}, {-1.0, "1111"}})
          .normalized();
    case NamedState::w4:
      return PureState4::from_terms({{1.0, "0001"}, {1.0, "0010"}, {1.0, "0100"}, {1.0, "1000"}})
          .normalized();
    case NamedState::la4_companion:
      return PureState4::from_terms({{1.0, "0001"}, {1.0, "0110"}, {1.0, "1000"}}).normalized();
  }
  throw InvalidInput("unknown named state");
}

PureState4 named_state(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return named_state(e.id);
  }
  throw InvalidInput("unknown named state: " + std::string(name));
}

}  // namespace slocc4
