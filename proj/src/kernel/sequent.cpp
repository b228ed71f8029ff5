#include <array>

#include "lf/error.hpp"
#include "lf/kernel.hpp"

namespace lf {

bool alpha_equal(const Sequent& a, const Sequent& b) {
  if (a.assumptions.size() != b.assumptions.size()) return false;
  for (std::size_t i = 0; i < a.assumptions.size(); ++i) {
    if (!alpha_equal(a.assumptions[i], b.assumptions[i])) return false;
  }
  return alpha_equal(a.conclusion, b.conclusion);
}

std::string to_string(const Sequent& s, const PrintOptions& opts) {
  std::string out;
  for (std::size_t i = 0; i < s.assumptions.size(); ++i) {
    if (i) out += ", ";
    out += print(s.assumptions[i], opts);
  }
  if (!out.empty()) out += " ";
  out += opts.ascii ? "|- " : "⊢ ";
  out += print(s.conclusion, opts);
  return out;
}

namespace {

struct RuleNames {
  RuleId id;
  std::string_view name;
  std::string_view enum_name;
};

constexpr std::array<RuleNames, 13> kRules{{
    {RuleId::R1_Structural, "R.1", "R1_Structural"},
    {RuleId::R2_Beta, "R.2", "R2_Beta"},
    {RuleId::R3_UI, "R.3", "R3_UI"},
    {RuleId::R4_UG, "R.4", "R4_UG"},
    {RuleId::R5_NegElim, "R.5", "R5_NegElim"},
    {RuleId::R6_Intensionality, "R.6", "R6_Intensionality"},
    {RuleId::R7_FunExt, "R.7", "R7_FunExt"},
    {RuleId::R8_Choice, "R.8", "R8_Choice"},
    {RuleId::R9_PotInf, "R.9", "R9_PotInf"},
    {RuleId::V_ActualInfinityE, "ActualInfinityE", "V_ActualInfinityE"},
    {RuleId::V_HenkinExt, "HenkinExt", "V_HenkinExt"},
    {RuleId::V_ClassicismSubst, "ClassicismSubst", "V_ClassicismSubst"},
    {RuleId::V_ModalFunExt, "ModalFunExt", "V_ModalFunExt"},
}};

}  // namespace

std::string_view rule_name(RuleId id) {
  for (const RuleNames& r : kRules) {
    if (r.id == id) return r.name;
  }
  return "?";
}

RuleId parse_rule_id(std::string_view name) {
  for (const RuleNames& r : kRules) {
    if (name == r.name || name == r.enum_name) return r.id;
    // R1 .. R9
    if (r.name.size() == 3 && name.size() == 2 && name[0] == 'R' && name[1] == r.name[2]) return r.id;
  }
  fail(ErrorCode::UnknownRule, "'" + std::string(name) + "' is not a rule");
}

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> ids = [] {
    std::vector<RuleId> v;
    for (const RuleNames& r : kRules) v.push_back(r.id);
    return v;
  }();
  return ids;
}

std::string_view structural_name(Structural s) {
  switch (s) {
    case Structural::Hypothesis: return "hypothesis";
    case Structural::Contraction: return "contraction";
    case Structural::Weakening: return "weakening";
    case Structural::Exchange: return "exchange";
    case Structural::Cut: return "cut";
    case Structural::None: break;
  }
  return "";
}

}  // namespace lf
