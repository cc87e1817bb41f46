#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cgsb/lie_data.hpp"
#include "cgsb/rules.hpp"

namespace cgsb {

/// Locality bound N(a,b) on pairs of generator indices.
using Locality = std::function<long(std::size_t, std::size_t)>;
Locality constant_locality(long n);

Alphabet alphabet_of(const LieData& lie);

/// Operator-algebra rules for the Kac–Moody case under deg-lex:
/// ∂L_0, ∂L_1, L_n∂ (n≥2), R_n∂, RL commutation, LL straightening with bracket.
RuleSet preset_ax(const LieData& lie);

/// Free conformal algebra on `alphabet` with locality N, weighted order:
/// L∂, R∂, RL, the locality consequences L_n^aL_m^b (n≥N(a,b)) as
/// annihilator rules, L_n^a b -> 0 and the R_m^a b expansion.
RuleSet preset_conf(const Alphabet& alphabet, const Locality& N);

/// Kac–Moody envelope at N=3: rules A, B, C, the e-rules and every GSB family.
RuleSet preset_u3(const LieData& lie);
/// Rules A, B, C and the e-rules only (input of the rediscovery run).
RuleSet preset_u3_base(const LieData& lie);
/// Kac–Moody envelope at N=2. Two rules differ from the printed list:
/// L1D has s+1 (printed: 2) on L_0^a∂^{s-1}b, and L0L1 has 2<a|[b,c]>e
/// (printed: <a|[b,c]>e). `as_printed` restores the printed coefficients.
RuleSet preset_u2(const LieData& lie, bool as_printed = false);
/// Rules A, B, C with L_n, R_n killed for n≥2 (relations of the N=2 envelope
/// before completion; used by the dimension oracle).
RuleSet preset_u2_base(const LieData& lie);

/// One generator a, N=2, defining relation L_1 a -> ∂L_0 a.
RuleSet preset_bfk();

/// Family ids of the rules added by the GSB theorems, for comparisons.
const std::vector<std::string>& u3_gsb_families();

struct PresetOptions {
  std::string name;                    // ax | conf | u3 | u2 | u2-printed | bfk | u3-base | u2-base
  std::shared_ptr<const LieData> lie;  // required except for bfk
  long locality = 2;                   // conf only
  bool as_printed = false;             // u2 only
};
RuleSet make_preset(const PresetOptions& opt);
const std::vector<std::string>& preset_names();

}  // namespace cgsb
