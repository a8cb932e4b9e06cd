#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmwb/arrangement.hpp"
#include "dmwb/datasets.hpp"
#include "dmwb/errors.hpp"
#include "dmwb/lattice_params.hpp"
#include "dmwb/triangle_groups.hpp"

namespace dmwb {

enum class HybridOutcome {
  Case1ArithmeticCommensurable,
  Case2Hybrid,
  Case3NonArithmeticStabilizer,
  NotApplicable,
};

inline std::string outcome_name(HybridOutcome o) {
  switch (o) {
    case HybridOutcome::Case1ArithmeticCommensurable: return "Case1-ArithmeticCommensurable";
    case HybridOutcome::Case2Hybrid: return "Case2-Hybrid";
    case HybridOutcome::Case3NonArithmeticStabilizer: return "Case3-NonArithmeticStabilizer";
    default: return "NotApplicable";
  }
}

/// Stabilizer of one line of an orthogonal pair, or a collapse marker when
/// the divisor is blown down.
struct StabilizerOutcome {
  ExtOrder divisor_order;
  bool collapsed;
  std::optional<TriangleSignature> signature;  // absent iff collapsed
  std::optional<int> class_id;                 // set when arithmetic

  std::string str() const {
    if (collapsed) return "collapsed";
    return signature->str();
  }
};

/// Trichotomy verdict for one orthogonal divisor pair.
struct HybridVerdict {
  std::pair<DivisorId, DivisorId> pair;
  StabilizerOutcome first;
  StabilizerOutcome second;
  HybridOutcome outcome;
  bool theorem_scope;  // ambient lattice flagged nonarithmetic
  std::string note;    // reason for NotApplicable, empty otherwise
};

/// The orthogonal pair along which the paper's construction hybridises:
/// (D01, E3) for 3-fold lattices, (D03, E1) for 2-fold (the pair whose
/// stabilizers realize Delta(2,p',l) and Delta(k,p,k')).  Family rule only;
/// parameter independent.  Always among orthogonal_pairs.
inline std::pair<DivisorId, DivisorId> designated_pair(const LatticeSpec& spec) {
  if (spec.is_three_fold()) return {DivisorId::D01, DivisorId::E3};
  return {DivisorId::D03, DivisorId::E1};
}

namespace detail {
inline StabilizerOutcome stabilizer_outcome(DivisorId divisor, const LatticeSpec& spec,
                                            const WeightAssignment& w) {
  StabilizerOutcome out{w.branched.at(divisor), false, std::nullopt, std::nullopt};
  if (out.divisor_order.is_negative()) {
    out.collapsed = true;
    return out;
  }
  out.signature = stabilizer(divisor, spec);
  return out;
}
} // namespace detail

/// Applies the trichotomy to one orthogonal pair.  Degenerate pairs (a
/// blown-down divisor, a cusp order in a signature, a signature with a
/// collapse-adjacent entry) are NotApplicable verdicts, never errors.
inline HybridVerdict classify_pair(const LatticeSpec& spec,
                                   std::pair<DivisorId, DivisorId> pair,
                                   const ArithmeticClassTable& classes,
                                   const LatticeFlags& flags) {
  const WeightAssignment w = weights_from_spec(spec);
  HybridVerdict v{pair,
                  detail::stabilizer_outcome(pair.first, spec, w),
                  detail::stabilizer_outcome(pair.second, spec, w),
                  HybridOutcome::NotApplicable,
                  flags.at(spec) == LatticeFlag::NonArithmetic,
                  ""};

  auto degenerate = [](const StabilizerOutcome& s, std::string& note) {
    if (s.collapsed) { note = "blown-down divisor"; return true; }
    if (s.signature->contains_infinity()) { note = "cusp order in stabilizer"; return true; }
    if (!s.signature->valid()) { note = "collapse-adjacent stabilizer"; return true; }
    if (!is_hyperbolic(*s.signature)) { note = "non-hyperbolic stabilizer"; return true; }
    return false;
  };
  if (degenerate(v.first, v.note) || degenerate(v.second, v.note)) return v;

  ArithmeticVerdict a1 = classify_arithmetic(classes, *v.first.signature);
  ArithmeticVerdict a2 = classify_arithmetic(classes, *v.second.signature);
  v.first.class_id = a1.class_id;
  v.second.class_id = a2.class_id;
  if (!a1.arithmetic || !a2.arithmetic) {
    v.outcome = HybridOutcome::Case3NonArithmeticStabilizer;
  } else if (*a1.class_id == *a2.class_id) {
    v.outcome = HybridOutcome::Case1ArithmeticCommensurable;
  } else {
    v.outcome = HybridOutcome::Case2Hybrid;
  }
  return v;
}

/// Verdicts for all 15 orthogonal pairs, in the deterministic pair order.
inline std::vector<HybridVerdict> scan_pairs(const LatticeSpec& spec,
                                             const ArithmeticClassTable& classes,
                                             const LatticeFlags& flags) {
  static const BlownArrangement arr = build_quadrilateral();
  std::vector<HybridVerdict> out;
  for (const auto& pair : orthogonal_pairs(arr))
    out.push_back(classify_pair(spec, pair, classes, flags));
  return out;
}

} // namespace dmwb
