#pragma once

#include <optional>
#include <string>

#include "wittflag/conditions.hpp"

namespace wittflag {

// Real / quaternionic / complex trichotomy of a fundamental representation.
struct RepType {
  enum Tag { Real, Quaternionic, ComplexPair } tag = Real;
  int partner = 0;  // the node [Sigma]a, set for ComplexPair
};

// ComplexPair([Sigma]a) when [Sigma]a != a; otherwise decided by the parity
// of <2 rho^vee, omega_a>: quaternionic iff odd. (The orientation is fixed by
// the classical type table; see the validation tests.)
RepType fundamental_rep_type(const RootDatum& rd, int node);

// Per-type counts: complex, real, quaternionic fundamental representations
// among the nodes of a subset.
struct TypeCounts {
  int complex_count = 0;  // b_C (counts both members of each pair)
  int real_count = 0;     // b_R
  int quat_count = 0;     // b_H
};
TypeCounts count_types(const RootDatum& rd, SubsetMask nodes);

// The unique I with (i) [Sigma] I = I, (ii) [Sigma] and [I] agreeing on I,
// (iii) w_o^H conjugate to w_o w_o^I in W. Throws TheoremViolation if zero or
// multiple candidates are found, BudgetExceeded if the conjugacy search
// overflows.
SubsetMask find_degree_subset_I(const RootDatum& rd, SubsetMask h_set,
                                long long budget = Limits{}.conjugacy_budget);

// Same search, with the conjugating element as evidence.
struct DegreeSubsetEvidence {
  SubsetMask i_set;
  std::vector<int> word;  // w with w * w_o^H * w^{-1} = w_o * w_o^I
  long long class_size = 0;
  int ell_plus = 0, ell_minus = 0;  // of w_o^H
};
DegreeSubsetEvidence find_degree_subset_I_with_evidence(
    const RootDatum& rd, SubsetMask h_set, long long budget = Limits{}.conjugacy_budget);

enum class WittStatus { Exterior, KnownNonExterior, Unknown };
enum class WittProvenance { Old, MainDegrees, F4, Registry, None };

const char* to_string(WittStatus s);
const char* to_string(WittProvenance p);

struct WittPresentation {
  WittStatus status = WittStatus::Unknown;
  int degree1_count = 0;
  int degree3_count = 0;
  std::optional<SubsetMask> parameter_I;
  WittProvenance provenance = WittProvenance::None;
  std::string note;  // registry annotations for documented special cases
};

// Decision tree:
//   1. F_4: exterior on 4 - |Sigma_H/[H]| generators, all of degree 3
//      (covers the one subset where the generic route fails).
//   2. Single cell: degrees from the type counts over the unique I.
//   3. Documented failures: the E_6/D_5 hermitian space (not an exterior
//      algebra) and the D_n/D_2k family (exterior, but with two generators
//      more than the generic count; left Unknown with a note).
//   4. Otherwise Unknown.
WittPresentation witt_presentation(const RootDatum& rd, SubsetMask h_set,
                                   const Limits& limits = {});

// The generic route only (skips the F_4 special case); used to cross-check
// that both paths agree wherever both apply.
WittPresentation witt_from_conditions(const RootDatum& rd, SubsetMask h_set,
                                      const Limits& limits = {});

}  // namespace wittflag
