#include "wittflag/rep_types.hpp"

#include <algorithm>

namespace wittflag {

const char* to_string(WittStatus s) {
  switch (s) {
    case WittStatus::Exterior: return "exterior";
    case WittStatus::KnownNonExterior: return "known-non-exterior";
    case WittStatus::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(WittProvenance p) {
  switch (p) {
    case WittProvenance::Old: return "full-flag";
    case WittProvenance::MainDegrees: return "single-cell";
    case WittProvenance::F4: return "f4";
    case WittProvenance::Registry: return "registry";
    case WittProvenance::None: return "none";
  }
  return "?";
}

RepType fundamental_rep_type(const RootDatum& rd, int node) {
  SubsetMask sigma = SubsetMask::full(rd.rank());
  int partner = duality_node_image(rd, sigma, node);
  if (partner != node) return {RepType::ComplexPair, partner};
  long long p = rd.two_rho_covector().coord(node);
  return {(p % 2 != 0) ? RepType::Quaternionic : RepType::Real, node};
}

TypeCounts count_types(const RootDatum& rd, SubsetMask nodes) {
  TypeCounts c;
  for (int a = 1; a <= rd.rank(); ++a) {
    if (!nodes.contains(a)) continue;
    RepType t = fundamental_rep_type(rd, a);
    switch (t.tag) {
      case RepType::Real: ++c.real_count; break;
      case RepType::Quaternionic: ++c.quat_count; break;
      case RepType::ComplexPair: ++c.complex_count; break;
    }
  }
  return c;
}

DegreeSubsetEvidence find_degree_subset_I_with_evidence(const RootDatum& rd, SubsetMask h_set,
                                                        long long budget) {
  const int n = rd.rank();
  SubsetMask sigma = SubsetMask::full(n);
  IntMat woh = longest_element(rd, h_set).m;  // w_o^H
  IntMat wo = longest_element(rd, sigma).m;
  ConjugacyOrbit orbit(rd, woh, budget);
  int lp = ell_plus_of(woh);

  std::vector<SubsetMask> matches;
  for (unsigned b = 0; b < (1u << n); ++b) {
    SubsetMask i_set(b);
    if (duality_subset_image(rd, sigma, i_set) != i_set) continue;  // (i)
    bool agree = true;                                              // (ii)
    for (int a = 1; a <= n; ++a)
      if (i_set.contains(a) &&
          duality_node_image(rd, i_set, a) != duality_node_image(rd, sigma, a))
        agree = false;
    if (!agree) continue;
    IntMat cand = wo.mul(longest_element(rd, i_set).m);  // (iii)
    if (!cand.mul(cand).is_identity()) continue;
    if (ell_plus_of(cand) != lp) continue;
    if (orbit.contains(cand)) matches.push_back(i_set);
  }
  if (matches.size() != 1) {
    std::string msg = "degree subset I is not unique for H = " + h_set.mask_string(n) + " in " +
                      rd.type().str() + ": found " + std::to_string(matches.size()) +
                      " candidates";
    for (auto m : matches) msg += " " + m.mask_string(n);
    throw TheoremViolation(msg);
  }
  SubsetMask i_set = matches.front();
  int need = duality_orbit_count(rd, sigma) - duality_orbit_count(rd, h_set);
  if (sigma_orbit_count(rd, i_set) != need)
    throw TheoremViolation("degree subset I has the wrong orbit count for H = " +
                           h_set.mask_string(n) + " in " + rd.type().str());
  DegreeSubsetEvidence ev;
  ev.i_set = i_set;
  ev.word = orbit.conjugating_word(wo.mul(longest_element(rd, i_set).m));
  ev.class_size = orbit.size();
  ev.ell_plus = lp;
  ev.ell_minus = n - lp;
  return ev;
}

SubsetMask find_degree_subset_I(const RootDatum& rd, SubsetMask h_set, long long budget) {
  return find_degree_subset_I_with_evidence(rd, h_set, budget).i_set;
}

namespace {

// Documented special cases outside the generic route.
bool is_eiii(const RootDatum& rd, SubsetMask h_set) {
  if (rd.type() != SimpleType{Family::E, 6}) return false;
  return subsets_equivalent(rd, h_set, SubsetMask::of({1, 2, 3, 4, 5}));
}

bool is_d_even_levi(const RootDatum& rd, SubsetMask h_set) {
  if (rd.type().family != Family::D) return false;
  int n = rd.rank();
  for (int k = 2; 2 * k < n; ++k) {
    SubsetMask tail;
    for (int a = n - 2 * k + 1; a <= n; ++a) tail = tail.with(a);
    if (subsets_equivalent(rd, h_set, tail)) return true;
  }
  return false;
}

}  // namespace

WittPresentation witt_from_conditions(const RootDatum& rd, SubsetMask h_set,
                                      const Limits& limits) {
  WittPresentation out;
  SubsetMask sigma = SubsetMask::full(rd.rank());
  int expected = duality_orbit_count(rd, sigma) - duality_orbit_count(rd, h_set);

  ConditionVerdict verdict = classify_condition(rd, h_set);
  if (verdict.status == ConditionStatus::SingleCell) {
    SubsetMask i_set = find_degree_subset_I(rd, h_set, limits.conjugacy_budget);
    TypeCounts c = count_types(rd, i_set);
    out.status = WittStatus::Exterior;
    out.degree1_count = c.quat_count;
    out.degree3_count = c.complex_count / 2 + c.real_count;
    out.parameter_I = i_set;
    out.provenance = h_set.empty() ? WittProvenance::Old : WittProvenance::MainDegrees;
    if (out.degree1_count + out.degree3_count != expected)
      throw TheoremViolation("generator count mismatch for H = " + h_set.mask_string(rd.rank()) +
                             " in " + rd.type().str());
    return out;
  }
  if (is_eiii(rd, h_set)) {
    out.status = WittStatus::KnownNonExterior;
    out.provenance = WittProvenance::Registry;
    out.note = "hermitian symmetric space E6/(Spin(10).T): nontrivial ring concentrated in "
               "degree zero, not an exterior algebra on odd-degree generators";
    return out;
  }
  if (is_d_even_levi(rd, h_set)) {
    out.status = WittStatus::Unknown;
    out.provenance = WittProvenance::Registry;
    out.note = "excluded D-series case: the ring is an exterior algebra with two generators "
               "more than the orbit count " + std::to_string(expected) +
               "; degrees not computed here";
    return out;
  }
  out.status = WittStatus::Unknown;
  out.provenance = WittProvenance::None;
  return out;
}

WittPresentation witt_presentation(const RootDatum& rd, SubsetMask h_set, const Limits& limits) {
  if (rd.type() == SimpleType{Family::F, 4}) {
    WittPresentation out;
    out.status = WittStatus::Exterior;
    out.degree1_count = 0;
    out.degree3_count = 4 - duality_orbit_count(rd, h_set);
    out.provenance = WittProvenance::F4;
    return out;
  }
  return witt_from_conditions(rd, h_set, limits);
}

}  // namespace wittflag
