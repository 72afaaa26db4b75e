#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wittflag/cone.hpp"

namespace wittflag {

enum class ConditionStatus { SingleCell, OrbitBasis, Neither };

const char* to_string(ConditionStatus s);

// Intersection of the Weyl orbit of omega_[a] with the fixed monoid, keyed by
// the smallest node of the [Sigma]-orbit [a].
struct OrbitIntersection {
  int orbit_rep = 0;    // smallest node of [a]
  Weight orbit_weight;  // omega_a or omega_a + omega_{[Sigma]a}
  Weight tau;           // the unique intersection point
};

struct ConditionVerdict {
  ConditionStatus status = ConditionStatus::Neither;
  std::optional<SubsetMask> parameter_I;
  // Every symmetric I of the forced orbit count that passes the orbit-basis
  // test (a single entry for SingleCell). Ties are reported, never resolved.
  std::vector<SubsetMask> passing_I;
  // w with fixed cone = w(C_I^[Sigma]); present for SingleCell.
  std::optional<WeylElement> translating_w;
  std::vector<OrbitIntersection> orbit_intersections;
};

// The numerical criterion for one positive root and one node theta of H:
//   Delta_gamma(theta) = (a_theta + a_{[H]theta})
//     + sum_beta b_beta (Cbar^{theta,v_beta} + Cbar^{[H]theta,v_beta})
//                 C_{v_beta,beta} (beta,beta)/(theta,theta)
// where Cbar is the inverse Cartan matrix of the H-subsystem and v_beta the
// unique H-neighbour of beta. Equals 2 (gamma, e_theta) / (theta,theta).
// Requires H connected and every outside neighbour adjacent to exactly one
// H-node (throws std::invalid_argument otherwise; callers fall back to the
// direct inner-product test).
Rat delta_gamma(const RootDatum& rd, SubsetMask h_set, const Root& gamma, int theta);

// The sign test of the single-cell condition: succeeds iff no positive root
// changes sign on the fixed cone, and the cone verifies as a Weyl translate
// of the [Sigma]-fixed part of the chamber face C_I. Returns (w, I) with
// fixed cone = w(C_I^[Sigma]); absence is a result, not an error.
std::optional<std::pair<WeylElement, SubsetMask>> check_single_cell(const RootDatum& rd,
                                                                    SubsetMask h_set);

// The orbit-basis condition for a fixed symmetric parameter I: every orbit of
// omega_[a], [a] outside I, meets the fixed monoid in exactly one weight, and
// those weights are a free basis of the monoid.
std::optional<std::vector<OrbitIntersection>> check_orbit_basis(const RootDatum& rd,
                                                                SubsetMask h_set,
                                                                SubsetMask i_set);

// SingleCell if the sign test passes; else OrbitBasis if some symmetric I
// with |I/[Sigma]| = |Sigma/[Sigma]| - |Sigma_H/[H]| passes the orbit-basis
// test; else Neither.
ConditionVerdict classify_condition(const RootDatum& rd, SubsetMask h_set);

// True iff [Sigma] I = I and [Sigma] w^{-1} [H] w lies in W_I (tested by
// fixing the interior point of the face C_I).
bool verify_fixed_cell(const RootDatum& rd, SubsetMask h_set, const WeylElement& w,
                       SubsetMask i_set);

}  // namespace wittflag
