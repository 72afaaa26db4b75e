#pragma once

#include <vector>

#include "wittflag/weyl.hpp"

namespace wittflag {

// The monoid of [H]-fixed H-dominant lattice points: Hilbert basis plus
// freeness/relation data.
struct FixedConeMonoid {
  std::vector<Weight> generators;     // the cone generators e_theta, deduplicated
  std::vector<Weight> hilbert_basis;  // minimal monoid generators, sorted
  bool is_free = true;
  // Integer dependencies among hilbert_basis elements: each entry r satisfies
  // sum_k r[k] * hilbert_basis[k] = 0. Empty when free.
  std::vector<std::vector<long long>> relations;
  int dim = 0;  // = ell_plus([H]) = |Sigma_H / [H]|
};

// R>=0-generators of the fixed cone: e_theta = omega_theta + [H] omega_theta
// for theta in H, deduplicated ([H]-paired nodes give the same generator) and
// sorted. [H] acts as -1 outside the span of H, so nodes outside H contribute
// nothing.
std::vector<Weight> fixed_cone_generators(const RootDatum& rd, SubsetMask h_set);

// Membership in the fixed monoid: [H] w = w and w is H-dominant.
bool in_fixed_cone(const RootDatum& rd, const Involution& h_dual, SubsetMask h_set,
                   const Weight& w);

// Hilbert basis of the fixed monoid. The cone is simplicial (the deduplicated
// e_theta are linearly independent); candidates are the primitive ray
// generators together with the lattice points of the fundamental
// parallelepiped, reduced to the irreducible ones.
FixedConeMonoid hilbert_basis(const RootDatum& rd, SubsetMask h_set);

// Free basis of the [Sigma]-fixed lattice points of the chamber face C_I:
// omega_a for self-dual a outside I, omega_a + omega_{[Sigma]a} for pairs
// outside I. Requires [Sigma] I = I (throws std::invalid_argument otherwise).
std::vector<Weight> face_fixed_basis(const RootDatum& rd, SubsetMask i_set);

}  // namespace wittflag
