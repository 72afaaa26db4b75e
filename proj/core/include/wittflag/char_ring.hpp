#pragma once

#include <map>
#include <set>
#include <vector>

#include "wittflag/cone.hpp"

namespace wittflag {

// Element of the group ring Z[X*]: finitely supported Weight -> coefficient.
// Ordered map so iteration (and printing) is canonical.
struct CharacterElement {
  std::map<Weight, long long> terms;

  bool is_zero() const { return terms.empty(); }
  long long coeff(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }
  void add(const Weight& w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  CharacterElement& operator+=(const CharacterElement& o) {
    for (auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  CharacterElement& operator-=(const CharacterElement& o) {
    for (auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  bool operator==(const CharacterElement&) const = default;
};

// S_J(omega) = sum over the W_J-orbit of e^tau, all coefficients 1.
// Requires omega J-dominant (throws std::invalid_argument).
CharacterElement symmetric_sum(const RootDatum& rd, SubsetMask j_set, const Weight& omega);

// Product in the group ring, guarded by limits.product_pair_cap and
// limits.orbit_term_cap (throws std::length_error past the caps).
CharacterElement product(const CharacterElement& a, const CharacterElement& b,
                         const Limits& limits = {});

// Unique coefficients c_omega with elt = sum c_omega S_J(omega), computed
// greedily from maximal dominant terms. Throws std::invalid_argument if elt
// is not W_J-invariant.
std::map<Weight, long long> decompose_into_symmetric_sums(const RootDatum& rd, SubsetMask j_set,
                                                          const CharacterElement& elt);

// Strict dominance order relative to W_J: true iff w2 - w1 is a nonzero
// non-negative rational combination of the simple roots in J.
bool dominance_less(const RootDatum& rd, SubsetMask j_set, const Weight& w1, const Weight& w2);

// W.omega restricted to the H-chamber: all H-dominant orbit members, plus the
// sublist fixed by [H]. Satisfies S_Sigma(omega) = sum over h_dominant of
// S_H(tau).
struct Restriction {
  std::vector<Weight> h_dominant;
  std::vector<Weight> fixed;
};
Restriction restrict_and_decompose(const RootDatum& rd, SubsetMask h_set, const Weight& omega);

// Mod-2 class in h^+ of R(L_H): set of [H]-fixed H-dominant weights tau with
// [S_H(tau)] appearing with odd coefficient.
struct TateClass {
  std::set<Weight> terms;
  bool operator==(const TateClass&) const = default;
};

// Bilinear extension of [S_H(tau1)][S_H(tau2)]: full group-ring product,
// decomposition into symmetric sums, reduction mod 2, and discarding
// non-fixed dominant terms (which occur in dual pairs).
TateClass tate_product(const RootDatum& rd, SubsetMask h_set, const TateClass& x,
                       const TateClass& y, const Limits& limits = {});

// True iff the monomials of total degree <= degree_cap in the restriction
// classes [S_Sigma(omega_[a])], [a] outside I, are linearly independent over
// F_2. Requires every orbit intersection with the fixed monoid to be a
// singleton (throws std::invalid_argument otherwise).
bool verify_free_generation(const RootDatum& rd, SubsetMask h_set, SubsetMask i_set,
                            int degree_cap, const Limits& limits = {});

}  // namespace wittflag
