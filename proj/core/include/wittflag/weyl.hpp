#pragma once

#include <utility>
#include <vector>

#include "wittflag/root_datum.hpp"

namespace wittflag {

// Weyl group element as an integer matrix on fundamental-weight coordinates.
// The matrix is canonical (equality, hashing); the word is provenance only.
struct WeylElement {
  IntMat m;
  std::vector<int> word;  // simple-reflection indices, applied right to left

  Weight apply(const Weight& w) const { return m.apply(w); }
  bool is_identity() const { return m.is_identity(); }
};

struct Involution {
  WeylElement element;
  int ell_plus = 0;   // dim of the +1 eigenspace
  int ell_minus = 0;  // dim of the -1 eigenspace
};

WeylElement identity_element(const RootDatum& rd);
WeylElement simple_reflection(const RootDatum& rd, int i);

// Product u*v (act by v first).
WeylElement compose(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const RootDatum& rd, const WeylElement& w);

// Integer matrix inverse for unimodular matrices (det = +-1).
IntMat unimodular_inverse(const IntMat& m);

// dim ker(m - 1) over Q.
int ell_plus_of(const IntMat& m);

// Characteristic polynomial coefficients c_0..c_n with
// det(xI - m) = sum c_k x^{n-k}; c_0 = 1. Exact (Faddeev-LeVerrier).
std::vector<long long> char_poly(const IntMat& m);

// Deterministic: reflects at the smallest negative coordinate until dominant.
// Returns (dominant image, w) with w * input = dominant image.
std::pair<Weight, WeylElement> to_dominant(const RootDatum& rd, const Weight& w);
// Same, but only within the parabolic W_J (descends coordinates in J).
std::pair<Weight, WeylElement> to_dominant(const RootDatum& rd, const Weight& w, SubsetMask j_set);

// Full orbit of w under W_J, sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& w, SubsetMask j_set);
std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& w);

// Memoized full-group orbit, keyed by the dominant representative.
// Thread-safe; the returned reference stays valid for the process lifetime.
const std::vector<Weight>& weyl_orbit_cached(const RootDatum& rd, const Weight& w);

// Longest element of the parabolic subgroup W_J (identity for empty J).
WeylElement longest_element(const RootDatum& rd, SubsetMask j_set);

// Duality involution [J] = -w_o^J.
Involution duality(const RootDatum& rd, SubsetMask j_set);

// [J] permutes the simple roots of J; returns the node index of [J](alpha_node).
int duality_node_image(const RootDatum& rd, SubsetMask j_set, int node);
// Orbits of [J] on the nodes of J (each orbit has one or two nodes).
int duality_orbit_count(const RootDatum& rd, SubsetMask j_set);
// Orbits of the ambient duality [Sigma] on a [Sigma]-symmetric subset.
int sigma_orbit_count(const RootDatum& rd, SubsetMask s);
// Image of a subset under the duality permutation of j_set (subset must be
// contained in j_set).
SubsetMask duality_subset_image(const RootDatum& rd, SubsetMask j_set, SubsetMask s);

// W-equivalence of subsets of simple roots, via BFS over the elementary moves
// J -> [J u {a}](J) for a outside J.
bool subsets_equivalent(const RootDatum& rd, SubsetMask j, SubsetMask k);

// One canonical (lexicographically smallest) representative per equivalence
// class, sorted by (size, lex).
std::vector<SubsetMask> subsets_up_to_equivalence(const RootDatum& rd);

// Conjugation orbit of an involution under W, explored by BFS over the
// simple-reflection generators. Throws BudgetExceeded if the class is larger
// than the budget.
class ConjugacyOrbit {
 public:
  ConjugacyOrbit(const RootDatum& rd, const IntMat& seed, long long budget);
  bool contains(const IntMat& m) const { return find(m) >= 0; }
  long long size() const { return static_cast<long long>(order_.size()); }
  // A word w (simple-reflection indices, applied right to left) with
  // w * seed * w^{-1} = target; target must be contained in the orbit.
  std::vector<int> conjugating_word(const IntMat& target) const;

 private:
  long long find(const IntMat& m) const;

  std::vector<IntMat> order_;                      // BFS order
  std::vector<std::pair<long long, int>> parent_;  // (index in order_, generator)
  std::vector<long long> by_matrix_;               // indices sorted by order_[i]
};

// True iff sigma and tau are conjugate in W. Both must be involutions.
// Prefilters by (ell_plus, characteristic polynomial), then walks the
// conjugation orbit of sigma; throws BudgetExceeded on overflow.
bool conjugate_involutions(const RootDatum& rd, const IntMat& sigma, const IntMat& tau,
                           long long budget);

// The whole Weyl group as matrices (BFS, deterministic order). Intended for
// small ranks; throws std::length_error if the group exceeds cap.
std::vector<IntMat> enumerate_weyl_group(const RootDatum& rd, size_t cap = 2'000'000);

}  // namespace wittflag
