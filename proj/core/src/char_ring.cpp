#include "wittflag/char_ring.hpp"

#include <algorithm>

namespace wittflag {

CharacterElement symmetric_sum(const RootDatum& rd, SubsetMask j_set, const Weight& omega) {
  if (!rd.dominant(omega, j_set))
    throw std::invalid_argument("symmetric_sum: weight is not J-dominant");
  CharacterElement e;
  for (const auto& t : weyl_orbit(rd, omega, j_set)) e.terms.emplace(t, 1);
  return e;
}

CharacterElement product(const CharacterElement& a, const CharacterElement& b,
                         const Limits& limits) {
  if (static_cast<long long>(a.terms.size()) > limits.orbit_term_cap ||
      static_cast<long long>(b.terms.size()) > limits.orbit_term_cap)
    throw std::length_error("character product: factor exceeds the term cap");
  long long pairs = static_cast<long long>(a.terms.size()) * static_cast<long long>(b.terms.size());
  if (pairs > limits.product_pair_cap)
    throw std::length_error("character product: pair count exceeds the cap");
  CharacterElement r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add(wa + wb, ca * cb);
  return r;
}

bool dominance_less(const RootDatum& rd, SubsetMask j_set, const Weight& w1, const Weight& w2) {
  if (w1 == w2) return false;
  std::vector<Rat> coords = rd.to_root_coords(w2 - w1);
  for (int i = 1; i <= rd.rank(); ++i) {
    const Rat& q = coords[static_cast<size_t>(i - 1)];
    if (!j_set.contains(i)) {
      if (!q.is_zero()) return false;  // difference must lie in the span of J
    } else if (q.sign() < 0) {
      return false;
    }
  }
  return true;
}

std::map<Weight, long long> decompose_into_symmetric_sums(const RootDatum& rd, SubsetMask j_set,
                                                          const CharacterElement& elt) {
  std::map<Weight, long long> out;
  CharacterElement work = elt;
  size_t guard = elt.terms.size() + 8;
  while (!work.is_zero()) {
    if (guard-- == 0)
      throw std::invalid_argument("decompose_into_symmetric_sums: element is not W_J-invariant");
    // maximal J-dominant term in the dominance order (lex-largest among the
    // maximal ones, for determinism)
    std::vector<Weight> dominant;
    for (const auto& [w, c] : work.terms)
      if (rd.dominant(w, j_set)) dominant.push_back(w);
    if (dominant.empty())
      throw std::invalid_argument("decompose_into_symmetric_sums: element is not W_J-invariant");
    Weight top = dominant.front();
    bool found = true;
    while (found) {
      found = false;
      for (const auto& w : dominant)
        if (dominance_less(rd, j_set, top, w)) {
          top = w;
          found = true;
        }
    }
    long long c = work.coeff(top);
    CharacterElement s = symmetric_sum(rd, j_set, top);
    for (const auto& [w, cs] : s.terms) work.add(w, -c * cs);
    out[top] = c;
  }
  return out;
}

Restriction restrict_and_decompose(const RootDatum& rd, SubsetMask h_set, const Weight& omega) {
  if (!rd.dominant(omega))
    throw std::invalid_argument("restrict_and_decompose: weight is not dominant");
  Involution h_dual = duality(rd, h_set);
  Restriction r;
  for (const auto& t : weyl_orbit_cached(rd, omega)) {
    if (!rd.dominant(t, h_set)) continue;
    r.h_dominant.push_back(t);
    if (h_dual.element.apply(t) == t) r.fixed.push_back(t);
  }
  return r;
}

TateClass tate_product(const RootDatum& rd, SubsetMask h_set, const TateClass& x,
                       const TateClass& y, const Limits& limits) {
  Involution h_dual = duality(rd, h_set);
  CharacterElement ex, ey;
  for (const auto& t : x.terms) ex += symmetric_sum(rd, h_set, t);
  for (const auto& t : y.terms) ey += symmetric_sum(rd, h_set, t);
  CharacterElement prod = product(ex, ey, limits);
  auto dec = decompose_into_symmetric_sums(rd, h_set, prod);
  TateClass out;
  for (const auto& [w, c] : dec) {
    if (h_dual.element.apply(w) != w) {
      // non-fixed dominant terms occur in dual pairs and vanish in h^+
      Weight dual_w = to_dominant(rd, h_dual.element.apply(w), h_set).first;
      if (dec.find(dual_w) == dec.end() || dec.at(dual_w) != c)
        throw std::logic_error("tate_product: non-fixed terms are not dually paired");
      continue;
    }
    if (c % 2 != 0) out.terms.insert(w);
  }
  return out;
}

bool verify_free_generation(const RootDatum& rd, SubsetMask h_set, SubsetMask i_set,
                            int degree_cap, const Limits& limits) {
  SubsetMask sigma = SubsetMask::full(rd.rank());
  if (duality_subset_image(rd, sigma, i_set) != i_set)
    throw std::invalid_argument("verify_free_generation: I is not [Sigma]-symmetric");
  Involution h_dual = duality(rd, h_set);

  // the generating classes: singleton orbit intersections for each
  // [Sigma]-orbit outside I
  std::vector<TateClass> gens;
  for (int a = 1; a <= rd.rank(); ++a) {
    if (i_set.contains(a)) continue;
    int b = duality_node_image(rd, sigma, a);
    if (b < a) continue;
    Weight ow = rd.fundamental_weight(a);
    if (b != a) ow = ow + rd.fundamental_weight(b);
    std::vector<Weight> hits;
    for (const auto& t : weyl_orbit_cached(rd, ow))
      if (in_fixed_cone(rd, h_dual, h_set, t)) hits.push_back(t);
    if (hits.size() != 1)
      throw std::invalid_argument(
          "verify_free_generation: orbit intersection is not a singleton");
    TateClass c;
    c.terms.insert(hits.front());
    gens.push_back(c);
  }

  // all monomials of total degree <= cap, built incrementally
  std::map<std::vector<int>, TateClass> monomials;
  {
    TateClass one;
    one.terms.insert(Weight(rd.rank()));
    monomials.emplace(std::vector<int>(gens.size(), 0), one);
  }
  std::vector<std::vector<int>> exps{std::vector<int>(gens.size(), 0)};
  for (size_t qi = 0; qi < exps.size(); ++qi) {
    std::vector<int> e = exps[qi];
    int total = 0;
    for (int v : e) total += v;
    if (total >= degree_cap) continue;
    for (size_t g = 0; g < gens.size(); ++g) {
      std::vector<int> e2 = e;
      ++e2[g];
      if (monomials.count(e2)) continue;
      monomials.emplace(e2, tate_product(rd, h_set, monomials.at(e), gens[g], limits));
      exps.push_back(e2);
    }
  }

  // linear independence over F_2 by Gaussian elimination on the supports
  std::map<Weight, size_t> col;
  for (const auto& [e, c] : monomials)
    for (const auto& w : c.terms) col.emplace(w, col.size());
  size_t words = (col.size() + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  for (const auto& [e, c] : monomials) {
    std::vector<uint64_t> row(words, 0);
    for (const auto& w : c.terms) {
      size_t j = col.at(w);
      row[j / 64] |= uint64_t(1) << (j % 64);
    }
    rows.push_back(row);
  }
  size_t rank = 0;
  for (size_t j = 0; j < col.size() && rank < rows.size(); ++j) {
    size_t p = rank;
    while (p < rows.size() && !((rows[p][j / 64] >> (j % 64)) & 1)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      if ((rows[i][j / 64] >> (j % 64)) & 1)
        for (size_t k = 0; k < words; ++k) rows[i][k] ^= rows[rank][k];
    }
    ++rank;
  }
  return rank == rows.size();
}

}  // namespace wittflag
