#include "wittflag/conditions.hpp"

#include <algorithm>

#include "zlinalg.hpp"

namespace wittflag {

const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::SingleCell: return "single-cell";
    case ConditionStatus::OrbitBasis: return "orbit-basis";
    case ConditionStatus::Neither: return "neither";
  }
  return "?";
}

Rat delta_gamma(const RootDatum& rd, SubsetMask h_set, const Root& gamma, int theta) {
  if (!h_set.contains(theta)) throw std::invalid_argument("delta_gamma: theta not in H");
  if (!rd.connected_subdiagram(h_set))
    throw std::invalid_argument("delta_gamma: H must be connected");
  const int n = rd.rank();

  // outside neighbours, each adjacent to exactly one H-node
  std::vector<std::pair<int, int>> neighbours;  // (beta, v_beta)
  for (int b = 1; b <= n; ++b) {
    if (h_set.contains(b)) continue;
    int touch = 0, v = 0;
    for (int t = 1; t <= n; ++t)
      if (h_set.contains(t) && rd.adjacent(b, t)) {
        ++touch;
        v = t;
      }
    if (touch == 0) continue;
    if (touch > 1)
      throw std::invalid_argument("delta_gamma: neighbour adjacent to several H-nodes");
    neighbours.emplace_back(b, v);
  }

  // inverse Cartan matrix of the H-subsystem
  auto nodes = h_set.nodes(n);
  const size_t k = nodes.size();
  std::vector<size_t> pos(static_cast<size_t>(n) + 1, 0);
  for (size_t i = 0; i < k; ++i) pos[static_cast<size_t>(nodes[i])] = i;
  std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) sub[i][j] = Rat(rd.cartan(nodes[i], nodes[j]));
  std::vector<std::vector<Rat>> cbar(k, std::vector<Rat>(k));
  for (size_t col = 0; col < k; ++col) {
    std::vector<Rat> b(k, Rat(0)), x;
    b[col] = Rat(1);
    if (!zl::solve_rational(sub, b, x)) throw std::logic_error("singular H-subsystem Cartan matrix");
    for (size_t i = 0; i < k; ++i) cbar[i][col] = x[i];
  }

  int theta_dual = duality_node_image(rd, h_set, theta);
  Rat delta = Rat(gamma.root_coords.coord(theta)) + Rat(gamma.root_coords.coord(theta_dual));
  for (auto [beta, v] : neighbours) {
    long long b_coef = gamma.root_coords.coord(beta);
    if (b_coef == 0) continue;
    // row v_beta of the inverse subsystem Cartan matrix: the coefficient of
    // omega_beta in e_theta is (Cbar_{v,theta} + Cbar_{v,[H]theta}) C_{beta,v}
    Rat cb = cbar[pos[static_cast<size_t>(v)]][pos[static_cast<size_t>(theta)]] +
             cbar[pos[static_cast<size_t>(v)]][pos[static_cast<size_t>(theta_dual)]];
    Rat factor = rd.root_norm2(beta) / rd.root_norm2(theta);
    delta += Rat(b_coef) * cb * Rat(rd.cartan(beta, v)) * factor;
  }
  return delta;
}

std::optional<std::pair<WeylElement, SubsetMask>> check_single_cell(const RootDatum& rd,
                                                                    SubsetMask h_set) {
  const int n = rd.rank();
  SubsetMask sigma = SubsetMask::full(n);
  std::vector<Weight> gens = fixed_cone_generators(rd, h_set);

  // no positive root may switch sign across the generators
  for (const auto& g : rd.positive_roots()) {
    bool pos = false, neg = false;
    for (const auto& e : gens) {
      int s = rd.inner(g.weight_coords, e).sign();
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) return std::nullopt;
  }

  // move an interior point of the fixed cone into the dominant chamber
  Weight interior(n);
  for (const auto& e : gens) interior = interior + e;
  auto [dom, w] = to_dominant(rd, interior);
  for (const auto& e : gens)
    if (!rd.dominant(w.apply(e)))
      throw std::logic_error("sign test passed but the cone straddles a chamber");

  // walls common to all translated generators define the face parameter I
  SubsetMask i_set;
  for (int a = 1; a <= n; ++a) {
    bool wall = true;
    for (const auto& e : gens)
      if (w.apply(e).coord(a) != 0) wall = false;
    if (wall) i_set = i_set.with(a);
  }

  if (duality_subset_image(rd, sigma, i_set) != i_set) return std::nullopt;
  int need = duality_orbit_count(rd, sigma) - duality_orbit_count(rd, h_set);
  if (sigma_orbit_count(rd, i_set) != need) return std::nullopt;

  // basis-to-basis verification: hilbert basis of the fixed monoid equals the
  // translated face basis
  FixedConeMonoid monoid = hilbert_basis(rd, h_set);
  if (!monoid.is_free) return std::nullopt;
  WeylElement translating = inverse(rd, w);
  std::vector<Weight> mapped;
  for (const auto& b : face_fixed_basis(rd, i_set)) mapped.push_back(translating.apply(b));
  std::sort(mapped.begin(), mapped.end());
  if (mapped != monoid.hilbert_basis) return std::nullopt;
  return std::make_pair(translating, i_set);
}

namespace {

// [Sigma]-orbit representatives (smallest node first) outside i_set, with the
// orbit weight omega_a or omega_a + omega_{[Sigma]a}.
std::vector<std::pair<int, Weight>> orbit_weights_outside(const RootDatum& rd, SubsetMask i_set) {
  SubsetMask sigma = SubsetMask::full(rd.rank());
  std::vector<std::pair<int, Weight>> out;
  for (int a = 1; a <= rd.rank(); ++a) {
    if (i_set.contains(a)) continue;
    int b = duality_node_image(rd, sigma, a);
    if (b < a) continue;
    Weight w = rd.fundamental_weight(a);
    if (b != a) w = w + rd.fundamental_weight(b);
    out.emplace_back(a, w);
  }
  return out;
}

std::vector<Weight> fixed_points_of_orbit(const RootDatum& rd, const Involution& h_dual,
                                          SubsetMask h_set, const Weight& orbit_weight) {
  std::vector<Weight> hits;
  for (const auto& t : weyl_orbit_cached(rd, orbit_weight))
    if (in_fixed_cone(rd, h_dual, h_set, t)) hits.push_back(t);
  return hits;
}

}  // namespace

std::optional<std::vector<OrbitIntersection>> check_orbit_basis(const RootDatum& rd,
                                                                SubsetMask h_set,
                                                                SubsetMask i_set) {
  SubsetMask sigma = SubsetMask::full(rd.rank());
  if (duality_subset_image(rd, sigma, i_set) != i_set)
    throw std::invalid_argument("check_orbit_basis: I is not [Sigma]-symmetric");
  Involution h_dual = duality(rd, h_set);
  std::vector<OrbitIntersection> out;
  auto outside = orbit_weights_outside(rd, i_set);
  if (outside.empty()) return out;  // no orbits to test: vacuously satisfied
  for (auto& [rep, ow] : outside) {
    auto hits = fixed_points_of_orbit(rd, h_dual, h_set, ow);
    if (hits.size() != 1) return std::nullopt;
    out.push_back({rep, ow, hits.front()});
  }
  FixedConeMonoid monoid = hilbert_basis(rd, h_set);
  if (!monoid.is_free) return std::nullopt;
  std::vector<Weight> taus;
  for (auto& oi : out) taus.push_back(oi.tau);
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  if (taus != monoid.hilbert_basis) return std::nullopt;
  return out;
}

ConditionVerdict classify_condition(const RootDatum& rd, SubsetMask h_set) {
  ConditionVerdict v;
  if (auto sc = check_single_cell(rd, h_set)) {
    v.status = ConditionStatus::SingleCell;
    v.translating_w = sc->first;
    v.parameter_I = sc->second;
    v.passing_I = {sc->second};
    if (auto ob = check_orbit_basis(rd, h_set, sc->second)) v.orbit_intersections = *ob;
    return v;
  }

  const int n = rd.rank();
  SubsetMask sigma = SubsetMask::full(n);
  int need = duality_orbit_count(rd, sigma) - duality_orbit_count(rd, h_set);
  if (need < 0) return v;

  // precompute the per-orbit intersections once; the candidate scan only
  // recombines them
  Involution h_dual = duality(rd, h_set);
  std::vector<std::vector<Weight>> hits(static_cast<size_t>(n) + 1);
  std::vector<std::pair<int, Weight>> all_orbits = orbit_weights_outside(rd, SubsetMask());
  for (auto& [rep, ow] : all_orbits)
    hits[static_cast<size_t>(rep)] = fixed_points_of_orbit(rd, h_dual, h_set, ow);

  FixedConeMonoid monoid = hilbert_basis(rd, h_set);

  std::vector<SubsetMask> masks;
  for (unsigned b = 0; b < (1u << n); ++b) masks.push_back(SubsetMask(b));
  std::sort(masks.begin(), masks.end(), [&](SubsetMask a, SubsetMask b2) {
    if (a.size() != b2.size()) return a.size() < b2.size();
    return SubsetMask::lex_less(a, b2, n);
  });

  for (SubsetMask i_set : masks) {
    if (duality_subset_image(rd, sigma, i_set) != i_set) continue;
    if (sigma_orbit_count(rd, i_set) != need) continue;
    if (!monoid.is_free) continue;
    std::vector<OrbitIntersection> inter;
    bool ok = true;
    for (auto& [rep, ow] : all_orbits) {
      if (i_set.contains(rep)) continue;
      if (hits[static_cast<size_t>(rep)].size() != 1) {
        ok = false;
        break;
      }
      inter.push_back({rep, ow, hits[static_cast<size_t>(rep)].front()});
    }
    if (!ok) continue;
    std::vector<Weight> taus;
    for (auto& oi : inter) taus.push_back(oi.tau);
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    if (taus != monoid.hilbert_basis) continue;
    v.passing_I.push_back(i_set);
    if (!v.parameter_I) {
      v.parameter_I = i_set;
      v.orbit_intersections = inter;
    }
  }
  if (!v.passing_I.empty()) v.status = ConditionStatus::OrbitBasis;
  return v;
}

bool verify_fixed_cell(const RootDatum& rd, SubsetMask h_set, const WeylElement& w,
                       SubsetMask i_set) {
  SubsetMask sigma = SubsetMask::full(rd.rank());
  if (duality_subset_image(rd, sigma, i_set) != i_set) return false;
  IntMat u = duality(rd, sigma).element.m
                 .mul(unimodular_inverse(w.m))
                 .mul(duality(rd, h_set).element.m)
                 .mul(w.m);
  // u lies in W_I iff it fixes the interior point of the face C_I
  Weight interior(rd.rank());
  for (int a = 1; a <= rd.rank(); ++a)
    if (!i_set.contains(a)) interior[a - 1] = 1;
  return u.apply(interior) == interior;
}

}  // namespace wittflag
