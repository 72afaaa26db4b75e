#include "wittflag/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "zlinalg.hpp"

namespace wittflag {

WeylElement identity_element(const RootDatum& rd) {
  return WeylElement{IntMat::identity(rd.rank()), {}};
}

WeylElement simple_reflection(const RootDatum& rd, int i) {
  if (i < 1 || i > rd.rank()) throw std::invalid_argument("reflection index out of range");
  IntMat m = IntMat::identity(rd.rank());
  // s_i(omega_j) = omega_j - delta_ij alpha_i: column i becomes e_i - alpha_i
  const Weight& a = rd.simple_root(i);
  for (int r = 0; r < rd.rank(); ++r) m.at(r, i - 1) -= a[r];
  return WeylElement{m, {i}};
}

WeylElement compose(const WeylElement& u, const WeylElement& v) {
  WeylElement r{u.m.mul(v.m), u.word};
  r.word.insert(r.word.end(), v.word.begin(), v.word.end());
  return r;
}

IntMat unimodular_inverse(const IntMat& m) {
  const int n = m.n;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m.at(i, j));
  IntMat inv(n);
  for (int col = 0; col < n; ++col) {
    std::vector<Rat> b(static_cast<size_t>(n), Rat(0)), x;
    b[static_cast<size_t>(col)] = Rat(1);
    if (!zl::solve_rational(a, b, x)) throw std::invalid_argument("matrix not invertible");
    for (int i = 0; i < n; ++i) inv.at(i, col) = static_cast<int>(x[static_cast<size_t>(i)].integer());
  }
  return inv;
}

WeylElement inverse(const RootDatum& rd, const WeylElement& w) {
  (void)rd;
  WeylElement r{unimodular_inverse(w.m), w.word};
  std::reverse(r.word.begin(), r.word.end());
  return r;
}

int ell_plus_of(const IntMat& m) {
  const int n = m.n;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m.at(i, j) - (i == j ? 1 : 0));
  return n - static_cast<int>(zl::rank_rational(a));
}

std::vector<long long> char_poly(const IntMat& m) {
  const int n = m.n;
  std::vector<long long> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  IntMat mk = m;  // M * N_{k-1}
  for (int k = 1; k <= n; ++k) {
    long long ck = -mk.trace() / k;  // Faddeev-LeVerrier; division is exact
    c[static_cast<size_t>(k)] = ck;
    if (k == n) break;
    IntMat nk = mk;
    for (int i = 0; i < n; ++i) nk.at(i, i) += static_cast<int>(ck);
    mk = m.mul(nk);
  }
  return c;
}

std::pair<Weight, WeylElement> to_dominant(const RootDatum& rd, const Weight& w,
                                           SubsetMask j_set) {
  Weight v = w;
  WeylElement acc = identity_element(rd);
  long long guard = 0;
  while (true) {
    int i = 0;
    for (int k = 1; k <= rd.rank(); ++k)
      if (j_set.contains(k) && v.coord(k) < 0) {
        i = k;
        break;
      }
    if (i == 0) break;
    // s_i(v) = v - v_i alpha_i
    int vi = v.coord(i);
    const Weight& a = rd.simple_root(i);
    for (int r = 0; r < rd.rank(); ++r) v[r] -= vi * a[r];
    acc = compose(simple_reflection(rd, i), acc);
    if (++guard > 1'000'000) throw std::logic_error("to_dominant did not terminate");
  }
  return {v, acc};
}

std::pair<Weight, WeylElement> to_dominant(const RootDatum& rd, const Weight& w) {
  return to_dominant(rd, w, SubsetMask::full(rd.rank()));
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& w, SubsetMask j_set) {
  Weight start = to_dominant(rd, w, j_set).first;
  std::unordered_set<Weight, WeightHash> seen{start};
  std::vector<Weight> queue{start};
  auto nodes = j_set.nodes(rd.rank());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Weight v = queue[qi];
    for (int i : nodes) {
      int vi = v.coord(i);
      if (vi == 0) continue;
      Weight next = v;
      const Weight& a = rd.simple_root(i);
      for (int r = 0; r < rd.rank(); ++r) next[r] -= vi * a[r];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& w) {
  return weyl_orbit(rd, w, SubsetMask::full(rd.rank()));
}

const std::vector<Weight>& weyl_orbit_cached(const RootDatum& rd, const Weight& w) {
  static std::mutex mu;
  using Key = std::pair<SimpleType, Weight>;
  static std::map<Key, std::vector<Weight>*> cache;
  Weight dom = to_dominant(rd, w).first;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({rd.type(), dom});
  if (it == cache.end()) {
    auto* orb = new std::vector<Weight>(weyl_orbit(rd, dom));  // process lifetime
    it = cache.emplace(Key{rd.type(), dom}, orb).first;
  }
  return *it->second;
}

WeylElement longest_element(const RootDatum& rd, SubsetMask j_set) {
  Weight v(rd.rank());
  for (int i = 1; i <= rd.rank(); ++i)
    if (j_set.contains(i)) v[i - 1] = 1;
  // descend the strictly-J-regular vector to its J-antidominant image
  WeylElement acc = identity_element(rd);
  long long guard = 0;
  while (true) {
    int i = 0;
    for (int k = 1; k <= rd.rank(); ++k)
      if (j_set.contains(k) && v.coord(k) > 0) {
        i = k;
        break;
      }
    if (i == 0) break;
    int vi = v.coord(i);
    const Weight& a = rd.simple_root(i);
    for (int r = 0; r < rd.rank(); ++r) v[r] -= vi * a[r];
    acc = compose(simple_reflection(rd, i), acc);
    if (++guard > 1'000'000) throw std::logic_error("longest_element did not terminate");
  }
  return acc;
}

Involution duality(const RootDatum& rd, SubsetMask j_set) {
  WeylElement wo = longest_element(rd, j_set);
  Involution inv;
  inv.element = WeylElement{wo.m.negated(), wo.word};
  inv.ell_plus = ell_plus_of(inv.element.m);
  inv.ell_minus = rd.rank() - inv.ell_plus;
  return inv;
}

int duality_node_image(const RootDatum& rd, SubsetMask j_set, int node) {
  if (!j_set.contains(node)) throw std::invalid_argument("node not in subset");
  static std::mutex mu;
  using Key = std::pair<SimpleType, unsigned>;
  static std::map<Key, std::vector<int>> cache;  // node -> image, 1-based
  std::lock_guard<std::mutex> lock(mu);
  auto key = Key{rd.type(), j_set.bits};
  auto it = cache.find(key);
  if (it == cache.end()) {
    Involution dual = duality(rd, j_set);
    std::vector<int> img(static_cast<size_t>(rd.rank()) + 1, 0);
    for (int t = 1; t <= rd.rank(); ++t) {
      if (!j_set.contains(t)) continue;
      Weight im = dual.element.apply(rd.simple_root(t));
      int found = 0;
      for (int u = 1; u <= rd.rank(); ++u)
        if (j_set.contains(u) && rd.simple_root(u) == im) found = u;
      if (!found) throw std::logic_error("duality does not permute the subset's simple roots");
      img[static_cast<size_t>(t)] = found;
    }
    it = cache.emplace(key, std::move(img)).first;
  }
  return it->second[static_cast<size_t>(node)];
}

int duality_orbit_count(const RootDatum& rd, SubsetMask j_set) {
  int count = 0;
  for (int t = 1; t <= rd.rank(); ++t)
    if (j_set.contains(t) && duality_node_image(rd, j_set, t) >= t) ++count;
  return count;
}

int sigma_orbit_count(const RootDatum& rd, SubsetMask s) {
  SubsetMask sigma = SubsetMask::full(rd.rank());
  int count = 0;
  for (int t = 1; t <= rd.rank(); ++t)
    if (s.contains(t) && duality_node_image(rd, sigma, t) >= t) ++count;
  return count;
}

SubsetMask duality_subset_image(const RootDatum& rd, SubsetMask j_set, SubsetMask s) {
  if (!s.subset_of(j_set)) throw std::invalid_argument("subset not contained in diagram subset");
  SubsetMask img;
  for (int t = 1; t <= rd.rank(); ++t)
    if (s.contains(t)) img = img.with(duality_node_image(rd, j_set, t));
  return img;
}

namespace {

// Elementary move: J -> [J u {a}](J) for a outside J. Connects exactly the
// W-equivalent subsets (validated against the brute-force search at rank<=4).
SubsetMask elementary_move(const RootDatum& rd, SubsetMask j, int a) {
  SubsetMask k = j.with(a);
  return duality_subset_image(rd, k, j);
}

std::vector<int> equivalence_components(const RootDatum& rd) {
  const unsigned total = 1u << rd.rank();
  std::vector<int> comp(total, -1);
  int next = 0;
  for (unsigned start = 0; start < total; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::vector<unsigned> stack{start};
    while (!stack.empty()) {
      unsigned jbits = stack.back();
      stack.pop_back();
      SubsetMask j(jbits);
      for (int a = 1; a <= rd.rank(); ++a) {
        if (j.contains(a)) continue;
        unsigned img = elementary_move(rd, j, a).bits;
        if (comp[img] < 0) {
          comp[img] = next;
          stack.push_back(img);
        }
      }
    }
    ++next;
  }
  return comp;
}

const std::vector<int>& equivalence_components_cached(const RootDatum& rd) {
  static std::mutex mu;
  static std::map<SimpleType, std::vector<int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rd.type());
  if (it == cache.end()) it = cache.emplace(rd.type(), equivalence_components(rd)).first;
  return it->second;
}

}  // namespace

bool subsets_equivalent(const RootDatum& rd, SubsetMask j, SubsetMask k) {
  const auto& comp = equivalence_components_cached(rd);
  return comp[j.bits] == comp[k.bits];
}

std::vector<SubsetMask> subsets_up_to_equivalence(const RootDatum& rd) {
  const auto& comp = equivalence_components_cached(rd);
  int classes = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<SubsetMask> reps(static_cast<size_t>(classes), SubsetMask(~0u));
  for (unsigned b = 0; b < comp.size(); ++b) {
    SubsetMask m(b);
    SubsetMask& r = reps[static_cast<size_t>(comp[b])];
    if (r.bits == ~0u || SubsetMask::lex_less(m, r, rd.rank())) r = m;
  }
  std::sort(reps.begin(), reps.end(), [&](SubsetMask a, SubsetMask b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return SubsetMask::lex_less(a, b, rd.rank());
  });
  return reps;
}

ConjugacyOrbit::ConjugacyOrbit(const RootDatum& rd, const IntMat& seed, long long budget) {
  std::unordered_map<IntMat, long long, IntMatHash> index;
  order_.push_back(seed);
  parent_.emplace_back(-1, 0);
  index.emplace(seed, 0);
  std::vector<IntMat> gens, gens_inv;
  for (int i = 1; i <= rd.rank(); ++i) {
    gens.push_back(simple_reflection(rd, i).m);
    gens_inv.push_back(gens.back());  // s_i is its own inverse
  }
  for (size_t qi = 0; qi < order_.size(); ++qi) {
    IntMat cur = order_[qi];
    for (int i = 0; i < rd.rank(); ++i) {
      IntMat next = gens[static_cast<size_t>(i)].mul(cur).mul(gens_inv[static_cast<size_t>(i)]);
      auto [it, inserted] = index.emplace(next, static_cast<long long>(order_.size()));
      if (inserted) {
        if (static_cast<long long>(order_.size()) >= budget)
          throw BudgetExceeded(static_cast<long long>(order_.size()));
        order_.push_back(next);
        parent_.emplace_back(static_cast<long long>(qi), i + 1);
      }
    }
  }
  by_matrix_.resize(order_.size());
  for (size_t i = 0; i < order_.size(); ++i) by_matrix_[i] = static_cast<long long>(i);
  std::sort(by_matrix_.begin(), by_matrix_.end(),
            [&](long long a, long long b) { return order_[static_cast<size_t>(a)] < order_[static_cast<size_t>(b)]; });
}

long long ConjugacyOrbit::find(const IntMat& m) const {
  auto it = std::lower_bound(by_matrix_.begin(), by_matrix_.end(), m,
                             [&](long long a, const IntMat& v) { return order_[static_cast<size_t>(a)] < v; });
  if (it == by_matrix_.end() || !(order_[static_cast<size_t>(*it)] == m)) return -1;
  return *it;
}

std::vector<int> ConjugacyOrbit::conjugating_word(const IntMat& target) const {
  long long idx = find(target);
  if (idx < 0) throw std::invalid_argument("target not in conjugacy orbit");
  std::vector<int> word;
  while (idx > 0) {
    word.push_back(parent_[static_cast<size_t>(idx)].second);
    idx = parent_[static_cast<size_t>(idx)].first;
  }
  // built from target back to seed; word applied right to left conjugates
  // seed to target
  return word;
}

bool conjugate_involutions(const RootDatum& rd, const IntMat& sigma, const IntMat& tau,
                           long long budget) {
  auto involution = [](const IntMat& m) { return m.mul(m).is_identity(); };
  if (!involution(sigma) || !involution(tau))
    throw std::invalid_argument("conjugate_involutions: inputs must square to the identity");
  if (sigma == tau) return true;
  if (ell_plus_of(sigma) != ell_plus_of(tau)) return false;
  if (char_poly(sigma) != char_poly(tau)) return false;
  // walk the conjugation orbit of sigma, testing for tau as it grows
  std::unordered_set<IntMat, IntMatHash> seen{sigma};
  std::vector<IntMat> queue{sigma};
  std::vector<IntMat> gens;
  for (int i = 1; i <= rd.rank(); ++i) gens.push_back(simple_reflection(rd, i).m);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    IntMat cur = queue[qi];
    for (const auto& g : gens) {
      IntMat next = g.mul(cur).mul(g);
      if (next == tau) return true;
      if (seen.insert(next).second) {
        if (static_cast<long long>(queue.size()) >= budget)
          throw BudgetExceeded(static_cast<long long>(queue.size()));
        queue.push_back(next);
      }
    }
  }
  return false;
}

std::vector<IntMat> enumerate_weyl_group(const RootDatum& rd, size_t cap) {
  std::unordered_set<IntMat, IntMatHash> seen;
  std::vector<IntMat> queue{IntMat::identity(rd.rank())};
  seen.insert(queue.front());
  std::vector<IntMat> gens;
  for (int i = 1; i <= rd.rank(); ++i) gens.push_back(simple_reflection(rd, i).m);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    IntMat cur = queue[qi];
    for (const auto& g : gens) {
      IntMat next = g.mul(cur);
      if (seen.insert(next).second) {
        if (queue.size() >= cap) throw std::length_error("Weyl group enumeration exceeds cap");
        queue.push_back(next);
      }
    }
  }
  return queue;
}

}  // namespace wittflag
