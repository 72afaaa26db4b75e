#include "wittflag/root_datum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "zlinalg.hpp"

namespace wittflag {

namespace detail {
const char* cartan_table();  // generated from data/cartan_matrices.txt
}

bool valid_simple_type(Family f, int rank) {
  if (rank > kMaxRank) return false;
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::optional<SimpleType> SimpleType::parse(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') return std::nullopt;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  int rank = std::stoi(s.substr(1));
  SimpleType t{static_cast<Family>(f), rank};
  if (!valid_simple_type(t.family, t.rank)) return std::nullopt;
  return t;
}

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> r;
  for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
    for (int n = 1; n <= max_rank; ++n)
      if (valid_simple_type(static_cast<Family>(f), n)) r.push_back({static_cast<Family>(f), n});
  return r;
}

namespace {

int classical_positive_root_count(SimpleType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

std::map<std::string, IntMat> parse_cartan_table(const char* text) {
  std::map<std::string, IntMat> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok != "type") throw std::logic_error("cartan table: expected 'type', got " + tok);
    std::string fam;
    int rank;
    in >> fam >> rank;
    IntMat m(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (!(in >> m.at(i, j))) throw std::logic_error("cartan table: truncated matrix");
    out[fam + std::to_string(rank)] = m;
  }
  return out;
}

}  // namespace

const RootDatum& RootDatum::get(SimpleType t) {
  if (!valid_simple_type(t.family, t.rank))
    throw std::invalid_argument("invalid rank " + std::to_string(t.rank) + " for family " +
                                std::string(1, static_cast<char>(t.family)));
  static std::mutex mu;
  static std::map<SimpleType, const RootDatum*> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(t);
  if (it != registry.end()) return *it->second;

  static const std::map<std::string, IntMat> table = parse_cartan_table(detail::cartan_table());
  auto ct = table.find(t.str());
  if (ct == table.end()) throw std::logic_error("cartan table: missing entry for " + t.str());
  const RootDatum* rd = new RootDatum(t, ct->second);  // lives for the process
  registry.emplace(t, rd);
  return *rd;
}

RootDatum::RootDatum(SimpleType t, const IntMat& cartan)
    : type_(t), rank_(t.rank), cartan_(cartan) {
  build();
  validate();
}

Rat RootDatum::inner(const Weight& v, const Weight& w) const {
  Rat s(0);
  for (int i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (w[j] == 0) continue;
      s += gram_[static_cast<size_t>(i * rank_ + j)] * Rat(static_cast<long long>(v[i]) * w[j]);
    }
  }
  return s;
}

bool RootDatum::connected_subdiagram(SubsetMask s) const {
  auto nodes = s.nodes(rank_);
  if (nodes.size() <= 1) return true;
  std::vector<int> stack{nodes.front()};
  SubsetMask seen = SubsetMask().with(nodes.front());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : nodes)
      if (!seen.contains(u) && adjacent(u, v)) {
        seen = seen.with(u);
        stack.push_back(u);
      }
  }
  return seen == s;
}

std::vector<Rat> RootDatum::to_root_coords(const Weight& w) const {
  std::vector<Rat> r(static_cast<size_t>(rank_), Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      r[static_cast<size_t>(i)] += cartan_inv(i + 1, j + 1) * Rat(w[j]);
  return r;
}

void RootDatum::build() {
  const int n = rank_;

  // simple roots: alpha_j = sum_i C_ij omega_i (the j-th column of C)
  simple_roots_.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = cartan_.at(i, j);
    simple_roots_[static_cast<size_t>(j)] = w;
  }

  // inverse Cartan matrix
  {
    std::vector<std::vector<Rat>> a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    cinv_.assign(static_cast<size_t>(n * n), Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(cartan_.at(i, j));
    for (int col = 0; col < n; ++col) {
      std::vector<Rat> b(static_cast<size_t>(n), Rat(0)), x;
      b[static_cast<size_t>(col)] = Rat(1);
      if (!zl::solve_rational(a, b, x)) throw std::logic_error("cartan matrix is singular");
      for (int i = 0; i < n; ++i) cinv_[static_cast<size_t>(i * n + col)] = x[static_cast<size_t>(i)];
    }
  }

  // root norms: d_i C_ij = d_j C_ji with max norm 2 (long roots)
  {
    std::vector<Rat> d(static_cast<size_t>(n), Rat(0));
    d[0] = Rat(1);
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (cartan_.at(i, j) == 0 || i == j || !d[static_cast<size_t>(j)].is_zero()) continue;
        d[static_cast<size_t>(j)] =
            d[static_cast<size_t>(i)] * Rat(cartan_.at(i, j), cartan_.at(j, i));
        stack.push_back(j);
      }
    }
    Rat dmax(0);
    for (auto& x : d) {
      if (x.is_zero()) throw std::logic_error("disconnected Cartan matrix for " + type_.str());
      if (x > dmax) dmax = x;
    }
    norm2_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) norm2_[static_cast<size_t>(i)] = d[static_cast<size_t>(i)] / dmax * Rat(2);
  }

  // gram matrix: (omega_i, omega_j) = Cinv_ji * (alpha_j, alpha_j)/2
  gram_.assign(static_cast<size_t>(n * n), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram_[static_cast<size_t>(i * n + j)] =
          cartan_inv(j + 1, i + 1) * norm2_[static_cast<size_t>(j)] * Rat(1, 2);

  // positive roots: closure of the simple roots under simple reflections,
  // tracked in simple-root coordinates
  {
    std::unordered_set<Weight, WeightHash> seen;
    std::vector<Weight> queue;
    for (int j = 0; j < n; ++j) {
      Weight rc(n);
      rc[j] = 1;
      seen.insert(rc);
      queue.push_back(rc);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Weight rc = queue[qi];
      // omega-coordinates: C * rc
      Weight wc(n);
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long long>(cartan_.at(i, j)) * rc[j];
        wc[i] = static_cast<int>(s);
      }
      for (int i = 0; i < n; ++i) {
        // s_i in root coordinates: rc' = rc - <alpha_i^vee, gamma> e_i
        Weight next = rc;
        next[i] -= wc[i];
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    std::vector<Weight> positive;
    for (const auto& rc : queue) {
      bool pos = true;
      for (int i = 0; i < n; ++i)
        if (rc[i] < 0) pos = false;
      if (pos) positive.push_back(rc);
    }
    std::sort(positive.begin(), positive.end());
    positive_roots_.reserve(positive.size());
    for (const auto& rc : positive) {
      Root r;
      r.root_coords = rc;
      Weight wc(n);
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long long>(cartan_.at(i, j)) * rc[j];
        wc[i] = static_cast<int>(s);
      }
      r.weight_coords = wc;
      // gamma^vee = sum_i c_i (alpha_i,alpha_i)/(gamma,gamma) alpha_i^vee
      Rat g2(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rc[i] && rc[j])
            g2 += Rat(static_cast<long long>(rc[i]) * rc[j]) * Rat(cartan_.at(i, j)) *
                  norm2_[static_cast<size_t>(i)] * Rat(1, 2);
      Weight cv(n);
      for (int i = 0; i < n; ++i) {
        Rat coef = Rat(rc[i]) * norm2_[static_cast<size_t>(i)] / g2;
        cv[i] = static_cast<int>(coef.integer());
      }
      r.coroot_coords = cv;
      positive_roots_.push_back(r);
    }
  }

  // <2 rho^vee, -> = sum of the positive coroot covectors
  two_rho_ = Weight(n);
  for (const auto& r : positive_roots_)
    for (int i = 0; i < n; ++i) two_rho_[i] += r.coroot_coords[i];
}

void RootDatum::validate() const {
  const int n = rank_;
  // C * Cinv = 1
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s(0);
      for (int k = 0; k < n; ++k) s += Rat(cartan_.at(i, k)) * cartan_inv(k + 1, j + 1);
      if (s != Rat(i == j ? 1 : 0)) throw std::logic_error("C * Cinv != 1 for " + type_.str());
    }
  // positive root count
  if (static_cast<int>(positive_roots_.size()) != classical_positive_root_count(type_))
    throw std::logic_error("positive root count mismatch for " + type_.str() + ": got " +
                           std::to_string(positive_roots_.size()));
  // <2rho^vee, alpha_i> = 2 for every simple root
  for (int i = 1; i <= n; ++i)
    if (two_rho_pair(simple_root(i)) != 2)
      throw std::logic_error("<rho^vee, alpha> != 1 for " + type_.str());
  // gram symmetry and invariance under every simple reflection:
  // (s_i v, s_i w) = (v, w) checked on the omega basis
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram_[static_cast<size_t>(i * n + j)] != gram_[static_cast<size_t>(j * n + i)])
        throw std::logic_error("gram matrix not symmetric for " + type_.str());
  for (int k = 1; k <= n; ++k) {
    // s_k(omega_j) = omega_j - delta_kj alpha_k
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        Weight a = fundamental_weight(i), b = fundamental_weight(j);
        Weight sa = i == k ? a - simple_root(k) : a;
        Weight sb = j == k ? b - simple_root(k) : b;
        if (inner(sa, sb) != inner(a, b))
          throw std::logic_error("inner product not reflection invariant for " + type_.str());
      }
  }
  // pairing vs inner product on every positive root and fundamental weight
  for (const auto& g : positive_roots_) {
    Rat g2 = inner(g.weight_coords, g.weight_coords);
    for (int j = 1; j <= n; ++j) {
      Weight w = fundamental_weight(j);
      Rat lhs(pairing(g, w));
      Rat rhs = Rat(2) * inner(g.weight_coords, w) / g2;
      if (lhs != rhs)
        throw std::logic_error("pairing/inner-product identity fails for " + type_.str());
    }
  }
}

}  // namespace wittflag
