#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittflag {

inline constexpr int kMaxRank = 8;

// Integer vector in fundamental-weight coordinates, zero-padded to kMaxRank
// so that equality and hashing can ignore the rank-dependent tail.
struct Weight {
  std::array<int, kMaxRank> c{};
  int n = 0;

  Weight() = default;
  explicit Weight(int rank) : n(rank) {}
  Weight(int rank, std::initializer_list<int> coords) : n(rank) {
    int i = 0;
    for (int v : coords) c[i++] = v;
  }

  int& operator[](int i) { return c[static_cast<size_t>(i)]; }
  int operator[](int i) const { return c[static_cast<size_t>(i)]; }
  // 1-based accessor (Bourbaki node index)
  int coord(int node) const { return c[static_cast<size_t>(node - 1)]; }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) return false;
    return true;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a.n);
    for (int i = 0; i < a.n; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a.n);
    for (int i = 0; i < a.n; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  Weight operator-() const {
    Weight r(n);
    for (int i = 0; i < n; ++i) r.c[i] = -c[i];
    return r;
  }
  Weight scaled(int k) const {
    Weight r(n);
    for (int i = 0; i < n; ++i) r.c[i] = k * c[i];
    return r;
  }

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(w.n);
    for (int i = 0; i < kMaxRank; ++i) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(w.c[i])) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

// Square integer matrix acting on Weight coordinates, row-major.
struct IntMat {
  std::array<int, kMaxRank * kMaxRank> a{};
  int n = 0;

  IntMat() = default;
  explicit IntMat(int rank) : n(rank) {}

  static IntMat identity(int rank) {
    IntMat m(rank);
    for (int i = 0; i < rank; ++i) m.at(i, i) = 1;
    return m;
  }

  int& at(int i, int j) { return a[static_cast<size_t>(i * kMaxRank + j)]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i * kMaxRank + j)]; }

  Weight apply(const Weight& w) const {
    Weight r(n);
    for (int i = 0; i < n; ++i) {
      long long s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<long long>(at(i, j)) * w.c[j];
      r.c[i] = static_cast<int>(s);
    }
    return r;
  }

  IntMat mul(const IntMat& o) const {
    IntMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  IntMat negated() const {
    IntMat r(n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = -a[i];
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j)) return false;
    return true;
  }

  long long trace() const {
    long long t = 0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }

  bool operator==(const IntMat&) const = default;
  auto operator<=>(const IntMat&) const = default;
};

struct IntMatHash {
  size_t operator()(const IntMat& m) const {
    uint64_t h = 0xcbf29ce484222325ull ^ static_cast<uint64_t>(m.n);
    for (size_t i = 0; i < m.a.size(); ++i) {
      h = (h ^ static_cast<uint64_t>(static_cast<uint32_t>(m.a[i]))) * 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

// Subset of simple-root indices (1-based Bourbaki nodes), stored as a bitmask.
struct SubsetMask {
  unsigned bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(unsigned b) : bits(b) {}

  static SubsetMask full(int rank) { return SubsetMask((1u << rank) - 1u); }
  static SubsetMask of(std::initializer_list<int> nodes) {
    SubsetMask m;
    for (int v : nodes) m.bits |= 1u << (v - 1);
    return m;
  }

  bool contains(int node) const { return (bits >> (node - 1)) & 1u; }
  SubsetMask with(int node) const { return SubsetMask(bits | (1u << (node - 1))); }
  SubsetMask without(int node) const { return SubsetMask(bits & ~(1u << (node - 1))); }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }

  std::vector<int> nodes(int rank) const {
    std::vector<int> r;
    for (int i = 1; i <= rank; ++i)
      if (contains(i)) r.push_back(i);
    return r;
  }

  // "o" = not in the subset, "*" = in the subset
  std::string mask_string(int rank) const {
    std::string s;
    for (int i = 1; i <= rank; ++i) s += contains(i) ? '*' : 'o';
    return s;
  }

  // Accepts "1,3,4", a mask string like "*o**", "none", "-" or "" for the
  // empty subset, and "all" for the full diagram.
  static SubsetMask parse(const std::string& spec, int rank);

  // Lexicographic order on the ascending node lists (so {1,4} < {2,3}).
  static bool lex_less(SubsetMask a, SubsetMask b, int rank) {
    for (int i = 1; i <= rank; ++i) {
      bool ia = a.contains(i), ib = b.contains(i);
      if (ia != ib) return ia;  // containing the smaller node sorts first
    }
    return false;
  }

  bool operator==(const SubsetMask&) const = default;
  auto operator<=>(const SubsetMask&) const = default;
};

struct BudgetExceeded : std::runtime_error {
  long long visited;
  explicit BudgetExceeded(long long v)
      : std::runtime_error("conjugacy search budget exceeded after visiting " +
                           std::to_string(v) + " elements; raise the budget"),
        visited(v) {}
};

struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource caps threaded through the heavier operations.
struct Limits {
  long long conjugacy_budget = 1'000'000;
  long long orbit_term_cap = 100'000;        // per-factor term count in products
  long long product_pair_cap = 100'000'000;  // pairwise multiplications in a product
  int degree_cap = 3;
  int threads = 1;
};

}  // namespace wittflag
