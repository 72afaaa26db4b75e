#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittflag/basics.hpp"
#include "wittflag/rational.hpp"

namespace wittflag {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  // "A5", "F4", "E7", ... Returns nullopt on malformed or out-of-range input.
  static std::optional<SimpleType> parse(const std::string& s);

  std::string str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;
};

// Valid rank range per family (A>=1, B>=2, C>=2, D>=3, E in 6..8, F=4, G=2),
// capped at kMaxRank.
bool valid_simple_type(Family f, int rank);

// All valid simple types of rank <= max_rank, in family/rank order.
std::vector<SimpleType> all_simple_types(int max_rank = kMaxRank);

struct Root {
  Weight weight_coords;   // gamma in fundamental-weight coordinates (= C * root_coords)
  Weight root_coords;     // gamma in the simple-root basis
  Weight coroot_coords;   // gamma^vee in the simple-coroot basis,
                          // so <gamma^vee, v> = sum_i coroot_coords[i] * v[i]
};

// Immutable root-system database for one simple type, Bourbaki numbering.
// Construction validates the embedded Cartan data (exact arithmetic):
//   * C * C^{-1} = 1
//   * the classical positive-root count for the type
//   * <rho^vee, alpha> = 1 for every simple root
//   * the inner product is invariant under every simple reflection
//   * <alpha^vee, omega> = 2(alpha,omega)/(alpha,alpha) for all positive
//     roots and fundamental weights
class RootDatum {
 public:
  // Shared immutable instance; thread-safe. Throws std::invalid_argument for
  // an invalid rank/family combination.
  static const RootDatum& get(SimpleType t);

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }

  // 1-based everywhere below.
  int cartan(int i, int j) const { return cartan_.at(i - 1, j - 1); }
  Rat cartan_inv(int i, int j) const { return cinv_[(i - 1) * rank_ + (j - 1)]; }
  const Weight& simple_root(int j) const { return simple_roots_[j - 1]; }
  Weight fundamental_weight(int j) const {
    Weight w(rank_);
    w[j - 1] = 1;
    return w;
  }
  const IntMat& cartan_matrix() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  // W-invariant inner product, normalized so long roots have (a,a) = 2.
  Rat inner(const Weight& v, const Weight& w) const;
  Rat root_norm2(int j) const { return norm2_[j - 1]; }  // (alpha_j, alpha_j)

  // <gamma^vee, w> for a stored root
  long long pairing(const Root& gamma, const Weight& w) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long long>(gamma.coroot_coords[i]) * w[i];
    return s;
  }

  // Covector <2 rho^vee, -> on fundamental-weight coordinates.
  const Weight& two_rho_covector() const { return two_rho_; }
  long long two_rho_pair(const Weight& w) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long long>(two_rho_[i]) * w[i];
    return s;
  }

  bool dominant(const Weight& w) const {
    for (int i = 0; i < rank_; ++i)
      if (w[i] < 0) return false;
    return true;
  }
  bool dominant(const Weight& w, SubsetMask j_set) const {
    for (int i = 1; i <= rank_; ++i)
      if (j_set.contains(i) && w.coord(i) < 0) return false;
    return true;
  }

  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }
  // Connectedness of the induced subdiagram (empty counts as connected).
  bool connected_subdiagram(SubsetMask s) const;

  // Expresses a weight in the simple-root basis (rational coordinates).
  std::vector<Rat> to_root_coords(const Weight& w) const;

 private:
  RootDatum(SimpleType t, const IntMat& cartan);
  void build();
  void validate() const;

  SimpleType type_;
  int rank_;
  IntMat cartan_;
  std::vector<Rat> cinv_;    // rank x rank, row-major
  std::vector<Rat> norm2_;   // (alpha_j, alpha_j)
  std::vector<Rat> gram_;    // (omega_i, omega_j), row-major
  std::vector<Weight> simple_roots_;
  std::vector<Root> positive_roots_;
  Weight two_rho_;
};

}  // namespace wittflag
