#include "wittflag/cone.hpp"

#include <algorithm>

#include "zlinalg.hpp"

namespace wittflag {

std::vector<Weight> fixed_cone_generators(const RootDatum& rd, SubsetMask h_set) {
  Involution dual = duality(rd, h_set);
  std::vector<Weight> gens;
  for (int t = 1; t <= rd.rank(); ++t) {
    if (!h_set.contains(t)) continue;  // [H] = -1 outside span(H): e_beta = 0
    Weight e = rd.fundamental_weight(t) + dual.element.apply(rd.fundamental_weight(t));
    if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

bool in_fixed_cone(const RootDatum& rd, const Involution& h_dual, SubsetMask h_set,
                   const Weight& w) {
  if (!rd.dominant(w, h_set)) return false;
  return h_dual.element.apply(w) == w;
}

namespace {

Weight primitive(const Weight& w) {
  long long g = 0;
  for (int i = 0; i < w.n; ++i) g = std::gcd(g, static_cast<long long>(std::abs(w[i])));
  if (g <= 1) return w;
  Weight r(w.n);
  for (int i = 0; i < w.n; ++i) r[i] = static_cast<int>(w[i] / g);
  return r;
}

// Solve B x = target over Q and require an integer solution.
zl::ZVec solve_integral(const std::vector<std::vector<Rat>>& b_cols, const std::vector<Rat>& target) {
  std::vector<Rat> x;
  if (!zl::solve_rational(b_cols, target, x))
    throw std::logic_error("fixed-cone generator outside the fixed lattice span");
  zl::ZVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i].integer();
  return r;
}

}  // namespace

FixedConeMonoid hilbert_basis(const RootDatum& rd, SubsetMask h_set) {
  const int n = rd.rank();
  FixedConeMonoid out;
  out.generators = fixed_cone_generators(rd, h_set);
  Involution dual = duality(rd, h_set);
  out.dim = dual.ell_plus;
  if (h_set.empty()) return out;  // [empty] = -1: the zero monoid

  // fixed sublattice L = ker([H] - 1) over Z
  zl::ZMat fix(static_cast<size_t>(n), zl::ZVec(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fix[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          dual.element.m.at(i, j) - (i == j ? 1 : 0);
  std::vector<zl::ZVec> lattice = zl::integer_kernel(fix);
  const size_t d = lattice.size();
  if (static_cast<int>(d) != out.dim)
    throw std::logic_error("fixed lattice dimension disagrees with ell_plus([H])");

  // primitive ray generators
  std::vector<Weight> rays;
  for (const auto& e : out.generators) {
    Weight p = primitive(e);
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
  }
  if (rays.size() != d)
    throw std::logic_error("fixed cone is not simplicial: ray count != dimension");

  // express rays in lattice coordinates (columns of B are the lattice basis)
  std::vector<std::vector<Rat>> b_cols(static_cast<size_t>(n), std::vector<Rat>(d));
  for (size_t j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) b_cols[static_cast<size_t>(i)][j] = Rat(lattice[j][static_cast<size_t>(i)]);
  zl::ZMat ray_cols(d, zl::ZVec(d));  // column j = ray j in lattice coords
  for (size_t j = 0; j < d; ++j) {
    std::vector<Rat> target(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) target[static_cast<size_t>(i)] = Rat(rays[j][i]);
    zl::ZVec col = solve_integral(b_cols, target);
    for (size_t i = 0; i < d; ++i) ray_cols[i][j] = col[i];
  }

  // lattice points of the fundamental parallelepiped, one per coset of
  // Z^d / R Z^d, enumerated through the Smith form U R V = D
  zl::Smith sm = zl::smith_normal_form(ray_cols);
  long long det = 1;
  for (size_t i = 0; i < d; ++i) det *= sm.d[i][i];
  if (det == 0) throw std::logic_error("fixed cone rays are linearly dependent");
  if (det < 0) det = -det;
  if (det > 1'000'000) throw std::length_error("fixed cone index unexpectedly large");

  std::vector<std::vector<Rat>> rcols_rat(d, std::vector<Rat>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) rcols_rat[i][j] = Rat(ray_cols[i][j]);
  zl::ZMat uinv;
  {
    IntMat u(static_cast<int>(d));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) u.at(static_cast<int>(i), static_cast<int>(j)) = static_cast<int>(sm.u[i][j]);
    IntMat ui = unimodular_inverse(u);
    uinv = zl::zeros(d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) uinv[i][j] = ui.at(static_cast<int>(i), static_cast<int>(j));
  }

  std::vector<Weight> candidates = rays;
  zl::ZVec t(d, 0);
  for (long long count = 0; count < det; ++count) {
    // y = U^{-1} t is one representative of its coset; reduce it into the
    // half-open parallelepiped via the fractional ray coordinates
    zl::ZVec y = zl::mulv(uinv, t);
    std::vector<Rat> lambda;
    std::vector<Rat> target(d);
    for (size_t i = 0; i < d; ++i) target[i] = Rat(y[i]);
    if (!zl::solve_rational(rcols_rat, target, lambda))
      throw std::logic_error("parallelepiped solve failed");
    zl::ZVec point(d, 0);
    for (size_t i = 0; i < d; ++i) point[i] = y[i];
    for (size_t j = 0; j < d; ++j) {
      long long fl = lambda[j].floor();
      if (fl == 0) continue;
      for (size_t i = 0; i < d; ++i) point[i] -= fl * ray_cols[i][j];
    }
    // back to weight coordinates
    Weight w(n);
    for (int i = 0; i < n; ++i) {
      long long s = 0;
      for (size_t j = 0; j < d; ++j) s += lattice[j][static_cast<size_t>(i)] * point[j];
      w[i] = static_cast<int>(s);
    }
    if (!w.is_zero() && std::find(candidates.begin(), candidates.end(), w) == candidates.end()) {
      if (!in_fixed_cone(rd, dual, h_set, w))
        throw std::logic_error("parallelepiped point escaped the cone");
      candidates.push_back(w);
    }
    // increment t in the mixed-radix system given by the Smith diagonal
    for (size_t i = 0; i < d; ++i) {
      if (++t[i] < sm.d[i][i]) break;
      t[i] = 0;
    }
  }

  // reduce to the irreducible elements: x stays iff no candidate y != x has
  // x - y still in the cone
  std::vector<Weight> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      if (in_fixed_cone(rd, dual, h_set, x - y)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  out.hilbert_basis = basis;

  // freeness and integer relations
  out.is_free = basis.size() == d;
  if (!out.is_free) {
    zl::ZMat mat(static_cast<size_t>(n), zl::ZVec(basis.size()));
    for (int i = 0; i < n; ++i)
      for (size_t j = 0; j < basis.size(); ++j) mat[static_cast<size_t>(i)][j] = basis[j][i];
    auto kernel = zl::integer_kernel(mat);
    for (auto& rel : kernel) {
      long long g = zl::vec_gcd(rel);
      if (g > 1)
        for (auto& v : rel) v /= g;
      // sign convention: first nonzero coefficient positive
      for (auto& v : rel) {
        if (v == 0) continue;
        if (v < 0)
          for (auto& u : rel) u = -u;
        break;
      }
      out.relations.push_back(rel);
    }
    std::sort(out.relations.begin(), out.relations.end());
  }
  return out;
}

std::vector<Weight> face_fixed_basis(const RootDatum& rd, SubsetMask i_set) {
  SubsetMask sigma = SubsetMask::full(rd.rank());
  if (duality_subset_image(rd, sigma, i_set) != i_set)
    throw std::invalid_argument("face_fixed_basis: subset is not [Sigma]-symmetric");
  std::vector<Weight> basis;
  for (int a = 1; a <= rd.rank(); ++a) {
    if (i_set.contains(a)) continue;
    int b = duality_node_image(rd, sigma, a);
    if (b == a)
      basis.push_back(rd.fundamental_weight(a));
    else if (a < b)
      basis.push_back(rd.fundamental_weight(a) + rd.fundamental_weight(b));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace wittflag
