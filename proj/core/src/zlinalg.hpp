#pragma once

// Internal exact linear algebra on small integer/rational matrices
// (dimensions <= kMaxRank everywhere, entries tiny).

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wittflag/rational.hpp"

namespace wittflag::zl {

using ZMat = std::vector<std::vector<long long>>;  // row-major
using ZVec = std::vector<long long>;

inline ZMat zeros(size_t m, size_t n) { return ZMat(m, ZVec(n, 0)); }

inline ZMat identity(size_t n) {
  ZMat r = zeros(n, n);
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline ZMat mul(const ZMat& a, const ZMat& b) {
  size_t m = a.size(), k = b.size(), n = b[0].size();
  ZMat r = zeros(m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      long long v = a[i][l];
      if (!v) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += v * b[l][j];
    }
  return r;
}

inline ZVec mulv(const ZMat& a, const ZVec& x) {
  ZVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

// Basis of {x in Z^n : A x = 0}. The kernel of an integer matrix is
// saturated, so this is also the kernel lattice. Column-style reduction with
// a unimodular transform.
inline std::vector<ZVec> integer_kernel(const ZMat& a_in) {
  size_t m = a_in.size(), n = a_in.empty() ? 0 : a_in[0].size();
  ZMat a = a_in;
  ZMat u = identity(n);  // columns track the transform: A * U = a
  size_t lead = 0;
  for (size_t row = 0; row < m && lead < n; ++row) {
    // clear row `row` to a single pivot column at `lead` by gcd elimination
    while (true) {
      size_t best = n;
      for (size_t j = lead; j < n; ++j)
        if (a[row][j] != 0 && (best == n || std::llabs(a[row][j]) < std::llabs(a[row][best])))
          best = j;
      if (best == n) break;  // row all zero from lead on
      if (best != lead) {
        for (size_t i = 0; i < m; ++i) std::swap(a[i][best], a[i][lead]);
        for (size_t i = 0; i < n; ++i) std::swap(u[i][best], u[i][lead]);
      }
      bool clean = true;
      for (size_t j = lead + 1; j < n; ++j) {
        if (a[row][j] == 0) continue;
        long long q = a[row][j] / a[row][lead];
        if (q != 0) {
          for (size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][lead];
          for (size_t i = 0; i < n; ++i) u[i][j] -= q * u[i][lead];
        }
        if (a[row][j] != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }
  // columns of u whose image column in a is zero form the kernel basis
  std::vector<ZVec> basis;
  for (size_t j = 0; j < n; ++j) {
    bool zero = true;
    for (size_t i = 0; i < m && zero; ++i) zero = (a[i][j] == 0);
    if (zero) {
      ZVec v(n);
      for (size_t i = 0; i < n; ++i) v[i] = u[i][j];
      basis.push_back(v);
    }
  }
  return basis;
}

// Solve A x = b exactly over Q; returns false if inconsistent.
inline bool solve_rational(const std::vector<std::vector<Rat>>& a_in, const std::vector<Rat>& b_in,
                           std::vector<Rat>& x_out) {
  size_t m = a_in.size(), n = a_in.empty() ? 0 : a_in[0].size();
  std::vector<std::vector<Rat>> a = a_in;
  std::vector<Rat> b = b_in;
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && a[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    Rat inv = Rat(1) / a[row][col];
    for (size_t j = col; j < n; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (!b[i].is_zero()) return false;
  x_out.assign(n, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x_out[pivot_col[i]] = b[i];
  return true;
}

inline size_t rank_rational(const std::vector<std::vector<Rat>>& a_in) {
  auto a = a_in;
  size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && a[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    for (size_t i = row + 1; i < m; ++i) {
      if (a[i][col].is_zero()) continue;
      Rat f = a[i][col] / a[row][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

// Smith normal form: returns (u, d, v) with u * a * v = d, u and v
// unimodular, d diagonal with non-negative entries.
struct Smith {
  ZMat u, d, v;
};

inline Smith smith_normal_form(const ZMat& a_in) {
  size_t m = a_in.size(), n = a_in[0].size();
  Smith s{identity(m), a_in, identity(n)};
  ZMat& d = s.d;
  size_t t = 0;
  while (t < m && t < n) {
    // find the smallest nonzero entry in the remaining block
    size_t pi = m, pj = n;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (d[i][j] != 0 && (pi == m || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;  // block is zero
    if (pi != t) {
      std::swap(d[pi], d[t]);
      std::swap(s.u[pi], s.u[t]);
    }
    if (pj != t) {
      for (size_t i = 0; i < m; ++i) std::swap(d[i][pj], d[i][t]);
      for (size_t i = 0; i < n; ++i) std::swap(s.v[i][pj], s.v[i][t]);
    }
    bool reduced = true;
    for (size_t i = t + 1; i < m; ++i) {
      long long q = d[i][t] / d[t][t];
      if (q) {
        for (size_t j = 0; j < n; ++j) d[i][j] -= q * d[t][j];
        for (size_t j = 0; j < m; ++j) s.u[i][j] -= q * s.u[t][j];
      }
      if (d[i][t] != 0) reduced = false;
    }
    for (size_t j = t + 1; j < n; ++j) {
      long long q = d[t][j] / d[t][t];
      if (q) {
        for (size_t i = 0; i < m; ++i) d[i][j] -= q * d[i][t];
        for (size_t i = 0; i < n; ++i) s.v[i][j] -= q * s.v[i][t];
      }
      if (d[t][j] != 0) reduced = false;
    }
    if (!reduced) continue;
    if (d[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) d[t][j] = -d[t][j];
      for (size_t j = 0; j < m; ++j) s.u[t][j] = -s.u[t][j];
    }
    ++t;
  }
  // (divisibility chaining is not needed by our callers: only the diagonal
  // product and the unimodular transforms are used)
  return s;
}

inline long long vec_gcd(const ZVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, std::llabs(x));
  return g;
}

}  // namespace wittflag::zl
