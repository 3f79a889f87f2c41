#pragma once

// Reference computations that share no code with the library: permutation and
// orthonormal-reflection models of W, explicit matrix Tits lifts in SL(n) and
// Sp(2n), a private coroot closure, and a floating-point eigenvector test.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using IMat = std::vector<std::vector<std::int64_t>>;

// ---------------------------------------------------------------- type A permutations

/// s_i swaps i-1 and i; the word acts as the composite s_{w1} o s_{w2} o ... on {0..m-1}.
inline std::vector<int> permutation(int m, const Word& w) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int i = *it;
    for (int& x : p) {
      if (x == i - 1) x = i;
      else if (x == i) x = i - 1;
    }
  }
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

inline std::int64_t permutation_order(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::int64_t o = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

// ---------------------------------------------------------------- orthonormal reflections

/// Simple roots of F4 in R^4, Bourbaki: e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2.
inline std::vector<Eigen::Vector4d> f4_roots() {
  return {Eigen::Vector4d(0, 1, -1, 0), Eigen::Vector4d(0, 0, 1, -1), Eigen::Vector4d(0, 0, 0, 1),
          Eigen::Vector4d(0.5, -0.5, -0.5, -0.5)};
}

inline Eigen::Matrix4d reflection(const Eigen::Vector4d& a) {
  return Eigen::Matrix4d::Identity() - 2.0 * a * a.transpose() / a.squaredNorm();
}

inline int f4_word_order(const Word& w) {
  auto roots = f4_roots();
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  for (int i : w) m = m * reflection(roots[i - 1]);
  Eigen::Matrix4d p = m;
  for (int k = 1; k <= 1152; ++k) {
    if ((p - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-9) return k;
    p = p * m;
  }
  throw std::logic_error("no finite order");
}

// ---------------------------------------------------------------- matrix Tits lifts

inline IMat identity(int n) {
  IMat m(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat mul(const IMat& a, const IMat& b) {
  int n = static_cast<int>(a.size());
  IMat c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k])
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// [[0,1],[-1,0]] on coordinates (p, q): exp(E) exp(-F) exp(E) for the root subgroup.
inline void put_block(IMat& m, int p, int q) {
  m[p][p] = 0;
  m[q][q] = 0;
  m[p][q] = 1;
  m[q][p] = -1;
}

/// sigma_i in SL(n) for alpha_i = e_i - e_{i+1}.
inline IMat sl_generator(int n, int i) {
  IMat m = identity(n);
  put_block(m, i - 1, i);
  return m;
}

/// sigma_i in Sp(2r) on e_1..e_r, f_1..f_r; alpha_r = 2 e_r is long.
inline IMat sp_generator(int r, int i) {
  IMat m = identity(2 * r);
  if (i < r) {
    put_block(m, i - 1, i);
    put_block(m, r + i - 1, r + i);
  } else {
    put_block(m, r - 1, 2 * r - 1);
  }
  return m;
}

inline IMat sl_lift(int n, const Word& w) {
  IMat m = identity(n);
  for (int i : w) m = mul(m, sl_generator(n, i));
  return m;
}

inline IMat sp_lift(int r, const Word& w) {
  IMat m = identity(2 * r);
  for (int i : w) m = mul(m, sp_generator(r, i));
  return m;
}

inline std::int64_t matrix_order(const IMat& m, std::int64_t bound = 1000) {
  IMat p = m;
  IMat id = identity(static_cast<int>(m.size()));
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = mul(p, m);
  }
  throw std::logic_error("matrix order exceeds bound");
}

inline IMat matrix_power(const IMat& m, std::int64_t k) {
  IMat p = identity(static_cast<int>(m.size()));
  for (std::int64_t i = 0; i < k; ++i) p = mul(p, m);
  return p;
}

// ---------------------------------------------------------------- coroot closure

/// Positive coroots from a Cartan matrix C[i][j] = <alpha_i, coroot_j>, by reflection closure
/// on coroot coordinates.
inline std::vector<std::vector<std::int64_t>> positive_coroots(const IMat& c) {
  int n = static_cast<int>(c.size());
  std::set<std::vector<std::int64_t>> all;
  std::vector<std::vector<std::int64_t>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    todo.push_back(e);
    all.insert(e);
  }
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      std::int64_t pair = 0;
      for (int j = 0; j < n; ++j) pair += c[i][j] * v[j];
      auto u = v;
      u[i] -= pair;
      if (all.insert(u).second) todo.push_back(u);
    }
  }
  std::vector<std::vector<std::int64_t>> pos;
  for (const auto& v : all)
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; })) pos.push_back(v);
  return pos;
}

/// 2 rho-check as an integer vector.
inline std::vector<std::int64_t> two_rho_check(const IMat& c) {
  std::vector<std::int64_t> s(c.size(), 0);
  for (const auto& v : positive_coroots(c))
    for (std::size_t i = 0; i < v.size(); ++i) s[i] += v[i];
  return s;
}

/// Root functionals mu -> <alpha, mu> on coroot coordinates, from the closure of the dual system.
inline std::vector<std::vector<double>> root_functionals(const IMat& c) {
  int n = static_cast<int>(c.size());
  IMat ct(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ct[i][j] = c[j][i];
  std::vector<std::vector<double>> out;
  for (const auto& a : positive_coroots(ct)) {
    std::vector<double> f(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f[j] += static_cast<double>(a[i] * c[i][j]);
    out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------- numeric regularity

/// Does the matrix have an eigenvector of eigenvalue exp(2 pi i/d) off every root hyperplane?
inline bool numerically_regular(const IMat& m, const IMat& cartan, int d) {
  int n = static_cast<int>(m.size());
  using C = std::complex<double>;
  const double pi = std::acos(-1.0);
  C zeta = std::polar(1.0, 2 * pi / d);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = C(static_cast<double>(m[i][j])) - (i == j ? zeta : C(0));
      // The LU threshold is relative, so round-off must not survive as a pivot.
      if (std::abs(a(i, j)) < 1e-12) a(i, j) = 0;
    }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  lu.setThreshold(1e-9);
  Eigen::MatrixXcd ker = lu.kernel();
  if (lu.dimensionOfKernel() == 0) return false;
  std::mt19937 rng(7);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  for (int k = 0; k < ker.cols(); ++k) v += C(g(rng), g(rng)) * ker.col(k);
  v /= v.norm();
  for (const auto& f : root_functionals(cartan)) {
    C s = 0;
    for (int j = 0; j < n; ++j) s += f[j] * v(j);
    if (std::abs(s) < 1e-7) return false;
  }
  return true;
}

}  // namespace oracle
