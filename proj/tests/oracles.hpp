#pragma once

// Independent reference computations used by the unit tests and the
// acceptance harness. Nothing here calls the library routine it checks.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "weylexp/lattice.hpp"
#include "weylexp/phi.hpp"
#include "weylexp/rootsys.hpp"

namespace oracle {

using weylexp::Int;
using weylexp::Rational;
using Rows = std::vector<std::vector<Int>>;

inline Rows random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Rows m(r, std::vector<Int>(c));
  for (auto &row : m)
    for (auto &x : row)
      x = d(rng);
  return m;
}

/// Hermite form by pairwise Euclid on rows (a different pivoting order from
/// the library); the result is unique, so both must agree.
inline Rows naive_hnf(Rows a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto sub = [&](std::size_t dst, std::size_t src, const Int &q) {
    for (std::size_t j = 0; j < cols; ++j)
      a[dst][j] -= q * a[src][j];
  };
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      while (a[i][col] != 0) {
        Int q = a[r][col] / a[i][col]; // truncating
        sub(r, i, q);
        std::swap(a[r], a[i]);
      }
    }
    if (a[r][col] == 0)
      continue;
    if (a[r][col] < 0)
      for (auto &x : a[r])
        x = -x;
    for (std::size_t k = 0; k < r; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[k][col].get_mpz_t(), a[r][col].get_mpz_t());
      sub(k, r, q);
    }
    ++r;
  }
  return a;
}

inline Int det3(const Rows &m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Elementary divisors of a 3x3 matrix from determinantal divisors:
/// d_k = gcd of the k x k minors, divisor_k = d_k / d_{k-1}.
inline std::vector<Int> determinantal_divisors3(const Rows &m) {
  Int g1 = 0, g2 = 0;
  for (const auto &row : m)
    for (const auto &x : row)
      g1 = gcd(g1, x);
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1)
          g2 = gcd(g2, Int(m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]));
  const Int g3 = abs(det3(m));
  std::vector<Int> out;
  if (g1 == 0)
    return out;
  out.push_back(g1);
  if (g2 == 0)
    return out;
  out.push_back(g2 / g1);
  if (g3 == 0)
    return out;
  out.push_back(g3 / g2);
  return out;
}

/// Coefficients c with c * basis = v over Q, or nothing when v is outside
/// the rational span. `basis` rows must be linearly independent.
inline std::optional<std::vector<Rational>> rational_solve(const Rows &basis, const std::vector<Int> &v) {
  const std::size_t k = basis.size(), d = v.size();
  // augmented system: columns are basis vectors, right side v
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < k && r < d; ++c) {
    std::size_t p = r;
    while (p < d && a[p][c] == 0)
      ++p;
    if (p == d)
      continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < d; ++i)
    if (a[i][k] != 0)
      return std::nullopt;
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    x[pivcol[i]] = a[i][k] / a[i][pivcol[i]];
  return x;
}

inline bool in_lattice(const Rows &basis, const std::vector<Int> &v) {
  auto x = rational_solve(basis, v);
  if (!x)
    return false;
  return std::all_of(x->begin(), x->end(), [](const Rational &q) { return q.get_den() == 1; });
}

/// Least N in 1..limit with N * every generator of m inside the lattice
/// with independent basis l; 0 if none.
inline int brute_force_exponent(const Rows &m, const Rows &l, int limit) {
  for (int n = 1; n <= limit; ++n) {
    bool all = true;
    for (const auto &g : m) {
      std::vector<Int> scaled = g;
      for (auto &x : scaled)
        x *= n;
      if (!in_lattice(l, scaled)) {
        all = false;
        break;
      }
    }
    if (all)
      return n;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Classical root systems in doubled orthonormal coordinates.

/// Twice the e-coordinates of omega_j (0-based), Bourbaki numbering.
inline std::vector<long> omega_e2(weylexp::Family f, int n, int j) {
  using weylexp::Family;
  const std::size_t dim = f == Family::A ? static_cast<std::size_t>(n + 1) : static_cast<std::size_t>(n);
  std::vector<long> v(dim, 0);
  auto ones = [&](int upto) {
    for (int i = 0; i < upto; ++i)
      v[static_cast<std::size_t>(i)] = 2;
  };
  switch (f) {
  case Family::A:
  case Family::C:
    ones(j + 1);
    break;
  case Family::B:
    if (j == n - 1)
      std::fill(v.begin(), v.end(), 1);
    else
      ones(j + 1);
    break;
  case Family::D:
    if (j == n - 1) {
      std::fill(v.begin(), v.end(), 1);
    } else if (j == n - 2) {
      std::fill(v.begin(), v.end(), 1);
      v.back() = -1;
    } else {
      ones(j + 1);
    }
    break;
  default:
    break;
  }
  return v;
}

/// Twice theta^vee in e-coordinates.
inline std::vector<long> theta_coroot_e2(weylexp::Family f, int n) {
  using weylexp::Family;
  const std::size_t dim = f == Family::A ? static_cast<std::size_t>(n + 1) : static_cast<std::size_t>(n);
  std::vector<long> v(dim, 0);
  if (f == Family::A) {
    v[0] = 2;
    v[dim - 1] = -2;
  } else if (f == Family::C) {
    v[0] = 2;
  } else {
    v[0] = 2;
    v[1] = 2;
  }
  return v;
}

/// W-orbit in e-coordinates: permutations (A), signed permutations (B, C)
/// or signed permutations with an even number of sign changes (D).
inline std::set<std::vector<long>> orbit_e(weylexp::Family f, std::vector<long> v) {
  using weylexp::Family;
  std::set<std::vector<long>> out;
  std::sort(v.begin(), v.end());
  const std::size_t dim = v.size();
  do {
    if (f == Family::A) {
      out.insert(v);
      continue;
    }
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
      if (f == Family::D && __builtin_popcount(mask) % 2 != 0)
        continue;
      auto w = v;
      for (std::size_t i = 0; i < dim; ++i)
        if (mask & (1u << i))
          w[i] = -w[i];
      out.insert(w);
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// 1/2 sum over W(omega_j) of <lambda, theta^vee>^2, entirely in
/// e-coordinates.
inline long dynkin_e(weylexp::Family f, int n, int j) {
  const auto theta = theta_coroot_e2(f, n);
  long sum = 0;
  for (const auto &w : orbit_e(f, omega_e2(f, n, j))) {
    long p = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      p += w[i] * theta[i];
    sum += p * p; // 16 <lambda, theta^vee>^2
  }
  return sum / 32;
}

// ---------------------------------------------------------------------------
// phi over Z[tau] by direct series expansion, for H2. Single exponentials
// have non-integral coefficients there, so everything is scaled by cap!.

/// (cap!)^n * prod_j (1 - w_j)^{-a_j}, truncated at `cap`.
template <weylexp::Scalar R>
weylexp::SparsePoly<R> series_exp_scaled(const weylexp::Weight<R> &a, int cap) {
  using weylexp::Monomial;
  using weylexp::SparsePoly;
  const std::size_t n = a.size();
  Int cap_fact = 1;
  for (int k = 2; k <= cap; ++k)
    cap_fact *= k;
  SparsePoly<R> acc = SparsePoly<R>::constant(n, R(1));
  for (std::size_t j = 0; j < n; ++j) {
    // cap! * binom(a + k - 1, k) = (cap! / k!) * prod_{t<k} (a + t)
    SparsePoly<R> f(n);
    R num(1);
    Int fact = 1;
    for (int k = 0; k <= cap; ++k) {
      if (k > 0) {
        num = num * (a[j] + R(k - 1));
        fact *= k;
      }
      f.add_term(Monomial::variable(n, j, k), R(Int(cap_fact / fact)) * num);
    }
    acc = SparsePoly<R>::multiply(acc, f, cap);
  }
  return acc;
}

} // namespace oracle
