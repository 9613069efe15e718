#pragma once

// Root data for the irreducible types A-G and the non-crystallographic H2,
// and Weyl orbit enumeration on weights written in the fundamental-weight
// basis.
//
// Numbering follows Bourbaki. Conventions:
//   cartan[i][j] = <alpha_i^vee, alpha_j>, so column j holds alpha_j in
//   omega-coordinates and s_j(lambda) = lambda - lambda_j * alpha_j.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylexp/error.hpp"
#include "weylexp/scalar.hpp"

namespace weylexp {

enum class Family { A, B, C, D, E, F, G, H2 };

struct RootSystemKind {
  Family family = Family::A;
  int rank = 1;

  bool crystallographic() const { return family != Family::H2; }
  bool classical() const {
    return family == Family::A || family == Family::B || family == Family::C ||
           family == Family::D;
  }
  /// "A3", "E8", "H2".
  std::string name() const;
  /// Throws UsageError on inadmissible ranks.
  void validate() const;

  /// Family from "A".."G" or "H2"/"H"; rank defaults to 2 for H2.
  static RootSystemKind parse(const std::string &family, std::optional<int> rank);

  friend bool operator==(const RootSystemKind &, const RootSystemKind &) = default;
  friend auto operator<=>(const RootSystemKind &, const RootSystemKind &) = default;
};

std::string family_letter(Family f);

template <Scalar R> struct Weight {
  std::vector<R> coords;

  Weight() = default;
  explicit Weight(std::size_t n) : coords(n) {}
  explicit Weight(std::vector<R> c) : coords(std::move(c)) {}

  static Weight fundamental(std::size_t n, std::size_t j) {
    Weight w(n);
    w.coords[j] = R(1);
    return w;
  }

  std::size_t size() const { return coords.size(); }
  const R &operator[](std::size_t i) const { return coords[i]; }
  R &operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    for (const auto &c : coords)
      if (!weylexp::is_zero(c))
        return false;
    return true;
  }

  Weight &operator+=(const Weight &o) {
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] += o.coords[i];
    return *this;
  }
  Weight &operator-=(const Weight &o) {
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight x, const Weight &y) { return x += y; }
  friend Weight operator-(Weight x, const Weight &y) { return x -= y; }
  friend Weight operator-(Weight x) {
    for (auto &c : x.coords)
      c = -c;
    return x;
  }
  friend Weight operator*(const R &s, Weight x) {
    for (auto &c : x.coords)
      c = s * c;
    return x;
  }

  friend bool operator==(const Weight &x, const Weight &y) {
    if (x.coords.size() != y.coords.size())
      return false;
    for (std::size_t i = 0; i < x.coords.size(); ++i)
      if (!(x.coords[i] == y.coords[i]))
        return false;
    return true;
  }
  /// Lexicographic on coordinates.
  friend bool operator<(const Weight &x, const Weight &y) {
    for (std::size_t i = 0; i < x.coords.size() && i < y.coords.size(); ++i) {
      int c = compare_scalar(x.coords[i], y.coords[i]);
      if (c != 0)
        return c < 0;
    }
    return x.coords.size() < y.coords.size();
  }
};

template <Scalar R> std::string to_string(const Weight<R> &w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ", ";
    s += to_string(w[i]);
  }
  return s + ")";
}

/// Comma-separated coordinates, e.g. "1,0,-1" or "1,-tau".
template <Scalar R> Weight<R> parse_weight(const std::string &text);

template <class R> using Matrix = std::vector<std::vector<R>>;

struct OrbitLimits {
  std::size_t orbit_cap = 1'000'000;
  std::size_t stream_cap = 100'000'000;
};

class RootSystem {
public:
  static RootSystem build(RootSystemKind kind);

  const RootSystemKind &kind() const { return kind_; }
  int rank() const { return kind_.rank; }
  bool crystallographic() const { return kind_.crystallographic(); }

  /// Integer Cartan matrix; crystallographic kinds only.
  const Matrix<Int> &cartan() const;
  /// The Cartan matrix embedded in Z[tau]; defined for every kind.
  const Matrix<GoldenInt> &cartan_golden() const { return cartan_golden_; }
  template <Scalar R> const Matrix<R> &cartan_as() const;

  /// d_i with d_i * cartan[i][j] symmetric and d = 1 on long simple roots,
  /// i.e. d_i = (alpha_i, alpha_i) / 2 under (long, long) = 2.
  const std::vector<Rational> &symmetrizer() const { return symmetrizer_; }

  /// All roots in omega-coordinates, lexicographically sorted.
  const std::vector<Weight<Int>> &roots() const;
  /// The same roots in the simple-root basis (parallel to roots()).
  const std::vector<std::vector<Int>> &root_coords() const;
  const Weight<Int> &highest_root() const;
  /// Coordinates of theta^vee in the simple-coroot basis, so that
  /// <lambda, theta^vee> = sum_i c_i lambda_i.
  const std::vector<Int> &theta_covector() const;

  /// alpha_j in omega-coordinates (column j of the Cartan matrix).
  template <Scalar R> Weight<R> simple_root(std::size_t j) const;

  /// (beta, beta) for a root given in simple-root coordinates.
  Rational root_norm(const std::vector<Int> &root_coords) const;
  /// beta^vee in the simple-coroot basis.
  std::vector<Int> coroot(const std::vector<Int> &root_coords) const;
  /// Coroots of the long roots (the short coroots), simple-coroot basis.
  std::vector<std::vector<Int>> short_coroots() const;

  std::size_t weyl_group_order() const;

  /// Copy with one Cartan entry replaced. Used as a negative-control
  /// fixture; the result is generally not a root system.
  RootSystem with_cartan_entry(std::size_t i, std::size_t j, long value) const;

private:
  RootSystemKind kind_;
  std::optional<Matrix<Int>> cartan_;
  Matrix<GoldenInt> cartan_golden_;
  std::vector<Rational> symmetrizer_;
  std::vector<Weight<Int>> roots_;
  std::vector<std::vector<Int>> root_coords_;
  Weight<Int> highest_root_;
  std::vector<Int> theta_covector_;

  void derive_roots();
};

template <> inline const Matrix<Int> &RootSystem::cartan_as<Int>() const { return cartan(); }
template <> inline const Matrix<GoldenInt> &RootSystem::cartan_as<GoldenInt>() const {
  return cartan_golden_;
}

template <Scalar R> Weight<R> RootSystem::simple_root(std::size_t j) const {
  const auto &c = cartan_as<R>();
  Weight<R> a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    a[i] = c[i][j];
  return a;
}

/// s_j(lambda) = lambda - lambda_j * alpha_j.
template <Scalar R> Weight<R> reflect(const RootSystem &rs, std::size_t j, const Weight<R> &lambda) {
  const auto &c = rs.cartan_as<R>();
  if (j >= c.size())
    throw UsageError("reflection index out of range");
  Weight<R> out = lambda;
  if (is_zero(lambda[j]))
    return out;
  const R lj = lambda[j];
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] -= lj * c[i][j];
  return out;
}

/// Calls `visit` once per element of W(chi). Elements are produced level by
/// level from the dominant representative (each step lowers by a simple
/// reflection whose coordinate is positive), so only one BFS level is ever
/// held in memory. Within a level the order is lexicographic.
template <Scalar R>
void orbit_stream(const RootSystem &rs, const Weight<R> &chi,
                  const std::function<void(const Weight<R> &)> &visit,
                  std::size_t cap = OrbitLimits{}.stream_cap);

/// The full orbit, sorted lexicographically.
template <Scalar R>
std::vector<Weight<R>> orbit(const RootSystem &rs, const Weight<R> &chi,
                             std::size_t cap = OrbitLimits{}.orbit_cap);

/// The dominant element of W(chi).
template <Scalar R>
Weight<R> dominant_representative(const RootSystem &rs, const Weight<R> &chi,
                                  std::size_t cap = OrbitLimits{}.stream_cap);

/// <lambda, theta^vee> for the highest root theta.
Int pairing_with_long_coroot(const RootSystem &rs, const Weight<Int> &lambda);

/// Orthonormal-basis chart for the classical families:
///   A_n: omega_k = e_1 + ... + e_k (k < n), omega_n = -e_{n+1}, taken
///        modulo e_1 + ... + e_{n+1};
///   B_n, C_n, D_n: omega_k = e_1 + ... + e_k, with the spin weights
///        of B_n and D_n carrying halves.
class OrthChart {
public:
  static OrthChart build(RootSystemKind kind);

  const RootSystemKind &kind() const { return kind_; }
  /// Number of e-coordinates (n + 1 for A_n, n otherwise).
  std::size_t dimension() const { return dim_; }

  std::vector<Rational> to_orth(const std::vector<Rational> &omega_coords) const;
  std::vector<Rational> to_orth(const Weight<Int> &lambda) const;
  /// omega-coordinates via lambda_k = <alpha_k^vee, v>.
  std::vector<Rational> from_orth(const std::vector<Rational> &e_coords) const;
  /// e_j written as an integral weight.
  Weight<Int> e_weight(std::size_t j) const;
  /// True when two e-vectors name the same weight (A_n is a quotient).
  bool equivalent(const std::vector<Rational> &v, const std::vector<Rational> &w) const;

private:
  RootSystemKind kind_;
  std::size_t dim_ = 0;
  Matrix<Rational> omega_e_;   // row k: e-coordinates of omega_k
  Matrix<Int> coroot_e_;       // row k: e-coordinates of alpha_k^vee
};

} // namespace weylexp
