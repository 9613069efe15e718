#pragma once

// The truncated isomorphism phi_i : Z[Lambda]/I_m^{i+1} -> S*(Lambda)/I_a^{i+1},
// e^{sum a_j w_j} -> prod_j (1 - w_j)^{-a_j}, in the fundamental-weight basis,
// and its graded pieces phi^(i) evaluated on orbit sums.
//
// Four independent ways to get phi^(i)(rho(chi)):
//   phi_rho_series     - truncated series product per orbit element
//   phi_rho_universal  - universal formula in lambda(m), divided per element
//   phi_rho_closed_form- orbit-summed closed forms with the sum lambda(m)
//                        terms dropped (they vanish on orbits)
//   phi_rho            - streamed power-sum accumulation, divided once at
//                        the end (the production path; works over Z[tau])

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "weylexp/polyring.hpp"
#include "weylexp/rootsys.hpp"
#include "weylexp/scalar.hpp"

namespace weylexp {

/// Finite sums sum c_lambda e^lambda in Z[Lambda].
template <Scalar R> class GroupRingElement {
public:
  using Terms = std::map<Weight<R>, R>;

  GroupRingElement() = default;
  explicit GroupRingElement(std::size_t n) : n_(n) {}

  static GroupRingElement exponential(const Weight<R> &lambda, const R &c = R(1)) {
    GroupRingElement x(lambda.size());
    x.add_term(lambda, c);
    return x;
  }
  static GroupRingElement one(std::size_t n) { return exponential(Weight<R>(n)); }

  std::size_t rank() const { return n_; }
  const Terms &terms() const { return terms_; }

  void add_term(const Weight<R> &lambda, const R &c) {
    if (is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second))
        terms_.erase(it);
    }
  }

  /// epsilon_m: e^lambda -> 1.
  R augmentation() const {
    R s(0);
    for (const auto &[w, c] : terms_)
      s += c;
    return s;
  }

  friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement &y) {
    for (const auto &[w, c] : y.terms_)
      x.add_term(w, c);
    return x;
  }
  friend GroupRingElement operator-(GroupRingElement x, const GroupRingElement &y) {
    for (const auto &[w, c] : y.terms_)
      x.add_term(w, -c);
    return x;
  }
  friend GroupRingElement operator*(const GroupRingElement &x, const GroupRingElement &y) {
    GroupRingElement out(x.n_);
    for (const auto &[wx, cx] : x.terms_)
      for (const auto &[wy, cy] : y.terms_)
        out.add_term(wx + wy, cx * cy);
    return out;
  }
  friend bool operator==(const GroupRingElement &x, const GroupRingElement &y) {
    return x.terms_ == y.terms_;
  }

private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// rho(chi) = sum of e^lambda over W(chi).
GroupRingElement<Int> orbit_sum(const RootSystem &rs, const Weight<Int> &chi);

/// phi_cap(e^lambda) = prod_j (1 - w_j)^{-a_j} truncated above degree cap.
TruncatedPoly<Int> phi_exp(std::size_t rank, const Weight<Int> &lambda, int cap);
inline TruncatedPoly<Int> phi_exp(const RootSystem &rs, const Weight<Int> &lambda, int cap) {
  return phi_exp(static_cast<std::size_t>(rs.rank()), lambda, cap);
}

/// phi_cap extended additively to Z[Lambda]; a ring homomorphism into the
/// truncated symmetric algebra.
TruncatedPoly<Int> phi_truncated(const GroupRingElement<Int> &x, int cap);

/// 1 - e^{-w_j}, the preimage of w_j.
GroupRingElement<Int> phi_inverse_gen(std::size_t rank, std::size_t j);

/// Exponents of lambda(1), lambda(2), ...: pattern {2, 1} means
/// lambda(1)^2 * lambda(2). Weighted degree is sum_m m * pattern[m-1].
using CharacterPattern = std::vector<int>;

int weighted_degree(const CharacterPattern &p);

/// All patterns of weighted degree exactly d (length d), in a fixed order.
std::vector<CharacterPattern> character_patterns(int d);

/// phi^(i)(e^lambda) as a universal polynomial in the characters lambda(m):
/// i! phi^(i)(e^lambda) = g_i(0), where g_0 = 1 and
/// g_k = g * g_{k-1} + g_{k-1}' with g(z) = sum_j a_j w_j / (1 - w_j z).
class UniversalPhiFormula {
public:
  explicit UniversalPhiFormula(int degree);

  int degree() const { return degree_; }
  /// i!
  const Int &denominator() const { return denominator_; }
  /// Integer coefficients of i! * phi^(i), keyed by pattern.
  const std::map<CharacterPattern, Int> &numerators() const { return numerators_; }
  /// Exact rational coefficient of a pattern in phi^(i) itself.
  Rational coefficient(const CharacterPattern &p) const;

  /// i! * phi^(i)(e^lambda), over any scalar ring.
  template <Scalar R> SparsePoly<R> evaluate_scaled(const Weight<R> &lambda) const;
  /// phi^(i)(e^lambda) for an integral weight; division by i! is checked.
  SparsePoly<Int> evaluate(const Weight<Int> &lambda) const;

  /// e.g. "(1/2)*(L1^2 + L2)" with Lm standing for lambda(m).
  std::string to_string() const;

private:
  int degree_;
  Int denominator_;
  std::map<CharacterPattern, Int> numerators_;
};

/// Cached per degree; safe to call from several threads.
const UniversalPhiFormula &universal_phi(int degree);

/// Running sums of prod_m lambda(m)^{p_m} over the weights fed to it, for
/// every pattern up to a weighted degree. Merging two accumulators is exact
/// addition, so partitions of an orbit may be processed in any order.
template <Scalar R> class PowerSumAccumulator {
public:
  PowerSumAccumulator(std::size_t rank, int max_degree);

  void add(const Weight<R> &lambda);
  void merge(const PowerSumAccumulator &other);

  std::size_t count() const { return count_; }
  int max_degree() const { return max_degree_; }
  const SparsePoly<R> &sum(const CharacterPattern &p) const;

  /// sum over the accumulated weights of phi^(i)(e^lambda); the final
  /// division by i! is checked and throws ConsistencyError if inexact.
  SparsePoly<R> phi_component(int i) const;
  /// i! times the same sum, without the division.
  SparsePoly<R> phi_component_scaled(int i) const;

private:
  std::size_t rank_;
  int max_degree_;
  std::size_t count_ = 0;
  std::map<CharacterPattern, SparsePoly<R>> sums_;
};

/// Memo of phi^(i)(rho(chi)) on disk, one file per key holding the
/// canonical polynomial text. Deleting the directory only costs time.
class PhiCache {
public:
  explicit PhiCache(std::filesystem::path dir);

  /// WEYLEXP_CACHE_DIR when set, else nothing.
  static std::optional<PhiCache> from_environment();

  const std::filesystem::path &directory() const { return dir_; }
  std::optional<std::string> load(const std::string &key) const;
  void store(const std::string &key, const std::string &value) const;

  template <Scalar R>
  static std::string key(const RootSystemKind &kind, const Weight<R> &chi, int degree);

private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

inline constexpr int kPhiCodeVersion = 1;
inline constexpr const char *kCacheEnvVar = "WEYLEXP_CACHE_DIR";

struct PhiOptions {
  std::size_t stream_cap = OrbitLimits{}.stream_cap;
  const PhiCache *cache = nullptr;
};

/// phi^(i)(rho(chi)) for i = 0..max_degree from a single orbit pass.
/// Entry 0 is the orbit size as a constant.
template <Scalar R>
std::vector<SparsePoly<R>> phi_rho_components(const RootSystem &rs, const Weight<R> &chi,
                                              int max_degree, const PhiOptions &opts = {});

/// i! * phi^(i)(rho(chi)) for i = 0..max_degree, undivided. Over Z[tau] the
/// H2 orbit sums of degree >= 3 are not integral, so this is the form in
/// which they can be compared.
template <Scalar R>
std::vector<SparsePoly<R>> phi_rho_scaled_components(const RootSystem &rs, const Weight<R> &chi,
                                                     int max_degree, const PhiOptions &opts = {});

/// phi^(i)(rho(chi)); equals phi^(i)(rho-hat(chi)) for i >= 1.
template <Scalar R>
SparsePoly<R> phi_rho(const RootSystem &rs, const Weight<R> &chi, int degree,
                      const PhiOptions &opts = {});

SparsePoly<Int> phi_rho_series(const RootSystem &rs, const Weight<Int> &chi, int degree);
SparsePoly<Int> phi_rho_universal(const RootSystem &rs, const Weight<Int> &chi, int degree);

/// Degrees 2, 3, 4 only.
template <Scalar R>
SparsePoly<R> phi_rho_closed_form(const RootSystem &rs, const Weight<R> &chi, int degree);
/// i! times the closed form, undivided.
template <Scalar R>
SparsePoly<R> phi_rho_closed_form_scaled(const RootSystem &rs, const Weight<R> &chi, int degree);

} // namespace weylexp
