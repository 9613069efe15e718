#pragma once

// Exponents tau_i (i <= 4), Dynkin indices of the fundamental weights by two
// routes, the second exponent of H2 over Z[tau], torsion annihilator bounds
// for the gamma filtration, and the degree-4 identities between orbit sums
// and the power sums q_i.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylexp/lattice.hpp"
#include "weylexp/phi.hpp"
#include "weylexp/rootsys.hpp"

namespace weylexp {

inline constexpr int kMaxExponentDegree = 4;

/// phi^(j)(rho(omega_l)) for l = 1..n and j = 0..max_degree: [l][j].
using PhiTable = std::vector<std::vector<SparsePoly<Int>>>;

PhiTable fundamental_phi_table(const RootSystem &rs, int max_degree, const PhiOptions &opts = {});

/// Z-span of { m * phi^(j)(rho(omega_l)) : 2 <= j <= i, deg m = i - j }.
/// The j = 1 terms vanish (checked). Products of two generators are not
/// needed: phi^(j1)(rho-hat) * phi^(j2)(rho-hat) is already of the form
/// f * phi^(j2)(rho-hat) with f in S^{j1}(Lambda).
IntLattice image_lattice_L(const RootSystem &rs, int degree, const PhiTable &table);
IntLattice image_lattice_L(const RootSystem &rs, int degree, const PhiOptions &opts = {});

/// Z-span of { m * g : g in S^j(Lambda)^W, 2 <= j <= i, deg m = i - j }.
/// Homogeneous generators suffice because W preserves degree.
IntLattice target_lattice_M(const RootSystem &rs, int degree);
/// Same, from precomputed invariant lattices indexed by degree.
IntLattice target_lattice_M(const RootSystem &rs, int degree,
                            const std::map<int, IntLattice> &invariants);

/// Ranks and containments seen while computing one tau_i.
struct LatticeObservation {
  int degree = 0;
  std::size_t rank_L = 0;
  std::size_t rank_M = 0;
  std::size_t rank_sum = 0;
  bool m_in_span_l = false; // the finiteness condition
  bool l_in_span_m = false;
  bool l_in_m = false;
  friend bool operator==(const LatticeObservation &, const LatticeObservation &) = default;
};

struct TauResult {
  Int tau;
  LatticeObservation observation;
};

TauResult exponent_tau_from(const IntLattice &m, const IntLattice &l, int degree);
/// tau_1 = 1 with both lattices zero.
Int exponent_tau(const RootSystem &rs, int degree, const PhiOptions &opts = {});

/// 1/2 sum over W(omega_j) of <lambda, theta^vee>^2 (j is 0-based).
Int dynkin_index_orbit(const RootSystem &rs, std::size_t j,
                       std::size_t cap = OrbitLimits{}.stream_cap);
/// phi^(2)(rho(omega_j)) / q, exact.
Int dynkin_index_via_q(const RootSystem &rs, std::size_t j, const PhiOptions &opts = {});
/// c with p = c * q; throws ConsistencyError when p is not a multiple of q.
Int divide_by_form(const SparsePoly<Int> &p, const SparsePoly<Int> &q);

struct H2Report {
  GoldenInt tau2;
  bool is_sqrt5 = false;
  /// phi^(2)(rho(omega_1)) as coefficients of w1^2, w2^2, w1*w2.
  std::array<GoldenInt, 3> form{};
  bool omega2_agrees = false;
  friend bool operator==(const H2Report &, const H2Report &) = default;
};

H2Report h2_tau2(const PhiOptions &opts = {});

struct Ch4Constants {
  int total = 72;
  int two_primary = 8;
  friend bool operator==(const Ch4Constants &, const Ch4Constants &) = default;
};

struct TorsionBounds {
  std::map<int, Int> bounds; // degree -> tau_i * (i-1)!
  std::optional<Ch4Constants> ch4;
  friend bool operator==(const TorsionBounds &, const TorsionBounds &) = default;
};

/// True for B_n (n >= 3) and D_n (n >= 4), where the degree-4 bound is 12.
bool has_ch4_bounds(const RootSystemKind &kind);
/// From already computed exponents; violations of the value 12 are
/// appended to `violations`.
TorsionBounds torsion_bounds(const RootSystemKind &kind, const std::map<int, Int> &tau,
                             std::vector<std::string> *violations = nullptr);
TorsionBounds torsion_bounds(const RootSystem &rs, const PhiOptions &opts = {});

struct IdentityReport {
  std::string name;
  bool equal = false;
  /// Both sides scaled by 2 so that everything is integral.
  std::string lhs;
  std::string rhs;
  std::string diff;
};

/// The power sum q_m = sum_k e_k^m in omega-coordinates.
SparsePoly<Int> power_sum_q(const RootSystemKind &kind, int m);

/// A_n (n >= 3), B_n and C_n (n >= 2), D_n (n >= 4): the degree-4
/// identity; A_2: q_4 = q_2^2 / 2. UsageError elsewhere.
IdentityReport verify_identities(const RootSystem &rs, const PhiOptions &opts = {});

struct ExponentOptions {
  int max_degree = kMaxExponentDegree;
  PhiOptions phi;
  bool allow_large = false;
  bool record_timings = false;
  /// When set, tau_i is recomputed after a random unimodular change of
  /// basis on Lambda (seeded) and recorded as an observation.
  std::optional<std::uint64_t> basis_probe_seed;
};

struct ExponentReport {
  RootSystemKind kind;
  int max_degree = kMaxExponentDegree;
  std::map<int, Int> tau;                 // 0..max_degree
  std::map<int, Int> dynkin_per_weight;   // 1-based j
  Int dynkin_gcd;
  TorsionBounds torsion;
  std::vector<LatticeObservation> observations;
  std::map<int, Int> basis_probe_tau;     // empty unless probed
  std::map<std::string, double> timings;  // seconds; empty unless recorded
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  friend bool operator==(const ExponentReport &, const ExponentReport &) = default;
};

/// E7 and E8 need allow_large.
void require_size_gate(const RootSystemKind &kind, bool allow_large);

/// Full report for one crystallographic root system. Failed internal
/// checks (tau chain, tau_2 = Dynkin gcd, tau_2 = tau_3 = tau_4, the two
/// Dynkin routes, the torsion value 12) are listed in `violations`.
ExponentReport compute_exponent_report(const RootSystem &rs, const ExponentOptions &opts = {});

/// Checks that hold on any emitted report.
std::vector<std::string> report_invariant_violations(const ExponentReport &r);

/// tau_i for i = 2..max_degree in the basis omega' = U omega for a random
/// unimodular U drawn from `seed`.
std::map<int, Int> tau_after_basis_change(const RootSystem &rs, int max_degree,
                                          std::uint64_t seed, const PhiOptions &opts = {});

} // namespace weylexp
