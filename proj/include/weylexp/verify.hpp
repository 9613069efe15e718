#pragma once

// Named consistency checks run by `weylexp verify` and the acceptance
// harness. Each check catches library errors and reports them as failures.

#include <cstdint>
#include <string>
#include <vector>

#include "weylexp/exponents.hpp"

namespace weylexp {

struct CheckResult {
  std::string name;    // e.g. "orbit-character-sums", "phi-paths"
  std::string subject; // e.g. "B3"
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int symmetric_sets = 500;
  int max_degree = kMaxExponentDegree;
  PhiOptions phi{.stream_cap = OrbitLimits{}.orbit_cap, .cache = nullptr};
};

/// sum over W(omega_j) of lambda(m) vanishes for every j and m <= max_m.
CheckResult check_orbit_character_sums(const RootSystem &rs, int max_m, const VerifyOptions &opts);
/// Streamed, series, universal and closed-form phi^(i)(rho(omega_j)) agree.
CheckResult check_phi_paths(const RootSystem &rs, const VerifyOptions &opts);
/// phi_i(xy) = phi_i(x) phi_i(y) on random small elements.
CheckResult check_phi_homomorphism(const RootSystem &rs, const VerifyOptions &opts);
/// phi^(2)(rho(omega_j)) is fixed by every simple reflection.
CheckResult check_phi2_invariance(const RootSystem &rs, const VerifyOptions &opts);
/// Orbit sizes divide |W|; orbits are closed under simple reflections.
CheckResult check_orbits(const RootSystem &rs, const VerifyOptions &opts);
/// rank S^1 = 0, rank S^2 = 1, rank S^3 = 0 outside type A.
CheckResult check_invariant_ranks(const RootSystem &rs);
/// Dynkin index by orbit pairings equals phi^(2)(rho)/q.
CheckResult check_dynkin_routes(const RootSystem &rs, const VerifyOptions &opts);
/// The degree-4 identity; classical kinds only.
CheckResult check_identities(const RootSystem &rs, const VerifyOptions &opts);
/// Power-sum identities for sets of the form S u -S and S_+, S_- on random sets.
CheckResult check_symmetric_set_sums(const RootSystemKind &kind, const VerifyOptions &opts);
/// Exponent report with its internal invariants.
CheckResult check_exponents(const RootSystem &rs, const VerifyOptions &opts);

/// Every check applicable to rs, in a fixed order.
std::vector<CheckResult> verify_root_system(const RootSystem &rs, const VerifyOptions &opts);

/// Default verification scope: ranks <= max_rank of A-D, G2, F4.
std::vector<RootSystemKind> default_verify_scope(int max_rank = 4);

/// A2 with one Cartan sign flipped (C[0][1] = +1): an infinite group, used
/// as a negative control.
RootSystem perturbed_fixture();

} // namespace weylexp
