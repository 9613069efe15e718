#include "weylexp/exponents.hpp"

#include <chrono>
#include <random>

namespace weylexp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t rank_of(const RootSystem &rs) { return static_cast<std::size_t>(rs.rank()); }

void require_degree(int degree) {
  if (degree < 1 || degree > kMaxExponentDegree)
    throw UsageError("degree must lie in 1.." + std::to_string(kMaxExponentDegree));
}

/// Z-span of m * g over monomials m of degree `degree - deg g`.
void add_products(std::vector<std::vector<Int>> &gens, const SparsePoly<Int> &g, int g_degree,
                  const MonomialBasis &target) {
  if (g.is_zero())
    return;
  const std::size_t n = target.variables();
  for (const auto &m : monomials_of_degree(n, target.degree() - g_degree)) {
    SparsePoly<Int> mono(n);
    mono.add_term(m, Int(1));
    gens.push_back((mono * g).to_vector(target));
  }
}

IntLattice lattice_from_table(std::size_t n, int degree, const PhiTable &table) {
  const MonomialBasis basis(n, degree);
  std::vector<std::vector<Int>> gens;
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) <= degree)
      throw UsageError("phi table does not reach degree " + std::to_string(degree));
    if (!row[1].is_zero())
      throw ConsistencyError("phi^(1) of an orbit sum is nonzero");
    for (int j = 2; j <= degree; ++j)
      add_products(gens, row[static_cast<std::size_t>(j)], j, basis);
  }
  return IntLattice(basis.size(), gens);
}

IntLattice lattice_from_invariants(std::size_t n, int degree,
                                   const std::map<int, std::vector<SparsePoly<Int>>> &inv) {
  const MonomialBasis basis(n, degree);
  std::vector<std::vector<Int>> gens;
  for (int j = 2; j <= degree; ++j) {
    auto it = inv.find(j);
    if (it == inv.end())
      throw UsageError("missing invariants of degree " + std::to_string(j));
    for (const auto &g : it->second)
      add_products(gens, g, j, basis);
  }
  return IntLattice(basis.size(), gens);
}

std::vector<SparsePoly<Int>> as_polys(const IntLattice &lat, const MonomialBasis &basis) {
  std::vector<SparsePoly<Int>> out;
  for (const auto &v : lat.basis())
    out.push_back(SparsePoly<Int>::from_vector(basis, v));
  return out;
}

std::map<int, std::vector<SparsePoly<Int>>> invariant_polys(const RootSystem &rs, int max_degree) {
  std::map<int, std::vector<SparsePoly<Int>>> out;
  for (int j = 2; j <= max_degree; ++j)
    out[j] = as_polys(invariant_lattice(rs, j), MonomialBasis(rank_of(rs), j));
  return out;
}

} // namespace

PhiTable fundamental_phi_table(const RootSystem &rs, int max_degree, const PhiOptions &opts) {
  const std::size_t n = rank_of(rs);
  PhiTable table;
  for (std::size_t l = 0; l < n; ++l)
    table.push_back(phi_rho_components<Int>(rs, Weight<Int>::fundamental(n, l), max_degree, opts));
  return table;
}

IntLattice image_lattice_L(const RootSystem &rs, int degree, const PhiTable &table) {
  require_degree(degree);
  return lattice_from_table(rank_of(rs), degree, table);
}

IntLattice image_lattice_L(const RootSystem &rs, int degree, const PhiOptions &opts) {
  require_degree(degree);
  return image_lattice_L(rs, degree, fundamental_phi_table(rs, degree, opts));
}

IntLattice target_lattice_M(const RootSystem &rs, int degree,
                            const std::map<int, IntLattice> &invariants) {
  require_degree(degree);
  std::map<int, std::vector<SparsePoly<Int>>> polys;
  for (int j = 2; j <= degree; ++j) {
    auto it = invariants.find(j);
    if (it == invariants.end())
      throw UsageError("missing invariants of degree " + std::to_string(j));
    polys[j] = as_polys(it->second, MonomialBasis(rank_of(rs), j));
  }
  return lattice_from_invariants(rank_of(rs), degree, polys);
}

IntLattice target_lattice_M(const RootSystem &rs, int degree) {
  require_degree(degree);
  return lattice_from_invariants(rank_of(rs), degree, invariant_polys(rs, degree));
}

TauResult exponent_tau_from(const IntLattice &m, const IntLattice &l, int degree) {
  TauResult r;
  const IntLattice sum = m + l;
  r.observation.degree = degree;
  r.observation.rank_L = l.rank();
  r.observation.rank_M = m.rank();
  r.observation.rank_sum = sum.rank();
  r.observation.m_in_span_l = sum.rank() == l.rank();
  r.observation.l_in_span_m = sum.rank() == m.rank();
  r.observation.l_in_m = m.contains(l);
  r.tau = quotient_exponent(m, l);
  return r;
}

Int exponent_tau(const RootSystem &rs, int degree, const PhiOptions &opts) {
  require_degree(degree);
  if (degree == 1)
    return 1;
  return exponent_tau_from(target_lattice_M(rs, degree), image_lattice_L(rs, degree, opts), degree)
      .tau;
}

// ---------------------------------------------------------------------------

Int dynkin_index_orbit(const RootSystem &rs, std::size_t j, std::size_t cap) {
  if (!rs.crystallographic())
    throw UsageError("Dynkin index needs a crystallographic root system");
  const std::size_t n = rank_of(rs);
  if (j >= n)
    throw UsageError("fundamental weight index out of range");
  Int sum = 0;
  orbit_stream<Int>(
      rs, Weight<Int>::fundamental(n, j),
      [&](const Weight<Int> &w) {
        const Int p = pairing_with_long_coroot(rs, w);
        sum += p * p;
      },
      cap);
  Int half;
  if (!try_divexact(sum, Int(2), half))
    throw ConsistencyError("orbit sum of squared pairings is odd");
  return half;
}

Int divide_by_form(const SparsePoly<Int> &p, const SparsePoly<Int> &q) {
  if (q.is_zero())
    throw UsageError("division by the zero form");
  const auto &[lead, lc] = *q.terms().begin();
  Int c;
  if (!try_divexact(p.coefficient(lead), lc, c) || !(p == c * q))
    throw ConsistencyError("phi^(2)(rho) not a multiple of q");
  return c;
}

Int dynkin_index_via_q(const RootSystem &rs, std::size_t j, const PhiOptions &opts) {
  const std::size_t n = rank_of(rs);
  if (j >= n)
    throw UsageError("fundamental weight index out of range");
  return divide_by_form(phi_rho<Int>(rs, Weight<Int>::fundamental(n, j), 2, opts),
                        normalized_q(rs));
}

// ---------------------------------------------------------------------------

H2Report h2_tau2(const PhiOptions &opts) {
  const RootSystem rs = RootSystem::build({Family::H2, 2});
  const auto f1 = phi_rho<GoldenInt>(rs, Weight<GoldenInt>::fundamental(2, 0), 2, opts);
  const auto f2 = phi_rho<GoldenInt>(rs, Weight<GoldenInt>::fundamental(2, 1), 2, opts);
  H2Report r;
  r.form = {f1.coefficient(Monomial({2, 0})), f1.coefficient(Monomial({0, 2})),
            f1.coefficient(Monomial({1, 1}))};
  // the invariant lattice is rank one here, so the coefficient gcd is the exponent
  GoldenInt g = gcd_golden(gcd_golden(r.form[0], r.form[1]), r.form[2]);
  r.tau2 = canonical_associate(g);
  r.is_sqrt5 = are_associates(r.tau2, GoldenInt(-1, 2));
  r.omega2_agrees = f1 == f2;
  return r;
}

// ---------------------------------------------------------------------------

bool has_ch4_bounds(const RootSystemKind &kind) {
  return (kind.family == Family::B && kind.rank >= 3) ||
         (kind.family == Family::D && kind.rank >= 4);
}

TorsionBounds torsion_bounds(const RootSystemKind &kind, const std::map<int, Int> &tau,
                             std::vector<std::string> *violations) {
  TorsionBounds t;
  Int fact = 1;
  for (int i = 3; i <= kMaxExponentDegree; ++i) {
    fact *= i - 1;
    auto it = tau.find(i);
    if (it != tau.end())
      t.bounds[i] = it->second * fact;
  }
  if (has_ch4_bounds(kind)) {
    t.ch4 = Ch4Constants{};
    auto it = t.bounds.find(4);
    if (it != t.bounds.end() && it->second != 12 && violations)
      violations->push_back("degree-4 torsion bound of " + kind.name() + " is " +
                            it->second.get_str() + ", expected 12");
  }
  return t;
}

TorsionBounds torsion_bounds(const RootSystem &rs, const PhiOptions &opts) {
  ExponentOptions o;
  o.phi = opts;
  auto report = compute_exponent_report(rs, o);
  return report.torsion;
}

// ---------------------------------------------------------------------------

SparsePoly<Int> power_sum_q(const RootSystemKind &kind, int m) {
  const OrthChart chart = OrthChart::build(kind);
  const std::size_t n = static_cast<std::size_t>(kind.rank);
  SparsePoly<Int> q(n);
  for (std::size_t k = 0; k < chart.dimension(); ++k)
    q += SparsePoly<Int>::linear(chart.e_weight(k).coords).pow(m);
  return q;
}

IdentityReport verify_identities(const RootSystem &rs, const PhiOptions &opts) {
  const RootSystemKind &kind = rs.kind();
  const std::size_t n = rank_of(rs);
  if (!kind.classical() || (kind.family == Family::A && n < 2) ||
      (kind.family == Family::D && n < 4))
    throw UsageError("no degree-4 identity for " + kind.name());

  const auto q2 = power_sum_q(kind, 2);
  const auto q4 = power_sum_q(kind, 4);
  IdentityReport r;
  SparsePoly<Int> lhs(n), rhs(n);
  auto phi4 = [&](const Weight<Int> &chi) { return phi_rho<Int>(rs, chi, 4, opts); };
  auto omega = [&](std::size_t j) { return Weight<Int>::fundamental(n, j); };

  if (kind.family == Family::A && n == 2) {
    r.name = "q4 = q2^2/2";
    lhs = Int(2) * q4;
    rhs = q2 * q2;
  } else if (kind.family == Family::A) {
    r.name = "type A degree-4 identity";
    const Int two_n = 2 * static_cast<long>(n);
    SparsePoly<Int> x = phi4(omega(0) + omega(n - 1)) + phi4(omega(1)) + phi4(omega(n - 2));
    SparsePoly<Int> y = phi4(omega(0)) + phi4(omega(n - 1));
    lhs = Int(2) * (x - two_n * y);
    rhs = q2 * q2 - q4;
  } else {
    r.name = "orthogonal degree-4 identity";
    const OrthChart chart = OrthChart::build(kind);
    const Weight<Int> chi1 = chart.e_weight(0);
    const Weight<Int> chi2 = chart.e_weight(0) + chart.e_weight(1);
    const Int c = 2 * (static_cast<long>(n) - 1);
    lhs = Int(2) * (phi4(chi2) - c * phi4(chi1));
    rhs = q2 * q2 - q4;
  }
  r.equal = lhs == rhs;
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.diff = to_string(lhs - rhs);
  return r;
}

// ---------------------------------------------------------------------------

void require_size_gate(const RootSystemKind &kind, bool allow_large) {
  if (kind.family == Family::E && kind.rank >= 7 && !allow_large)
    throw UsageError(kind.name() + " needs --allow-large (orbits exceed desk scale)");
}

std::vector<std::string> report_invariant_violations(const ExponentReport &r) {
  std::vector<std::string> out;
  auto tau = [&](int i) -> const Int * {
    auto it = r.tau.find(i);
    return it == r.tau.end() ? nullptr : &it->second;
  };
  if (!tau(0) || *tau(0) != 1)
    out.push_back("tau_0 != 1");
  if (!tau(1) || *tau(1) != 1)
    out.push_back("tau_1 != 1");
  for (int i = 0; i < r.max_degree; ++i) {
    const Int *a = tau(i), *b = tau(i + 1);
    if (a && b && !mpz_divisible_p(b->get_mpz_t(), a->get_mpz_t()))
      out.push_back("tau_" + std::to_string(i) + " does not divide tau_" + std::to_string(i + 1));
  }
  if (const Int *t2 = tau(2)) {
    if (!r.dynkin_per_weight.empty() && *t2 != r.dynkin_gcd)
      out.push_back("tau_2 = " + t2->get_str() + " differs from the Dynkin gcd " +
                    r.dynkin_gcd.get_str());
    for (int i = 3; i <= r.max_degree; ++i)
      if (const Int *ti = tau(i); ti && *ti != *t2)
        out.push_back("tau_" + std::to_string(i) + " = " + ti->get_str() + " differs from tau_2 = " +
                      t2->get_str());
  }
  for (const auto &o : r.observations)
    if (!o.m_in_span_l)
      out.push_back("degree " + std::to_string(o.degree) + ": M not in span_Q(L)");
  return out;
}

ExponentReport compute_exponent_report(const RootSystem &rs, const ExponentOptions &opts) {
  if (!rs.crystallographic())
    throw UsageError("exponent report needs a crystallographic root system; use h2 for H2");
  if (opts.max_degree < 2 || opts.max_degree > kMaxExponentDegree)
    throw UsageError("--max-degree must be 2, 3 or 4");
  require_size_gate(rs.kind(), opts.allow_large);

  const std::size_t n = rank_of(rs);
  ExponentReport r;
  r.kind = rs.kind();
  r.max_degree = opts.max_degree;
  auto t0 = Clock::now();
  auto mark = [&](const std::string &what) {
    if (opts.record_timings)
      r.timings[what] = seconds_since(t0);
    t0 = Clock::now();
  };

  const PhiTable table = fundamental_phi_table(rs, opts.max_degree, opts.phi);
  mark("phi");
  const auto invariants = invariant_polys(rs, opts.max_degree);
  mark("invariants");

  r.tau[0] = 1;
  r.tau[1] = 1;
  for (int i = 2; i <= opts.max_degree; ++i) {
    const IntLattice l = lattice_from_table(n, i, table);
    const IntLattice m = lattice_from_invariants(n, i, invariants);
    auto res = exponent_tau_from(m, l, i);
    r.tau[i] = res.tau;
    r.observations.push_back(res.observation);
  }
  mark("tau");

  const auto &q2 = invariants.at(2);
  if (q2.size() != 1)
    throw ConsistencyError("S^2(Lambda)^W has rank " + std::to_string(q2.size()));
  const SparsePoly<Int> q = normalized_q(rs);
  Int g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Int by_orbit = dynkin_index_orbit(rs, j, opts.phi.stream_cap);
    const Int by_q = divide_by_form(table[j][2], q);
    if (by_orbit != by_q)
      r.violations.push_back("Dynkin index of w" + std::to_string(j + 1) + ": orbit " +
                             by_orbit.get_str() + " vs phi^(2)/q " + by_q.get_str());
    r.dynkin_per_weight[static_cast<int>(j + 1)] = by_orbit;
    g = gcd_int(g, by_orbit);
  }
  r.dynkin_gcd = g;
  mark("dynkin");

  r.torsion = torsion_bounds(r.kind, r.tau, &r.violations);
  if (opts.basis_probe_seed) {
    r.basis_probe_tau = tau_after_basis_change(rs, opts.max_degree, *opts.basis_probe_seed, opts.phi);
    mark("basis_probe");
  }
  auto inv = report_invariant_violations(r);
  r.violations.insert(r.violations.end(), inv.begin(), inv.end());
  return r;
}

// ---------------------------------------------------------------------------

std::map<int, Int> tau_after_basis_change(const RootSystem &rs, int max_degree,
                                          std::uint64_t seed, const PhiOptions &opts) {
  const std::size_t n = rank_of(rs);
  std::mt19937_64 rng(seed);
  IntMatrix u = IntMatrix::identity(n), uinv = IntMatrix::identity(n);
  if (n > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (std::size_t step = 0; step < 3 * n; ++step) {
      std::size_t a = pick(rng), b = pick(rng);
      if (a == b)
        continue;
      const Int k = mult(rng);
      // U <- E U and U^{-1} <- U^{-1} E^{-1} with E = 1 + k e_ab
      u.add_row_multiple(a, b, k);
      uinv.add_col_multiple(b, a, -k);
    }
  }
  if (!(u * uinv == IntMatrix::identity(n)))
    throw ConsistencyError("basis change is not unimodular");

  // omega' = U omega: coordinates a' = U^{-T} a; omega = U^{-1} omega'
  auto to_new = [&](const Weight<Int> &w) {
    Weight<Int> out(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        out[k] += uinv(j, k) * w[j];
    return out;
  };
  std::vector<SparsePoly<Int>> images;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> row(n);
    for (std::size_t k = 0; k < n; ++k)
      row[k] = uinv(j, k);
    images.push_back(SparsePoly<Int>::linear(row));
  }

  PhiTable table;
  for (std::size_t l = 0; l < n; ++l) {
    PowerSumAccumulator<Int> acc(n, max_degree);
    orbit_stream<Int>(
        rs, Weight<Int>::fundamental(n, l), [&](const Weight<Int> &w) { acc.add(to_new(w)); },
        opts.stream_cap);
    std::vector<SparsePoly<Int>> comps;
    for (int i = 0; i <= max_degree; ++i)
      comps.push_back(acc.phi_component(i));
    table.push_back(std::move(comps));
  }
  auto inv = invariant_polys(rs, max_degree);
  for (auto &[d, polys] : inv)
    for (auto &p : polys)
      p = p.substitute(images);

  std::map<int, Int> out;
  for (int i = 2; i <= max_degree; ++i)
    out[i] = exponent_tau_from(lattice_from_invariants(n, i, inv), lattice_from_table(n, i, table), i)
                 .tau;
  return out;
}

} // namespace weylexp
