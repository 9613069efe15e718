#include "weylexp/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace weylexp {

namespace {

std::size_t rank_of(const RootSystem &rs) { return static_cast<std::size_t>(rs.rank()); }

CheckResult run_check(std::string name, std::string subject,
                      const std::function<std::string()> &body) {
  CheckResult r{std::move(name), std::move(subject), false, ""};
  try {
    r.detail = body();
    r.passed = true;
  } catch (const Error &e) {
    r.detail = e.what();
  }
  return r;
}

[[noreturn]] void fail(const std::string &what) { throw ConsistencyError(what); }

Weight<Int> random_weight(std::mt19937_64 &rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  Weight<Int> w(n);
  for (auto &c : w.coords)
    c = coord(rng);
  return w;
}

SparsePoly<Int> char_power(const Weight<Int> &w, int m, int x) {
  return SparsePoly<Int>::character(w, m).pow(x);
}

SparsePoly<Int> pair_term(const Weight<Int> &w, int m1, int x, int m2, int y) {
  return char_power(w, m1, x) * char_power(w, m2, y);
}

} // namespace

CheckResult check_orbit_character_sums(const RootSystem &rs, int max_m, const VerifyOptions &opts) {
  return run_check("orbit-character-sums", rs.kind().name(), [&] {
    const std::size_t n = rank_of(rs);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SparsePoly<Int>> sums(static_cast<std::size_t>(max_m) + 1, SparsePoly<Int>(n));
      orbit_stream<Int>(
          rs, Weight<Int>::fundamental(n, j),
          [&](const Weight<Int> &w) {
            for (int m = 1; m <= max_m; ++m)
              sums[static_cast<std::size_t>(m)] += SparsePoly<Int>::character(w, m);
          },
          opts.phi.stream_cap);
      for (int m = 1; m <= max_m; ++m)
        if (!sums[static_cast<std::size_t>(m)].is_zero())
          fail("sum of lambda(" + std::to_string(m) + ") over W(w" + std::to_string(j + 1) +
               ") is " + to_string(sums[static_cast<std::size_t>(m)]));
    }
    return std::to_string(n) + " orbits, m <= " + std::to_string(max_m);
  });
}

CheckResult check_phi_paths(const RootSystem &rs, const VerifyOptions &opts) {
  return run_check("phi-paths", rs.kind().name(), [&] {
    const std::size_t n = rank_of(rs);
    for (std::size_t j = 0; j < n; ++j) {
      const auto chi = Weight<Int>::fundamental(n, j);
      const auto streamed = phi_rho_components<Int>(rs, chi, opts.max_degree, opts.phi);
      for (int i = 1; i <= opts.max_degree; ++i) {
        const auto &d = streamed[static_cast<std::size_t>(i)];
        const std::string at = " at w" + std::to_string(j + 1) + ", degree " + std::to_string(i);
        if (!(phi_rho_series(rs, chi, i) == d))
          fail("series path disagrees" + at);
        if (!(phi_rho_universal(rs, chi, i) == d))
          fail("universal path disagrees" + at);
        if (i >= 2 && !(phi_rho_closed_form<Int>(rs, chi, i) == d))
          fail("closed-form path disagrees" + at);
      }
    }
    return "degrees 1.." + std::to_string(opts.max_degree) + ", four paths";
  });
}

CheckResult check_phi_homomorphism(const RootSystem &rs, const VerifyOptions &opts) {
  return run_check("phi-homomorphism", rs.kind().name(), [&] {
    const std::size_t n = rank_of(rs);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coeff(-3, 3), support(1, 3);
    auto random_element = [&] {
      GroupRingElement<Int> x(n);
      for (int t = support(rng); t > 0; --t)
        x.add_term(random_weight(rng, n, 2), Int(coeff(rng)));
      return x;
    };
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
      const auto x = random_element(), y = random_element();
      const int cap = opts.max_degree;
      if (!(phi_truncated(x * y, cap) == phi_truncated(x, cap) * phi_truncated(y, cap)))
        fail("phi(xy) != phi(x) phi(y) on trial " + std::to_string(t));
    }
    return std::to_string(trials) + " random pairs";
  });
}

CheckResult check_phi2_invariance(const RootSystem &rs, const VerifyOptions &opts) {
  return run_check("phi2-invariance", rs.kind().name(), [&] {
    const std::size_t n = rank_of(rs);
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = phi_rho<Int>(rs, Weight<Int>::fundamental(n, j), 2, opts.phi);
      for (std::size_t k = 0; k < n; ++k)
        if (!(p.substitute(reflection_images<Int>(rs, k)) == p))
          fail("phi^(2)(rho(w" + std::to_string(j + 1) + ")) moved by s" + std::to_string(k + 1));
    }
    return std::to_string(n) + " quadratic forms";
  });
}

CheckResult check_orbits(const RootSystem &rs, const VerifyOptions &opts) {
  return run_check("orbits", rs.kind().name(), [&] {
    const std::size_t n = rank_of(rs);
    const std::size_t order = rs.weyl_group_order();
    std::ostringstream sizes;
    for (std::size_t j = 0; j < n; ++j) {
      const auto orb = orbit<Int>(rs, Weight<Int>::fundamental(n, j), opts.phi.stream_cap);
      if (order % orb.size() != 0)
        fail("orbit of w" + std::to_string(j + 1) + " has size " + std::to_string(orb.size()) +
             ", not dividing |W| = " + std::to_string(order));
      for (const auto &w : orb)
        for (std::size_t k = 0; k < n; ++k)
          if (!std::binary_search(orb.begin(), orb.end(), reflect(rs, k, w)))
            fail("orbit of w" + std::to_string(j + 1) + " not closed under s" +
                 std::to_string(k + 1));
      sizes << (j ? "," : "") << orb.size();
    }
    return "sizes " + sizes.str();
  });
}

CheckResult check_invariant_ranks(const RootSystem &rs) {
  return run_check("invariant-ranks", rs.kind().name(), [&] {
    const std::size_t r1 = invariant_lattice(rs, 1).rank();
    const std::size_t r2 = invariant_lattice(rs, 2).rank();
    const std::size_t r3 = invariant_lattice(rs, 3).rank();
    const bool cubic = rs.kind().family == Family::A && rs.rank() >= 2;
    if (r1 != 0)
      fail("rank of degree-1 invariants is " + std::to_string(r1));
    if (r2 != 1)
      fail("rank of degree-2 invariants is " + std::to_string(r2));
    if (r3 != (cubic ? 1u : 0u))
      fail("rank of degree-3 invariants is " + std::to_string(r3));
    return "ranks " + std::to_string(r1) + "," + std::to_string(r2) + "," + std::to_string(r3);
  });
}

CheckResult check_dynkin_routes(const RootSystem &rs, const VerifyOptions &opts) {
  return run_check("dynkin-routes", rs.kind().name(), [&] {
    const std::size_t n = rank_of(rs);
    const auto q = normalized_q(rs);
    std::ostringstream values;
    for (std::size_t j = 0; j < n; ++j) {
      const Int a = dynkin_index_orbit(rs, j, opts.phi.stream_cap);
      const Int b =
          divide_by_form(phi_rho<Int>(rs, Weight<Int>::fundamental(n, j), 2, opts.phi), q);
      if (a != b)
        fail("w" + std::to_string(j + 1) + ": orbit route " + a.get_str() + ", form route " +
             b.get_str());
      values << (j ? "," : "") << a.get_str();
    }
    return "indices " + values.str();
  });
}

CheckResult check_identities(const RootSystem &rs, const VerifyOptions &opts) {
  return run_check("identities", rs.kind().name(), [&] {
    const auto r = verify_identities(rs, opts.phi);
    if (!r.equal)
      fail(r.name + " fails; 2*(lhs - rhs) = " + r.diff);
    return r.name;
  });
}

CheckResult check_symmetric_set_sums(const RootSystemKind &kind, const VerifyOptions &opts) {
  return run_check("symmetric-set-sums", kind.name(), [&] {
    const std::size_t n = static_cast<std::size_t>(kind.rank);
    std::mt19937_64 rng(opts.seed ^ 0x5eedULL);
    std::uniform_int_distribution<int> size(1, 4), mdist(0, 4), xdist(0, 3);
    for (int t = 0; t < opts.symmetric_sets; ++t) {
      std::vector<Weight<Int>> s;
      for (int k = size(rng); k > 0; --k)
        s.push_back(random_weight(rng, n, 3));
      const int m1 = mdist(rng), m2 = mdist(rng), x = xdist(rng), y = xdist(rng);

      // S and -S
      SparsePoly<Int> both(n), half(n);
      for (const auto &w : s) {
        const auto term = pair_term(w, m1, x, m2, y);
        half += term;
        both += term + pair_term(-w, m1, x, m2, y);
      }
      const Int factor = (x + y) % 2 == 0 ? 2 : 0;
      if (!(both == factor * half))
        fail("S u -S sum mismatch on set " + std::to_string(t));

      // S_+ and S_-
      const Int r = static_cast<long>(s.size());
      SparsePoly<Int> plus(n), minus(n), diag(n), cross(n);
      for (std::size_t i = 0; i < s.size(); ++i) {
        diag += pair_term(s[i], m1, 1, m2, 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (i == j)
            continue;
          cross += SparsePoly<Int>::character(s[i], m1) * SparsePoly<Int>::character(s[j], m2);
          if (i < j) {
            plus += pair_term(s[i] + s[j], m1, 1, m2, 1);
            minus += pair_term(s[i] - s[j], m1, 1, m2, 1);
          }
        }
      }
      if (!(plus == Int(r - 1) * diag + cross))
        fail("S_+ sum mismatch on set " + std::to_string(t));
      if (!(minus == Int(r - 1) * diag - cross))
        fail("S_- sum mismatch on set " + std::to_string(t));
    }
    return std::to_string(opts.symmetric_sets) + " random sets";
  });
}

CheckResult check_exponents(const RootSystem &rs, const VerifyOptions &opts) {
  return run_check("exponents", rs.kind().name(), [&] {
    ExponentOptions eo;
    eo.max_degree = opts.max_degree;
    eo.phi = opts.phi;
    const auto report = compute_exponent_report(rs, eo);
    if (!report.ok())
      fail(report.violations.front());
    std::string tau;
    for (const auto &[i, t] : report.tau)
      if (i >= 2)
        tau += (tau.empty() ? "" : ",") + t.get_str();
    return "tau_2.." + std::to_string(opts.max_degree) + " = " + tau;
  });
}

std::vector<CheckResult> verify_root_system(const RootSystem &rs, const VerifyOptions &opts) {
  const RootSystemKind &kind = rs.kind();
  std::vector<CheckResult> out;
  out.push_back(check_orbits(rs, opts));
  out.push_back(check_orbit_character_sums(rs, 4, opts));
  out.push_back(check_phi_paths(rs, opts));
  out.push_back(check_phi_homomorphism(rs, opts));
  out.push_back(check_phi2_invariance(rs, opts));
  out.push_back(check_invariant_ranks(rs));
  out.push_back(check_dynkin_routes(rs, opts));
  const bool identity = kind.classical() && kind.rank >= 2 &&
                        (kind.family != Family::D || kind.rank >= 4);
  if (identity && opts.max_degree >= 4)
    out.push_back(check_identities(rs, opts));
  if (kind.classical())
    out.push_back(check_symmetric_set_sums(kind, opts));
  out.push_back(check_exponents(rs, opts));
  return out;
}

std::vector<RootSystemKind> default_verify_scope(int max_rank) {
  std::vector<RootSystemKind> out;
  for (int n = 1; n <= max_rank; ++n)
    out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n)
    out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n)
    out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n)
    out.push_back({Family::D, n});
  if (max_rank >= 2)
    out.push_back({Family::G, 2});
  if (max_rank >= 4)
    out.push_back({Family::F, 4});
  return out;
}

RootSystem perturbed_fixture() {
  return RootSystem::build({Family::A, 2}).with_cartan_entry(0, 1, 1);
}

} // namespace weylexp
