#include <doctest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "weylexp/exponents.hpp"
#include "weylexp/lattice.hpp"
#include "weylexp/phi.hpp"

using namespace weylexp;

namespace {

RootSystem rs_of(Family f, int n) { return RootSystem::build({f, n}); }

SparsePoly<Int> P(const char *text, std::size_t n) { return parse_poly<Int>(text, n); }

Weight<Int> random_weight(std::mt19937_64 &rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Weight<Int> w(n);
  for (auto &c : w.coords)
    c = d(rng);
  return w;
}

GroupRingElement<Int> random_element(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3), terms(1, 3);
  GroupRingElement<Int> x(n);
  const int k = terms(rng);
  for (int t = 0; t < k; ++t)
    x.add_term(random_weight(rng, n, 2), c(rng));
  return x;
}

std::vector<RootSystemKind> rank_le4() {
  std::vector<RootSystemKind> out;
  for (int n = 1; n <= 4; ++n)
    out.push_back({Family::A, n});
  for (int n = 2; n <= 4; ++n) {
    out.push_back({Family::B, n});
    out.push_back({Family::C, n});
  }
  out.push_back({Family::D, 4});
  out.push_back({Family::G, 2});
  out.push_back({Family::F, 4});
  return out;
}

} // namespace

TEST_CASE("universal formula for small degrees") {
  CHECK(universal_phi(1).to_string() == "L1");
  CHECK(universal_phi(2).to_string() == "(1/2)*(L2 + L1^2)");
  CHECK(universal_phi(3).to_string() == "(1/6)*(2*L3 + 3*L1*L2 + L1^3)");

  const auto &f4 = universal_phi(4);
  CHECK(f4.denominator() == 24);
  CHECK(f4.coefficient({4, 0, 0, 0}) == Rational(1, 24));
  CHECK(f4.coefficient({0, 0, 0, 1}) == Rational(1, 4));
  CHECK(f4.coefficient({2, 1, 0, 0}) == Rational(1, 4));
  CHECK(f4.coefficient({1, 0, 1, 0}) == Rational(1, 3));
  CHECK(f4.coefficient({0, 2, 0, 0}) == Rational(1, 8));
  CHECK(f4.numerators().size() == 5);
  CHECK(weighted_degree({2, 1}) == 4);
  CHECK(character_patterns(4).size() == 5);
  CHECK(character_patterns(6).size() == 11);
}

TEST_CASE("universal formula matches the series expansion") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto lambda = random_weight(rng, n, 4);
    const auto series = phi_exp(n, lambda, 6);
    for (int i = 0; i <= 6; ++i)
      CHECK(universal_phi(i).evaluate(lambda) == series.homogeneous_component(i));
  }
}

TEST_CASE("phi on single exponentials") {
  CHECK(phi_exp(2, Weight<Int>(2), 4).poly() == P("1", 2));
  CHECK(phi_exp(1, Weight<Int>(std::vector<Int>{1}), 3).poly() == P("1 + w1 + w1^2 + w1^3", 1));
  CHECK(phi_exp(2, Weight<Int>({1, 1}), 2).homogeneous_component(2) == P("w1^2 + w1*w2 + w2^2", 2));
  // the same through the degree-2 formula (lambda^2 + lambda(2)) / 2
  CHECK(universal_phi(2).evaluate(Weight<Int>({1, 1})) == P("w1^2 + w1*w2 + w2^2", 2));
}

TEST_CASE("preimages of the generators") {
  for (std::size_t j = 0; j < 3; ++j) {
    const auto g = phi_inverse_gen(3, j);
    CHECK(g.augmentation() == 0);
    CHECK(phi_truncated(g, 1).homogeneous_component(1) == SparsePoly<Int>::variable(3, j));
    CHECK(phi_truncated(g, 4).poly() == SparsePoly<Int>::variable(3, j));
  }
  // a product of two generators maps into degree >= 2
  const auto prod = phi_inverse_gen(2, 0) * phi_inverse_gen(2, 1);
  CHECK(phi_truncated(prod, 1).poly().is_zero());
}

TEST_CASE("phi is a ring homomorphism on the truncation") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto x = random_element(rng, n), y = random_element(rng, n);
    const int cap = 1 + t % 4;
    CHECK(phi_truncated(x * y, cap) == phi_truncated(x, cap) * phi_truncated(y, cap));
    CHECK(phi_truncated(x + y, cap) == phi_truncated(x, cap) + phi_truncated(y, cap));
  }
}

TEST_CASE("top component on I^i does not depend on the basis") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 3;
    const int i = 1 + t % 3;
    // U unimodular with known inverse, built from elementary row operations
    IntMatrix u = IntMatrix::identity(n), uinv = IntMatrix::identity(n);
    std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1), k(-2, 2);
    for (int s = 0; s < 6 && n > 1; ++s) {
      const auto a = static_cast<std::size_t>(idx(rng)), b = static_cast<std::size_t>(idx(rng));
      if (a == b)
        continue;
      const Int c = k(rng);
      u.add_row_multiple(a, b, c);
      uinv.add_col_multiple(b, a, -c);
    }
    REQUIRE(u * uinv == IntMatrix::identity(n));

    // x = prod_t (1 - e^{mu_t}) lies in I_m^i
    std::vector<Weight<Int>> mus;
    for (int s = 0; s < i; ++s)
      mus.push_back(random_weight(rng, n, 3));
    auto product = [&](const std::vector<Weight<Int>> &ws) {
      auto x = GroupRingElement<Int>::one(n);
      for (const auto &w : ws)
        x = x * (GroupRingElement<Int>::one(n) - GroupRingElement<Int>::exponential(w));
      return x;
    };
    const auto top = phi_truncated(product(mus), i).homogeneous_component(i);

    // coordinates in omega' = U omega are a' = U^{-T} a
    std::vector<Weight<Int>> primed;
    for (const auto &w : mus) {
      Weight<Int> a(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          a[r] += uinv(c, r) * w[c];
      primed.push_back(a);
    }
    const auto top_primed = phi_truncated(product(primed), i).homogeneous_component(i);
    // rewrite omega'_r = sum_c U(r, c) omega_c
    std::vector<SparsePoly<Int>> images;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        row.push_back(u(r, c));
      images.push_back(SparsePoly<Int>::linear(row));
    }
    CHECK(top_primed.substitute(images) == top);
    // and both equal prod_t (-mu_t)
    auto expected = SparsePoly<Int>::constant(n, Int(1));
    for (const auto &w : mus)
      expected = expected * -SparsePoly<Int>::linear(w.coords);
    CHECK(top == expected);
  }
}

TEST_CASE("phi of orbit sums: worked values") {
  const auto a2 = rs_of(Family::A, 2);
  CHECK(phi_rho(a2, Weight<Int>({1, 0}), 2) == P("w1^2 - w1*w2 + w2^2", 2));
  for (auto k : rank_le4()) {
    const auto rs = RootSystem::build(k);
    for (int j = 0; j < k.rank; ++j)
      CHECK(phi_rho(rs, Weight<Int>::fundamental(k.rank, j), 1).is_zero());
  }

  // A2: phi^(3)(rho(w1)) - phi^(3)(rho(w2)) = q_3 / 3
  const auto diff = phi_rho_closed_form(a2, Weight<Int>({1, 0}), 3) - phi_rho_closed_form(a2, Weight<Int>({0, 1}), 3);
  auto q3 = power_sum_q({Family::A, 2}, 3);
  REQUIRE(q3.try_divide(3));
  CHECK(diff == q3);

  const auto b2 = rs_of(Family::B, 2);
  CHECK(phi_rho_closed_form(b2, Weight<Int>({0, 1}), 3) == phi_rho(b2, Weight<Int>({0, 1}), 3));

  const auto g2 = rs_of(Family::G, 2);
  CHECK(phi_rho_closed_form(g2, Weight<Int>({1, 0}), 2) == Int(2) * normalized_q(g2));
  CHECK_THROWS_AS(phi_rho_closed_form(g2, Weight<Int>({1, 0}), 5), UsageError);
}

TEST_CASE("phi of orbit sums over Z[tau]") {
  const auto h2 = rs_of(Family::H2, 2);
  const auto expected = parse_poly<GoldenInt>("(2+tau)*w1^2 + (-1-3*tau)*w1*w2 + (2+tau)*w2^2", 2);
  CHECK(phi_rho(h2, Weight<GoldenInt>::fundamental(2, 0), 2) == expected);
  CHECK(phi_rho(h2, Weight<GoldenInt>::fundamental(2, 1), 2) == expected);
  CHECK(phi_rho_closed_form(h2, Weight<GoldenInt>::fundamental(2, 0), 2) == expected);

  // Degrees 3 and 4 are not integral over Z[tau]; compare i! * phi^(i)
  // against a direct series expansion scaled by (i!)^2.
  for (std::size_t j = 0; j < 2; ++j) {
    const auto chi = Weight<GoldenInt>::fundamental(2, j);
    const auto scaled = phi_rho_scaled_components(h2, chi, 4);
    for (int i = 2; i <= 4; ++i) {
      const Int fact = universal_phi(i).denominator();
      SparsePoly<GoldenInt> sum(2);
      for (const auto &w : orbit(h2, chi))
        sum += oracle::series_exp_scaled(w, i).homogeneous_component(i);
      CHECK(GoldenInt(fact) * scaled[static_cast<std::size_t>(i)] == sum);
      CHECK(phi_rho_closed_form_scaled(h2, chi, i) == scaled[static_cast<std::size_t>(i)]);
    }
    CHECK_THROWS_AS(phi_rho(h2, chi, 3), ConsistencyError);
    // 3! phi^(3)(rho) has w1^2 w2 coefficient 6 * (-1/2 - 3/2 tau)
    CHECK(scaled[3].coefficient(Monomial({2, 1})) == GoldenInt(-3, -9));
    CHECK(scaled[3].coefficient(Monomial({3, 0})) == GoldenInt(12, 6));
  }
}

TEST_CASE("four paths agree on small types") {
  for (auto k : {RootSystemKind{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2}}) {
    const auto rs = RootSystem::build(k);
    for (int j = 0; j < k.rank; ++j) {
      const auto chi = Weight<Int>::fundamental(k.rank, j);
      const auto streamed = phi_rho_components(rs, chi, 4);
      for (int i = 2; i <= 4; ++i) {
        CAPTURE(k.name());
        CAPTURE(j);
        CAPTURE(i);
        CHECK(streamed[static_cast<std::size_t>(i)] == phi_rho_series(rs, chi, i));
        CHECK(streamed[static_cast<std::size_t>(i)] == phi_rho_universal(rs, chi, i));
        CHECK(streamed[static_cast<std::size_t>(i)] == phi_rho_closed_form(rs, chi, i));
      }
      CHECK(streamed[0] == SparsePoly<Int>::constant(static_cast<std::size_t>(k.rank),
                                                     Int(static_cast<long>(orbit(rs, chi).size()))));
    }
  }
}

TEST_CASE("degree 2 is invariant under the Weyl group") {
  for (auto k : rank_le4()) {
    const auto rs = RootSystem::build(k);
    for (int j = 0; j < k.rank; ++j) {
      const auto p = phi_rho(rs, Weight<Int>::fundamental(k.rank, j), 2);
      for (int s = 0; s < k.rank; ++s)
        CHECK(p.substitute(reflection_images<Int>(rs, static_cast<std::size_t>(s))) == p);
    }
  }
}

TEST_CASE("phi of exponentials is integral") {
  std::mt19937_64 rng(41);
  for (auto k : rank_le4()) {
    for (int t = 0; t < 100; ++t) {
      const auto lambda = random_weight(rng, static_cast<std::size_t>(k.rank), 6);
      for (int i = 1; i <= 4; ++i)
        CHECK_NOTHROW(universal_phi(i).evaluate(lambda));
    }
  }
}

TEST_CASE("power-sum accumulators merge exactly") {
  const auto rs = rs_of(Family::B, 3);
  const auto o = orbit(rs, Weight<Int>({0, 1, 0}));
  PowerSumAccumulator<Int> whole(3, 4), left(3, 4), right(3, 4);
  for (std::size_t i = 0; i < o.size(); ++i) {
    whole.add(o[i]);
    (i % 3 == 0 ? left : right).add(o[i]);
  }
  right.merge(left);
  CHECK(right.count() == whole.count());
  for (int i = 0; i <= 4; ++i)
    CHECK(right.phi_component(i) == whole.phi_component(i));
  CHECK(whole.phi_component(4) == phi_rho(rs, Weight<Int>({0, 1, 0}), 4));
}

TEST_CASE("disk cache is a pure memo") {
  const auto dir = std::filesystem::temp_directory_path() / "weylexp_test_cache";
  std::filesystem::remove_all(dir);
  const PhiCache cache(dir);
  const auto rs = rs_of(Family::C, 3);
  const auto chi = Weight<Int>({0, 0, 1});
  const auto plain = phi_rho(rs, chi, 4);
  PhiOptions opts;
  opts.cache = &cache;
  CHECK(phi_rho(rs, chi, 4, opts) == plain);
  const auto key = PhiCache::key(rs.kind(), chi, 4);
  CHECK(key == "C3_chi_0_0_1_i4_v1");
  REQUIRE(cache.load(key).has_value());
  CHECK(*cache.load(key) == to_string(plain));
  CHECK(phi_rho(rs, chi, 4, opts) == plain);
  std::filesystem::remove_all(dir);
}
