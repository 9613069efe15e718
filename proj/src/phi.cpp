#include "weylexp/phi.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace weylexp {

GroupRingElement<Int> orbit_sum(const RootSystem &rs, const Weight<Int> &chi) {
  GroupRingElement<Int> x(static_cast<std::size_t>(rs.rank()));
  orbit_stream<Int>(rs, chi, [&](const Weight<Int> &w) { x.add_term(w, Int(1)); });
  return x;
}

TruncatedPoly<Int> phi_exp(std::size_t rank, const Weight<Int> &lambda, int cap) {
  TruncatedPoly<Int> out(SparsePoly<Int>::constant(rank, Int(1)), cap);
  for (std::size_t j = 0; j < rank; ++j)
    if (!is_zero(lambda[j]))
      out = out * geometric_power(rank, j, lambda[j], cap);
  return out;
}

TruncatedPoly<Int> phi_truncated(const GroupRingElement<Int> &x, int cap) {
  SparsePoly<Int> acc(x.rank());
  for (const auto &[w, c] : x.terms())
    acc += c * phi_exp(x.rank(), w, cap).poly();
  return TruncatedPoly<Int>(std::move(acc), cap);
}

GroupRingElement<Int> phi_inverse_gen(std::size_t rank, std::size_t j) {
  auto x = GroupRingElement<Int>::one(rank);
  x.add_term(-Weight<Int>::fundamental(rank, j), Int(-1));
  return x;
}

int weighted_degree(const CharacterPattern &p) {
  int d = 0;
  for (std::size_t m = 0; m < p.size(); ++m)
    d += static_cast<int>(m + 1) * p[m];
  return d;
}

namespace {

void partitions(int remaining, int largest, CharacterPattern &cur,
                std::vector<CharacterPattern> &out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    ++cur[part - 1];
    partitions(remaining - part, part, cur, out);
    --cur[part - 1];
  }
}

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

// polynomial in G_0, G_1, ... where G_t = g^{(t)}(z)
using DerivPoly = std::map<std::vector<int>, Int>;

void add_to(DerivPoly &p, const std::vector<int> &m, const Int &c) {
  if (sgn(c) == 0)
    return;
  Int &slot = p[m];
  slot += c;
  if (sgn(slot) == 0)
    p.erase(m);
}

} // namespace

std::vector<CharacterPattern> character_patterns(int d) {
  std::vector<CharacterPattern> out;
  if (d <= 0)
    return out;
  CharacterPattern cur(static_cast<std::size_t>(d), 0);
  partitions(d, d, cur, out);
  return out;
}

UniversalPhiFormula::UniversalPhiFormula(int degree)
    : degree_(degree), denominator_(factorial(degree)) {
  if (degree < 0)
    throw UsageError("negative degree");
  const std::size_t width = static_cast<std::size_t>(degree) + 1;
  DerivPoly g{{std::vector<int>(width, 0), Int(1)}};
  for (int k = 1; k <= degree; ++k) {
    DerivPoly next;
    for (const auto &[m, c] : g) {
      // g * g_{k-1}
      auto mg = m;
      ++mg[0];
      add_to(next, mg, c);
      // d/dz: G_t^e -> e G_t^{e-1} G_{t+1}
      for (std::size_t t = 0; t + 1 < width; ++t) {
        if (m[t] == 0)
          continue;
        auto md = m;
        --md[t];
        ++md[t + 1];
        add_to(next, md, c * m[t]);
      }
    }
    g = std::move(next);
  }
  // at z = 0, G_t = t! * lambda(t + 1)
  for (const auto &[m, c] : g) {
    Int coeff = c;
    CharacterPattern p(static_cast<std::size_t>(std::max(degree, 1)), 0);
    for (std::size_t t = 0; t < width; ++t) {
      if (m[t] == 0)
        continue;
      for (int e = 0; e < m[t]; ++e)
        coeff *= factorial(static_cast<int>(t));
      p[t] = m[t];
    }
    if (degree == 0)
      p.clear();
    numerators_[p] += coeff;
  }
}

Rational UniversalPhiFormula::coefficient(const CharacterPattern &p) const {
  auto it = numerators_.find(p);
  if (it == numerators_.end())
    return Rational(0);
  Rational r(it->second, denominator_);
  r.canonicalize();
  return r;
}

namespace {

template <Scalar R>
SparsePoly<R> pattern_product(const CharacterPattern &p, std::vector<std::vector<SparsePoly<R>>> &powers,
                              std::size_t n) {
  SparsePoly<R> t = SparsePoly<R>::constant(n, R(1));
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] == 0)
      continue;
    auto &pw = powers[m];
    while (static_cast<int>(pw.size()) <= p[m])
      pw.push_back(pw.back() * pw[1]);
    t = t * pw[static_cast<std::size_t>(p[m])];
  }
  return t;
}

template <Scalar R>
std::vector<std::vector<SparsePoly<R>>> character_powers(const Weight<R> &lambda, int max_m) {
  const std::size_t n = lambda.size();
  std::vector<std::vector<SparsePoly<R>>> powers(static_cast<std::size_t>(max_m));
  for (int m = 1; m <= max_m; ++m)
    powers[m - 1] = {SparsePoly<R>::constant(n, R(1)), SparsePoly<R>::character(lambda, m)};
  return powers;
}

} // namespace

template <Scalar R>
SparsePoly<R> UniversalPhiFormula::evaluate_scaled(const Weight<R> &lambda) const {
  const std::size_t n = lambda.size();
  if (degree_ == 0)
    return SparsePoly<R>::constant(n, R(1));
  auto powers = character_powers(lambda, degree_);
  SparsePoly<R> out(n);
  for (const auto &[p, c] : numerators_) {
    auto t = pattern_product(p, powers, n);
    t *= R(c);
    out += t;
  }
  return out;
}

SparsePoly<Int> UniversalPhiFormula::evaluate(const Weight<Int> &lambda) const {
  auto p = evaluate_scaled(lambda);
  if (!p.try_divide(denominator_))
    throw ConsistencyError("phi^(" + std::to_string(degree_) + ")(e^lambda) is not integral");
  return p;
}

std::string UniversalPhiFormula::to_string() const {
  std::string body;
  for (const auto &[p, c] : numerators_) {
    std::string factors;
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (p[m] == 0)
        continue;
      if (!factors.empty())
        factors += "*";
      factors += "L" + std::to_string(m + 1);
      if (p[m] > 1)
        factors += "^" + std::to_string(p[m]);
    }
    if (factors.empty())
      factors = "1";
    if (!body.empty())
      body += " + ";
    body += (c == 1 ? "" : c.get_str() + "*") + factors;
  }
  if (denominator_ == 1)
    return body;
  return "(1/" + denominator_.get_str() + ")*(" + body + ")";
}

const UniversalPhiFormula &universal_phi(int degree) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<UniversalPhiFormula>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto &slot = cache[degree];
  if (!slot)
    slot = std::make_unique<UniversalPhiFormula>(degree);
  return *slot;
}

template <Scalar R>
PowerSumAccumulator<R>::PowerSumAccumulator(std::size_t rank, int max_degree)
    : rank_(rank), max_degree_(max_degree) {
  for (int d = 1; d <= max_degree; ++d)
    for (auto &p : character_patterns(d))
      sums_.emplace(p, SparsePoly<R>(rank));
}

template <Scalar R> void PowerSumAccumulator<R>::add(const Weight<R> &lambda) {
  ++count_;
  if (max_degree_ <= 0)
    return;
  auto powers = character_powers(lambda, max_degree_);
  for (auto &[p, s] : sums_)
    s += pattern_product(p, powers, rank_);
}

template <Scalar R> void PowerSumAccumulator<R>::merge(const PowerSumAccumulator &other) {
  count_ += other.count_;
  for (auto &[p, s] : sums_)
    s += other.sums_.at(p);
}

template <Scalar R>
const SparsePoly<R> &PowerSumAccumulator<R>::sum(const CharacterPattern &p) const {
  auto it = sums_.find(p);
  if (it == sums_.end())
    throw UsageError("pattern beyond accumulated degree");
  return it->second;
}

template <Scalar R> SparsePoly<R> PowerSumAccumulator<R>::phi_component_scaled(int i) const {
  if (i == 0)
    return SparsePoly<R>::constant(rank_, R(Int(static_cast<unsigned long>(count_))));
  if (i > max_degree_)
    throw UsageError("degree beyond accumulated degree");
  SparsePoly<R> out(rank_);
  for (const auto &[p, c] : universal_phi(i).numerators()) {
    auto t = sums_.at(p);
    t *= R(c);
    out += t;
  }
  return out;
}

template <Scalar R> SparsePoly<R> PowerSumAccumulator<R>::phi_component(int i) const {
  if (i == 0)
    return phi_component_scaled(0);
  const auto &formula = universal_phi(i);
  SparsePoly<R> out = phi_component_scaled(i);
  if (!out.try_divide(formula.denominator()))
    throw ConsistencyError("orbit sum of " + formula.denominator().get_str() +
                           " * phi^(" + std::to_string(i) + ") not divisible by " +
                           formula.denominator().get_str());
  return out;
}

template class PowerSumAccumulator<Int>;
template class PowerSumAccumulator<GoldenInt>;
template SparsePoly<Int> UniversalPhiFormula::evaluate_scaled(const Weight<Int> &) const;
template SparsePoly<GoldenInt> UniversalPhiFormula::evaluate_scaled(const Weight<GoldenInt> &) const;

// ---------------------------------------------------------------------------

PhiCache::PhiCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<PhiCache> PhiCache::from_environment() {
  const char *env = std::getenv(kCacheEnvVar);
  if (!env || !*env)
    return std::nullopt;
  return std::optional<PhiCache>(std::in_place, env);
}

std::optional<std::string> PhiCache::load(const std::string &key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::ifstream in(dir_ / (key + ".txt"));
  if (!in)
    return std::nullopt;
  std::string line;
  std::getline(in, line);
  if (line.empty())
    return std::nullopt;
  return line;
}

void PhiCache::store(const std::string &key, const std::string &value) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  // write-then-rename so a partial file is never read back
  auto final_path = dir_ / (key + ".txt");
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      return;
    out << value << '\n';
  }
  std::filesystem::rename(tmp, final_path, ec);
}

template <Scalar R>
std::string PhiCache::key(const RootSystemKind &kind, const Weight<R> &chi, int degree) {
  std::string k = kind.name() + "_chi";
  for (const auto &c : chi.coords) {
    k += "_";
    for (char ch : to_string(c)) {
      switch (ch) {
      case '-': k += 'm'; break;
      case '+': k += 'p'; break;
      case '*': break;
      default: k += ch;
      }
    }
  }
  return k + "_i" + std::to_string(degree) + "_v" + std::to_string(kPhiCodeVersion);
}

template std::string PhiCache::key(const RootSystemKind &, const Weight<Int> &, int);
template std::string PhiCache::key(const RootSystemKind &, const Weight<GoldenInt> &, int);

// ---------------------------------------------------------------------------

template <Scalar R>
std::vector<SparsePoly<R>> phi_rho_components(const RootSystem &rs, const Weight<R> &chi,
                                              int max_degree, const PhiOptions &opts) {
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  if (opts.cache) {
    std::vector<SparsePoly<R>> hit;
    for (int i = 0; i <= max_degree; ++i) {
      auto text = opts.cache->load(PhiCache::key(rs.kind(), chi, i));
      if (!text)
        break;
      hit.push_back(parse_poly<R>(*text, n));
    }
    if (static_cast<int>(hit.size()) == max_degree + 1)
      return hit;
  }

  PowerSumAccumulator<R> acc(n, max_degree);
  orbit_stream<R>(rs, chi, [&](const Weight<R> &w) { acc.add(w); }, opts.stream_cap);
  std::vector<SparsePoly<R>> out;
  for (int i = 0; i <= max_degree; ++i)
    out.push_back(acc.phi_component(i));

  if (opts.cache)
    for (int i = 0; i <= max_degree; ++i)
      opts.cache->store(PhiCache::key(rs.kind(), chi, i), to_string(out[i]));
  return out;
}

template <Scalar R>
std::vector<SparsePoly<R>> phi_rho_scaled_components(const RootSystem &rs, const Weight<R> &chi,
                                                     int max_degree, const PhiOptions &opts) {
  PowerSumAccumulator<R> acc(static_cast<std::size_t>(rs.rank()), max_degree);
  orbit_stream<R>(rs, chi, [&](const Weight<R> &w) { acc.add(w); }, opts.stream_cap);
  std::vector<SparsePoly<R>> out;
  for (int i = 0; i <= max_degree; ++i)
    out.push_back(acc.phi_component_scaled(i));
  return out;
}

template std::vector<SparsePoly<Int>> phi_rho_scaled_components(const RootSystem &,
                                                                const Weight<Int> &, int,
                                                                const PhiOptions &);
template std::vector<SparsePoly<GoldenInt>>
phi_rho_scaled_components(const RootSystem &, const Weight<GoldenInt> &, int, const PhiOptions &);

template <Scalar R>
SparsePoly<R> phi_rho(const RootSystem &rs, const Weight<R> &chi, int degree,
                      const PhiOptions &opts) {
  if (degree < 0)
    throw UsageError("negative degree");
  return phi_rho_components(rs, chi, degree, opts).back();
}

template std::vector<SparsePoly<Int>> phi_rho_components(const RootSystem &, const Weight<Int> &,
                                                         int, const PhiOptions &);
template std::vector<SparsePoly<GoldenInt>>
phi_rho_components(const RootSystem &, const Weight<GoldenInt> &, int, const PhiOptions &);
template SparsePoly<Int> phi_rho(const RootSystem &, const Weight<Int> &, int, const PhiOptions &);
template SparsePoly<GoldenInt> phi_rho(const RootSystem &, const Weight<GoldenInt> &, int,
                                       const PhiOptions &);

SparsePoly<Int> phi_rho_series(const RootSystem &rs, const Weight<Int> &chi, int degree) {
  SparsePoly<Int> acc(static_cast<std::size_t>(rs.rank()));
  for (const auto &w : orbit(rs, chi))
    acc += phi_exp(rs, w, degree).homogeneous_component(degree);
  return acc;
}

SparsePoly<Int> phi_rho_universal(const RootSystem &rs, const Weight<Int> &chi, int degree) {
  const auto &formula = universal_phi(degree);
  SparsePoly<Int> acc(static_cast<std::size_t>(rs.rank()));
  for (const auto &w : orbit(rs, chi))
    acc += formula.evaluate(w);
  return acc;
}

template <Scalar R>
SparsePoly<R> phi_rho_closed_form_scaled(const RootSystem &rs, const Weight<R> &chi, int degree) {
  if (degree < 2 || degree > 4)
    throw UsageError("closed form available for degrees 2, 3, 4 only");
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  SparsePoly<R> acc(n);
  for (const auto &w : orbit(rs, chi)) {
    const auto l1 = SparsePoly<R>::character(w, 1);
    const auto l2 = SparsePoly<R>::character(w, 2);
    const auto sq = l1 * l1;
    switch (degree) {
    case 2:
      acc += sq;
      break;
    case 3:
      acc += sq * l1 + R(3) * (l2 * l1);
      break;
    case 4: {
      const auto l3 = SparsePoly<R>::character(w, 3);
      acc += sq * sq + R(6) * (l2 * sq) + R(8) * (l3 * l1) + R(3) * (l2 * l2);
      break;
    }
    }
  }
  return acc;
}

template <Scalar R>
SparsePoly<R> phi_rho_closed_form(const RootSystem &rs, const Weight<R> &chi, int degree) {
  auto acc = phi_rho_closed_form_scaled(rs, chi, degree);
  const Int den = degree == 2 ? 2 : (degree == 3 ? 6 : 24);
  if (!acc.try_divide(den))
    throw ConsistencyError("closed-form orbit sum not divisible by " + den.get_str());
  return acc;
}

template SparsePoly<Int> phi_rho_closed_form_scaled(const RootSystem &, const Weight<Int> &, int);
template SparsePoly<GoldenInt> phi_rho_closed_form_scaled(const RootSystem &,
                                                          const Weight<GoldenInt> &, int);
template SparsePoly<Int> phi_rho_closed_form(const RootSystem &, const Weight<Int> &, int);
template SparsePoly<GoldenInt> phi_rho_closed_form(const RootSystem &, const Weight<GoldenInt> &,
                                                   int);

} // namespace weylexp
