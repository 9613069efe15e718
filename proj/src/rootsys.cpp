#include "weylexp/rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weylexp {

std::string family_letter(Family f) {
  switch (f) {
  case Family::A: return "A";
  case Family::B: return "B";
  case Family::C: return "C";
  case Family::D: return "D";
  case Family::E: return "E";
  case Family::F: return "F";
  case Family::G: return "G";
  case Family::H2: return "H";
  }
  return "?";
}

std::string RootSystemKind::name() const {
  return family_letter(family) + std::to_string(rank);
}

void RootSystemKind::validate() const {
  bool ok = false;
  switch (family) {
  case Family::A: ok = rank >= 1; break;
  case Family::B:
  case Family::C: ok = rank >= 2; break;
  case Family::D: ok = rank >= 4; break;
  case Family::E: ok = rank >= 6 && rank <= 8; break;
  case Family::F: ok = rank == 4; break;
  case Family::G: ok = rank == 2; break;
  case Family::H2: ok = rank == 2; break;
  }
  if (!ok)
    throw UsageError("inadmissible rank " + std::to_string(rank) + " for family " +
                     family_letter(family));
}

RootSystemKind RootSystemKind::parse(const std::string &family, std::optional<int> rank) {
  std::string f;
  for (char c : family)
    f.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  static const std::map<std::string, Family> table = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"H", Family::H2},
      {"H2", Family::H2}};
  auto it = table.find(f);
  if (it == table.end())
    throw UsageError("unknown root system family '" + family + "'");
  RootSystemKind k;
  k.family = it->second;
  if (k.family == Family::H2)
    k.rank = rank.value_or(2);
  else if (k.family == Family::F)
    k.rank = rank.value_or(4);
  else if (k.family == Family::G)
    k.rank = rank.value_or(2);
  else if (!rank)
    throw UsageError("family " + f + " needs a rank");
  else
    k.rank = *rank;
  k.validate();
  return k;
}

namespace {

Matrix<long> cartan_entries(const RootSystemKind &k) {
  const int n = k.rank;
  Matrix<long> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (k.family) {
  case Family::A:
    for (int i = 0; i + 1 < n; ++i)
      link(i, i + 1);
    break;
  case Family::B: // alpha_n short
    for (int i = 0; i + 1 < n; ++i)
      link(i, i + 1);
    c[n - 1][n - 2] = -2;
    break;
  case Family::C: // alpha_n long
    for (int i = 0; i + 1 < n; ++i)
      link(i, i + 1);
    c[n - 2][n - 1] = -2;
    break;
  case Family::D:
    for (int i = 0; i + 2 < n; ++i)
      link(i, i + 1);
    link(n - 3, n - 1);
    break;
  case Family::E: // 1-3-4-5-6(-7-8), 2 attached to 4
    link(0, 2);
    link(2, 3);
    link(3, 4);
    link(1, 3);
    for (int i = 4; i + 1 < n; ++i)
      link(i, i + 1);
    break;
  case Family::F: // alpha_1, alpha_2 long
    link(0, 1);
    link(1, 2);
    link(2, 3);
    c[2][1] = -2;
    break;
  case Family::G: // alpha_1 short
    c[0][1] = -3;
    c[1][0] = -1;
    break;
  case Family::H2:
    break;
  }
  return c;
}

} // namespace

RootSystem RootSystem::build(RootSystemKind kind) {
  kind.validate();
  RootSystem rs;
  rs.kind_ = kind;
  const int n = kind.rank;
  if (kind.family == Family::H2) {
    const GoldenInt mt = -GoldenInt::tau();
    rs.cartan_golden_ = {{GoldenInt(2), mt}, {mt, GoldenInt(2)}};
    rs.symmetrizer_ = {Rational(1), Rational(1)};
    return rs;
  }
  auto c = cartan_entries(kind);
  Matrix<Int> ci(n, std::vector<Int>(n));
  rs.cartan_golden_.assign(n, std::vector<GoldenInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ci[i][j] = c[i][j];
      rs.cartan_golden_[i][j] = GoldenInt(c[i][j]);
    }
  rs.cartan_ = std::move(ci);

  // d_j = d_i c[i][j] / c[j][i] along the (connected) Dynkin diagram
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (sgn(d[i]) == 0)
        continue;
      for (int j = 0; j < n; ++j)
        if (i != j && c[i][j] != 0 && sgn(d[j]) == 0) {
          d[j] = d[i] * Rational(c[i][j]) / Rational(c[j][i]);
          d[j].canonicalize();
          changed = true;
        }
    }
  }
  Rational top = *std::max_element(d.begin(), d.end());
  for (auto &x : d) {
    x /= top;
    x.canonicalize();
  }
  rs.symmetrizer_ = std::move(d);
  rs.derive_roots();
  return rs;
}

RootSystem RootSystem::with_cartan_entry(std::size_t i, std::size_t j, long value) const {
  RootSystem rs = *this;
  if (i >= static_cast<std::size_t>(rank()) || j >= static_cast<std::size_t>(rank()))
    throw UsageError("Cartan index out of range");
  rs.cartan_golden_[i][j] = GoldenInt(value);
  if (rs.cartan_)
    (*rs.cartan_)[i][j] = value;
  return rs;
}

const Matrix<Int> &RootSystem::cartan() const {
  if (!cartan_)
    throw UsageError(kind_.name() + " has no integral Cartan matrix");
  return *cartan_;
}

namespace {
void require_crystallographic(const RootSystem &rs, const char *what) {
  if (!rs.crystallographic())
    throw UsageError(std::string(what) + " is defined only for crystallographic root systems");
}
} // namespace

const std::vector<Weight<Int>> &RootSystem::roots() const {
  require_crystallographic(*this, "roots");
  return roots_;
}
const std::vector<std::vector<Int>> &RootSystem::root_coords() const {
  require_crystallographic(*this, "roots");
  return root_coords_;
}
const Weight<Int> &RootSystem::highest_root() const {
  require_crystallographic(*this, "highest root");
  return highest_root_;
}
const std::vector<Int> &RootSystem::theta_covector() const {
  require_crystallographic(*this, "theta coroot");
  return theta_covector_;
}

Rational RootSystem::root_norm(const std::vector<Int> &b) const {
  const auto &c = cartan();
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      s += Rational(b[i] * b[k]) * symmetrizer_[i] * Rational(c[i][k]);
  s.canonicalize();
  return s;
}

std::vector<Int> RootSystem::coroot(const std::vector<Int> &b) const {
  // beta^vee = 2 beta / (beta, beta) and alpha_k = (alpha_k,alpha_k)/2 alpha_k^vee
  Rational half_norm = root_norm(b) / 2;
  std::vector<Int> out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    Rational v = Rational(b[k]) * symmetrizer_[k] / half_norm;
    v.canonicalize();
    if (v.get_den() != 1)
      throw ConsistencyError("non-integral coroot coordinate");
    out[k] = v.get_num();
  }
  return out;
}

std::vector<std::vector<Int>> RootSystem::short_coroots() const {
  std::vector<std::vector<Int>> out;
  for (const auto &b : root_coords())
    if (root_norm(b) == 2)
      out.push_back(coroot(b));
  return out;
}

void RootSystem::derive_roots() {
  const auto &c = cartan();
  const std::size_t n = c.size();
  // closure of the simple roots under simple reflections, in root coordinates
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> frontier;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> e(n, 0);
    e[j] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto &b : frontier)
      for (std::size_t j = 0; j < n; ++j) {
        Int p = 0;
        for (std::size_t k = 0; k < n; ++k)
          p += c[j][k] * b[k];
        if (sgn(p) == 0)
          continue;
        auto r = b;
        r[j] -= p;
        if (seen.insert(r).second)
          next.push_back(std::move(r));
      }
    frontier = std::move(next);
    if (seen.size() > 100000)
      throw ConsistencyError("root closure does not terminate (not a finite root system)");
  }

  std::vector<std::pair<Weight<Int>, std::vector<Int>>> all;
  for (const auto &b : seen) {
    Weight<Int> w(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        w[i] += c[i][k] * b[k];
    all.emplace_back(std::move(w), b);
  }
  std::sort(all.begin(), all.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  roots_.clear();
  root_coords_.clear();
  for (auto &[w, b] : all) {
    roots_.push_back(w);
    root_coords_.push_back(b);
  }

  // highest root: the unique root of maximal height
  std::size_t best = 0;
  Int best_height = -1;
  for (std::size_t r = 0; r < root_coords_.size(); ++r) {
    Int h = 0;
    for (const auto &x : root_coords_[r])
      h += x;
    if (h > best_height) {
      best_height = h;
      best = r;
    }
  }
  highest_root_ = roots_[best];
  if (root_norm(root_coords_[best]) != 2)
    throw ConsistencyError("highest root is not long");
  theta_covector_ = coroot(root_coords_[best]);
}

std::size_t RootSystem::weyl_group_order() const {
  auto fact = [](std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i)
      f *= i;
    return f;
  };
  const std::size_t n = static_cast<std::size_t>(rank());
  switch (kind_.family) {
  case Family::A: return fact(n + 1);
  case Family::B:
  case Family::C: return (std::size_t{1} << n) * fact(n);
  case Family::D: return (std::size_t{1} << (n - 1)) * fact(n);
  case Family::E: return n == 6 ? 51840 : (n == 7 ? 2903040 : 696729600);
  case Family::F: return 1152;
  case Family::G: return 12;
  case Family::H2: return 10;
  }
  return 0;
}

template <Scalar R>
Weight<R> dominant_representative(const RootSystem &rs, const Weight<R> &chi, std::size_t cap) {
  Weight<R> w = chi;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > cap)
      throw OrbitCapExceeded(cap);
    std::size_t j = 0;
    while (j < w.size() && real_sign(w[j]) >= 0)
      ++j;
    if (j == w.size())
      return w;
    w = reflect(rs, j, w);
  }
}

template <Scalar R>
void orbit_stream(const RootSystem &rs, const Weight<R> &chi,
                  const std::function<void(const Weight<R> &)> &visit, std::size_t cap) {
  if (chi.size() != static_cast<std::size_t>(rs.rank()))
    throw UsageError("weight has " + std::to_string(chi.size()) + " coordinates, rank is " +
                     std::to_string(rs.rank()));
  std::set<Weight<R>> level{dominant_representative(rs, chi, cap)};
  std::size_t count = 0;
  while (!level.empty()) {
    std::set<Weight<R>> next;
    for (const auto &w : level) {
      if (++count > cap)
        throw OrbitCapExceeded(cap);
      visit(w);
      for (std::size_t j = 0; j < w.size(); ++j)
        if (real_sign(w[j]) > 0)
          next.insert(reflect(rs, j, w));
    }
    level = std::move(next);
  }
}

template <Scalar R>
std::vector<Weight<R>> orbit(const RootSystem &rs, const Weight<R> &chi, std::size_t cap) {
  std::vector<Weight<R>> out;
  orbit_stream<R>(rs, chi, [&](const Weight<R> &w) { out.push_back(w); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

template <Scalar R> Weight<R> parse_weight(const std::string &text) {
  Weight<R> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    w.coords.push_back(parse_scalar<R>(item));
  if (w.coords.empty())
    throw UsageError("empty weight '" + text + "'");
  return w;
}

template Weight<Int> dominant_representative(const RootSystem &, const Weight<Int> &, std::size_t);
template Weight<GoldenInt> dominant_representative(const RootSystem &, const Weight<GoldenInt> &,
                                                   std::size_t);
template void orbit_stream(const RootSystem &, const Weight<Int> &,
                           const std::function<void(const Weight<Int> &)> &, std::size_t);
template void orbit_stream(const RootSystem &, const Weight<GoldenInt> &,
                           const std::function<void(const Weight<GoldenInt> &)> &, std::size_t);
template std::vector<Weight<Int>> orbit(const RootSystem &, const Weight<Int> &, std::size_t);
template std::vector<Weight<GoldenInt>> orbit(const RootSystem &, const Weight<GoldenInt> &,
                                              std::size_t);
template Weight<Int> parse_weight<Int>(const std::string &);
template Weight<GoldenInt> parse_weight<GoldenInt>(const std::string &);

Int pairing_with_long_coroot(const RootSystem &rs, const Weight<Int> &lambda) {
  const auto &c = rs.theta_covector();
  Int s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    s += c[i] * lambda[i];
  return s;
}

// ---------------------------------------------------------------------------

OrthChart OrthChart::build(RootSystemKind kind) {
  kind.validate();
  if (!kind.classical())
    throw UsageError("orthonormal chart is defined only for families A-D, not " + kind.name());
  OrthChart ch;
  ch.kind_ = kind;
  const std::size_t n = static_cast<std::size_t>(kind.rank);
  const bool is_a = kind.family == Family::A;
  ch.dim_ = is_a ? n + 1 : n;
  ch.omega_e_.assign(n, std::vector<Rational>(ch.dim_, Rational(0)));
  ch.coroot_e_.assign(n, std::vector<Int>(ch.dim_, 0));

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      ch.omega_e_[k][i] = 1;
  for (std::size_t k = 0; k + 1 < ch.dim_ && k < n; ++k) {
    ch.coroot_e_[k][k] = 1;
    ch.coroot_e_[k][k + 1] = -1;
  }

  switch (kind.family) {
  case Family::A:
    ch.omega_e_[n - 1].assign(ch.dim_, Rational(0));
    ch.omega_e_[n - 1][n] = -1;
    break;
  case Family::B:
    for (auto &x : ch.omega_e_[n - 1])
      x = Rational(1, 2);
    ch.coroot_e_[n - 1].assign(n, 0);
    ch.coroot_e_[n - 1][n - 1] = 2;
    break;
  case Family::C:
    ch.coroot_e_[n - 1].assign(n, 0);
    ch.coroot_e_[n - 1][n - 1] = 1;
    break;
  case Family::D:
    for (std::size_t i = 0; i < n; ++i) {
      ch.omega_e_[n - 2][i] = Rational(1, 2);
      ch.omega_e_[n - 1][i] = Rational(1, 2);
    }
    ch.omega_e_[n - 2][n - 1] = Rational(-1, 2);
    ch.coroot_e_[n - 1].assign(n, 0);
    ch.coroot_e_[n - 1][n - 2] = 1;
    ch.coroot_e_[n - 1][n - 1] = 1;
    break;
  default:
    break;
  }
  return ch;
}

std::vector<Rational> OrthChart::to_orth(const std::vector<Rational> &omega) const {
  std::vector<Rational> v(dim_, Rational(0));
  for (std::size_t k = 0; k < omega.size(); ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      v[i] += omega[k] * omega_e_[k][i];
  for (auto &x : v)
    x.canonicalize();
  return v;
}

std::vector<Rational> OrthChart::to_orth(const Weight<Int> &lambda) const {
  std::vector<Rational> omega;
  for (const auto &x : lambda.coords)
    omega.emplace_back(x);
  return to_orth(omega);
}

std::vector<Rational> OrthChart::from_orth(const std::vector<Rational> &e) const {
  if (e.size() != dim_)
    throw UsageError("e-vector has wrong dimension");
  std::vector<Rational> out(coroot_e_.size(), Rational(0));
  for (std::size_t k = 0; k < coroot_e_.size(); ++k) {
    for (std::size_t i = 0; i < dim_; ++i)
      out[k] += Rational(coroot_e_[k][i]) * e[i];
    out[k].canonicalize();
  }
  return out;
}

Weight<Int> OrthChart::e_weight(std::size_t j) const {
  std::vector<Rational> e(dim_, Rational(0));
  e.at(j) = 1;
  auto w = from_orth(e);
  Weight<Int> out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].get_den() != 1)
      throw ConsistencyError("e-basis vector is not an integral weight");
    out[k] = w[k].get_num();
  }
  return out;
}

bool OrthChart::equivalent(const std::vector<Rational> &v, const std::vector<Rational> &w) const {
  if (v.size() != w.size())
    return false;
  if (kind_.family != Family::A)
    return v == w;
  Rational shift = v[0] - w[0];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] - w[i] != shift)
      return false;
  return true;
}

} // namespace weylexp
