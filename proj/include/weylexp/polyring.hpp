#pragma once

// Sparse polynomials in the fundamental weights w1..wn over Z or Z[tau]:
// the symmetric algebra S*(Lambda) and its truncations S*/I_a^{cap+1}.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weylexp/error.hpp"
#include "weylexp/rootsys.hpp"
#include "weylexp/scalar.hpp"

namespace weylexp {

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t n, std::size_t j, int power = 1) {
    Monomial m(n);
    m.exps_[j] = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int &operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int> &exponents() const { return exps_; }

  int degree() const {
    int d = 0;
    for (int e : exps_)
      d += e;
    return d;
  }

  friend Monomial operator*(const Monomial &x, const Monomial &y) {
    Monomial m = x;
    for (std::size_t i = 0; i < m.exps_.size(); ++i)
      m.exps_[i] += y.exps_[i];
    return m;
  }

  friend bool operator==(const Monomial &, const Monomial &) = default;

  /// Graded lexicographic: higher total degree first, then larger exponent
  /// of the lowest-index variable first.
  friend bool grlex_greater(const Monomial &x, const Monomial &y) {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy)
      return dx > dy;
    for (std::size_t i = 0; i < x.exps_.size(); ++i)
      if (x.exps_[i] != y.exps_[i])
        return x.exps_[i] > y.exps_[i];
    return false;
  }

private:
  std::vector<int> exps_;
};

struct GrlexDescending {
  bool operator()(const Monomial &x, const Monomial &y) const { return grlex_greater(x, y); }
};

/// All monomials of total degree d in n variables, grlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

/// Fixed indexing of the degree-d monomials; column order for lattices.
class MonomialBasis {
public:
  MonomialBasis(std::size_t n, int degree);

  std::size_t size() const { return monos_.size(); }
  int degree() const { return degree_; }
  std::size_t variables() const { return n_; }
  const Monomial &operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial> &monomials() const { return monos_; }
  /// Throws when m is not of this degree.
  std::size_t index(const Monomial &m) const;

private:
  std::size_t n_;
  int degree_;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t, GrlexDescending> index_;
};

template <Scalar R> class SparsePoly {
public:
  using Terms = std::map<Monomial, R, GrlexDescending>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t n) : n_(n) {}

  static SparsePoly constant(std::size_t n, const R &c) {
    SparsePoly p(n);
    p.add_term(Monomial(n), c);
    return p;
  }
  static SparsePoly variable(std::size_t n, std::size_t j) {
    SparsePoly p(n);
    p.add_term(Monomial::variable(n, j), R(1));
    return p;
  }
  /// The linear form sum_j c_j w_j.
  static SparsePoly linear(const std::vector<R> &coeffs) {
    SparsePoly p(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      p.add_term(Monomial::variable(coeffs.size(), j), coeffs[j]);
    return p;
  }
  /// lambda(m) = sum_j a_j w_j^m.
  static SparsePoly character(const Weight<R> &lambda, int m) {
    SparsePoly p(lambda.size());
    for (std::size_t j = 0; j < lambda.size(); ++j)
      p.add_term(Monomial::variable(lambda.size(), j, m), lambda[j]);
    return p;
  }

  std::size_t variables() const { return n_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  R coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(const Monomial &m, const R &c) {
    if (weylexp::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (weylexp::is_zero(it->second))
        terms_.erase(it);
    }
  }

  SparsePoly &operator+=(const SparsePoly &o) {
    adopt_arity(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  SparsePoly &operator-=(const SparsePoly &o) {
    adopt_arity(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  SparsePoly &operator*=(const R &s) {
    if (weylexp::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto &[m, c] : terms_)
      c = c * s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly x, const SparsePoly &y) { return x += y; }
  friend SparsePoly operator-(SparsePoly x, const SparsePoly &y) { return x -= y; }
  friend SparsePoly operator-(SparsePoly x) {
    for (auto &[m, c] : x.terms_)
      c = -c;
    return x;
  }
  friend SparsePoly operator*(const R &s, SparsePoly x) { return x *= s; }
  friend SparsePoly operator*(const SparsePoly &x, const SparsePoly &y) {
    return multiply(x, y, -1);
  }

  /// Product dropping every term of total degree above `cap` (cap < 0: none).
  static SparsePoly multiply(const SparsePoly &x, const SparsePoly &y, int cap) {
    SparsePoly out(x.n_ ? x.n_ : y.n_);
    for (const auto &[mx, cx] : x.terms_) {
      const int dx = mx.degree();
      for (const auto &[my, cy] : y.terms_) {
        if (cap >= 0 && dx + my.degree() > cap)
          continue;
        out.add_term(mx * my, cx * cy);
      }
    }
    return out;
  }

  SparsePoly pow(int k) const {
    SparsePoly r = constant(n_, R(1));
    for (int i = 0; i < k; ++i)
      r = r * *this;
    return r;
  }

  SparsePoly homogeneous_component(int d) const {
    SparsePoly out(n_);
    for (const auto &[m, c] : terms_)
      if (m.degree() == d)
        out.terms_.emplace(m, c);
    return out;
  }

  /// Divides every coefficient by d; false (and *this untouched) unless exact.
  bool try_divide(const Int &d) {
    Terms out;
    for (const auto &[m, c] : terms_) {
      R q;
      if (!try_divexact(c, d, q))
        return false;
      out.emplace(m, std::move(q));
    }
    terms_ = std::move(out);
    return true;
  }

  R evaluate(const std::vector<R> &point) const {
    R s(0);
    for (const auto &[m, c] : terms_) {
      R t = c;
      for (std::size_t j = 0; j < m.size(); ++j)
        for (int e = 0; e < m[j]; ++e)
          t = t * point[j];
      s += t;
    }
    return s;
  }

  /// Ring homomorphism sending w_j to images[j].
  SparsePoly substitute(const std::vector<SparsePoly> &images) const {
    std::size_t target = images.empty() ? n_ : images.front().variables();
    SparsePoly out(target);
    // cache powers of each image
    std::vector<std::vector<SparsePoly>> powers(images.size());
    for (const auto &[m, c] : terms_) {
      SparsePoly t = constant(target, c);
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] == 0)
          continue;
        auto &pw = powers[j];
        if (pw.empty())
          pw.push_back(constant(target, R(1)));
        while (static_cast<int>(pw.size()) <= m[j])
          pw.push_back(pw.back() * images[j]);
        t = t * pw[m[j]];
      }
      out += t;
    }
    return out;
  }

  friend bool operator==(const SparsePoly &x, const SparsePoly &y) {
    if (x.terms_.size() != y.terms_.size())
      return false;
    auto it = y.terms_.begin();
    for (const auto &[m, c] : x.terms_) {
      if (!(m == it->first) || !(c == it->second))
        return false;
      ++it;
    }
    return true;
  }

  /// Coordinate vector over a homogeneous monomial basis.
  std::vector<R> to_vector(const MonomialBasis &basis) const {
    std::vector<R> v(basis.size(), R(0));
    for (const auto &[m, c] : terms_)
      v[basis.index(m)] = c;
    return v;
  }
  static SparsePoly from_vector(const MonomialBasis &basis, const std::vector<R> &v) {
    SparsePoly p(basis.variables());
    for (std::size_t i = 0; i < v.size(); ++i)
      p.add_term(basis[i], v[i]);
    return p;
  }

private:
  std::size_t n_ = 0;
  Terms terms_;

  void adopt_arity(const SparsePoly &o) {
    if (n_ == 0)
      n_ = o.n_;
  }
};

/// Truncated polynomial: an element of S*(Lambda) / I_a^{cap+1}.
template <Scalar R> class TruncatedPoly {
public:
  TruncatedPoly(SparsePoly<R> p, int cap) : cap_(cap) {
    p_ = SparsePoly<R>(p.variables());
    for (const auto &[m, c] : p.terms())
      if (m.degree() <= cap)
        p_.add_term(m, c);
  }

  int cap() const { return cap_; }
  const SparsePoly<R> &poly() const { return p_; }
  SparsePoly<R> homogeneous_component(int d) const { return p_.homogeneous_component(d); }

  friend TruncatedPoly operator*(const TruncatedPoly &x, const TruncatedPoly &y) {
    int cap = std::min(x.cap_, y.cap_);
    TruncatedPoly out(SparsePoly<R>(x.p_.variables()), cap);
    out.p_ = SparsePoly<R>::multiply(x.p_, y.p_, cap);
    return out;
  }
  friend TruncatedPoly operator+(const TruncatedPoly &x, const TruncatedPoly &y) {
    return TruncatedPoly(x.p_ + y.p_, std::min(x.cap_, y.cap_));
  }
  friend bool operator==(const TruncatedPoly &x, const TruncatedPoly &y) {
    return x.cap_ == y.cap_ && x.p_ == y.p_;
  }

private:
  SparsePoly<R> p_;
  int cap_;
};

/// Truncated expansion of (1 - w_j)^{-a}: coefficient of w_j^k is
/// binom(a + k - 1, k), which for a < 0 is the finite expansion of
/// (1 - w_j)^{|a|}.
TruncatedPoly<Int> geometric_power(std::size_t n, std::size_t j, const Int &a, int cap);

/// Generalised binomial coefficient binom(x, k) for integer x, k >= 0.
Int binomial(const Int &x, int k);

/// Canonical text: terms in grlex-descending order, e.g.
/// "3*w1^2*w2 - w2^3 + 5"; Z[tau] coefficients as "(2+tau)*w1^2".
template <Scalar R> std::string to_string(const SparsePoly<R> &p);

/// Inverse of to_string. `n` fixes the number of variables.
template <Scalar R> SparsePoly<R> parse_poly(std::string_view text, std::size_t n);

/// Linear images of the w_j under the simple reflection s_k, so that
/// p.substitute(reflection_images(rs, k)) is s_k acting on S*(Lambda).
template <Scalar R> std::vector<SparsePoly<R>> reflection_images(const RootSystem &rs, std::size_t k) {
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  std::vector<SparsePoly<R>> images;
  for (std::size_t j = 0; j < n; ++j)
    images.push_back(SparsePoly<R>::linear(reflect(rs, k, Weight<R>::fundamental(n, j)).coords));
  return images;
}

} // namespace weylexp
