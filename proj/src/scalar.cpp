#include "weylexp/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "weylexp/error.hpp"

namespace weylexp {

Int gcd_int(const Int &a, const Int &b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

GoldenInt &GoldenInt::operator*=(const GoldenInt &o) {
  // (a + b t)(c + d t) = (ac + bd) + (ad + bc + bd) t
  Int bd = b_ * o.b_;
  Int na = a_ * o.a_ + bd;
  Int nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

int GoldenInt::sign() const {
  // 2*(a + b tau) = x + b sqrt5 with x = 2a + b
  Int x = 2 * a_ + b_;
  int sx = sgn(x), sy = sgn(b_);
  if (sx >= 0 && sy >= 0)
    return (sx > 0 || sy > 0) ? 1 : 0;
  if (sx <= 0 && sy <= 0)
    return -1;
  int c = cmp(Int(x * x), Int(5 * b_ * b_));
  // the two parts have opposite signs; the larger magnitude wins
  return sx > 0 ? (c > 0 ? 1 : -1) : (c < 0 ? 1 : -1);
}

bool GoldenInt::is_unit() const {
  Int n = norm();
  return n == 1 || n == -1;
}

std::strong_ordering operator<=>(const GoldenInt &x, const GoldenInt &y) {
  int s = (x - y).sign();
  if (s < 0)
    return std::strong_ordering::less;
  if (s > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

// nearest integer to p/n, n != 0, ties rounded up
Int round_div(const Int &p, const Int &n) {
  Int num = 2 * p + n, den = 2 * n;
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

} // namespace

void GoldenInt::divmod(const GoldenInt &d, GoldenInt &q, GoldenInt &r) const {
  if (d.is_zero())
    throw UsageError("division by zero in Z[tau]");
  Int n = d.norm();
  GoldenInt num = *this * d.conjugate();
  q = GoldenInt(round_div(num.a(), n), round_div(num.b(), n));
  r = *this - q * d;
  if (abs(r.norm()) >= abs(n))
    throw ConsistencyError("Euclidean step in Z[tau] failed to reduce the norm");
}

bool GoldenInt::divisible_by(const GoldenInt &d, GoldenInt *quotient) const {
  if (d.is_zero())
    return is_zero();
  Int n = d.norm();
  GoldenInt num = *this * d.conjugate();
  if (!mpz_divisible_p(num.a_.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b_.get_mpz_t(), n.get_mpz_t()))
    return false;
  if (quotient) {
    Int qa = num.a_ / n, qb = num.b_ / n;
    *quotient = GoldenInt(qa, qb);
  }
  return true;
}

double GoldenInt::approx() const {
  return a_.get_d() + b_.get_d() * (1.0 + std::sqrt(5.0)) / 2.0;
}

GoldenInt canonical_associate(const GoldenInt &x) {
  if (x.is_zero())
    throw UsageError("canonical associate of zero");
  GoldenInt y = x.sign() < 0 ? -x : x;
  const Int n = abs(x.norm());
  const GoldenInt low(n);                                  // y^2 >= |N|
  const GoldenInt high = GoldenInt(n) * GoldenInt(1, 1);   // y^2 < tau^2 |N|
  while (y * y < low)
    y *= GoldenInt::tau();
  while (!(y * y < high))
    y *= GoldenInt::tau_inverse();
  return y;
}

bool are_associates(const GoldenInt &x, const GoldenInt &y) {
  if (x.is_zero() || y.is_zero())
    return x.is_zero() && y.is_zero();
  return canonical_associate(x) == canonical_associate(y);
}

GoldenInt gcd_golden(const GoldenInt &x, const GoldenInt &y) {
  if (x.is_zero() && y.is_zero())
    throw UsageError("gcd of zero ring elements");
  GoldenInt a = x, b = y, q, r;
  while (!b.is_zero()) {
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return canonical_associate(a);
}

std::string to_string(const Int &x) { return x.get_str(); }

std::string to_string(const GoldenInt &x) {
  const Int &a = x.a(), &b = x.b();
  if (sgn(b) == 0)
    return a.get_str();
  std::string tau_part;
  Int mag = abs(b);
  tau_part = mag == 1 ? "tau" : mag.get_str() + "*tau";
  if (sgn(a) == 0)
    return (sgn(b) < 0 ? "-" : "") + tau_part;
  return a.get_str() + (sgn(b) < 0 ? "-" : "+") + tau_part;
}

std::ostream &operator<<(std::ostream &os, const GoldenInt &x) { return os << to_string(x); }

bool try_divexact(const Int &x, const Int &d, Int &out) {
  if (sgn(d) == 0 || !mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
    return false;
  mpz_divexact(out.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return true;
}

bool try_divexact(const GoldenInt &x, const Int &d, GoldenInt &out) {
  Int a, b;
  if (!try_divexact(x.a(), d, a) || !try_divexact(x.b(), d, b))
    return false;
  out = GoldenInt(std::move(a), std::move(b));
  return true;
}

Int parse_int(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (!s.empty() && s.front() == '+')
    s.erase(s.begin());
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw UsageError("not an integer: '" + std::string(text) + "'");
  return v;
}

GoldenInt parse_golden(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  if (s.empty())
    throw UsageError("empty Z[tau] literal");

  GoldenInt out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-')
        sign = -sign;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-')
      ++i;
    std::string term = s.substr(start, i - start);
    if (term.empty())
      throw UsageError("malformed Z[tau] literal: '" + std::string(text) + "'");
    bool has_tau = false;
    if (term.size() >= 3 && term.compare(term.size() - 3, 3, "tau") == 0) {
      has_tau = true;
      term.erase(term.size() - 3);
      if (!term.empty() && term.back() == '*')
        term.pop_back();
      if (term.empty())
        term = "1";
    }
    Int v = parse_int(term);
    if (sign < 0)
      v = -v;
    out += has_tau ? GoldenInt(0, v) : GoldenInt(v);
  }
  return out;
}

} // namespace weylexp
