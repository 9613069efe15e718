#pragma once

// Exact coefficient rings: the integers (GMP) and the golden integers
// Z[tau], tau^2 = tau + 1.

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weylexp {

using Int = mpz_class;
using Rational = mpq_class;

/// Nonnegative gcd; gcd(0, 0) == 0.
Int gcd_int(const Int &a, const Int &b);

/// a + b*tau with tau = (1 + sqrt 5) / 2.
class GoldenInt {
public:
  GoldenInt() = default;
  GoldenInt(long a) : a_(a) {}
  GoldenInt(Int a) : a_(std::move(a)) {}
  GoldenInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenInt tau() { return {0, 1}; }
  /// tau^-1 = tau - 1
  static GoldenInt tau_inverse() { return {-1, 1}; }

  const Int &a() const { return a_; }
  const Int &b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Field norm a^2 + ab - b^2 (product with the Galois conjugate).
  Int norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  GoldenInt conjugate() const { return {a_ + b_, -b_}; }

  /// Sign of the image under the real embedding tau -> (1 + sqrt 5)/2.
  int sign() const;
  bool is_unit() const;

  GoldenInt &operator+=(const GoldenInt &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  GoldenInt &operator-=(const GoldenInt &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  GoldenInt &operator*=(const GoldenInt &o);

  friend GoldenInt operator+(GoldenInt x, const GoldenInt &y) { return x += y; }
  friend GoldenInt operator-(GoldenInt x, const GoldenInt &y) { return x -= y; }
  friend GoldenInt operator*(GoldenInt x, const GoldenInt &y) { return x *= y; }
  friend GoldenInt operator-(const GoldenInt &x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const GoldenInt &x, const GoldenInt &y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Order by value under the real embedding.
  friend std::strong_ordering operator<=>(const GoldenInt &x, const GoldenInt &y);

  /// True when `d` divides *this in Z[tau]; fills `quotient` when it does.
  bool divisible_by(const GoldenInt &d, GoldenInt *quotient = nullptr) const;

  /// Euclidean division: *this = q*d + r with |N(r)| < |N(d)|.
  void divmod(const GoldenInt &d, GoldenInt &q, GoldenInt &r) const;

  double approx() const;

private:
  Int a_{0};
  Int b_{0};
};

/// Canonical representative of the associate class of x != 0: the unique
/// +-tau^k * x that is positive and satisfies sqrt|N| <= y < tau*sqrt|N|.
GoldenInt canonical_associate(const GoldenInt &x);

bool are_associates(const GoldenInt &x, const GoldenInt &y);

/// Euclidean gcd, returned as a canonical associate. Throws UsageError when
/// both arguments are zero.
GoldenInt gcd_golden(const GoldenInt &x, const GoldenInt &y);

std::string to_string(const GoldenInt &x);
std::ostream &operator<<(std::ostream &os, const GoldenInt &x);

/// Accepts "3", "-tau", "2+tau", "-1+2*tau", "1 - 3*tau", "(2+tau)".
GoldenInt parse_golden(std::string_view text);

// ---------------------------------------------------------------------------
// Uniform interface so polynomial and orbit code is written once for both
// rings.

inline bool is_zero(const Int &x) { return sgn(x) == 0; }
inline bool is_zero(const GoldenInt &x) { return x.is_zero(); }

inline int real_sign(const Int &x) { return sgn(x); }
inline int real_sign(const GoldenInt &x) { return x.sign(); }

/// Exact division by a nonzero integer; false when not exact.
bool try_divexact(const Int &x, const Int &d, Int &out);
bool try_divexact(const GoldenInt &x, const Int &d, GoldenInt &out);

std::string to_string(const Int &x);
Int parse_int(std::string_view text);

inline int compare_scalar(const Int &x, const Int &y) { return cmp(x, y); }
inline int compare_scalar(const GoldenInt &x, const GoldenInt &y) {
  auto c = x <=> y;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

template <class R>
concept Scalar = requires(R x, R y, Int d, R out) {
  { x + y } -> std::convertible_to<R>;
  { x - y } -> std::convertible_to<R>;
  { x * y } -> std::convertible_to<R>;
  { -x } -> std::convertible_to<R>;
  { x == y } -> std::convertible_to<bool>;
  { is_zero(x) } -> std::same_as<bool>;
  { real_sign(x) } -> std::same_as<int>;
  { try_divexact(x, d, out) } -> std::same_as<bool>;
  { to_string(x) } -> std::convertible_to<std::string>;
  { compare_scalar(x, y) } -> std::same_as<int>;
};

static_assert(Scalar<Int>);
static_assert(Scalar<GoldenInt>);

template <class R> R parse_scalar(std::string_view text);
template <> inline Int parse_scalar<Int>(std::string_view text) { return parse_int(text); }
template <> inline GoldenInt parse_scalar<GoldenInt>(std::string_view text) {
  return parse_golden(text);
}

/// Coefficient text needs brackets inside a product when it is a sum.
inline bool needs_parens(const Int &) { return false; }
inline bool needs_parens(const GoldenInt &x) { return sgn(x.a()) != 0 && sgn(x.b()) != 0; }

} // namespace weylexp
