#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weylexp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller asked for something the library does not define (bad rank,
/// wrong family for an operation, malformed input text).
class UsageError : public Error {
public:
  using Error::Error;
};

/// An exact check that must hold for valid data failed. Always a bug or a
/// deliberately perturbed input, never a legitimate outcome.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

class OrbitCapExceeded : public Error {
public:
  OrbitCapExceeded(std::size_t cap)
      : Error("orbit size exceeds cap of " + std::to_string(cap) +
              " elements (raise --orbit-cap or use --allow-large)"),
        cap_(cap) {}

  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

/// Raised when no N > 0 satisfies N*M in L; carries a vector of M outside
/// the rational span of L.
class InfiniteExponent : public Error {
public:
  InfiniteExponent(std::vector<mpz_class> witness, const std::string &what)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<mpz_class> &witness() const { return witness_; }

private:
  std::vector<mpz_class> witness_;
};

} // namespace weylexp
