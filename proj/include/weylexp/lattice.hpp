#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integer
// kernels, lattices given by generators, and the exponent of one lattice
// relative to another. Also the invariant sublattices S^i(Lambda)^W.

#include <optional>
#include <vector>

#include "weylexp/error.hpp"
#include "weylexp/polyring.hpp"
#include "weylexp/rootsys.hpp"
#include "weylexp/scalar.hpp"

namespace weylexp {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>> &rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  std::vector<std::vector<Int>> to_rows() const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int &k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int &k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row-style Hermite form: U * m = H with U unimodular. The first `rank`
/// rows of H are nonzero with positive pivots in strictly increasing
/// columns; entries above a pivot lie in [0, pivot); the rest are zero.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

HermiteForm hnf(const IntMatrix &m, bool with_transform = true);

/// U * m * V = D, D diagonal with d1 | d2 | ... and d_k >= 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Int> divisors; // nonzero diagonal entries, in order
};

SmithForm snf(const IntMatrix &m, bool with_transform = true);

/// Nonzero elementary divisors, ascending.
std::vector<Int> elementary_divisors(const IntMatrix &m);

/// Rows form a Z-basis (in Hermite form) of { x : A x = 0 }.
IntMatrix integer_kernel(const IntMatrix &a);

/// Determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix &m);

class IntLattice {
public:
  explicit IntLattice(std::size_t dim = 0) : dim_(dim) {}
  IntLattice(std::size_t dim, const std::vector<std::vector<Int>> &generators);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  /// Hermite basis; canonical for the lattice.
  const std::vector<std::vector<Int>> &basis() const { return basis_; }

  /// Coordinates of v in basis(), if v lies in the lattice.
  std::optional<std::vector<Int>> coordinates(const std::vector<Int> &v) const;
  bool contains(const std::vector<Int> &v) const { return coordinates(v).has_value(); }
  bool contains(const IntLattice &other) const;
  bool rational_span_contains(const std::vector<Int> &v) const;

  IntLattice operator+(const IntLattice &o) const;
  friend bool operator==(const IntLattice &a, const IntLattice &b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

private:
  std::size_t dim_;
  std::vector<std::vector<Int>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Least N > 0 with N*M contained in L: the exponent of (M + L)/L.
/// Throws InfiniteExponent, naming a vector of M outside span_Q(L), when
/// no such N exists.
Int quotient_exponent(const IntLattice &m, const IntLattice &l);

/// Matrix of s_k acting on the degree-d monomial basis (column c is the
/// image of basis monomial c).
IntMatrix reflection_matrix(const RootSystem &rs, std::size_t k, const MonomialBasis &basis);

/// S^d(Lambda)^W in the degree-d monomial basis: the integer kernel of
/// the stacked (s_k - 1). Crystallographic kinds only.
IntLattice invariant_lattice(const RootSystem &rs, int degree);

/// Generator q of S^2(Lambda)^W, positive definite, checked to take the
/// value 1 on every short coroot.
SparsePoly<Int> normalized_q(const RootSystem &rs);

std::vector<Int> to_int_vector(const SparsePoly<Int> &p, const MonomialBasis &basis);

} // namespace weylexp
