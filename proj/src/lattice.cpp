#include "weylexp/lattice.hpp"

#include <algorithm>

namespace weylexp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>> &rows, std::size_t cols) {
  if (!rows.empty())
    cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < rows_; ++i)
    out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int &x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int &k) {
  if (sgn(k) == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn((*this)(src, j)) != 0)
      (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int &k) {
  if (sgn(k) == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (sgn((*this)(i, src)) != 0)
      (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_)
    throw UsageError("matrix dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int &x = a(i, k);
      if (sgn(x) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += x * b(k, j);
    }
  return c;
}

namespace {

Int floor_div(const Int &a, const Int &b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int trunc_div(const Int &a, const Int &b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

HermiteForm hnf(const IntMatrix &m, bool with_transform) {
  HermiteForm out;
  IntMatrix a = m;
  IntMatrix u = with_transform ? IntMatrix::identity(m.rows()) : IntMatrix();
  auto row_add = [&](std::size_t dst, std::size_t src, const Int &k) {
    a.add_row_multiple(dst, src, k);
    if (with_transform)
      u.add_row_multiple(dst, src, k);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (with_transform)
      u.swap_rows(x, y);
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    // gcd elimination in this column, pivoting on the smallest magnitude
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (sgn(a(i, col)) != 0 &&
            (best == a.rows() || mpz_cmpabs(a(i, col).get_mpz_t(), a(best, col).get_mpz_t()) < 0))
          best = i;
      if (best == a.rows())
        break;
      row_swap(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (sgn(a(i, col)) == 0)
          continue;
        row_add(i, r, -trunc_div(a(i, col), a(r, col)));
        if (sgn(a(i, col)) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (sgn(a(r, col)) == 0)
      continue;
    if (sgn(a(r, col)) < 0) {
      a.negate_row(r);
      if (with_transform)
        u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i)
      if (sgn(a(i, col)) != 0)
        row_add(i, r, -floor_div(a(i, col), a(r, col)));
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  out.H = std::move(a);
  out.U = std::move(u);
  return out;
}

SmithForm snf(const IntMatrix &m, bool with_transform) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix u = with_transform ? IntMatrix::identity(rows) : IntMatrix();
  IntMatrix v = with_transform ? IntMatrix::identity(cols) : IntMatrix();
  auto row_add = [&](std::size_t d, std::size_t s, const Int &k) {
    a.add_row_multiple(d, s, k);
    if (with_transform)
      u.add_row_multiple(d, s, k);
  };
  auto col_add = [&](std::size_t d, std::size_t s, const Int &k) {
    a.add_col_multiple(d, s, k);
    if (with_transform)
      v.add_col_multiple(d, s, k);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (with_transform)
      u.swap_rows(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (with_transform)
      v.swap_cols(x, y);
  };

  SmithForm out;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a(i, j)) != 0 && (bi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
      if (bi == rows)
        goto done;
      row_swap(t, bi);
      col_swap(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (sgn(a(i, t)) != 0) {
          row_add(i, t, -trunc_div(a(i, t), a(t, t)));
          if (sgn(a(i, t)) != 0)
            clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (sgn(a(t, j)) != 0) {
          col_add(j, t, -trunc_div(a(t, j), a(t, t)));
          if (sgn(a(t, j)) != 0)
            clean = false;
        }
      if (!clean)
        continue;
      // divisibility of the remaining block by the pivot
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      row_add(t, bad, Int(1));
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      if (with_transform)
        u.negate_row(t);
    }
    out.divisors.push_back(a(t, t));
  }
done:
  out.D = std::move(a);
  out.U = std::move(u);
  out.V = std::move(v);
  return out;
}

std::vector<Int> elementary_divisors(const IntMatrix &m) {
  // reduce to a square Hermite block first; it has the same divisors
  auto h = hnf(m, false);
  IntMatrix top(h.rank, m.cols());
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      top(i, j) = h.H(i, j);
  return snf(top, false).divisors;
}

IntMatrix integer_kernel(const IntMatrix &a) {
  // U * A^T = H; rows of U facing zero rows of H span ker A over Z
  auto h = hnf(a.transpose(), true);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = h.rank; i < h.H.rows(); ++i)
    rows.push_back(h.U.row(i));
  if (rows.empty())
    return IntMatrix(0, a.cols());
  auto canon = hnf(IntMatrix::from_rows(rows), false);
  IntMatrix out(canon.rank, a.cols());
  for (std::size_t i = 0; i < canon.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = canon.H(i, j);
  return out;
}

Int determinant(const IntMatrix &m) {
  if (m.rows() != m.cols())
    throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Bareiss
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------

IntLattice::IntLattice(std::size_t dim, const std::vector<std::vector<Int>> &generators)
    : dim_(dim) {
  if (generators.empty())
    return;
  auto h = hnf(IntMatrix::from_rows(generators, dim), false);
  if (h.H.cols() != dim)
    throw UsageError("generator dimension mismatch");
  for (std::size_t i = 0; i < h.rank; ++i)
    basis_.push_back(h.H.row(i));
  pivots_ = h.pivots;
}

std::optional<std::vector<Int>> IntLattice::coordinates(const std::vector<Int> &v) const {
  if (v.size() != dim_)
    throw UsageError("vector dimension mismatch");
  std::vector<Int> rest = v;
  std::vector<Int> coords(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t p = pivots_[r];
    // every entry left of p is already zero (echelon form)
    if (sgn(rest[p]) == 0)
      continue;
    Int q;
    if (!try_divexact(rest[p], basis_[r][p], q))
      return std::nullopt;
    for (std::size_t j = p; j < dim_; ++j)
      rest[j] -= q * basis_[r][j];
    coords[r] = q;
  }
  for (const auto &x : rest)
    if (sgn(x) != 0)
      return std::nullopt;
  return coords;
}

bool IntLattice::contains(const IntLattice &other) const {
  for (const auto &b : other.basis_)
    if (!contains(b))
      return false;
  return true;
}

bool IntLattice::rational_span_contains(const std::vector<Int> &v) const {
  auto gens = basis_;
  gens.push_back(v);
  return IntLattice(dim_, gens).rank() == rank();
}

IntLattice IntLattice::operator+(const IntLattice &o) const {
  if (o.dim_ != dim_)
    throw UsageError("lattice dimension mismatch");
  auto gens = basis_;
  gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
  return IntLattice(dim_, gens);
}

Int quotient_exponent(const IntLattice &m, const IntLattice &l) {
  if (m.dim() != l.dim())
    throw UsageError("lattice dimension mismatch");
  const IntLattice s = m + l;
  if (l.rank() < s.rank()) {
    for (const auto &v : m.basis())
      if (!l.rational_span_contains(v))
        throw InfiniteExponent(v, "infinite exponent: a vector of M lies outside span_Q(L)");
    throw ConsistencyError("rank defect without a witness");
  }
  if (s.rank() == 0)
    return 1;
  // L expressed in a basis of M + L; the quotient is Z^k / rows
  IntMatrix x(l.rank(), s.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    auto c = s.coordinates(l.basis()[i]);
    if (!c)
      throw ConsistencyError("L not contained in M + L");
    for (std::size_t j = 0; j < s.rank(); ++j)
      x(i, j) = (*c)[j];
  }
  auto d = elementary_divisors(x);
  if (d.size() != s.rank())
    throw ConsistencyError("quotient unexpectedly infinite");
  return abs(d.back());
}

// ---------------------------------------------------------------------------

std::vector<Int> to_int_vector(const SparsePoly<Int> &p, const MonomialBasis &basis) {
  return p.to_vector(basis);
}

IntMatrix reflection_matrix(const RootSystem &rs, std::size_t k, const MonomialBasis &basis) {
  const auto images = reflection_images<Int>(rs, k);
  IntMatrix a(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    SparsePoly<Int> mono(basis.variables());
    mono.add_term(basis[c], Int(1));
    const SparsePoly<Int> image = mono.substitute(images);
    for (const auto &[m, coeff] : image.terms())
      a(basis.index(m), c) = coeff;
  }
  return a;
}

IntLattice invariant_lattice(const RootSystem &rs, int degree) {
  if (!rs.crystallographic())
    throw UsageError("invariant lattice over Z needs a crystallographic root system");
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  const MonomialBasis basis(n, degree);
  const std::size_t dim = basis.size();
  IntMatrix stacked(n * dim, dim);
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix a = reflection_matrix(rs, k, basis);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j)
        stacked(k * dim + i, j) = a(i, j);
      stacked(k * dim + i, i) -= 1;
    }
  }
  IntMatrix ker = integer_kernel(stacked);
  return IntLattice(dim, ker.to_rows());
}

SparsePoly<Int> normalized_q(const RootSystem &rs) {
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  const MonomialBasis basis(n, 2);
  IntLattice inv = invariant_lattice(rs, 2);
  if (inv.rank() != 1)
    throw ConsistencyError("S^2(Lambda)^W has rank " + std::to_string(inv.rank()) + ", expected 1");
  auto q = SparsePoly<Int>::from_vector(basis, inv.basis().front());
  if (real_sign(q.evaluate(rs.theta_covector())) < 0)
    q = -q;
  for (const auto &c : rs.short_coroots())
    if (q.evaluate(c) != 1)
      throw ConsistencyError("invariant quadratic form takes value " + q.evaluate(c).get_str() +
                             " on a short coroot of " + rs.kind().name());
  return q;
}

} // namespace weylexp
