#include "weylexp/polyring.hpp"

#include <cctype>

namespace weylexp {

namespace {

void fill_monomials(std::size_t n, std::size_t pos, int remaining, std::vector<int> &cur,
                    std::vector<Monomial> &out) {
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    fill_monomials(n, pos + 1, remaining - e, cur, out);
  }
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0 || d < 0)
    return out;
  std::vector<int> cur(n, 0);
  fill_monomials(n, 0, d, cur, out);
  return out;
}

MonomialBasis::MonomialBasis(std::size_t n, int degree)
    : n_(n), degree_(degree), monos_(monomials_of_degree(n, degree)) {
  for (std::size_t i = 0; i < monos_.size(); ++i)
    index_.emplace(monos_[i], i);
}

std::size_t MonomialBasis::index(const Monomial &m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw ConsistencyError("monomial of degree " + std::to_string(m.degree()) +
                           " outside degree-" + std::to_string(degree_) + " basis");
  return it->second;
}

Int binomial(const Int &x, int k) {
  // x (x-1) ... (x-k+1) / k!
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  Int q;
  if (!try_divexact(num, den, q))
    throw ConsistencyError("binomial coefficient not integral");
  return q;
}

TruncatedPoly<Int> geometric_power(std::size_t n, std::size_t j, const Int &a, int cap) {
  SparsePoly<Int> p(n);
  for (int k = 0; k <= cap; ++k)
    p.add_term(Monomial::variable(n, j, k), binomial(a + k - 1, k));
  return TruncatedPoly<Int>(std::move(p), cap);
}

template <Scalar R> std::string to_string(const SparsePoly<R> &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    const bool constant = m.degree() == 0;
    R mag = c;
    bool negative = false;
    // a leading minus is split off only when the coefficient is a single
    // signed part, so "(1-tau)" stays bracketed
    if (!needs_parens(c) && real_sign(c) < 0) {
      negative = true;
      mag = -c;
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string coeff = to_string(mag);
    const bool unit = coeff == "1";
    if (needs_parens(mag))
      coeff = "(" + coeff + ")";
    std::string vars;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0)
        continue;
      if (!vars.empty())
        vars += "*";
      vars += "w" + std::to_string(j + 1);
      if (m[j] > 1)
        vars += "^" + std::to_string(m[j]);
    }
    if (constant)
      out += coeff;
    else if (unit)
      out += vars;
    else
      out += coeff + "*" + vars;
  }
  return out;
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  return out;
}

} // namespace

template <Scalar R> SparsePoly<R> parse_poly(std::string_view text, std::size_t n) {
  const std::string s = strip(text);
  SparsePoly<R> p(n);
  if (s == "0")
    return p;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    // a term runs to the next top-level +/- (parentheses protect Z[tau])
    std::size_t start = i;
    int depth = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c == '(')
        ++depth;
      else if (c == ')')
        --depth;
      else if ((c == '+' || c == '-') && depth == 0 && i > start && s[i - 1] != '^')
        break;
      ++i;
    }
    std::string term = s.substr(start, i - start);
    if (term.empty())
      throw UsageError("malformed polynomial '" + std::string(text) + "'");

    R coeff(1);
    Monomial mono(n);
    std::size_t k = 0;
    while (k < term.size()) {
      std::size_t end = k;
      int d = 0;
      while (end < term.size() && !(term[end] == '*' && d == 0)) {
        if (term[end] == '(')
          ++d;
        else if (term[end] == ')')
          --d;
        ++end;
      }
      std::string factor = term.substr(k, end - k);
      k = end + 1;
      if (factor.size() > 1 && factor[0] == 'w' && std::isdigit(static_cast<unsigned char>(factor[1]))) {
        auto caret = factor.find('^');
        std::size_t var = std::stoul(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
        if (var == 0 || var > n)
          throw UsageError("variable w" + std::to_string(var) + " out of range");
        mono[var - 1] += power;
      } else {
        coeff = coeff * parse_scalar<R>(factor);
      }
    }
    p.add_term(mono, sign < 0 ? -coeff : coeff);
  }
  return p;
}

template std::string to_string(const SparsePoly<Int> &);
template std::string to_string(const SparsePoly<GoldenInt> &);
template SparsePoly<Int> parse_poly<Int>(std::string_view, std::size_t);
template SparsePoly<GoldenInt> parse_poly<GoldenInt>(std::string_view, std::size_t);

} // namespace weylexp
