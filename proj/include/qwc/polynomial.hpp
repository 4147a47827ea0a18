#ifndef QWC_POLYNOMIAL_HPP
#define QWC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qwc/variable.hpp"

namespace qwc {

using Rat = mpq_class;
using Int = mpz_class;

// Exponent vector indexed by variable ordinal, trailing zeros trimmed.
using Mono = std::vector<std::uint32_t>;

std::uint32_t mono_exp(const Mono& m, Var v);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b componentwise
Mono mono_div(const Mono& b, const Mono& a);      // b / a, requires divisibility

// Lexicographic order on exponent vectors, variable 0 most significant.
// Used descending so that map iteration starts at the leading term.
struct MonoLexDesc {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients are stored.
class Polynomial {
public:
  using TermMap = std::map<Mono, Rat, MonoLexDesc>;

  Polynomial() = default;
  explicit Polynomial(const Rat& c);
  explicit Polynomial(long c);
  static Polynomial variable(Var v);
  static Polynomial term(const Rat& c, const Mono& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Leading data under the global lex order.
  const Mono& lead_mono() const;
  const Rat& lead_coeff() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void scale(const Rat& c);  // multiply all coefficients, c may be 0
  Polynomial pow(unsigned k) const;

  int degree_in(Var v) const;  // -1 for the zero polynomial
  bool depends_on(Var v) const;
  std::vector<Var> active_vars() const;

  // Coefficients of v^k as polynomials in the remaining variables.
  std::map<int, Polynomial> coeffs_in(Var v) const;
  Polynomial coeff_of(Var v, int k) const;

  // Substitute a polynomial for a variable (Horner in v).
  Polynomial subst(Var v, const Polynomial& value) const;

  void add_term(const Rat& c, const Mono& m);

private:
  TermMap terms_;
};

// Exact division; throws std::domain_error when b does not divide a.
Polynomial div_exact(const Polynomial& a, const Polynomial& b);

// gcd over Q[x...]; result is primitive with positive leading integer
// coefficient, gcd(0, b) = normalized b, gcd of nonzero constants = 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Canonical text form: terms in descending lex order, `p/q` coefficients,
// `x^k` powers, `*` products.  parse(print(p)) == p.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(const std::string& text);

}  // namespace qwc

#endif
