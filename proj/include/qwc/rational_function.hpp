#ifndef QWC_RATIONAL_FUNCTION_HPP
#define QWC_RATIONAL_FUNCTION_HPP

#include <string>

#include "qwc/polynomial.hpp"

namespace qwc {

// Exact multivariate rational function, always held in canonical form:
// gcd(num, den) = 1 and the denominator leading coefficient (lex order)
// is 1.  Equality of canonical forms is structural equality.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rat(1)) {}
  RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}
  RationalFunction(long c) : num_(c), den_(Rat(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rat(1)) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction variable(Var v) { return RationalFunction(Polynomial::variable(v)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction subst(Var v, const RationalFunction& value) const;

private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

// Rising factorial x(x+1)...(x+k-1); the empty product for k = 0.
RationalFunction pochhammer(const RationalFunction& x, unsigned k);

// Coefficient of v^{-1} in the Laurent expansion of f at v = infinity.
RationalFunction residue_at_infinity(const RationalFunction& f, Var v);

// Checks Res_{v=inf} f(v) == m * Res_{v=inf} f(m*v + a).
bool residue_scaling_check(const RationalFunction& f, Var v, unsigned m, const Polynomial& a);

std::string to_string(const RationalFunction& f);
RationalFunction parse_rational_function(const std::string& text);

}  // namespace qwc

#endif
