#include "qwc/rational_function.hpp"

#include <stdexcept>
#include <vector>

namespace qwc {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("division by zero rational function");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rat(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_constant() || g.constant_value() != 1) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  Rat lc = den_.lead_coeff();
  if (lc != 1) {
    num_.scale(Rat(1) / lc);
    den_.scale(Rat(1) / lc);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial g = poly_gcd(a.den_, b.den_);
  Polynomial da = div_exact(a.den_, g);
  Polynomial db = div_exact(b.den_, g);
  return RationalFunction(a.num_ * db + b.num_ * da, da * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  // Cross-reduce before multiplying to keep intermediates small.
  Polynomial g1 = poly_gcd(a.num_, b.den_);
  Polynomial g2 = poly_gcd(b.num_, a.den_);
  Polynomial n1 = div_exact(a.num_, g1);
  Polynomial d2 = div_exact(b.den_, g1);
  Polynomial n2 = div_exact(b.num_, g2);
  Polynomial d1 = div_exact(a.den_, g2);
  return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

RationalFunction RationalFunction::subst(Var v, const RationalFunction& value) const {
  if (!num_.depends_on(v) && !den_.depends_on(v)) return *this;
  auto eval_poly = [&](const Polynomial& p) {
    auto coeffs = p.coeffs_in(v);
    if (coeffs.empty()) return RationalFunction();
    int maxdeg = coeffs.rbegin()->first;
    RationalFunction acc;
    for (int k = maxdeg; k >= 0; --k) {
      acc = acc * value;
      auto it = coeffs.find(k);
      if (it != coeffs.end()) acc += RationalFunction(it->second);
    }
    return acc;
  };
  RationalFunction dv = eval_poly(den_);
  if (dv.is_zero()) throw std::domain_error("substitution produced a zero denominator");
  return eval_poly(num_) / dv;
}

RationalFunction pochhammer(const RationalFunction& x, unsigned k) {
  RationalFunction result(Rat(1));
  for (unsigned i = 0; i < k; ++i) result *= x + RationalFunction(Rat(static_cast<long>(i)));
  return result;
}

namespace {

// Coefficient lists in v with rational-function entries, index = power of v.
std::vector<RationalFunction> rf_coeffs(const Polynomial& p, Var v) {
  std::vector<RationalFunction> out;
  for (const auto& [k, c] : p.coeffs_in(v)) {
    if (static_cast<std::size_t>(k) >= out.size()) out.resize(k + 1);
    out[k] = RationalFunction(c);
  }
  return out;
}

void rf_trim(std::vector<RationalFunction>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

RationalFunction residue_at_infinity(const RationalFunction& f, Var v) {
  if (f.is_zero()) return RationalFunction();
  std::vector<RationalFunction> n = rf_coeffs(f.num(), v);
  std::vector<RationalFunction> d = rf_coeffs(f.den(), v);
  rf_trim(n);
  rf_trim(d);
  if (d.empty()) throw std::domain_error("zero denominator");
  // Long division of n by d over the field of rational functions in the
  // remaining variables; the polynomial part has no v^{-1} coefficient.
  while (n.size() >= d.size()) {
    RationalFunction q = n.back() / d.back();
    std::size_t shift = n.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) n[shift + i] -= q * d[i];
    n.pop_back();
    rf_trim(n);
    if (n.empty()) return RationalFunction();
  }
  // Laurent expansion at infinity of a proper fraction r/d starts at
  // v^{deg r - deg d}; the v^{-1} coefficient is lead(r)/lead(d) when the
  // degree drop is exactly one and 0 otherwise.
  if (n.size() + 1 == d.size()) return n.back() / d.back();
  return RationalFunction();
}

bool residue_scaling_check(const RationalFunction& f, Var v, unsigned m, const Polynomial& a) {
  if (m == 0) throw std::invalid_argument("scaling factor must be positive");
  Polynomial mv = Polynomial::variable(v);
  mv.scale(Rat(static_cast<long>(m)));
  RationalFunction scaled = f.subst(v, RationalFunction(mv + a));
  RationalFunction lhs = residue_at_infinity(f, v);
  RationalFunction rhs = RationalFunction(Rat(static_cast<long>(m))) * residue_at_infinity(scaled, v);
  return lhs == rhs;
}

std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

RationalFunction parse_rational_function(const std::string& text) {
  auto split = text.find(")/(");
  if (split != std::string::npos && !text.empty() && text.front() == '(' && text.back() == ')') {
    std::string num = text.substr(1, split - 1);
    std::string den = text.substr(split + 3, text.size() - split - 4);
    return RationalFunction(parse_polynomial(num), parse_polynomial(den));
  }
  return RationalFunction(parse_polynomial(text));
}

}  // namespace qwc
