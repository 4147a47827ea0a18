#include "qwc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qwc {

VarTable& VarTable::global() {
  static VarTable table;
  return table;
}

Var var(const std::string& name) { return VarTable::global().intern(name); }

static void mono_trim(Mono& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

std::uint32_t mono_exp(const Mono& m, Var v) {
  return v.id() < m.size() ? m[v.id()] : 0;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
  return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > (i < b.size() ? b[i] : 0)) return false;
  return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
  if (!mono_divides(a, b)) throw std::domain_error("monomial division failure");
  Mono r(b);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
  mono_trim(r);
  return r;
}

bool MonoLexDesc::operator()(const Mono& a, const Mono& b) const {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ea = i < a.size() ? a[i] : 0;
    std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial::Polynomial(const Rat& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Mono{}, Rat(c));
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  Mono m(v.id() + 1, 0);
  m[v.id()] = 1;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

Polynomial Polynomial::term(const Rat& c, const Mono& m) {
  Polynomial p;
  p.add_term(c, m);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Polynomial::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

const Mono& Polynomial::lead_mono() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rat& Polynomial::lead_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Rat& c, const Mono& m) {
  if (c == 0) return;
  Mono key(m);
  mono_trim(key);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      r.add_term(ca * cb, mono_mul(ma, mb));
    }
  }
  return r;
}

void Polynomial::scale(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(Rat(1));
  Polynomial base(*this);
  while (k > 0) {
    if (k & 1u) result *= base;
    base = k > 1 ? base * base : base;
    k >>= 1;
  }
  return result;
}

int Polynomial::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(mono_exp(m, v)));
  return d;
}

bool Polynomial::depends_on(Var v) const {
  for (const auto& [m, c] : terms_)
    if (mono_exp(m, v) > 0) return true;
  return false;
}

std::vector<Var> Polynomial::active_vars() const {
  std::vector<bool> seen;
  for (const auto& [m, c] : terms_) {
    if (m.size() > seen.size()) seen.resize(m.size(), false);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) seen[i] = true;
  }
  std::vector<Var> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(Var(static_cast<std::uint32_t>(i)));
  return out;
}

std::map<int, Polynomial> Polynomial::coeffs_in(Var v) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    int k = static_cast<int>(mono_exp(m, v));
    Mono rest(m);
    if (v.id() < rest.size()) rest[v.id()] = 0;
    mono_trim(rest);
    out[k].add_term(c, rest);
  }
  return out;
}

Polynomial Polynomial::coeff_of(Var v, int k) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (static_cast<int>(mono_exp(m, v)) != k) continue;
    Mono rest(m);
    if (v.id() < rest.size()) rest[v.id()] = 0;
    mono_trim(rest);
    out.add_term(c, rest);
  }
  return out;
}

Polynomial Polynomial::subst(Var v, const Polynomial& value) const {
  if (!depends_on(v)) return *this;
  auto coeffs = coeffs_in(v);
  int maxdeg = coeffs.rbegin()->first;
  Polynomial acc;
  for (int k = maxdeg; k >= 0; --k) {
    acc = acc * value;
    auto it = coeffs.find(k);
    if (it != coeffs.end()) acc += it->second;
  }
  return acc;
}

Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) {
    Polynomial r(a);
    r.scale(Rat(1) / b.constant_value());
    return r;
  }
  Polynomial rem(a);
  Polynomial quot;
  while (!rem.is_zero()) {
    const Mono& lm = rem.lead_mono();
    if (!mono_divides(b.lead_mono(), lm))
      throw std::domain_error("inexact polynomial division");
    Rat c = rem.lead_coeff() / b.lead_coeff();
    Mono m = mono_div(lm, b.lead_mono());
    Polynomial t = Polynomial::term(c, m);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

namespace {

// Rational content: gcd of numerators over lcm of denominators, signed so
// that dividing by it leaves a primitive polynomial with positive leading
// integer coefficient.
Rat rational_content(const Polynomial& p) {
  Int num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (p.lead_coeff() < 0) content = -content;
  return content;
}

Polynomial make_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Polynomial r(p);
  r.scale(Rat(1) / rational_content(p));
  return r;
}

// Pseudo-remainder of a by b in the variable v.
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, Var v) {
  int db = b.degree_in(v);
  Polynomial lb = b.coeff_of(v, db);
  Polynomial rem(a);
  Polynomial vpoly = Polynomial::variable(v);
  int guard = 0;
  while (true) {
    int dr = rem.degree_in(v);
    if (rem.is_zero() || dr < db) return rem;
    Polynomial lr = rem.coeff_of(v, dr);
    rem = rem * lb - b * lr * vpoly.pow(static_cast<unsigned>(dr - db));
    if (++guard > 10000) throw std::runtime_error("pseudo-division diverged");
  }
}

// Content of p regarded as a polynomial in v over the other variables.
Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& [k, c] : p.coeffs_in(v)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return g;
  }
  return g;
}

Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b, Var v) {
  Polynomial f(a), g(b);
  while (!g.is_zero()) {
    Polynomial r = pseudo_rem(f, g, v);
    f = g;
    g = make_primitive(r);
  }
  return make_primitive(f);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(Rat(1));

  auto va = a.active_vars();
  auto vb = b.active_vars();
  std::vector<Var> all(va);
  for (Var v : vb)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  std::sort(all.begin(), all.end());
  Var v = all.front();

  if (all.size() == 1) return gcd_univariate(a, b, v);

  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial pa = div_exact(a, ca);
  Polynomial pb = div_exact(b, cb);
  Polynomial cg = poly_gcd(ca, cb);

  // Primitive PRS on the primitive parts.
  Polynomial f(pa), g(pb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (!g.is_zero()) {
    Polynomial r = pseudo_rem(f, g, v);
    f = g;
    if (r.is_zero()) {
      g = Polynomial();
    } else {
      g = div_exact(r, content_in(r, v));
      g = make_primitive(g);
    }
  }
  if (f.degree_in(v) <= 0 && f.is_constant()) return make_primitive(cg);
  Polynomial pp = div_exact(f, content_in(f, v));
  return make_primitive(cg * pp);
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const VarTable& table = VarTable::global();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat coeff(c);
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      if (coeff < 0) {
        out << " - ";
        coeff = -coeff;
      } else {
        out << " + ";
      }
    }
    bool has_vars = !m.empty();
    bool coeff_shown = !has_vars || coeff != 1;
    if (coeff_shown) out << coeff.get_str();
    bool need_star = coeff_shown;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << table.name(Var(static_cast<std::uint32_t>(i)));
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw std::invalid_argument("parse error: expected '" + std::string(1, c) + "' in '" + text + "'");
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  std::string parse_integer_digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("parse error: expected digits in '" + text + "'");
    return text.substr(start, pos - start);
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\'')) {
      ++pos;
    }
    if (start == pos) throw std::invalid_argument("parse error: expected name in '" + text + "'");
    return text.substr(start, pos - start);
  }

  Polynomial parse_term() {
    skip_ws();
    Rat coeff(1);
    Mono mono;
    bool saw_factor = false;
    bool expecting_factor = true;
    while (expecting_factor) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = parse_integer_digits();
        Rat value(num);
        if (accept('/')) {
          std::string den = parse_integer_digits();
          value = Rat(num + "/" + den);
        }
        value.canonicalize();
        coeff *= value;
        saw_factor = true;
      } else if (pos < text.size() &&
                 (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        std::string name = parse_name();
        Var v = var(name);
        unsigned exp = 1;
        if (accept('^')) exp = static_cast<unsigned>(std::stoul(parse_integer_digits()));
        if (v.id() >= mono.size()) mono.resize(v.id() + 1, 0);
        mono[v.id()] += exp;
        saw_factor = true;
      } else {
        throw std::invalid_argument("parse error: expected factor in '" + text + "'");
      }
      expecting_factor = accept('*');
    }
    if (!saw_factor) throw std::invalid_argument("parse error: empty term in '" + text + "'");
    return Polynomial::term(coeff, mono);
  }

  Polynomial parse_poly() {
    Polynomial result;
    skip_ws();
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    while (true) {
      Polynomial t = parse_term();
      t.scale(Rat(sign));
      result += t;
      skip_ws();
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
    }
    return result;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  std::string trimmed = text;
  auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), not_space));
  trimmed.erase(std::find_if(trimmed.rbegin(), trimmed.rend(), not_space).base(), trimmed.end());
  if (trimmed == "0") return Polynomial();
  Parser p(trimmed);
  Polynomial result = p.parse_poly();
  if (!p.at_end()) throw std::invalid_argument("parse error: trailing input in '" + text + "'");
  return result;
}

}  // namespace qwc
