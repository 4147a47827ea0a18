#include <random>

#include "doctest.h"
#include "qwc/rational_function.hpp"

using namespace qwc;

namespace {

RationalFunction RF(const std::string& s) { return parse_rational_function(s); }

// f = sum c_i / (v - a_i) with distinct integer poles; the finite residues
// are the c_i, so the v^{-1} coefficient at infinity is their sum.
struct SimplePoles {
  RationalFunction f;
  Rat residue_sum;
};

SimplePoles random_simple_poles(std::mt19937& rng, Var v, int count) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<int> poles{-3, -1, 0, 2, 4, 7};
  std::shuffle(poles.begin(), poles.end(), rng);
  SimplePoles out;
  out.residue_sum = 0;
  for (int i = 0; i < count; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    Polynomial den = Polynomial::variable(v) - Polynomial(static_cast<long>(poles[i]));
    out.f += RationalFunction(Polynomial(static_cast<long>(c)), den);
    out.residue_sum += c;
  }
  return out;
}

}  // namespace

TEST_CASE("residue at infinity: stated examples") {
  Var v = var("v");
  CHECK(residue_at_infinity(RF("(1)/(v - a)"), v) == RF("1"));
  CHECK(residue_at_infinity(RF("v^3 + 2*v"), v) == RF("0"));
  CHECK(residue_at_infinity(RF("(v)/(v^2 + b*v + c)"), v) == RF("1"));
  CHECK(residue_at_infinity(RF("(1)/(v^2 - 2*a*v + a^2)"), v) == RF("0"));
}

TEST_CASE("residue linearity") {
  std::mt19937 rng(23);
  Var v = var("v");
  for (int trial = 0; trial < 20; ++trial) {
    SimplePoles f = random_simple_poles(rng, v, 2);
    SimplePoles g = random_simple_poles(rng, v, 3);
    RationalFunction alpha = RF("3/2"), beta = RF("-5");
    RationalFunction lhs = residue_at_infinity(alpha * f.f + beta * g.f, v);
    RationalFunction rhs = alpha * residue_at_infinity(f.f, v) + beta * residue_at_infinity(g.f, v);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degree drop of two or more vanishes") {
  Var v = var("v");
  CHECK(residue_at_infinity(RF("(a)/(v^2 + 1)"), v) == RF("0"));
  CHECK(residue_at_infinity(RF("(v + 3)/(v^3 - v + 1)"), v) == RF("0"));
}

TEST_CASE("total residue against factorable denominators") {
  std::mt19937 rng(29);
  Var v = var("v");
  for (int trial = 0; trial < 20; ++trial) {
    SimplePoles sp = random_simple_poles(rng, v, 3);
    CHECK(residue_at_infinity(sp.f, v) == RationalFunction(sp.residue_sum));
  }
}

TEST_CASE("residue scaling identity") {
  Var v = var("v");
  CHECK(residue_scaling_check(RF("(1)/(v - 1)"), v, 3, Polynomial()));
  CHECK(residue_scaling_check(RF("v"), v, 2, Polynomial()));
  std::mt19937 rng(31);
  Polynomial theta = Polynomial::variable(var("theta"));
  for (int trial = 0; trial < 15; ++trial) {
    SimplePoles sp = random_simple_poles(rng, v, 3);
    CHECK(residue_scaling_check(sp.f, v, 2, theta));
    CHECK(residue_scaling_check(sp.f, v, 5, theta));
  }
}

TEST_CASE("residue with parameters in the other variables") {
  Var h = var("hbar");
  // f = (a*hbar + b) / (hbar^2 - c*hbar + 1): coefficient of 1/hbar is a
  CHECK(residue_at_infinity(RF("(a*hbar + b)/(hbar^2 - c*hbar + 1)"), h) == RF("a"));
}
