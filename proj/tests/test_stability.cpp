#include <random>

#include "doctest.h"
#include "qwc/stability.hpp"

using namespace qwc;

namespace {

EnhancedDim full_flag(const DimVector& alpha, int zero) {
  std::vector<int> kI;
  for (int k = 1; k <= alpha[zero]; ++k) kI.push_back(k);
  return EnhancedDim(alpha, zero, kI, static_cast<int>(alpha[zero]));
}

}  // namespace

TEST_CASE("slope") {
  SlopeParams p;
  p.zeta = {Rat(-1)};
  p.eta = {Rat(2)};
  DimVector alpha{1};

  // the worked one-vertex case: S_inf = 0, S_0 = 1, flag dim 1
  EnhancedSubDim sub{0, {1}, {1}};
  CHECK(slope(p, alpha, sub) == Rat(1));

  // full V~: zeta(V) = 0 leaves only the eta part
  EnhancedSubDim full{1, {1}, {1}};
  CHECK(slope(p, alpha, full) == Rat(2) / Rat(2));

  SlopeParams zero_p;
  zero_p.zeta = {Rat(0)};
  zero_p.eta = {Rat(2)};
  EnhancedSubDim noflag{0, {1}, {0}};
  CHECK(slope(zero_p, alpha, noflag) == Rat(0));

  EnhancedSubDim empty{0, {0}, {0}};
  CHECK_THROWS_AS(slope(p, alpha, empty), std::domain_error);
}

TEST_CASE("theta vector matches the determinant expansion") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);

  DimVector alpha{2, 1};
  int zero = 0;
  EnhancedDim ed = full_flag(alpha, zero);
  long dimV = ed.dim_V();

  for (int trial = 0; trial < 30; ++trial) {
    SlopeParams p;
    p.zeta = {Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
    for (int k = 0; k < ed.L(); ++k) p.eta.push_back(Rat(1 + std::abs(num(rng)), den(rng)));
    ThetaVector th = theta_vector(p, ed);

    for (int k = 1; k <= ed.L(); ++k)
      CHECK(th.flag_part[k - 1] == p.eta[k - 1] * Rat(dimV));

    Rat E(0);
    for (int k = 1; k <= ed.L(); ++k) E += p.eta[k - 1] * Rat(ed.flag_dims[k - 1]);

    // determinant of the slope comparison vs the linear form, over all
    // enhanced sub-dimension vectors
    for (long sinf = 0; sinf <= 1; ++sinf)
      for (long s0 = 0; s0 <= alpha[0]; ++s0)
        for (long s1 = 0; s1 <= alpha[1]; ++s1)
          for (long f1 = 0; f1 <= 1; ++f1)
            for (long f2 = 0; f2 <= 2; ++f2) {
              Rat zeta_inf = zeta_infinity(p.zeta, alpha);
              Rat zS = p.zeta[0] * Rat(s0) + p.zeta[1] * Rat(s1) + zeta_inf * Rat(sinf);
              Rat etaS = p.eta[0] * Rat(f1) + p.eta[1] * Rat(f2);
              long dimS = sinf + s0 + s1;
              Rat det = Rat(dimV) * (zS + etaS) - E * Rat(dimS);
              Rat linear = th.internal_part[0] * Rat(s0) + th.internal_part[1] * Rat(s1) +
                           th.infinity_part * Rat(sinf) + th.flag_part[0] * Rat(f1) +
                           th.flag_part[1] * Rat(f2);
              CHECK(det == linear);
            }
  }
}

TEST_CASE("theta vector scaling and zeta = 0 limit") {
  DimVector alpha{2};
  EnhancedDim ed = full_flag(alpha, 0);
  SlopeParams p;
  p.zeta = {Rat(3, 7)};
  p.eta = {Rat(1, 2), Rat(1, 3)};
  ThetaVector base = theta_vector(p, ed);

  Rat t(5, 2);
  SlopeParams scaled;
  for (const Rat& z : p.zeta) scaled.zeta.push_back(z * t);
  for (const Rat& e : p.eta) scaled.eta.push_back(e * t);
  ThetaVector th = theta_vector(scaled, ed);
  for (std::size_t i = 0; i < base.internal_part.size(); ++i)
    CHECK(th.internal_part[i] == base.internal_part[i] * t);
  CHECK(th.infinity_part == base.infinity_part * t);
  for (std::size_t k = 0; k < base.flag_part.size(); ++k)
    CHECK(th.flag_part[k] == base.flag_part[k] * t);

  SlopeParams zp;
  zp.zeta = {Rat(0)};
  zp.eta = p.eta;
  ThetaVector zt = theta_vector(zp, ed);
  Rat E = zp.eta[0] * Rat(ed.flag_dims[0]) + zp.eta[1] * Rat(ed.flag_dims[1]);
  CHECK(zt.internal_part[0] == -E);
  CHECK(zt.infinity_part == -E);
}

TEST_CASE("cond_a") {
  DimVector alpha{1, 1};
  Wall wall{1, 1};
  EnhancedDim flag = full_flag(alpha, 0);
  StabilityVector zetabar{Rat(1), Rat(-1)};

  SUBCASE("zeta = zetabar with small eta") {
    SlopeParams p;
    p.zeta = zetabar;
    p.eta = {Rat(1, 100)};
    CHECK(cond_a(p, wall, flag, zetabar));
  }
  SUBCASE("enormous eta breaks the positive side") {
    SlopeParams p;
    p.zeta = zetabar;
    p.eta = {Rat(1000000)};
    CHECK(!cond_a(p, wall, flag, zetabar));
  }
  SUBCASE("eta = 0 reduces to the sign tautology") {
    SlopeParams p;
    p.zeta = zetabar;
    p.eta = {Rat(0)};
    CHECK(cond_a(p, wall, flag, zetabar));
  }
  SUBCASE("vacuous when every pairing vanishes") {
    DimVector a1{2};
    EnhancedDim f1 = full_flag(a1, 0);
    SlopeParams p;
    p.zeta = {Rat(-7)};
    p.eta = {Rat(5), Rat(11)};
    CHECK(cond_a(p, Wall{1}, f1, StabilityVector{Rat(0)}));
  }
}

TEST_CASE("cond_b") {
  DimVector alpha{1};
  Wall wall{1};
  EnhancedDim flag = full_flag(alpha, 0);

  SUBCASE("ell = 0 in chamber C fails") {
    SlopeParams p;
    p.zeta = {Rat(-1, 10)};
    p.eta = {Rat(1, 7)};
    CHECK(!cond_b(p, wall, 0, flag));
  }
  SUBCASE("the sandwich construction certifies") {
    // dimV = 2, L = 1, D_1 = 1: the admissible interval for zeta(beta) is
    // (0, eta_1 / 2)
    SlopeParams p;
    p.eta = {Rat(1, 7)};
    p.zeta = {Rat(1, 20)};  // 0 < 1/20 < 1/14
    CHECK(cond_b(p, wall, 1, flag));
    p.zeta = {Rat(1, 10)};  // 1/10 > 1/14
    CHECK(!cond_b(p, wall, 1, flag));
  }
}

TEST_CASE("two_stability") {
  // geometric growth with ratio above alpha0: exhaustively certified
  for (long alpha0 = 1; alpha0 <= 3; ++alpha0) {
    for (int L = 1; L <= 4; ++L) {
      std::vector<Rat> eta;
      Rat pow(1);
      for (int k = 0; k < L; ++k) {
        eta.push_back(pow);
        pow *= Rat(alpha0 + 1);
      }
      CHECK(two_stability(eta, alpha0, 1));
    }
  }
  CHECK(!two_stability({Rat(1), Rat(1)}, 2, 1));
  CHECK(two_stability({Rat(22, 7)}, 5, 1));

  // scale invariance
  std::vector<Rat> eta{Rat(1), Rat(3), Rat(9)};
  for (const Rat& c : {Rat(2), Rat(1, 7), Rat(13, 5)}) {
    std::vector<Rat> scaled;
    for (const Rat& e : eta) scaled.push_back(e * c);
    CHECK(two_stability(eta, 2, 1) == two_stability(scaled, 2, 1));
  }
  std::vector<Rat> bad{Rat(1), Rat(2)};  // 2*1 - 1*2 = 0 within |l| <= 2
  for (const Rat& c : {Rat(2), Rat(1, 7)}) {
    std::vector<Rat> scaled;
    for (const Rat& e : bad) scaled.push_back(e * c);
    CHECK(two_stability(bad, 2, 1) == two_stability(scaled, 2, 1));
  }
}

TEST_CASE("cond_c") {
  DimVector alpha{2};
  EnhancedDim flag = full_flag(alpha, 0);  // L = 2, flag dims (1, 2), dimV = 3

  SlopeParams fast;
  fast.zeta = {Rat(0)};
  fast.eta = {Rat(100), Rat(1)};  // 100 > 3 * (1 * 2), 1 > 0
  CHECK(cond_c(fast, flag));

  SlopeParams flat;
  flat.zeta = {Rat(0)};
  flat.eta = {Rat(1), Rat(1)};
  CHECK(!cond_c(flat, flag));

  DimVector a1{1};
  EnhancedDim f1 = full_flag(a1, 0);
  SlopeParams single;
  single.zeta = {Rat(0)};
  single.eta = {Rat(42)};
  CHECK(cond_c(single, f1));
}

TEST_CASE("find_parameters certifies the one-vertex case") {
  DimVector alpha{2};
  Wall wall{1};
  EnhancedDim flag = full_flag(alpha, 0);
  StabilityVector zetabar{Rat(0)};

  auto res = find_parameters(wall, 1, alpha, flag, zetabar);
  REQUIRE(res.ok);
  SlopeParams plus{res.zeta_plus, res.eta};
  SlopeParams minus{res.zeta_minus, res.eta};
  CHECK(cond_a(plus, wall, flag, zetabar));
  CHECK(cond_a(minus, wall, flag, zetabar));
  CHECK(cond_b(plus, wall, 1, flag));
  CHECK(two_stability(res.eta, 2, 1));
  CHECK(cond_c(plus, flag));
  Rat zp(0), zm(0);
  for (std::size_t i = 0; i < wall.size(); ++i) {
    zp += res.zeta_plus[i] * Rat(wall[i]);
    zm += res.zeta_minus[i] * Rat(wall[i]);
  }
  CHECK(zp > 0);
  CHECK(zm < 0);
}

TEST_CASE("find_parameters minimal case alpha = beta") {
  DimVector alpha{1};
  Wall wall{1};
  EnhancedDim flag = full_flag(alpha, 0);
  auto res = find_parameters(wall, 1, alpha, flag, StabilityVector{Rat(0)});
  CHECK(res.ok);
}

TEST_CASE("find_parameters rejects ell outside kI") {
  DimVector alpha{2};
  EnhancedDim flag(alpha, 0, {1, 3}, 3);
  CHECK_THROWS_AS(find_parameters(Wall{1}, 2, alpha, flag, StabilityVector{Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("find_parameters on the flag quiver wall") {
  DimVector alpha{1, 1};
  Wall wall{1, 1};
  EnhancedDim flag = full_flag(alpha, 0);
  StabilityVector zetabar{Rat(1), Rat(-1)};
  auto res = find_parameters(wall, 1, alpha, flag, zetabar);
  REQUIRE(res.ok);
  SlopeParams plus{res.zeta_plus, res.eta};
  SlopeParams minus{res.zeta_minus, res.eta};
  CHECK(cond_a(plus, wall, flag, zetabar));
  CHECK(cond_a(minus, wall, flag, zetabar));
  CHECK(cond_b(plus, wall, 1, flag));
  CHECK(two_stability(res.eta, 1, 1));
  CHECK(cond_c(plus, flag));
}

TEST_CASE("find_parameters reports failure for a bad zetabar") {
  DimVector alpha{1, 1};
  EnhancedDim flag = full_flag(alpha, 0);
  // (1, -2) pairs nontrivially with the requested wall
  auto res = find_parameters(Wall{1, 1}, 1, alpha, flag, StabilityVector{Rat(1), Rat(-2)});
  CHECK(!res.ok);
  CHECK(!res.failure.empty());
}

TEST_CASE("enhanced dim invariants") {
  CHECK_THROWS_AS(EnhancedDim({2}, 0, {1}, 2), std::invalid_argument);   // |kI| != alpha0
  CHECK_THROWS_AS(EnhancedDim({2}, 0, {1, 2}, 1), std::invalid_argument);  // L < alpha0
  EnhancedDim ed({2}, 0, {1, 3}, 4);
  CHECK(ed.flag_dims == std::vector<long>{1, 1, 2, 2});
  CHECK(ed.kI() == std::vector<int>{1, 3});
}
