#include "qwc/stability.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qwc {

namespace {

Rat dot(const StabilityVector& zeta, const DimVector& v) {
  if (zeta.size() != v.size()) throw std::invalid_argument("dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < v.size(); ++i) s += zeta[i] * Rat(v[i]);
  return s;
}

long vsum(const DimVector& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

// All I-graded sub-dimension vectors 0 < S <= alpha.
void for_each_subdim(const DimVector& alpha, const std::function<void(const DimVector&)>& fn) {
  DimVector cur(alpha.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == alpha.size()) {
      if (vsum(cur) > 0) fn(cur);
      return;
    }
    for (long v = 0; v <= alpha[idx]; ++v) {
      cur[idx] = v;
      rec(idx + 1);
    }
    cur[idx] = 0;
  };
  rec(0);
}

// mu of the full enhanced space: zeta(V) = 0 by the framing convention, so
// only the flag part of the numerator survives.
Rat slope_of_full(const SlopeParams& p, const EnhancedDim& flag) {
  Rat E(0);
  for (int k = 1; k <= flag.L(); ++k) E += p.eta[k - 1] * Rat(flag.flag_dims[k - 1]);
  return E / Rat(flag.dim_V());
}

StabilityVector project_to_wall(const StabilityVector& zeta, const Wall& wall) {
  Rat bb(0), zb(0);
  for (std::size_t i = 0; i < wall.size(); ++i) {
    bb += Rat(wall[i]) * Rat(wall[i]);
    zb += zeta[i] * Rat(wall[i]);
  }
  if (bb == 0) throw std::invalid_argument("zero wall");
  StabilityVector out(zeta);
  for (std::size_t i = 0; i < wall.size(); ++i) out[i] -= zb / bb * Rat(wall[i]);
  return out;
}

}  // namespace

EnhancedDim::EnhancedDim(DimVector a, int zero_vertex, const std::vector<int>& kI, int L)
    : alpha(std::move(a)), zero(zero_vertex) {
  if (zero < 0 || static_cast<std::size_t>(zero) >= alpha.size())
    throw std::invalid_argument("zero vertex out of range");
  long a0 = alpha[zero];
  if (L < a0) throw std::invalid_argument("flag length shorter than alpha_0");
  std::set<int> steps(kI.begin(), kI.end());
  if (static_cast<long>(steps.size()) != a0)
    throw std::invalid_argument("|kI| must equal alpha_0");
  for (int k : steps)
    if (k < 1 || k > L) throw std::invalid_argument("kI entry out of range");
  flag_dims.resize(L);
  long d = 0;
  for (int k = 1; k <= L; ++k) {
    if (steps.count(k)) ++d;
    flag_dims[k - 1] = d;
  }
}

long EnhancedDim::dim_V() const { return 1 + vsum(alpha); }

std::vector<int> EnhancedDim::kI() const {
  std::vector<int> out;
  long prev = 0;
  for (int k = 1; k <= L(); ++k) {
    if (flag_dims[k - 1] > prev) out.push_back(k);
    prev = flag_dims[k - 1];
  }
  return out;
}

Rat slope(const SlopeParams& p, const DimVector& alpha, const EnhancedSubDim& sub) {
  if (sub.s.size() != p.zeta.size()) throw std::invalid_argument("dimension mismatch");
  long denom = sub.s_inf + vsum(sub.s);
  if (denom <= 0) throw std::domain_error("slope of a zero-dimensional subspace");
  Rat numer = dot(p.zeta, sub.s);
  if (sub.s_inf) numer += zeta_infinity(p.zeta, alpha);
  for (std::size_t k = 0; k < sub.s_flag.size(); ++k) {
    if (k >= p.eta.size()) throw std::invalid_argument("flag part longer than eta");
    numer += p.eta[k] * Rat(sub.s_flag[k]);
  }
  return numer / Rat(denom);
}

ThetaVector theta_vector(const SlopeParams& p, const EnhancedDim& ed) {
  if (p.eta.size() != static_cast<std::size_t>(ed.L()))
    throw std::invalid_argument("eta length mismatch");
  Rat dimV(ed.dim_V());
  Rat E(0);
  for (int k = 1; k <= ed.L(); ++k) E += p.eta[k - 1] * Rat(ed.flag_dims[k - 1]);
  ThetaVector th;
  th.internal_part.resize(p.zeta.size());
  for (std::size_t i = 0; i < p.zeta.size(); ++i) th.internal_part[i] = p.zeta[i] * dimV - E;
  th.infinity_part = zeta_infinity(p.zeta, ed.alpha) * dimV - E;
  th.flag_part.resize(ed.L());
  for (int k = 1; k <= ed.L(); ++k) th.flag_part[k - 1] = p.eta[k - 1] * dimV;
  return th;
}

bool cond_a(const SlopeParams& p, const Wall& wall, const EnhancedDim& flag,
            const std::optional<StabilityVector>& zetabar) {
  StabilityVector zb = zetabar ? *zetabar : project_to_wall(p.zeta, wall);
  Rat mu_full = slope_of_full(p, flag);
  bool ok = true;
  for_each_subdim(flag.alpha, [&](const DimVector& S) {
    if (!ok) return;
    Rat zbS = dot(zb, S);
    if (zbS == 0) return;
    Rat muS = dot(p.zeta, S) / Rat(vsum(S));
    if (zbS < 0 && !(muS < mu_full)) ok = false;
    if (zbS > 0 && !(muS > mu_full)) ok = false;
  });
  return ok;
}

bool cond_b(const SlopeParams& p, const Wall& wall, int ell, const EnhancedDim& flag) {
  int L = flag.L();
  if (ell < 0 || ell > L) throw std::invalid_argument("ell out of range");
  if (p.eta.size() != static_cast<std::size_t>(L))
    throw std::invalid_argument("eta length mismatch");
  Rat zeta_beta = dot(p.zeta, wall);
  long beta_sum = vsum(wall);
  if (beta_sum == 0) throw std::invalid_argument("zero wall");
  Rat base = zeta_beta / Rat(beta_sum);
  Rat dimV(flag.dim_V());
  Rat E(0);
  for (int k = 1; k <= L; ++k) E += p.eta[k - 1] * Rat(flag.flag_dims[k - 1]);
  Rat tail(0);
  for (int k = ell + 1; k <= L; ++k) tail += p.eta[k - 1] * Rat(flag.flag_dims[k - 1]);
  Rat eta_ell = ell == 0 ? Rat(0) : p.eta[ell - 1];
  Rat mid = E / dimV;
  return base + tail < mid && mid < base + eta_ell / dimV;
}

bool two_stability(const std::vector<Rat>& eta, long alpha0, long beta0) {
  if (beta0 < 1) throw std::invalid_argument("beta0 must be positive");
  for (const Rat& e : eta)
    if (e <= 0) throw std::invalid_argument("eta must be positive");
  std::size_t L = eta.size();
  std::vector<long> l(L, 0);
  bool ok = true;
  // First nonzero entry positive: the pairing is odd in l.
  std::function<void(std::size_t, bool)> rec = [&](std::size_t idx, bool started) {
    if (!ok) return;
    if (idx == L) {
      if (!started) return;
      Rat s(0);
      for (std::size_t k = 0; k < L; ++k) s += eta[k] * Rat(l[k]);
      if (s == 0) ok = false;
      return;
    }
    long lo = started ? -alpha0 : 0;
    for (long v = lo; v <= alpha0 && ok; ++v) {
      l[idx] = v;
      rec(idx + 1, started || v != 0);
    }
    l[idx] = 0;
  };
  rec(0, false);
  return ok;
}

bool cond_c(const SlopeParams& p, const EnhancedDim& flag) {
  int L = flag.L();
  if (p.eta.size() != static_cast<std::size_t>(L))
    throw std::invalid_argument("eta length mismatch");
  Rat dimV(flag.dim_V());
  for (int m = 1; m <= L; ++m) {
    Rat tail(0);
    for (int k = m + 1; k <= L; ++k) tail += p.eta[k - 1] * Rat(flag.flag_dims[k - 1]);
    if (!(p.eta[m - 1] > dimV * tail)) return false;
  }
  return true;
}

namespace {

bool wall_matches(const ParamClass& pc, const Wall& wall) {
  return pc.kind == ParamKind::OnWall && pc.wall && *pc.wall == wall;
}

Rat min_abs_wall_pairing(const StabilityVector& zetabar, const DimVector& alpha) {
  Rat best(0);
  bool found = false;
  for_each_subdim(alpha, [&](const DimVector& S) {
    Rat v = dot(zetabar, S);
    if (v == 0) return;
    if (v < 0) v = -v;
    if (!found || v < best) {
      best = v;
      found = true;
    }
  });
  return found ? best : Rat(1);
}

}  // namespace

ParameterSearchResult find_parameters(const Wall& wall, int ell, const DimVector& alpha,
                                      const EnhancedDim& flag, const StabilityVector& zetabar,
                                      const Int& max_denominator) {
  ParameterSearchResult res;
  auto kI = flag.kI();
  if (std::find(kI.begin(), kI.end(), ell) == kI.end())
    throw std::invalid_argument("ell is not a step of the flag profile");
  if (flag.alpha != alpha) throw std::invalid_argument("flag profile does not match alpha");
  long beta0 = wall[flag.zero];
  if (beta0 == 0) throw std::invalid_argument("wall vanishes at the zero vertex");
  ParamClass pc = classify_parameter(zetabar, alpha);
  if (!wall_matches(pc, wall)) {
    res.failure = "zetabar is not generic on the requested wall";
    return res;
  }

  long dimV = flag.dim_V();
  long a0 = flag.alpha0();
  int L = flag.L();
  long Bsum = vsum(wall);
  Rat beta_norm(0);
  for (long b : wall) beta_norm += Rat(b) * Rat(b);

  Rat g = min_abs_wall_pairing(zetabar, alpha);
  Rat M(0);  // max over S <= alpha of u(S) for u = beta / (beta, beta) >= 0
  for (std::size_t i = 0; i < wall.size(); ++i) M += Rat(wall[i]) / beta_norm * Rat(alpha[i]);
  if (M == 0) M = 1;

  // Geometric eta with a ratio small enough for the cond_a / cond_b / cond_c
  // estimates of section-3.3 style construction; halved on failure.
  Rat t = Rat(1, 4) / (Rat(dimV) * Rat(std::max<long>(a0, 1)) * Rat(L) * Rat(Bsum));
  Rat gbound = g * Rat(dimV) / (4 * M * Rat(Bsum) * Rat(std::max<long>(a0, 1)) * Rat(L));
  if (gbound < t) t = gbound;
  if (t >= Rat(1, 2)) t = Rat(1, 3);

  std::string last_failure = "empty cond_b interval";
  for (int round = 0; round < 4; ++round, t /= 2) {
    if (t.get_den() > max_denominator) {
      res.failure = "denominator cap exceeded while shrinking eta";
      return res;
    }
    std::vector<Rat> eta(L);
    Rat tk(1);
    for (int k = 1; k <= L; ++k) {
      tk *= t;
      eta[k - 1] = tk;
    }
    Rat E(0), tail(0);
    for (int k = 1; k <= L; ++k) {
      Rat term = eta[k - 1] * Rat(flag.flag_dims[k - 1]);
      E += term;
      if (k > ell) tail += term;
    }
    Rat eta_ell = ell >= 1 ? eta[ell - 1] : Rat(0);
    // Admissible open interval for zeta(beta) of the C' parameter.
    Rat lo = Rat(Bsum) * (E - eta_ell) / Rat(dimV);
    Rat hi = Rat(Bsum) * (E / Rat(dimV) - tail);
    if (!(lo < hi)) {
      last_failure = "empty cond_b interval";
      continue;
    }

    SlopeParams probe;
    probe.eta = eta;

    std::optional<StabilityVector> plus;
    for (int step = 1; step <= 6 && !plus; ++step) {
      Rat c = lo + (hi - lo) * Rat(step, 7);
      if (c <= 0) continue;
      StabilityVector z(zetabar);
      for (std::size_t i = 0; i < wall.size(); ++i) z[i] += c * Rat(wall[i]) / beta_norm;
      if (classify_parameter(z, alpha).kind != ParamKind::Generic) continue;
      probe.zeta = z;
      if (!(dot(z, wall) > 0)) continue;
      if (!cond_a(probe, wall, flag, zetabar)) {
        last_failure = "cond_a failed for the C' candidate";
        continue;
      }
      if (!cond_b(probe, wall, ell, flag)) {
        last_failure = "cond_b failed for the C' candidate";
        continue;
      }
      plus = z;
    }
    if (!plus) continue;

    std::optional<StabilityVector> minus;
    for (int step = 1; step <= 6 && !minus; ++step) {
      Rat c = lo + (hi - lo) * Rat(step, 7);
      if (c <= 0) c = (hi - lo) * Rat(step, 7);
      StabilityVector z(zetabar);
      for (std::size_t i = 0; i < wall.size(); ++i) z[i] -= c * Rat(wall[i]) / beta_norm;
      if (classify_parameter(z, alpha).kind != ParamKind::Generic) continue;
      if (!(dot(z, wall) < 0)) continue;
      probe.zeta = z;
      if (!cond_a(probe, wall, flag, zetabar)) {
        last_failure = "cond_a failed for the C candidate";
        continue;
      }
      minus = z;
    }
    if (!minus) continue;

    if (!two_stability(eta, a0, beta0)) {
      last_failure = "two_stability failed";
      continue;
    }
    probe.zeta = *plus;
    if (!cond_c(probe, flag)) {
      last_failure = "cond_c failed";
      continue;
    }
    res.ok = true;
    res.zeta_plus = *plus;
    res.zeta_minus = *minus;
    res.eta = eta;
    return res;
  }
  res.failure = last_failure;
  return res;
}

}  // namespace qwc
