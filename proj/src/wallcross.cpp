#include "qwc/wallcross.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qwc/stability.hpp"

namespace qwc {

long DecompositionDatum::total_size() const {
  long s = 0;
  for (const auto& p : parts) s += static_cast<long>(p.size());
  return s;
}

std::vector<long> DecompositionDatum::d(long beta0) const {
  std::vector<long> out;
  for (const auto& p : parts) {
    if (p.empty() || static_cast<long>(p.size()) % beta0 != 0)
      throw std::invalid_argument("part size not divisible by beta0");
    out.push_back(static_cast<long>(p.size()) / beta0);
  }
  return out;
}

std::vector<int> DecompositionDatum::complement(long alpha0) const {
  std::set<int> used;
  for (const auto& p : parts) used.insert(p.begin(), p.end());
  std::vector<int> out;
  for (int x = 1; x <= alpha0; ++x)
    if (!used.count(x)) out.push_back(x);
  return out;
}

std::vector<int> DecompositionDatum::tail_union(std::size_t i, long alpha0) const {
  std::set<int> out(complement(alpha0).begin(), complement(alpha0).end());
  for (std::size_t k = i + 1; k < parts.size(); ++k) out.insert(parts[k].begin(), parts[k].end());
  return std::vector<int>(out.begin(), out.end());
}

std::string DecompositionDatum::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ", ";
    os << "{";
    for (std::size_t k = 0; k < parts[i].size(); ++k) {
      if (k) os << ",";
      os << parts[i][k];
    }
    os << "}";
  }
  os << ")";
  return os.str();
}

std::vector<std::vector<int>> dec_ell(int ell, const std::vector<int>& kI, long beta0) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  if (beta0 < 1) throw std::invalid_argument("beta0 must be positive");
  std::vector<int> sorted(kI);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (!cur.empty() && static_cast<long>(cur.size()) % beta0 == 0 && cur.front() <= ell)
      out.push_back(cur);
    if (idx == sorted.size()) return;
    for (std::size_t next = idx; next < sorted.size(); ++next) {
      cur.push_back(sorted[next]);
      rec(next + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecompositionDatum> dec_sets(long alpha0, long beta0, int j) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  if (beta0 < 1) throw std::invalid_argument("beta0 must be positive");
  std::vector<DecompositionDatum> out;
  std::vector<std::vector<int>> parts;
  std::vector<int> universe;
  for (int x = 1; x <= alpha0; ++x) universe.push_back(x);

  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& avail, int depth) {
    if (depth == j) {
      out.push_back(DecompositionDatum{parts});
      return;
    }
    int prev_min = depth == 0 ? alpha0 + 1 : parts[depth - 1].front();
    // choose a part: nonempty subset of avail with size divisible by beta0
    // and min strictly below prev_min
    std::vector<int> cur;
    std::function<void(std::size_t)> choose = [&](std::size_t idx) {
      if (!cur.empty() && static_cast<long>(cur.size()) % beta0 == 0 && cur.front() < prev_min) {
        parts.push_back(cur);
        std::vector<int> rest;
        std::set<int> used(cur.begin(), cur.end());
        for (int x : avail)
          if (!used.count(x)) rest.push_back(x);
        rec(rest, depth + 1);
        parts.pop_back();
      }
      for (std::size_t next = idx; next < avail.size(); ++next) {
        cur.push_back(avail[next]);
        choose(next + 1);
        cur.pop_back();
      }
    };
    choose(0);
  };
  rec(universe, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecompositionDatum> dec_all(long alpha0, long beta0) {
  std::vector<DecompositionDatum> out;
  for (int j = 1; static_cast<long>(j) * beta0 <= alpha0; ++j) {
    auto part = dec_sets(alpha0, beta0, j);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long s_statistic(const std::vector<int>& A, const std::vector<int>& B) {
  std::set<int> a(A.begin(), A.end());
  for (int b : B)
    if (a.count(b)) throw std::invalid_argument("s_statistic requires disjoint sets");
  long asc = 0, desc = 0;
  for (int x : A)
    for (int y : B) {
      if (x < y) ++asc;
      if (x > y) ++desc;
    }
  return asc - desc;
}

GammaSeries GammaSeries::symbolic(int max_d) {
  GammaSeries g;
  g.mode_ = Mode::Symbolic;
  g.values_[0] = RationalFunction(Rat(1));
  for (int d = 1; d <= max_d; ++d)
    g.values_[d] = RationalFunction::variable(var("g" + std::to_string(d)));
  return g;
}

GammaSeries GammaSeries::handsaw_a1(int max_d) {
  GammaSeries g;
  g.mode_ = Mode::HandsawA1;
  g.values_[0] = RationalFunction(Rat(1));
  RationalFunction x = RationalFunction::variable(var("theta")) /
                       RationalFunction::variable(var("epsilon")) +
                       RationalFunction(Rat(1));
  Rat fact(1);
  for (int d = 1; d <= max_d; ++d) {
    fact *= d;
    g.values_[d] = pochhammer(x, static_cast<unsigned>(d)) / RationalFunction(fact);
  }
  return g;
}

GammaSeries GammaSeries::table(std::map<int, RationalFunction> values) {
  GammaSeries g;
  g.mode_ = Mode::Table;
  g.values_ = std::move(values);
  auto it = g.values_.find(0);
  if (it == g.values_.end()) {
    g.values_[0] = RationalFunction(Rat(1));
  } else if (!(it->second == RationalFunction(Rat(1)))) {
    throw std::invalid_argument("gamma_0 must be 1");
  }
  return g;
}

GammaSeries GammaSeries::single_framing(int max_d) {
  std::map<int, RationalFunction> values;
  values[0] = RationalFunction(Rat(1));
  if (max_d >= 1) values[1] = RationalFunction(Rat(1));
  for (int d = 2; d <= max_d; ++d) values[d] = RationalFunction();
  return table(std::move(values));
}

const RationalFunction& GammaSeries::at(int d) const {
  auto it = values_.find(d);
  if (it == values_.end())
    throw std::out_of_range("gamma series has no entry for d = " + std::to_string(d));
  return it->second;
}

int GammaSeries::max_d() const {
  int m = 0;
  for (const auto& [d, v] : values_) m = std::max(m, d);
  return m;
}

WallCrossingContext make_context(DimVector alpha, Wall beta, int zero,
                                 const RationalFunction& beta_bar_inf) {
  if (zero < 0 || static_cast<std::size_t>(zero) >= beta.size())
    throw std::invalid_argument("zero vertex out of range");
  if (beta[zero] == 0) throw std::invalid_argument("beta vanishes at the zero vertex");
  if (alpha.size() != beta.size()) throw std::invalid_argument("alpha/beta size mismatch");
  WallCrossingContext ctx;
  ctx.alpha = std::move(alpha);
  ctx.beta = std::move(beta);
  ctx.zero = zero;
  ctx.beta_bar_inf = beta_bar_inf;
  return ctx;
}

WallCrossingContext make_context(const FramedQuiver& q, const DimVector& alpha, const Wall& beta,
                                 const std::string& zero, const StabilityVector& zeta_plus,
                                 const StabilityVector& zeta_minus, const std::vector<Rat>& eta) {
  int zi = q.internal_index(zero);
  if (zi < 0) throw std::invalid_argument("zero vertex not internal");
  WallCrossingContext ctx =
      make_context(alpha, beta, zi, RationalFunction(Rat(beta_bar_infinity(q, beta))));

  EnhancedDim full(alpha, zi, [&] {
    std::vector<int> kI;
    for (int k = 1; k <= alpha[zi]; ++k) kI.push_back(k);
    return kI;
  }(), static_cast<int>(alpha[zi]));

  // Scale (zeta, eta) to integers so the theta vectors are integral.
  Int lcm(1);
  auto absorb = [&](const Rat& x) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t()); };
  for (const Rat& x : zeta_plus) absorb(x);
  for (const Rat& x : zeta_minus) absorb(x);
  for (const Rat& x : eta) absorb(x);
  Rat scale(lcm);
  auto scaled = [&](const StabilityVector& z) {
    StabilityVector out(z);
    for (Rat& x : out) x *= scale;
    return out;
  };
  SlopeParams pp{scaled(zeta_plus), {}};
  SlopeParams pm{scaled(zeta_minus), {}};
  for (const Rat& x : eta) {
    pp.eta.push_back(x * scale);
    pm.eta.push_back(x * scale);
  }
  ThetaVector tp = theta_vector(pp, full);
  ThetaVector tm = theta_vector(pm, full);
  auto to_longs = [](const std::vector<Rat>& v) {
    std::vector<long> out;
    for (const Rat& x : v) {
      if (x.get_den() != 1) throw std::logic_error("theta vector failed to scale to integers");
      out.push_back(static_cast<long>(x.get_num().get_si()));
    }
    return out;
  };
  ctx.theta_plus = to_longs(tp.internal_part);
  ctx.theta_minus = to_longs(tm.internal_part);
  long D = 0;
  for (std::size_t i = 0; i < beta.size(); ++i)
    D += ((*ctx.theta_plus)[i] - (*ctx.theta_minus)[i]) * beta[i];
  if (D <= 0) throw std::invalid_argument("D must be positive; check the chamber assignment");
  ctx.D = D;
  return ctx;
}

namespace {

Rat factorial(long n) {
  Rat f(1);
  for (long i = 2; i <= n; ++i) f *= Rat(i);
  return f;
}

DimVector shifted_dim(const DimVector& alpha, const Wall& beta, long k) {
  DimVector out(alpha);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    out[i] -= k * beta[i];
    if (out[i] < 0) throw std::domain_error("target dimension went negative");
  }
  return out;
}

}  // namespace

std::vector<WallCrossTerm> wall_cross_terms(const WallCrossingContext& ctx,
                                            const GammaSeries& gamma) {
  long alpha0 = ctx.alpha0();
  long beta0 = ctx.beta0();
  if (beta0 == 0) throw std::invalid_argument("beta0 must be nonzero");
  std::vector<WallCrossTerm> out;
  Rat alpha0_fact = factorial(alpha0);
  for (const DecompositionDatum& datum : dec_all(alpha0, beta0)) {
    auto ds = datum.d(beta0);
    long k = 0;
    for (long di : ds) k += di;
    auto comp = datum.complement(alpha0);
    RationalFunction coeff(factorial(static_cast<long>(comp.size())) / alpha0_fact);
    for (std::size_t i = 0; i < datum.parts.size(); ++i) {
      long di = ds[i];
      auto rest = datum.tail_union(i, alpha0);
      long s = s_statistic(datum.parts[i], rest);
      coeff *= RationalFunction(factorial(di * beta0 - 1)) * gamma.at(static_cast<int>(di)) *
               (RationalFunction(Rat(s)) - ctx.beta_bar_inf * RationalFunction(Rat(di)));
    }
    out.push_back(WallCrossTerm{datum, coeff, shifted_dim(ctx.alpha, ctx.beta, k), k});
  }
  return out;
}

std::vector<RecursionBranch> recursion_step(const WallCrossingContext& ctx, int ell,
                                            const std::vector<int>& kI, const DimVector& alpha_cur,
                                            const GammaSeries& gamma) {
  if (std::find(kI.begin(), kI.end(), ell) == kI.end())
    throw std::invalid_argument("ell must belong to the index set");
  long beta0 = ctx.beta0();
  std::vector<RecursionBranch> out;
  Rat size_fact = factorial(static_cast<long>(kI.size()));
  for (const auto& sharp : dec_ell(ell, kI, beta0)) {
    std::set<int> chosen(sharp.begin(), sharp.end());
    std::vector<int> flat;
    for (int x : kI)
      if (!chosen.count(x)) flat.push_back(x);
    std::sort(flat.begin(), flat.end());
    long dsharp = static_cast<long>(sharp.size()) / beta0;
    long s = s_statistic(sharp, flat);
    RationalFunction coeff(factorial(static_cast<long>(flat.size())) *
                           factorial(static_cast<long>(sharp.size()) - 1) / size_fact);
    coeff *= gamma.at(static_cast<int>(dsharp)) *
             (RationalFunction(Rat(s)) - ctx.beta_bar_inf * RationalFunction(Rat(dsharp)));
    RecursionBranch br;
    br.sharp = sharp;
    br.coefficient = coeff;
    br.ell_next = sharp.front() - 1;
    br.flat = flat;
    br.alpha_next = shifted_dim(alpha_cur, ctx.beta, dsharp);
    out.push_back(std::move(br));
  }
  return out;
}

std::map<DecompositionDatum, RationalFunction> iterate_recursion(const WallCrossingContext& ctx,
                                                                 const GammaSeries& gamma) {
  std::map<DecompositionDatum, RationalFunction> acc;
  long alpha0 = ctx.alpha0();
  std::vector<int> full;
  for (int x = 1; x <= alpha0; ++x) full.push_back(x);

  std::function<void(int, const std::vector<int>&, const DimVector&, const RationalFunction&,
                     DecompositionDatum&)>
      walk = [&](int ell, const std::vector<int>& kI, const DimVector& alpha_cur,
                 const RationalFunction& weight, DecompositionDatum& datum) {
        if (kI.empty() || ell < 1) return;
        if (std::find(kI.begin(), kI.end(), ell) == kI.end()) {
          // descend to the largest available level; levels between parts
          // carry no decomposition data
          int best = 0;
          for (int x : kI)
            if (x <= ell) best = std::max(best, x);
          if (best == 0) return;
          ell = best;
        }
        for (const RecursionBranch& br : recursion_step(ctx, ell, kI, alpha_cur, gamma)) {
          datum.parts.push_back(br.sharp);
          RationalFunction w = weight * br.coefficient;
          auto [it, inserted] = acc.emplace(datum, w);
          if (!inserted) it->second += w;
          walk(br.ell_next, br.flat, br.alpha_next, w, datum);
          datum.parts.pop_back();
        }
      };

  DecompositionDatum datum;
  walk(static_cast<int>(alpha0), full, ctx.alpha, RationalFunction(Rat(1)), datum);
  return acc;
}

RationalFunction gamma_consistency(const GammaSeries& gamma, int d, long beta0) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  long n = d * beta0;
  std::vector<int> universe;
  for (int x = 1; x <= n; ++x) universe.push_back(x);
  RationalFunction rhs;
  Rat n_fact = factorial(n);
  for (const auto& sharp : dec_ell(1, universe, beta0)) {
    if (sharp.front() != 1) continue;
    std::set<int> chosen(sharp.begin(), sharp.end());
    std::vector<int> flat;
    for (int x : universe)
      if (!chosen.count(x)) flat.push_back(x);
    long dsharp = static_cast<long>(sharp.size()) / beta0;
    long s = s_statistic(sharp, flat);
    RationalFunction coeff(factorial(static_cast<long>(flat.size())) *
                           factorial(static_cast<long>(sharp.size()) - 1) / n_fact);
    coeff *= RationalFunction(Rat(-s + beta0 * dsharp));
    rhs += coeff * gamma.at(static_cast<int>(dsharp)) * gamma.at(static_cast<int>(d - dsharp));
  }
  return gamma.at(d) - rhs;
}

RationalFunction proper_subset_vanishing(int d, long beta0, const GammaSeries& gamma) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  long n = d * beta0;
  std::vector<int> universe;
  for (int x = 1; x <= n; ++x) universe.push_back(x);
  RationalFunction sum;
  Rat n_fact = factorial(n);
  for (const auto& sharp : dec_ell(1, universe, beta0)) {
    if (sharp.front() != 1) continue;
    if (static_cast<long>(sharp.size()) == n) continue;  // proper subsets only
    std::set<int> chosen(sharp.begin(), sharp.end());
    std::vector<int> flat;
    for (int x : universe)
      if (!chosen.count(x)) flat.push_back(x);
    long dsharp = static_cast<long>(sharp.size()) / beta0;
    long s = s_statistic(sharp, flat);
    RationalFunction coeff(factorial(static_cast<long>(flat.size())) *
                           factorial(static_cast<long>(sharp.size()) - 1) / n_fact);
    coeff *= RationalFunction(Rat(-s + beta0 * dsharp));
    sum += coeff * gamma.at(static_cast<int>(dsharp)) * gamma.at(static_cast<int>(d - dsharp));
  }
  return sum;
}

Int s_partition_vanishing(const std::vector<long>& d, long beta0, long n) {
  for (long di : d)
    if (di < 1) throw std::invalid_argument("part sizes must be positive");
  if (beta0 < 1) throw std::invalid_argument("beta0 must be positive");
  long used_total = 0;
  for (long di : d) used_total += di * beta0;
  if (used_total > n) return Int(0);

  Int total(0);
  std::vector<std::vector<int>> parts;
  std::vector<int> universe;
  for (int x = 1; x <= n; ++x) universe.push_back(x);

  std::function<void(std::size_t, const std::vector<int>&)> rec = [&](std::size_t depth,
                                                                      const std::vector<int>& avail) {
    if (depth == d.size()) {
      Int prod(1);
      std::set<int> used;
      for (const auto& p : parts) used.insert(p.begin(), p.end());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::set<int> rest;
        for (std::size_t k = i + 1; k < parts.size(); ++k)
          rest.insert(parts[k].begin(), parts[k].end());
        for (int x = 1; x <= n; ++x)
          if (!used.count(x)) rest.insert(x);
        prod *= Int(s_statistic(parts[i], std::vector<int>(rest.begin(), rest.end())));
        if (prod == 0) break;
      }
      total += prod;
      return;
    }
    long size = d[depth] * beta0;
    int prev_min = depth == 0 ? static_cast<int>(n) + 1 : parts[depth - 1].front();
    std::vector<int> cur;
    std::function<void(std::size_t)> choose = [&](std::size_t idx) {
      if (static_cast<long>(cur.size()) == size) {
        if (cur.front() < prev_min) {
          parts.push_back(cur);
          std::vector<int> rest;
          std::set<int> usedc(cur.begin(), cur.end());
          for (int x : avail)
            if (!usedc.count(x)) rest.push_back(x);
          rec(depth + 1, rest);
          parts.pop_back();
        }
        return;
      }
      for (std::size_t nxt = idx; nxt < avail.size(); ++nxt) {
        cur.push_back(avail[nxt]);
        choose(nxt + 1);
        cur.pop_back();
      }
    };
    choose(0);
  };
  rec(0, universe);
  return total;
}

BinomialExperiment binomial_question_experiment(long alpha0, long beta0, long i,
                                                const GammaSeries& gamma,
                                                const RationalFunction& beta_bar_inf) {
  if (i < 0 || i > alpha0) throw std::invalid_argument("i out of range");

  auto a_sum_over = [&](long m, long complement_size) {
    // sum of a_I over data in Dec(m) whose complement has the given size;
    // the empty decomposition contributes 1 when the complement is all of
    // [m] (this also fixes A_0 = 1)
    RationalFunction sum = complement_size == m ? RationalFunction(Rat(1)) : RationalFunction();
    for (const DecompositionDatum& datum : dec_all(m, beta0)) {
      if (static_cast<long>(datum.complement(m).size()) != complement_size) continue;
      RationalFunction a(Rat(1));
      auto ds = datum.d(beta0);
      for (std::size_t t = 0; t < datum.parts.size(); ++t) {
        long s = s_statistic(datum.parts[t], datum.tail_union(t, m));
        a *= (RationalFunction(Rat(s)) - beta_bar_inf * RationalFunction(Rat(ds[t]))) *
             RationalFunction(factorial(static_cast<long>(datum.parts[t].size()) - 1)) *
             gamma.at(static_cast<int>(ds[t]));
      }
      sum += a;
    }
    return sum;
  };

  BinomialExperiment ex;
  ex.lhs = a_sum_over(alpha0, i);
  Rat binom = factorial(alpha0) / (factorial(i) * factorial(alpha0 - i));
  ex.rhs = RationalFunction(binom) * a_sum_over(alpha0 - i, 0);
  ex.equal = ex.lhs == ex.rhs;
  return ex;
}

}  // namespace qwc
