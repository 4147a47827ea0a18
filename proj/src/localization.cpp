#include "qwc/localization.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qwc/wallcross.hpp"

namespace qwc {

namespace {

std::vector<Var> coordinate_vars(int n, const std::string& prefix) {
  std::vector<Var> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(var(prefix + std::to_string(i)));
  return xs;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::string subset_label(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i] + 1;
  }
  os << "}";
  return os.str();
}

}  // namespace

FixedPointModel grassmannian_model(int k, int n, const std::string& var_prefix) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("grassmannian_model requires 0 <= k <= n");
  FixedPointModel m;
  m.params = coordinate_vars(n, var_prefix);
  for (const auto& S : subsets_of_size(n, k)) {
    FixedPoint p;
    p.label = subset_label(S);
    std::vector<bool> in_set(n, false);
    for (int s : S) in_set[s] = true;
    for (int s : S)
      for (int t = 0; t < n; ++t)
        if (!in_set[t]) p.tangent.push_back(WeightForm::of(m.params[t]) - WeightForm::of(m.params[s]));
    KClass taut;
    for (int s : S) taut.add(WeightForm::of(m.params[s]));
    p.bundles["taut"] = taut;
    m.points.push_back(std::move(p));
  }
  return m;
}

FixedPointModel flag_model(const std::vector<int>& dims, int n, const std::string& var_prefix) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0 || dims[i] > n) throw std::invalid_argument("flag dimension out of range");
    if (i > 0 && dims[i] <= dims[i - 1]) throw std::invalid_argument("flag dimensions must increase");
  }
  FixedPointModel m;
  m.params = coordinate_vars(n, var_prefix);

  // chains of coordinate subsets with the given sizes
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<std::vector<int>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t step) {
    if (step == dims.size()) {
      chains.push_back(cur);
      return;
    }
    std::vector<int> prev = step == 0 ? std::vector<int>{} : cur.back();
    std::vector<int> avail;
    std::vector<bool> used(n, false);
    for (int v : prev) used[v] = true;
    for (int v = 0; v < n; ++v)
      if (!used[v]) avail.push_back(v);
    int need = dims[step] - static_cast<int>(prev.size());
    for (const auto& extra : subsets_of_size(static_cast<int>(avail.size()), need)) {
      std::vector<int> next(prev);
      for (int idx : extra) next.push_back(avail[idx]);
      std::sort(next.begin(), next.end());
      cur.push_back(next);
      rec(step + 1);
      cur.pop_back();
    }
  };
  rec(0);

  for (const auto& chain : chains) {
    FixedPoint p;
    std::ostringstream label;
    for (std::size_t a = 0; a < chain.size(); ++a) {
      if (a) label << "<";
      label << subset_label(chain[a]);
    }
    p.label = label.str();
    for (std::size_t a = 0; a < chain.size(); ++a) {
      std::vector<int> newcomers;
      if (a == 0) {
        newcomers = chain[a];
      } else {
        std::vector<bool> prev(n, false);
        for (int v : chain[a - 1]) prev[v] = true;
        for (int v : chain[a])
          if (!prev[v]) newcomers.push_back(v);
      }
      std::vector<bool> in_a(n, false);
      for (int v : chain[a]) in_a[v] = true;
      for (int s : newcomers)
        for (int t = 0; t < n; ++t)
          if (!in_a[t]) p.tangent.push_back(WeightForm::of(m.params[t]) - WeightForm::of(m.params[s]));
      KClass bundle;
      for (int s : chain[a]) bundle.add(WeightForm::of(m.params[s]));
      p.bundles["F" + std::to_string(a + 1)] = bundle;
    }
    m.points.push_back(std::move(p));
  }
  return m;
}

FixedPointModel framed_span_model(int k, int n, const std::string& var_prefix) {
  FixedPointModel m = grassmannian_model(k, n, var_prefix);
  for (FixedPoint& p : m.points)
    for (WeightForm& w : p.tangent) w = -w;
  return m;
}

KClass tangent_class(const FixedPoint& p) {
  KClass c;
  c.plus = p.tangent;
  return c;
}

long lambda_rank(const FramedQuiver& q, const std::map<std::string, long>& dims) {
  auto dim_of = [&](const std::string& v) -> long {
    if (v == q.framing) return 1;
    auto it = dims.find(v);
    return it == dims.end() ? 0 : it->second;
  };
  long rank = 0;
  for (const auto& a : q.arrows) rank += dim_of(a.from) * dim_of(a.to);
  for (const auto& rel : q.relations)
    rank -= dim_of(q.relation_out(rel)) * dim_of(q.relation_in(rel));
  for (const auto& v : q.internal_vertices()) rank -= dim_of(v) * dim_of(v);
  return rank;
}

std::vector<KClass> lambda_class(const FramedQuiver& q, const FixedPointModel& m,
                                 const std::map<std::string, std::string>& assignment,
                                 const std::vector<WeightForm>& framing_weights) {
  auto bundle_at = [&](const FixedPoint& p, const std::string& vertex) -> KClass {
    if (vertex == q.framing) throw std::logic_error("framing bundle is handled separately");
    auto it = assignment.find(vertex);
    if (it == assignment.end())
      throw std::invalid_argument("no bundle assigned to vertex '" + vertex + "'");
    if (it->second == "0") return KClass{};
    auto bit = p.bundles.find(it->second);
    if (bit == p.bundles.end())
      throw std::invalid_argument("model has no bundle named '" + it->second + "'");
    return bit->second;
  };

  // framing arrows consume weights in quiver arrow order
  std::map<std::string, WeightForm> framing_weight_of;
  std::size_t next = 0;
  for (const auto& a : q.arrows) {
    if (a.from == q.framing || a.to == q.framing) {
      if (next >= framing_weights.size())
        throw std::invalid_argument("not enough framing weights supplied");
      framing_weight_of[a.id] = framing_weights[next++];
    }
  }

  std::vector<KClass> out;
  for (const FixedPoint& p : m.points) {
    KClass c;
    for (const auto& a : q.arrows) {
      bool from_inf = a.from == q.framing;
      bool to_inf = a.to == q.framing;
      if (from_inf && to_inf) continue;  // Hom(C, C): a single line of the arrow weight
      if (from_inf) {
        for (const WeightForm& b : bundle_at(p, a.to).plus)
          c.add(b - framing_weight_of[a.id] + a.weight);
      } else if (to_inf) {
        for (const WeightForm& b : bundle_at(p, a.from).plus)
          c.add(framing_weight_of[a.id] - b + a.weight);
      } else {
        for (const WeightForm& src : bundle_at(p, a.from).plus)
          for (const WeightForm& dst : bundle_at(p, a.to).plus) c.add(dst - src + a.weight);
      }
    }
    for (const auto& rel : q.relations) {
      WeightForm w = q.relation_weight(rel);
      for (const WeightForm& src : bundle_at(p, q.relation_out(rel)).plus)
        for (const WeightForm& dst : bundle_at(p, q.relation_in(rel)).plus) c.sub(dst - src + w);
    }
    for (const auto& v : q.internal_vertices()) {
      const KClass b = bundle_at(p, v);
      for (const WeightForm& x : b.plus)
        for (const WeightForm& y : b.plus) c.sub(y - x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

RationalFunction ab_integrate(const FixedPointModel& m, const std::vector<KClass>& integrand,
                              std::optional<Var> twist) {
  if (integrand.size() != m.points.size())
    throw std::invalid_argument("integrand must supply one class per fixed point");
  RationalFunction total;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    RationalFunction numer = twist ? euler_theta(integrand[i], *twist)
                                   : euler_plain(integrand[i]);
    RationalFunction denom = euler_plain(tangent_class(m.points[i]));
    total += numer / denom;
  }
  return total;
}

AdjointExperiment adjoint_experiment(long r, long alpha0) {
  if (r < 1 || alpha0 < 0 || alpha0 > r)
    throw std::invalid_argument("adjoint_experiment requires 0 <= alpha0 <= r >= 1");
  Var theta = var("theta");
  FramedQuiver q = single_vertex_quiver(r);
  std::vector<WeightForm> fw;
  for (long l = 1; l <= r; ++l) fw.push_back(WeightForm::of(var("x" + std::to_string(l))));

  auto moduli_integral = [&](long m) -> RationalFunction {
    FixedPointModel model = framed_span_model(static_cast<int>(m), static_cast<int>(r));
    auto integrand = lambda_class(q, model, {{"0", "taut"}}, fw);
    return ab_integrate(model, integrand, theta);
  };

  AdjointExperiment ex;
  // zeta^+ side: for alpha0 >= 1 the internal part is a destabilizing
  // subrepresentation, so the moduli is empty; at alpha0 = 0 both chambers
  // see the same point.
  RationalFunction plus_side = alpha0 == 0 ? moduli_integral(0) : RationalFunction();
  ex.lhs = plus_side - moduli_integral(alpha0);

  WallCrossingContext ctx =
      make_context(DimVector{alpha0}, Wall{1}, 0, RationalFunction(Rat(r)));
  GammaSeries gamma = GammaSeries::single_framing(static_cast<int>(alpha0));
  std::map<long, RationalFunction> grouped;
  if (alpha0 > 0) {
    for (const WallCrossTerm& t : wall_cross_terms(ctx, gamma)) grouped[t.k] += t.coefficient;
  }
  for (const auto& [k, coeff] : grouped) ex.rhs += coeff * moduli_integral(alpha0 - k);
  ex.equal = ex.lhs == ex.rhs;
  return ex;
}

}  // namespace qwc
