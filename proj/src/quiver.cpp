#include "qwc/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qwc {

std::vector<std::string> FramedQuiver::internal_vertices() const {
  std::vector<std::string> out;
  for (const auto& v : vertices)
    if (v != framing) out.push_back(v);
  return out;
}

int FramedQuiver::internal_index(const std::string& v) const {
  auto internals = internal_vertices();
  auto it = std::find(internals.begin(), internals.end(), v);
  return it == internals.end() ? -1 : static_cast<int>(it - internals.begin());
}

const Arrow* FramedQuiver::find_arrow(const std::string& id) const {
  for (const auto& a : arrows)
    if (a.id == id) return &a;
  return nullptr;
}

std::string FramedQuiver::relation_out(const Relation& r) const {
  if (r.terms.empty() || r.terms.front().path.empty())
    throw std::invalid_argument("relation has no path");
  const Arrow* a = find_arrow(r.terms.front().path.front());
  if (!a) throw std::invalid_argument("relation references unknown arrow");
  return a->from;
}

std::string FramedQuiver::relation_in(const Relation& r) const {
  if (r.terms.empty() || r.terms.front().path.empty())
    throw std::invalid_argument("relation has no path");
  const Arrow* a = find_arrow(r.terms.front().path.back());
  if (!a) throw std::invalid_argument("relation references unknown arrow");
  return a->to;
}

WeightForm FramedQuiver::relation_weight(const Relation& r) const {
  WeightForm w;
  if (r.terms.empty()) return w;
  for (const auto& id : r.terms.front().path) {
    const Arrow* a = find_arrow(id);
    if (!a) throw std::invalid_argument("relation references unknown arrow");
    w += a->weight;
  }
  return w;
}

std::vector<std::string> validate(const FramedQuiver& q) {
  std::vector<std::string> bad;
  std::set<std::string> vset(q.vertices.begin(), q.vertices.end());
  if (vset.size() != q.vertices.size()) bad.push_back("duplicate vertex ids");
  if (!vset.count(q.framing)) bad.push_back("framing vertex '" + q.framing + "' not in vertex set");

  std::set<std::string> aset;
  for (const auto& a : q.arrows) {
    if (!aset.insert(a.id).second) bad.push_back("duplicate arrow id '" + a.id + "'");
    if (!vset.count(a.from)) bad.push_back("arrow '" + a.id + "' starts at unknown vertex '" + a.from + "'");
    if (!vset.count(a.to)) bad.push_back("arrow '" + a.id + "' ends at unknown vertex '" + a.to + "'");
  }

  for (const auto& rel : q.relations) {
    if (rel.terms.empty()) {
      bad.push_back("relation '" + rel.id + "' has no terms");
      continue;
    }
    std::string common_out, common_in;
    bool shape_ok = true;
    for (const auto& term : rel.terms) {
      if (term.path.empty()) {
        bad.push_back("relation '" + rel.id + "' has an empty path");
        shape_ok = false;
        continue;
      }
      std::string prev_to;
      bool path_ok = true;
      for (std::size_t i = 0; i < term.path.size(); ++i) {
        const Arrow* a = q.find_arrow(term.path[i]);
        if (!a) {
          bad.push_back("relation '" + rel.id + "' references unknown arrow '" + term.path[i] + "'");
          path_ok = false;
          break;
        }
        if (i > 0 && a->from != prev_to) {
          bad.push_back("relation '" + rel.id + "' has a non-composable path at '" + term.path[i] + "'");
          path_ok = false;
          break;
        }
        prev_to = a->to;
      }
      if (!path_ok) {
        shape_ok = false;
        continue;
      }
      std::string out = q.find_arrow(term.path.front())->from;
      std::string in = q.find_arrow(term.path.back())->to;
      if (common_out.empty() && common_in.empty()) {
        common_out = out;
        common_in = in;
      } else if (out != common_out || in != common_in) {
        bad.push_back("relation '" + rel.id + "' mixes endpoints");
        shape_ok = false;
      }
    }
    if (shape_ok) {
      if (common_out == q.framing)
        bad.push_back("relation '" + rel.id + "' starts at the framing vertex");
      if (common_in == q.framing)
        bad.push_back("relation '" + rel.id + "' ends at the framing vertex");
    }
  }
  return bad;
}

Rat zeta_infinity(const StabilityVector& zeta, const DimVector& alpha) {
  if (zeta.size() != alpha.size())
    throw std::invalid_argument("zeta and alpha dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < zeta.size(); ++i) s += zeta[i] * Rat(alpha[i]);
  return -s;
}

long beta_bar_infinity(const FramedQuiver& q, const DimVector& beta) {
  auto internals = q.internal_vertices();
  if (beta.size() != internals.size())
    throw std::invalid_argument("beta dimension mismatch");
  long out = 0;
  for (const auto& a : q.arrows) {
    if (a.from == q.framing && a.to != q.framing) out += beta[q.internal_index(a.to)];
    if (a.to == q.framing && a.from != q.framing) out -= beta[q.internal_index(a.from)];
  }
  return out;
}

namespace {

long vec_gcd(const DimVector& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

void enumerate_below(const DimVector& alpha, std::size_t idx, DimVector& cur,
                     std::vector<Wall>& out) {
  if (idx == alpha.size()) {
    if (vec_gcd(cur) == 1) out.push_back(cur);
    return;
  }
  for (long v = 0; v <= alpha[idx]; ++v) {
    cur[idx] = v;
    enumerate_below(alpha, idx + 1, cur, out);
  }
  cur[idx] = 0;
}

}  // namespace

std::vector<Wall> enumerate_walls(const DimVector& alpha) {
  std::vector<Wall> out;
  DimVector cur(alpha.size(), 0);
  enumerate_below(alpha, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

ParamClass classify_parameter(const StabilityVector& zeta, const DimVector& alpha) {
  auto walls = enumerate_walls(alpha);
  ParamClass result;
  for (const auto& w : walls) {
    Rat v(0);
    for (std::size_t i = 0; i < w.size(); ++i) v += zeta[i] * Rat(w[i]);
    int sign = v == 0 ? 0 : (v < 0 ? -1 : 1);
    result.signs.push_back(sign);
    if (sign == 0) result.vanishing.push_back(w);
  }
  if (result.vanishing.empty()) {
    result.kind = ParamKind::Generic;
  } else if (result.vanishing.size() == 1) {
    result.kind = ParamKind::OnWall;
    result.wall = result.vanishing.front();
  } else {
    result.kind = ParamKind::Degenerate;
  }
  return result;
}

FramedQuiver enhanced_quiver(const FramedQuiver& q, const std::string& zero, int L, long alpha0) {
  if (q.internal_index(zero) < 0) throw std::invalid_argument("enhancement vertex not internal");
  if (alpha0 >= 0 && L < alpha0) throw std::invalid_argument("enhancement chain shorter than alpha_0");
  FramedQuiver out(q);
  auto flag_name = [&](int k) { return zero + "~" + std::to_string(k); };
  std::vector<std::string> verts;
  for (const auto& v : q.vertices)
    if (v != q.framing) verts.push_back(v);
  for (int k = 1; k <= L; ++k) verts.push_back(flag_name(k));
  verts.push_back(q.framing);
  out.vertices = verts;
  for (int k = 1; k < L; ++k)
    out.arrows.push_back({"chain:" + flag_name(k), flag_name(k), flag_name(k + 1), WeightForm()});
  if (L >= 1)
    out.arrows.push_back({"chain:" + flag_name(L), flag_name(L), zero, WeightForm()});
  return out;
}

FramedQuiver sharp_quiver(const FramedQuiver& q, const std::string& zero) {
  if (q.internal_index(zero) < 0) throw std::invalid_argument("sharp vertex not internal");
  FramedQuiver out(q);
  std::string newinf = q.framing + "'";
  while (std::find(out.vertices.begin(), out.vertices.end(), newinf) != out.vertices.end())
    newinf += "'";
  out.vertices.push_back(newinf);
  out.framing = newinf;
  out.arrows.push_back({"sharp:" + newinf, newinf, zero, WeightForm()});
  return out;
}

namespace {

WeightForm wt_q1() { return WeightForm::of(var("q1")); }
WeightForm wt_q2() { return WeightForm::of(var("q2")); }
WeightForm wt_q1q2() { return WeightForm::of(var("q1")) + WeightForm::of(var("q2")); }

}  // namespace

FramedQuiver nakajima_quiver(const std::vector<std::string>& verts,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::vector<long>& r) {
  if (r.size() != verts.size()) throw std::invalid_argument("framing vector size mismatch");
  for (long m : r)
    if (m < 0) throw std::invalid_argument("negative framing multiplicity");
  FramedQuiver q;
  q.framing = "inf";
  q.vertices = verts;
  q.vertices.push_back(q.framing);

  struct Opp {
    std::string fwd, bwd, from, to;
  };
  std::vector<Opp> omega;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    if (std::find(verts.begin(), verts.end(), u) == verts.end() ||
        std::find(verts.begin(), verts.end(), v) == verts.end())
      throw std::invalid_argument("edge endpoint not a vertex");
    std::string h = "h" + std::to_string(e + 1);
    std::string hb = "hbar" + std::to_string(e + 1);
    q.arrows.push_back({h, u, v, wt_q1()});
    q.arrows.push_back({hb, v, u, wt_q2()});
    omega.push_back({h, hb, u, v});
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (long l = 1; l <= r[i]; ++l) {
      q.arrows.push_back({"z:" + verts[i] + ":" + std::to_string(l), q.framing, verts[i], WeightForm()});
      q.arrows.push_back({"w:" + verts[i] + ":" + std::to_string(l), verts[i], q.framing, wt_q1q2()});
    }
  }
  // l_i = sum_{out(a)=i} eps(a) abar a + sum_l z_il w_il, an End(V_i) with
  // weight q1 q2.
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Relation rel;
    rel.id = "mu:" + verts[i];
    for (const auto& o : omega) {
      if (o.from == verts[i]) rel.terms.push_back({Rat(1), {o.fwd, o.bwd}});
      if (o.to == verts[i]) rel.terms.push_back({Rat(-1), {o.bwd, o.fwd}});
    }
    for (long l = 1; l <= r[i]; ++l) {
      rel.terms.push_back({Rat(1),
                           {"w:" + verts[i] + ":" + std::to_string(l),
                            "z:" + verts[i] + ":" + std::to_string(l)}});
    }
    if (!rel.terms.empty()) q.relations.push_back(rel);
  }
  return q;
}

FramedQuiver nakajima_graph(const std::string& graph, const std::vector<long>& r) {
  if (graph == "jordan") {
    return nakajima_quiver({"0"}, {{"0", "0"}}, r);
  }
  if (graph.size() == 2 && graph[0] == 'a' && graph[1] >= '1' && graph[1] <= '9') {
    int n = graph[1] - '0';
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) edges.emplace_back(std::to_string(i), std::to_string(i + 1));
    return nakajima_quiver(verts, edges, r);
  }
  throw std::invalid_argument("unknown graph '" + graph + "' (expected a1..a9 or jordan)");
}

FramedQuiver chainsaw_quiver(int n, const std::vector<long>& r) {
  if (n < 1) throw std::invalid_argument("chainsaw needs at least one vertex");
  if (r.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("framing vector size mismatch");
  FramedQuiver q;
  q.framing = "inf";
  for (int i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i));
  q.vertices.push_back(q.framing);
  auto vx = [&](int i) { return std::to_string(((i % n) + n) % n); };
  for (int i = 0; i < n; ++i) {
    q.arrows.push_back({"B1:" + vx(i), vx(i), vx(i + 1), wt_q1()});
    q.arrows.push_back({"B2:" + vx(i), vx(i), vx(i), wt_q2()});
    for (long l = 1; l <= r[i]; ++l)
      q.arrows.push_back({"a:" + vx(i) + ":" + std::to_string(l), q.framing, vx(i), WeightForm()});
    for (long l = 1; l <= r[(i + 1) % n]; ++l)
      q.arrows.push_back({"b:" + vx(i) + ":" + std::to_string(l), vx(i), q.framing, wt_q1q2()});
  }
  for (int i = 0; i < n; ++i) {
    Relation rel;
    rel.id = "mu:" + vx(i);
    rel.terms.push_back({Rat(1), {"B2:" + vx(i), "B1:" + vx(i)}});
    rel.terms.push_back({Rat(-1), {"B1:" + vx(i), "B2:" + vx(i + 1)}});
    for (long l = 1; l <= r[(i + 1) % n]; ++l) {
      rel.terms.push_back({Rat(1),
                           {"b:" + vx(i) + ":" + std::to_string(l),
                            "a:" + vx(i + 1) + ":" + std::to_string(l)}});
    }
    q.relations.push_back(rel);
  }
  return q;
}

FramedQuiver blowup_quiver(long r) {
  if (r < 0) throw std::invalid_argument("negative framing multiplicity");
  FramedQuiver q;
  q.framing = "inf";
  q.vertices = {"0", "1", q.framing};
  q.arrows.push_back({"d", "0", "1", WeightForm()});
  q.arrows.push_back({"B1", "1", "0", wt_q1()});
  q.arrows.push_back({"B2", "1", "0", wt_q2()});
  for (long l = 1; l <= r; ++l) {
    q.arrows.push_back({"z:" + std::to_string(l), q.framing, "0", WeightForm()});
    q.arrows.push_back({"w:" + std::to_string(l), "1", q.framing, wt_q1q2()});
  }
  Relation rel;
  rel.id = "mu";
  rel.terms.push_back({Rat(1), {"B2", "d", "B1"}});
  rel.terms.push_back({Rat(-1), {"B1", "d", "B2"}});
  for (long l = 1; l <= r; ++l)
    rel.terms.push_back({Rat(1), {"w:" + std::to_string(l), "z:" + std::to_string(l)}});
  q.relations.push_back(rel);
  return q;
}

FramedQuiver flag_quiver(int n, long w) {
  if (n < 1) throw std::invalid_argument("flag quiver needs at least one vertex");
  if (w < 0) throw std::invalid_argument("negative framing multiplicity");
  FramedQuiver q;
  q.framing = "inf";
  for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  q.vertices.push_back(q.framing);
  for (int i = 1; i < n; ++i)
    q.arrows.push_back({"c" + std::to_string(i), std::to_string(i), std::to_string(i + 1), WeightForm()});
  for (long l = 1; l <= w; ++l)
    q.arrows.push_back({"b:" + std::to_string(l), "1", q.framing, WeightForm()});
  return q;
}

FramedQuiver single_vertex_quiver(long r) {
  if (r < 0) throw std::invalid_argument("negative framing multiplicity");
  FramedQuiver q;
  q.framing = "inf";
  q.vertices = {"0", q.framing};
  for (long l = 1; l <= r; ++l)
    q.arrows.push_back({"z:" + std::to_string(l), q.framing, "0", WeightForm()});
  return q;
}

std::string quiver_to_json(const FramedQuiver& q) {
  nlohmann::ordered_json j;
  j["vertices"] = q.vertices;
  j["framing"] = q.framing;
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : q.arrows) {
    nlohmann::ordered_json ja;
    ja["id"] = a.id;
    ja["from"] = a.from;
    ja["to"] = a.to;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    if (a.weight.constant() != 0) w["1"] = a.weight.constant();
    for (const auto& [v, c] : a.weight.coeffs()) w[VarTable::global().name(v)] = c;
    ja["weight"] = w;
    j["arrows"].push_back(ja);
  }
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& rel : q.relations) {
    nlohmann::ordered_json jr;
    jr["id"] = rel.id;
    jr["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : rel.terms) {
      nlohmann::ordered_json jt;
      jt["coeff"] = t.coeff.get_str();
      jt["path"] = t.path;
      jr["terms"].push_back(jt);
    }
    j["relations"].push_back(jr);
  }
  return j.dump(2) + "\n";
}

FramedQuiver quiver_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FramedQuiver q;
  q.vertices = j.at("vertices").get<std::vector<std::string>>();
  q.framing = j.at("framing").get<std::string>();
  for (const auto& ja : j.at("arrows")) {
    Arrow a;
    a.id = ja.at("id").get<std::string>();
    a.from = ja.at("from").get<std::string>();
    a.to = ja.at("to").get<std::string>();
    if (ja.contains("weight")) {
      for (const auto& [key, val] : ja.at("weight").items()) {
        long c = val.get<long>();
        if (key == "1") a.weight += WeightForm(c);
        else a.weight += WeightForm::of(var(key), c);
      }
    }
    q.arrows.push_back(a);
  }
  if (j.contains("relations")) {
    for (const auto& jr : j.at("relations")) {
      Relation rel;
      rel.id = jr.contains("id") ? jr.at("id").get<std::string>()
                                 : "rel" + std::to_string(q.relations.size() + 1);
      for (const auto& jt : jr.at("terms")) {
        RelationTerm t;
        t.coeff = Rat(jt.at("coeff").get<std::string>());
        t.coeff.canonicalize();
        t.path = jt.at("path").get<std::vector<std::string>>();
        rel.terms.push_back(t);
      }
      q.relations.push_back(rel);
    }
  }
  return q;
}

}  // namespace qwc
