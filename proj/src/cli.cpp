#include "qwc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qwc/localization.hpp"
#include "qwc/stability.hpp"
#include "qwc/wallcross.hpp"

namespace qwc::cli {

namespace {

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (long v : parse_longs(text)) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<Rat> parse_rats(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rat r(item);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string rats_to_string(const std::vector<Rat>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  return os.str();
}

std::string longs_to_string(const DimVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

GammaSeries make_gamma(const std::string& spec, int max_d) {
  if (spec == "handsaw") return GammaSeries::handsaw_a1(max_d);
  if (spec == "symbolic") return GammaSeries::symbolic(max_d);
  if (spec == "single") return GammaSeries::single_framing(max_d);
  if (spec.rfind("table:", 0) == 0) {
    std::map<int, RationalFunction> values;
    std::istringstream in(read_file(spec.substr(6)));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos) throw std::runtime_error("gamma table line lacks a tab: " + line);
      values[std::stoi(line.substr(0, tab))] = parse_rational_function(line.substr(tab + 1));
    }
    return GammaSeries::table(std::move(values));
  }
  throw std::runtime_error("unknown gamma spec '" + spec + "'");
}

FramedQuiver builtin_quiver(const std::string& kind, const std::string& graph,
                            const std::vector<long>& r, int n, long w) {
  if (kind == "nakajima") return nakajima_graph(graph, r);
  if (kind == "chainsaw") return chainsaw_quiver(n, r);
  if (kind == "blowup") return blowup_quiver(w);
  if (kind == "flag") return flag_quiver(n, w);
  if (kind == "single-vertex") return single_vertex_quiver(w);
  throw std::runtime_error("unknown builtin kind '" + kind + "'");
}

FixedPointModel parse_model(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "point") {
    FixedPointModel m;
    m.points.push_back(FixedPoint{"pt", {}, {}});
    return m;
  }
  if (kind == "gr" || kind == "span") {
    auto nums = parse_longs(rest);
    if (nums.size() != 2) throw std::runtime_error("model spec needs k,n");
    return kind == "gr" ? grassmannian_model(static_cast<int>(nums[0]), static_cast<int>(nums[1]))
                        : framed_span_model(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  if (kind == "flag") {
    auto second = rest.find(':');
    if (second == std::string::npos) throw std::runtime_error("flag model spec needs dims:n");
    auto dims = parse_ints(rest.substr(0, second));
    int n = std::stoi(rest.substr(second + 1));
    return flag_model(dims, n);
  }
  throw std::runtime_error("unknown model '" + spec + "'");
}

Int max_denominator_from_env() {
  const char* env = std::getenv("WC_MAX_DENOM");
  if (!env) return Int(1000000);
  return Int(env);
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Result result;
  std::ostringstream out;

  CLI::App app{"exact wall-crossing toolkit for framed quiver moduli"};
  app.require_subcommand(1);

  // validate
  std::string q_path;
  auto* validate_cmd = app.add_subcommand("validate", "check quiver file invariants");
  validate_cmd->add_option("quiver", q_path)->required();

  // walls
  std::string walls_path, walls_alpha;
  auto* walls_cmd = app.add_subcommand("walls", "enumerate wall hyperplanes");
  walls_cmd->add_option("quiver", walls_path)->required();
  walls_cmd->add_option("--alpha", walls_alpha)->required();

  // params-find
  std::string pf_alpha, pf_beta, pf_zetabar, pf_kI;
  int pf_ell = 0, pf_zero = 0, pf_L = -1;
  auto* pf_cmd = app.add_subcommand("params-find", "search certified stability parameters");
  pf_cmd->add_option("--alpha", pf_alpha)->required();
  pf_cmd->add_option("--wall", pf_beta)->required();
  pf_cmd->add_option("--ell", pf_ell)->required();
  pf_cmd->add_option("--zero", pf_zero);
  pf_cmd->add_option("--zetabar", pf_zetabar)->required();
  pf_cmd->add_option("--kI", pf_kI);
  pf_cmd->add_option("--L", pf_L);

  // params-check
  std::string pc_alpha, pc_beta, pc_zetabar, pc_kI, pc_zp, pc_zm, pc_eta;
  int pc_ell = 0, pc_zero = 0, pc_L = -1;
  auto* pc_cmd = app.add_subcommand("params-check", "re-run the four stability predicates");
  pc_cmd->add_option("--alpha", pc_alpha)->required();
  pc_cmd->add_option("--wall", pc_beta)->required();
  pc_cmd->add_option("--ell", pc_ell)->required();
  pc_cmd->add_option("--zero", pc_zero);
  pc_cmd->add_option("--zetabar", pc_zetabar)->required();
  pc_cmd->add_option("--kI", pc_kI);
  pc_cmd->add_option("--L", pc_L);
  pc_cmd->add_option("--zeta-plus", pc_zp)->required();
  pc_cmd->add_option("--zeta-minus", pc_zm)->required();
  pc_cmd->add_option("--eta", pc_eta)->required();

  // dec-enum
  long de_alpha0 = 0, de_beta0 = 1;
  int de_j = -1;
  auto* de_cmd = app.add_subcommand("dec-enum", "enumerate decomposition data");
  de_cmd->add_option("--alpha0", de_alpha0)->required();
  de_cmd->add_option("--beta0", de_beta0);
  de_cmd->add_option("--j", de_j);

  // wc-coeffs
  std::string wc_path, wc_alpha, wc_beta, wc_zero, wc_gamma = "symbolic";
  bool wc_symbolic_binf = false;
  auto* wc_cmd = app.add_subcommand("wc-coeffs", "wall-crossing coefficients");
  wc_cmd->add_option("quiver", wc_path)->required();
  wc_cmd->add_option("--alpha", wc_alpha)->required();
  wc_cmd->add_option("--beta", wc_beta)->required();
  wc_cmd->add_option("--zero", wc_zero)->required();
  wc_cmd->add_option("--gamma", wc_gamma);
  wc_cmd->add_flag("--symbolic-binf", wc_symbolic_binf);

  // gamma-check
  int gc_d = 1;
  long gc_beta0 = 1;
  std::string gc_gamma = "handsaw";
  auto* gc_cmd = app.add_subcommand("gamma-check", "one-arrow gamma recursion residual");
  gc_cmd->add_option("--d", gc_d)->required();
  gc_cmd->add_option("--beta0", gc_beta0);
  gc_cmd->add_option("--gamma", gc_gamma);

  // identity-check
  auto* ic_cmd = app.add_subcommand("identity-check", "NB identities and experiments");
  ic_cmd->require_subcommand(1);
  std::string sv_d;
  long sv_beta0 = 1, sv_n = 0;
  auto* sv_cmd = ic_cmd->add_subcommand("s-vanishing", "set-partition vanishing sum");
  sv_cmd->add_option("--d", sv_d)->required();
  sv_cmd->add_option("--beta0", sv_beta0);
  sv_cmd->add_option("--n", sv_n)->required();
  int ps_d = 2;
  long ps_beta0 = 1;
  std::string ps_gamma = "handsaw";
  auto* ps_cmd = ic_cmd->add_subcommand("proper-subset", "proper-subset recursion sum");
  ps_cmd->add_option("--d", ps_d)->required();
  ps_cmd->add_option("--beta0", ps_beta0);
  ps_cmd->add_option("--gamma", ps_gamma);
  long bq_alpha0 = 1, bq_beta0 = 1, bq_i = 0;
  std::string bq_gamma = "handsaw", bq_binf = "symbolic";
  auto* bq_cmd = ic_cmd->add_subcommand("binomial-question", "open-question experiment");
  bq_cmd->add_option("--alpha0", bq_alpha0)->required();
  bq_cmd->add_option("--beta0", bq_beta0);
  bq_cmd->add_option("--i", bq_i)->required();
  bq_cmd->add_option("--gamma", bq_gamma);
  bq_cmd->add_option("--binf", bq_binf);

  // localize
  std::string lz_model, lz_integrand = "tangent", lz_twist = "theta", lz_quiver, lz_assign,
              lz_framing;
  auto* lz_cmd = app.add_subcommand("localize", "Atiyah-Bott fixed point integral");
  lz_cmd->add_option("--model", lz_model)->required();
  lz_cmd->add_option("--integrand", lz_integrand);
  lz_cmd->add_option("--twist", lz_twist);
  lz_cmd->add_option("--quiver", lz_quiver);
  lz_cmd->add_option("--assign", lz_assign);
  lz_cmd->add_option("--framing", lz_framing);

  // experiment
  auto* ex_cmd = app.add_subcommand("experiment", "dual-path experiments");
  ex_cmd->require_subcommand(1);
  long ad_r = 1, ad_alpha0 = 1;
  auto* ad_cmd = ex_cmd->add_subcommand("adjoint", "adjoint wall-crossing dual path check");
  ad_cmd->add_option("--r", ad_r)->required();
  ad_cmd->add_option("--alpha0", ad_alpha0)->required();

  // emit
  std::string em_kind, em_graph = "a1";
  std::string em_r = "1";
  int em_n = 1;
  long em_w = 1;
  auto* em_cmd = app.add_subcommand("emit", "print a builtin quiver as JSON");
  em_cmd->add_option("--kind", em_kind)->required();
  em_cmd->add_option("--graph", em_graph);
  em_cmd->add_option("--r", em_r);
  em_cmd->add_option("--n", em_n);
  em_cmd->add_option("--w", em_w);

  std::vector<const char*> argv;
  argv.push_back("qwc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = 2;
    result.out = std::string("error: ") + e.what() + "\n";
    return result;
  }

  try {
    if (*validate_cmd) {
      FramedQuiver q = quiver_from_json(read_file(q_path));
      auto bad = validate(q);
      if (bad.empty()) {
        out << "ok\n";
      } else {
        for (const auto& b : bad) out << "violation: " << b << "\n";
        result.code = 1;
      }
    } else if (*walls_cmd) {
      FramedQuiver q = quiver_from_json(read_file(walls_path));
      DimVector alpha = parse_longs(walls_alpha);
      if (alpha.size() != q.internal_vertices().size())
        throw std::runtime_error("alpha length does not match the internal vertex count");
      for (const auto& w : enumerate_walls(alpha)) out << longs_to_string(w) << "\n";
    } else if (*pf_cmd || *pc_cmd) {
      bool finding = static_cast<bool>(*pf_cmd);
      DimVector alpha = parse_longs(finding ? pf_alpha : pc_alpha);
      Wall wall = parse_longs(finding ? pf_beta : pc_beta);
      int zero = finding ? pf_zero : pc_zero;
      int ell = finding ? pf_ell : pc_ell;
      int L = finding ? pf_L : pc_L;
      std::string kI_text = finding ? pf_kI : pc_kI;
      StabilityVector zetabar = parse_rats(finding ? pf_zetabar : pc_zetabar);
      if (L < 0) L = static_cast<int>(alpha[zero]);
      std::vector<int> kI;
      if (kI_text.empty()) {
        for (int k = 1; k <= alpha[zero]; ++k) kI.push_back(k);
      } else {
        kI = parse_ints(kI_text);
      }
      EnhancedDim flag(alpha, zero, kI, L);
      if (finding) {
        auto res = find_parameters(wall, ell, alpha, flag, zetabar, max_denominator_from_env());
        if (!res.ok) {
          out << "failure: " << res.failure << "\n";
          result.code = 1;
        } else {
          out << "zeta+: " << rats_to_string(res.zeta_plus) << "\n";
          out << "zeta-: " << rats_to_string(res.zeta_minus) << "\n";
          out << "eta: " << rats_to_string(res.eta) << "\n";
        }
      } else {
        SlopeParams plus{parse_rats(pc_zp), parse_rats(pc_eta)};
        SlopeParams minus{parse_rats(pc_zm), parse_rats(pc_eta)};
        bool a_plus = cond_a(plus, wall, flag, zetabar);
        bool a_minus = cond_a(minus, wall, flag, zetabar);
        bool b_plus = cond_b(plus, wall, ell, flag);
        bool two = two_stability(plus.eta, alpha[zero], wall[zero]);
        bool c_ok = cond_c(plus, flag);
        out << "cond_a(zeta+): " << (a_plus ? "pass" : "fail") << "\n";
        out << "cond_a(zeta-): " << (a_minus ? "pass" : "fail") << "\n";
        out << "cond_b(zeta+): " << (b_plus ? "pass" : "fail") << "\n";
        out << "two_stability: " << (two ? "pass" : "fail") << "\n";
        out << "cond_c: " << (c_ok ? "pass" : "fail") << "\n";
        if (!(a_plus && a_minus && b_plus && two && c_ok)) result.code = 1;
      }
    } else if (*de_cmd) {
      if (de_j > 0) {
        auto data = dec_sets(de_alpha0, de_beta0, de_j);
        for (const auto& d : data) out << d.to_string() << "\n";
        out << "count: " << data.size() << "\n";
      } else {
        auto data = dec_all(de_alpha0, de_beta0);
        for (const auto& d : data) out << d.to_string() << "\n";
        out << "count: " << data.size() << "\n";
      }
    } else if (*wc_cmd) {
      FramedQuiver q = quiver_from_json(read_file(wc_path));
      DimVector alpha = parse_longs(wc_alpha);
      Wall beta = parse_longs(wc_beta);
      int zero = q.internal_index(wc_zero);
      if (zero < 0) throw std::runtime_error("zero vertex '" + wc_zero + "' is not internal");
      RationalFunction binf = wc_symbolic_binf
                                  ? RationalFunction::variable(var("binf"))
                                  : RationalFunction(Rat(beta_bar_infinity(q, beta)));
      WallCrossingContext ctx = make_context(alpha, beta, zero, binf);
      int max_d = static_cast<int>(ctx.alpha0() / ctx.beta0());
      GammaSeries gamma = make_gamma(wc_gamma, max_d);
      auto terms = wall_cross_terms(ctx, gamma);
      std::map<long, std::pair<DimVector, RationalFunction>> grouped;
      for (const auto& t : terms) {
        out << t.datum.to_string() << "  k=" << t.k << "  " << to_string(t.coefficient) << "\n";
        auto [it, inserted] = grouped.emplace(t.k, std::make_pair(t.target, t.coefficient));
        if (!inserted) it->second.second += t.coefficient;
      }
      out << "-- grouped by k --\n";
      for (const auto& [k, entry] : grouped)
        out << "k=" << k << "  target=" << longs_to_string(entry.first) << "  "
            << to_string(entry.second) << "\n";
    } else if (*gc_cmd) {
      GammaSeries gamma = make_gamma(gc_gamma, gc_d);
      RationalFunction res = gamma_consistency(gamma, gc_d, gc_beta0);
      out << to_string(res) << "\n";
      if (!res.is_zero()) result.code = 1;
    } else if (*sv_cmd) {
      Int v = s_partition_vanishing(parse_longs(sv_d), sv_beta0, sv_n);
      out << v.get_str() << "\n";
      if (v != 0) result.code = 1;
    } else if (*ps_cmd) {
      GammaSeries gamma = make_gamma(ps_gamma, ps_d);
      RationalFunction res = proper_subset_vanishing(ps_d, ps_beta0, gamma);
      out << to_string(res) << "\n";
      if (!res.is_zero()) result.code = 1;
    } else if (*bq_cmd) {
      GammaSeries gamma = make_gamma(bq_gamma, static_cast<int>(bq_alpha0 / bq_beta0));
      RationalFunction binf = bq_binf == "symbolic" ? RationalFunction::variable(var("binf"))
                                                    : RationalFunction(Rat(std::stol(bq_binf)));
      auto ex = binomial_question_experiment(bq_alpha0, bq_beta0, bq_i, gamma, binf);
      out << "lhs: " << to_string(ex.lhs) << "\n";
      out << "rhs: " << to_string(ex.rhs) << "\n";
      out << "equal: " << (ex.equal ? "yes" : "no") << "\n";
      if (!ex.equal) result.code = 1;
    } else if (*lz_cmd) {
      FixedPointModel model = parse_model(lz_model);
      std::optional<Var> twist;
      if (lz_twist == "theta") twist = var("theta");
      else if (lz_twist != "none") throw std::runtime_error("twist must be theta or none");
      std::vector<KClass> integrand;
      if (lz_integrand == "tangent") {
        for (const auto& p : model.points) integrand.push_back(tangent_class(p));
      } else if (lz_integrand == "empty") {
        integrand.assign(model.points.size(), KClass{});
      } else if (lz_integrand == "lambda") {
        if (lz_quiver.empty()) throw std::runtime_error("--integrand lambda requires --quiver");
        FramedQuiver q = quiver_from_json(read_file(lz_quiver));
        std::map<std::string, std::string> assignment;
        if (lz_assign.empty()) {
          auto internals = q.internal_vertices();
          if (internals.size() != 1)
            throw std::runtime_error("--assign required for quivers with several vertices");
          assignment[internals.front()] = "taut";
        } else {
          std::stringstream ss(lz_assign);
          std::string item;
          while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw std::runtime_error("--assign expects v=BUNDLE pairs");
            assignment[item.substr(0, eq)] = item.substr(eq + 1);
          }
        }
        std::vector<WeightForm> fw;
        if (lz_framing.empty()) {
          long count = 0;
          for (const auto& a : q.arrows)
            if (a.from == q.framing || a.to == q.framing) ++count;
          for (long l = 1; l <= count; ++l) fw.push_back(WeightForm::of(var("x" + std::to_string(l))));
        } else {
          std::stringstream ss(lz_framing);
          std::string item;
          while (std::getline(ss, item, ',')) fw.push_back(WeightForm::of(var(item)));
        }
        integrand = lambda_class(q, model, assignment, fw);
      } else {
        throw std::runtime_error("unknown integrand '" + lz_integrand + "'");
      }
      out << to_string(ab_integrate(model, integrand, twist)) << "\n";
    } else if (*ad_cmd) {
      auto ex = adjoint_experiment(ad_r, ad_alpha0);
      out << "lhs: " << to_string(ex.lhs) << "\n";
      out << "rhs: " << to_string(ex.rhs) << "\n";
      out << "equal: " << (ex.equal ? "yes" : "no") << "\n";
      if (!ex.equal) result.code = 1;
    } else if (*em_cmd) {
      out << quiver_to_json(builtin_quiver(em_kind, em_graph, parse_longs(em_r), em_n, em_w));
    }
  } catch (const std::exception& e) {
    result.code = 2;
    result.out = std::string("error: ") + e.what() + "\n";
    return result;
  }

  result.out = out.str();
  return result;
}

}  // namespace qwc::cli
