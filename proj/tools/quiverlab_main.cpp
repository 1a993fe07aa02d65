// quiverlab: McKay graphs, root chambers, quiver moment maps, a Kempf-Ness
// solver, and coloured-partition counting behind one verb-style CLI.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "quiverlab/kempf_ness.hpp"
#include "quiverlab/serialize.hpp"

using namespace quiverlab;

namespace {

struct ZetaList {
  bool exact = false;
  std::vector<Rational> rat;
  std::vector<double> dbl;

  size_t size() const { return dbl.size(); }
};

ZetaList parse_zeta(const std::string& text) {
  ZetaList z;
  z.exact = text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
            text.find('E') == std::string::npos;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty zeta component");
    if (z.exact) {
      Rational q = rational_from_string(tok);
      z.rat.push_back(q);
      z.dbl.push_back(q.get_d());
    } else {
      z.dbl.push_back(std::stod(tok));
    }
  }
  if (z.dbl.empty()) throw std::invalid_argument("empty zeta vector");
  return z;
}

std::vector<long> parse_dims(const std::string& text) {
  std::vector<long> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
  return v;
}

std::string sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

void emit(const Json& j, const std::string& format, const std::string& csv,
          const std::string& pretty) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else if (format == "csv")
    std::cout << csv;
  else
    std::cout << pretty;
}

Json mckay_json(const GroupSpec& spec, const FiniteGroupData& g, const McKayGraph& graph) {
  Json j;
  j["schema"] = "quiverlab.mckay/1";
  j["group"] = spec.to_string();
  j["order"] = g.order;
  j["vertices"] = graph.d;
  j["adjacency"] = graph.adjacency;
  j["v0"] = graph.v0;
  long sumsq = 0;
  for (long v : graph.v0) sumsq += v * v;
  j["sum_v0_squared"] = sumsq;
  j["order_identity_holds"] = sumsq == g.order;
  Json classes = Json::array();
  for (const auto& c : g.classes)
    classes.push_back(Json{{"label", c.label}, {"size", c.size}});
  j["classes"] = std::move(classes);
  return j;
}

int cmd_mckay(const std::string& group, const std::string& format) {
  GroupSpec spec = GroupSpec::parse(group);
  FiniteGroupData g = load_group(spec);
  McKayGraph graph = mckay_graph(g);
  Json j = mckay_json(spec, g, graph);

  std::ostringstream csv, pretty;
  csv << "vertex,v0";
  for (int k = 0; k < graph.d; ++k) csv << ",a_" << k;
  csv << "\n";
  for (int k = 0; k < graph.d; ++k) {
    csv << k << "," << graph.v0[k];
    for (int l = 0; l < graph.d; ++l) csv << "," << graph.adjacency[k][l];
    csv << "\n";
  }

  pretty << "McKay graph of " << spec.to_string() << " (|Gamma| = " << g.order << ")\n";
  pretty << "vertices: " << graph.d << ", v0 = (";
  for (int k = 0; k < graph.d; ++k) pretty << (k ? "," : "") << graph.v0[k];
  pretty << "), sum v0^2 = " << j["sum_v0_squared"].get<long>() << "\n";
  pretty << "adjacency:\n";
  for (int k = 0; k < graph.d; ++k) {
    pretty << "  ";
    for (int l = 0; l < graph.d; ++l) pretty << graph.adjacency[k][l] << " ";
    pretty << "\n";
  }
  emit(j, format, csv.str(), pretty.str());
  return 0;
}

int cmd_params(const std::string& group, const std::string& v_text, int n_times_v0,
               const std::string& zr_text, const std::string& zc_text, int cone_n,
               const std::string& format) {
  GroupSpec spec = GroupSpec::parse(group);
  FiniteGroupData g = load_group(spec);
  McKayGraph graph = mckay_graph(g);
  CartanMatrix cartan = cartan_matrix(graph);

  std::vector<long> v;
  if (!v_text.empty())
    v = parse_dims(v_text);
  else
    for (long x : graph.v0) v.push_back(n_times_v0 * x);
  if (static_cast<int>(v.size()) != graph.d)
    throw std::invalid_argument("dimension vector length must match vertex count");

  ZetaList zr = parse_zeta(zr_text);
  if (zr.size() != static_cast<size_t>(graph.d))
    throw std::invalid_argument("zeta_R length must match vertex count");
  std::optional<ZetaList> zc;
  if (!zc_text.empty()) {
    zc = parse_zeta(zc_text);
    if (zc->size() != static_cast<size_t>(graph.d))
      throw std::invalid_argument("zeta_C length must match vertex count");
  }

  const bool exact = zr.exact && (!zc || zc->exact);
  Json j;
  j["schema"] = "quiverlab.params/1";
  j["group"] = spec.to_string();
  j["v"] = v;
  j["mode"] = exact ? "exact" : "float";

  auto roots = bounded_positive_roots(cartan, v);
  Json roots_json = Json::array();
  for (const auto& r : roots)
    roots_json.push_back(Json{{"theta", r.theta}, {"norm", r.norm}});
  j["roots"] = std::move(roots_json);

  GenericityResult gen;
  ChamberSignature sig;
  bool cplus;
  if (exact) {
    ExactParameter zeta;
    zeta.zeta_r = zr.rat;
    if (zc)
      for (const auto& q : zc->rat) zeta.zeta_c.push_back(RationalComplex(q));
    gen = is_generic(zeta, cartan, v);
    sig = chamber_signature(std::span<const Rational>(zr.rat), cartan, v);
    cplus = in_c_plus(std::span<const Rational>(zr.rat));
  } else {
    Parameter zeta;
    zeta.zeta_r = zr.dbl;
    if (zc)
      for (double x : zc->dbl) zeta.zeta_c.push_back({x, 0});
    gen = is_generic(zeta, cartan, v);
    sig = chamber_signature(std::span<const double>(zr.dbl), cartan, v);
    cplus = in_c_plus(std::span<const double>(zr.dbl));
  }

  j["generic"] = gen.generic;
  j["witness"] = gen.witness ? Json(gen.witness->theta) : Json(nullptr);
  std::string sig_str;
  for (int s : sig.signs) sig_str += sign_char(s);
  j["signature"] = sig_str;
  j["in_c_plus"] = cplus;
  if (cone_n >= 0) {
    Json cm;
    cm["n"] = cone_n;
    bool enumeration = exact
                           ? in_c_minus(std::span<const Rational>(zr.rat), cone_n, graph.v0)
                           : in_c_minus(std::span<const double>(zr.dbl), cone_n, graph.v0);
    cm["enumeration"] = enumeration;
    if (graph.d >= 2 && cone_n >= 1) {
      bool closed = exact ? in_c_minus_closed_form(std::span<const Rational>(zr.rat), cone_n,
                                                   graph.v0)
                          : in_c_minus_closed_form(std::span<const double>(zr.dbl), cone_n,
                                                   graph.v0);
      cm["closed_form"] = closed;
    } else {
      cm["closed_form"] = nullptr;
    }
    j["c_minus"] = std::move(cm);
  } else {
    j["c_minus"] = nullptr;
  }

  std::ostringstream csv, pretty;
  csv << "theta,norm,sign\n";
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t k = 0; k < roots[i].theta.size(); ++k)
      csv << (k ? " " : "") << roots[i].theta[k];
    csv << "," << roots[i].norm << "," << sign_char(sig.signs[i]) << "\n";
  }
  pretty << "parameters for " << spec.to_string() << ", v = (";
  for (size_t k = 0; k < v.size(); ++k) pretty << (k ? "," : "") << v[k];
  pretty << ")\n";
  pretty << "bounded positive roots: " << roots.size() << "\n";
  pretty << "generic: " << (gen.generic ? "yes" : "no");
  if (gen.witness) {
    pretty << " (witness theta = ";
    for (size_t k = 0; k < gen.witness->theta.size(); ++k)
      pretty << (k ? "," : "") << gen.witness->theta[k];
    pretty << ")";
  }
  pretty << "\nchamber signature: " << sig_str << "\n";
  pretty << "in C_+: " << (cplus ? "yes" : "no") << "\n";
  if (cone_n >= 0) {
    pretty << "in C_-(" << cone_n << "): enumeration "
           << (j["c_minus"]["enumeration"].get<bool>() ? "yes" : "no");
    if (!j["c_minus"]["closed_form"].is_null())
      pretty << ", closed form "
             << (j["c_minus"]["closed_form"].get<bool>() ? "yes" : "no");
    pretty << "\n";
  }
  emit(j, format, csv.str(), pretty.str());
  return 0;
}

int cmd_counts(int n, int d, const std::string& format) {
  IdentityReport rep = verify_identity(n, d);
  Json j;
  j["schema"] = "quiverlab.counts/1";
  j["n"] = n;
  j["d"] = d;
  j["ucy"] = rep.ucy;
  j["cy"] = rep.cy;
  j["equal"] = rep.equal;
  std::ostringstream csv, pretty;
  csv << "n,d,ucy,cy,equal\n"
      << n << "," << d << "," << rep.ucy << "," << rep.cy << "," << (rep.equal ? 1 : 0) << "\n";
  pretty << "UCY(" << n << "," << d << ") = " << rep.ucy << ", CY(" << n << "," << d
         << ") = " << rep.cy << (rep.equal ? "  [equal]" : "  [MISMATCH]") << "\n";
  emit(j, format, csv.str(), pretty.str());
  return rep.equal ? 0 : 2;
}

int cmd_fixedpoints(int n, int d, const std::string& which, const std::string& format) {
  Json j;
  j["schema"] = "quiverlab.fixedpoints/1";
  j["n"] = n;
  j["d"] = d;
  j["which"] = which;
  std::ostringstream csv, pretty;
  if (which == "gamma-hilb") {
    auto list = enumerate_ucy(n, d);
    Json arr = Json::array();
    for (const auto& delta : list) arr.push_back(delta.to_string());
    j["count"] = list.size();
    j["diagrams"] = std::move(arr);
    csv << "diagram\n";
    for (const auto& delta : list) csv << "\"" << delta.to_string() << "\"\n";
    pretty << list.size() << " uniformly coloured diagrams (" << n << " boxes per colour, d="
           << d << "):\n";
    for (const auto& delta : list) pretty << "  (" << delta.to_string() << ")\n";
  } else if (which == "hilb-res") {
    auto list = enumerate_cy(n, d);
    Json arr = Json::array();
    for (const auto& mp : list) arr.push_back(mp.to_string());
    j["count"] = list.size();
    j["multipartitions"] = std::move(arr);
    csv << "multipartition\n";
    for (const auto& mp : list) csv << "\"" << mp.to_string() << "\"\n";
    pretty << list.size() << " collections of " << d << " diagrams with " << n
           << " total boxes:\n";
    for (const auto& mp : list) pretty << "  (" << mp.to_string() << ")\n";
  } else {
    throw std::invalid_argument("--which must be gamma-hilb or hilb-res");
  }
  emit(j, format, csv.str(), pretty.str());
  return 0;
}

int cmd_bijection(int n, int d, const std::string& format) {
  auto ucy = enumerate_ucy(n, d);
  auto cy = enumerate_cy(n, d);
  std::set<Multipartition> quotients;
  Json pairs = Json::array();
  std::ostringstream csv;
  csv << "diagram,core,quotient\n";
  bool all_empty_core = true;
  for (const auto& delta : ucy) {
    CoreQuotient cq = core_and_quotient(delta, d);
    quotients.insert(cq.quotient);
    if (!cq.core.empty()) all_empty_core = false;
    pairs.push_back(Json{{"diagram", delta.to_string()},
                         {"core", cq.core.to_string()},
                         {"quotient", cq.quotient.to_string()}});
    csv << "\"" << delta.to_string() << "\",\"" << cq.core.to_string() << "\",\""
        << cq.quotient.to_string() << "\"\n";
  }
  bool bijective = all_empty_core && quotients.size() == ucy.size() && ucy.size() == cy.size();
  Json j;
  j["schema"] = "quiverlab.bijection/1";
  j["n"] = n;
  j["d"] = d;
  j["ucy_count"] = ucy.size();
  j["cy_count"] = cy.size();
  j["bijective"] = bijective;
  j["pairs"] = std::move(pairs);
  std::ostringstream pretty;
  pretty << "quotient map on UCY(" << n << "," << d << "): " << ucy.size() << " diagrams, "
         << quotients.size() << " distinct quotients, CY = " << cy.size()
         << (bijective ? "  [bijective]" : "  [NOT bijective]") << "\n";
  for (const auto& p : j["pairs"])
    pretty << "  (" << p["diagram"].get<std::string>() << ") -> core ("
           << p["core"].get<std::string>() << "), quotient ("
           << p["quotient"].get<std::string>() << ")\n";
  emit(j, format, csv.str(), pretty.str());
  return bijective ? 0 : 2;
}

int cmd_solve(const std::string& diagram_text, int d, const std::string& zr_text,
              const SolveOptions& opts, bool tangent, const std::string& format) {
  YoungDiagram delta = YoungDiagram::parse(diagram_text);
  GradedRepresentation grep = rep_from_diagram(delta, d);
  NumericRep rep = to_numeric(grep.rep);
  ZetaList zr = parse_zeta(zr_text);
  if (zr.size() != static_cast<size_t>(d))
    throw std::invalid_argument("zeta_R length must equal d");

  SolveReport report = solve_real_moment(rep, zr.dbl, opts);
  Json j = report_to_json(report);
  j["j0i0"] = j0i0_residual(report.solution);
  if (tangent && report.status == SolveStatus::converged) {
    Parameter zeta;
    zeta.zeta_r = zr.dbl;
    zeta.zeta_c.assign(d, {0, 0});
    j["tangent_dimension"] = tangent_dimension(report, zeta);
  } else {
    j["tangent_dimension"] = nullptr;
  }

  std::ostringstream csv, pretty;
  csv << "status,final_residual,iterations,group_log_norm\n"
      << to_string(report.status) << "," << report.final_residual << "," << report.iterations
      << "," << report.group_log_norm << "\n";
  pretty << "solve diagram (" << delta.to_string() << "), d=" << d << ": "
         << to_string(report.status) << " after " << report.iterations
         << " iterations, residual " << report.final_residual << "\n";
  if (!j["tangent_dimension"].is_null())
    pretty << "tangent dimension: " << j["tangent_dimension"].get<int>() << "\n";
  emit(j, format, csv.str(), pretty.str());

  switch (report.status) {
    case SolveStatus::converged: return 0;
    case SolveStatus::diverged: return 3;
    case SolveStatus::max_iters: return 4;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiverlab: McKay graphs, quiver-variety parameters, moment-map solves, "
               "and coloured Young diagram combinatorics"};
  app.require_subcommand(1);

  std::string format = "pretty";
  std::string config_path;
  if (const char* env = std::getenv("QUIVERLAB_CONFIG")) config_path = env;
  app.add_option("--config", config_path, "JSON config file with default option values");

  SolveOptions opts;

  auto* mckay = app.add_subcommand("mckay", "McKay graph of a finite SL(2,C) subgroup");
  std::string group;
  mckay->add_option("group", group, "group kind, e.g. cyclic:3, binary_icosahedral")->required();

  auto* params = app.add_subcommand("params", "roots, genericity, chamber and C_+/C_-(n) tests");
  std::string v_text, zr_text, zc_text;
  int n_times = 1, cone_n = -1;
  params->add_option("group", group, "group kind")->required();
  params->add_option("--v", v_text, "dimension vector, comma separated (default n*v0)");
  params->add_option("--scale", n_times, "v = scale * v0 when --v is absent");
  params->add_option("--zr", zr_text, "zeta_R, comma separated rationals or decimals")
      ->required();
  params->add_option("--zc", zc_text, "zeta_C (real parts), comma separated");
  params->add_option("--n", cone_n, "test membership in C_-(n)");

  auto* counts = app.add_subcommand("counts", "UCY(n,d) and CY(n,d) by enumeration");
  int n = 1, d = 1;
  counts->add_option("--n", n, "boxes per colour / total boxes")->required();
  counts->add_option("--d", d, "number of colours / components")->required();

  auto* fixed = app.add_subcommand("fixedpoints", "torus fixed-point lists");
  std::string which = "gamma-hilb";
  fixed->add_option("--n", n, "size parameter")->required();
  fixed->add_option("--d", d, "number of colours")->required();
  fixed->add_option("--which", which, "gamma-hilb (UCY) or hilb-res (CY)");

  auto* bij = app.add_subcommand("bijection", "core/quotient bijection UCY(n,d) -> CY(n,d)");
  bij->add_option("--n", n, "boxes per colour")->required();
  bij->add_option("--d", d, "number of colours")->required();

  auto* solve = app.add_subcommand("solve", "Kempf-Ness solve from a diagram representation");
  std::string diagram;
  bool tangent = false;
  solve->add_option("--diagram", diagram, "Young diagram, comma separated parts ('' = empty)");
  solve->add_option("--d", d, "number of colours")->required();
  solve->add_option("--zr", zr_text, "zeta_R, comma separated")->required();
  auto* tol_opt = solve->add_option("--tol", opts.tol, "residual tolerance");
  auto* iters_opt = solve->add_option("--max-iters", opts.max_iters, "iteration cap");
  auto* step_opt = solve->add_option("--step", opts.step, "initial step size");
  solve->add_flag("--tangent", tangent, "also report the tangent dimension");

  auto* fmt_opt =
      app.add_option("--format", format, "output format: json, csv or pretty")
          ->check(CLI::IsMember({"json", "csv", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw std::invalid_argument("cannot open config file: " + config_path);
      Json cfg = Json::parse(f);
      if (cfg.contains("tol") && tol_opt->count() == 0) opts.tol = cfg["tol"].get<double>();
      if (cfg.contains("max_iters") && iters_opt->count() == 0)
        opts.max_iters = cfg["max_iters"].get<int>();
      if (cfg.contains("step") && step_opt->count() == 0) opts.step = cfg["step"].get<double>();
      if (cfg.contains("format") && fmt_opt->count() == 0)
        format = cfg["format"].get<std::string>();
    }

    if (mckay->parsed()) return cmd_mckay(group, format);
    if (params->parsed())
      return cmd_params(group, v_text, n_times, zr_text, zc_text, cone_n, format);
    if (counts->parsed()) return cmd_counts(n, d, format);
    if (fixed->parsed()) return cmd_fixedpoints(n, d, which, format);
    if (bij->parsed()) return cmd_bijection(n, d, format);
    if (solve->parsed()) return cmd_solve(diagram, d, zr_text, opts, tangent, format);
  } catch (const DataCorruptionError& e) {
    std::cout << Json{{"schema", "quiverlab.error/1"}, {"error", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << Json{{"schema", "quiverlab.error/1"}, {"error", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 1;
}
