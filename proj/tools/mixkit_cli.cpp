#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "mixkit/audit.hpp"
#include "mixkit/electrical.hpp"
#include "mixkit/graph_io.hpp"
#include "mixkit/harness.hpp"
#include "mixkit/mixing.hpp"
#include "mixkit/spectral.hpp"

using nlohmann::json;
using namespace mixkit;

namespace {

void emit(const json& j, const std::string& out_dir, const std::string& name,
          const std::string& format) {
  if (out_dir.empty()) {
    std::cout << j.dump(2) << std::endl;
    return;
  }
  std::filesystem::create_directories(out_dir);
  std::ofstream f(out_dir + "/" + name + "." + (format == "csv" ? "json" : format));
  f << j.dump(2) << '\n';
  std::cout << "wrote " << out_dir << "/" << name << std::endl;
}

std::vector<Index> parse_index_list(const std::string& s) {
  std::vector<Index> out;
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInfinityP;
  return std::stod(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted-network mixing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string params_file, out_dir, format = "json", graph_file;
  unsigned long long seed = 1;
  long budget = 100000;
  app.add_option("--params", params_file, "family parameter file");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--budget", budget, "vertex budget");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  // generate
  auto* gen = app.add_subcommand("generate", "build a family or auxiliary graph");
  int gen_n = 2, gen_side = 4, gen_dim = 2;
  bool gen_primed = false;
  std::string gen_kind = "family";
  gen->add_option("--kind", gen_kind, "family|torus|hypercube")
      ->check(CLI::IsMember({"family", "torus", "hypercube"}));
  gen->add_option("--n", gen_n, "island count");
  gen->add_flag("--primed", gen_primed, "build the 2-stretched variant");
  gen->add_option("--side", gen_side, "torus side");
  gen->add_option("--dim", gen_dim, "torus/hypercube dimension");

  // audit
  auto* aud = app.add_subcommand("audit", "exact size arithmetic at true parameters");
  int aud_n = 2;
  aud->add_option("--n", aud_n, "island count")->required();

  // measure
  auto* mea = app.add_subcommand("measure", "mixing time of a stored graph");
  std::string mea_p = "1", mea_starts;
  double mea_eps = 0.5;
  long mea_tcap = 10000000;
  mea->add_option("--graph", graph_file, "graph file")->required();
  mea->add_option("--p", mea_p, "1|2|inf or any p >= 1");
  mea->add_option("--eps", mea_eps, "threshold");
  mea->add_option("--starts", mea_starts, "comma list, default all");
  mea->add_option("--t-cap", mea_tcap, "step cap");

  // spectral
  auto* spe = app.add_subcommand("spectral", "spectral quantities of a stored graph");
  std::string spe_q = "gap";
  spe->add_option("--graph", graph_file, "graph file")->required();
  spe->add_option("--quantity", spe_q, "gap|cheeger|sweep|profile|rho")
      ->check(CLI::IsMember({"gap", "cheeger", "sweep", "profile", "rho"}));

  // conductance
  auto* con = app.add_subcommand("conductance", "effective conductance");
  int con_source = 0;
  std::string con_sinks;
  con->add_option("--graph", graph_file)->required();
  con->add_option("--source", con_source)->required();
  con->add_option("--sinks", con_sinks)->required();

  // harmonic
  auto* har = app.add_subcommand("harmonic", "harmonic measure on a boundary");
  int har_start = 0;
  std::string har_boundary;
  har->add_option("--graph", graph_file)->required();
  har->add_option("--start", har_start)->required();
  har->add_option("--boundary", har_boundary)->required();

  // tree-lemma
  auto* tre = app.add_subcommand("tree-lemma", "stretched-tree escape split");
  double tre_q = 1.0;
  int tre_depth = 30, tre_left = 1, tre_right = 2;
  tre->add_option("--q", tre_q, "stretch unit (scales both arms)");
  tre->add_option("--depth", tre_depth);
  tre->add_option("--left-stretch", tre_left);
  tre->add_option("--right-stretch", tre_right);

  // experiment
  auto* exp = app.add_subcommand("experiment", "orchestrated experiment suites");
  std::string exp_kind = "sensitivity", exp_ns = "2,3,4";
  exp->add_option("--kind", exp_kind, "sensitivity|bounds|robustness")
      ->check(CLI::IsMember({"sensitivity", "bounds", "robustness"}));
  exp->add_option("--ns", exp_ns, "family sizes, comma list");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      WeightedGraph g;
      json info;
      if (gen_kind == "torus") {
        g = torus(gen_side, gen_dim);
      } else if (gen_kind == "hypercube") {
        g = hypercube(gen_dim);
      } else {
        FamilyParams p = params_file.empty() ? FamilyParams::scaled_defaults(gen_n, seed)
                                             : parse_family_params(params_file);
        p.vertex_budget = budget;
        LabeledFamily fam = build_family(p, gen_primed);
        g = fam.graph;
        info["n"] = p.n;
        info["primed"] = gen_primed;
        info["max_degree"] = g.max_degree();
      }
      info["vertices"] = g.num_vertices();
      info["edges"] = g.num_edges();
      info["graph_hash"] = graph_content_hash(g);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_graph_file(out_dir + "/graph.txt", g);
        write_labels_file(out_dir + "/graph.labels", g);
        info["graph_file"] = out_dir + "/graph.txt";
      }
      std::cout << info.dump(2) << std::endl;
      return 0;
    }
    if (aud->parsed()) {
      SizeAuditReport rep = paper_size_audit(aud_n);
      json rows = json::array();
      for (const auto& r : rep.rows)
        rows.push_back(json{{"island", r.island},
                            {"q", r.q},
                            {"gmp", r.gmp},
                            {"bmp", r.bmp},
                            {"gl", r.gl},
                            {"bl", r.bl},
                            {"s", r.s},
                            {"w", r.w},
                            {"bl_bounds_ok", r.bl_bounds_ok},
                            {"s_bounds_ok", r.s_bounds_ok},
                            {"w_bounds_ok", r.w_bounds_ok},
                            {"gl_over_pow", r.gl_over_pow}});
      json j{{"n", rep.n},
             {"rows", rows},
             {"total_vertices", rep.total_vertices},
             {"size_gn_ok", rep.size_gn_ok},
             {"vn_lower_ratio", rep.vn_lower_ratio},
             {"all_ok", rep.all_ok}};
      emit(j, out_dir, "audit", format);
      return rep.all_ok ? 0 : 1;
    }
    if (mea->parsed()) {
      WeightedGraph g = read_graph_file(graph_file);
      MixingOptions opts;
      if (!mea_starts.empty()) opts.starts = parse_index_list(mea_starts);
      opts.t_cap = mea_tcap;
      MixingCurve curve = mixing_curve(lazy_kernel(g), parse_p(mea_p), mea_eps, opts);
      json j{{"quantity", "tau_p"},
             {"p", mea_p},
             {"eps", mea_eps},
             {"value", curve.tau},
             {"method", "forward-evolution"},
             {"graph_hash", graph_content_hash(g)}};
      if (format == "csv") {
        std::ostringstream csv;
        csv << "t,dist\n";
        for (std::size_t t = 0; t < curve.dist.size(); ++t) csv << t << ',' << curve.dist[t] << '\n';
        j["curve_csv"] = csv.str();
      }
      emit(j, out_dir, "measure", format);
      return 0;
    }
    if (spe->parsed()) {
      WeightedGraph g = read_graph_file(graph_file);
      json j{{"graph_hash", graph_content_hash(g)}, {"quantity", spe_q}};
      if (spe_q == "gap") {
        j["value"] = spectral_gap(g);
        j["method"] = g.num_vertices() <= 3000 ? "dense-exact" : "iterative";
      } else if (spe_q == "cheeger") {
        CheegerResult c = cheeger(g);
        j["value"] = c.phi;
        j["argmin"] = c.argmin.indices();
        j["method"] = "exhaustive";
      } else if (spe_q == "sweep") {
        j["value"] = sweep_cut_bound(g);
        j["method"] = "fiedler-sweep";
      } else if (spe_q == "profile") {
        SpectralProfileCurve c = spectral_profile(g);
        if (format == "csv") {
          std::ostringstream csv;
          csv << "v,Lambda\n";
          for (std::size_t k = 0; k < c.v.size(); ++k) csv << c.v[k] << ',' << c.lambda[k] << '\n';
          j["curve_csv"] = csv.str();
        }
        j["v"] = c.v;
        j["Lambda"] = c.lambda;
        j["method"] = c.method;
      } else if (spe_q == "rho") {
        j["value"] = rho_bound(g);
        j["method"] = "profile-closed-form";
      }
      emit(j, out_dir, "spectral", format);
      return 0;
    }
    if (con->parsed()) {
      WeightedGraph g = read_graph_file(graph_file);
      auto sinks = parse_index_list(con_sinks);
      double c = effective_conductance(g, con_source, VertexSet(sinks, g.num_vertices()));
      json j{{"quantity", "effective_conductance"},
             {"source", con_source},
             {"sinks", sinks},
             {"value", c},
             {"method", "grounded-laplacian"},
             {"graph_hash", graph_content_hash(g)}};
      emit(j, out_dir, "conductance", format);
      return 0;
    }
    if (har->parsed()) {
      WeightedGraph g = read_graph_file(graph_file);
      auto boundary = parse_index_list(har_boundary);
      Distribution m = harmonic_measure(g, har_start, VertexSet(boundary, g.num_vertices()));
      json mass = json::object();
      for (Index b : boundary)
        if (m[b] > 0.0) mass[std::to_string(b)] = m[b];
      json j{{"quantity", "harmonic_measure"},
             {"start", har_start},
             {"mass", mass},
             {"method", "grounded-laplacian"},
             {"graph_hash", graph_content_hash(g)}};
      emit(j, out_dir, "harmonic", format);
      return 0;
    }
    if (tre->parsed()) {
      StretchedTreeSpec spec;
      spec.depth = tre_depth;
      spec.left_stretch = static_cast<int>(tre_q * tre_left);
      spec.right_stretch = static_cast<int>(tre_q * tre_right);
      TreeFixedPoint f = tree_fixed_point(tre_q * tre_left);
      json j{{"quantity", "tree_lemma_left_prob"},
             {"depth", spec.depth},
             {"left_stretch", spec.left_stretch},
             {"right_stretch", spec.right_stretch},
             {"value", truncated_tree_left_prob(spec)},
             {"fixed_point", {{"w", f.w}, {"w_left", f.w_left}, {"w_right", f.w_right}}},
             {"limit", f.w_left / f.w},
             {"method", spec.depth <= 11 ? "explicit-hitting-solve" : "level-recursion"}};
      emit(j, out_dir, "tree_lemma", format);
      return 0;
    }
    if (exp->parsed()) {
      json j;
      int rc = 0;
      if (exp_kind == "sensitivity") {
        ExperimentSpec s;
        s.seed = seed;
        s.vertex_budget = budget;
        s.family_ns.clear();
        for (Index n : parse_index_list(exp_ns)) s.family_ns.push_back(n);
        s.params_file = params_file;
        j = run_sensitivity_experiment(s);
      } else if (exp_kind == "bounds") {
        BoundSuiteSpec s;
        s.seed = seed;
        j = run_bound_suite(s);
        if (j["violations"].get<long>() > 0) rc = 1;
      } else {
        RobustnessSpec s;
        s.seed = seed;
        j = run_robustness_probe(s);
      }
      emit(j, out_dir, "experiment_" + exp_kind, format);
      return rc;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
