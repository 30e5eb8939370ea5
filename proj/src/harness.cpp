#include "mixkit/harness.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "mixkit/graph_io.hpp"
#include "mixkit/mixing.hpp"
#include "mixkit/random_graphs.hpp"
#include "mixkit/spectral.hpp"

namespace mixkit {

using nlohmann::json;

std::vector<Index> roots_policy_starts(const LabeledFamily& fam, int reps, int extra,
                                       unsigned long long seed) {
  std::set<Index> starts;
  for (Index o : fam.o) starts.insert(o);
  for (const auto& r : fam.R)
    for (std::size_t k = 0; k < r.indices().size() && k < static_cast<std::size_t>(reps); ++k)
      starts.insert(r.indices()[k]);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, fam.graph.num_vertices() - 1);
  for (int k = 0; k < extra; ++k) starts.insert(pick(rng));
  return {starts.begin(), starts.end()};
}

std::vector<std::pair<long, double>> nice_survival_curve(const LabeledFamily& fam,
                                                         const std::vector<long>& times) {
  TransitionKernel k = lazy_kernel(fam.graph);
  VertexSet u = fam.nice.complement(fam.graph.num_vertices());
  RestrictedKernel r = restrict_kernel(k, u);
  const auto& idx = u.indices();
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (idx[i] == fam.o.back()) mass[i] = 1.0;
  std::vector<std::pair<long, double>> out;
  long t = 0;
  for (long target : times) {
    while (t < target) {
      mass = r.P.transpose() * mass;
      ++t;
    }
    out.push_back({target, mass.sum()});
  }
  return out;
}

namespace {

json params_to_json(const FamilyParams& p) {
  return json{{"n", p.n},
              {"fh_depth", p.fh_depth},
              {"good_extra_depth", p.good_extra_depth},
              {"gmp_threshold", p.gmp_threshold},
              {"bad_leaf_target", p.bad_leaf_target},
              {"short_stretch", p.short_stretch},
              {"q", p.q},
              {"expander_degree", p.expander_degree},
              {"expander_gap_threshold", p.expander_gap_threshold},
              {"seed", p.seed},
              {"vertex_budget", p.vertex_budget}};
}

std::vector<long> log_spaced_times(long hi, int count) {
  std::vector<long> t;
  if (hi < 1) hi = 1;
  double step = std::pow(static_cast<double>(hi), 1.0 / count);
  double cur = 1.0;
  for (int k = 0; k < count; ++k) {
    cur *= step;
    long v = std::max<long>(t.empty() ? 1 : t.back() + 1, static_cast<long>(cur));
    t.push_back(v);
  }
  return t;
}

}  // namespace

json run_sensitivity_experiment(const ExperimentSpec& spec) {
  json rows = json::array();
  std::vector<double> ratios;
  bool all_exceed = true;
  for (int n : spec.family_ns) {
    FamilyParams p = spec.params_file.empty() ? FamilyParams::scaled_defaults(n, spec.seed)
                                              : parse_family_params(spec.params_file);
    p.vertex_budget = spec.vertex_budget;
    json row;
    row["n"] = n;
    row["params"] = params_to_json(p);
    LabeledFamily plain, primed;
    try {
      plain = build_family(p, false);
      primed = build_family(p, true);
    } catch (const std::exception& e) {
      row["error"] = e.what();
      rows.push_back(row);
      all_exceed = false;
      continue;
    }
    row["vertices"] = plain.graph.num_vertices();
    row["vertices_primed"] = primed.graph.num_vertices();
    row["graph_hash"] = graph_content_hash(plain.graph);
    row["graph_hash_primed"] = graph_content_hash(primed.graph);
    row["max_degree"] = plain.graph.max_degree();
    row["max_degree_primed"] = primed.graph.max_degree();

    TransitionKernel k_plain = lazy_kernel(plain.graph);
    TransitionKernel k_primed = lazy_kernel(primed.graph);

    MixingOptions inf_opts;
    inf_opts.starts = roots_policy_starts(plain, spec.reps_per_root_set,
                                          spec.random_extra_starts, mix_seed(spec.seed, 500));
    inf_opts.t_cap = spec.t_cap;
    long tau_inf = mixing_time(k_plain, kInfinityP, 0.5, inf_opts);
    row["tau_inf_unprimed"] = tau_inf;
    row["tau_inf_method"] = "roots-policy-lower-bound";
    row["tau_inf_starts"] = inf_opts.starts.size();

    MixingOptions one_opts;
    one_opts.starts = {primed.o.back()};
    one_opts.t_cap = spec.t_cap;
    long tau1 = mixing_time(k_primed, 1.0, 0.5, one_opts);
    row["tau1_primed_from_root"] = tau1;
    if (spec.include_worst_start_tau1) {
      MixingOptions worst_opts;
      worst_opts.starts = roots_policy_starts(primed, spec.reps_per_root_set,
                                              spec.random_extra_starts, mix_seed(spec.seed, 501));
      worst_opts.t_cap = spec.t_cap;
      row["tau1_primed_worst_start"] = mixing_time(k_primed, 1.0, 0.5, worst_opts);
      row["tau1_worst_method"] = "roots-policy-sampled";
    }
    double ratio = static_cast<double>(tau1) / static_cast<double>(std::max<long>(tau_inf, 1));
    row["ratio"] = ratio;
    ratios.push_back(ratio);
    if (tau1 <= tau_inf) all_exceed = false;

    // pi'(Small) against the degree-ratio volume bound.
    VertexSet small = small_component(primed);
    Distribution pi_primed = stationary(primed.graph);
    double pi_small = 0.0;
    for (Index v : small.indices()) pi_small += pi_primed[v];
    double vol_bound = 15.0 * static_cast<double>(small.size()) /
                       static_cast<double>(primed.graph.num_vertices());
    row["pi_small"] = pi_small;
    row["small_volume_bound"] = vol_bound;
    row["pi_small_ok"] = pi_small <= vol_bound;

    // Survival Pr'_{o_n}[T_Nice > t].
    json surv = json::array();
    for (auto [t, s] : nice_survival_curve(primed, log_spaced_times(2 * std::max<long>(tau1, 4), 24)))
      surv.push_back(json::array({t, s}));
    row["nice_survival"] = surv;
    rows.push_back(row);
  }
  bool increasing = ratios.size() >= 2;
  for (std::size_t k = 0; k + 1 < ratios.size(); ++k)
    if (ratios[k + 1] <= ratios[k]) increasing = false;
  json rep;
  rep["experiment"] = "sensitivity";
  rep["seed"] = spec.seed;
  rep["rows"] = rows;
  rep["checks"] = {{"tau1_exceeds_tau_inf", all_exceed},
                   {"ratio_strictly_increasing", increasing}};
  return rep;
}

json run_bound_suite(const BoundSuiteSpec& spec) {
  json checks = json::array();
  long violations = 0;
  auto record = [&](const std::string& name, int graph_id, bool ok, double lhs, double rhs) {
    if (!ok) ++violations;
    checks.push_back(json{{"check", name}, {"graph", graph_id}, {"ok", ok}, {"lhs", lhs}, {"rhs", rhs}});
  };
  std::vector<WeightedGraph> corpus =
      bound_suite_corpus(spec.count, spec.min_size, spec.max_size, spec.seed);
  for (int id = 0; id < static_cast<int>(corpus.size()); ++id) {
    const WeightedGraph& g = corpus[id];
    TransitionKernel k = lazy_kernel(g);
    const double tol = 1e-9;
    double gap = spectral_gap(k);
    CheegerResult ch = cheeger(g);
    record("cheeger-lower", id, ch.phi * ch.phi / 2.0 <= gap + tol, ch.phi * ch.phi / 2.0, gap);
    record("cheeger-upper", id, gap <= 2.0 * ch.phi + tol, gap, 2.0 * ch.phi);

    // Restricted pair on a deterministic proper subset.
    std::vector<Index> half;
    for (Index v = 0; v < g.num_vertices() / 2 + 1 && v + 1 < g.num_vertices(); ++v)
      half.push_back(v);
    VertexSet a(half, g.num_vertices());
    double rgap = restricted_gap(k, a);
    double rphi = restricted_cheeger(g, a);
    record("restricted-lower", id, rphi * rphi / 4.0 <= rgap + tol, rphi * rphi / 4.0, rgap);
    record("restricted-upper", id, rgap <= rphi + tol, rgap, rphi);

    PoincareReport poi = poincare_check(g, Distribution::point_mass(g.num_vertices(), 0), 60);
    record("poincare", id, poi.ok, poi.max_violation, 1e-12);

    auto tail = exit_tail_curve(g, a, half.front(), 80);
    bool tail_ok = true;
    for (const auto& e : tail)
      if (e.bound < 1.0 && e.exact > e.bound + tol) tail_ok = false;
    record("exit-tail", id, tail_ok, 0.0, 0.0);

    if (g.num_vertices() <= 14) {
      double rho = rho_bound(g);
      long tau_inf = mixing_time(g, kInfinityP, 0.5);
      record("rho-vs-tau-inf", id, rho >= static_cast<double>(tau_inf),
             static_cast<double>(tau_inf), rho);
    }
    if (id % 10 == 0) {
      L2LinftyReport rep2 = l2_linfty_relation_check(g, 0.5, 15);
      record("l2-linfty", id, rep2.ok, rep2.max_identity_gap, 1e-9);
    }
  }
  bool control_flagged = false;
  if (spec.inject_fault) {
    // Negative control: scale one row to sum 0.9 and confirm detection.
    WeightedGraph g = random_connected_graph(6, 4, mix_seed(spec.seed, 999));
    TransitionKernel k = lazy_kernel(g);
    for (SparseRowMatrix::InnerIterator it(k.P, 0); it; ++it) it.valueRef() *= 0.9;
    Eigen::VectorXd rowsum = k.P * Eigen::VectorXd::Ones(k.size());
    bool rows_ok = (rowsum.array() - 1.0).abs().maxCoeff() <= 1e-12;
    bool rev_ok = reversibility_defect(k) <= 1e-12;
    control_flagged = !rows_ok || !rev_ok;
    if (!control_flagged) ++violations;
  }
  json rep;
  rep["experiment"] = "bounds";
  rep["seed"] = spec.seed;
  rep["corpus_size"] = spec.count;
  rep["violations"] = violations;
  rep["negative_control_flagged"] = control_flagged;
  rep["checks"] = checks;
  return rep;
}

json run_robustness_probe(const RobustnessSpec& spec) {
  json rows = json::array();
  auto probe = [&](const std::string& name, const WeightedGraph& g, unsigned long long seed) {
    long before = mixing_time(g, kInfinityP, 0.5);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logc(-std::log(spec.perturb_c),
                                                std::log(spec.perturb_c));
    std::vector<std::tuple<Index, Index, double>> factors;
    for (const auto& e : g.edges()) factors.emplace_back(e.u, e.v, std::exp(logc(rng)));
    WeightedGraph perturbed = perturb_weights(g, factors);
    long after_perturb = mixing_time(perturbed, kInfinityP, 0.5);
    std::vector<std::pair<Index, Index>> half;
    for (const auto& e : g.edges())
      if (rng() % 2 == 0) half.push_back({e.u, e.v});
    WeightedGraph stretched = stretch_edges(g, half, 2);
    long after_stretch = mixing_time(stretched, kInfinityP, 0.5);
    rows.push_back(json{{"graph", name},
                        {"vertices", g.num_vertices()},
                        {"tau_inf", before},
                        {"tau_inf_perturbed", after_perturb},
                        {"tau_inf_stretched", after_stretch},
                        {"perturb_ratio", static_cast<double>(after_perturb) / before},
                        {"stretch_ratio", static_cast<double>(after_stretch) / before}});
  };
  for (int side : spec.torus_sides)
    probe("torus(" + std::to_string(side) + ",2)", torus(side, 2), mix_seed(spec.seed, side));
  for (int dim : spec.hypercube_dims)
    probe("hypercube(" + std::to_string(dim) + ")", hypercube(dim), mix_seed(spec.seed, 100 + dim));
  json rep;
  rep["experiment"] = "robustness";
  rep["seed"] = spec.seed;
  rep["perturb_c"] = spec.perturb_c;
  rep["rows"] = rows;
  return rep;
}

FamilyParams parse_family_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open params file " + path);
  FamilyParams p;
  p.fh_depth.clear();
  p.good_extra_depth.clear();
  p.gmp_threshold.clear();
  p.bad_leaf_target.clear();
  p.q.clear();
  std::string line;
  auto parse_ints = [](const std::string& s) {
    std::vector<long> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("params: expected key = value");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    trim(key);
    trim(val);
    if (key == "n") p.n = std::stoi(val);
    else if (key == "fh_depth") for (long x : parse_ints(val)) p.fh_depth.push_back(static_cast<int>(x));
    else if (key == "good_extra_depth") for (long x : parse_ints(val)) p.good_extra_depth.push_back(static_cast<int>(x));
    else if (key == "gmp_threshold") for (long x : parse_ints(val)) p.gmp_threshold.push_back(static_cast<int>(x));
    else if (key == "bad_leaf_target") p.bad_leaf_target = parse_ints(val);
    else if (key == "short_stretch") p.short_stretch = std::stoi(val);
    else if (key == "q") for (long x : parse_ints(val)) p.q.push_back(static_cast<int>(x));
    else if (key == "expander_gap_threshold") p.expander_gap_threshold = std::stod(val);
    else if (key == "seed") p.seed = std::stoull(val);
    else if (key == "vertex_budget") p.vertex_budget = std::stol(val);
    else throw std::runtime_error("params: unknown key " + key);
  }
  p.validate();
  return p;
}

void write_family_params(const std::string& path, const FamilyParams& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  auto join = [](const auto& v) {
    std::ostringstream ss;
    for (std::size_t k = 0; k < v.size(); ++k) ss << (k ? "," : "") << v[k];
    return ss.str();
  };
  out << "n = " << p.n << '\n';
  out << "fh_depth = " << join(p.fh_depth) << '\n';
  out << "good_extra_depth = " << join(p.good_extra_depth) << '\n';
  out << "gmp_threshold = " << join(p.gmp_threshold) << '\n';
  out << "bad_leaf_target = " << join(p.bad_leaf_target) << '\n';
  out << "short_stretch = " << p.short_stretch << '\n';
  out << "q = " << join(p.q) << '\n';
  out << "expander_gap_threshold = " << p.expander_gap_threshold << '\n';
  out << "seed = " << p.seed << '\n';
  out << "vertex_budget = " << p.vertex_budget << '\n';
}

}  // namespace mixkit
