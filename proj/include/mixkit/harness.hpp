#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mixkit/construction.hpp"

namespace mixkit {

struct ExperimentSpec {
  std::vector<int> family_ns = {2, 3, 4};
  unsigned long long seed = 1;
  long vertex_budget = 100000;
  long t_cap = 10000000;
  int random_extra_starts = 32;
  int reps_per_root_set = 4;
  bool include_worst_start_tau1 = false;
  std::string params_file;  // optional explicit FamilyParams (single n)
};

struct BoundSuiteSpec {
  int count = 50;
  int min_size = 4;
  int max_size = 12;
  unsigned long long seed = 7;
  bool inject_fault = true;  // negative control: a deliberately broken kernel
};

struct RobustnessSpec {
  double perturb_c = 2.0;
  unsigned long long seed = 11;
  std::vector<int> torus_sides = {4, 6, 8};
  std::vector<int> hypercube_dims = {3, 4};
};

// Start set of the "roots" policy: island roots, a few representatives of
// each R_i, and a seeded random sample. Reported values are certified lower
// bounds on the all-start quantity.
std::vector<Index> roots_policy_starts(const LabeledFamily& fam, int reps, int extra,
                                       unsigned long long seed);

// Pr_{o_n}[T_Nice > t] at the sampled times, by restricted-kernel mass.
std::vector<std::pair<long, double>> nice_survival_curve(const LabeledFamily& fam,
                                                         const std::vector<long>& times);

nlohmann::json run_sensitivity_experiment(const ExperimentSpec& spec);
nlohmann::json run_bound_suite(const BoundSuiteSpec& spec);
nlohmann::json run_robustness_probe(const RobustnessSpec& spec);

FamilyParams parse_family_params(const std::string& path);
void write_family_params(const std::string& path, const FamilyParams& p);

}  // namespace mixkit
