#pragma once

#include <string>
#include <vector>

#include "soergel/induced.hpp"
#include "soergel/thick.hpp"

namespace soergel {

// named verification suites shared by the command line tool and the acceptance run
struct SuiteConfig {
  int n = 4;
  std::vector<IndexSet> sets;  // empty: the suite's default list
  int samples = 20;
  unsigned seed = 0;
  int homdim_alphabet = 2;  // words over {1..k} for the hom dimension sweep
  int homdim_total = 6;
  int homdim_degree = 6;
};

std::vector<Check> suite_demazure(const SuiteConfig& c);
std::vector<Check> suite_hecke(const SuiteConfig& c);
std::vector<Check> suite_graph(const SuiteConfig& c);
std::vector<Check> suite_relations(const SuiteConfig& c);
std::vector<Check> suite_orientation(const SuiteConfig& c);
std::vector<Check> suite_zidem(const SuiteConfig& c);
std::vector<Check> suite_aborts(const SuiteConfig& c);
std::vector<Check> suite_aprops(const SuiteConfig& c);
std::vector<Check> suite_ranks(const SuiteConfig& c);
std::vector<Check> suite_split(const SuiteConfig& c);
std::vector<Check> suite_frobenius(const SuiteConfig& c);
std::vector<Check> suite_tj(const SuiteConfig& c);

std::vector<std::string> suite_names();
// throws std::invalid_argument for an unknown name
std::vector<Check> run_suite(const std::string& name, const SuiteConfig& c);

bool all_pass(const std::vector<Check>& cs);
size_t count_failed(const std::vector<Check>& cs);

}  // namespace soergel
