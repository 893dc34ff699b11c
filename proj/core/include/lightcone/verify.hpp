#pragma once

#include <string>
#include <vector>

#include "lightcone/expr.hpp"
#include "lightcone/graph.hpp"

namespace lightcone {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

// Invariant batches behind the `verify` subcommand.  Suites: core, jets,
// graph, cmc, classify, all.  Deterministically seeded.
std::vector<CheckResult> verify_suite(const std::string& suite);
bool all_passed(const std::vector<CheckResult>& results);

// Meromorphic data g used by the representation checks; each entry carries a
// domain on which g_z does not vanish and any pole lies outside.
struct CorpusEntry {
  const char* name;
  const char* source;
  Grid domain;
  bool crosses_unit_modulus;  // |g| meets 1 inside some disk around 0
};

const std::vector<CorpusEntry>& representation_corpus();

// Positive smooth graph functions for the structure-equation residuals.
struct TauEntry {
  const char* name;
  const char* source;
  Grid domain;
};

const std::vector<TauEntry>& tau_corpus();

}  // namespace lightcone
