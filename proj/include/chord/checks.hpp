#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chord/polynomial.hpp"
#include "chord/series.hpp"

namespace chord {

struct CheckResult {
  int criterion = 0;  // acceptance criterion id (1..11), 0 for extras
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  long samples = 200000;
  std::uint64_t seed = 7;
  int oracleOneBackboneVertices = 10;
  int oracleMultiVertices = 8;
  int oracleMaxBackbones = 3;
};

// Suite names follow the CLI: golden, oracle, kp, matrix, freeprob,
// shapes, harer-zagier.
std::vector<CheckResult> check_golden();
std::vector<CheckResult> check_oracle(const SuiteOptions& opt);
std::vector<CheckResult> check_kp();
std::vector<CheckResult> check_matrix(const SuiteOptions& opt);
std::vector<CheckResult> check_freeprob();
std::vector<CheckResult> check_shapes();
std::vector<CheckResult> check_harer_zagier();

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<CheckResult> run_all_checks(const SuiteOptions& opt);

// Per-cell KP residual outcomes: one entry per (model, equation, y order).
struct KpCell {
  std::string model;  // "point" | "length"
  int equation = 0;
  int yOrder = 0;
  bool pass = false;
};
std::vector<KpCell> kp_residual_matrix(int maxYOrder, int tOrder);

// Golden data shared between suites and tests: the planar one-backbone
// substitution polynomials in q, s for vertex counts m = 0..8.
std::vector<Polynomial> expected_marked_weight_polynomials();

}  // namespace chord
