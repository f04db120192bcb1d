#pragma once

#include <string>
#include <vector>

#include "qh/qring.hpp"
#include "qh/rational.hpp"

namespace qh {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // parameters, residual summary, error text
};

struct VerifyOptions {
  RingConfig ring;
  Rational jmax = Rational(3);  // largest sl2 spin exercised
  int sl3_nmax = 3;             // largest (n,0) symmetric label
  int heis_order = 12;          // Heisenberg truncation degree
  bool corrupt_yhat = false;    // negative-control hook: perturb the Y map
  unsigned seed = 20260816;     // fixed seed: randomized checks are reproducible
};

/// Suites: scalar, sl2-rep, contraction, h-realization, sl3, heisenberg, ybe.
const std::vector<std::string>& suite_names();

/// Runs one named suite; unknown names throw InvalidArgument. Construction
/// failures inside a suite become failing results, not exceptions.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

/// One line per check: PASS/FAIL, suite, name, detail.
std::string check_results_text(const std::vector<CheckResult>& results);

}  // namespace qh
