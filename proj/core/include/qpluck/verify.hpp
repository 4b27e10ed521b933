#pragma once

#include <string>
#include <vector>

namespace qpluck {

struct CaseRecord {
  std::string input;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Outcome of one verification suite. Summary counts are derived from the
/// case records, never stored separately.
struct Report {
  std::string suite;
  std::vector<CaseRecord> cases;

  void add(std::string input, std::string expected, std::string computed, bool pass) {
    cases.push_back({std::move(input), std::move(expected), std::move(computed), pass});
  }
  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

struct VerifyOptions {
  int max = -1;        // range bound; suite-specific default when negative
  int degree = -1;     // total-degree bound; suite-specific default
  unsigned seed = 12345;  // seed for randomized shuffle checks
};

const std::vector<std::string>& suite_names();

/// Runs one of: pak-panova, lemma31, lemma34, theorem41, tree-invariants,
/// realizability, chains. Throws InvalidInput for an unknown name.
Report run_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace qpluck
