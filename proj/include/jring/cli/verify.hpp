#pragma once

#include <string>
#include <vector>

namespace jring::cli {

struct SuiteResult {
  std::string name;
  bool passed = false;
};

// Every invariant suite up to weight max_n (smaller caps for the costly ones).
std::vector<SuiteResult> run_verify(int max_n);

}  // namespace jring::cli
