#include "doctest.h"
#include "jring/analysis.hpp"
#include "jring/symfun.hpp"

using namespace jring;

TEST_CASE("expansion tables agree across execution modes") {
  for (int n = 1; n <= 14; ++n)
    for (int l = 1; l <= n; ++l) {
      const auto serial = expansion_table(n, l, Execution::serial);
      const auto parallel = expansion_table(n, l, Execution::parallel);
      CHECK(serial.betas == parallel.betas);
      CHECK(serial.lambdas == parallel.lambdas);
      CHECK(serial.entries == parallel.entries);
    }
}

TEST_CASE("transition matrices agree across execution modes") {
  for (int n = 1; n <= 12; ++n)
    for (int l = 1; l <= n; ++l)
      CHECK(transition_matrix(n, l, Execution::serial) ==
            transition_matrix(n, l, Execution::parallel));
}

TEST_CASE("dimension tables agree across execution modes") {
  const auto serial = dimension_table(14, Execution::serial);
  const auto parallel = dimension_table(14, Execution::parallel);
  CHECK(serial.counted == parallel.counted);
  CHECK(serial.kernel == parallel.kernel);
  CHECK(serial.agree());
  CHECK(parallel.agree());
}

TEST_CASE("parallel precompute fills the same cache as serial") {
  TransitionCache serial;
  TransitionCache parallel;
  serial.precompute(10, Execution::serial);
  parallel.precompute(10, Execution::parallel);
  CHECK(serial.size() == parallel.size());
  for (int n = 1; n <= 10; ++n)
    for (int l = 1; l <= n; ++l) CHECK(*serial.get(n, l) == *parallel.get(n, l));
  CHECK(parallel_thread_count() >= 1);
}
