// Named verification suites over a catalog, shared by the command line tool
// and the acceptance runner.

#pragma once

#include <string>
#include <vector>

#include "deltafn/functors.hpp"

namespace deltafn {

struct SuiteParams {
  int p = 2;
  int n = 2;
  int D = -1;  // -1: 12 at p = 2, 14 at odd p
  int degree() const { return D >= 0 ? D : (p == 2 ? 12 : 14); }
};

const std::vector<std::string>& suite_names();
/// Runs one suite; budget overruns become budget-exceeded reports and
/// unsupported parameters become skipped reports.
std::vector<VerifyReport> run_suite(const std::string& suite, Catalog& cat, const SuiteParams& params);

/// The worked examples of delta on GL_3(F_2) and GL_2(F_2) PIMs: expected
/// expansions as (PIM name, multiplicity) lists.
struct DeltaExample {
  int n;
  std::string input;  // PIM name over GL_n(F_2)
  std::vector<std::pair<std::string, int>> expected;
};
const std::vector<DeltaExample>& delta_examples();
VerifyReport verify_example(const DeltaExample& ex, Catalog& cat);

/// delta(P) identified for every PIM, additivity on a direct sum and the
/// graded identity for the regular module.
VerifyReport verify_functor_gl(Context& ctx, int D);

}  // namespace deltafn
