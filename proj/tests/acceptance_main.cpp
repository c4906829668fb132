// Acceptance gate: runs the full regression suite at the pinned default seed
// and prints exactly one PASS/FAIL line per criterion.
#include <algorithm>
#include <cstdio>

#include "opclass/verify.hpp"

int main() {
  opclass::VerifyOptions opts;  // default seed 42
  opts.progress = [](const opclass::CriterionResult& r) {
    std::printf("criterion %2d: %s  %s", r.number, r.pass ? "PASS" : "FAIL",
                r.title.c_str());
    if (!r.detail.empty()) std::printf(" [%s]", r.detail.c_str());
    std::printf(" (%.2fs)\n", r.elapsed_s);
    std::fflush(stdout);
  };
  opclass::VerifySummary sum = opclass::run_paper_verification(opts);
  std::printf("%s: %zu/%zu criteria passed\n",
              sum.all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              sum.criteria.size() -
                  static_cast<size_t>(std::count_if(
                      sum.criteria.begin(), sum.criteria.end(),
                      [](const auto& c) { return !c.pass; })),
              sum.criteria.size());
  return sum.all_pass ? 0 : 1;
}
