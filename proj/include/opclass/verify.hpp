#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace opclass {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // short diagnostics: worst margins, failure locations
  double elapsed_s = 0;
};

struct VerifySummary {
  std::uint64_t seed = 42;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  // Negative-control hook: perturbs one fixture so the suite must fail.
  bool corrupt_fixture = false;
  // Called after each criterion finishes (streaming progress output).
  std::function<void(const CriterionResult&)> progress;
};

// The full regression suite: 13 criteria over fixed fixtures and a seeded
// corpus of 1000 matrices (dims 2-8: 400 generic, 300 normal,
// 300 structured).  Deterministic for a given seed.
VerifySummary run_paper_verification(const VerifyOptions& opts = {});

std::string to_json_text(const VerifySummary& s);
std::string summary_table(const VerifySummary& s);

}  // namespace opclass
