#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ceq/signature.hpp"

namespace ceq {

struct VerifyOptions {
  Signature sig{2, 0};
  Weights weights{Rational(1, 2), Rational(1, 2)};
  int degree = 4;
  int cases = 20;
  uint64_t seed = 12021;
};

struct VerifyResult {
  std::string suite;
  int checked = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one line per failed check
};

std::vector<std::string> verify_suite_names();

// Runs one named randomized invariant suite; throws std::invalid_argument for
// unknown suite names.
VerifyResult run_verify_suite(std::string_view name, const VerifyOptions& options);

}  // namespace ceq
