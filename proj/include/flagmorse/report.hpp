#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flagmorse {

struct CheckResult {
  std::string name;
  std::string paper_ref;  // the identity being checked, written out
  long trials = 0;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = true;
};

struct Report {
  std::string suite;
  std::string frame;
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool pass() const;
  /// elapsed_ms is written as 0 unless `timing` is set, so that reports are
  /// byte-identical across runs.
  nlohmann::json to_json(bool timing = false) const;
  std::string to_text() const;
};

}  // namespace flagmorse
