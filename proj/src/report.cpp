#include "flagmorse/report.hpp"

#include <cstdio>
#include <sstream>

namespace flagmorse {

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json Report::to_json(bool timing) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"paper_ref", c.paper_ref},
                   {"trials", c.trials},
                   {"max_residual", c.max_residual},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  return {{"suite", suite},   {"frame", frame},   {"seed", seed},
          {"trials", trials}, {"checks", arr},    {"pass", pass()},
          {"elapsed_ms", timing ? elapsed_ms : 0.0}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "  frame " << frame << "  seed " << seed << "  trials " << trials << '\n';
  char line[256];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "  %-28s %-4s max %.3e  tol %.0e\n", c.name.c_str(), c.pass ? "ok" : "FAIL",
                  c.max_residual, c.tolerance);
    os << line;
  }
  os << (pass() ? "all checks pass" : "some checks FAILED") << '\n';
  return os.str();
}

}  // namespace flagmorse
