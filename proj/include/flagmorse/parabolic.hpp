// Painted Dynkin diagrams and the induced split of the roots into the Levi
// part Delta_k and its complement Delta_m.
#pragma once

#include "flagmorse/rootsys.hpp"

#include <string>
#include <utility>
#include <vector>

namespace flagmorse {

/// Subset of simple-root indices (0-based, sorted, duplicate-free).
struct PaintedDiagram {
  std::vector<int> sigma_k;
};

/// Validates indices against the rank; throws InvalidArgument.
PaintedDiagram make_painted(const RootSystem& sys, std::vector<int> indices);
/// Parses a comma-separated list of 1-based node numbers; "" is the Borel case.
PaintedDiagram parse_painted(const RootSystem& sys, const std::string& text);
/// "x" for painted nodes, "o" otherwise.
std::string render_painted(const RootSystem& sys, const PaintedDiagram& painted);
/// All 2^rank paintings in order of their bit masks.
std::vector<PaintedDiagram> all_paintings(const RootSystem& sys);

class ParabolicSplit {
 public:
  ParabolicSplit(const RootSystem& sys, const PaintedDiagram& painted);

  const RootSystem& system() const { return *sys_; }
  const PaintedDiagram& painted() const { return painted_; }

  const std::vector<RootId>& delta_k() const { return delta_k_; }
  const std::vector<RootId>& delta_k_pos() const { return delta_k_pos_; }
  const std::vector<RootId>& delta_m_pos() const { return delta_m_pos_; }
  int v() const { return static_cast<int>(delta_m_pos_.size()); }

  bool in_k(RootId a) const { return in_k_[a]; }
  bool in_m(RootId a) const { return !in_k_[a]; }
  bool in_m_pos(RootId a) const { return !in_k_[a] && sys_->is_positive(a); }

 private:
  const RootSystem* sys_;
  PaintedDiagram painted_;
  std::vector<RootId> delta_k_, delta_k_pos_, delta_m_pos_;
  std::vector<bool> in_k_;
};

inline ParabolicSplit split(const RootSystem& sys, const PaintedDiagram& painted) {
  return ParabolicSplit(sys, painted);
}

struct ClosureReport {
  bool pass = true;
  long pairs_checked = 0;
  std::vector<std::pair<RootId, RootId>> counterexamples;
};

/// Scans all a, b in Delta_m+ with a + b a root and records those landing in
/// Delta_k.
ClosureReport verify_m_closure(const ParabolicSplit& sp);

/// Checks the structural invariants of a split; returns a description of the
/// first failure or an empty string.
std::string split_invariant_failure(const ParabolicSplit& sp);

nlohmann::json to_json(const ParabolicSplit& sp);

}  // namespace flagmorse
