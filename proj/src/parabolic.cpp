#include "flagmorse/parabolic.hpp"

#include <algorithm>
#include <sstream>

namespace flagmorse {

PaintedDiagram make_painted(const RootSystem& sys, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= sys.rank())
      throw InvalidArgument("painted node " + std::to_string(indices[i] + 1) + " out of range for " + sys.name());
    if (i > 0 && indices[i] == indices[i - 1])
      throw InvalidArgument("painted node " + std::to_string(indices[i] + 1) + " repeated");
  }
  return PaintedDiagram{std::move(indices)};
}

PaintedDiagram parse_painted(const RootSystem& sys, const std::string& text) {
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      idx.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad painted node '" + item + "'");
    }
  }
  return make_painted(sys, std::move(idx));
}

std::string render_painted(const RootSystem& sys, const PaintedDiagram& painted) {
  std::string s(sys.rank(), 'o');
  for (int i : painted.sigma_k) s[i] = 'x';
  return s;
}

std::vector<PaintedDiagram> all_paintings(const RootSystem& sys) {
  std::vector<PaintedDiagram> out;
  for (unsigned mask = 0; mask < (1u << sys.rank()); ++mask) {
    PaintedDiagram p;
    for (int i = 0; i < sys.rank(); ++i)
      if (mask & (1u << i)) p.sigma_k.push_back(i);
    out.push_back(std::move(p));
  }
  return out;
}

ParabolicSplit::ParabolicSplit(const RootSystem& sys, const PaintedDiagram& painted)
    : sys_(&sys), painted_(painted), in_k_(sys.size(), false) {
  std::vector<bool> painted_node(sys.rank(), false);
  for (int i : painted.sigma_k) painted_node.at(i) = true;
  for (RootId a = 0; a < sys.size(); ++a) {
    const auto& c = sys.simple_coords(a);
    bool inside = true;
    for (int j = 0; j < sys.rank(); ++j)
      if (c[j] != 0 && !painted_node[j]) inside = false;
    in_k_[a] = inside;
    if (inside) {
      delta_k_.push_back(a);
      if (sys.is_positive(a)) delta_k_pos_.push_back(a);
    } else if (sys.is_positive(a)) {
      delta_m_pos_.push_back(a);
    }
  }
}

ClosureReport verify_m_closure(const ParabolicSplit& sp) {
  ClosureReport r;
  const RootSystem& sys = sp.system();
  for (RootId a : sp.delta_m_pos())
    for (RootId b : sp.delta_m_pos()) {
      auto s = sys.sum(a, b);
      if (!s) continue;
      ++r.pairs_checked;
      if (sp.in_k(*s)) {
        r.pass = false;
        r.counterexamples.emplace_back(a, b);
      }
    }
  return r;
}

std::string split_invariant_failure(const ParabolicSplit& sp) {
  const RootSystem& sys = sp.system();
  for (RootId a : sp.delta_k())
    for (RootId b : sp.delta_k())
      if (auto s = sys.sum(a, b); s && !sp.in_k(*s))
        return "Delta_k not closed at " + sys.label(a) + " + " + sys.label(b);
  for (RootId a : sp.delta_k())
    if (!sp.in_k(sys.negate(a))) return "Delta_k not symmetric at " + sys.label(a);
  if (sp.delta_k_pos().size() + sp.delta_m_pos().size() != sys.positives().size())
    return "positive roots not partitioned";
  for (RootId a : sp.delta_m_pos())
    if (sp.in_k(a) || !sys.is_positive(a)) return "bad member of Delta_m+ " + sys.label(a);
  auto closure = verify_m_closure(sp);
  if (!closure.pass) {
    auto [a, b] = closure.counterexamples.front();
    return "m + m lands in Delta_k at " + sys.label(a) + " + " + sys.label(b);
  }
  return {};
}

nlohmann::json to_json(const ParabolicSplit& sp) {
  const RootSystem& sys = sp.system();
  auto labels = [&](const std::vector<RootId>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (RootId a : ids) arr.push_back(sys.label(a));
    return arr;
  };
  nlohmann::json sigma = nlohmann::json::array();
  for (int i : sp.painted().sigma_k) sigma.push_back(i + 1);
  return {{"system", sys.name()},
          {"painted", render_painted(sys, sp.painted())},
          {"sigma_k", sigma},
          {"delta_k_pos", labels(sp.delta_k_pos())},
          {"delta_m_pos", labels(sp.delta_m_pos())},
          {"v", sp.v()}};
}

}  // namespace flagmorse
