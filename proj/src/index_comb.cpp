#include "flagmorse/index_comb.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace flagmorse {

namespace {

std::vector<RootId> sorted_unique(std::vector<RootId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<RootId> intersect(const std::vector<RootId>& a, const std::vector<RootId>& b) {
  std::vector<RootId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

STSets finish_sets(RootId delta, std::vector<RootId> s, std::vector<RootId> t, bool starred) {
  STSets st;
  st.delta = delta;
  st.s_set = sorted_unique(std::move(s));
  st.t_set = sorted_unique(std::move(t));
  st.h = static_cast<int>(st.s_set.size()) / 2;
  st.ell = st.h + static_cast<int>(st.t_set.size());
  st.starred = starred;
  return st;
}

// 1-based position of the single nonzero ambient coordinate, with its value.
std::vector<std::pair<int, int>> ambient_terms(const RootSystem& sys, RootId a) {
  std::vector<std::pair<int, int>> out;
  const auto& c = sys.root(a).coords;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i] != 0) out.emplace_back(i + 1, c[i] / 2);
  return out;
}

}  // namespace

GammaSet make_gamma(const ParabolicSplit& sp,
                    const std::vector<std::pair<RootId, std::pair<double, double>>>& entries) {
  const RootSystem& sys = sp.system();
  if (entries.empty()) throw InvalidArgument("Gamma must be nonempty");
  GammaSet g;
  for (const auto& [a, ab] : entries) {
    if (a < 0 || a >= sys.size() || !sp.in_m_pos(a))
      throw InvalidArgument("Gamma member " + (a >= 0 && a < sys.size() ? sys.label(a) : std::to_string(a)) +
                            " is not in Delta_m+");
    if (ab.first * ab.first + ab.second * ab.second <= 0.0)
      throw InvalidArgument("Gamma member " + sys.label(a) + " has zero coefficients");
    if (g.coeffs.count(a)) throw InvalidArgument("Gamma member " + sys.label(a) + " repeated");
    g.coeffs[a] = ab;
    g.support.push_back(a);
  }
  std::sort(g.support.begin(), g.support.end());
  return g;
}

GammaSet full_gamma(const ParabolicSplit& sp) {
  std::vector<std::pair<RootId, std::pair<double, double>>> entries;
  for (RootId a : sp.delta_m_pos()) entries.push_back({a, {1.0, 0.0}});
  return make_gamma(sp, entries);
}

GammaSet parse_gamma(const ParabolicSplit& sp, const std::string& text) {
  const RootSystem& sys = sp.system();
  std::vector<std::pair<RootId, std::pair<double, double>>> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    std::string root = item, coeffs;
    if (auto colon = item.find(':'); colon != std::string::npos) {
      root = item.substr(0, colon);
      coeffs = item.substr(colon + 1);
    }
    std::vector<int> digits;
    for (char ch : root) {
      if (ch < '0' || ch > '9') throw InvalidArgument("bad root '" + root + "' in Gamma");
      digits.push_back(ch - '0');
    }
    if (static_cast<int>(digits.size()) != sys.rank())
      throw InvalidArgument("root '" + root + "' needs " + std::to_string(sys.rank()) + " digits");
    auto id = sys.find_by_simple_coords(digits);
    if (!id) throw InvalidArgument("'" + root + "' is not a root of " + sys.name());
    std::pair<double, double> ab{1.0, 0.0};
    if (!coeffs.empty()) {
      auto comma = coeffs.find(',');
      if (comma == std::string::npos) throw InvalidArgument("coefficients '" + coeffs + "' need the form a,b");
      try {
        ab = {std::stod(coeffs.substr(0, comma)), std::stod(coeffs.substr(comma + 1))};
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad coefficients '" + coeffs + "'");
      }
    }
    entries.push_back({*id, ab});
  }
  return make_gamma(sp, entries);
}

std::string format_gamma(const RootSystem& sys, const GammaSet& gamma) {
  std::ostringstream os;
  bool first = true;
  for (RootId a : gamma.support) {
    if (!first) os << ';';
    first = false;
    auto [x, y] = gamma.coeffs.at(a);
    os << sys.label(a) << ':' << x << ',' << y;
  }
  return os.str();
}

std::vector<RootId> superminimal_candidates(const ParabolicSplit& sp, const GammaSet& gamma) {
  const RootSystem& sys = sp.system();
  std::vector<RootId> out;
  for (RootId d : gamma.support) {
    bool ok = true;
    for (RootId g : gamma.support)
      if (precedes(sys, g, d)) ok = false;
    // No a < b < delta with a in Gamma; b is then a positive root.
    for (RootId b : sys.positives()) {
      if (!ok) break;
      if (!precedes(sys, b, d)) continue;
      for (RootId a : gamma.support)
        if (precedes(sys, a, b)) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(d);
  }
  return out;
}

std::optional<RootId> superminimal(const ParabolicSplit& sp, const GammaSet& gamma) {
  const RootSystem& sys = sp.system();
  auto c = superminimal_candidates(sp, gamma);
  if (c.empty()) return std::nullopt;
  return *std::min_element(c.begin(), c.end(),
                           [&](RootId x, RootId y) { return sys.root(x).coords < sys.root(y).coords; });
}

std::optional<RootId> preferred_superminimal(const ParabolicSplit& sp, const GammaSet& gamma) {
  const RootSystem& sys = sp.system();
  auto c = superminimal_candidates(sp, gamma);
  if (c.empty()) return std::nullopt;
  auto key = [&](RootId a) {
    const auto& v = sys.root(a).coords;
    bool negative = std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
    return std::make_tuple(sys.is_long(a) ? 0 : 1, negative ? 0 : 1, v);
  };
  return *std::min_element(c.begin(), c.end(), [&](RootId x, RootId y) { return key(x) < key(y); });
}

STSets st_sets(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta) {
  const RootSystem& sys = sp.system();
  if (!gamma.contains(delta)) throw InvalidArgument("delta " + sys.label(delta) + " is not in Gamma");
  std::vector<RootId> s, t;
  for (RootId a : sp.delta_m_pos()) {
    auto diff = sys.difference(delta, a);
    if (diff && sp.in_m_pos(*diff) && precedes(sys, a, delta)) s.push_back(a);
    if (a == delta || precedes(sys, delta, a)) t.push_back(a);
    if (diff && sp.in_k(*diff)) t.push_back(a);
  }
  return finish_sets(delta, std::move(s), std::move(t), false);
}

Condition1Result condition1(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta,
                            const std::vector<RootId>& t_set) {
  const RootSystem& sys = sp.system();
  Condition1Result r;
  for (RootId b0 : t_set) {
    if (b0 == delta) continue;
    RootVector lhs = sys.root(b0) - sys.root(delta);
    for (RootId b1 : t_set) {
      if (b1 == delta || b1 == b0) continue;
      for (RootId lam : gamma.support)
        if (sys.root(b1) - sys.root(lam) == lhs) {
          r.holds = false;
          r.witness = std::array<RootId, 3>{b0, b1, lam};
          return r;
        }
    }
  }
  return r;
}

Condition2Result condition2(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta,
                            const std::vector<RootId>& s_set) {
  const RootSystem& sys = sp.system();
  Condition2Result r;
  for (RootId a : s_set)
    for (RootId b : s_set) {
      auto s = sys.sum(a, b);
      bool in_gamma = s && gamma.contains(*s);
      bool is_delta = s && *s == delta;
      if (in_gamma != is_delta) {
        r.holds = false;
        r.witness = std::make_pair(a, b);
        return r;
      }
    }
  return r;
}

long index_lower_bound(long m, long n, long v, long ell) { return lambda0(m, n, v, ell) + 1; }

long lambda0(long m, long n, long v, long ell) { return m + n - (v - ell) - v; }

long dimension_count(long m, long n, long v, long ell, long h) { return m + ell + h - v + n - v + 1; }

int ell_table(Family family, int rank, EllFlags flags) {
  RootSystem::build(family, rank);  // validates the family/rank pair
  switch (family) {
    case Family::A:
      return rank;
    case Family::B:
      return flags.all_long_painted ? 2 * rank - 1 : 2 * rank - 2;
    case Family::C:
      return flags.special_maximal ? 2 * rank - 1 : rank;
    case Family::D:
      return 2 * rank - 3;
    case Family::E:
      return rank == 6 ? 11 : rank == 7 ? 17 : 29;
  }
  throw UnsupportedFamily("unknown family");
}

bool is_all_long_painted(const RootSystem& sys, const PaintedDiagram& painted) {
  if (sys.family() != Family::B) return false;
  std::vector<int> want;
  for (int j = 0; j < sys.rank(); ++j)
    if (sys.is_long(sys.simples()[j])) want.push_back(j);
  return painted.sigma_k == want;
}

bool is_special_maximal(const RootSystem& sys, const PaintedDiagram& painted) {
  if (sys.family() != Family::C) return false;
  std::vector<int> want;
  for (int j = 1; j < sys.rank(); ++j) want.push_back(j);
  return painted.sigma_k == want;
}

std::optional<RootId> root_from_ambient(const RootSystem& sys, const std::vector<std::pair<int, int>>& terms) {
  RootVector v{std::vector<int>(sys.ambient_dim(), 0)};
  for (auto [i, mult] : terms) {
    if (i < 1 || i > sys.ambient_dim()) return std::nullopt;
    v.coords[i - 1] += 2 * mult;
  }
  return sys.find(v);
}

BCaseResult b_case_sets(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta) {
  const RootSystem& sys = sp.system();
  if (sys.family() != Family::B) throw InvalidArgument("short-root case analysis needs a B system");
  auto terms = ambient_terms(sys, delta);
  if (terms.size() != 1 || terms[0].second != 1)
    throw InvalidArgument("delta " + sys.label(delta) + " is not of the form e_i");
  const int r = sys.rank();
  const int i = terms[0].first;
  auto e = [&](int a) { return *root_from_ambient(sys, {{a, 1}}); };
  for (int k = i + 1; k <= r; ++k)
    if (sp.in_k(e(k))) throw HypothesisViolated("e" + std::to_string(k) + " lies in Delta_k");

  std::vector<RootId> shown;
  for (int a = 1; a <= i; ++a) shown.push_back(e(a));
  for (int a = 1; a < i; ++a) shown.push_back(*root_from_ambient(sys, {{i, 1}, {a, 1}}));
  for (int b = i + 1; b <= r; ++b) {
    RootId d = *root_from_ambient(sys, {{i, 1}, {b, -1}});
    if (sp.in_k(d)) shown.push_back(e(b));
  }
  std::vector<RootId> t;
  for (RootId a : shown)
    if (sp.in_m_pos(a)) t.push_back(a);

  STSets general = st_sets(sp, gamma, delta);
  BCaseResult res;
  res.sets = finish_sets(delta, general.s_set, std::move(t), false);
  res.t_general = general.t_set;
  res.short_index = i;
  res.c1 = condition1(sp, gamma, delta, res.sets.t_set);
  res.c2 = condition2(sp, gamma, delta, res.sets.s_set);
  return res;
}

CCaseResult c_case_starred_sets(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta) {
  const RootSystem& sys = sp.system();
  if (sys.family() != Family::C) throw UnsupportedDelta("starred sets are defined for C systems only");
  auto terms = ambient_terms(sys, delta);
  if (terms.size() != 2 || terms[0].second != 1 || std::abs(terms[1].second) != 1)
    throw UnsupportedDelta("delta " + sys.label(delta) + " is neither e_i - e_j nor e_i + e_j");
  const int r = sys.rank();
  const int i = terms[0].first, j = terms[1].first;
  const bool minus = terms[1].second == -1;
  auto root = [&](std::vector<std::pair<int, int>> t) { return root_from_ambient(sys, t); };

  std::vector<RootId> u, v;
  auto add = [&](std::vector<RootId>& dst, std::optional<RootId> a) {
    if (a) dst.push_back(*a);
  };
  if (minus) {
    for (int k = 1; k < i; ++k) add(u, root({{k, 1}, {j, -1}}));
    for (int k = j + 1; k <= r; ++k) add(u, root({{i, 1}, {k, -1}}));
    for (int l = i + 1; l < j; ++l) {
      add(v, root({{l, 1}, {j, -1}}));
      add(v, root({{i, 1}, {l, -1}}));
    }
  } else {
    for (int k = 1; k < i; ++k) add(u, root({{k, 1}, {j, 1}}));
    for (int l = i + 1; l <= r; ++l) {
      if (l == j) continue;
      add(v, root({{j, 1}, {l, 1}}));
      add(v, root({{i, 1}, {l, -1}}));
    }
  }
  add(u, root({{i, 2}}));
  u.push_back(delta);

  CCaseResult res;
  res.u_set = sorted_unique(u);
  res.v_set = sorted_unique(v);
  res.plain = st_sets(sp, gamma, delta);
  auto uv = sorted_unique([&] {
    auto w = res.u_set;
    w.insert(w.end(), res.v_set.begin(), res.v_set.end());
    return w;
  }());
  res.starred = finish_sets(delta, intersect(res.plain.s_set, res.v_set), intersect(res.plain.t_set, uv), true);
  res.c1 = condition1(sp, gamma, delta, res.starred.t_set);
  res.c2 = condition2(sp, gamma, delta, res.starred.s_set);
  return res;
}

nlohmann::json to_json(const RootSystem& sys, const STSets& st) {
  auto labels = [&](const std::vector<RootId>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (RootId a : ids) arr.push_back(sys.label(a));
    return arr;
  };
  return {{"delta", sys.label(st.delta)}, {"S", labels(st.s_set)}, {"T", labels(st.t_set)},
          {"ell", st.ell},               {"h", st.h},               {"starred", st.starred}};
}

}  // namespace flagmorse
