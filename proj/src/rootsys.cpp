#include "flagmorse/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace flagmorse {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      default: break;
    }
  }
  throw UnsupportedFamily("unsupported root system family '" + s + "'");
}

RootVector operator+(const RootVector& x, const RootVector& y) {
  if (x.coords.size() != y.coords.size()) throw DimensionMismatch("root vectors of different dimension");
  RootVector r{x.coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

RootVector operator-(const RootVector& x) {
  RootVector r{x.coords};
  for (auto& c : r.coords) c = -c;
  return r;
}

RootVector operator-(const RootVector& x, const RootVector& y) { return x + (-y); }

namespace {

RootVector unit(int dim, int i, int scale = 2) {
  RootVector v{std::vector<int>(dim, 0)};
  v.coords[i] = scale;
  return v;
}

// +-e_i +- e_j for i < j.
void add_pm_pairs(int dim, std::vector<RootVector>& out) {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RootVector v{std::vector<int>(dim, 0)};
          v.coords[i] = 2 * si;
          v.coords[j] = 2 * sj;
          out.push_back(v);
        }
}

std::vector<RootVector> e8_roots() {
  std::vector<RootVector> roots;
  add_pm_pairs(8, roots);
  for (int mask = 0; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    RootVector v{std::vector<int>(8, 1)};
    for (int i = 0; i < 8; ++i)
      if (mask & (1 << i)) v.coords[i] = -1;
    roots.push_back(v);
  }
  return roots;
}

// Bourbaki numbering for E8 in the even coordinate system.
std::vector<RootVector> e8_simples() {
  std::vector<RootVector> s;
  s.push_back(RootVector{{1, -1, -1, -1, -1, -1, -1, 1}});
  s.push_back(RootVector{{2, 2, 0, 0, 0, 0, 0, 0}});
  for (int i = 0; i < 6; ++i) {
    RootVector v{std::vector<int>(8, 0)};
    v.coords[i] = -2;
    v.coords[i + 1] = 2;
    s.push_back(v);
  }
  return s;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  RootSystem sys;
  sys.family_ = family;
  sys.rank_ = rank;
  std::vector<RootVector> roots;
  std::vector<RootVector> simples;
  auto bad = [&] {
    throw UnsupportedFamily(std::string("unsupported root system ") + family_letter(family) + std::to_string(rank));
  };

  switch (family) {
    case Family::A: {
      if (rank < 1) bad();
      int n = rank + 1;
      sys.ambient_dim_ = n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) roots.push_back(unit(n, i) - unit(n, j));
      for (int i = 0; i < rank; ++i) simples.push_back(unit(n, i) - unit(n, i + 1));
      break;
    }
    case Family::B: {
      if (rank < 2) bad();
      sys.ambient_dim_ = rank;
      add_pm_pairs(rank, roots);
      for (int i = 0; i < rank; ++i) {
        roots.push_back(unit(rank, i));
        roots.push_back(-unit(rank, i));
      }
      for (int i = 0; i + 1 < rank; ++i) simples.push_back(unit(rank, i) - unit(rank, i + 1));
      simples.push_back(unit(rank, rank - 1));
      break;
    }
    case Family::C: {
      if (rank < 3) bad();
      sys.ambient_dim_ = rank;
      sys.scale_ = Rational(1, 2);
      add_pm_pairs(rank, roots);
      for (int i = 0; i < rank; ++i) {
        roots.push_back(unit(rank, i, 4));
        roots.push_back(-unit(rank, i, 4));
      }
      for (int i = 0; i + 1 < rank; ++i) simples.push_back(unit(rank, i) - unit(rank, i + 1));
      simples.push_back(unit(rank, rank - 1, 4));
      break;
    }
    case Family::D: {
      if (rank < 4) bad();
      sys.ambient_dim_ = rank;
      add_pm_pairs(rank, roots);
      for (int i = 0; i + 1 < rank; ++i) simples.push_back(unit(rank, i) - unit(rank, i + 1));
      simples.push_back(unit(rank, rank - 2) + unit(rank, rank - 1));
      break;
    }
    case Family::E: {
      if (rank < 6 || rank > 8) bad();
      sys.ambient_dim_ = 8;
      auto all = e8_simples();
      simples.assign(all.begin(), all.begin() + rank);
      if (rank == 8) {
        roots = e8_roots();
      } else {
        // E6 and E7 are the sub-root-systems spanned by the first simple roots.
        RootSystem e8 = build(Family::E, 8);
        for (RootId id = 0; id < e8.size(); ++id) {
          const auto& c = e8.simple_coords(id);
          if (std::all_of(c.begin() + rank, c.end(), [](int x) { return x == 0; })) roots.push_back(e8.root(id));
        }
      }
      break;
    }
  }
  sys.finish(std::move(roots), std::move(simples));
  return sys;
}

void RootSystem::finish(std::vector<RootVector> roots, std::vector<RootVector> simples) {
  std::set<RootVector> root_set(roots.begin(), roots.end());
  const int r = static_cast<int>(simples.size());

  // Positive roots are reached from the simple roots by repeatedly adding
  // simple roots.
  std::map<RootVector, std::vector<int>> pos;
  std::deque<RootVector> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    pos.emplace(simples[i], c);
    queue.push_back(simples[i]);
  }
  while (!queue.empty()) {
    RootVector b = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      RootVector s = b + simples[i];
      if (root_set.count(s) && !pos.count(s)) {
        auto c = pos.at(b);
        c[i] += 1;
        pos.emplace(s, c);
        queue.push_back(s);
      }
    }
  }
  if (pos.size() * 2 != root_set.size()) throw Error("positive roots do not account for half of the root system");

  struct Entry {
    RootVector v;
    std::vector<int> c;
    int h;
  };
  std::vector<Entry> entries;
  for (auto& [v, c] : pos) entries.push_back({v, c, std::accumulate(c.begin(), c.end(), 0)});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.c > b.c;
  });

  const int np = static_cast<int>(entries.size());
  roots_.clear();
  roots_.reserve(2 * np);
  simple_coords_.clear();
  for (const auto& e : entries) {
    roots_.push_back(e.v);
    simple_coords_.push_back(e.c);
  }
  for (const auto& e : entries) {
    roots_.push_back(-e.v);
    auto c = e.c;
    for (auto& x : c) x = -x;
    simple_coords_.push_back(c);
  }
  for (const auto& v : roots_)
    if (!root_set.count(v) || !root_set.count(-v)) throw Error("root set is not symmetric");

  const int n = size();
  positive_.assign(n, false);
  positives_.clear();
  neg_.resize(n);
  height_.resize(n);
  for (int i = 0; i < np; ++i) {
    positive_[i] = true;
    positives_.push_back(i);
    neg_[i] = i + np;
    neg_[i + np] = i;
  }
  index_.clear();
  index_by_simple_.clear();
  for (int i = 0; i < n; ++i) {
    index_.emplace(roots_[i], i);
    index_by_simple_.emplace(simple_coords_[i], i);
    height_[i] = std::accumulate(simple_coords_[i].begin(), simple_coords_[i].end(), 0);
  }
  simples_.clear();
  for (const auto& s : simples) simples_.push_back(index_.at(s));

  sum_.assign(static_cast<std::size_t>(n) * n, -1);
  inner2_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index_.find(roots_[a] + roots_[b]);
      if (it != index_.end()) sum_[a * n + b] = it->second;
      Rational ip = inner(roots_[a], roots_[b]) * 2;
      if (ip.denominator() != 1) throw Error("non-integral 2(a,b)");
      inner2_[a * n + b] = static_cast<int>(ip.numerator());
    }

  int max_norm = 0;
  for (int a = 0; a < n; ++a) max_norm = std::max(max_norm, inner2(a, a));
  if (max_norm != 4) throw Error("long roots are not normalized to length^2 = 2");
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

std::optional<RootId> RootSystem::find(const RootVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<RootId> RootSystem::find_by_simple_coords(const std::vector<int>& c) const {
  auto it = index_by_simple_.find(c);
  if (it == index_by_simple_.end()) return std::nullopt;
  return it->second;
}

std::optional<RootId> RootSystem::sum(RootId a, RootId b) const {
  int s = sum_[a * size() + b];
  if (s < 0) return std::nullopt;
  return s;
}

Rational RootSystem::inner(const RootVector& x, const RootVector& y) const {
  if (x.ambient_dim() != ambient_dim_ || y.ambient_dim() != ambient_dim_)
    throw DimensionMismatch("vector dimension does not match the ambient dimension of " + name());
  std::int64_t dot = 0;
  for (int i = 0; i < ambient_dim_; ++i) dot += static_cast<std::int64_t>(x.coords[i]) * y.coords[i];
  return Rational(dot, 4) * scale_;
}

bool RootSystem::is_root(const RootVector& x) const {
  if (x.ambient_dim() != ambient_dim_) throw DimensionMismatch("vector dimension does not match " + name());
  return index_.count(x) > 0;
}

std::optional<RootVector> RootSystem::add(const RootVector& x, const RootVector& y) const {
  RootVector s = x + y;
  if (is_root(s)) return s;
  return std::nullopt;
}

RootId RootSystem::reflect(RootId beta, RootId alpha) const {
  // 2 (b, a) / (a, a) is an integer (Cartan integer).
  int num = 2 * inner2(beta, alpha);
  int den = inner2(alpha, alpha);
  int k = num / den;
  RootVector v = roots_[beta];
  for (int i = 0; i < ambient_dim_; ++i) v.coords[i] -= k * roots_[alpha].coords[i];
  auto id = find(v);
  if (!id) throw Error("reflection left the root system");
  return *id;
}

std::string RootSystem::label(RootId id) const {
  std::string s = positive_[id] ? "" : "-";
  for (int c : simple_coords_[id]) s += std::to_string(std::abs(c));
  return s;
}

std::string RootSystem::ambient_string(RootId id) const {
  const auto& c = roots_[id].coords;
  bool half = std::any_of(c.begin(), c.end(), [](int x) { return x % 2 != 0; });
  std::ostringstream os;
  if (half) {
    os << "1/2(";
    for (int i = 0; i < ambient_dim_; ++i) os << (c[i] > 0 ? (i ? "+" : "") : "-") << "e" << i + 1;
    os << ")";
    return os.str();
  }
  bool first = true;
  for (int i = 0; i < ambient_dim_; ++i) {
    int v = c[i] / 2;
    if (v == 0) continue;
    if (v < 0) os << "-";
    else if (!first) os << "+";
    if (std::abs(v) != 1) os << std::abs(v);
    os << "e" << i + 1;
    first = false;
  }
  return os.str();
}

bool precedes(const RootSystem& sys, RootId a, RootId d) {
  auto diff = sys.difference(d, a);
  return diff && sys.is_positive(*diff);
}

bool long_orbit_is_transitive(const RootSystem& sys) {
  std::vector<RootId> longs;
  for (RootId a = 0; a < sys.size(); ++a)
    if (sys.is_long(a)) longs.push_back(a);
  std::vector<bool> seen(sys.size(), false);
  std::deque<RootId> queue{longs.front()};
  seen[longs.front()] = true;
  while (!queue.empty()) {
    RootId b = queue.front();
    queue.pop_front();
    for (RootId a = 0; a < sys.size(); ++a) {
      RootId r = sys.reflect(b, a);
      if (!seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }
  for (RootId a = 0; a < sys.size(); ++a)
    if (seen[a] != sys.is_long(a)) return false;
  return true;
}

std::vector<RootId> w_set(const RootSystem& sys, RootId delta) {
  std::vector<RootId> out;
  for (RootId a = 0; a < sys.size(); ++a)
    if (sys.difference(delta, a)) out.push_back(a);
  return out;
}

int w_pair_count(const RootSystem& sys, RootId delta) {
  int count = 0;
  for (RootId a = 0; a < sys.size(); ++a) {
    auto b = sys.difference(delta, a);
    if (b && a < *b) ++count;
  }
  return count;
}

nlohmann::json to_json(const RootSystem& sys) {
  nlohmann::json j;
  j["family"] = std::string(1, family_letter(sys.family()));
  j["rank"] = sys.rank();
  auto s = sys.norm_scale();
  j["scale"] = std::to_string(s.numerator()) + (s.denominator() == 1 ? "" : "/" + std::to_string(s.denominator()));
  j["simples"] = nlohmann::json::array();
  for (RootId id : sys.simples()) j["simples"].push_back(sys.root(id).coords);
  j["positives"] = nlohmann::json::array();
  for (RootId id : sys.positives()) j["positives"].push_back(sys.root(id).coords);
  return j;
}

}  // namespace flagmorse
