// Root systems of the classical and exceptional simply-laced families with
// exact arithmetic.
//
// Coordinates are stored as integers equal to twice the usual Euclidean
// coordinates, so that the half-integer spinor roots of E6/E7/E8 stay exact.
// The inner product is normalized so that every long root has (a, a) = 2.
#pragma once

#include "flagmorse/error.hpp"

#include <boost/rational.hpp>
#include "json.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flagmorse {

using Rational = boost::rational<std::int64_t>;

enum class Family { A, B, C, D, E };

char family_letter(Family f);
Family parse_family(const std::string& s);

struct RootVector {
  std::vector<int> coords;  // Euclidean coordinates times 2

  int ambient_dim() const { return static_cast<int>(coords.size()); }
  auto operator<=>(const RootVector&) const = default;
};

RootVector operator+(const RootVector& x, const RootVector& y);
RootVector operator-(const RootVector& x, const RootVector& y);
RootVector operator-(const RootVector& x);

using RootId = int;

class RootSystem {
 public:
  /// Builds A_r (r >= 1), B_r (r >= 2), C_r (r >= 3), D_r (r >= 4) or
  /// E_6/E_7/E_8. Throws UnsupportedFamily otherwise.
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  std::string name() const;

  /// s with (x, y) = s * (dot product of unscaled coordinates).
  Rational norm_scale() const { return scale_; }

  int size() const { return static_cast<int>(roots_.size()); }
  const RootVector& root(RootId id) const { return roots_[id]; }
  const std::vector<RootId>& positives() const { return positives_; }
  const std::vector<RootId>& simples() const { return simples_; }
  bool is_positive(RootId id) const { return positive_[id]; }

  /// Expansion over the simple roots (all entries of one sign).
  const std::vector<int>& simple_coords(RootId id) const { return simple_coords_[id]; }
  int height(RootId id) const { return height_[id]; }

  std::optional<RootId> find(const RootVector& v) const;
  std::optional<RootId> find_by_simple_coords(const std::vector<int>& c) const;
  RootId negate(RootId id) const { return neg_[id]; }
  /// a + b when it is a root.
  std::optional<RootId> sum(RootId a, RootId b) const;
  /// a - b when it is a root.
  std::optional<RootId> difference(RootId a, RootId b) const { return sum(a, neg_[b]); }

  /// 2 (a, b); always an integer for the supported systems.
  int inner2(RootId a, RootId b) const { return inner2_[a * size() + b]; }
  Rational inner(RootId a, RootId b) const { return Rational(inner2(a, b), 2); }
  /// Normalized inner product of arbitrary vectors of the ambient dimension.
  Rational inner(const RootVector& x, const RootVector& y) const;

  bool is_root(const RootVector& x) const;
  std::optional<RootVector> add(const RootVector& x, const RootVector& y) const;
  bool is_long(RootId a) const { return inner2(a, a) == 4; }

  /// b - 2 (b, a) / (a, a) a.
  RootId reflect(RootId beta, RootId alpha) const;

  /// Simple-root coordinates as a digit string, e.g. "0110" (negative roots
  /// get a leading '-').
  std::string label(RootId id) const;
  /// Ambient rendering such as "e1-e2" or "1/2(e1-e2-e3-e4-e5-e6-e7+e8)".
  std::string ambient_string(RootId id) const;

 private:
  RootSystem() = default;
  void finish(std::vector<RootVector> roots, std::vector<RootVector> simples);

  Family family_ = Family::A;
  int rank_ = 0;
  int ambient_dim_ = 0;
  Rational scale_{1};
  std::vector<RootVector> roots_;
  std::vector<RootId> positives_;
  std::vector<RootId> simples_;
  std::vector<bool> positive_;
  std::vector<std::vector<int>> simple_coords_;
  std::vector<int> height_;
  std::vector<RootId> neg_;
  std::vector<int> sum_;     // size()^2, -1 when not a root
  std::vector<int> inner2_;  // size()^2
  std::map<RootVector, RootId> index_;
  std::map<std::vector<int>, RootId> index_by_simple_;
};

/// a < d in the (non-transitive) relation "d - a is a positive root".
bool precedes(const RootSystem& sys, RootId a, RootId d);

/// Orbit of one long root under the reflection group equals the set of all
/// long roots.
bool long_orbit_is_transitive(const RootSystem& sys);

/// { a in roots | d - a is a root }, sorted by id.
std::vector<RootId> w_set(const RootSystem& sys, RootId delta);
/// Number of unordered pairs {a, b} of roots with a + b = d.
int w_pair_count(const RootSystem& sys, RootId delta);

/// {family, rank, scale, simples, positives} with scaled integer coordinates.
nlohmann::json to_json(const RootSystem& sys);

}  // namespace flagmorse
