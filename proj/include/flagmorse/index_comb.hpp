// Index combinatorics: the support set Gamma of an initial velocity, the
// superminimal root delta, the sets S_delta and T_delta, the two conditions
// on them, the invariant ell and the resulting lower bound on the index.
#pragma once

#include "flagmorse/parabolic.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagmorse {

struct GammaSet {
  std::vector<RootId> support;                          // sorted by id
  std::map<RootId, std::pair<double, double>> coeffs;  // (a, b) per root

  bool contains(RootId a) const { return coeffs.count(a) > 0; }
};

/// Throws InvalidArgument when the support is empty, leaves Delta_m+ or has a
/// zero coefficient pair.
GammaSet make_gamma(const ParabolicSplit& sp, const std::vector<std::pair<RootId, std::pair<double, double>>>& entries);
/// All of Delta_m+ with coefficients (1, 0).
GammaSet full_gamma(const ParabolicSplit& sp);
/// Parses "011:1,0;111:0.5,2"; each root is given by its simple-root
/// coordinates and the coefficient part may be omitted (meaning 1,0).
GammaSet parse_gamma(const ParabolicSplit& sp, const std::string& text);
std::string format_gamma(const RootSystem& sys, const GammaSet& gamma);

struct STSets {
  RootId delta = -1;
  std::vector<RootId> s_set;
  std::vector<RootId> t_set;
  int ell = 0;
  int h = 0;
  bool starred = false;
};

/// Every delta in Gamma that is minimal in Gamma and has no a < b < delta
/// with a in Gamma.
std::vector<RootId> superminimal_candidates(const ParabolicSplit& sp, const GammaSet& gamma);
/// The candidate with lexicographically smallest scaled coordinates.
std::optional<RootId> superminimal(const ParabolicSplit& sp, const GammaSet& gamma);
/// The candidate chosen by the case analysis: long roots first, then roots
/// with a negative ambient coordinate, then lexicographic order.
std::optional<RootId> preferred_superminimal(const ParabolicSplit& sp, const GammaSet& gamma);

STSets st_sets(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta);

struct Condition1Result {
  bool holds = true;
  std::optional<std::array<RootId, 3>> witness;  // beta0, beta1, lambda
};
struct Condition2Result {
  bool holds = true;
  std::optional<std::pair<RootId, RootId>> witness;
};

Condition1Result condition1(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta,
                            const std::vector<RootId>& t_set);
Condition2Result condition2(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta,
                            const std::vector<RootId>& s_set);

/// m + n - (v - ell) - v + 1; not clamped.
long index_lower_bound(long m, long n, long v, long ell);
/// m + n - (v - ell) - v.
long lambda0(long m, long n, long v, long ell);
/// Complex dimension count m + ell + h - v + n - v + 1.
long dimension_count(long m, long n, long v, long ell, long h);

struct EllFlags {
  bool all_long_painted = false;  // B_r with every long simple root painted
  bool special_maximal = false;   // C_r maximal parabolic containing C_{r-1}
};

/// Tabulated ell: A_r r, B_r 2r-2, C_r r, D_r 2r-3, E 11/17/29, with the
/// two documented improvements to 2r-1.
int ell_table(Family family, int rank, EllFlags flags = {});

/// Whether a painting is the one each improvement flag refers to.
bool is_all_long_painted(const RootSystem& sys, const PaintedDiagram& painted);
bool is_special_maximal(const RootSystem& sys, const PaintedDiagram& painted);

/// e_i (1-based) and sums of such, looked up in the system; nullopt when not
/// a root.
std::optional<RootId> root_from_ambient(const RootSystem& sys, const std::vector<std::pair<int, int>>& terms);

struct BCaseResult {
  STSets sets;                       // displayed T, general S
  std::vector<RootId> t_general;     // T from the general definition
  int short_index = 0;               // i with delta = e_i
  Condition1Result c1;
  Condition2Result c2;
};

/// Short-root case of B_r: delta = e_i. Throws InvalidArgument when the
/// system is not B or delta is not of that shape, HypothesisViolated when
/// some e_k with k > i lies in Delta_k.
BCaseResult b_case_sets(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta);

struct CCaseResult {
  STSets starred;
  STSets plain;
  std::vector<RootId> u_set, v_set;
  Condition1Result c1;
  Condition2Result c2;
};

/// Short-root case of C_r: delta = e_i - e_j or e_i + e_j (i < j). Throws
/// UnsupportedDelta for any other delta.
CCaseResult c_case_starred_sets(const ParabolicSplit& sp, const GammaSet& gamma, RootId delta);

nlohmann::json to_json(const RootSystem& sys, const STSets& st);

}  // namespace flagmorse
