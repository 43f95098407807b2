// Second-variation quantities along a geodesic with initial velocity gdot,
// evaluated in a frame parallel for the canonical connection.
#pragma once

#include "flagmorse/frame.hpp"
#include "flagmorse/index_comb.hpp"

#include <utility>
#include <vector>

namespace flagmorse {

/// sum over Gamma of a X_l + b J X_l, as an m-vector.
Vec gdot_from_gamma(const RealFormFrame& frame, const GammaSet& gamma);
/// a X_d + b J X_d as an m-vector.
Vec x_tilde(const RealFormFrame& frame, RootId delta, double a, double b);
/// Unit-free m-vector a X_r + b Y_r for one root.
Vec root_field(const RealFormFrame& frame, RootId root, double a, double b);

/// 1/2 |R X|^2 + |[X, gdot]_k|^2 + |[JX, gdot]_k|^2 at one time slice.
double hessian_integrand(const RealFormFrame& frame, const Vec& gdot, const Mat& r, const Vec& x);

/// -int_0^1 of the integrand along the hat-parallel field with X(0) = x0.
double complex_hessian(const RealFormFrame& frame, const Vec& gdot, const Vec& x0, int nodes = 64);

/// Whether [E_a, gdot^{0,1}] lies in m^{0,1} for every l in Gamma, i.e. the
/// hessian of a field starting in V_a vanishes.
bool bracket_condition_holds(const ParabolicSplit& sp, const GammaSet& gamma, RootId alpha);

/// Whether [E_a, E_-l]_m lies in m^{0,1} for every l in `support`, i.e. the
/// field starting in V_a is in the kernel of R.
bool m_condition_holds(const ParabolicSplit& sp, const std::vector<RootId>& support, RootId alpha);

/// Unordered pairs {a, b} of positive roots with a + b = delta (a < b by id).
std::vector<std::pair<RootId, RootId>> positive_pairs(const RootSystem& sys, RootId delta);
/// Pairs {a, delta - a} drawn from S_delta.
std::vector<std::pair<RootId, RootId>> s_pairs(const RootSystem& sys, RootId delta, const std::vector<RootId>& s_set);

struct MapI {
  Mat matrix;                 // on S_0 coordinates
  Mat j;                      // J restricted to S_0
  std::vector<int> indices;   // full-frame index of each S_0 coordinate
  std::vector<std::pair<RootId, RootId>> pairs;
  double n0 = 0;              // min |c| over the pairs
};

/// The operator I_{a,b} on S_0 = sum of V_a + V_b over the pairs. Throws
/// DegenerateCoefficients when a = b = 0.
MapI map_I(const RealFormFrame& frame, RootId delta, double a, double b,
           const std::vector<std::pair<RootId, RootId>>& pairs);

/// Lifts S_0 coordinates to a full frame vector and back.
Vec s0_to_full(const RealFormFrame& frame, const MapI& I, const Vec& s);
Vec full_to_s0(const MapI& I, const Vec& x);

/// <[y, x]_m - [Jy, Jx]_m, gdot> for m-vectors.
double p_pairing(const RealFormFrame& frame, const Vec& x, const Vec& y, const Vec& gdot);
/// Smallest N with |P(x, y)| <= N |x| |y| for all x, y.
double p_bound(const RealFormFrame& frame, const Vec& gdot);

/// Q(k) = A + C k + B k^2 for one configuration Z = cos(kt)(X + W) - sin(kt)(Y + IW).
struct QTerms {
  double a = 0, b = 0, c = 0;
  double at(double k) const { return a + c * k + b * k * k; }
};

/// x0, y0: T-part initial vectors, w0 and iw0 = I w0: S-part; all m-vectors.
QTerms q_terms(const RealFormFrame& frame, const Vec& gdot, const Vec& x0, const Vec& y0, const Vec& w0,
               const Vec& iw0, int nodes = 64);
double q_form(const RealFormFrame& frame, const Vec& gdot, const Vec& x0, const Vec& y0, const Vec& w0,
              const Vec& iw0, double k, int nodes = 64);

struct KSearch {
  bool found = false;
  double k = 0;
  double margin = 0;  // max over configurations of Q(k)
  int halvings = 0;
};
/// Halves k from 1 until Q(k) < 0 for every configuration.
KSearch k_search(const std::vector<QTerms>& configs, int max_halvings = 60);

struct Perturbation {
  Vec gdot;
  std::vector<RootId> support;
};
/// exp(t ad X_r) gdot for r in Delta_k; throws NotInK otherwise.
Perturbation adjoint_perturb(const RealFormFrame& frame, const Vec& gdot, RootId root_k, double t = 1e-3,
                             double threshold = 1e-9);

}  // namespace flagmorse
