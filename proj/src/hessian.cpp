#include "flagmorse/hessian.hpp"

#include "flagmorse/linalg.hpp"

#include <cmath>
#include <limits>

namespace flagmorse {

Vec root_field(const RealFormFrame& frame, RootId root, double a, double b) {
  Vec v = Vec::Zero(frame.m_dim());
  v[frame.mx_index(root)] = a;
  v[frame.my_index(root)] = b;
  return v;
}

Vec gdot_from_gamma(const RealFormFrame& frame, const GammaSet& gamma) {
  Vec v = Vec::Zero(frame.m_dim());
  for (RootId l : gamma.support) {
    auto [a, b] = gamma.coeffs.at(l);
    v += root_field(frame, l, a, b);
  }
  return v;
}

Vec x_tilde(const RealFormFrame& frame, RootId delta, double a, double b) { return root_field(frame, delta, a, b); }

double hessian_integrand(const RealFormFrame& frame, const Vec& gdot, const Mat& r, const Vec& x) {
  Vec rx = r * x;
  Vec g = frame.embed_m(gdot);
  Vec kx = frame.bracket_k(frame.embed_m(x), g);
  Vec kjx = frame.bracket_k(frame.embed_m(frame.J() * x), g);
  return 0.5 * frame.inner_m(rx, rx) + frame.norm2_k(kx) + frame.norm2_k(kjx);
}

double complex_hessian(const RealFormFrame& frame, const Vec& gdot, const Vec& x0, int nodes) {
  Mat r = frame.r_operator(gdot);
  auto q = gauss_legendre(nodes);
  double sum = 0;
  for (int i = 0; i < nodes; ++i) {
    Vec x = hat_transport_from_r(r, q.nodes[i]) * x0;
    sum += q.weights[i] * hessian_integrand(frame, gdot, r, x);
  }
  return -sum;
}

bool bracket_condition_holds(const ParabolicSplit& sp, const GammaSet& gamma, RootId alpha) {
  const RootSystem& sys = sp.system();
  for (RootId l : gamma.support) {
    if (l == alpha) return false;  // lands in the Cartan part
    auto d = sys.difference(alpha, l);
    if (d && (sys.is_positive(*d) || sp.in_k(*d))) return false;
  }
  return true;
}

bool m_condition_holds(const ParabolicSplit& sp, const std::vector<RootId>& support, RootId alpha) {
  const RootSystem& sys = sp.system();
  for (RootId l : support) {
    auto d = sys.difference(alpha, l);
    if (d && sp.in_m_pos(*d)) return false;
  }
  return true;
}

std::vector<std::pair<RootId, RootId>> positive_pairs(const RootSystem& sys, RootId delta) {
  std::vector<std::pair<RootId, RootId>> out;
  for (RootId a : sys.positives()) {
    auto b = sys.difference(delta, a);
    if (b && sys.is_positive(*b) && a < *b) out.emplace_back(a, *b);
  }
  return out;
}

std::vector<std::pair<RootId, RootId>> s_pairs(const RootSystem& sys, RootId delta, const std::vector<RootId>& s_set) {
  std::vector<std::pair<RootId, RootId>> out;
  for (RootId a : s_set) {
    auto b = sys.difference(delta, a);
    if (b && a < *b) out.emplace_back(a, *b);
  }
  return out;
}

MapI map_I(const RealFormFrame& frame, RootId delta, double a, double b,
           const std::vector<std::pair<RootId, RootId>>& pairs) {
  const double norm = std::hypot(a, b);
  if (norm == 0.0) throw DegenerateCoefficients("map I needs (a, b) != (0, 0)");
  MapI I;
  I.pairs = pairs;
  I.n0 = pairs.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (auto [x, y] : pairs)
    for (RootId root : {x, y}) {
      I.indices.push_back(frame.x_index(root));
      I.indices.push_back(frame.y_index(root));
    }
  const int n = static_cast<int>(I.indices.size());
  I.matrix = Mat::Zero(n, n);
  I.j = Mat::Zero(n, n);
  Vec xt = Vec::Zero(frame.dim());
  xt[frame.x_index(delta)] = a;
  xt[frame.y_index(delta)] = b;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    double c = std::abs(frame.chevalley().c(pairs[p].first, pairs[p].second));
    I.n0 = std::min(I.n0, c);
    const int base = 4 * static_cast<int>(p);
    for (int col = base; col < base + 4; ++col) {
      Vec br = frame.bracket(xt, Vec::Unit(frame.dim(), I.indices[col]));
      for (int row = base; row < base + 4; ++row) I.matrix(row, col) = br[I.indices[row]] / (norm * c);
    }
    for (int q = base; q < base + 4; q += 2) {
      I.j(q + 1, q) = 1.0;
      I.j(q, q + 1) = -1.0;
    }
  }
  return I;
}

Vec s0_to_full(const RealFormFrame& frame, const MapI& I, const Vec& s) {
  Vec x = Vec::Zero(frame.dim());
  for (std::size_t i = 0; i < I.indices.size(); ++i) x[I.indices[i]] = s[i];
  return x;
}

Vec full_to_s0(const MapI& I, const Vec& x) {
  Vec s(I.indices.size());
  for (std::size_t i = 0; i < I.indices.size(); ++i) s[i] = x[I.indices[i]];
  return s;
}

double p_pairing(const RealFormFrame& frame, const Vec& x, const Vec& y, const Vec& gdot) {
  const Mat& j = frame.J();
  Vec w = frame.bracket_m(frame.embed_m(y), frame.embed_m(x)) -
          frame.bracket_m(frame.embed_m(j * y), frame.embed_m(j * x));
  return frame.inner_m(w, gdot);
}

double p_bound(const RealFormFrame& frame, const Vec& gdot) {
  const int n = frame.m_dim();
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = p_pairing(frame, Vec::Unit(n, i), Vec::Unit(n, k), gdot);
  // Coordinate vectors have |e_i| = sqrt(2).
  return Eigen::JacobiSVD<Mat>(m).singularValues()[0] / 2.0;
}

QTerms q_terms(const RealFormFrame& frame, const Vec& gdot, const Vec& x0, const Vec& y0, const Vec& w0,
               const Vec& iw0, int nodes) {
  Mat r = frame.r_operator(gdot);
  auto q = gauss_legendre(nodes);
  QTerms t;
  for (int i = 0; i < nodes; ++i) {
    Mat u = hat_transport_from_r(r, q.nodes[i]);
    Vec x = u * (x0 + w0), y = u * (y0 + iw0);
    double w = q.weights[i];
    t.a -= w * (hessian_integrand(frame, gdot, r, x) + hessian_integrand(frame, gdot, r, y));
    t.b += w * 2.0 * (frame.inner_m(x, x) + frame.inner_m(y, y));
    t.c += w * 2.0 * p_pairing(frame, x, y, gdot);
  }
  return t;
}

double q_form(const RealFormFrame& frame, const Vec& gdot, const Vec& x0, const Vec& y0, const Vec& w0,
              const Vec& iw0, double k, int nodes) {
  return q_terms(frame, gdot, x0, y0, w0, iw0, nodes).at(k);
}

KSearch k_search(const std::vector<QTerms>& configs, int max_halvings) {
  KSearch s;
  double k = 1.0;
  for (int h = 0; h <= max_halvings; ++h) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& c : configs) worst = std::max(worst, c.at(k));
    if (worst < 0) {
      s.found = true;
      s.k = k;
      s.margin = worst;
      s.halvings = h;
      return s;
    }
    s.k = k;
    s.margin = worst;
    s.halvings = h;
    k /= 2;
  }
  return s;
}

Perturbation adjoint_perturb(const RealFormFrame& frame, const Vec& gdot, RootId root_k, double t,
                             double threshold) {
  const RootSystem& sys = frame.system();
  const ParabolicSplit& sp = frame.split();
  if (!sp.in_k(root_k)) throw NotInK("root " + sys.label(root_k) + " is not in Delta_k");
  if (!sys.is_positive(root_k)) root_k = sys.negate(root_k);
  Vec x = Vec::Zero(frame.dim());
  x[frame.x_index(root_k)] = 1.0;
  Vec moved = expm(t * frame.ad(x)) * frame.embed_m(gdot);
  Perturbation p;
  p.gdot = frame.m_part(moved);
  const double cut = threshold * gdot.norm();
  for (RootId a : sp.delta_m_pos())
    if (std::hypot(p.gdot[frame.mx_index(a)], p.gdot[frame.my_index(a)]) > cut) p.support.push_back(a);
  return p;
}

}  // namespace flagmorse
