#include "flagmorse/linalg.hpp"

#include "flagmorse/error.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace flagmorse {

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;
  const auto n = a.rows();
  if (n == 0) return a;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

  double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm > theta13) s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
  Eigen::MatrixXd x = a / std::ldexp(1.0, s);

  Eigen::MatrixXd x2 = x * x, x4 = x2 * x2, x6 = x4 * x2;
  Eigen::MatrixXd u = x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
  Eigen::MatrixXd v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;
  // Scaling by b0 keeps exp(0) exactly the identity.
  u /= b[0];
  v /= b[0];
  Eigen::MatrixXd r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("quadrature needs at least one node");
  GaussLegendre g;
  g.nodes.resize(n);
  g.weights.resize(n);
  // Legendre P_n and its derivative at x.
  auto legendre = [n](double x) {
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::make_pair(p1, n * (x * p1 - p0) / (x * x - 1));
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, dp] = legendre(x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double dp = legendre(x).second;
    double w = 2 / ((1 - x * x) * dp * dp);
    // Map [-1, 1] to [0, 1].
    g.nodes[i] = 0.5 * (1 - x);
    g.nodes[n - 1 - i] = 0.5 * (1 + x);
    g.weights[i] = g.weights[n - 1 - i] = 0.5 * w;
  }
  return g;
}

}  // namespace flagmorse
