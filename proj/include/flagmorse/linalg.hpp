#pragma once

#include <Eigen/Dense>

#include <vector>

namespace flagmorse {

/// Matrix exponential by scaling and squaring with a degree-13 Pade
/// approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

struct GaussLegendre {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // summing to 1
};

/// n-point rule on [0, 1].
GaussLegendre gauss_legendre(int n);

}  // namespace flagmorse
