#include "doctest.h"

#include "flagmorse/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

using namespace flagmorse;

TEST_CASE("exponential of zero is the identity") {
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(7, 7);
  CHECK((expm(z) - Eigen::MatrixXd::Identity(7, 7)).norm() == 0.0);
}

TEST_CASE("exponential agrees with the reference implementation") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int n : {1, 2, 5, 12, 40}) {
    for (double scale : {1e-3, 0.5, 3.0, 20.0}) {
      Eigen::MatrixXd a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = scale * g(rng) / std::sqrt(n);
      Eigen::MatrixXd ref = a.exp();
      CAPTURE(n);
      CAPTURE(scale);
      CHECK((expm(a) - ref).norm() / ref.norm() < 1e-12);
    }
  }
}

TEST_CASE("exponential of a skew matrix is orthogonal and satisfies the group law") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) a(i, j) = g(rng);
  Eigen::MatrixXd skew = a - a.transpose();
  Eigen::MatrixXd u = expm(skew);
  CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(10, 10)).norm() < 1e-12);
  CHECK((expm(0.3 * skew) * expm(0.7 * skew) - u).norm() < 1e-11);
}

TEST_CASE("rotation generator") {
  Eigen::MatrixXd a(2, 2);
  a << 0, -1, 1, 0;
  Eigen::MatrixXd u = expm(1.2 * a);
  CHECK(u(0, 0) == doctest::Approx(std::cos(1.2)).epsilon(1e-14));
  CHECK(u(1, 0) == doctest::Approx(std::sin(1.2)).epsilon(1e-14));
}

TEST_CASE("Gauss-Legendre rule") {
  for (int n : {1, 2, 3, 8, 16, 64, 128}) {
    GaussLegendre q = gauss_legendre(n);
    REQUIRE(static_cast<int>(q.nodes.size()) == n);
    double sum = 0;
    for (double w : q.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    // Exact on monomials up to degree 2n - 1.
    for (int k = 0; k <= std::min(2 * n - 1, 40); ++k) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.nodes[i], k);
      CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
    for (double x : q.nodes) CHECK((x > 0 && x < 1));
  }
  GaussLegendre q = gauss_legendre(64);
  double s = 0;
  for (int i = 0; i < 64; ++i) s += q.weights[i] * std::exp(q.nodes[i]);
  CHECK(s == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-15));
}
