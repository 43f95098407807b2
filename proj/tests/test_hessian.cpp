#include "doctest.h"

#include "flagmorse/hessian.hpp"
#include "flagmorse/linalg.hpp"

#include <random>

using namespace flagmorse;

namespace {

struct Fixture {
  RootSystem sys;
  ChevalleyData data;
  ParabolicSplit sp;
  RealFormFrame frame;
  Fixture(Family f, int r, std::vector<int> painted = {})
      : sys(RootSystem::build(f, r)), data(sys), sp(sys, make_painted(sys, painted)), frame(sp, data) {}
};

GammaSet gamma_of(const ParabolicSplit& sp, const std::vector<std::pair<RootId, std::pair<double, double>>>& e) {
  return make_gamma(sp, e);
}

Vec random_m(const RealFormFrame& f, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(f.m_dim());
  for (auto& x : v) x = g(rng);
  return v / f.norm_m(v);
}

}  // namespace

TEST_CASE("hessian is minus the integral of the integrand") {
  Fixture fx(Family::B, 3);
  const auto& f = fx.frame;
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    Vec g = random_m(f, rng), x = random_m(f, rng);
    Mat r = f.r_operator(g);
    GaussLegendre q = gauss_legendre(64);
    double s = 0;
    for (int i = 0; i < 64; ++i) s += q.weights[i] * hessian_integrand(f, g, r, hat_transport_from_r(r, q.nodes[i]) * x);
    double h = complex_hessian(f, g, x);
    CHECK(h == doctest::Approx(-s).epsilon(1e-12));
    CHECK(h <= 1e-14);
    CHECK(std::abs(complex_hessian(f, g, x, 128) - h) < 1e-10);
    Vec bk = f.bracket_k(f.embed_m(x), f.embed_m(g)), bjk = f.bracket_k(f.embed_m(f.J() * x), f.embed_m(g));
    Vec rx = r * x;
    CHECK(hessian_integrand(f, g, r, x) ==
          doctest::Approx(0.5 * f.inner_m(rx, rx) + f.norm2_k(bk) + f.norm2_k(bjk)).epsilon(1e-12));
  }
}

TEST_CASE("hessian sign follows the bracket classification") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  for (auto fx_args : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::C, 3}}) {
    Fixture fx(fx_args.first, fx_args.second);
    const auto& f = fx.frame;
    const auto& m = fx.sp.delta_m_pos();
    int negative = 0, zero = 0;
    for (int t = 0; t < 60; ++t) {
      std::vector<std::pair<RootId, std::pair<double, double>>> e;
      for (RootId r : m)
        if (rng() % 4 == 0) e.push_back({r, {nd(rng), nd(rng)}});
      if (e.empty()) e.push_back({m[rng() % m.size()], {1.0, 0.5}});
      GammaSet gamma = gamma_of(fx.sp, e);
      Vec g = gdot_from_gamma(f, gamma);
      g /= f.norm_m(g);
      for (RootId a : m) {
        Vec x = root_field(f, a, nd(rng), nd(rng));
        x /= f.norm_m(x);
        double h = complex_hessian(f, g, x);
        if (bracket_condition_holds(fx.sp, gamma, a)) {
          CHECK(std::abs(h) < 1e-8);
          ++zero;
        } else {
          CHECK(h < -1e-8);
          ++negative;
        }
      }
    }
    CHECK(negative > 0);
    CHECK(zero > 0);
  }
}

TEST_CASE("map I") {
  Fixture fx(Family::C, 3);
  const auto& f = fx.frame;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (RootId d : fx.sys.positives()) {
    auto pairs = positive_pairs(fx.sys, d);
    if (pairs.empty()) continue;
    double a = nd(rng), b = nd(rng), ab = std::hypot(a, b);
    MapI I = map_I(f, d, a, b, pairs);
    const auto n = I.matrix.rows();
    CHECK((I.matrix * I.matrix + Mat::Identity(n, n)).norm() < 1e-12);
    CHECK((I.matrix * I.j + I.j * I.matrix).norm() < 1e-12);
    CHECK(I.n0 == doctest::Approx(n0_constant(fx.data, pairs)));
    Vec xt = Vec::Zero(f.dim());
    xt[f.x_index(d)] = a;
    xt[f.y_index(d)] = b;
    for (int t = 0; t < 20; ++t) {
      Vec s(n);
      for (auto& v : s) v = nd(rng);
      Vec x = s0_to_full(f, I, s), ix = s0_to_full(f, I, I.matrix * s);
      CHECK((full_to_s0(I, x) - s).norm() < 1e-14);
      double nx = f.inner(x, x);
      CHECK(f.inner(ix, ix) == doctest::Approx(nx).epsilon(1e-12));
      CHECK(f.inner(f.bracket(ix, x), xt) <= -I.n0 * ab * nx + 1e-10);
    }
    CHECK_THROWS_AS(map_I(f, d, 0.0, 0.0, pairs), DegenerateCoefficients);
  }
}

TEST_CASE("P pairing") {
  Fixture fx(Family::B, 3, {0});
  const auto& f = fx.frame;
  std::mt19937_64 rng(4);
  Vec g = random_m(f, rng);
  double n = p_bound(f, g);
  CHECK(n > 0);
  for (int t = 0; t < 10000; ++t) {
    Vec x = random_m(f, rng), y = random_m(f, rng);
    CHECK(std::abs(p_pairing(f, x, y, g)) <= n * f.norm_m(x) * f.norm_m(y) + 1e-12);
  }
  Vec x = random_m(f, rng);
  CHECK(p_pairing(f, x, Vec::Zero(f.m_dim()), g) == 0.0);
}

TEST_CASE("Q form") {
  Fixture fx(Family::A, 3);
  const auto& f = fx.frame;
  const auto& sys = fx.sys;
  RootId a1 = sys.simples()[0], a2 = sys.simples()[1], a3 = sys.simples()[2];
  RootId d = *sys.sum(*sys.sum(a1, a2), a3);
  double a = 0.8, b = -0.6;
  Vec g = x_tilde(f, d, a, b);
  Vec zero = Vec::Zero(f.m_dim());
  CHECK(q_form(f, g, zero, zero, zero, zero, 0.3) == 0.0);

  GammaSet gamma = gamma_of(fx.sp, {{d, {a, b}}});
  STSets st = st_sets(fx.sp, gamma, d);
  auto pairs = s_pairs(sys, d, st.s_set);
  REQUIRE(!pairs.empty());
  MapI I = map_I(f, d, a, b, pairs);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  Vec s(I.matrix.rows());
  for (auto& v : s) v = nd(rng);
  Vec w = f.m_part(s0_to_full(f, I, s)), iw = f.m_part(s0_to_full(f, I, I.matrix * s));
  QTerms pure = q_terms(f, g, zero, zero, w, iw);
  CHECK(std::abs(pure.a) < 1e-10);
  CHECK(pure.c < 0);
  CHECK(pure.b > 0);
  double kstar = -pure.c / pure.b;
  CHECK(pure.at(kstar / 2) < 0);
  CHECK(pure.at(2 * kstar) > 0);
  CHECK(q_form(f, g, zero, zero, w, iw, kstar / 2) == doctest::Approx(pure.at(kstar / 2)));

  // Mixed configurations with a T part.
  std::vector<QTerms> configs;
  for (int t = 0; t < 20; ++t) {
    Vec x = Vec::Zero(f.m_dim()), y = Vec::Zero(f.m_dim());
    for (RootId r : st.t_set) {
      x += root_field(f, r, nd(rng), nd(rng));
      y += root_field(f, r, nd(rng), nd(rng));
    }
    for (auto& v : s) v = nd(rng);
    Vec wt = f.m_part(s0_to_full(f, I, s)), iwt = f.m_part(s0_to_full(f, I, I.matrix * s));
    configs.push_back(q_terms(f, g, x, y, wt, iwt));
  }
  KSearch ks = k_search(configs);
  CHECK(ks.found);
  CHECK(ks.k > 0);
  CHECK(ks.margin < 0);
  for (const auto& c : configs) CHECK(c.at(ks.k) < 0);
}

TEST_CASE("adjoint perturbation") {
  Fixture fx(Family::B, 3, {2});
  const auto& f = fx.frame;
  const auto& sys = fx.sys;
  RootId e2 = *root_from_ambient(sys, {{2, 1}}), e3 = *root_from_ambient(sys, {{3, 1}});
  RootId e23 = *root_from_ambient(sys, {{2, 1}, {3, -1}});
  Vec g = root_field(f, e2, 1.0, 0.0);
  Perturbation p0 = adjoint_perturb(f, g, e3, 0.0);
  CHECK((p0.gdot - g).norm() == 0.0);
  Perturbation p = adjoint_perturb(f, g, e3);
  CHECK(std::find(p.support.begin(), p.support.end(), e23) != p.support.end());
  CHECK(sys.is_long(e23));
  double t = 1e-3;
  Vec eg = f.embed_m(g);
  Vec xk = Vec::Zero(f.dim());
  xk[f.x_index(e3)] = 1;
  double ad_norm = f.ad(xk).norm();
  CHECK((p.gdot - g).norm() <= t * ad_norm * g.norm() * std::exp(t * ad_norm));
  CHECK_THROWS_AS(adjoint_perturb(f, g, e2), NotInK);
}
