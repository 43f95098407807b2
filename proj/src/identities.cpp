#include "flagmorse/identities.hpp"

#include "flagmorse/hessian.hpp"
#include "flagmorse/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

namespace flagmorse {

namespace {

using cd = std::complex<double>;
using Rng = std::mt19937_64;

struct CheckSpec {
  std::string name;
  std::string formula;
  double tol;
};

double cmax(const ComplexElement& z) {
  double m = 0;
  for (const auto& v : z.h) m = std::max(m, std::abs(v));
  for (const auto& v : z.e) m = std::max(m, std::abs(v));
  return m;
}

class Sampler {
 public:
  Sampler(const RealFormFrame& f, Rng& rng) : f_(f), rng_(rng) {}

  double normal() { return normal_(rng_); }
  Vec unit_m() {
    Vec v(f_.m_dim());
    for (auto& x : v) x = normal();
    return v / f_.norm_m(v);
  }
  RootId m_root() {
    const auto& roots = f_.split().delta_m_pos();
    return roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng_)];
  }
  // Field supported on `count` distinct random roots of Delta_m+.
  Vec sparse_m(int count, std::vector<RootId>* support) {
    Vec v = Vec::Zero(f_.m_dim());
    std::vector<RootId> used;
    count = std::min<int>(count, f_.split().delta_m_pos().size());
    while (static_cast<int>(used.size()) < count) {
      RootId a = m_root();
      if (std::find(used.begin(), used.end(), a) != used.end()) continue;
      used.push_back(a);
      v += root_field(f_, a, normal(), normal());
    }
    if (support) *support = used;
    return v / f_.norm_m(v);
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rng& rng_ref() { return rng_; }

 private:
  const RealFormFrame& f_;
  Rng& rng_;
  std::normal_distribution<double> normal_;
};

struct Suite {
  std::string name;
  std::vector<CheckSpec> checks;
  std::function<void(const RealFormFrame&, Sampler&, long, std::vector<double>&)> trial;
};

void bump(std::vector<double>& r, int i, double v) { r[i] = std::max(r[i], std::abs(v)); }

Suite integrability_suite() {
  return {"integrability",
          {{"integrability", "[X,Y]_m + J[JX,Y]_m + J[X,JY]_m - [JX,JY]_m = 0", 1e-10},
           {"associativity", "<x,[y,z]> = <[x,y],z>", 1e-12},
           {"jacobi", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0", 1e-12},
           {"metric-normalization", "<X_a,X_a> = <Y_a,Y_a> = 2, distinct root blocks orthogonal", 1e-12},
           {"j-square", "J^2 = -Id on m", 1e-12},
           {"hermitian", "<Jx,Jy> = <x,y> on m", 1e-12}},
          [](const RealFormFrame& f, Sampler& s, long trial, std::vector<double>& r) {
            const Mat& j = f.J();
            Vec x = s.unit_m(), y = s.unit_m();
            Vec ex = f.embed_m(x), ey = f.embed_m(y), ejx = f.embed_m(j * x), ejy = f.embed_m(j * y);
            Vec v = f.bracket_m(ex, ey) + j * f.bracket_m(ejx, ey) + j * f.bracket_m(ex, ejy) - f.bracket_m(ejx, ejy);
            bump(r, 0, v.cwiseAbs().maxCoeff());
            FrameCheck c = check_frame(f, 1, static_cast<unsigned>(trial));
            bump(r, 1, c.associativity);
            bump(r, 2, c.jacobi);
            bump(r, 3, c.metric_normalization);
            bump(r, 4, c.j_square);
            bump(r, 5, c.hermitian);
          }};
}

Suite mel_suite() {
  return {"mel",
          {{"mel-a", "[X10,Y10]_m lies in m10", 1e-10},
           {"mel-b-formula", "R_Y X = -(Z + conj Z), Z = [X10,Y01]_m - iJ[X10,Y01]_m", 1e-10},
           {"mel-b-equivalence", "R_Y X != 0 iff [X10,Y01]_m not in m01 (mismatch count)", 0.5},
           {"mel-c", "[X10,Y10]_k = 0", 1e-10},
           {"mel-d-identity", "|[X,Y]_k|^2 + |[JX,Y]_k|^2 = 4<[X10,Y01]_k,[X01,Y10]_k>", 1e-10},
           {"mel-d-equivalence", "[Y,X]_k = 0 and [Y,JX]_k = 0 iff [X10,Y01]_k = 0 (mismatch count)", 0.5}},
          [](const RealFormFrame& f, Sampler& s, long, std::vector<double>& r) {
            const ChevalleyData& d = f.chevalley();
            Vec x = s.unit_m(), y = s.unit_m();
            auto x10 = f.part_10(x), x01 = f.part_01(x), y10 = f.part_10(y), y01 = f.part_01(y);
            auto b11 = d.bracket_c(x10, y10);
            bump(r, 0, cmax(f.proj_01(b11)));
            bump(r, 3, cmax(f.proj_k(b11)));
            auto z = cd(2.0) * f.proj_10(d.bracket_c(x10, y01));
            auto res = f.complexify(f.embed_m(f.r_operator(y) * x)) + z + f.conj(z);
            bump(r, 1, cmax(res));
            Vec ex = f.embed_m(x), ey = f.embed_m(y), ejx = f.embed_m(f.J() * x);
            double lhs = f.norm2_k(f.bracket_k(ex, ey)) + f.norm2_k(f.bracket_k(ejx, ey));
            cd rhs = -4.0 * d.pairing(f.proj_k(d.bracket_c(x10, y01)), f.proj_k(d.bracket_c(x01, y10)));
            bump(r, 4, std::abs(lhs - rhs));

            // Sparse inputs for the two equivalences.
            Vec xs = s.sparse_m(1, nullptr), ys = s.sparse_m(s.uniform(1, 2), nullptr);
            auto xs10 = f.part_10(xs), ys01 = f.part_01(ys);
            auto mixed = d.bracket_c(xs10, ys01);
            bool r_nonzero = f.norm_m(f.r_operator(ys) * xs) > 1e-8;
            bool outside = cmax(f.proj_10(mixed)) > 1e-8;
            bump(r, 2, r_nonzero != outside ? 1.0 : 0.0);
            Vec exs = f.embed_m(xs), eys = f.embed_m(ys), ejxs = f.embed_m(f.J() * xs);
            bool k_zero = f.norm2_k(f.bracket_k(eys, exs)) < 1e-16 && f.norm2_k(f.bracket_k(eys, ejxs)) < 1e-16;
            bool ck_zero = cmax(f.proj_k(mixed)) < 1e-8;
            bump(r, 5, k_zero != ck_zero ? 1.0 : 0.0);
          }};
}

Suite onemel_suite() {
  return {"onemel",
          {{"onemel-kernel", "[X10,Y01]_m in m01 implies R_Y X = 0", 1e-10},
           {"onemel-a", "J[Y,X]_m = [JY,X]_m", 1e-10},
           {"onemel-b", "J[Y,X]_m + [Y,JX]_m = 2i([Y10,X10]_m - [Y01,X01]_m)", 1e-10}},
          [](const RealFormFrame& f, Sampler& s, long, std::vector<double>& r) {
            const ChevalleyData& d = f.chevalley();
            const Mat& j = f.J();
            std::vector<RootId> support;
            Vec y = s.sparse_m(s.uniform(1, 3), &support);
            Vec x = Vec::Zero(f.m_dim());
            for (RootId a : f.split().delta_m_pos())
              if (m_condition_holds(f.split(), support, a)) x += root_field(f, a, s.normal(), s.normal());
            if (x.norm() == 0) return;
            x /= f.norm_m(x);
            bump(r, 0, (f.r_operator(y) * x).cwiseAbs().maxCoeff());
            Vec ex = f.embed_m(x), ey = f.embed_m(y);
            Vec jyx = j * f.bracket_m(ey, ex);
            bump(r, 1, (jyx - f.bracket_m(f.embed_m(j * y), ex)).cwiseAbs().maxCoeff());
            auto mpart = [&](const ComplexElement& z) { return f.proj_10(z) + f.proj_01(z); };
            auto z = mpart(d.bracket_c(f.part_10(y), f.part_10(x))) - mpart(d.bracket_c(f.part_01(y), f.part_01(x)));
            z *= cd(0.0, 2.0);
            double imag = 0;
            Vec rhs = f.m_part(f.realify(z, &imag));
            Vec lhs = jyx + f.bracket_m(ey, f.embed_m(j * x));
            bump(r, 2, std::max((lhs - rhs).cwiseAbs().maxCoeff(), imag));
          }};
}

Suite twomel_suite() {
  return {"twomel",
          {{"twomel", "[Xd,[Xd,X]_ab]_ab = -(a^2+b^2) c_ab^2 X", 1e-10},
           {"map-I-square", "I^2 = -Id", 1e-10},
           {"map-I-anticommutes", "IJ = -JI", 1e-10},
           {"map-I-isometry", "|IX| = |X|", 1e-10},
           {"map-I-bound", "<[IX,X],Xd> <= -N0 (a^2+b^2)^(1/2) |X|^2 (excess reported)", 1e-10},
           {"p-pairing-bound", "|P(X,Y)| <= N |X| |Y|, P(X,Y) = <[Y,X]_m - [JY,JX]_m, g>", 1e-10},
           {"p-pairing-s-part", "P(W,IW) <= -2 N0 (a^2+b^2)^(1/2) |W|^2 at one time slice, no k factor", 1e-10}},
          [](const RealFormFrame& f, Sampler& s, long, std::vector<double>& r) {
            const RootSystem& sys = f.system();
            std::vector<RootId> deltas;
            for (RootId d : sys.positives())
              if (!positive_pairs(sys, d).empty()) deltas.push_back(d);
            if (deltas.empty()) return;
            RootId delta = deltas[s.uniform(0, static_cast<int>(deltas.size()) - 1)];
            auto pairs = positive_pairs(sys, delta);
            double a = s.normal(), b = s.normal();
            double ab = std::hypot(a, b);
            MapI I = map_I(f, delta, a, b, pairs);
            const int n = static_cast<int>(I.indices.size());
            Mat id = Mat::Identity(n, n);
            bump(r, 1, (I.matrix * I.matrix + id).cwiseAbs().maxCoeff());
            bump(r, 2, (I.matrix * I.j + I.j * I.matrix).cwiseAbs().maxCoeff());

            Vec xt = Vec::Zero(f.dim());
            xt[f.x_index(delta)] = a;
            xt[f.y_index(delta)] = b;
            // One pair for the double-bracket identity.
            int p = s.uniform(0, static_cast<int>(pairs.size()) - 1);
            Vec sx = Vec::Zero(n);
            for (int i = 4 * p; i < 4 * p + 4; ++i) sx[i] = s.normal();
            auto proj = [&](const Vec& full) {
              Vec out = Vec::Zero(f.dim());
              for (int i = 4 * p; i < 4 * p + 4; ++i) out[I.indices[i]] = full[I.indices[i]];
              return out;
            };
            Vec x = s0_to_full(f, I, sx);
            double c = f.chevalley().c(pairs[p].first, pairs[p].second);
            Vec lhs = proj(f.bracket(xt, proj(f.bracket(xt, x))));
            bump(r, 0, (lhs + (a * a + b * b) * c * c * x).cwiseAbs().maxCoeff() / (1.0 + ab * ab));

            Vec sv(n);
            for (auto& v : sv) v = s.normal();
            Vec full = s0_to_full(f, I, sv), ifull = s0_to_full(f, I, I.matrix * sv);
            double nx = f.inner(full, full);
            bump(r, 3, (f.inner(ifull, ifull) - nx) / nx);
            double excess = (f.inner(f.bracket(ifull, full), xt) + I.n0 * ab * nx) / (ab * nx);
            bump(r, 4, std::max(0.0, excess));

            Vec g = s.unit_m(), px = s.unit_m(), py = s.unit_m();
            double nb = p_bound(f, g);
            bump(r, 5, std::max(0.0, std::abs(p_pairing(f, px, py, g)) - nb * f.norm_m(px) * f.norm_m(py)) / nb);

            // S_0 restricted to pairs inside m, with gdot = Xd-tilde.
            std::vector<std::pair<RootId, RootId>> mpairs;
            for (auto pr : pairs)
              if (f.split().in_m(pr.first) && f.split().in_m(pr.second)) mpairs.push_back(pr);
            if (mpairs.empty() || !f.split().in_m(delta)) return;
            MapI im = map_I(f, delta, a, b, mpairs);
            Vec w(im.indices.size());
            for (auto& v : w) v = s.normal();
            Vec wm = f.m_part(s0_to_full(f, im, w)), iwm = f.m_part(s0_to_full(f, im, im.matrix * w));
            double w2 = f.inner_m(wm, wm);
            double pw = p_pairing(f, wm, iwm, x_tilde(f, delta, a, b));
            bump(r, 6, std::max(0.0, (pw + 2 * im.n0 * ab * w2) / (ab * w2)));
          }};
}

Suite curvature_suite() {
  return {"curvature",
          {{"curvature-symmetry", "K(X,Y) = K(Y,X), K = 1/4|[X,Y]_m|^2 + |[X,Y]_k|^2", 1e-10},
           {"curvature-scaling", "K(sX,Y) = s^2 K(X,Y)", 1e-10},
           {"curvature-nonnegative", "K(X,Y) >= 0 (negative part reported)", 1e-10}},
          [](const RealFormFrame& f, Sampler& s, long, std::vector<double>& r) {
            auto k = [&](const Vec& x, const Vec& y) {
              Vec b = f.bracket(f.embed_m(x), f.embed_m(y));
              Vec m = f.m_part(b);
              return 0.25 * f.inner_m(m, m) + f.norm2_k(f.k_part(b));
            };
            Vec x = s.unit_m(), y = s.unit_m();
            double sc = s.normal();
            double kxy = k(x, y);
            bump(r, 0, kxy - k(y, x));
            bump(r, 1, k(sc * x, y) - sc * sc * kxy);
            bump(r, 2, std::min(0.0, kxy));
          }};
}

Suite ceh_suite() {
  return {"ceh-chain",
          {{"ceh10-expansion",
            "|A+1/2[g,X]_m|^2 + |JA+1/2[g,JX]_m|^2 - K(g,X) - K(g,JX) = 2|A|^2 + <A,[g,X]_m - J[g,JX]_m> - "
            "|[X,g]_k|^2 - |[JX,g]_k|^2",
            1e-10},
           {"bdy7-associativity", "<J[A,JX]_m + J[X,JA]_m, g> = <A, [Jg,JX]_m + J[Jg,X]_m>", 1e-10},
           {"integrand-combination", "[g,X]_m - J[g,JX]_m + [Jg,JX]_m + J[Jg,X]_m = 2 R_g X", 1e-10},
           {"hessian-integrand",
            "2<A, A + R_g X> - |[X,g]_k|^2 - |[JX,g]_k|^2 = -(1/2|R_g X|^2 + |[X,g]_k|^2 + |[JX,g]_k|^2) at A = "
            "-1/2 R_g X",
            1e-10},
           {"r-commutes-with-j", "R_g J = J R_g", 1e-10},
           {"transport-orthogonality", "<X(t), g> = <X(0), g> for X' = -1/2 R_g X", 1e-10},
           {"transport-j", "exp(-t/2 R) J = J exp(-t/2 R)", 1e-10},
           {"transport-kernel", "R_g X(0) = 0 implies X(t) = X(0)", 1e-10},
           {"transport-group", "U(s) U(t) = U(s+t)", 1e-10}},
          [](const RealFormFrame& f, Sampler& s, long, std::vector<double>& r) {
            const Mat& j = f.J();
            Vec g = s.unit_m(), x = s.unit_m(), a = s.unit_m();
            Vec eg = f.embed_m(g), ex = f.embed_m(x), ea = f.embed_m(a);
            Vec ejg = f.embed_m(j * g), ejx = f.embed_m(j * x), eja = f.embed_m(j * a);
            Vec bgx = f.bracket(eg, ex), bgjx = f.bracket(eg, ejx);
            Vec gx_m = f.m_part(bgx), gjx_m = f.m_part(bgjx);
            double kx = f.norm2_k(f.k_part(bgx)), kjx = f.norm2_k(f.k_part(bgjx));
            auto sq = [&](const Vec& v) { return f.inner_m(v, v); };
            double lhs = sq(a + 0.5 * gx_m) + sq(j * a + 0.5 * gjx_m) - (0.25 * sq(gx_m) + kx) - (0.25 * sq(gjx_m) + kjx);
            double rhs = 2 * sq(a) + f.inner_m(a, gx_m - j * gjx_m) - kx - kjx;
            bump(r, 0, lhs - rhs);

            Vec jgjx = f.bracket_m(ejg, ejx), jgx = f.bracket_m(ejg, ex);
            double b_lhs = f.inner_m(j * f.bracket_m(ea, ejx) + j * f.bracket_m(ex, eja), g);
            double b_rhs = f.inner_m(a, jgjx + j * jgx);
            bump(r, 1, b_lhs - b_rhs);

            Mat rg = f.r_operator(g);
            Vec rx = rg * x;
            bump(r, 2, (gx_m - j * gjx_m + jgjx + j * jgx - 2 * rx).cwiseAbs().maxCoeff());
            Vec ahat = -0.5 * rx;
            double h1 = 2 * f.inner_m(ahat, ahat + rx) - kx - kjx;
            double h2 = -(0.5 * sq(rx) + kx + kjx);
            bump(r, 3, h1 - h2);
            bump(r, 4, (rg * j - j * rg).cwiseAbs().maxCoeff());

            double t1 = std::uniform_real_distribution<double>(0.0, 1.0)(s.rng_ref());
            double t2 = std::uniform_real_distribution<double>(0.0, 1.0 - t1)(s.rng_ref());
            Mat u1 = hat_transport_from_r(rg, t1), u2 = hat_transport_from_r(rg, t2);
            Mat u12 = hat_transport_from_r(rg, t1 + t2);
            bump(r, 5, f.inner_m(u1 * x, g) - f.inner_m(x, g));
            bump(r, 6, (u1 * j - j * u1).cwiseAbs().maxCoeff());
            bump(r, 8, (u1 * u2 - u12).cwiseAbs().maxCoeff());

            std::vector<RootId> support;
            Vec gs = s.sparse_m(s.uniform(1, 3), &support);
            Vec xk = Vec::Zero(f.m_dim());
            for (RootId al : f.split().delta_m_pos())
              if (m_condition_holds(f.split(), support, al)) xk += root_field(f, al, s.normal(), s.normal());
            if (xk.norm() > 0) {
              xk /= f.norm_m(xk);
              Mat us = hat_transport(f, gs, t1 + t2);
              bump(r, 7, (us * xk - xk).cwiseAbs().maxCoeff());
            }
          }};
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {integrability_suite(), mel_suite(),       onemel_suite(),
                                         twomel_suite(),        curvature_suite(), ceh_suite()};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    return n;
  }();
  return names;
}

int default_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("FLAGMORSE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, hw);
  }
  return hw;
}

std::string frame_name(const RealFormFrame& frame) {
  return frame.system().name() + "/" + render_painted(frame.system(), frame.split().painted());
}

Report identity_suite(const RealFormFrame& frame, const std::string& suite, long trials, std::uint64_t seed,
                      int threads) {
  auto start = std::chrono::steady_clock::now();
  std::vector<const Suite*> chosen;
  for (const auto& s : suites())
    if (suite == "all" || suite == s.name) chosen.push_back(&s);
  if (chosen.empty()) throw UnknownSuite("unknown suite '" + suite + "'");
  if (trials < 0) throw InvalidArgument("trials must be nonnegative");
  if (threads <= 0) threads = default_threads();
  threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, trials)));

  Report rep;
  rep.suite = suite;
  rep.frame = frame_name(frame);
  rep.seed = seed;
  rep.trials = trials;
  for (std::size_t si = 0; si < chosen.size(); ++si) {
    const Suite& s = *chosen[si];
    const int nc = static_cast<int>(s.checks.size());
    std::vector<std::vector<double>> partial(threads, std::vector<double>(nc, 0.0));
    auto work = [&](int w) {
      for (long t = w; t < trials; t += threads) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(si), static_cast<std::uint32_t>(t)};
        Rng rng(seq);
        Sampler sampler(frame, rng);
        s.trial(frame, sampler, t, partial[w]);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();
    for (int c = 0; c < nc; ++c) {
      CheckResult cr;
      cr.name = s.checks[c].name;
      cr.paper_ref = s.checks[c].formula;
      cr.trials = trials;
      cr.tolerance = s.checks[c].tol;
      for (const auto& p : partial) cr.max_residual = std::max(cr.max_residual, p[c]);
      cr.pass = cr.max_residual < cr.tolerance;
      rep.checks.push_back(cr);
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace flagmorse
