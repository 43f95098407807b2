#include "flagmorse/chevalley.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace flagmorse {

namespace {

template <class Scalar>
std::vector<int> support(const std::vector<Scalar>& v) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != Scalar(0)) idx.push_back(i);
  return idx;
}

}  // namespace

ChevalleyData::ChevalleyData(const RootSystem& sys) : sys_(&sys), rank_(sys.rank()) {
  const int n = sys.size();
  const auto& simples = sys.simples();

  simple_inner_.assign(n, std::vector<Rational>(rank_));
  simple_inner_d_.assign(n, std::vector<double>(rank_));
  for (RootId a = 0; a < n; ++a)
    for (int j = 0; j < rank_; ++j) {
      simple_inner_[a][j] = sys.inner(a, simples[j]);
      simple_inner_d_[a][j] = boost::rational_cast<double>(simple_inner_[a][j]);
    }
  gram_.assign(rank_, std::vector<Rational>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gram_[i][j] = sys.inner(simples[i], simples[j]);

  // Pairs of positive roots, processed in order of the height of their sum.
  // Root ids of positive roots are already sorted by height.
  n_pos_sum_.assign(static_cast<std::size_t>(n) * n, 0);
  auto pp = [&](RootId a, RootId b) -> int& { return n_pos_sum_[a * n + b]; };
  auto norm2 = [&](RootId a) { return Rational(sys.inner2(a, a), 2); };
  auto checked_int = [](const Rational& q) {
    if (q.denominator() != 1) throw Error("structure constant is not an integer");
    return static_cast<int>(q.numerator());
  };

  for (RootId xi : sys.positives()) {
    std::vector<std::pair<RootId, RootId>> pairs;
    for (RootId a : sys.positives()) {
      auto b = sys.difference(xi, a);
      if (b && sys.is_positive(*b) && a < *b) pairs.emplace_back(a, *b);
    }
    if (pairs.empty()) continue;
    // Extraspecial pair: the one containing the smallest root.
    auto [alpha, beta] = pairs.front();
    int p = string_down(alpha, beta);
    pp(alpha, beta) = p + 1;
    pp(beta, alpha) = -(p + 1);
    const Rational n_ab(p + 1);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto [gamma, delta] = pairs[k];
      Rational acc(0);
      RootId mg = sys.negate(gamma);
      RootId md = sys.negate(delta);
      if (auto bg = sys.sum(beta, mg)) acc += Rational(compute_n(beta, mg) * compute_n(alpha, md)) / norm2(*bg);
      if (auto ag = sys.sum(alpha, mg)) acc += Rational(compute_n(mg, alpha) * compute_n(beta, md)) / norm2(*ag);
      int v = checked_int(norm2(xi) / n_ab * acc);
      pp(gamma, delta) = v;
      pp(delta, gamma) = -v;
    }
  }

  // Extend to every pair whose sum is positive, then cache c.
  std::vector<int> full(static_cast<std::size_t>(n) * n, 0);
  for (RootId a = 0; a < n; ++a)
    for (RootId b = 0; b < n; ++b) {
      auto s = sys.sum(a, b);
      if (s && sys.is_positive(*s)) full[a * n + b] = compute_n(a, b);
    }
  n_pos_sum_ = std::move(full);

  c_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (RootId a = 0; a < n; ++a)
    for (RootId b = 0; b < n; ++b) {
      Rational sq = c_signed_square(a, b);
      double mag = std::sqrt(std::abs(boost::rational_cast<double>(sq)));
      c_[a * n + b] = sq < 0 ? -mag : mag;
    }
}

int ChevalleyData::string_down(RootId a, RootId b) const {
  int p = 0;
  RootId cur = b;
  while (auto d = sys_->difference(cur, a)) {
    ++p;
    cur = *d;
  }
  return p;
}

// Reduces any pair to a pair of positive roots through antisymmetry,
// n(-a,-b) = -n(a,b) and the cyclic rule n(x,y)/(z,z) = n(y,z)/(x,x) for
// x + y + z = 0. Only reads entries of n_pos_sum_ for positive-positive pairs.
int ChevalleyData::compute_n(RootId x, RootId y) const {
  const RootSystem& sys = *sys_;
  auto s = sys.sum(x, y);
  if (!s) return 0;
  const int n = sys.size();
  bool px = sys.is_positive(x), py = sys.is_positive(y);
  if (px && py) return n_pos_sum_[x * n + y];
  if (!px && !py) return -compute_n(sys.negate(x), sys.negate(y));
  if (!px) return -compute_n(y, x);
  RootId z = *s;
  auto ratio = [&](int num_norm, int pp_value, int den_norm) {
    Rational q = Rational(num_norm) * pp_value / den_norm;
    if (q.denominator() != 1) throw Error("structure constant is not an integer");
    return static_cast<int>(q.numerator());
  };
  if (sys.is_positive(z)) {
    RootId my = sys.negate(y);
    return -ratio(sys.inner2(z, z), n_pos_sum_[my * n + z], sys.inner2(x, x));
  }
  RootId mz = sys.negate(z);
  return ratio(sys.inner2(z, z), n_pos_sum_[mz * n + x], sys.inner2(y, y));
}

int ChevalleyData::n(RootId a, RootId b) const {
  auto s = sys_->sum(a, b);
  if (!s) return 0;
  const int sz = sys_->size();
  if (sys_->is_positive(*s)) return n_pos_sum_[a * sz + b];
  return -n_pos_sum_[sys_->negate(a) * sz + sys_->negate(b)];
}

double ChevalleyData::c(RootId a, RootId b) const { return c_[a * sys_->size() + b]; }

Rational ChevalleyData::c_signed_square(RootId a, RootId b) const {
  auto s = sys_->sum(a, b);
  if (!s) return Rational(0);
  int v = n(a, b);
  Rational sq = Rational(v * v) * Rational(sys_->inner2(a, a), 2) * Rational(sys_->inner2(b, b), 2) /
                (Rational(sys_->inner2(*s, *s), 2) * 2);
  return v < 0 ? -sq : sq;
}

std::vector<Rational> ChevalleyData::coroot(RootId a) const {
  std::vector<Rational> t(rank_);
  for (int j = 0; j < rank_; ++j) t[j] = sys_->simple_coords(a)[j];
  return t;
}

Rational ChevalleyData::eval_root(RootId a, const std::vector<Rational>& h) const {
  Rational s(0);
  for (int j = 0; j < rank_; ++j) s += h[j] * simple_inner_[a][j];
  return s;
}

std::complex<double> ChevalleyData::eval_root(RootId a, const std::vector<std::complex<double>>& h) const {
  std::complex<double> s(0);
  for (int j = 0; j < rank_; ++j) s += h[j] * simple_inner_d_[a][j];
  return s;
}

ExactElement ChevalleyData::exact_root_vector(RootId a) const {
  ExactElement x = exact_zero();
  x.e[a] = 1;
  return x;
}

ExactElement ChevalleyData::exact_coroot_element(RootId a) const {
  ExactElement x = exact_zero();
  Rational f = Rational(4, sys_->inner2(a, a));  // 2 / (a, a)
  for (int j = 0; j < rank_; ++j) x.h[j] = f * sys_->simple_coords(a)[j];
  return x;
}

ExactElement ChevalleyData::exact_cartan(int j) const {
  ExactElement x = exact_zero();
  x.h[j] = 1;
  return x;
}

ExactElement ChevalleyData::bracket_exact(const ExactElement& x, const ExactElement& y) const {
  ExactElement r = exact_zero();
  auto xs = support(x.e), ys = support(y.e);
  auto xh = support(x.h), yh = support(y.h);
  if (!xh.empty())
    for (int b : ys) r.e[b] += eval_root(b, x.h) * y.e[b];
  if (!yh.empty())
    for (int a : xs) r.e[a] -= eval_root(a, y.h) * x.e[a];
  for (int a : xs)
    for (int b : ys) {
      if (b == sys_->negate(a)) {
        Rational f = x.e[a] * y.e[b] * Rational(4, sys_->inner2(a, a));
        for (int j = 0; j < rank_; ++j) r.h[j] += f * sys_->simple_coords(a)[j];
      } else if (auto s = sys_->sum(a, b)) {
        r.e[*s] += x.e[a] * y.e[b] * n(a, b);
      }
    }
  return r;
}

Rational ChevalleyData::pairing_exact(const ExactElement& x, const ExactElement& y) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x.h[i] * y.h[j] * gram_[i][j];
  for (int a : support(x.e)) s += x.e[a] * y.e[sys_->negate(a)] * Rational(4, sys_->inner2(a, a));
  return s;
}

ComplexElement ChevalleyData::root_vector(RootId a) const {
  ComplexElement x = zero();
  x.e[a] = 1.0;
  return x;
}

ComplexElement ChevalleyData::cartan(int j) const {
  ComplexElement x = zero();
  x.h[j] = 1.0;
  return x;
}

ComplexElement ChevalleyData::bracket_c(const ComplexElement& x, const ComplexElement& y) const {
  ComplexElement r = zero();
  auto xs = support(x.e), ys = support(y.e);
  if (!support(x.h).empty())
    for (int b : ys) r.e[b] += eval_root(b, x.h) * y.e[b];
  if (!support(y.h).empty())
    for (int a : xs) r.e[a] -= eval_root(a, y.h) * x.e[a];
  for (int a : xs)
    for (int b : ys) {
      if (b == sys_->negate(a)) {
        auto f = x.e[a] * y.e[b];
        for (int j = 0; j < rank_; ++j) r.h[j] += f * static_cast<double>(sys_->simple_coords(a)[j]);
      } else if (auto s = sys_->sum(a, b)) {
        r.e[*s] += x.e[a] * y.e[b] * c(a, b);
      }
    }
  return r;
}

std::complex<double> ChevalleyData::pairing(const ComplexElement& x, const ComplexElement& y) const {
  std::complex<double> s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x.h[i] * y.h[j] * boost::rational_cast<double>(gram_[i][j]);
  for (int a : support(x.e)) s += x.e[a] * y.e[sys_->negate(a)];
  return s;
}

void ChevalleyData::write_csv(std::ostream& os) const {
  const RootSystem& sys = *sys_;
  os << "alpha,beta,c,n\n";
  auto old_precision = os.precision(17);
  for (RootId a = 0; a < sys.size(); ++a)
    for (RootId b = 0; b < sys.size(); ++b)
      if (sys.sum(a, b)) os << sys.label(a) << ',' << sys.label(b) << ',' << c(a, b) << ',' << n(a, b) << '\n';
  os.precision(old_precision);
}

double n0_constant(const ChevalleyData& data, const std::vector<std::pair<RootId, RootId>>& pairs) {
  double best = std::numeric_limits<double>::infinity();
  if (pairs.empty()) {
    const RootSystem& sys = data.system();
    for (RootId a = 0; a < sys.size(); ++a)
      for (RootId b = 0; b < sys.size(); ++b)
        if (sys.sum(a, b)) best = std::min(best, std::abs(data.c(a, b)));
    return best;
  }
  for (auto [a, b] : pairs) best = std::min(best, std::abs(data.c(a, b)));
  return best;
}

}  // namespace flagmorse
