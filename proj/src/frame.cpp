#include "flagmorse/frame.hpp"

#include "flagmorse/linalg.hpp"

#include <random>

namespace flagmorse {

namespace {
const std::complex<double> I(0.0, 1.0);
}

RealFormFrame::RealFormFrame(const ParabolicSplit& sp, const ChevalleyData& data)
    : split_(&sp), data_(&data), rank_(sp.system().rank()) {
  const RootSystem& sys = sp.system();
  block_roots_ = sp.delta_k_pos();
  block_roots_.insert(block_roots_.end(), sp.delta_m_pos().begin(), sp.delta_m_pos().end());
  dim_ = rank_ + 2 * static_cast<int>(block_roots_.size());
  m_offset_ = rank_ + 2 * static_cast<int>(sp.delta_k_pos().size());
  x_index_.assign(sys.size(), -1);
  for (int j = 0; j < rank_; ++j) labels_.push_back("iH" + std::to_string(j + 1));
  for (std::size_t p = 0; p < block_roots_.size(); ++p) {
    RootId a = block_roots_[p];
    x_index_[a] = rank_ + 2 * static_cast<int>(p);
    labels_.push_back("X" + sys.label(a));
    labels_.push_back("Y" + sys.label(a));
  }

  metric_ = Mat::Zero(dim_, dim_);
  const auto& gram = data.cartan_gram();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) metric_(i, j) = boost::rational_cast<double>(gram[i][j]);
  for (int i = rank_; i < dim_; ++i) metric_(i, i) = 2.0;

  j_ = Mat::Zero(m_dim(), m_dim());
  for (int p = 0; p < m_dim(); p += 2) {
    j_(p + 1, p) = 1.0;   // J X = Y
    j_(p, p + 1) = -1.0;  // J Y = -X
  }

  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  std::vector<ComplexElement> basis;
  for (int i = 0; i < dim_; ++i) basis.push_back(complexify(Vec::Unit(dim_, i)));
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      double residual = 0;
      Vec b = realify(data.bracket_c(basis[i], basis[j]), &residual);
      if (residual > 1e-9) throw Error("bracket leaves the compact real form");
      for (int k = 0; k < dim_; ++k)
        if (std::abs(b[k]) > 1e-14) {
          table_[static_cast<std::size_t>(i) * dim_ + j].push_back({k, b[k]});
          table_[static_cast<std::size_t>(j) * dim_ + i].push_back({k, -b[k]});
        }
    }
}

int RealFormFrame::x_index(RootId a) const {
  int idx = x_index_.at(a);
  if (idx < 0) throw InvalidArgument("root " + system().label(a) + " has no frame vector");
  return idx;
}

Vec RealFormFrame::bracket(const Vec& x, const Vec& y) const {
  Vec r = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0.0) continue;
      double f = x[i] * y[j];
      for (const Entry& e : table(i, j)) r[e.index] += f * e.value;
    }
  }
  return r;
}

Vec RealFormFrame::bracket_m(const Vec& x, const Vec& y) const { return m_part(bracket(x, y)); }

Vec RealFormFrame::bracket_k(const Vec& x, const Vec& y) const { return k_part(bracket(x, y)); }

Mat RealFormFrame::ad(const Vec& x) const {
  Mat a = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j)
      for (const Entry& e : table(i, j)) a(e.index, j) += x[i] * e.value;
  }
  return a;
}

Vec RealFormFrame::embed_m(const Vec& m) const {
  Vec x = Vec::Zero(dim_);
  x.tail(m_dim()) = m;
  return x;
}

ComplexElement RealFormFrame::complexify(const Vec& x) const {
  const RootSystem& sys = system();
  ComplexElement z = data_->zero();
  for (int j = 0; j < rank_; ++j) z.h[j] = I * x[j];
  for (std::size_t p = 0; p < block_roots_.size(); ++p) {
    RootId a = block_roots_[p];
    double re = x[rank_ + 2 * p], im = x[rank_ + 2 * p + 1];
    z.e[a] = std::complex<double>(re, im);
    z.e[sys.negate(a)] = std::complex<double>(-re, im);
  }
  return z;
}

Vec RealFormFrame::realify(const ComplexElement& z, double* residual) const {
  const RootSystem& sys = system();
  Vec x(dim_);
  double res = 0;
  for (int j = 0; j < rank_; ++j) {
    std::complex<double> a = -I * z.h[j];
    x[j] = a.real();
    res = std::max(res, std::abs(a.imag()));
  }
  for (std::size_t p = 0; p < block_roots_.size(); ++p) {
    RootId a = block_roots_[p];
    std::complex<double> zp = z.e[a], zn = z.e[sys.negate(a)];
    std::complex<double> re = 0.5 * (zp - zn), im = -0.5 * I * (zp + zn);
    x[rank_ + 2 * p] = re.real();
    x[rank_ + 2 * p + 1] = im.real();
    res = std::max({res, std::abs(re.imag()), std::abs(im.imag())});
  }
  if (residual) *residual = res;
  return x;
}

ComplexElement RealFormFrame::conj(const ComplexElement& z) const {
  const RootSystem& sys = system();
  ComplexElement r = data_->zero();
  for (int j = 0; j < rank_; ++j) r.h[j] = -std::conj(z.h[j]);
  for (RootId a = 0; a < sys.size(); ++a) r.e[a] = -std::conj(z.e[sys.negate(a)]);
  return r;
}

ComplexElement RealFormFrame::proj_10(const ComplexElement& z) const {
  ComplexElement r = data_->zero();
  for (RootId a : split_->delta_m_pos()) r.e[a] = z.e[a];
  return r;
}

ComplexElement RealFormFrame::proj_01(const ComplexElement& z) const {
  ComplexElement r = data_->zero();
  for (RootId a : split_->delta_m_pos()) {
    RootId na = system().negate(a);
    r.e[na] = z.e[na];
  }
  return r;
}

ComplexElement RealFormFrame::proj_k(const ComplexElement& z) const {
  ComplexElement r = data_->zero();
  r.h = z.h;
  for (RootId a : split_->delta_k()) r.e[a] = z.e[a];
  return r;
}

ComplexElement RealFormFrame::part_10(const Vec& m) const { return proj_10(complexify(embed_m(m))); }

ComplexElement RealFormFrame::part_01(const Vec& m) const { return proj_01(complexify(embed_m(m))); }

Mat RealFormFrame::r_operator(const Vec& gdot_m) const {
  const int n = m_dim();
  Vec y = embed_m(gdot_m);
  Vec jy = embed_m(j_ * gdot_m);
  Mat ad_y = ad(y).bottomRightCorner(n, n);
  Mat ad_jy = ad(jy).bottomRightCorner(n, n);
  return ad_y + j_ * ad_jy;
}

Mat hat_transport_from_r(const Mat& r, double t) { return expm(-0.5 * t * r); }

Mat hat_transport(const RealFormFrame& frame, const Vec& gdot_m, double t) {
  return hat_transport_from_r(frame.r_operator(gdot_m), t);
}

FrameCheck check_frame(const RealFormFrame& frame, int trials, unsigned seed) {
  FrameCheck c;
  const int n = frame.dim(), off = frame.m_offset(), md = frame.m_dim();
  const Mat& g = frame.metric();
  for (int i = off; i < n; ++i)
    for (int j = off; j < n; ++j) c.metric_normalization = std::max(c.metric_normalization, std::abs(g(i, j) - (i == j ? 2.0 : 0.0)));
  for (int i = frame.rank(); i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) c.metric_normalization = std::max(c.metric_normalization, std::abs(g(i, j)));
  const Mat& jm = frame.J();
  c.j_square = (jm * jm + Mat::Identity(md, md)).cwiseAbs().maxCoeff();
  c.hermitian = (jm.transpose() * jm - Mat::Identity(md, md)).cwiseAbs().maxCoeff();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto random_vec = [&] {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = normal(rng);
    return Vec(v / v.norm());
  };
  for (int t = 0; t < trials; ++t) {
    Vec x = random_vec(), y = random_vec(), z = random_vec();
    Vec yz = frame.bracket(y, z), xy = frame.bracket(x, y), zx = frame.bracket(z, x);
    c.associativity = std::max(c.associativity, std::abs(frame.inner(x, yz) - frame.inner(xy, z)));
    Vec jac = frame.bracket(x, yz) + frame.bracket(y, zx) + frame.bracket(z, xy);
    c.jacobi = std::max(c.jacobi, jac.cwiseAbs().maxCoeff());
  }
  return c;
}

}  // namespace flagmorse
