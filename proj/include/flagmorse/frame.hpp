// The compact real form in a frame adapted to the split g = k + m.
//
// Basis order: i t_{a_j} for the simple roots, then (X_a, Y_a) for a in
// Delta_k+, then (X_a, Y_a) for a in Delta_m+, where X_a = E_a - E_-a and
// Y_a = i E_a + i E_-a. The metric is <x, y> = -kappa(x, y), and J acts on m
// by J X_a = Y_a, J Y_a = -X_a, so that m^{1,0} is spanned by the E_a with
// a in Delta_m+.
#pragma once

#include "flagmorse/chevalley.hpp"
#include "flagmorse/parabolic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

namespace flagmorse {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class RealFormFrame {
 public:
  RealFormFrame(const ParabolicSplit& sp, const ChevalleyData& data);

  const ParabolicSplit& split() const { return *split_; }
  const ChevalleyData& chevalley() const { return *data_; }
  const RootSystem& system() const { return split_->system(); }

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  /// Start of the m-block; the k-block is [0, m_offset()).
  int m_offset() const { return m_offset_; }
  int m_dim() const { return dim_ - m_offset_; }
  int k_dim() const { return m_offset_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Positive root owning a root-vector coordinate (-1 on the Cartan block).
  RootId root_of(int index) const { return index < rank_ ? -1 : block_roots_[(index - rank_) / 2]; }
  int x_index(RootId positive_root) const;
  int y_index(RootId positive_root) const { return x_index(positive_root) + 1; }
  /// Same indices relative to the m-block.
  int mx_index(RootId a) const { return x_index(a) - m_offset_; }
  int my_index(RootId a) const { return y_index(a) - m_offset_; }

  Vec bracket(const Vec& x, const Vec& y) const;
  /// m-block of [x, y] (length m_dim()).
  Vec bracket_m(const Vec& x, const Vec& y) const;
  /// k-block of [x, y] (length k_dim()).
  Vec bracket_k(const Vec& x, const Vec& y) const;
  /// Matrix of ad x on the full algebra.
  Mat ad(const Vec& x) const;

  double inner(const Vec& x, const Vec& y) const { return x.dot(metric_ * y); }
  double inner_m(const Vec& x, const Vec& y) const { return 2.0 * x.dot(y); }
  double norm_m(const Vec& x) const { return std::sqrt(inner_m(x, x)); }
  double norm2_k(const Vec& x) const { return x.dot(metric_.topLeftCorner(k_dim(), k_dim()) * x); }
  const Mat& metric() const { return metric_; }
  const Mat& J() const { return j_; }

  Vec embed_m(const Vec& m) const;
  Vec m_part(const Vec& x) const { return x.tail(m_dim()); }
  Vec k_part(const Vec& x) const { return x.head(k_dim()); }

  ComplexElement complexify(const Vec& x) const;
  /// Inverse of complexify; `residual` receives how far z is from the
  /// compact form.
  Vec realify(const ComplexElement& z, double* residual = nullptr) const;
  /// Conjugation with respect to the compact real form.
  ComplexElement conj(const ComplexElement& z) const;
  /// Components along m^{1,0}, m^{0,1}, and k (Cartan plus Delta_k).
  ComplexElement proj_10(const ComplexElement& z) const;
  ComplexElement proj_01(const ComplexElement& z) const;
  ComplexElement proj_k(const ComplexElement& z) const;
  /// (1,0) and (0,1) parts of an m-vector.
  ComplexElement part_10(const Vec& m) const;
  ComplexElement part_01(const Vec& m) const;

  /// R_Y X = [Y, X]_m + J [JY, X]_m as a matrix on m.
  Mat r_operator(const Vec& gdot_m) const;

 private:
  struct Entry {
    int index;
    double value;
  };
  const std::vector<Entry>& table(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }

  const ParabolicSplit* split_;
  const ChevalleyData* data_;
  int rank_ = 0, dim_ = 0, m_offset_ = 0;
  std::vector<RootId> block_roots_;  // Delta_k+ then Delta_m+
  std::vector<int> x_index_;         // per root id, -1 for negatives
  std::vector<std::string> labels_;
  std::vector<std::vector<Entry>> table_;
  Mat metric_, j_;
};

/// exp(-(t/2) R) for R = r_operator(gdot).
Mat hat_transport(const RealFormFrame& frame, const Vec& gdot_m, double t);
Mat hat_transport_from_r(const Mat& r, double t);

/// Largest residuals of the frame invariants; associativity and Jacobi are
/// sampled on `trials` random triples.
struct FrameCheck {
  double metric_normalization = 0, j_square = 0, hermitian = 0, associativity = 0, jacobi = 0;
};
FrameCheck check_frame(const RealFormFrame& frame, int trials, unsigned seed);

}  // namespace flagmorse
