// Structure constants of the complex semisimple Lie algebra attached to a
// root system.
//
// Two normalizations of the root vectors are carried side by side:
//
//  * the integral Chevalley basis e_a with [e_a, e_-a] = h_a = 2 t_a / (a, a)
//    and [e_a, e_b] = n(a, b) e_{a+b}, |n(a, b)| = p + 1;
//  * the invariant-form basis E_a = sqrt((a, a) / 2) e_a with
//    kappa(E_a, E_-a) = 1, [E_a, E_-a] = t_a and [E_a, E_b] = c(a, b) E_{a+b}.
//
// The second basis satisfies c(a,b) = -c(b,a) = -c(-a,-b) and the cyclic rule
// c(a,b) = c(b,-d) = c(-d,a) for a + b = d exactly; its constants are
// c(a,b) = n(a,b) sqrt((a,a)(b,b) / (2 (d,d))), which are integers only for
// simply-laced systems. Signs follow the extraspecial-pair convention.
//
// Cartan elements are written in the basis {t_{a_j}} dual to the simple
// roots, so an h-coordinate vector of length rank() represents
// sum_j h_j t_{a_j}.
#pragma once

#include "flagmorse/rootsys.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace flagmorse {

template <class Scalar>
struct LieElement {
  std::vector<Scalar> h;  // coefficients of t_{a_j}
  std::vector<Scalar> e;  // coefficient of the root vector of each root

  LieElement() = default;
  LieElement(int rank, int roots) : h(rank, Scalar(0)), e(roots, Scalar(0)) {}

  LieElement& operator+=(const LieElement& o) {
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += o.h[i];
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    for (std::size_t i = 0; i < h.size(); ++i) h[i] -= o.h[i];
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
    return *this;
  }
  LieElement& operator*=(const Scalar& s) {
    for (auto& x : h) x *= s;
    for (auto& x : e) x *= s;
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& s, LieElement a) { return a *= s; }
  bool is_zero() const {
    for (const auto& x : h)
      if (x != Scalar(0)) return false;
    for (const auto& x : e)
      if (x != Scalar(0)) return false;
    return true;
  }
};

/// Element over the integral Chevalley basis with exact coefficients.
using ExactElement = LieElement<Rational>;
/// Element of the complexified algebra over the invariant-form basis.
using ComplexElement = LieElement<std::complex<double>>;

class ChevalleyData {
 public:
  explicit ChevalleyData(const RootSystem& sys);

  const RootSystem& system() const { return *sys_; }

  /// Integral constant n(a, b); 0 when a + b is not a root.
  int n(RootId a, RootId b) const;
  /// Invariant-form constant c(a, b); 0 when a + b is not a root.
  double c(RootId a, RootId b) const;
  /// sign(c) * c^2, exact.
  Rational c_signed_square(RootId a, RootId b) const;
  /// Largest p with b - p a a root.
  int string_down(RootId a, RootId b) const;

  /// t_a in the basis {t_{a_j}}: the simple-root coordinates of a.
  std::vector<Rational> coroot(RootId a) const;
  /// a(h) for h given in the basis {t_{a_j}}.
  Rational eval_root(RootId a, const std::vector<Rational>& h) const;
  std::complex<double> eval_root(RootId a, const std::vector<std::complex<double>>& h) const;

  ExactElement exact_zero() const { return ExactElement(rank_, sys_->size()); }
  ExactElement exact_root_vector(RootId a) const;
  /// h_a = 2 t_a / (a, a).
  ExactElement exact_coroot_element(RootId a) const;
  ExactElement exact_cartan(int j) const;
  ExactElement bracket_exact(const ExactElement& x, const ExactElement& y) const;
  /// Invariant pairing in the integral basis: (e_a, e_-a) = 2 / (a, a), and
  /// the normalized form on the Cartan part.
  Rational pairing_exact(const ExactElement& x, const ExactElement& y) const;

  ComplexElement zero() const { return ComplexElement(rank_, sys_->size()); }
  ComplexElement root_vector(RootId a) const;
  ComplexElement cartan(int j) const;
  ComplexElement bracket_c(const ComplexElement& x, const ComplexElement& y) const;
  /// Complex-bilinear invariant form kappa with kappa(E_a, E_-a) = 1.
  std::complex<double> pairing(const ComplexElement& x, const ComplexElement& y) const;

  /// Gram matrix (a_i, a_j) of the simple roots, i.e. kappa(t_i, t_j).
  const std::vector<std::vector<Rational>>& cartan_gram() const { return gram_; }

  /// Rows (alpha, beta, c) for every ordered pair with a + b a root, roots
  /// in simple-root coordinates.
  void write_csv(std::ostream& os) const;

 private:
  int compute_n(RootId a, RootId b) const;

  const RootSystem* sys_;
  int rank_;
  // Integral constants for pairs whose sum is a positive root.
  std::vector<int> n_pos_sum_;
  std::vector<double> c_;
  std::vector<std::vector<Rational>> simple_inner_;  // [root][j] = (a, a_j)
  std::vector<std::vector<double>> simple_inner_d_;
  std::vector<std::vector<Rational>> gram_;
};

/// Minimum of |c(a, b)| over the given pairs of positive roots; over all
/// pairs whose sum is a root when the set is empty.
double n0_constant(const ChevalleyData& data, const std::vector<std::pair<RootId, RootId>>& pairs);

}  // namespace flagmorse
