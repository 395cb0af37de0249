#pragma once

#include <complex>

#include <Eigen/Dense>

namespace simplexharm::su2 {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Matrix2c = Eigen::Matrix2cd;

/// Point of E^4, (x0, x1, x2, x3).
struct Point4 {
  double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  double norm() const;
  double dot(const Point4& other) const;
  Eigen::Vector4d vec() const { return {x0, x1, x2, x3}; }
};

/// Element u = [[z1, z2], [-conj(z2), conj(z1)]] of SU(2), equivalently a
/// point of S^3.
class SU2Element {
 public:
  /// Rejects |z1|^2 + |z2|^2 off 1 by more than 1e-12.
  SU2Element(Complex z1, Complex z2);
  static SU2Element identity() { return SU2Element(Complex(1, 0), Complex(0, 0)); }
  /// Rejects matrices that are not of the SU(2) form.
  static SU2Element from_matrix(const Matrix2c& m);

  Complex z1() const { return z1_; }
  Complex z2() const { return z2_; }
  Matrix2c matrix() const;
  Point4 to_point() const;

  SU2Element operator*(const SU2Element& other) const;
  SU2Element operator-() const { return raw(-z1_, -z2_); }
  /// u^dagger = u^{-1}.
  SU2Element inverse() const { return raw(std::conj(z1_), -z2_); }
  SU2Element transpose() const { return raw(z1_, -std::conj(z2_)); }
  SU2Element conjugate() const { return raw(std::conj(z1_), std::conj(z2_)); }

  double distance(const SU2Element& other) const;

 private:
  struct Unchecked {};
  SU2Element(Complex z1, Complex z2, Unchecked) : z1_(z1), z2_(z2) {}
  /// Products renormalise to absorb roundoff.
  static SU2Element raw(Complex z1, Complex z2);

  Complex z1_;
  Complex z2_;
};

/// z1 = x0 - i x3, z2 = -(x2 + i x1). Throws ArgumentError unless |x| = 1.
SU2Element su2_from_point(const Point4& x);

/// q = [[0, -1], [1, 0]]; conj(u) = q^{-1} u q and q^T = q^{-1} = -q.
SU2Element q_element();
/// Complex conjugate element, computed as q^{-1} u q.
SU2Element q_conjugation(const SU2Element& u);

/// Largest supported 2j.
inline constexpr int kMaxTwoJ = 24;

/// Wigner D^j(u) as a (2j+1) x (2j+1) matrix from the explicit polynomial
/// in (z1, z2, conj z1, conj z2). Rows and columns are m = -j..j ascending.
///
/// With this ordering D^j(u v) = D^j(u) D^j(v), and D^{1/2}(u) =
/// [[conj z1, -conj z2], [z2, z1]].
CMatrix wigner_d(int two_j, const SU2Element& u);

/// A single entry D^j_{m1 m2}(u); indices are 2m1, 2m2.
Complex wigner_entry(int two_j, int two_m1, int two_m2, const SU2Element& u);

/// phi/2 in [0, pi] with cos(phi/2) = Re z1 (clamped).
double half_angle(const SU2Element& u);

/// chi^j(u) = sin((2j+1) phi/2) / sin(phi/2), 2j+1 at the identity.
double su2_character(int two_j, const SU2Element& u);

}  // namespace simplexharm::su2
