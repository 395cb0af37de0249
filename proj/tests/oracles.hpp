#pragma once

// Reference computations that share no code path with the library routines
// they are compared against.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "simplexharm/permgroup.hpp"
#include "simplexharm/su2wigner.hpp"
#include "simplexharm/youngrep.hpp"

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline double fact(int k) { return std::tgamma(k + 1.0); }

// D^{1/2} written out by hand in ascending m order.
inline Eigen::Matrix2cd wigner_half(Complex z1, Complex z2) {
  Eigen::Matrix2cd m;
  m << std::conj(z1), -std::conj(z2), z2, z1;
  return m;
}

// D^j as the symmetric power of D^{1/2}: the basis vector for m is the
// monomial x^{j+m} y^{j-m} / sqrt((j+m)!(j-m)!) with x, y the m = +1/2, -1/2
// spinor components, and the matrix is read off by expanding the substituted
// polynomial term by term.
inline CMatrix wigner_symmetric_power(int two_j, Complex z1, Complex z2) {
  const Eigen::Matrix2cd h = wigner_half(z1, z2);
  // Column c of h is the image of basis spinor c; index 1 is m = +1/2.
  const Complex xx = h(1, 1), yx = h(0, 1);  // image of x = xx x + yx y
  const Complex xy = h(1, 0), yy = h(0, 0);  // image of y = xy x + yy y
  const int n = two_j + 1;
  CMatrix d = CMatrix::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    const int p = col;           // power of x, equals j + m
    const int q = two_j - col;   // power of y
    // Polynomial coefficients indexed by power of x.
    std::vector<Complex> poly(static_cast<size_t>(n), Complex(0, 0));
    poly[0] = 1;
    auto multiply = [&](Complex cx, Complex cy) {
      std::vector<Complex> next(poly.size(), Complex(0, 0));
      for (size_t k = 0; k < poly.size(); ++k) {
        if (poly[k] == Complex(0, 0)) continue;
        if (k + 1 < next.size()) next[k + 1] += poly[k] * cx;
        next[k] += poly[k] * cy;
      }
      poly = next;
    };
    for (int i = 0; i < p; ++i) multiply(xx, yx);
    for (int i = 0; i < q; ++i) multiply(xy, yy);
    const double norm_in = 1.0 / std::sqrt(fact(p) * fact(q));
    for (int row = 0; row < n; ++row) {
      const double norm_out = std::sqrt(fact(row) * fact(two_j - row));
      d(row, col) = poly[static_cast<size_t>(row)] * norm_in * norm_out;
    }
  }
  return d;
}

// C_n fixed-vector count from explicit Young orthogonal matrices of the
// Coxeter element: trace average of its powers.
inline int trivial_multiplicity_by_trace(const simplexharm::perm::Partition& f) {
  const int n = f.size();
  const auto c = simplexharm::young::coxeter_element(n);
  const Eigen::MatrixXd m = simplexharm::young::rep_matrix(f, c).matrix;
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  double sum = 0;
  for (int k = 0; k < n; ++k) {
    sum += power.trace();
    power = power * m;
  }
  return static_cast<int>(std::lround(sum / n));
}

// Average of a circle harmonic over the three C_3 rotations, maximised over
// a grid of base points. Nonzero exactly when the harmonic survives.
inline double c3_average_norm(int m, int epsilon) {
  double worst = 0;
  for (int k = 0; k < 64; ++k) {
    const double phi = 0.1 + k * 2 * std::numbers::pi / 64;
    double avg = 0;
    for (int r = 0; r < 3; ++r) {
      const double t = phi + r * 2 * std::numbers::pi / 3;
      avg += epsilon < 0 ? std::sin(m * t) : std::cos(m * t);
    }
    worst = std::max(worst, std::abs(avg / 3));
  }
  return worst;
}

// Class function inner product <chi, 1> over the cyclic subgroup generated by
// the n-cycle, computed by walking the subgroup element by element.
inline int trivial_multiplicity_by_walk(const simplexharm::perm::Partition& f) {
  const int n = f.size();
  auto c = simplexharm::perm::Permutation::cycle(n, [n] {
    std::vector<int> pts;
    for (int i = 1; i <= n; ++i) pts.push_back(i);
    return pts;
  }());
  auto g = simplexharm::perm::Permutation::identity(n);
  long long sum = 0;
  for (int k = 0; k < n; ++k) {
    sum += simplexharm::perm::character(f, simplexharm::perm::cycle_type(g).lengths);
    g = g * c;
  }
  return static_cast<int>(sum / n);
}

}  // namespace oracle
