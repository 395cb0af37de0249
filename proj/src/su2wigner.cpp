#include "simplexharm/su2wigner.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "simplexharm/errors.hpp"

namespace simplexharm::su2 {

namespace {

using u128 = unsigned __int128;

u128 factorial128(int n) {
  u128 f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<u128>(k);
  return f;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 binomial128(int n, int k) {
  if (k < 0 || k > n) return 0;
  u128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
  return r;
}

// One monomial of D^j_{m1 m2}: coeff * z1^a conj(z2)^b z2^c conj(z1)^d.
struct Term {
  double coeff;
  int a, b, c, d;
};

// Term lists for every (m1, m2) at fixed 2j, index [row * dim + col].
struct WignerTable {
  int two_j;
  std::vector<std::vector<Term>> terms;
};

WignerTable build_table(int two_j) {
  const int dim = two_j + 1;
  WignerTable table{two_j, std::vector<std::vector<Term>>(static_cast<size_t>(dim * dim))};
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      // row = j + m1, col = j + m2.
      const int jp1 = row, jm1 = two_j - row;
      const int jp2 = col, jm2 = two_j - col;
      // sqrt of the exact ratio (j+m1)!(j-m1)! / ((j+m2)!(j-m2)!).
      u128 num = factorial128(jp1) * factorial128(jm1);
      u128 den = factorial128(jp2) * factorial128(jm2);
      const u128 g = gcd128(num, den);
      num /= g;
      den /= g;
      const long double prefactor =
          std::sqrt(static_cast<long double>(num) / static_cast<long double>(den));
      auto& out = table.terms[static_cast<size_t>(row * dim + col)];
      for (int sigma = 0; sigma <= two_j; ++sigma) {
        const int a = jp1 - sigma;         // power of z1
        const int b = col - row + sigma;   // power of conj z2, equals m2 - m1 + sigma
        const int d = jm2 - sigma;         // power of conj z1
        if (a < 0 || b < 0 || d < 0) continue;
        // (j+m2)!(j-m2)! / (a! b! sigma! d!) = C(j+m2, a) C(j-m2, sigma).
        const u128 integer = binomial128(jp2, a) * binomial128(jm2, sigma);
        const long double sign = (b % 2 == 0) ? 1.0L : -1.0L;
        out.push_back(Term{static_cast<double>(sign * prefactor * static_cast<long double>(integer)),
                           a, b, sigma, d});
      }
    }
  }
  return table;
}

const WignerTable& wigner_table(int two_j) {
  static std::array<std::unique_ptr<WignerTable>, kMaxTwoJ + 1> cache;
  static std::array<std::once_flag, kMaxTwoJ + 1> flags;
  std::call_once(flags[static_cast<size_t>(two_j)],
                 [two_j] { cache[static_cast<size_t>(two_j)] = std::make_unique<WignerTable>(build_table(two_j)); });
  return *cache[static_cast<size_t>(two_j)];
}

void check_two_j(int two_j) {
  if (two_j < 0 || two_j > kMaxTwoJ)
    throw ArgumentError("2j must lie in [0, " + std::to_string(kMaxTwoJ) + "]");
}

std::vector<Complex> powers(Complex z, int max_power) {
  std::vector<Complex> p(static_cast<size_t>(max_power + 1));
  p[0] = Complex(1, 0);
  for (int k = 1; k <= max_power; ++k) p[static_cast<size_t>(k)] = p[static_cast<size_t>(k - 1)] * z;
  return p;
}

Complex evaluate(const std::vector<Term>& terms, const std::vector<Complex>& z1p,
                 const std::vector<Complex>& z2bp, const std::vector<Complex>& z2p,
                 const std::vector<Complex>& z1bp) {
  Complex sum(0, 0);
  for (const auto& t : terms)
    sum += t.coeff * z1p[static_cast<size_t>(t.a)] * z2bp[static_cast<size_t>(t.b)] *
           z2p[static_cast<size_t>(t.c)] * z1bp[static_cast<size_t>(t.d)];
  return sum;
}

}  // namespace

double Point4::norm() const { return std::sqrt(dot(*this)); }

double Point4::dot(const Point4& o) const { return x0 * o.x0 + x1 * o.x1 + x2 * o.x2 + x3 * o.x3; }

SU2Element::SU2Element(Complex z1, Complex z2) : z1_(z1), z2_(z2) {
  const double n2 = std::norm(z1) + std::norm(z2);
  if (std::abs(n2 - 1.0) > 1e-12)
    throw ArgumentError("SU(2) element requires |z1|^2 + |z2|^2 = 1");
}

SU2Element SU2Element::raw(Complex z1, Complex z2) {
  const double n = std::sqrt(std::norm(z1) + std::norm(z2));
  return SU2Element(z1 / n, z2 / n, Unchecked{});
}

SU2Element SU2Element::from_matrix(const Matrix2c& m) {
  constexpr double tol = 1e-12;
  if (std::abs(m(1, 0) + std::conj(m(0, 1))) > tol || std::abs(m(1, 1) - std::conj(m(0, 0))) > tol)
    throw ArgumentError("matrix is not of the form [[z1, z2], [-conj z2, conj z1]]");
  return SU2Element(m(0, 0), m(0, 1));
}

Matrix2c SU2Element::matrix() const {
  Matrix2c m;
  m << z1_, z2_, -std::conj(z2_), std::conj(z1_);
  return m;
}

Point4 SU2Element::to_point() const {
  return Point4{z1_.real(), -z2_.imag(), -z2_.real(), -z1_.imag()};
}

SU2Element SU2Element::operator*(const SU2Element& o) const {
  // First row of [[z1, z2], [-z2*, z1*]] [[w1, w2], [-w2*, w1*]].
  return raw(z1_ * o.z1_ - z2_ * std::conj(o.z2_), z1_ * o.z2_ + z2_ * std::conj(o.z1_));
}

double SU2Element::distance(const SU2Element& o) const {
  return std::sqrt(std::norm(z1_ - o.z1_) + std::norm(z2_ - o.z2_));
}

SU2Element su2_from_point(const Point4& x) {
  if (std::abs(x.norm() - 1.0) > 1e-12) throw ArgumentError("su2_from_point requires a unit vector");
  return SU2Element(Complex(x.x0, -x.x3), Complex(-x.x2, -x.x1));
}

SU2Element q_element() { return SU2Element(Complex(0, 0), Complex(-1, 0)); }

SU2Element q_conjugation(const SU2Element& u) {
  const SU2Element q = q_element();
  return q.inverse() * u * q;
}

CMatrix wigner_d(int two_j, const SU2Element& u) {
  check_two_j(two_j);
  const auto& table = wigner_table(two_j);
  const int dim = two_j + 1;
  const auto z1p = powers(u.z1(), two_j);
  const auto z1bp = powers(std::conj(u.z1()), two_j);
  const auto z2p = powers(u.z2(), two_j);
  const auto z2bp = powers(std::conj(u.z2()), two_j);
  CMatrix d(dim, dim);
  for (int row = 0; row < dim; ++row)
    for (int col = 0; col < dim; ++col)
      d(row, col) = evaluate(table.terms[static_cast<size_t>(row * dim + col)], z1p, z2bp, z2p, z1bp);
  return d;
}

Complex wigner_entry(int two_j, int two_m1, int two_m2, const SU2Element& u) {
  check_two_j(two_j);
  if (std::abs(two_m1) > two_j || std::abs(two_m2) > two_j || (two_j - two_m1) % 2 != 0 ||
      (two_j - two_m2) % 2 != 0)
    throw ArgumentError("m indices inconsistent with j");
  const auto& table = wigner_table(two_j);
  const int row = (two_j + two_m1) / 2, col = (two_j + two_m2) / 2;
  return evaluate(table.terms[static_cast<size_t>(row * (two_j + 1) + col)], powers(u.z1(), two_j),
                  powers(std::conj(u.z2()), two_j), powers(u.z2(), two_j), powers(std::conj(u.z1()), two_j));
}

double half_angle(const SU2Element& u) {
  const double c = std::clamp(u.z1().real(), -1.0, 1.0);
  return std::acos(c);
}

double su2_character(int two_j, const SU2Element& u) {
  if (two_j < 0) throw ArgumentError("2j must be non-negative");
  const double half = half_angle(u);
  const double s = std::sin(half);
  if (std::abs(s) < 1e-9) {
    // u = +e or -e: chi = (2j+1) (+-1)^{2j}.
    const bool minus = u.z1().real() < 0;
    return (minus && two_j % 2 == 1) ? -(two_j + 1.0) : (two_j + 1.0);
  }
  return std::sin((two_j + 1) * half) / s;
}

}  // namespace simplexharm::su2
