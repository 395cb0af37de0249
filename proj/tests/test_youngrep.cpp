#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "simplexharm/permgroup.hpp"
#include "simplexharm/youngrep.hpp"

using namespace simplexharm;
using perm::Partition;
using perm::Permutation;
using young::Matrix;

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

}  // namespace

TEST_CASE("standard tableaux count equals the irrep dimension") {
  for (int n = 2; n <= 6; ++n) {
    const auto t = perm::character_table(n);
    const Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
    for (const auto& f : t.irreps) CHECK(static_cast<long long>(young::standard_tableaux(f).size()) == t.at(f, ones));
  }
}

TEST_CASE("generators satisfy the Coxeter relations") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& f : perm::partitions(n)) {
      CAPTURE(f.label());
      const int d = static_cast<int>(young::standard_tableaux(f).size());
      const Matrix id = Matrix::Identity(d, d);
      for (int i = 1; i < n; ++i) {
        const Matrix si = young::generator_matrix(f, i).matrix;
        CHECK(max_abs(si * si - id) < 1e-12);
        CHECK(max_abs(si - si.transpose()) < 1e-12);
        if (i + 1 < n) {
          const Matrix sj = young::generator_matrix(f, i + 1).matrix;
          CHECK(max_abs(si * sj * si - sj * si * sj) < 1e-12);
        }
        for (int k = i + 2; k < n; ++k) {
          const Matrix sk = young::generator_matrix(f, k).matrix;
          CHECK(max_abs(si * sk - sk * si) < 1e-12);
        }
      }
    }
}

TEST_CASE("representation matrices are orthogonal homomorphisms with the right trace") {
  std::mt19937 rng(5);
  for (int n = 3; n <= 6; ++n) {
    const auto t = perm::character_table(n);
    for (const auto& f : t.irreps) {
      CAPTURE(f.label());
      for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_permutation(n, rng);
        const auto q = random_permutation(n, rng);
        const Matrix dp = young::rep_matrix(f, p).matrix;
        const Matrix dq = young::rep_matrix(f, q).matrix;
        CHECK(max_abs(young::rep_matrix(f, p * q).matrix - dp * dq) < 1e-10);
        CHECK(max_abs(dp * dp.transpose() - Matrix::Identity(dp.rows(), dp.cols())) < 1e-10);
        CHECK(dp.trace() == doctest::Approx(static_cast<double>(t.at(f, perm::cycle_type(p).lengths))).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("fixed subspaces have the branching dimension") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& f : perm::partitions(n)) {
      CAPTURE(f.label());
      const auto fixed = young::fixed_subspace(f);
      CHECK(fixed.dimension() == perm::trivial_multiplicity(f));
      const Matrix c = young::rep_matrix(f, young::coxeter_element(n)).matrix;
      CHECK(max_abs(c * fixed.basis - fixed.basis) < 1e-10);
      const Matrix p = young::trivial_projector(f).matrix;
      CHECK(max_abs(p * p - p) < 1e-10);
      CHECK(std::lround(p.trace()) == fixed.dimension());
    }
}

TEST_CASE("explicit generator and Coxeter matrices") {
  const double h = std::sqrt(3.0) / 2;
  Matrix s23(2, 2);
  s23 << -0.5, h, h, 0.5;
  CHECK(max_abs(young::generator_matrix(Partition({2, 1}), 2).matrix - s23) < 1e-12);
  CHECK(max_abs(young::rep_matrix(Partition({2, 2}), young::coxeter_element(4)).matrix - s23) < 1e-12);
  Matrix s34(2, 2);
  s34 << 1, 0, 0, -1;
  CHECK(max_abs(young::generator_matrix(Partition({2, 2}), 3).matrix - s34) < 1e-12);
  std::vector<std::string> symbols;
  for (const auto& t : young::standard_tableaux(Partition({2, 1, 1}))) symbols.push_back(t.yamanouchi());
  CHECK(symbols == std::vector<std::string>{"3211", "3121", "1321"});
  Matrix cox211(3, 3);
  cox211 << 0, 0, -1, 0, 1, 0, 1, 0, 0;
  const auto primed = young::primed_rep_matrix(Partition({2, 1, 1}), young::coxeter_element(4)).matrix;
  CHECK(max_abs(primed - cox211) < 1e-12);
}

TEST_CASE("S(4) projector and fixed vectors take their closed forms") {
  const double r3 = std::sqrt(3.0);
  Matrix p22(2, 2);
  p22 << 0.25, r3 / 4, r3 / 4, 0.75;
  CHECK(max_abs(young::trivial_projector(Partition({2, 2})).matrix - p22) < 1e-12);

  Eigen::VectorXd v211(3);
  v211 << std::sqrt(0.5), std::sqrt(1.0 / 6), std::sqrt(1.0 / 3);
  const auto f211 = young::fixed_subspace(Partition({2, 1, 1}));
  REQUIRE(f211.dimension() == 1);
  CHECK(std::abs(std::abs(f211.basis.col(0).dot(v211)) - 1.0) < 1e-12);

  Eigen::VectorXd v22(2);
  v22 << 0.5, r3 / 2;
  const auto f22 = young::fixed_subspace(Partition({2, 2}));
  REQUIRE(f22.dimension() == 1);
  CHECK(std::abs(std::abs(f22.basis.col(0).dot(v22)) - 1.0) < 1e-12);
}

TEST_CASE("primed tetrahedral forms are equivalent to the Young forms") {
  std::mt19937 rng(9);
  for (const auto& f : {Partition({3, 1}), Partition({2, 1, 1})}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_permutation(4, rng);
      const auto q = random_permutation(4, rng);
      const Matrix dp = young::primed_rep_matrix(f, p).matrix;
      CHECK(max_abs(young::primed_rep_matrix(f, p * q).matrix - dp * young::primed_rep_matrix(f, q).matrix) < 1e-10);
      CHECK(dp.trace() == doctest::Approx(young::rep_matrix(f, p).matrix.trace()).epsilon(1e-10));
    }
  }
}

TEST_CASE("principal angle sine vanishes on equal spans only") {
  Matrix a(3, 1), c(3, 1);
  a << 1, 1, 0;
  c << 0, 0, 1;
  CHECK(young::max_principal_angle_sine(a / std::sqrt(2.0), a / std::sqrt(2.0)) < 1e-14);
  CHECK(young::max_principal_angle_sine(a / std::sqrt(2.0), c) == doctest::Approx(1.0));
}
