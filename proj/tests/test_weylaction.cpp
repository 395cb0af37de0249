#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "simplexharm/modes.hpp"
#include "simplexharm/reduction.hpp"
#include "simplexharm/weylaction.hpp"
#include "simplexharm/youngrep.hpp"

using namespace simplexharm;
using perm::Permutation;
using su2::SU2Element;
using weyl::GroupOperator;

namespace {

SU2Element random_element(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Eigen::Vector4d x(g(rng), g(rng), g(rng), g(rng));
  const Eigen::Vector4d y = x.normalized();
  return su2::su2_from_point({y(0), y(1), y(2), y(3)});
}

Permutation random_permutation(std::mt19937_64& rng) {
  std::vector<int> images{1, 2, 3, 4, 5};
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

double point_distance(const SU2Element& a, const SU2Element& b) { return (a.to_point().vec() - b.to_point().vec()).norm(); }

}  // namespace

TEST_CASE("Weyl vectors are unit vectors at 60 degrees to their neighbours") {
  const Eigen::Matrix4d gram = weyl::gram_matrix(weyl::weyl_vectors_s5());
  Eigen::Matrix4d expected = Eigen::Matrix4d::Identity();
  for (int i = 0; i + 1 < 4; ++i) expected(i, i + 1) = expected(i + 1, i) = 0.5;
  CHECK((gram - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reflection operators act as Euclidean reflections") {
  std::mt19937_64 rng(1);
  for (const auto& w : weyl::weyl_vectors_s5()) {
    const auto op = weyl::reflection_operator(w);
    CHECK(op.reflective);
    CHECK(point_distance(weyl::act_on_point(op, w.v), -w.v) < 1e-12);
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = random_element(rng);
      const Eigen::Vector4d x = u.to_point().vec();
      const Eigen::Vector4d a = w.a.vec();
      const Eigen::Vector4d reflected = x - 2 * a.dot(x) * a;
      CHECK((weyl::act_on_point(op, u).to_point().vec() - reflected).norm() < 1e-12);
    }
  }
}

TEST_CASE("composition matches successive point maps") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = weyl::permutation_operator(random_permutation(rng));
    const auto t = weyl::permutation_operator(random_permutation(rng));
    const auto st = weyl::compose(s, t);
    const auto u = random_element(rng);
    // Pullbacks reverse the order: (ST) f = f o P_T o P_S.
    CHECK(point_distance(weyl::act_on_point(st, u), weyl::act_on_point(t, weyl::act_on_point(s, u))) < 1e-12);
  }
}

TEST_CASE("permutation operators are well defined on random factorisations") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_permutation(rng);
    const auto q = random_permutation(rng);
    auto word = p.adjacent_word();
    const auto wq = q.adjacent_word();
    word.insert(word.end(), wq.begin(), wq.end());
    const auto via_word = weyl::word_operator(word);
    const auto direct = weyl::permutation_operator(p * q);
    CHECK(weyl::same_action(via_word, direct, 1e-9));
    CHECK(weyl::same_action(weyl::compose(weyl::permutation_operator(p), weyl::permutation_operator(q)), direct, 1e-9));
  }
}

TEST_CASE("Weyl generators satisfy the Coxeter relations") {
  for (int i = 1; i <= 4; ++i) {
    CHECK(weyl::same_action(weyl::word_operator({i, i}), GroupOperator::identity()));
    if (i < 4) CHECK(weyl::same_action(weyl::word_operator({i, i + 1, i}), weyl::word_operator({i + 1, i, i + 1})));
    for (int k = i + 2; k <= 4; ++k) CHECK(weyl::same_action(weyl::word_operator({i, k}), weyl::word_operator({k, i})));
  }
  CHECK_FALSE(weyl::same_action(weyl::word_operator({1}), GroupOperator::identity()));
}

TEST_CASE("operator matrices transport harmonics along the point map") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int two_j = 0; two_j <= 4; ++two_j) {
    const int n = (two_j + 1) * (two_j + 1);
    for (int trial = 0; trial < 6; ++trial) {
      CAPTURE(two_j);
      const auto op = weyl::permutation_operator(random_permutation(rng));
      Eigen::VectorXcd c(n);
      for (int k = 0; k < n; ++k) c(k) = {g(rng), g(rng)};
      const Eigen::VectorXcd mc = weyl::operator_matrix(two_j, op) * c;
      for (int point = 0; point < 5; ++point) {
        const auto u = random_element(rng);
        const auto lhs = modes::evaluate_harmonic(two_j, mc, u);
        const auto rhs = modes::evaluate_harmonic(two_j, c, weyl::act_on_point(op, u));
        CHECK(std::abs(lhs - rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("operator matrix traces equal operator characters") {
  std::mt19937_64 rng(5);
  for (int two_j = 0; two_j <= 6; ++two_j)
    for (int trial = 0; trial < 5; ++trial) {
      const auto op = weyl::permutation_operator(random_permutation(rng));
      const auto trace = weyl::operator_matrix(two_j, op).trace();
      CHECK(trace.imag() == doctest::Approx(0.0).epsilon(1e-10));
      CHECK(trace.real() == doctest::Approx(weyl::operator_character(two_j, op)).epsilon(1e-9));
    }
}

TEST_CASE("operator characters are class functions") {
  std::mt19937_64 rng(6);
  const auto table = weyl::class_character_table(8);
  REQUIRE(table.size() == 7);
  for (const auto& row : table) {
    for (int trial = 0; trial < 5; ++trial) {
      // Random element of the class: conjugate the representative.
      const auto& rep = *std::find_if(weyl::class_representatives_s5().begin(), weyl::class_representatives_s5().end(),
                                      [&](const auto& r) { return r.cycle_type == row.cycle_type; });
      const auto h = random_permutation(rng);
      const auto p = h.inverse() * rep.permutation * h;
      CHECK(perm::cycle_type(p) == row.cycle_type);
      const auto op = weyl::permutation_operator(p);
      CHECK(op.reflective == row.reflective);
      for (int two_j = 0; two_j <= 8; ++two_j)
        CHECK(weyl::operator_character(two_j, op) == doctest::Approx(row.characters[static_cast<size_t>(two_j)]).epsilon(1e-9));
    }
  }
}

TEST_CASE("class characters are integers and average to the [5] multiplicity") {
  const auto table = weyl::class_character_table(20);
  for (int two_j = 0; two_j <= 20; ++two_j) {
    double sum = 0;
    for (const auto& row : table) {
      const double x = row.characters[static_cast<size_t>(two_j)];
      CHECK(std::abs(x - std::round(x)) < 1e-9);
      sum += row.cycle_type.class_size * x;
    }
    const double m = sum / 120;
    CHECK(std::abs(m - std::round(m)) < 1e-9);
    CHECK(std::lround(m) == reduction::multiplicity_o4_s5(two_j, perm::Partition({5})));
  }
}

TEST_CASE("operator matrices multiply like the permutations") {
  std::mt19937_64 rng(7);
  for (int two_j = 0; two_j <= 4; ++two_j)
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = random_permutation(rng);
      const auto q = random_permutation(rng);
      const auto mp = weyl::operator_matrix(two_j, weyl::permutation_operator(p));
      const auto mq = weyl::operator_matrix(two_j, weyl::permutation_operator(q));
      const auto mpq = weyl::operator_matrix(two_j, weyl::permutation_operator(p * q));
      CHECK((mpq - mp * mq).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("base reflection negates x0") {
  GroupOperator base;
  base.reflective = true;
  const auto u = su2::su2_from_point({0.5, 0.5, -0.5, 0.5});
  const auto p = weyl::act_on_point(base, u).to_point();
  CHECK(p.x0 == doctest::Approx(-0.5));
  CHECK(p.x1 == doctest::Approx(0.5));
  CHECK(p.x2 == doctest::Approx(-0.5));
  CHECK(p.x3 == doctest::Approx(0.5));
}

TEST_CASE("the C_5 generator moves every point") {
  const auto g = weyl::permutation_operator(young::coxeter_element(5));
  double nearest = 10;
  for (const auto& u : modes::sample_points(1000, 11)) nearest = std::min(nearest, point_distance(weyl::act_on_point(g, u), u));
  CHECK(nearest > 0.5);
}
