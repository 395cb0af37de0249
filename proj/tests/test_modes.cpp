#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "simplexharm/errors.hpp"
#include "simplexharm/modes.hpp"
#include "simplexharm/parallel.hpp"
#include "simplexharm/reduction.hpp"

using namespace simplexharm;
using modes::CMatrix;
using perm::Partition;

TEST_CASE("cyclic projector rank equals the periodic multiplicity") {
  for (int two_j = 0; two_j <= 8; ++two_j) {
    CAPTURE(two_j);
    const CMatrix p = modes::cyclic_projector(two_j);
    const int n = (two_j + 1) * (two_j + 1);
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(modes::numerical_rank(p) == reduction::periodic_count_o4(two_j));
    CHECK(p.trace().real() == doctest::Approx(reduction::periodic_count_o4(two_j)).epsilon(1e-9));
    CHECK(p.rows() == n);
  }
}

TEST_CASE("Young operator ranks equal character multiplicities") {
  for (int two_j = 0; two_j <= 6; ++two_j)
    for (const auto& f : perm::partitions(5)) {
      CAPTURE(two_j);
      CAPTURE(f.label());
      const int m = reduction::multiplicity_o4_s5(two_j, f);
      CHECK(modes::young_rank(two_j, f) == m);
      const long long dim = perm::character(f, Partition({1, 1, 1, 1, 1}));
      CHECK(modes::numerical_rank(modes::isotypic_projector(two_j, f)) == dim * m);
    }
}

TEST_CASE("Young operators multiply like matrix units") {
  const int two_j = 4;
  const Partition f({3, 2});
  const auto units = modes::young_operators(two_j, f);
  const size_t d = units.size();
  for (size_t r = 0; r < d; ++r)
    for (size_t s = 0; s < d; ++s)
      for (size_t t = 0; t < d; ++t) {
        const CMatrix prod = units[r][s] * units[s][t];
        CHECK((prod - units[r][t]).cwiseAbs().maxCoeff() < 1e-10);
      }
}

TEST_CASE("periodic modes are orthonormal and C_5 invariant") {
  for (int two_j = 0; two_j <= modes::kMaxModeTwoJ; ++two_j) {
    CAPTURE(two_j);
    const auto basis = modes::periodic_basis(two_j);
    CHECK(basis.count() == reduction::periodic_count_o4(two_j));
    if (basis.count() == 0) continue;
    const CMatrix gram = basis.coefficients.adjoint() * basis.coefficients;
    CHECK((gram - CMatrix::Identity(basis.count(), basis.count())).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(modes::verify_invariance(basis, 100, 20240601) < 1e-9);
  }
}

TEST_CASE("a degree one harmonic is not C_5 invariant") {
  modes::ModeBasis control;
  control.two_j = 1;
  control.coefficients = CMatrix::Zero(4, 1);
  control.coefficients(0, 0) = 1;
  CHECK(modes::verify_invariance(control, 100, 20240601) > 0.1);
}

TEST_CASE("periodic and excluded modes split the degree space") {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const auto kept = modes::periodic_basis(two_j);
    const auto dropped = modes::excluded_basis(two_j);
    CHECK(kept.count() + dropped.count() == (two_j + 1) * (two_j + 1));
    if (kept.count() > 0 && dropped.count() > 0)
      CHECK((kept.coefficients.adjoint() * dropped.coefficients).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("tagged modes count m(f) m(f,0) per partition") {
  for (int two_j = 0; two_j <= 8; ++two_j) {
    const auto basis = modes::tagged_periodic_basis(two_j);
    CHECK(basis.count() == reduction::periodic_count_o4(two_j));
    REQUIRE(basis.tags.size() == static_cast<size_t>(basis.count()));
    for (const auto& f : perm::partitions(5)) {
      const auto n = std::count(basis.tags.begin(), basis.tags.end(), f);
      CHECK(n == reduction::multiplicity_o4_s5(two_j, f) * perm::trivial_multiplicity(f));
    }
    if (basis.count() > 0) CHECK(modes::verify_invariance(basis, 30, 3) < 1e-9);
  }
}

TEST_CASE("mode bases do not depend on the thread count") {
  const auto reference = modes::periodic_basis(10);
  ::setenv("MODES_NUM_THREADS", "1", 1);
  const auto serial = modes::periodic_basis(10);
  ::setenv("MODES_NUM_THREADS", "7", 1);
  const auto threaded = modes::periodic_basis(10);
  ::unsetenv("MODES_NUM_THREADS");
  CHECK((serial.coefficients - reference.coefficients).cwiseAbs().maxCoeff() == 0.0);
  CHECK((threaded.coefficients - reference.coefficients).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("parallel_for reports the lowest failing index") {
  ::setenv("MODES_NUM_THREADS", "4", 1);
  std::vector<int> out(100, 0);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  try {
    parallel_for(50, [](std::size_t i) {
      if (i % 10 == 7) throw std::runtime_error(std::to_string(i));
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "7");
  }
  ::unsetenv("MODES_NUM_THREADS");
}

TEST_CASE("sample points are reproducible unit quaternions") {
  const auto a = modes::sample_points(20, 42);
  const auto b = modes::sample_points(20, 42);
  const auto c = modes::sample_points(20, 43);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].distance(b[i]) == 0.0);
    CHECK(a[i].to_point().norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(a[0].distance(c[0]) > 0);
}

TEST_CASE("circle modes survive exactly for m divisible by 3") {
  for (int m = 0; m <= 12; ++m)
    for (int eps : m == 0 ? std::vector<int>{0} : std::vector<int>{1, -1}) {
      const auto label = reduction::O2Label::make(m, eps);
      const auto mode = modes::circle_mode(label);
      CHECK(mode.allowed == (m % 3 == 0));
      CHECK(mode.status == (mode.allowed ? "periodic" : "excluded by selection rule"));
      if (mode.allowed)
        for (double phi : {0.3, 1.1, 2.9}) {
          const auto shifted = modes::circle_harmonic(label, phi + 2 * std::numbers::pi / 3);
          CHECK(std::abs(shifted - modes::circle_harmonic(label, phi)) < 1e-12);
        }
    }
}

TEST_CASE("sphere modes carry the C_4 periodic counts") {
  const std::vector<int> expected{1, 0, 1, 2, 3};
  for (int l = 0; l <= 4; ++l) {
    const auto mode = modes::sphere2_modes(reduction::O3Label::natural(l));
    CHECK(mode.periodic_count == expected[static_cast<size_t>(l)]);
    CHECK(mode.allowed == (mode.periodic_count > 0));
    int fixed = 0;
    for (const auto& c : mode.components) fixed += c.multiplicity * static_cast<int>(c.fixed_vectors.cols());
    CHECK(fixed == mode.periodic_count);
  }
}

TEST_CASE("mode degrees outside the supported range are rejected") {
  CHECK_THROWS_AS(modes::periodic_basis(-1), ArgumentError);
  CHECK_THROWS_AS(modes::periodic_basis(modes::kMaxModeTwoJ + 1), ArgumentError);
}
