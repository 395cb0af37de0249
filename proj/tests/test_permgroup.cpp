#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "simplexharm/errors.hpp"
#include "simplexharm/permgroup.hpp"

using namespace simplexharm;
using perm::Partition;
using perm::Permutation;

TEST_CASE("partitions are listed in reverse lexicographic order") {
  std::vector<std::string> labels;
  for (const auto& p : perm::partitions(5)) labels.push_back(p.label());
  CHECK(labels == std::vector<std::string>{"[5]", "[41]", "[32]", "[311]", "[221]", "[2111]", "[11111]"});
  CHECK(perm::partitions(8).size() == 22);
}

TEST_CASE("partition parsing accepts the usual spellings") {
  CHECK(Partition::parse("[311]") == Partition({3, 1, 1}));
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition::parse("3 1 1") == Partition({3, 1, 1}));
  CHECK(Partition::parse("311").conjugate() == Partition({3, 1, 1}));
  CHECK(Partition::parse("[32]").conjugate() == Partition({2, 2, 1}));
  CHECK_THROWS_AS(Partition::parse("[13]"), ArgumentError);
  CHECK_THROWS_AS(Partition::parse("x"), ArgumentError);
}

TEST_CASE("permutation products compose left to right") {
  const auto a = Permutation::parse(3, "(1,2)");
  const auto b = Permutation::parse(3, "(2,3)");
  // Apply a first, then b: 1 -> 2 -> 3.
  CHECK((a * b)(1) == 3);
  CHECK((a * b).to_string() == "(1,3,2)");
  CHECK(Permutation::parse(3, "(1,2)(2,3)") == a * b);
  CHECK((a * b).inverse() == b * a);
}

TEST_CASE("adjacent words reproduce the permutation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> images{1, 2, 3, 4, 5, 6};
    std::shuffle(images.begin(), images.end(), rng);
    const auto p = Permutation::from_images(images);
    const auto w = p.adjacent_word();
    CHECK(Permutation::from_word(6, w) == p);
    CHECK(((w.size() % 2 == 0) ? 1 : -1) == p.sign());
  }
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 1; n <= 7; ++n) {
    std::int64_t total = 0;
    for (const auto& k : perm::partitions(n)) total += perm::class_size(k);
    CHECK(total == perm::factorial(n));
  }
}

TEST_CASE("character tables satisfy both orthogonality relations") {
  for (int n = 2; n <= 7; ++n) {
    const auto t = perm::character_table(n);
    const size_t r = t.irreps.size();
    for (size_t a = 0; a < r; ++a)
      for (size_t b = 0; b < r; ++b) {
        long long rows = 0, cols = 0;
        for (size_t k = 0; k < r; ++k) {
          rows += t.classes[k].class_size * t.values[a][k] * t.values[b][k];
          cols += t.values[k][a] * t.values[k][b];
        }
        CHECK(rows == (a == b ? t.order : 0));
        CHECK(cols == (a == b ? t.order / t.classes[a].class_size : 0));
      }
  }
}

TEST_CASE("identity column gives the hook length dimensions") {
  const auto t = perm::character_table(5);
  std::vector<long long> dims;
  for (size_t i = 0; i < t.irreps.size(); ++i) dims.push_back(t.at(t.irreps[i], Partition({1, 1, 1, 1, 1})));
  CHECK(dims == std::vector<long long>{1, 4, 5, 6, 5, 4, 1});
}

TEST_CASE("conjugate partitions differ by the sign character") {
  for (int n = 3; n <= 6; ++n) {
    const auto t = perm::character_table(n);
    for (const auto& f : t.irreps)
      for (const auto& k : t.classes) {
        const int sign = ((k.lengths.size() - k.lengths.length()) % 2 == 0) ? 1 : -1;
        CHECK(t.at(f.conjugate(), k.lengths) == sign * t.at(f, k.lengths));
      }
  }
}

TEST_CASE("cycle types of explicit permutations") {
  const auto k = perm::cycle_type(Permutation::parse(5, "(1,2,3)(4,5)"));
  CHECK(k.label() == "(3)(2)");
  CHECK(k.class_size == 20);
  CHECK(perm::parse_cycle_type("(2)(1)^3").class_size == 10);
  CHECK(perm::parse_cycle_type("(1)^5").lengths == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("trivial multiplicity agrees with two independent oracles") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& f : perm::partitions(n)) {
      CAPTURE(f.label());
      const int m = perm::trivial_multiplicity(f);
      CHECK(m == oracle::trivial_multiplicity_by_walk(f));
      CHECK(m == oracle::trivial_multiplicity_by_trace(f));
    }
}

TEST_CASE("trivial multiplicities sum to (n-1)!") {
  // The module induced from the trivial C_n representation has dimension (n-1)!.
  for (int n = 2; n <= 7; ++n) {
    const auto t = perm::character_table(n);
    long long weighted = 0;
    const Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
    for (const auto& f : t.irreps) weighted += perm::trivial_multiplicity(f) * t.at(f, ones);
    CHECK(weighted == perm::factorial(n - 1));
  }
}

TEST_CASE("cyclic characters are roots of unity") {
  for (int alpha = 0; alpha < 5; ++alpha) CHECK(std::abs(perm::cyclic_character(5, alpha, 1)) == doctest::Approx(1.0));
  CHECK(perm::cyclic_character(5, 0, 3).real() == doctest::Approx(1.0));
  CHECK(perm::cyclic_elements(5).size() == 5);
}
