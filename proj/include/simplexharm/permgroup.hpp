#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simplexharm::perm {

/// Integer partition of n, parts stored in non-increasing order.
///
/// Labels an irreducible representation of S(n) (Young diagram) or a
/// conjugacy class (cycle lengths).
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  /// Accepts "[311]", "[3,1,1]", "311" and "3 1 1". The compact form is
  /// only unambiguous for parts below 10.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int row) const { return parts_.at(static_cast<size_t>(row)); }

  Partition conjugate() const;

  /// "[311]" when every part is a single digit, else "[3,1,1]".
  std::string label() const;

  bool operator==(const Partition&) const = default;
  /// Lexicographic on parts; reverse of this is the canonical table order.
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse lexicographic order: [n], [n-1,1], ...
std::vector<Partition> partitions(int n);

/// Bijection on {1..n}.
///
/// Products compose left to right: `p * q` applies p first, then q. This is
/// how product strings such as "(1,2)(2,3)(3,4)" are read.
class Permutation {
 public:
  static Permutation identity(int n);
  /// One-based image list: images[k-1] is the image of k.
  static Permutation from_images(std::vector<int> images);
  /// A single cycle (c1 c2 ... cr) in S(n).
  static Permutation cycle(int n, const std::vector<int>& points);
  /// Adjacent transposition (i, i+1), 1 <= i < n.
  static Permutation adjacent(int n, int i);
  /// Product of cycles in left-to-right order, e.g. "(1,2)(2,3)"; "e" is
  /// the identity.
  static Permutation parse(int n, std::string_view text);
  /// Product s_{w1} * s_{w2} * ... of adjacent transpositions.
  static Permutation from_word(int n, std::span<const int> word);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of a one-based point.
  int operator()(int point) const { return images_.at(static_cast<size_t>(point - 1)) + 1; }
  std::vector<int> images() const;

  Permutation operator*(const Permutation& then) const;
  Permutation inverse() const;
  Permutation pow(int exponent) const;
  int sign() const;
  bool is_identity() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle notation, "e" for the identity.
  std::string to_string() const;

  /// Adjacent-transposition word w (bubble sort) with from_word(n, w) == *this.
  std::vector<int> adjacent_word() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}
  std::vector<int> images_;  // zero based
};

/// Conjugacy class of S(n): cycle lengths plus the number of elements.
struct CycleType {
  Partition lengths;
  std::int64_t class_size;

  int n() const { return lengths.size(); }
  /// Cycle notation used in the tables, e.g. "(3)(1)^2".
  std::string label() const;
  bool operator==(const CycleType& other) const { return lengths == other.lengths; }
};

/// n! / prod_i (i^a_i a_i!) for the class with the given cycle lengths.
std::int64_t class_size(const Partition& lengths);
CycleType make_cycle_type(const Partition& lengths);
CycleType cycle_type(const Permutation& p);
/// Parses "(1)^5", "(3)(2)", "(2)^2(1)"; the degree is inferred.
CycleType parse_cycle_type(std::string_view text);

/// Exact character chi^f(k) by the Murnaghan-Nakayama rule.
long long character(const Partition& f, const Partition& cycle_lengths);
inline long long character(const Partition& f, const CycleType& k) {
  return character(f, k.lengths);
}

struct CharacterTable {
  int n = 0;
  std::int64_t order = 0;
  std::vector<Partition> irreps;
  std::vector<CycleType> classes;
  std::vector<std::vector<long long>> values;  // values[irrep][class]

  long long at(const Partition& f, const Partition& k) const;
  int irrep_index(const Partition& f) const;
  int class_index(const Partition& k) const;
};

/// Full table for 2 <= n <= 8.
CharacterTable character_table(int n);

/// The n powers g, g^2, ..., g^n = e of the full cycle g = (1,2,...,n).
std::vector<Permutation> cyclic_elements(int n);

/// Multiplicity of the identity representation of C_n in D^f.
int trivial_multiplicity(const Partition& f);

/// exp(2 pi i alpha power / n), the character of C_n's irrep alpha on g^power.
std::complex<double> cyclic_character(int n, int alpha, int power);

/// n! as a 64-bit integer (n <= 20).
std::int64_t factorial(int n);

}  // namespace simplexharm::perm
