#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "simplexharm/permgroup.hpp"

namespace simplexharm::young {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Standard Young tableau: rows strictly increase left to right, columns top
/// to bottom.
struct StandardTableau {
  perm::Partition shape;
  std::vector<std::vector<int>> rows;

  /// Row index (1-based) of n, n-1, ..., 1 concatenated, e.g. "3211".
  std::string yamanouchi() const;
  /// (row, column), zero based.
  std::pair<int, int> position(int entry) const;
  /// column - row of the box holding `entry`.
  int content(int entry) const;
  StandardTableau transposed() const;
};

/// Orthogonal representation matrix of a symmetric-group element.
struct ReprMatrix {
  perm::Partition shape;
  Matrix matrix;
};

/// Standard tableaux in basis order.
///
/// The order is descending Yamanouchi symbol, except for [32] and its
/// mirror [221], whose bases follow the long-standing printed ordering
/// 22111, 21121, 21211, 12121, 12211 (and the transposed tableaux).
std::vector<StandardTableau> standard_tableaux(const perm::Partition& f);

/// Sign attached to each basis vector relative to the plain axial-distance
/// construction. All +1 except the second [22] vector.
std::vector<int> basis_phases(const perm::Partition& f);

/// Young orthogonal matrix for the adjacent transposition (i, i+1).
///
/// Diagonal entry for tableau T is 1/rho with rho = c(i+1) - c(i) the signed
/// axial distance; T couples to the tableau with i and i+1 exchanged through
/// sqrt(1 - 1/rho^2).
ReprMatrix generator_matrix(const perm::Partition& f, int i);

/// Product of generator matrices along the adjacent-transposition word of p;
/// D(p * q) = D(p) D(q) with left-to-right permutation products.
ReprMatrix rep_matrix(const perm::Partition& f, const perm::Permutation& p);

/// Same construction driven by explicit generator matrices (used for the
/// primed tetrahedral forms).
Matrix rep_matrix_from_generators(const std::vector<Matrix>& generators,
                                  const perm::Permutation& p);

/// Coxeter element s_1 s_2 ... s_{n-1} as a permutation of degree n.
perm::Permutation coxeter_element(int n);

/// (1/order) * sum_{k=0}^{order-1} M^k.
Matrix cyclic_average(const Matrix& generator, int order);

/// (1/n) sum over C_n of D^f(h): orthogonal projector onto the C_n-fixed
/// subspace of D^f.
ReprMatrix trivial_projector(const perm::Partition& f);

struct FixedSubspace {
  perm::Partition shape;
  Matrix basis;  // orthonormal columns
  int dimension() const { return static_cast<int>(basis.cols()); }
};

/// Orthonormal basis of ker(op - I).
///
/// Rank is decided from singular values above 1e-8 times the largest; the
/// basis comes from Gaussian elimination (pivot tolerance 1e-9) followed by
/// Gram-Schmidt, each vector signed so its first non-negligible entry is
/// positive.
Matrix eigenvalue_one_space(const Matrix& op);

/// C_n-fixed vectors of D^f: the eigenvalue-1 space of the Coxeter element.
FixedSubspace fixed_subspace(const perm::Partition& f);

/// D^{[31]'}(1,2), (2,3), (3,4) in tetrahedral coordinates followed by the
/// associate D^{[211]'} generators (their negatives).
std::vector<ReprMatrix> tetrahedral_primed_generators();

/// Primed tetrahedral representation of an element of S(4); f is [31] or [211].
ReprMatrix primed_rep_matrix(const perm::Partition& f, const perm::Permutation& p);

/// Largest absolute deviation between two orthogonal projectors' ranges,
/// i.e. sin of the largest principal angle between span(a) and span(b).
double max_principal_angle_sine(const Matrix& a, const Matrix& b);

}  // namespace simplexharm::young
