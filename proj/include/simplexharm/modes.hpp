#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "simplexharm/permgroup.hpp"
#include "simplexharm/reduction.hpp"
#include "simplexharm/su2wigner.hpp"
#include "simplexharm/weylaction.hpp"
#include "simplexharm/youngrep.hpp"

namespace simplexharm::modes {

using su2::CMatrix;
using su2::Complex;
using su2::SU2Element;

/// Largest 2j for the projector-based constructions.
inline constexpr int kMaxModeTwoJ = 12;

/// Operators of C_5 = <g>, g the Coxeter element of S(5): g, g^2, ..., g^5 = e.
std::vector<weyl::GroupOperator> cyclic_operators();

/// (1/5) sum_k operator_matrix(2j, g^k): the orthogonal projector onto
/// C_5-periodic harmonics of degree 2j.
CMatrix cyclic_projector(int two_j);

/// Orthonormal periodic modes of one degree, as coefficient columns on
/// D^j_{m1 m2} (row (m1+j)(2j+1) + m2+j).
struct ModeBasis {
  int two_j = 0;
  CMatrix coefficients;
  /// Empty, or one partition per column.
  std::vector<perm::Partition> tags;

  int count() const { return static_cast<int>(coefficients.cols()); }
};

/// Orthonormal basis of range(p) for a Hermitian projector p.
///
/// Rank counts singular values above 1e-8 times the largest. Columns are
/// picked by pivoted Gram-Schmidt on the columns of p and each is rotated so
/// its first entry of modulus above 1e-8 is real and positive.
CMatrix range_basis(const CMatrix& p);

/// Periodic modes from the cyclic projector.
ModeBasis periodic_basis(int two_j);

/// Periodic modes split by S(5) isotypic component, columns grouped by
/// partition in character-table order and tagged.
ModeBasis tagged_periodic_basis(int two_j);

/// Harmonics of degree 2j orthogonal to every periodic mode.
ModeBasis excluded_basis(int two_j);

/// operator_matrix(2j, permutation_operator(p)) for all p in S(5), in the
/// order of all_permutations_s5().
std::vector<CMatrix> s5_operator_matrices(int two_j);

/// The 120 elements of S(5) in lexicographic image order.
const std::vector<perm::Permutation>& all_permutations_s5();

/// (dim f / 120) sum_p chi^f(p) M(p).
CMatrix isotypic_projector(int two_j, const perm::Partition& f);

/// c^f_{r,s} = (dim f / 120) sum_p D^f_{r s}(p) M(p); r, s index the Young basis.
CMatrix young_operator(int two_j, const perm::Partition& f, int r, int s);

/// All c^f_{r,s} for one partition, indexed [r][s].
std::vector<std::vector<CMatrix>> young_operators(int two_j, const perm::Partition& f);

/// Numerical rank of c^f_{r,r} (row r = 0 by default).
int young_rank(int two_j, const perm::Partition& f, int r = 0);

/// Rank with singular values above 1e-8 times the largest (0 for a zero matrix).
int numerical_rank(const CMatrix& m);

/// Uniform points on S^3 from normalised Gaussian 4-vectors (mt19937_64).
std::vector<SU2Element> sample_points(int count, std::uint64_t seed);

/// sum_{m1 m2} c_{m1 m2} D^j_{m1 m2}(u).
Complex evaluate_harmonic(int two_j, const Eigen::VectorXcd& coefficients, const SU2Element& u);

/// max over sample points u, columns psi and operators g of |psi(g u) - psi(u)|,
/// where g u is the point map of act_on_point.
double verify_invariance(const ModeBasis& basis, int num_points, std::uint64_t seed,
                         const std::vector<weyl::GroupOperator>& group);

/// Same over the five elements of C_5.
double verify_invariance(const ModeBasis& basis, int num_points, std::uint64_t seed);

/// Mode on the circle for an O(2) label.
struct CircleMode {
  reduction::O2Label label;
  bool allowed = false;
  /// "periodic" or "excluded by selection rule".
  std::string status;
  perm::Partition f;
};

/// C_3-periodic harmonic (1/sqrt 2)[Y_m + epsilon (-1)^m Y_{-m}], allowed iff m = 0 mod 3.
CircleMode circle_mode(const reduction::O2Label& label);

/// Y_{m,epsilon}(phi) with Y_m = e^{i m phi} / sqrt(2 pi).
Complex circle_harmonic(const reduction::O2Label& label, double phi);

/// Periodic content of an O(3) label on S^2.
struct SphereComponent {
  perm::Partition f;
  int multiplicity;
  /// C_4-fixed vectors of D^f in the Young basis.
  young::Matrix fixed_vectors;
};

struct Sphere2Mode {
  reduction::O3Label label;
  bool allowed = false;
  std::string status;
  int periodic_count = 0;
  /// Every partition with non-zero multiplicity.
  std::vector<SphereComponent> components;
};

Sphere2Mode sphere2_modes(const reduction::O3Label& label);

}  // namespace simplexharm::modes
