#pragma once

#include <string>
#include <vector>

#include "simplexharm/permgroup.hpp"
#include "simplexharm/su2wigner.hpp"

namespace simplexharm::weyl {

using su2::CMatrix;
using su2::Point4;
using su2::SU2Element;

/// Unit reflection vector together with its SU(2) image.
struct WeylVector {
  Point4 a;
  SU2Element v;
};

/// Wraps a unit vector; throws ArgumentError if it is not normalised.
WeylVector make_weyl_vector(const Point4& a);

/// Reflection vectors a_1..a_4 for the generators (i, i+1) of S(5).
const std::vector<WeylVector>& weyl_vectors_s5();

/// Matrix of scalar products <a_i, a_k>.
Eigen::Matrix4d gram_matrix(const std::vector<WeylVector>& vectors);

/// Element of O(4) written as T_(g_l, g_r), followed by the base reflection
/// T_{a_0} when `reflective` is set.
///
/// (g_l, g_r) and (-g_l, -g_r) describe the same operator.
struct GroupOperator {
  SU2Element g_l = SU2Element::identity();
  SU2Element g_r = SU2Element::identity();
  bool reflective = false;

  static GroupOperator identity() { return {}; }
};

/// T_a = T_(v_a, v_a^{-1}) T_{a_0}.
GroupOperator reflection_operator(const WeylVector& a);

/// Operator product s * t, normalised with T_{a_0} T_(g_l,g_r) T_{a_0} =
/// T_(g_r,g_l).
GroupOperator compose(const GroupOperator& s, const GroupOperator& t);

/// Product T_{w_1} T_{w_2} ... of Weyl reflections W_1..W_4 (1-based word).
GroupOperator word_operator(const std::vector<int>& word);

/// Operator of p in S(5): the reflections along the adjacent-transposition
/// word of p, so that op(p * q) = op(p) op(q).
GroupOperator permutation_operator(const perm::Permutation& p);

/// Point map P with (T f)(u) = f(P(u)).
///
/// Rotation: P(u) = g_l^{-1} u g_r. Reflective: P(u) = g_r^{-1} (-u^dagger) g_l,
/// which for a reflection operator is the Euclidean reflection in a.
SU2Element act_on_point(const GroupOperator& op, const SU2Element& u);

/// Same with the two factors equal only up to a joint sign; true when the
/// operators act identically on S^3.
bool same_action(const GroupOperator& a, const GroupOperator& b, double tol = 1e-12);

/// chi^j(g_l^{-1}) chi^j(g_r) for rotations, chi^j(g_r g_l) for reflective ops.
double operator_character(int two_j, const GroupOperator& op);

/// Class representative of S(5) expressed as a word in W_1..W_4.
struct ClassRepresentative {
  perm::CycleType cycle_type;
  std::vector<int> word;
  /// Product string such as "(1,2)(2,3)".
  std::string product;
  perm::Permutation permutation;
};

/// Representatives e, W1, W1W3, W1W2, W1W2W4, W1W2W3, W1W2W3W4, reordered
/// to the class order of perm::character_table(5).
const std::vector<ClassRepresentative>& class_representatives_s5();

struct ClassCharacterRow {
  perm::CycleType cycle_type;
  bool reflective = false;
  /// Rotations: phi(g_l)/2 and phi(g_r)/2. Reflective: phi(g_r g_l)/2 twice.
  double half_angle_left = 0;
  double half_angle_right = 0;
  /// chi^(j,j)(k) for 2j = 0..two_j_max.
  std::vector<double> characters;
};

/// Characters of the O(4) representations D^(j,j) on the seven classes.
std::vector<ClassCharacterRow> class_character_table(int two_j_max);

/// Matrix of the operator on span{D^j_{m1 m2}} with index (m1+j)(2j+1) + m2+j.
///
/// Rotation: M[(a,b),(m1,m2)] = D_{m1 a}(g_l^{-1}) D_{b m2}(g_r).
/// Reflective: M[(a,b),(m1,m2)] = (-1)^{2j} D_{m2 a}(q^{-1} g_l^{-1}) D_{b m1}(g_r q).
CMatrix operator_matrix(int two_j, const GroupOperator& op);

/// Largest 2j accepted by operator_matrix.
inline constexpr int kMaxOperatorTwoJ = 12;

}  // namespace simplexharm::weyl
