#include "simplexharm/weylaction.hpp"

#include <algorithm>
#include <cmath>

#include "simplexharm/errors.hpp"

namespace simplexharm::weyl {

using su2::Complex;

WeylVector make_weyl_vector(const Point4& a) {
  if (std::abs(a.norm() - 1.0) > 1e-12) throw ArgumentError("Weyl vector must have unit norm");
  return WeylVector{a, su2::su2_from_point(a)};
}

const std::vector<WeylVector>& weyl_vectors_s5() {
  static const std::vector<WeylVector> vectors = [] {
    return std::vector<WeylVector>{
        make_weyl_vector({0, 0, 0, 1}),
        make_weyl_vector({0, 0, std::sqrt(3.0 / 4.0), 0.5}),
        make_weyl_vector({0, std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0), 0}),
        make_weyl_vector({std::sqrt(5.0 / 8.0), std::sqrt(3.0 / 8.0), 0, 0}),
    };
  }();
  return vectors;
}

Eigen::Matrix4d gram_matrix(const std::vector<WeylVector>& vectors) {
  if (vectors.size() != 4) throw ArgumentError("gram_matrix expects four vectors");
  Eigen::Matrix4d g;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) g(i, k) = vectors[static_cast<size_t>(i)].a.dot(vectors[static_cast<size_t>(k)].a);
  return g;
}

GroupOperator reflection_operator(const WeylVector& a) {
  return GroupOperator{a.v, a.v.inverse(), true};
}

GroupOperator compose(const GroupOperator& s, const GroupOperator& t) {
  if (s.reflective) return GroupOperator{s.g_l * t.g_r, s.g_r * t.g_l, !t.reflective};
  return GroupOperator{s.g_l * t.g_l, s.g_r * t.g_r, t.reflective};
}

GroupOperator word_operator(const std::vector<int>& word) {
  const auto& vectors = weyl_vectors_s5();
  GroupOperator op = GroupOperator::identity();
  for (int w : word) {
    if (w < 1 || w > 4) throw ArgumentError("Weyl reflection index must be 1..4");
    op = compose(op, reflection_operator(vectors[static_cast<size_t>(w - 1)]));
  }
  return op;
}

GroupOperator permutation_operator(const perm::Permutation& p) {
  if (p.degree() != 5) throw ArgumentError("permutation_operator expects an element of S(5)");
  return word_operator(p.adjacent_word());
}

SU2Element act_on_point(const GroupOperator& op, const SU2Element& u) {
  if (!op.reflective) return op.g_l.inverse() * u * op.g_r;
  return op.g_r.inverse() * (-u.inverse()) * op.g_l;
}

bool same_action(const GroupOperator& a, const GroupOperator& b, double tol) {
  if (a.reflective != b.reflective) return false;
  const bool plus = a.g_l.distance(b.g_l) < tol && a.g_r.distance(b.g_r) < tol;
  const bool minus = a.g_l.distance(-b.g_l) < tol && a.g_r.distance(-b.g_r) < tol;
  return plus || minus;
}

double operator_character(int two_j, const GroupOperator& op) {
  if (op.reflective) return su2::su2_character(two_j, op.g_r * op.g_l);
  return su2::su2_character(two_j, op.g_l.inverse()) * su2::su2_character(two_j, op.g_r);
}

const std::vector<ClassRepresentative>& class_representatives_s5() {
  static const std::vector<ClassRepresentative> reps = [] {
    const std::vector<std::pair<std::vector<int>, std::string>> listed = {
        {{}, "e"},
        {{1}, "(1,2)"},
        {{1, 3}, "(1,2)(3,4)"},
        {{1, 2}, "(1,2)(2,3)"},
        {{1, 2, 4}, "(1,2)(2,3)(4,5)"},
        {{1, 2, 3}, "(1,2)(2,3)(3,4)"},
        {{1, 2, 3, 4}, "(1,2)(2,3)(3,4)(4,5)"},
    };
    std::vector<ClassRepresentative> out;
    for (const auto& [word, product] : listed) {
      const auto p = perm::Permutation::from_word(5, word);
      out.push_back(ClassRepresentative{perm::cycle_type(p), word, product, p});
    }
    const auto table = perm::character_table(5);
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
      return table.class_index(x.cycle_type.lengths) < table.class_index(y.cycle_type.lengths);
    });
    return out;
  }();
  return reps;
}

std::vector<ClassCharacterRow> class_character_table(int two_j_max) {
  if (two_j_max < 0) throw ArgumentError("two_j_max must be non-negative");
  std::vector<ClassCharacterRow> rows;
  for (const auto& rep : class_representatives_s5()) {
    const GroupOperator op = word_operator(rep.word);
    ClassCharacterRow row{rep.cycle_type, op.reflective, 0.0, 0.0, {}};
    if (op.reflective) {
      row.half_angle_left = row.half_angle_right = su2::half_angle(op.g_r * op.g_l);
    } else {
      row.half_angle_left = su2::half_angle(op.g_l);
      row.half_angle_right = su2::half_angle(op.g_r);
    }
    row.characters.reserve(static_cast<size_t>(two_j_max + 1));
    for (int tj = 0; tj <= two_j_max; ++tj) row.characters.push_back(operator_character(tj, op));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix operator_matrix(int two_j, const GroupOperator& op) {
  if (two_j < 0 || two_j > kMaxOperatorTwoJ)
    throw ArgumentError("operator_matrix supports 0 <= 2j <= " + std::to_string(kMaxOperatorTwoJ));
  const int d = two_j + 1;
  CMatrix m(d * d, d * d);
  if (!op.reflective) {
    const CMatrix left = su2::wigner_d(two_j, op.g_l.inverse());
    const CMatrix right = su2::wigner_d(two_j, op.g_r);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int m1 = 0; m1 < d; ++m1)
          for (int m2 = 0; m2 < d; ++m2) m(a * d + b, m1 * d + m2) = left(m1, a) * right(b, m2);
    return m;
  }
  const SU2Element q = su2::q_element();
  const CMatrix left = su2::wigner_d(two_j, q.inverse() * op.g_l.inverse());
  const CMatrix right = su2::wigner_d(two_j, op.g_r * q);
  const double sign = (two_j % 2 == 0) ? 1.0 : -1.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) m(a * d + b, m1 * d + m2) = sign * left(m2, a) * right(b, m1);
  return m;
}

}  // namespace simplexharm::weyl
