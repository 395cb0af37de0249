#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "simplexharm/permgroup.hpp"

namespace simplexharm::reduction {

using perm::Partition;

/// Irreducible representation of O(2): Fourier order m with reflection parity
/// epsilon (0 when m = 0).
struct O2Label {
  int m = 0;
  int epsilon = 0;

  /// Throws ArgumentError unless m >= 0 and epsilon is 0 for m = 0, +-1 otherwise.
  static O2Label make(int m, int epsilon);
  int nu() const { return m % 3; }
  std::string label() const;
};

struct O2Reduction {
  Partition f;
  int trivial_multiplicity;
};

/// S(3) representation carried by the label and its C_3-trivial multiplicity.
O2Reduction o2_reduce(const O2Label& label);

/// Irreducible representation of O(3): degree l and inversion parity kappa.
struct O3Label {
  int l = 0;
  int kappa = 1;

  static O3Label make(int l, int kappa);
  /// kappa = (-1)^l.
  static O3Label natural(int l) { return make(l, l % 2 == 0 ? 1 : -1); }
  std::string label() const;
};

/// chi^(l, kappa) of an orthogonal 3x3 matrix. Proper g: sum_{m=-l}^{l}
/// e^{i m phi} with trace g = 1 + 2 cos phi. Improper g: kappa times the same
/// sum at -g.
double o3_character(const O3Label& label, const Eigen::Matrix3d& g);

/// (1/24) sum over S(4) of chi^(l,kappa) chi^f, with S(4) embedded in O(3)
/// through the primed tetrahedral matrices.
int multiplicity_o3_s4(const O3Label& label, const Partition& f);

/// sum_f m((l, (-1)^l), f) m(f, 0).
int periodic_count_o3(int l);

/// (1/120) sum_k n(k) chi^(j,j)(k) chi^f(k). Throws ConsistencyError when the
/// sum is more than 1e-6 away from a non-negative integer.
int multiplicity_o4_s5(int two_j, const Partition& f);

/// sum_f m((j,j), f) m(f, 0).
int periodic_count_o4(int two_j);

/// Multiplicities m(label, f) for one group chain.
struct MultiplicityTable {
  std::string chain;
  std::vector<std::string> row_labels;
  /// Dimension of the O(n) representation of each row.
  std::vector<int> row_dimensions;
  std::vector<Partition> columns;
  /// m(f, 0) per column.
  std::vector<int> trivial_multiplicities;
  std::vector<std::vector<int>> entries;
  /// m(label, 0) = sum_f m(label, f) m(f, 0) per row.
  std::vector<int> periodic_counts;
  /// nu_0(f) = m(f, 0) sum_rows m(label, f) per column.
  std::vector<int> totals;

  int grand_total() const;
  /// Rows where sum_f dim(f) m(label, f) differs from the row dimension.
  std::vector<int> dimension_violations() const;
};

/// Rows 2j = 0..two_j_max (two_j_max <= 200), columns in S(5) table order.
MultiplicityTable o4_s5_table(int two_j_max);

/// Rows (l, (-1)^l) for l = 0..l_max.
MultiplicityTable o3_s4_table(int l_max);

/// Rows m = 0..m_max; row m > 0 is the two-dimensional span of (m, +1) and (m, -1).
MultiplicityTable o2_s3_table(int m_max);

/// Observed behaviour of the multiplicities under 2j -> 2j + 60.
struct RecursionReport {
  struct ClassPeriodicity {
    perm::CycleType cycle_type;
    /// Period in 2j claimed for chi^(j,j)(k).
    int period;
    bool holds;
    double max_deviation;
  };
  struct PartitionIncrement {
    Partition f;
    /// m((j+30,j+30), f) - m((j,j), f) for 2j = 0..two_j_max-60.
    std::vector<int> measured;
    /// True when measured equals 2j + 36 at every 2j.
    bool printed_form_holds;
    /// measured = slope * 2j + intercept with slope = dim f and
    /// intercept = 31 dim f + 5 chi^f((2)(1)^3).
    int slope;
    int intercept;
    bool fitted_form_holds;
  };

  int two_j_max;
  /// Period 60 for the five classes other than (1)^5 and (2)(1)^3.
  std::vector<ClassPeriodicity> period_60;
  /// Shortest periods: 3, 2, 3, 4, 5 in 2j.
  std::vector<ClassPeriodicity> short_periods;
  /// chi((1)^5) = (2j+1)^2 and chi((2)(1)^3) = 2j+1.
  bool polynomial_classes_hold;
  std::vector<PartitionIncrement> increments;
  /// Rows 2j <= two_j_max failing the dimension sum rule.
  std::vector<int> dimension_violations;
};

/// Requires two_j_max >= 60.
RecursionReport recursion_report(int two_j_max);

}  // namespace simplexharm::reduction
