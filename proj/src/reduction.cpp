#include "simplexharm/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "simplexharm/errors.hpp"
#include "simplexharm/parallel.hpp"
#include "simplexharm/weylaction.hpp"
#include "simplexharm/youngrep.hpp"

namespace simplexharm::reduction {

namespace {

constexpr double kRoundingTolerance = 1e-6;

int round_multiplicity(double value, const std::string& what) {
  const double nearest = std::round(value);
  if (std::abs(value - nearest) > kRoundingTolerance || nearest < 0)
    throw ConsistencyError(what + " = " + std::to_string(value) + " is not a non-negative integer");
  return static_cast<int>(nearest);
}

const perm::CharacterTable& s4_table() {
  static const perm::CharacterTable table = perm::character_table(4);
  return table;
}

const perm::CharacterTable& s5_table() {
  static const perm::CharacterTable table = perm::character_table(5);
  return table;
}

std::vector<perm::Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<perm::Permutation> out;
  do {
    out.push_back(perm::Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// S(4) in O(3): each element with its [31]' matrix and cycle-type index.
struct EmbeddedElement {
  Eigen::Matrix3d matrix;
  int class_index;
};

const std::vector<EmbeddedElement>& s4_in_o3() {
  static const std::vector<EmbeddedElement> elements = [] {
    std::vector<EmbeddedElement> out;
    const auto f = Partition({3, 1});
    for (const auto& p : all_permutations(4)) {
      const Eigen::Matrix3d m = young::primed_rep_matrix(f, p).matrix;
      out.push_back({m, s4_table().class_index(perm::cycle_type(p).lengths)});
    }
    return out;
  }();
  return elements;
}

// sum_{m=-l}^{l} e^{i m phi} from cos phi.
double rotation_character(int l, double cos_phi) {
  const double phi = std::acos(std::clamp(cos_phi, -1.0, 1.0));
  double sum = 1.0;
  for (int m = 1; m <= l; ++m) sum += 2.0 * std::cos(m * phi);
  return sum;
}

// chi^(j,j) on the classes of S(5), in character-table order.
std::vector<double> o4_class_characters(int two_j) {
  static const std::vector<weyl::GroupOperator> ops = [] {
    std::vector<weyl::GroupOperator> out;
    for (const auto& rep : weyl::class_representatives_s5()) out.push_back(weyl::word_operator(rep.word));
    return out;
  }();
  std::vector<double> chars;
  chars.reserve(ops.size());
  for (const auto& op : ops) chars.push_back(weyl::operator_character(two_j, op));
  return chars;
}

int o4_multiplicity_from(const std::vector<double>& chars, int irrep) {
  const auto& table = s5_table();
  double sum = 0;
  for (size_t k = 0; k < table.classes.size(); ++k)
    sum += static_cast<double>(table.classes[k].class_size) * chars[k] *
           static_cast<double>(table.values[static_cast<size_t>(irrep)][k]);
  return round_multiplicity(sum / static_cast<double>(table.order),
                            "m(2j, " + table.irreps[static_cast<size_t>(irrep)].label() + ")");
}

long long irrep_dimension(const Partition& f) {
  return perm::character(f, Partition(std::vector<int>(static_cast<size_t>(f.size()), 1)));
}

std::vector<int> trivial_column(const perm::CharacterTable& table) {
  std::vector<int> out;
  for (const auto& f : table.irreps) out.push_back(perm::trivial_multiplicity(f));
  return out;
}

void finish_table(MultiplicityTable& t) {
  const size_t cols = t.columns.size();
  t.totals.assign(cols, 0);
  t.periodic_counts.clear();
  for (const auto& row : t.entries) {
    int periodic = 0;
    for (size_t c = 0; c < cols; ++c) {
      periodic += row[c] * t.trivial_multiplicities[c];
      t.totals[c] += row[c] * t.trivial_multiplicities[c];
    }
    t.periodic_counts.push_back(periodic);
  }
}

}  // namespace

O2Label O2Label::make(int m, int epsilon) {
  if (m < 0) throw ArgumentError("O(2) label requires m >= 0");
  if (m == 0 && epsilon != 0) throw ArgumentError("O(2) label m = 0 carries no epsilon");
  if (m > 0 && epsilon != 1 && epsilon != -1) throw ArgumentError("O(2) label epsilon must be +1 or -1");
  return O2Label{m, epsilon};
}

std::string O2Label::label() const {
  if (m == 0) return "0";
  return "(" + std::to_string(m) + "," + (epsilon > 0 ? "+1" : "-1") + ")";
}

O2Reduction o2_reduce(const O2Label& label) {
  if (label.m == 0) return {Partition({3}), 1};
  if (label.nu() != 0) return {Partition({2, 1}), 0};
  if (label.epsilon > 0) return {Partition({3}), 1};
  return {Partition({1, 1, 1}), 1};
}

O3Label O3Label::make(int l, int kappa) {
  if (l < 0) throw ArgumentError("O(3) label requires l >= 0");
  if (kappa != 1 && kappa != -1) throw ArgumentError("O(3) label kappa must be +1 or -1");
  return O3Label{l, kappa};
}

std::string O3Label::label() const {
  return "(" + std::to_string(l) + "," + (kappa > 0 ? "1" : "-1") + ")";
}

double o3_character(const O3Label& label, const Eigen::Matrix3d& g) {
  const double det = g.determinant();
  if (det > 0) return rotation_character(label.l, (g.trace() - 1.0) / 2.0);
  return label.kappa * rotation_character(label.l, (-g.trace() - 1.0) / 2.0);
}

int multiplicity_o3_s4(const O3Label& label, const Partition& f) {
  if (f.size() != 4) throw ArgumentError("multiplicity_o3_s4 expects a partition of 4");
  const auto& table = s4_table();
  const int irrep = table.irrep_index(f);
  double sum = 0;
  for (const auto& e : s4_in_o3())
    sum += o3_character(label, e.matrix) *
           static_cast<double>(table.values[static_cast<size_t>(irrep)][static_cast<size_t>(e.class_index)]);
  return round_multiplicity(sum / 24.0, "m(" + label.label() + ", " + f.label() + ")");
}

int periodic_count_o3(int l) {
  const auto label = O3Label::natural(l);
  int total = 0;
  for (const auto& f : s4_table().irreps) total += multiplicity_o3_s4(label, f) * perm::trivial_multiplicity(f);
  return total;
}

int multiplicity_o4_s5(int two_j, const Partition& f) {
  if (two_j < 0) throw ArgumentError("2j must be non-negative");
  if (f.size() != 5) throw ArgumentError("multiplicity_o4_s5 expects a partition of 5");
  return o4_multiplicity_from(o4_class_characters(two_j), s5_table().irrep_index(f));
}

int periodic_count_o4(int two_j) {
  if (two_j < 0) throw ArgumentError("2j must be non-negative");
  const auto chars = o4_class_characters(two_j);
  const auto& table = s5_table();
  int total = 0;
  for (size_t i = 0; i < table.irreps.size(); ++i)
    total += o4_multiplicity_from(chars, static_cast<int>(i)) * perm::trivial_multiplicity(table.irreps[i]);
  return total;
}

int MultiplicityTable::grand_total() const {
  return std::accumulate(periodic_counts.begin(), periodic_counts.end(), 0);
}

std::vector<int> MultiplicityTable::dimension_violations() const {
  std::vector<int> bad;
  for (size_t r = 0; r < entries.size(); ++r) {
    long long sum = 0;
    for (size_t c = 0; c < columns.size(); ++c)
      sum += static_cast<long long>(entries[r][c]) * irrep_dimension(columns[c]);
    if (sum != row_dimensions[r]) bad.push_back(static_cast<int>(r));
  }
  return bad;
}

MultiplicityTable o4_s5_table(int two_j_max) {
  if (two_j_max < 0 || two_j_max > 200) throw ArgumentError("o4_s5_table supports 0 <= 2j <= 200");
  const auto& table = s5_table();
  MultiplicityTable t;
  t.chain = "o4s5c5";
  t.columns = table.irreps;
  t.trivial_multiplicities = trivial_column(table);
  const auto rows = static_cast<size_t>(two_j_max + 1);
  t.entries.assign(rows, std::vector<int>(t.columns.size(), 0));
  parallel_for(rows, [&](size_t r) {
    const auto chars = o4_class_characters(static_cast<int>(r));
    for (size_t c = 0; c < t.columns.size(); ++c) t.entries[r][c] = o4_multiplicity_from(chars, static_cast<int>(c));
  });
  for (size_t r = 0; r < rows; ++r) {
    t.row_labels.push_back(std::to_string(r));
    t.row_dimensions.push_back(static_cast<int>((r + 1) * (r + 1)));
  }
  finish_table(t);
  return t;
}

MultiplicityTable o3_s4_table(int l_max) {
  if (l_max < 0) throw ArgumentError("o3_s4_table requires l_max >= 0");
  const auto& table = s4_table();
  MultiplicityTable t;
  t.chain = "o3s4c4";
  t.columns = table.irreps;
  t.trivial_multiplicities = trivial_column(table);
  for (int l = 0; l <= l_max; ++l) {
    const auto label = O3Label::natural(l);
    std::vector<int> row;
    for (const auto& f : t.columns) row.push_back(multiplicity_o3_s4(label, f));
    t.entries.push_back(std::move(row));
    t.row_labels.push_back(label.label());
    t.row_dimensions.push_back(2 * l + 1);
  }
  finish_table(t);
  return t;
}

MultiplicityTable o2_s3_table(int m_max) {
  if (m_max < 0) throw ArgumentError("o2_s3_table requires m_max >= 0");
  const auto& table = perm::character_table(3);
  MultiplicityTable t;
  t.chain = "o2s3c3";
  t.columns = table.irreps;
  t.trivial_multiplicities = trivial_column(table);
  for (int m = 0; m <= m_max; ++m) {
    std::vector<int> row(t.columns.size(), 0);
    if (m == 0) {
      ++row[static_cast<size_t>(table.irrep_index(o2_reduce(O2Label::make(0, 0)).f))];
    } else if (m % 3 != 0) {
      // (m, +1) and (m, -1) together carry a single copy of [21].
      row[static_cast<size_t>(table.irrep_index(o2_reduce(O2Label::make(m, 1)).f))] = 1;
    } else {
      for (int eps : {1, -1}) ++row[static_cast<size_t>(table.irrep_index(o2_reduce(O2Label::make(m, eps)).f))];
    }
    t.entries.push_back(std::move(row));
    t.row_labels.push_back(std::to_string(m));
    t.row_dimensions.push_back(m == 0 ? 1 : 2);
  }
  finish_table(t);
  return t;
}

RecursionReport recursion_report(int two_j_max) {
  if (two_j_max < 60) throw ArgumentError("recursion_report requires two_j_max >= 60");
  RecursionReport report;
  report.two_j_max = two_j_max;
  const auto& table = s5_table();

  std::vector<std::vector<double>> chars(static_cast<size_t>(two_j_max + 1));
  parallel_for(chars.size(), [&](size_t tj) { chars[tj] = o4_class_characters(static_cast<int>(tj)); });

  const std::vector<std::pair<std::vector<int>, int>> periodic_classes = {
      {{3, 1, 1}, 3}, {{2, 2, 1}, 2}, {{3, 2}, 3}, {{4, 1}, 4}, {{5}, 5}};
  auto check_period = [&](const Partition& k, int period) {
    const auto idx = static_cast<size_t>(table.class_index(k));
    double worst = 0;
    for (int tj = 0; tj + period <= two_j_max; ++tj)
      worst = std::max(worst, std::abs(chars[static_cast<size_t>(tj + period)][idx] - chars[static_cast<size_t>(tj)][idx]));
    return RecursionReport::ClassPeriodicity{perm::make_cycle_type(k), period, worst < 1e-8, worst};
  };
  for (const auto& [parts, period] : periodic_classes) {
    const Partition k(parts);
    report.period_60.push_back(check_period(k, 60));
    report.short_periods.push_back(check_period(k, period));
  }

  const auto identity_idx = static_cast<size_t>(table.class_index(Partition({1, 1, 1, 1, 1})));
  const auto transposition_idx = static_cast<size_t>(table.class_index(Partition({2, 1, 1, 1})));
  report.polynomial_classes_hold = true;
  for (int tj = 0; tj <= two_j_max; ++tj) {
    const double n = tj + 1.0;
    const auto& row = chars[static_cast<size_t>(tj)];
    if (std::abs(row[identity_idx] - n * n) > 1e-8 || std::abs(row[transposition_idx] - n) > 1e-8)
      report.polynomial_classes_hold = false;
  }

  std::vector<std::vector<int>> m(chars.size());
  for (size_t tj = 0; tj < chars.size(); ++tj)
    for (size_t f = 0; f < table.irreps.size(); ++f) m[tj].push_back(o4_multiplicity_from(chars[tj], static_cast<int>(f)));

  for (size_t f = 0; f < table.irreps.size(); ++f) {
    RecursionReport::PartitionIncrement inc{table.irreps[f], {}, true, 0, 0, true};
    const int dim = static_cast<int>(table.values[f][identity_idx]);
    inc.slope = dim;
    inc.intercept = 31 * dim + 5 * static_cast<int>(table.values[f][transposition_idx]);
    for (int tj = 0; tj + 60 <= two_j_max; ++tj) {
      const int delta = m[static_cast<size_t>(tj + 60)][f] - m[static_cast<size_t>(tj)][f];
      inc.measured.push_back(delta);
      if (delta != tj + 36) inc.printed_form_holds = false;
      if (delta != inc.slope * tj + inc.intercept) inc.fitted_form_holds = false;
    }
    report.increments.push_back(std::move(inc));
  }

  for (int tj = 0; tj <= two_j_max; ++tj) {
    long long sum = 0;
    for (size_t f = 0; f < table.irreps.size(); ++f)
      sum += static_cast<long long>(m[static_cast<size_t>(tj)][f]) * table.values[f][identity_idx];
    if (sum != static_cast<long long>(tj + 1) * (tj + 1)) report.dimension_violations.push_back(tj);
  }
  return report;
}

}  // namespace simplexharm::reduction
