#include "simplexharm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace simplexharm::report {

namespace {

double round15(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-13) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json partition_labels(const std::vector<perm::Partition>& parts) {
  Json out = Json::array();
  for (const auto& p : parts) out.push_back(p.label());
  return out;
}

}  // namespace

Json golden_tables() { return Json::parse(embedded_golden_tables()); }

Json canonicalize(const Json& value) {
  if (value.is_number_float()) return round15(value.get<double>());
  if (value.is_array()) {
    Json out = Json::array();
    for (const auto& v : value) out.push_back(canonicalize(v));
    return out;
  }
  if (value.is_object()) {
    Json out = Json::object();
    for (auto it = value.begin(); it != value.end(); ++it) out[it.key()] = canonicalize(it.value());
    return out;
  }
  return value;
}

std::string dump(const Json& value) { return canonicalize(value).dump(2) + "\n"; }

bool ReportDocument::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Json to_json(const CheckResult& check) {
  return Json{{"name", check.name}, {"passed", check.passed}, {"residual", check.residual}, {"detail", check.detail}};
}

Json ReportDocument::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) checks_json.push_back(report::to_json(c));
  return Json{{"meta", {{"tool", "simplexharm"}, {"version", kVersion}, {"command", command},
                        {"parameters", parameters},
                        {"tolerances", {{"real_compare", 1e-9}, {"rank_cutoff", 1e-8}, {"rounding", 1e-6}}}}},
              {"payload", payload},
              {"checks", checks_json},
              {"passed", all_passed()}};
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    out.push_back(row);
  }
  return out;
}

Json character_table_json(const perm::CharacterTable& table) {
  Json classes = Json::array();
  Json sizes = Json::array();
  for (const auto& k : table.classes) {
    classes.push_back(k.label());
    sizes.push_back(k.class_size);
  }
  return Json{{"n", table.n},           {"order", table.order}, {"irreps", partition_labels(table.irreps)},
              {"classes", classes},     {"class_sizes", sizes}, {"values", table.values}};
}

Json branching_json(int n) {
  const auto table = perm::character_table(n);
  Json values = Json::object();
  Json ordered = Json::array();
  for (const auto& f : table.irreps) {
    const int m = perm::trivial_multiplicity(f);
    values[f.label()] = m;
    ordered.push_back(m);
  }
  return Json{{"n", n}, {"irreps", partition_labels(table.irreps)}, {"trivial_multiplicity", ordered},
              {"by_label", values}};
}

Json multiplicity_table_json(const reduction::MultiplicityTable& t) {
  Json violations = Json::array();
  for (int r : t.dimension_violations()) violations.push_back(t.row_labels[static_cast<size_t>(r)]);
  return Json{{"chain", t.chain},
              {"rows", t.row_labels},
              {"row_dimensions", t.row_dimensions},
              {"columns", partition_labels(t.columns)},
              {"trivial_multiplicities", t.trivial_multiplicities},
              {"values", t.entries},
              {"periodic", t.periodic_counts},
              {"totals", t.totals},
              {"grand_total", t.grand_total()},
              {"dimension_violations", violations}};
}

std::string multiplicity_table_csv(const reduction::MultiplicityTable& t) {
  std::ostringstream out;
  out << "row,dimension";
  for (const auto& f : t.columns) out << ',' << '"' << f.label() << '"';
  out << ",periodic\n";
  for (size_t r = 0; r < t.entries.size(); ++r) {
    out << '"' << t.row_labels[r] << '"' << ',' << t.row_dimensions[r];
    for (int v : t.entries[r]) out << ',' << v;
    out << ',' << t.periodic_counts[r] << '\n';
  }
  out << "total,";
  for (int v : t.totals) out << ',' << v;
  out << ',' << t.grand_total() << '\n';
  return out.str();
}

Json class_characters_json(const std::vector<weyl::ClassCharacterRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    // Restrictions of O(4) irreps to S(5) have integer characters.
    Json characters = Json::array();
    for (double x : row.characters) {
      const double r = std::round(x);
      characters.push_back(std::abs(x - r) < 1e-9 ? r : x);
    }
    Json angles = row.reflective ? Json::array({row.half_angle_left})
                                 : Json::array({row.half_angle_left, row.half_angle_right});
    out.push_back(Json{{"class", row.cycle_type.label()},
                       {"class_size", row.cycle_type.class_size},
                       {"reflective", row.reflective},
                       {"half_angles", angles},
                       {"characters", characters}});
  }
  return out;
}

Json mode_basis_json(const modes::ModeBasis& basis) {
  Json tags = Json::array();
  for (const auto& f : basis.tags) tags.push_back(f.label());
  Json index = Json::array();
  const int n = basis.two_j + 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) index.push_back(Json::array({2 * a - basis.two_j, 2 * b - basis.two_j}));
  return Json{{"two_j", basis.two_j},
              {"count", basis.count()},
              {"index_two_m", index},
              {"coefficients", matrix_json(Eigen::MatrixXcd(basis.coefficients.transpose()))},
              {"tags", tags}};
}

Json recursion_report_json(const reduction::RecursionReport& report) {
  auto periodicity = [](const std::vector<reduction::RecursionReport::ClassPeriodicity>& list) {
    Json out = Json::array();
    for (const auto& p : list)
      out.push_back(Json{{"class", p.cycle_type.label()}, {"period", p.period}, {"holds", p.holds},
                         {"max_deviation", p.max_deviation}});
    return out;
  };
  Json increments = Json::array();
  for (const auto& inc : report.increments)
    increments.push_back(Json{{"f", inc.f.label()},
                              {"measured", inc.measured},
                              {"printed_form_holds", inc.printed_form_holds},
                              {"fitted_slope", inc.slope},
                              {"fitted_intercept", inc.intercept},
                              {"fitted_form_holds", inc.fitted_form_holds}});
  return Json{{"two_j_max", report.two_j_max},
              {"period_60", periodicity(report.period_60)},
              {"short_periods", periodicity(report.short_periods)},
              {"polynomial_classes_hold", report.polynomial_classes_hold},
              {"increments", increments},
              {"dimension_violations", report.dimension_violations}};
}

}  // namespace simplexharm::report
