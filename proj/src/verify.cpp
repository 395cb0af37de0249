#include "simplexharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <sstream>

#include "simplexharm/errors.hpp"
#include "simplexharm/youngrep.hpp"

namespace simplexharm::verify {

namespace {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;

Matrix real_matrix(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)).get<double>();
  return m;
}

CMatrix complex_matrix(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& z = j.at(static_cast<size_t>(r)).at(static_cast<size_t>(c));
      m(r, c) = {z.at(0).get<double>(), z.at(1).get<double>()};
    }
  return m;
}

Eigen::VectorXd real_vector(const Json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
  return v;
}

template <class A, class B>
double max_abs_diff(const A& a, const B& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

// Distance between unit-normalised vectors, minimised over the overall sign.
double direction_residual(Eigen::VectorXd a, Eigen::VectorXd b) {
  if (a.size() != b.size() || a.norm() == 0 || b.norm() == 0) return INFINITY;
  a.normalize();
  b.normalize();
  return std::min((a - b).cwiseAbs().maxCoeff(), (a + b).cwiseAbs().maxCoeff());
}

class Checker {
 public:
  void real(const std::string& name, double residual, const std::string& detail = "") {
    checks_.push_back({name, residual < kRealTolerance, residual, detail});
  }
  void exact(const std::string& name, const std::vector<std::string>& mismatches) {
    std::ostringstream d;
    for (size_t i = 0; i < mismatches.size(); ++i) d << (i ? "; " : "") << mismatches[i];
    checks_.push_back({name, mismatches.empty(), static_cast<double>(mismatches.size()), d.str()});
  }
  void flag(const std::string& name, bool ok, const std::string& detail) {
    checks_.push_back({name, ok, ok ? 0.0 : 1.0, detail});
  }
  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
};

std::map<std::string, Json> errata_map(const Json& golden) {
  std::map<std::string, Json> out;
  if (golden.contains("errata"))
    for (const auto& e : golden.at("errata")) out[e.at("pointer").get<std::string>()] = e;
  return out;
}

// Compares an integer cell, diverting listed errata to their own checks.
void compare_cell(Checker& ck, std::vector<std::string>& bad, const std::map<std::string, Json>& errata,
                  const std::string& pointer, long long computed, long long printed) {
  const auto it = errata.find(pointer);
  if (it == errata.end()) {
    if (computed != printed) bad.push_back(pointer + ": " + std::to_string(computed) + " vs " + std::to_string(printed));
    return;
  }
  const long long corrected = it->second.at("corrected").get<long long>();
  const long long listed = it->second.at("printed").get<long long>();
  const bool ok = computed == corrected && printed == listed && computed != printed;
  ck.flag("erratum " + pointer, ok,
          "printed " + std::to_string(printed) + ", computed " + std::to_string(computed) + ", corrected " +
              std::to_string(corrected));
}

void check_character_table(Checker& ck, const Json& g, int n, const std::map<std::string, Json>& errata) {
  const auto table = perm::character_table(n);
  std::vector<std::string> bad;
  const auto& irreps = g.at("irreps");
  const auto& classes = g.at("classes");
  const auto& values = g.at("values");
  if (irreps.size() != table.irreps.size() || classes.size() != table.classes.size())
    bad.push_back("table shape differs");
  for (size_t i = 0; i < irreps.size() && bad.empty(); ++i) {
    const auto f = perm::Partition::parse(irreps.at(i).get<std::string>());
    for (size_t k = 0; k < classes.size(); ++k) {
      const auto kt = perm::parse_cycle_type(classes.at(k).get<std::string>());
      compare_cell(ck, bad, errata, "/s" + std::to_string(n) + "_characters/values/" + std::to_string(i) + "/" + std::to_string(k),
                   table.at(f, kt.lengths), values.at(i).at(k).get<long long>());
    }
  }
  if (g.contains("class_sizes")) {
    const auto& sizes = g.at("class_sizes");
    for (size_t k = 0; k < classes.size(); ++k) {
      const auto kt = perm::parse_cycle_type(classes.at(k).get<std::string>());
      if (kt.class_size != sizes.at(k).get<long long>()) bad.push_back("n" + kt.label());
    }
  }
  ck.exact("S(" + std::to_string(n) + ") character table", bad);
}

void check_branching(Checker& ck, const Json& g) {
  const std::map<std::string, int> groups = {{"s3", 3}, {"s4", 4}, {"s5", 5}};
  for (const auto& [key, n] : groups) {
    std::vector<std::string> bad;
    for (const auto& [label, value] : g.at(key).items()) {
      const auto f = perm::Partition::parse(label);
      if (f.size() != n) bad.push_back(label + " has wrong size");
      else if (perm::trivial_multiplicity(f) != value.get<int>()) bad.push_back(label);
    }
    ck.exact("C_" + std::to_string(n) + " trivial branching", bad);
  }
}

void check_o2(Checker& ck, const Json& g) {
  std::vector<std::string> bad;
  for (const auto& rule : g) {
    std::vector<int> ms;
    if (rule.contains("m")) ms.push_back(rule.at("m").get<int>());
    else {
      const int nu = rule.at("nu").get<int>();
      for (int m = 1; m <= 12; ++m)
        if (m % 3 == nu) ms.push_back(m);
    }
    for (int m : ms) {
      const auto red = reduction::o2_reduce(reduction::O2Label::make(m, rule.at("epsilon").get<int>()));
      if (red.f.label() != rule.at("f").get<std::string>() || red.trivial_multiplicity != rule.at("trivial").get<int>())
        bad.push_back("m=" + std::to_string(m) + " eps=" + std::to_string(rule.at("epsilon").get<int>()));
    }
  }
  ck.exact("O(2) selection rules", bad);
}

void check_multiplicity_table(Checker& ck, const Json& g, const reduction::MultiplicityTable& t,
                              const std::string& base, const std::map<std::string, Json>& errata,
                              const std::string& name) {
  std::vector<std::string> bad;
  const auto& cols = g.at("columns");
  std::vector<size_t> col_index;
  for (const auto& c : cols) {
    const auto f = perm::Partition::parse(c.get<std::string>());
    const auto it = std::find(t.columns.begin(), t.columns.end(), f);
    if (it == t.columns.end()) {
      bad.push_back("unknown column " + f.label());
      ck.exact(name, bad);
      return;
    }
    col_index.push_back(static_cast<size_t>(it - t.columns.begin()));
  }
  const auto& rows = g.at("rows");
  if (rows.size() > t.entries.size()) bad.push_back("computed table too short");
  for (size_t r = 0; r < rows.size() && r < t.entries.size(); ++r) {
    if (rows.at(r).get<std::string>() != t.row_labels[r]) bad.push_back("row label " + t.row_labels[r]);
    for (size_t c = 0; c < cols.size(); ++c)
      compare_cell(ck, bad, errata, base + "/values/" + std::to_string(r) + "/" + std::to_string(c),
                   t.entries[r][col_index[c]], g.at("values").at(r).at(c).get<long long>());
    compare_cell(ck, bad, errata, base + "/periodic/" + std::to_string(r), t.periodic_counts[r],
                 g.at("periodic").at(r).get<long long>());
  }
  if (g.contains("totals"))
    for (size_t c = 0; c < cols.size(); ++c)
      compare_cell(ck, bad, errata, base + "/totals/" + std::to_string(c), t.totals[col_index[c]],
                   g.at("totals").at(c).get<long long>());
  if (g.contains("grand_total"))
    compare_cell(ck, bad, errata, base + "/grand_total", t.grand_total(), g.at("grand_total").get<long long>());
  if (g.contains("harmonics")) {
    long long harmonics = 0;
    for (size_t r = 0; r < rows.size(); ++r) harmonics += t.row_dimensions[r];
    compare_cell(ck, bad, errata, base + "/harmonics", harmonics, g.at("harmonics").get<long long>());
  }
  if (g.contains("total_states")) {
    long long states = 0;
    for (size_t r = 0; r < rows.size(); ++r) states += t.row_dimensions[r];
    compare_cell(ck, bad, errata, base + "/total_states", states, g.at("total_states").get<long long>());
  }
  if (g.contains("periodic_states"))
    compare_cell(ck, bad, errata, base + "/periodic_states", t.grand_total(), g.at("periodic_states").get<long long>());
  if (!t.dimension_violations().empty()) bad.push_back("dimension sum rule violated");
  ck.exact(name, bad);
}

void check_weyl(Checker& ck, const Json& g) {
  const auto& vectors = weyl::weyl_vectors_s5();
  double worst_a = 0, worst_v = 0;
  for (size_t i = 0; i < vectors.size(); ++i) {
    worst_a = std::max(worst_a, max_abs_diff(Eigen::VectorXd(vectors[i].a.vec()), real_vector(g.at("a").at(i))));
    worst_v = std::max(worst_v, max_abs_diff(CMatrix(vectors[i].v.matrix()), complex_matrix(g.at("v").at(i))));
  }
  ck.real("Weyl vectors a_i", worst_a);
  ck.real("Weyl matrices v_i", worst_v);
  ck.real("Weyl Gram matrix", max_abs_diff(Matrix(weyl::gram_matrix(vectors)), real_matrix(g.at("gram"))));
}

void check_class_operators(Checker& ck, const Json& g) {
  for (const auto& entry : g) {
    const auto word = entry.at("word").get<std::vector<int>>();
    const auto op = weyl::word_operator(word);
    const auto label = entry.at("class").get<std::string>();
    const auto p = perm::Permutation::parse(5, entry.at("product").get<std::string>());
    const bool class_ok = p == perm::Permutation::from_word(5, word) && perm::cycle_type(p).label() == label;
    ck.flag("class representative " + label, class_ok, p.to_string());
    if (entry.contains("g_l")) {
      const CMatrix gl = op.g_l.matrix(), gr = op.g_r.matrix();
      const CMatrix pl = complex_matrix(entry.at("g_l")), pr = complex_matrix(entry.at("g_r"));
      const double plus = std::max(max_abs_diff(gl, pl), max_abs_diff(gr, pr));
      const double minus = std::max(max_abs_diff(CMatrix(-gl), pl), max_abs_diff(CMatrix(-gr), pr));
      ck.real("class " + label + " g_l, g_r", std::min(plus, minus), plus <= minus ? "same sign" : "joint sign flip");
    }
    if (entry.contains("g_r_g_l"))
      ck.real("class " + label + " g_r g_l",
              max_abs_diff(CMatrix((op.g_r * op.g_l).matrix()), complex_matrix(entry.at("g_r_g_l"))));
  }
}

void check_class_characters(Checker& ck, const Json& g) {
  const auto rows = weyl::class_character_table(120);
  auto find_row = [&](const std::string& label) -> const weyl::ClassCharacterRow* {
    for (const auto& r : rows)
      if (r.cycle_type.label() == label) return &r;
    return nullptr;
  };
  double worst = 0, worst_angle = 0;
  std::vector<std::string> missing;
  for (const auto& entry : g.at("rows")) {
    const auto label = entry.at("class").get<std::string>();
    const auto* row = find_row(label);
    if (!row) {
      missing.push_back(label);
      continue;
    }
    const auto values = entry.at("values").get<std::vector<double>>();
    for (size_t tj = 0; tj < values.size(); ++tj) worst = std::max(worst, std::abs(row->characters[tj] - values[tj]));
    auto printed = entry.at("half_angles").get<std::vector<double>>();
    std::vector<double> computed = row->reflective ? std::vector<double>{row->half_angle_left}
                                                   : std::vector<double>{row->half_angle_left, row->half_angle_right};
    std::sort(printed.begin(), printed.end());
    std::sort(computed.begin(), computed.end());
    if (printed.size() != computed.size()) {
      missing.push_back(label + " angle count");
      continue;
    }
    for (size_t i = 0; i < printed.size(); ++i) worst_angle = std::max(worst_angle, std::abs(printed[i] - computed[i]));
  }
  ck.exact("O(4) class rows present", missing);
  ck.real("O(4) class characters 2j <= 5", worst);
  ck.real("O(4) class half-angles", worst_angle, "compared as unordered sets");

  double worst_period = 0;
  for (const auto& [label, period] : g.at("periods").items()) {
    const auto* row = find_row(label);
    if (!row) continue;
    const int p = period.get<int>();
    for (int tj = 0; tj + p <= 60; ++tj)
      worst_period = std::max(worst_period, std::abs(row->characters[static_cast<size_t>(tj + p)] -
                                                     row->characters[static_cast<size_t>(tj)]));
  }
  ck.real("O(4) character recursions 2j <= 60", worst_period);
  double worst_60 = 0;
  for (const auto& label : g.at("period_60_classes")) {
    const auto* row = find_row(label.get<std::string>());
    if (!row) continue;
    for (size_t tj = 0; tj + 60 < row->characters.size(); ++tj)
      worst_60 = std::max(worst_60, std::abs(row->characters[tj + 60] - row->characters[tj]));
  }
  ck.real("O(4) character period 60", worst_60);
}

void check_generators(Checker& ck, const Json& g, const perm::Partition& f, const std::string& name) {
  double worst = 0;
  for (const auto& [key, m] : g.items())
    worst = std::max(worst, max_abs_diff(young::generator_matrix(f, std::stoi(key)).matrix, real_matrix(m)));
  ck.real(name, worst);
}

void check_young_s4(Checker& ck, const Json& g) {
  const perm::Partition f211({2, 1, 1}), f22({2, 2});
  std::vector<std::string> symbols;
  for (const auto& t : young::standard_tableaux(f211)) symbols.push_back(t.yamanouchi());
  ck.flag("[211] Yamanouchi order", symbols == g.at("tableaux_211").get<std::vector<std::string>>(), "");
  const auto cox4 = young::coxeter_element(4);
  check_generators(ck, g.at("generators_211"), f211, "[211] generators");
  ck.real("[211] Coxeter matrix", max_abs_diff(young::rep_matrix(f211, cox4).matrix, real_matrix(g.at("coxeter_211"))));
  const auto fixed211 = young::fixed_subspace(f211);
  ck.real("[211] fixed vector",
          fixed211.dimension() == 1 ? direction_residual(fixed211.basis.col(0), real_vector(g.at("fixed_211"))) : INFINITY);
  check_generators(ck, g.at("generators_22"), f22, "[22] generators");
  ck.real("[22] Coxeter matrix", max_abs_diff(young::rep_matrix(f22, cox4).matrix, real_matrix(g.at("coxeter_22"))));
  ck.real("[22] projector", max_abs_diff(young::trivial_projector(f22).matrix, real_matrix(g.at("projector_22"))));
  const auto fixed22 = young::fixed_subspace(f22);
  ck.real("[22] fixed vector",
          fixed22.dimension() == 1 ? direction_residual(fixed22.basis.col(0), real_vector(g.at("fixed_22"))) : INFINITY);
  const auto primed = young::tetrahedral_primed_generators();
  double worst = 0;
  for (const auto& [key, m] : g.at("primed_31").items())
    worst = std::max(worst, max_abs_diff(primed[static_cast<size_t>(std::stoi(key) - 1)].matrix, real_matrix(m)));
  ck.real("[31]' tetrahedral generators", worst);
  const Matrix primed_cox = young::primed_rep_matrix(f211, cox4).matrix;
  ck.real("[211]' Coxeter matrix", max_abs_diff(primed_cox, real_matrix(g.at("primed_coxeter_211"))));
  ck.real("[211]' projector", max_abs_diff(young::cyclic_average(primed_cox, 4), real_matrix(g.at("primed_projector_211"))));
}

void check_young_s5(Checker& ck, const Json& g) {
  const perm::Partition f32({3, 2}), f221({2, 2, 1}), f311({3, 1, 1});
  const auto cox5 = young::coxeter_element(5);
  check_generators(ck, g.at("generators_32"), f32, "[32] generators");
  for (const auto& [f, key] : std::vector<std::pair<perm::Partition, std::string>>{{f32, "32"}, {f221, "221"}, {f311, "311"}})
    ck.real("[" + key + "] Coxeter matrix",
            max_abs_diff(young::rep_matrix(f, cox5).matrix, real_matrix(g.at("coxeter_" + key))));
  for (const auto& [f, key] : std::vector<std::pair<perm::Partition, std::string>>{{f32, "32"}, {f221, "221"}}) {
    const auto fixed = young::fixed_subspace(f);
    ck.real("[" + key + "] fixed vector",
            fixed.dimension() == 1 ? direction_residual(fixed.basis.col(0), real_vector(g.at("fixed_" + key))) : INFINITY);
  }
  const auto& q = g.at("fixed_311");
  Matrix printed(static_cast<Eigen::Index>(q.at(0).size()), static_cast<Eigen::Index>(q.size()));
  for (size_t c = 0; c < q.size(); ++c) printed.col(static_cast<Eigen::Index>(c)) = real_vector(q.at(c));
  ck.real("[311] fixed plane", young::max_principal_angle_sine(young::fixed_subspace(f311).basis, printed),
          "sine of the largest principal angle");
}

void check_cyclic(Checker& ck, const Json& g) {
  const auto elems = perm::cyclic_elements(5);
  const bool ok = elems[1].to_string() == g.at("g2").get<std::string>() &&
                  elems[3].to_string() == g.at("g4").get<std::string>();
  ck.flag("C_5 powers", ok, elems[1].to_string() + ", " + elems[3].to_string());
}

}  // namespace

const std::vector<std::string>& sections() {
  static const std::vector<std::string> names = {"characters", "branching", "o2", "o3", "o4", "weyl",
                                                 "class_operators", "class_characters", "young", "cyclic"};
  return names;
}

std::vector<CheckResult> verify_section(const Json& golden, std::string_view section) {
  Checker ck;
  const auto errata = errata_map(golden);
  if (section == "characters") {
    check_character_table(ck, golden.at("s3_characters"), 3, errata);
    check_character_table(ck, golden.at("s4_characters"), 4, errata);
    check_character_table(ck, golden.at("s5_characters"), 5, errata);
  } else if (section == "branching") {
    check_branching(ck, golden.at("trivial_branching"));
  } else if (section == "o2") {
    check_o2(ck, golden.at("o2_selection_rules"));
  } else if (section == "o3") {
    check_multiplicity_table(ck, golden.at("o3_s4_multiplicities"), reduction::o3_s4_table(4), "/o3_s4_multiplicities",
                             errata, "O(3) > S(4) multiplicities");
  } else if (section == "o4") {
    check_multiplicity_table(ck, golden.at("o4_s5_multiplicities"), reduction::o4_s5_table(10), "/o4_s5_multiplicities",
                             errata, "O(4) > S(5) multiplicities");
  } else if (section == "weyl") {
    check_weyl(ck, golden.at("weyl_vectors"));
  } else if (section == "class_operators") {
    check_class_operators(ck, golden.at("class_operators"));
  } else if (section == "class_characters") {
    check_class_characters(ck, golden.at("o4_class_characters"));
  } else if (section == "young") {
    check_young_s4(ck, golden.at("young_s4"));
    check_young_s5(ck, golden.at("young_s5"));
  } else if (section == "cyclic") {
    check_cyclic(ck, golden.at("s5_cyclic"));
  } else {
    throw ArgumentError("unknown verification section " + std::string(section));
  }
  return ck.take();
}

std::vector<CheckResult> verify_all(const Json& golden) {
  std::vector<CheckResult> out;
  for (const auto& name : sections()) {
    std::vector<CheckResult> part;
    try {
      part = verify_section(golden, name);
    } catch (const std::exception& e) {
      // A golden entry that cannot be read counts as a mismatch.
      part = {{"golden section " + name + " is readable", false, 1.0, e.what()}};
    }
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

Json inject_fault(const Json& golden, const std::string& pointer) {
  Json out = golden;
  Json::json_pointer ptr;
  try {
    ptr = Json::json_pointer(pointer);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("invalid JSON pointer '" + pointer + "': " + e.what());
  }
  if (!out.contains(ptr)) throw ArgumentError("JSON pointer '" + pointer + "' does not exist");
  auto& target = out[ptr];
  if (target.is_number_integer()) target = target.get<long long>() + 1;
  else if (target.is_number_float()) target = target.get<double>() + 1e-3;
  else if (target.is_string()) target = target.get<std::string>() + "'";
  else throw ArgumentError("JSON pointer '" + pointer + "' does not address a scalar");
  return out;
}

}  // namespace simplexharm::verify
