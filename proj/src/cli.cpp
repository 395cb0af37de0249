#include "simplexharm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "simplexharm/errors.hpp"
#include "simplexharm/modes.hpp"
#include "simplexharm/reduction.hpp"
#include "simplexharm/report.hpp"
#include "simplexharm/verify.hpp"

namespace simplexharm::cli {

namespace {

using report::Json;
using report::ReportDocument;

struct Options {
  std::string output;
  std::string format = "json";
  int n = 5;
  std::string chain = "o4s5c5";
  int max = 10;
  int two_j = 0;
  int verify_points = 0;
  std::uint64_t seed = 20240601;
  bool tagged = false;
  int two_j_max = 5;
  int recursion_max = 120;
  bool all = false;
  std::string inject_fault;
};

ReportDocument chartable(const Options& o) {
  ReportDocument doc{"chartable", {{"n", o.n}}, {}, {}};
  const auto table = perm::character_table(o.n);
  doc.payload = report::character_table_json(table);
  for (size_t a = 0; a < table.irreps.size(); ++a)
    for (size_t b = a; b < table.irreps.size(); ++b) {
      long long sum = 0;
      for (size_t k = 0; k < table.classes.size(); ++k) sum += table.classes[k].class_size * table.values[a][k] * table.values[b][k];
      const long long expected = a == b ? table.order : 0;
      if (sum != expected)
        doc.checks.push_back({"row orthogonality " + table.irreps[a].label() + " " + table.irreps[b].label(), false,
                              static_cast<double>(sum - expected), ""});
    }
  if (doc.checks.empty()) doc.checks.push_back({"row orthogonality", true, 0.0, ""});
  return doc;
}

ReportDocument branch(const Options& o) {
  return ReportDocument{"branch", {{"n", o.n}}, report::branching_json(o.n), {}};
}

reduction::MultiplicityTable reduce_table(const Options& o) {
  if (o.chain == "o2s3c3") return reduction::o2_s3_table(o.max);
  if (o.chain == "o3s4c4") return reduction::o3_s4_table(o.max);
  return reduction::o4_s5_table(o.max);
}

ReportDocument reduce(const Options& o, const reduction::MultiplicityTable& t) {
  ReportDocument doc{"reduce", {{"chain", o.chain}, {"max", o.max}}, report::multiplicity_table_json(t), {}};
  const auto violations = t.dimension_violations();
  doc.checks.push_back({"dimension sum rule", violations.empty(), static_cast<double>(violations.size()), ""});
  if (o.chain == "o2s3c3") {
    Json rules = Json::array();
    for (int m = 0; m <= o.max; ++m)
      for (int eps : m == 0 ? std::vector<int>{0} : std::vector<int>{1, -1}) {
        const auto label = reduction::O2Label::make(m, eps);
        const auto mode = modes::circle_mode(label);
        rules.push_back(Json{{"label", label.label()}, {"nu", label.nu()}, {"f", mode.f.label()}, {"status", mode.status}});
      }
    doc.payload["selection_rules"] = rules;
  }
  return doc;
}

ReportDocument mode_report(const Options& o) {
  ReportDocument doc{"modes", {{"two_j", o.two_j}, {"tagged", o.tagged}}, {}, {}};
  const auto basis = o.tagged ? modes::tagged_periodic_basis(o.two_j) : modes::periodic_basis(o.two_j);
  doc.payload = report::mode_basis_json(basis);
  const int expected = reduction::periodic_count_o4(o.two_j);
  doc.checks.push_back({"mode count equals periodic multiplicity", basis.count() == expected,
                        static_cast<double>(basis.count() - expected), ""});
  const auto gram = basis.coefficients.adjoint() * basis.coefficients;
  const double ortho = basis.count() == 0 ? 0.0
                                          : (gram - Eigen::MatrixXcd::Identity(basis.count(), basis.count())).cwiseAbs().maxCoeff();
  doc.checks.push_back({"orthonormal columns", ortho < 1e-10, ortho, ""});
  if (o.verify_points > 0) {
    doc.parameters["verify_points"] = o.verify_points;
    doc.parameters["seed"] = o.seed;
    const double dev = modes::verify_invariance(basis, o.verify_points, o.seed);
    doc.payload["invariance_max_deviation"] = dev;
    doc.checks.push_back({"C_5 invariance", dev < 1e-9, dev, ""});
  }
  return doc;
}

ReportDocument classchars(const Options& o) {
  ReportDocument doc{"classchars", {{"two_j_max", o.two_j_max}}, {}, {}};
  doc.payload["rows"] = report::class_characters_json(weyl::class_character_table(o.two_j_max));
  return doc;
}

ReportDocument recursion(const Options& o) {
  ReportDocument doc{"recursion", {{"two_j_max", o.recursion_max}}, {}, {}};
  const auto r = reduction::recursion_report(o.recursion_max);
  doc.payload = report::recursion_report_json(r);
  bool periods = r.polynomial_classes_hold;
  for (const auto& p : r.period_60) periods = periods && p.holds;
  for (const auto& p : r.short_periods) periods = periods && p.holds;
  doc.checks.push_back({"character periodicities", periods, 0.0, ""});
  bool fitted = true;
  for (const auto& inc : r.increments) fitted = fitted && inc.fitted_form_holds;
  doc.checks.push_back({"increment (2j+31) dim f + 5 chi^f((2)(1)^3)", fitted, 0.0, ""});
  doc.checks.push_back({"dimension sum rule", r.dimension_violations.empty(),
                        static_cast<double>(r.dimension_violations.size()), ""});
  return doc;
}

ReportDocument verify_report(const Options& o) {
  ReportDocument doc{"verify", {{"all", true}}, {}, {}};
  Json golden = report::golden_tables();
  if (!o.inject_fault.empty()) {
    golden = verify::inject_fault(golden, o.inject_fault);
    doc.parameters["inject_fault"] = o.inject_fault;
  }
  doc.checks = verify::verify_all(golden);
  Json errata = Json::array();
  for (const auto& e : golden.value("errata", Json::array())) errata.push_back(e);
  doc.payload["errata"] = errata;
  doc.payload["check_count"] = doc.checks.size();
  return doc;
}

int emit(const Options& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << o.output << "\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic analysis on simplicial spherical manifolds", "simplexharm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(report::kVersion));
  Options o;
  app.add_option("--output", o.output, "Write the report to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* chartable_cmd = app.add_subcommand("chartable", "Character table of S(n)");
  chartable_cmd->add_option("--n", o.n, "Degree n")->required()->check(CLI::Range(2, 8));
  auto* branch_cmd = app.add_subcommand("branch", "Multiplicity of the C_n identity representation in each S(n) irrep");
  branch_cmd->add_option("--n", o.n, "Degree n")->required()->check(CLI::Range(2, 8));
  auto* reduce_cmd = app.add_subcommand("reduce", "Multiplicity table for O(n) > S(n+1) > C_(n+1)");
  reduce_cmd->add_option("--chain", o.chain, "Group chain")->required()->check(CLI::IsMember({"o2s3c3", "o3s4c4", "o4s5c5"}));
  reduce_cmd->add_option("--max", o.max, "Largest m, l or 2j")->required()->check(CLI::Range(0, 200));
  auto* modes_cmd = app.add_subcommand("modes", "C_5-periodic modes of degree 2j on S^3");
  modes_cmd->add_option("--two-j", o.two_j, "Degree 2j")->required()->check(CLI::Range(0, modes::kMaxModeTwoJ));
  modes_cmd->add_option("--verify-points", o.verify_points, "Sample points for the invariance check")->check(CLI::Range(0, 100000));
  modes_cmd->add_option("--seed", o.seed, "Sampling seed");
  modes_cmd->add_flag("--tagged", o.tagged, "Split modes by S(5) partition");
  auto* classchars_cmd = app.add_subcommand("classchars", "O(4) characters on the classes of S(5)");
  classchars_cmd->add_option("--two-j-max", o.two_j_max, "Largest 2j")->required()->check(CLI::Range(0, 1000));
  auto* recursion_cmd = app.add_subcommand("recursion", "Measured behaviour of multiplicities under 2j -> 2j+60");
  recursion_cmd->add_option("--two-j-max", o.recursion_max, "Largest 2j (>= 60)")->check(CLI::Range(60, 400));
  auto* verify_cmd = app.add_subcommand("verify", "Compare all computed tables with the embedded reference tables");
  verify_cmd->add_flag("--all", o.all, "Run every comparison")->required();
  verify_cmd->add_option("--inject-fault", o.inject_fault, "Perturb the golden value at a JSON pointer")->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << report::kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (o.format == "csv" && !reduce_cmd->parsed()) {
      err << "error: --format csv is only available for reduce\n";
      return kExitUsage;
    }
    ReportDocument doc;
    if (chartable_cmd->parsed()) doc = chartable(o);
    else if (branch_cmd->parsed()) doc = branch(o);
    else if (reduce_cmd->parsed()) {
      const auto table = reduce_table(o);
      if (o.format == "csv") return emit(o, report::multiplicity_table_csv(table), out, err);
      doc = reduce(o, table);
    } else if (modes_cmd->parsed()) doc = mode_report(o);
    else if (classchars_cmd->parsed()) doc = classchars(o);
    else if (recursion_cmd->parsed()) doc = recursion(o);
    else doc = verify_report(o);

    const int status = emit(o, report::dump(doc.to_json()), out, err);
    if (status != kExitOk) return status;
    if (!doc.all_passed()) {
      for (const auto& c : doc.checks)
        if (!c.passed) err << "check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      return kExitConsistency;
    }
    return kExitOk;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace simplexharm::cli
