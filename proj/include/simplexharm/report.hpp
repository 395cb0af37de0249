#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "simplexharm/modes.hpp"
#include "simplexharm/permgroup.hpp"
#include "simplexharm/reduction.hpp"
#include "simplexharm/weylaction.hpp"

namespace simplexharm::report {

using Json = nlohmann::json;

inline constexpr std::string_view kVersion = "0.3.0";

/// Reference tables compiled into the binary.
std::string_view embedded_golden_tables();
Json golden_tables();

/// Every floating value rounded to 15 significant digits; magnitudes below
/// 1e-13 become 0 so roundoff noise does not leak into golden files.
Json canonicalize(const Json& value);

/// Canonicalised, sorted-key, two-space-indented JSON with a trailing newline.
std::string dump(const Json& value);

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

/// Output envelope shared by every subcommand.
struct ReportDocument {
  std::string command;
  Json parameters = Json::object();
  Json payload = Json::object();
  std::vector<CheckResult> checks;

  bool all_passed() const;
  Json to_json() const;
};

Json to_json(const CheckResult& check);
Json matrix_json(const Eigen::MatrixXd& m);
/// Complex entries as [re, im] pairs.
Json matrix_json(const Eigen::MatrixXcd& m);

Json character_table_json(const perm::CharacterTable& table);
Json branching_json(int n);
Json multiplicity_table_json(const reduction::MultiplicityTable& table);
/// Header "row,dimension,<partitions...>,periodic", then one line per row and
/// a "total" line.
std::string multiplicity_table_csv(const reduction::MultiplicityTable& table);
Json class_characters_json(const std::vector<weyl::ClassCharacterRow>& rows);
Json mode_basis_json(const modes::ModeBasis& basis);
Json recursion_report_json(const reduction::RecursionReport& report);

}  // namespace simplexharm::report
