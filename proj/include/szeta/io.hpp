#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "szeta/extrapolate.hpp"
#include "szeta/oracle.hpp"
#include "szeta/sumrules.hpp"

namespace szeta::io {

nlohmann::json to_json(const SumRuleTable& t);
SumRuleTable sum_rule_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectrumResult& r);

/// {method, q[], estimate[], shanks_columns[][]}; Wide values also as
/// 20-digit strings under estimate_text / shanks_text.
nlohmann::json to_json(const EstimateSequence<double>& e, const ShanksTable<double>& t);
nlohmann::json to_json(const EstimateSequence<Wide>& e, const ShanksTable<Wide>& t);

std::string format_wide(const Wide& v, int digits = 20);

/// Fixed-header CSV. NaN becomes an empty cell.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);
  void row(const std::vector<double>& numbers, const std::vector<std::string>& trailing = {});

 private:
  std::ostream& out_;
  std::size_t columns_;
};

std::string format_number(double v);

}  // namespace szeta::io
