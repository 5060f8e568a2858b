#include "szeta/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "szeta/error.hpp"

namespace szeta::io {

using nlohmann::json;

json to_json(const SumRuleTable& t) {
  return json{{"bc", to_string(t.bc)},
              {"method", to_string(t.method)},
              {"orders", t.orders},
              {"values", t.values},
              {"err_est", t.err_est}};
}

SumRuleTable sum_rule_table_from_json(const json& j) {
  try {
    SumRuleTable t;
    t.bc = parse_bc(j.at("bc").get<std::string>());
    t.method = parse_method(j.at("method").get<std::string>());
    t.orders = j.at("orders").get<std::vector<int>>();
    t.values = j.at("values").get<std::vector<double>>();
    t.err_est = j.at("err_est").get<std::vector<double>>();
    if (t.values.size() != t.orders.size() || t.err_est.size() != t.orders.size())
      throw DataError("sum-rule table: array lengths differ");
    return t;
  } catch (const json::exception& e) {
    throw DataError(std::string("sum-rule table: ") + e.what());
  }
}

json to_json(const SpectrumResult& r) {
  return json{{"bc", to_string(r.bc)},
              {"grid_size", r.grid_size},
              {"eigenvalues", r.eigenvalues},
              {"err_est", r.err_est}};
}

json to_json(const EstimateSequence<double>& e, const ShanksTable<double>& t) {
  json cols = json::array();
  for (std::size_t k = 1; k < t.columns.size(); ++k) cols.push_back(t.columns[k].values);
  return json{{"method", to_string(e.method)}, {"q", e.q}, {"estimate", e.estimates},
              {"shanks_columns", cols}};
}

std::string format_wide(const Wide& v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

json to_json(const EstimateSequence<Wide>& e, const ShanksTable<Wide>& t) {
  std::vector<double> est;
  std::vector<std::string> est_text;
  for (const auto& v : e.estimates) {
    est.push_back(static_cast<double>(v));
    est_text.push_back(format_wide(v));
  }
  json cols = json::array(), cols_text = json::array();
  for (std::size_t k = 1; k < t.columns.size(); ++k) {
    std::vector<double> c;
    std::vector<std::string> ct;
    for (const auto& v : t.columns[k].values) {
      c.push_back(static_cast<double>(v));
      ct.push_back(format_wide(v));
    }
    cols.push_back(c);
    cols_text.push_back(ct);
  }
  return json{{"method", to_string(e.method)}, {"q", e.q},
              {"estimate", est},               {"estimate_text", est_text},
              {"shanks_columns", cols},        {"shanks_text", cols_text}};
}

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& numbers, const std::vector<std::string>& trailing) {
  if (numbers.size() + trailing.size() != columns_) throw ParameterError("csv: column count mismatch");
  bool first = true;
  for (double v : numbers) {
    out_ << (first ? "" : ",") << format_number(v);
    first = false;
  }
  for (const auto& s : trailing) {
    out_ << (first ? "" : ",") << s;
    first = false;
  }
  out_ << '\n';
}

}  // namespace szeta::io
