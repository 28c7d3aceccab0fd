#pragma once

/// @file report.hpp
/// @brief Report records and their JSON / CSV / text renderings.
///
/// Every number is written as a decimal string so no precision is lost.

#include "patineq/exactmath.hpp"
#include "patineq/occur.hpp"
#include "patineq/permineq.hpp"
#include "patineq/wordineq.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace patineq {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, json, csv };
OutputFormat parse_output_format(const std::string& name);
std::string to_string(OutputFormat f);

struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  std::vector<std::string> paper_refs;

  Json to_json() const;
  std::string render(OutputFormat format) const;
};

std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render_text(const Report& r);

// Field encoders shared by the CLI commands.
Json encode(const Natural& n);
Json encode(const Integer& n);
Json encode(const Ratio& r);
Json encode_forms(const std::vector<int>& theorem_form);
Json encode_pattern_list(const std::vector<std::vector<int>>& theorem_forms);

Json to_json(const InequalityReport& r);
Json to_json(const WordInequalityReport& r);
Json to_json(const MomentReport& r);
Json to_json(const CovarianceReport& r);
Json to_json(const ExtremalReport& r);
Json to_json(const WordExtremalReport& r);
Json to_json(const ConjectureRow& r);
Json to_json(const WordDiscriminant& d, const WordPattern& p1, const WordPattern& p2);

}  // namespace patineq
