#include "patineq/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace patineq {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["config"] = config;
  j["results"] = results;
  j["paperRefs"] = paper_refs;
  return j;
}

std::string Report::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::json: return render_json(*this);
    case OutputFormat::csv: return render_csv(*this);
    case OutputFormat::text: return render_text(*this);
  }
  return render_text(*this);
}

std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (t > 0) out += ';';
      out += scalar_text(v[t]);
    }
    return out;
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Flattens {"a": {"b": 1}} into {"a.b": 1}; arrays stay as leaves.
void flatten(const Json& v, const std::string& prefix, Json& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out[prefix] = v;
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object()) return false;
  }
  return true;
}

bool is_grid(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array()) return false;
    for (const auto& cell : row) {
      if (cell.is_object() || cell.is_array()) return false;
    }
  }
  return true;
}

void write_table_csv(const Json& rows, std::ostream& os) {
  std::vector<Json> flat;
  std::vector<std::string> header;
  for (const auto& row : rows) {
    Json f = Json::object();
    flatten(row, "", f);
    for (const auto& [key, value] : f.items()) {
      if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
    }
    flat.push_back(std::move(f));
  }
  for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << csv_field(header[c]);
  os << '\n';
  for (const auto& f : flat) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      os << (c ? "," : "") << (f.contains(header[c]) ? csv_field(scalar_text(f[header[c]])) : "");
    }
    os << '\n';
  }
}

void write_text(const Json& v, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_grid(v)) {
    for (const auto& row : v) {
      os << pad;
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << scalar_text(row[c]);
      os << '\n';
    }
    return;
  }
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_object() || is_table(value) || is_grid(value)) {
        os << pad << key << ":\n";
        write_text(value, indent + 2, os);
      } else {
        os << pad << key << ": " << scalar_text(value) << '\n';
      }
    }
    return;
  }
  if (is_table(v)) {
    for (const auto& row : v) {
      Json f = Json::object();
      flatten(row, "", f);
      os << pad << "-";
      for (const auto& [key, value] : f.items()) os << ' ' << key << '=' << scalar_text(value);
      os << '\n';
    }
    return;
  }
  os << pad << scalar_text(v) << '\n';
}

}  // namespace

std::string render_csv(const Report& r) {
  std::ostringstream os;
  if (is_table(r.results)) {
    write_table_csv(r.results, os);
  } else if (r.results.is_object() && r.results.contains("rows") && is_table(r.results["rows"])) {
    write_table_csv(r.results["rows"], os);
  } else if (is_grid(r.results)) {
    for (const auto& row : r.results) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(scalar_text(row[c]));
      os << '\n';
    }
  } else {
    Json f = Json::object();
    flatten(r.results, "", f);
    os << "key,value\n";
    for (const auto& [key, value] : f.items()) {
      os << csv_field(key) << ',' << csv_field(scalar_text(value)) << '\n';
    }
  }
  return os.str();
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  write_text(r.results, 0, os);
  return os.str();
}

Json encode(const Natural& n) { return n.str(); }
Json encode(const Integer& n) { return n.str(); }
Json encode(const Ratio& r) { return to_string(r); }

Json encode_forms(const std::vector<int>& theorem_form) {
  std::vector<int> proof(theorem_form);
  for (int& v : proof) ++v;
  Json j;
  j["theoremForm"] = format_sequence(theorem_form);
  j["proofForm"] = format_sequence(proof);
  return j;
}

Json encode_pattern_list(const std::vector<std::vector<int>>& theorem_forms) {
  Json arr = Json::array();
  for (const auto& t : theorem_forms) arr.push_back(format_sequence(t));
  return arr;
}

Json to_json(const InequalityReport& r) {
  Json j;
  j["m"] = std::to_string(r.m);
  j["pattern"] = encode_forms(r.tau);
  j["lhs"] = encode(r.lhs);
  j["rhs"] = encode(r.rhs);
  j["margin"] = encode(r.margin);
  return j;
}

Json to_json(const WordInequalityReport& r) {
  Json j;
  j["m"] = std::to_string(r.m);
  j["l"] = std::to_string(r.l);
  j["pattern"] = encode_forms(r.tau);
  j["lhs"] = encode(r.lhs);
  j["rhs"] = encode(r.rhs);
  j["margin"] = encode(r.margin);
  return j;
}

Json to_json(const MomentReport& r) {
  Json j;
  j["pattern"] = r.pattern;
  j["n"] = std::to_string(r.n);
  if (r.k) j["k"] = std::to_string(*r.k);
  j["mean"] = encode(r.mean);
  j["secondMoment"] = encode(r.second_moment);
  j["variance"] = r.variance ? encode(*r.variance) : Json(nullptr);
  if (r.sample_count) {
    j["sampleCount"] = std::to_string(*r.sample_count);
    j["meanDecimal"] = to_decimal(r.mean, 6);
    if (r.variance) j["varianceDecimal"] = to_decimal(*r.variance, 6);
  }
  return j;
}

Json to_json(const CovarianceReport& r) {
  Json j;
  j["p1"] = r.p1;
  j["p2"] = r.p2;
  j["crossSum"] = encode(r.cross_sum);
  j["leadingCoefficient"] = encode(r.leading_coefficient);
  j["sign"] = to_string(r.sign);
  return j;
}

Json to_json(const ExtremalReport& r) {
  Json j;
  j["m"] = std::to_string(r.m);
  j["patterns"] = std::to_string(r.patterns);
  j["mStar"] = encode(r.m_star);
  j["mLower"] = encode(r.m_lower);
  j["ratio"] = r.ratio ? encode(*r.ratio) : Json(nullptr);
  j["ratioDecimal"] = r.ratio ? Json(to_decimal(*r.ratio, 12)) : Json(nullptr);
  j["maximizers"] = encode_pattern_list(r.maximizers);
  j["minimizers"] = encode_pattern_list(r.minimizers);
  return j;
}

Json to_json(const WordExtremalReport& r) {
  Json j;
  j["m"] = std::to_string(r.m);
  j["l"] = std::to_string(r.l);
  j["patterns"] = std::to_string(r.patterns);
  j["maxMargin"] = encode(r.max_margin);
  j["minMargin"] = encode(r.min_margin);
  j["strict"] = r.strict;
  j["maximizers"] = encode_pattern_list(r.maximizers);
  j["minimizers"] = encode_pattern_list(r.minimizers);
  return j;
}

Json to_json(const ConjectureRow& r) {
  Json j;
  j["m"] = std::to_string(r.m);
  j["minMargin"] = encode(r.min_margin);
  j["mLower"] = encode(r.min_margin);
  j["mStar"] = encode(r.max_margin);
  j["ratio"] = r.ratio ? encode(*r.ratio) : Json(nullptr);
  j["ratioDecimal"] = r.ratio ? Json(to_decimal(*r.ratio, 12)) : Json(nullptr);
  j["violation"] = r.violation;
  j["status"] = "evidence";
  return j;
}

Json to_json(const WordDiscriminant& d, const WordPattern& p1, const WordPattern& p2) {
  Json j;
  j["p1"] = p1.str();
  j["p2"] = p2.str();
  j["crossSum"] = encode(d.cross_sum);
  j["bound"] = encode(d.bound);
  j["discriminant"] = encode(d.discriminant);
  j["sign"] = to_string(d.sign);
  return j;
}

}  // namespace patineq
