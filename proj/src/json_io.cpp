#include "fps/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fps {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw UsageError("input is not valid JSON");
  return j;
}

std::vector<Rational> rationals_from_array(const json& arr, const char* what) {
  if (!arr.is_array())
    throw UsageError(std::string(what) + " must be an array of rational strings");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string())
      throw UsageError(std::string(what) +
                       " entries must be strings like \"3\" or \"-1/2\", not JSON numbers");
    out.push_back(Rational::parse(item.get<std::string>()));
  }
  return out;
}

json rationals_to_array(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace

std::string series_to_json(const Series& s) {
  json j;
  j["order"] = s.order();
  j["coeffs"] = rationals_to_array(s.coeffs());
  return j.dump();
}

Series series_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw UsageError("series JSON must be {\"order\": N, \"coeffs\": [...]}");
  if (!j["order"].is_number_integer())
    throw UsageError("series order must be an integer");
  const long order = j["order"].get<long>();
  if (order < 0) throw UsageError("series order must be >= 0");
  auto coeffs = rationals_from_array(j["coeffs"], "series coeffs");
  if (static_cast<long>(coeffs.size()) != order + 1)
    throw UsageError("series coeffs must have exactly order+1 entries, got " +
                     std::to_string(coeffs.size()) + " for order " + std::to_string(order));
  return Series(std::move(coeffs));
}

std::string sequence_to_json(const RationalSequence& s) {
  json j;
  j["offset"] = s.offset;
  j["values"] = rationals_to_array(s.values);
  return j.dump();
}

RationalSequence sequence_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("offset") || !j.contains("values"))
    throw UsageError("sequence JSON must be {\"offset\": 0|1, \"values\": [...]}");
  if (!j["offset"].is_number_integer())
    throw UsageError("sequence offset must be 0 or 1");
  const long offset = j["offset"].get<long>();
  if (offset != 0 && offset != 1) throw UsageError("sequence offset must be 0 or 1");
  return RationalSequence{static_cast<int>(offset),
                          rationals_from_array(j["values"], "sequence values")};
}

std::string report_to_json(const SuiteReport& report) {
  json j;
  j["counts"] = {{"total", report.total}, {"pass", report.passed}, {"fail", report.failed}};
  j["elapsed_ms"] = report.elapsed_ms;
  json results = json::array();
  for (const auto& r : report.results) {
    json item;
    item["identity_id"] = r.identity_id;
    item["parameters"] = json::object();
    for (const auto& [key, value] : r.parameters) item["parameters"][key] = value;
    item["lhs"] = r.lhs;
    item["rhs"] = r.rhs;
    item["pass"] = r.pass;
    results.push_back(std::move(item));
  }
  j["results"] = std::move(results);
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading '" + path + "'");
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace fps
