#include <doctest.h>

#include <cstdio>
#include <random>

#include "fps/json_io.hpp"

using namespace fps;

namespace {
Series make(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (const char* c : cs) v.push_back(Rational::parse(c));
  return Series(std::move(v));
}
}  // namespace

TEST_CASE("series JSON round trip") {
  const Series s = make({"0", "1", "-1/2", "22/7"});
  CHECK(series_to_json(s) == R"({"coeffs":["0","1","-1/2","22/7"],"order":3})");
  CHECK(series_from_json(series_to_json(s)) == s);
}

TEST_CASE("series JSON round trip on random coefficients") {
  std::mt19937_64 eng(7);
  for (int round = 0; round < 20; ++round) {
    std::vector<Rational> c(1 + eng() % 10);
    for (auto& x : c)
      x = Rational(Int(static_cast<long>(eng() % 19) - 9), Int(1 + static_cast<long>(eng() % 9)));
    const Series s{std::move(c)};
    CHECK(series_from_json(series_to_json(s)) == s);
  }
}

TEST_CASE("series JSON validation") {
  CHECK_THROWS_AS(series_from_json("not json"), UsageError);
  CHECK_THROWS_AS(series_from_json(R"({"order":2})"), UsageError);
  CHECK_THROWS_AS(series_from_json(R"({"order":2,"coeffs":["1","2"]})"), UsageError);
  CHECK_THROWS_AS(series_from_json(R"({"order":-1,"coeffs":[]})"), UsageError);
  // Numbers must travel as strings; JSON numbers could round through floats.
  CHECK_THROWS_AS(series_from_json(R"({"order":0,"coeffs":[1]})"), UsageError);
  CHECK_THROWS_AS(series_from_json(R"({"order":0,"coeffs":["1.5"]})"), UsageError);
  CHECK_THROWS_AS(series_from_json(R"({"order":"2","coeffs":["1","2","3"]})"), UsageError);
}

TEST_CASE("sequence JSON round trip and validation") {
  const RationalSequence s{1, {Rational::parse("1"), Rational::parse("-2/3")}};
  CHECK(sequence_to_json(s) == R"({"offset":1,"values":["1","-2/3"]})");
  CHECK(sequence_from_json(sequence_to_json(s)) == s);
  const RationalSequence empty{0, {}};
  CHECK(sequence_from_json(sequence_to_json(empty)) == empty);
  CHECK_THROWS_AS(sequence_from_json(R"({"offset":2,"values":[]})"), UsageError);
  CHECK_THROWS_AS(sequence_from_json(R"({"values":["1"]})"), UsageError);
  CHECK_THROWS_AS(sequence_from_json(R"({"offset":0,"values":[0.5]})"), UsageError);
}

TEST_CASE("report JSON carries counts and results") {
  std::vector<CheckResult> results;
  results.push_back(make_check("demo", {{"n", "3"}}, Rational(1), Rational(1)));
  results.push_back(make_check("demo", {{"n", "4"}}, Rational(1), Rational(2)));
  const SuiteReport report = make_report(std::move(results), 12);
  const std::string j = report_to_json(report);
  CHECK(j.find("\"total\":2") != std::string::npos);
  CHECK(j.find("\"pass\":1") != std::string::npos);
  CHECK(j.find("\"fail\":1") != std::string::npos);
  CHECK(j.find("\"elapsed_ms\":12") != std::string::npos);
  CHECK(j.find("\"identity_id\":\"demo\"") != std::string::npos);
  CHECK(j.find("\"n\":\"3\"") != std::string::npos);
}

TEST_CASE("file IO errors") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), IoError);
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.json", "x"), IoError);
  const std::string path = "/tmp/fps_json_io_test.json";
  write_text_file(path, series_to_json(make({"1", "2"})));
  CHECK(series_from_json(read_text_file(path)) == make({"1", "2"}));
  std::remove(path.c_str());
}
