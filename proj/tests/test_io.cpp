#include <doctest.h>

#include <string>

#include "brf/errors.hpp"
#include "brf/generators.hpp"
#include "brf/io.hpp"
#include "brf/solver.hpp"
#include "helpers.hpp"

using namespace brf;

namespace {

std::string parse_failure(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("instance documents round-trip byte-identically") {
  for (const std::string& kind : generator_kinds()) {
    bool weights = kind == "permutation" || kind == "convex";
    RawInstance raw = generate({kind, 6, 31, weights});
    std::string text = instance_to_text(raw);
    CHECK(instance_to_text(parse_instance_text(text)) == text);
  }
}

TEST_CASE("rational values parse from every accepted form") {
  std::string text = R"({
    "version": "brf-instance/1",
    "a": [[1, 1]],
    "b": [[4, 4]],
    "weights": [[0, 0, 7], [0, 0, "5/3"], [0, 0, 0.5]]
  })";
  RawInstance raw = parse_instance_text(text);
  CHECK(std::get<2>(raw.weights[0]) == Rational(7));
  CHECK(std::get<2>(raw.weights[1]) == Rational(5, 3));
  CHECK(std::get<2>(raw.weights[2]) == Rational(1, 2));

  // integral rationals serialize as plain numbers, others as strings
  std::string out = instance_to_text(raw);
  CHECK(out.find("\"5/3\"") != std::string::npos);
  CHECK(out.find("\"1/2\"") != std::string::npos);
  CHECK(out.find("\"7\"") == std::string::npos);
  RawInstance back = parse_instance_text(out);
  for (int i = 0; i < 3; ++i)
    CHECK(std::get<2>(back.weights[i]) == std::get<2>(raw.weights[i]));
}

TEST_CASE("rational point coordinates survive a round trip") {
  RawInstance raw;
  raw.a.push_back({Rational(1, 3), Rational(-2)});
  raw.b.push_back({Rational(22, 7), Rational(5, 2)});
  std::string text = instance_to_text(raw);
  RawInstance back = parse_instance_text(text);
  CHECK(back.a[0].x == Rational(1, 3));
  CHECK(back.a[0].y == Rational(-2));
  CHECK(back.b[0].x == Rational(22, 7));
  CHECK(back.b[0].y == Rational(5, 2));
}

TEST_CASE("parse failures name the offending field") {
  CHECK(parse_failure("{").find("parse") != std::string::npos);
  CHECK(parse_failure(R"({"a": [], "b": []})").find("version") !=
        std::string::npos);
  CHECK(parse_failure(R"({"version": "brf-instance/2", "a": [], "b": []})")
            .find("version") != std::string::npos);
  CHECK(parse_failure(R"({"version": "brf-instance/1", "b": []})")
            .find("a:") != std::string::npos);
  CHECK(parse_failure(
            R"({"version": "brf-instance/1", "a": [[1]], "b": []})")
            .find("a[0]") != std::string::npos);
  CHECK(parse_failure(
            R"({"version": "brf-instance/1", "a": [[1, true]], "b": []})")
            .find("a[0][1]") != std::string::npos);
  CHECK(parse_failure(
            R"({"version": "brf-instance/1", "a": [[1,1]], "b": [[2,2]],
                "weights": [[0, 1, 1]]})")
            .find("weights[0][1]") != std::string::npos);
  CHECK(parse_failure(
            R"({"version": "brf-instance/1", "a": [[1,1]], "b": [[2,2]],
                "region": 5})")
            .find("region") != std::string::npos);
}

TEST_CASE("malformed rationals are rejected") {
  for (const std::string& bad : {"\"5/\"", "\"/3\"", "\"5/0\"", "\"a\"", "true"}) {
    std::string text = R"({"version": "brf-instance/1", "a": [[)" + bad +
                       R"(, 1]], "b": []})";
    CHECK_THROWS_AS(parse_instance_text(text), Error);
  }
}

TEST_CASE("rects documents round-trip") {
  std::vector<RawRect> rects{{{Rational(1), Rational(2)}, {Rational(3), Rational(9, 2)}}};
  std::vector<RawRect> back = parse_rects_text(rects_to_text(rects));
  REQUIRE(back.size() == 1);
  CHECK(back[0].lo.x == 1);
  CHECK(back[0].hi.y == Rational(9, 2));
  CHECK_THROWS_AS(parse_rects_text(R"({"version": "brf-rects/1"})"), Error);
}

TEST_CASE("solution documents carry both coordinate systems") {
  Instance inst = brf_test::gen_instance("random-unrestricted", 6, 3);
  Solution sol = solve(inst);
  std::string text = solution_to_text(inst, sol, std::nullopt);
  SolutionFile f = parse_solution_text(text);
  CHECK(f.mis_size == static_cast<int>(sol.independent.size()));
  CHECK(f.mhs_size == static_cast<int>(sol.hitting.size()));
  REQUIRE(f.independent.size() == sol.independent.size());
  for (std::size_t i = 0; i < sol.independent.size(); ++i) {
    CHECK(f.independent[i].first == sol.independent[i].a_idx);
    CHECK(f.independent[i].second == sol.independent[i].b_idx);
  }
  CHECK(f.hitting_grid == sol.hitting);
  REQUIRE(f.hitting_raw.size() == sol.hitting.size());
  for (std::size_t i = 0; i < sol.hitting.size(); ++i) {
    RawPoint raw = inst.raw_of(sol.hitting[i]);
    CHECK(f.hitting_raw[i].first == raw.x);
    CHECK(f.hitting_raw[i].second == raw.y);
  }
}

TEST_CASE("timing is emitted only on request") {
  Instance inst = brf_test::gen_instance("permutation", 5, 9);
  Solution sol = solve(inst);
  std::string plain = solution_to_text(inst, sol, std::nullopt);
  CHECK(plain.find("timing_ms") == std::string::npos);
  CHECK(plain == solution_to_text(inst, sol, std::nullopt));
  std::string timed = solution_to_text(inst, sol, 12.5);
  CHECK(timed.find("timing_ms") != std::string::npos);
}
