#include <doctest.h>

#include <json.hpp>
#include <string>

#include "brf.h"

namespace {

struct Text {
  char* p = nullptr;
  ~Text() { brf_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Inst {
  brf_instance* p = nullptr;
  ~Inst() { brf_instance_free(p); }
};

struct Sol {
  brf_solution* p = nullptr;
  ~Sol() { brf_solution_free(p); }
};

}  // namespace

TEST_CASE("generate, solve and query through the shared library") {
  Inst inst;
  REQUIRE(brf_instance_generate("random-unrestricted", 8, 5, 0, &inst.p) ==
          BRF_OK);
  int n = 0;
  REQUIRE(brf_instance_n(inst.p, &n) == BRF_OK);
  CHECK(n == 16);

  Sol sol;
  REQUIRE(brf_solve(inst.p, 1, &sol.p) == BRF_OK);
  int mis = 0, mhs = 0;
  REQUIRE(brf_solution_sizes(sol.p, &mis, &mhs) == BRF_OK);
  CHECK(mis == mhs);
  CHECK(mis >= 1);

  int omis = 0, omhs = 0;
  REQUIRE(brf_oracle_check(inst.p, 128, &omis, &omhs) == BRF_OK);
  CHECK(omis == mis);
  CHECK(omhs == mhs);
}

TEST_CASE("instance documents round-trip through the library") {
  Inst inst;
  REQUIRE(brf_instance_generate("convex", 6, 9, 1, &inst.p) == BRF_OK);
  Text text;
  REQUIRE(brf_instance_to_json(inst.p, &text.p) == BRF_OK);
  Inst back;
  REQUIRE(brf_instance_parse(text.p, &back.p) == BRF_OK);
  Text text2;
  REQUIRE(brf_instance_to_json(back.p, &text2.p) == BRF_OK);
  CHECK(text.str() == text2.str());
}

TEST_CASE("verification accepts solver output and flags tampering") {
  Inst inst;
  REQUIRE(brf_instance_generate("permutation", 7, 4, 0, &inst.p) == BRF_OK);
  Sol sol;
  REQUIRE(brf_solve(inst.p, 0, &sol.p) == BRF_OK);
  Text doc;
  REQUIRE(brf_solution_to_json(sol.p, -1.0, &doc.p) == BRF_OK);

  CHECK(brf_verify_solution(inst.p, doc.p, nullptr) == BRF_OK);

  nlohmann::json j = nlohmann::json::parse(doc.str());
  REQUIRE(j["hitting_grid"].size() >= 1);
  j["hitting_grid"].erase(0);
  j["hitting"].erase(0);
  j["mhs_size"] = j["mhs_size"].get<int>() - 1;
  Text report;
  CHECK(brf_verify_solution(inst.p, j.dump().c_str(), &report.p) ==
        BRF_ERR_VERIFY_FAILED);
  CHECK(!report.str().empty());
  CHECK(std::string(brf_last_error()).find("verification") !=
        std::string::npos);

  nlohmann::json k = nlohmann::json::parse(doc.str());
  k["hitting"][0][0] = "99999/7";  // raw coordinate no longer matches
  Text report2;
  CHECK(brf_verify_solution(inst.p, k.dump().c_str(), &report2.p) ==
        BRF_ERR_VERIFY_FAILED);
  CHECK(report2.str().find("disagrees") != std::string::npos);
}

TEST_CASE("parse failures set the status and the message") {
  Inst inst;
  CHECK(brf_instance_parse("not json", &inst.p) == BRF_ERR_PARSE);
  CHECK(brf_last_error()[0] != '\0');
  CHECK(brf_instance_parse(R"({"version": "brf-instance/1"})", &inst.p) ==
        BRF_ERR_PARSE);
  CHECK(brf_instance_generate("mystery", 4, 1, 0, &inst.p) ==
        BRF_ERR_INVALID_INSTANCE);
  CHECK(brf_instance_parse(nullptr, &inst.p) == BRF_ERR_INVALID_INSTANCE);
}

TEST_CASE("weighted solve distinguishes instance classes") {
  Inst perm;
  REQUIRE(brf_instance_generate("permutation", 6, 2, 1, &perm.p) == BRF_OK);
  Text res;
  REQUIRE(brf_wmis(perm.p, &res.p) == BRF_OK);
  nlohmann::json j = nlohmann::json::parse(res.str());
  CHECK(j["version"] == "brf-wmis/1");
  CHECK(j.contains("value"));
  CHECK(j.contains("chosen"));

  const char* comparable = R"({
    "version": "brf-instance/1",
    "a": [[1, 3], [2, 4]],
    "b": [[5, 8], [6, 7]]
  })";
  Inst nested;
  REQUIRE(brf_instance_parse(comparable, &nested.p) == BRF_OK);
  Text res2;
  CHECK(brf_wmis(nested.p, &res2.p) == BRF_ERR_NOT_PERMUTATION);
}

TEST_CASE("relaxation check reports a match") {
  Inst inst;
  REQUIRE(brf_instance_generate("random-unrestricted", 4, 6, 0, &inst.p) ==
          BRF_OK);
  Text res;
  REQUIRE(brf_lp_check(inst.p, 0, &res.p) == BRF_OK);
  nlohmann::json j = nlohmann::json::parse(res.str());
  CHECK(j["version"] == "brf-lp/1");
  CHECK(j["matches"] == true);
}

TEST_CASE("biclique cover is exported for unrestricted instances only") {
  Inst inst;
  REQUIRE(brf_instance_generate("random-unrestricted", 6, 8, 0, &inst.p) ==
          BRF_OK);
  Text res;
  REQUIRE(brf_biclique_cover(inst.p, &res.p) == BRF_OK);
  nlohmann::json j = nlohmann::json::parse(res.str());
  CHECK(j["version"] == "brf-biclique/1");
  CHECK(j["cross_free_matching"].size() == j["cover"].size());

  Inst restricted;
  REQUIRE(brf_instance_generate("restricted-z", 5, 1, 0, &restricted.p) ==
          BRF_OK);
  Text res2;
  CHECK(brf_biclique_cover(restricted.p, &res2.p) ==
        BRF_ERR_UNSUPPORTED_REGION);
}

TEST_CASE("stats and rendering") {
  Inst inst;
  REQUIRE(brf_instance_generate("cross-grid", 3, 0, 0, &inst.p) == BRF_OK);
  Text stats;
  REQUIRE(brf_stats(inst.p, &stats.p) == BRF_OK);
  nlohmann::json j = nlohmann::json::parse(stats.str());
  CHECK(j["version"] == "brf-stats/1");
  CHECK(j["greedy_size"] == 6);
  CHECK(j["edge_count"] == 9);

  Text svg;
  REQUIRE(brf_render_svg(inst.p, nullptr, &svg.p) == BRF_OK);
  CHECK(svg.str().substr(0, 4) == "<svg");

  Sol sol;
  REQUIRE(brf_solve(inst.p, 0, &sol.p) == BRF_OK);
  Text svg2;
  REQUIRE(brf_render_svg(inst.p, sol.p, &svg2.p) == BRF_OK);
  CHECK(svg2.str().size() > svg.str().size());
}

TEST_CASE("rectangle reduction through the library") {
  const char* doc = R"({
    "version": "brf-rects/1",
    "rects": [[1, 1, 4, 4], [6, 2, 9, 3], [2, 6, 3, 9]]
  })";
  Inst inst;
  REQUIRE(brf_instance_reduce(doc, &inst.p) == BRF_OK);
  int n = 0;
  REQUIRE(brf_instance_n(inst.p, &n) == BRF_OK);
  CHECK(n == 6);
  Text text;
  REQUIRE(brf_instance_to_json(inst.p, &text.p) == BRF_OK);
  CHECK(text.str().find("weights") != std::string::npos);

  const char* dup = R"({
    "version": "brf-rects/1",
    "rects": [[1, 1, 4, 4], [4, 6, 7, 9]]
  })";
  Inst bad;
  CHECK(brf_instance_reduce(dup, &bad.p) == BRF_ERR_DUPLICATE_CORNER);
}
