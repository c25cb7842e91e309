#include "brf/io.hpp"

#include <json.hpp>

#include "brf/errors.hpp"

namespace brf {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kInstanceTag = "brf-instance/1";
constexpr const char* kRectsTag = "brf-rects/1";
constexpr const char* kSolutionTag = "brf-solution/1";

Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return Json(r.get_num().get_si());
  return Json(rational_to_string(r));
}

Rational json_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_float()) {
    Rational r;
    mpq_set_d(r.get_mpq_t(), v.get<double>());
    return r;
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail(Errc::parse_error, where + ": expected a number or \"p/q\" string");
}

Json raw_point_json(const RawPoint& p) {
  return Json::array({rational_json(p.x), rational_json(p.y)});
}

RawPoint json_raw_point(const Json& v, const std::string& where) {
  require(v.is_array() && v.size() == 2, Errc::parse_error,
          where + ": expected a [x, y] pair");
  return {json_rational(v[0], where + "[0]"), json_rational(v[1], where + "[1]")};
}

Json raw_rect_json(const RawRect& r) {
  return Json::array({rational_json(r.lo.x), rational_json(r.lo.y),
                      rational_json(r.hi.x), rational_json(r.hi.y)});
}

RawRect json_raw_rect(const Json& v, const std::string& where) {
  require(v.is_array() && v.size() == 4, Errc::parse_error,
          where + ": expected [x1, y1, x2, y2]");
  return {{json_rational(v[0], where), json_rational(v[1], where)},
          {json_rational(v[2], where), json_rational(v[3], where)}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
}

void check_version(const Json& doc, const char* tag) {
  require(doc.is_object(), Errc::parse_error, "document is not an object");
  require(doc.contains("version") && doc["version"].is_string() &&
              doc["version"].get<std::string>() == tag,
          Errc::parse_error, std::string("version: expected \"") + tag + '"');
}

int json_index(const Json& v, std::size_t limit, const std::string& where) {
  require(v.is_number_integer(), Errc::parse_error, where + ": expected an index");
  auto i = v.get<std::int64_t>();
  require(0 <= i && i < static_cast<std::int64_t>(limit), Errc::parse_error,
          where + ": index out of range");
  return static_cast<int>(i);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string instance_to_text(const RawInstance& raw) {
  Json doc;
  doc["version"] = kInstanceTag;
  doc["a"] = Json::array();
  for (const RawPoint& p : raw.a) doc["a"].push_back(raw_point_json(p));
  doc["b"] = Json::array();
  for (const RawPoint& p : raw.b) doc["b"].push_back(raw_point_json(p));
  if (raw.region) {
    doc["region"] = Json::array();
    for (const RawRect& r : *raw.region) doc["region"].push_back(raw_rect_json(r));
  } else {
    doc["region"] = "full";
  }
  if (!raw.weights.empty()) {
    doc["weights"] = Json::array();
    for (const auto& [ai, bi, w] : raw.weights)
      doc["weights"].push_back(Json::array({ai, bi, rational_json(w)}));
  }
  if (raw.genspec) {
    doc["generator"] = Json{{"kind", raw.genspec->kind},
                            {"size", raw.genspec->size},
                            {"seed", raw.genspec->seed},
                            {"weights", raw.genspec->weights}};
  }
  return dump(doc);
}

RawInstance parse_instance_text(const std::string& text) {
  Json doc = parse_json(text);
  check_version(doc, kInstanceTag);
  RawInstance raw;
  for (const char* side : {"a", "b"}) {
    require(doc.contains(side) && doc[side].is_array(), Errc::parse_error,
            std::string(side) + ": expected an array of points");
    auto& dst = *side == 'a' ? raw.a : raw.b;
    for (std::size_t i = 0; i < doc[side].size(); ++i)
      dst.push_back(json_raw_point(doc[side][i],
                                   std::string(side) + "[" + std::to_string(i) + "]"));
  }
  if (doc.contains("region") && doc["region"] != Json("full")) {
    require(doc["region"].is_array(), Errc::parse_error,
            "region: expected \"full\" or an array of rectangles");
    std::vector<RawRect> region;
    for (std::size_t i = 0; i < doc["region"].size(); ++i)
      region.push_back(
          json_raw_rect(doc["region"][i], "region[" + std::to_string(i) + "]"));
    raw.region = std::move(region);
  }
  if (doc.contains("weights")) {
    require(doc["weights"].is_array(), Errc::parse_error,
            "weights: expected an array of [aIndex, bIndex, weight]");
    for (std::size_t i = 0; i < doc["weights"].size(); ++i) {
      const Json& w = doc["weights"][i];
      const std::string where = "weights[" + std::to_string(i) + "]";
      require(w.is_array() && w.size() == 3, Errc::parse_error,
              where + ": expected [aIndex, bIndex, weight]");
      raw.weights.push_back({json_index(w[0], raw.a.size(), where + "[0]"),
                             json_index(w[1], raw.b.size(), where + "[1]"),
                             json_rational(w[2], where + "[2]")});
    }
  }
  if (doc.contains("generator")) {
    const Json& g = doc["generator"];
    require(g.is_object() && g.contains("kind") && g["kind"].is_string() &&
                g.contains("size") && g["size"].is_number_integer() &&
                g.contains("seed") && g["seed"].is_number_integer() &&
                g.contains("weights") && g["weights"].is_boolean(),
            Errc::parse_error, "generator: expected {kind, size, seed, weights}");
    raw.genspec = GenProvenance{g["kind"].get<std::string>(), g["size"].get<int>(),
                                g["seed"].get<std::uint64_t>(),
                                g["weights"].get<bool>()};
  }
  return raw;
}

std::string rects_to_text(const std::vector<RawRect>& rects) {
  Json doc;
  doc["version"] = kRectsTag;
  doc["rects"] = Json::array();
  for (const RawRect& r : rects) doc["rects"].push_back(raw_rect_json(r));
  return dump(doc);
}

std::vector<RawRect> parse_rects_text(const std::string& text) {
  Json doc = parse_json(text);
  check_version(doc, kRectsTag);
  require(doc.contains("rects") && doc["rects"].is_array(), Errc::parse_error,
          "rects: expected an array of rectangles");
  std::vector<RawRect> rects;
  for (std::size_t i = 0; i < doc["rects"].size(); ++i)
    rects.push_back(json_raw_rect(doc["rects"][i], "rects[" + std::to_string(i) + "]"));
  return rects;
}

std::string solution_to_text(const Instance& inst, const Solution& sol,
                             std::optional<double> timing_ms) {
  Json doc;
  doc["version"] = kSolutionTag;
  doc["mis_size"] = sol.independent.size();
  doc["mhs_size"] = sol.hitting.size();
  doc["independent"] = Json::array();
  for (const Rect& r : sol.independent)
    doc["independent"].push_back(Json::array({r.a_idx, r.b_idx}));
  doc["hitting"] = Json::array();
  for (const Point& h : sol.hitting) {
    RawPoint raw = inst.raw_of(h);
    doc["hitting"].push_back(raw_point_json(raw));
  }
  doc["hitting_grid"] = Json::array();
  for (const Point& h : sol.hitting)
    doc["hitting_grid"].push_back(Json::array({h.x, h.y}));
  const SolveDiagnostics& d = sol.diagnostics;
  doc["diagnostics"] = Json{{"minimal_count", d.minimal_count},
                            {"greedy_size", d.stats.size_k},
                            {"edge_count", d.stats.edge_count},
                            {"stabbing_lines", d.stats.stab_lines},
                            {"bound", d.stats.bound},
                            {"bound_ratio", d.stats.conjecture_ratio},
                            {"flips", d.flips}};
  if (timing_ms) doc["timing_ms"] = *timing_ms;
  return dump(doc);
}

SolutionFile parse_solution_text(const std::string& text) {
  Json doc = parse_json(text);
  check_version(doc, kSolutionTag);
  SolutionFile out;
  require(doc.contains("mis_size") && doc["mis_size"].is_number_integer() &&
              doc.contains("mhs_size") && doc["mhs_size"].is_number_integer(),
          Errc::parse_error, "mis_size/mhs_size: expected integers");
  out.mis_size = doc["mis_size"].get<int>();
  out.mhs_size = doc["mhs_size"].get<int>();
  require(doc.contains("independent") && doc["independent"].is_array(),
          Errc::parse_error, "independent: expected an array of index pairs");
  for (std::size_t i = 0; i < doc["independent"].size(); ++i) {
    const Json& p = doc["independent"][i];
    const std::string where = "independent[" + std::to_string(i) + "]";
    require(p.is_array() && p.size() == 2 && p[0].is_number_integer() &&
                p[1].is_number_integer(),
            Errc::parse_error, where + ": expected [aIndex, bIndex]");
    out.independent.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  require(doc.contains("hitting") && doc["hitting"].is_array(), Errc::parse_error,
          "hitting: expected an array of points");
  for (std::size_t i = 0; i < doc["hitting"].size(); ++i) {
    const std::string where = "hitting[" + std::to_string(i) + "]";
    RawPoint p = json_raw_point(doc["hitting"][i], where);
    out.hitting_raw.push_back({p.x, p.y});
  }
  require(doc.contains("hitting_grid") && doc["hitting_grid"].is_array(),
          Errc::parse_error, "hitting_grid: expected an array of points");
  for (std::size_t i = 0; i < doc["hitting_grid"].size(); ++i) {
    const Json& p = doc["hitting_grid"][i];
    const std::string where = "hitting_grid[" + std::to_string(i) + "]";
    require(p.is_array() && p.size() == 2 && p[0].is_number_integer() &&
                p[1].is_number_integer(),
            Errc::parse_error, where + ": expected [x, y]");
    out.hitting_grid.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return out;
}

}  // namespace brf
