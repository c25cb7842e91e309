#include "brf.h"

#include <cstring>
#include <exception>
#include <memory>
#include <string>

#include <json.hpp>

#include "brf/core.hpp"
#include "brf/enumeration.hpp"
#include "brf/errors.hpp"
#include "brf/generators.hpp"
#include "brf/io.hpp"
#include "brf/oracle.hpp"
#include "brf/solver.hpp"
#include "brf/svg.hpp"
#include "brf/weighted.hpp"

struct brf_instance {
  brf::RawInstance raw;
  brf::Instance inst;
};

struct brf_solution {
  brf::Instance inst;
  brf::Solution sol;
};

namespace {

using Json = nlohmann::ordered_json;

thread_local std::string g_last_error;

brf_status status_of(brf::Errc code) {
  switch (code) {
    case brf::Errc::invalid_instance: return BRF_ERR_INVALID_INSTANCE;
    case brf::Errc::parse_error: return BRF_ERR_PARSE;
    case brf::Errc::missing_point: return BRF_ERR_MISSING_POINT;
    case brf::Errc::empty_range: return BRF_ERR_EMPTY_RANGE;
    case brf::Errc::no_witness: return BRF_ERR_NO_WITNESS;
    case brf::Errc::empty_chain_intersection: return BRF_ERR_EMPTY_CHAIN_INTERSECTION;
    case brf::Errc::illegal_flip: return BRF_ERR_ILLEGAL_FLIP;
    case brf::Errc::not_permutation: return BRF_ERR_NOT_PERMUTATION;
    case brf::Errc::duplicate_corner: return BRF_ERR_DUPLICATE_CORNER;
    case brf::Errc::too_large: return BRF_ERR_TOO_LARGE;
    case brf::Errc::restricted_region_unsupported: return BRF_ERR_UNSUPPORTED_REGION;
    case brf::Errc::internal: return BRF_ERR_INTERNAL;
  }
  return BRF_ERR_INTERNAL;
}

template <typename Fn>
brf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BRF_OK;
  } catch (const brf::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BRF_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

brf_status require_arg(bool ok) {
  if (!ok) g_last_error = "null argument";
  return ok ? BRF_OK : BRF_ERR_INVALID_INSTANCE;
}

std::string rational_field(const brf::Rational& r) {
  return brf::rational_to_string(r);
}

}  // namespace

extern "C" {

const char* brf_last_error(void) { return g_last_error.c_str(); }

void brf_string_free(char* s) { delete[] s; }
void brf_instance_free(brf_instance* inst) { delete inst; }
void brf_solution_free(brf_solution* sol) { delete sol; }

brf_status brf_instance_parse(const char* json_text, brf_instance** out) {
  if (require_arg(json_text && out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    auto inst = std::make_unique<brf_instance>();
    inst->raw = brf::parse_instance_text(json_text);
    inst->inst = brf::normalize(inst->raw);
    if (!inst->raw.weights.empty()) brf::make_weighted_instance(inst->raw);
    *out = inst.release();
  });
}

brf_status brf_instance_generate(const char* kind, int size, uint64_t seed,
                                 int with_weights, brf_instance** out) {
  if (require_arg(kind && out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    auto inst = std::make_unique<brf_instance>();
    inst->raw = brf::generate({kind, size, seed, with_weights != 0});
    inst->inst = brf::normalize(inst->raw);
    *out = inst.release();
  });
}

brf_status brf_instance_reduce(const char* rects_json, brf_instance** out) {
  if (require_arg(rects_json && out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    auto rects = brf::parse_rects_text(rects_json);
    brf::WeightedInstance w = brf::reduction_from_rectangles(rects);
    auto inst = std::make_unique<brf_instance>();
    for (const brf::RawRect& r : rects) {
      inst->raw.a.push_back(r.lo);
      inst->raw.b.push_back(r.hi);
    }
    inst->raw.weights = w.weights;
    inst->inst = std::move(w.inst);
    *out = inst.release();
  });
}

brf_status brf_instance_to_json(const brf_instance* inst, char** out) {
  if (require_arg(inst && out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] { *out = copy_string(brf::instance_to_text(inst->raw)); });
}

brf_status brf_instance_n(const brf_instance* inst, int* out) {
  if (require_arg(inst && out)) return BRF_ERR_INVALID_INSTANCE;
  *out = inst->inst.n;
  return BRF_OK;
}

brf_status brf_solve(const brf_instance* inst, int check_monotonicity,
                     brf_solution** out) {
  if (require_arg(inst && out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    auto sol = std::make_unique<brf_solution>();
    sol->inst = inst->inst;
    sol->sol = brf::solve(inst->inst, {check_monotonicity != 0});
    *out = sol.release();
  });
}

brf_status brf_solution_sizes(const brf_solution* sol, int* mis_size, int* mhs_size) {
  if (require_arg(sol && mis_size && mhs_size)) return BRF_ERR_INVALID_INSTANCE;
  *mis_size = static_cast<int>(sol->sol.independent.size());
  *mhs_size = static_cast<int>(sol->sol.hitting.size());
  return BRF_OK;
}

brf_status brf_solution_to_json(const brf_solution* sol, double timing_ms,
                                char** out) {
  if (require_arg(sol && out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    std::optional<double> timing;
    if (timing_ms >= 0) timing = timing_ms;
    *out = copy_string(brf::solution_to_text(sol->inst, sol->sol, timing));
  });
}

brf_status brf_verify_solution(const brf_instance* inst, const char* solution_json,
                               char** report_out) {
  if (require_arg(inst && solution_json)) return BRF_ERR_INVALID_INSTANCE;
  brf::VerifyReport report;
  brf_status rc = guarded([&] {
    brf::SolutionFile file = brf::parse_solution_text(solution_json);
    brf::Solution sol;
    for (auto [ai, bi] : file.independent) {
      brf::require(0 <= ai && ai < static_cast<int>(inst->inst.a_points.size()) &&
                       0 <= bi && bi < static_cast<int>(inst->inst.b_points.size()),
                   brf::Errc::parse_error, "independent: index out of range");
      sol.independent.push_back({inst->inst.a_points[ai], inst->inst.b_points[bi],
                                 ai, bi});
    }
    sol.hitting = file.hitting_grid;
    report = brf::verify_solution(inst->inst, sol);

    if (static_cast<int>(file.independent.size()) != file.mis_size)
      report.violations.push_back("mis_size disagrees with the independent array");
    if (static_cast<int>(file.hitting_grid.size()) != file.mhs_size)
      report.violations.push_back("mhs_size disagrees with the hitting array");
    if (file.hitting_raw.size() != file.hitting_grid.size()) {
      report.violations.push_back("hitting and hitting_grid lengths differ");
    } else {
      for (std::size_t i = 0; i < file.hitting_grid.size(); ++i) {
        brf::Point g = file.hitting_grid[i];
        if (g.x < 1 || g.x > inst->inst.n || g.y < 1 || g.y > inst->inst.n) {
          report.violations.push_back("hitting_grid[" + std::to_string(i) +
                                      "] outside the grid");
        } else if (file.hitting_raw[i].first != inst->inst.raw_x[g.x] ||
                   file.hitting_raw[i].second != inst->inst.raw_y[g.y]) {
          report.violations.push_back("hitting[" + std::to_string(i) +
                                      "] disagrees with its grid point");
        }
      }
    }
  });
  if (rc != BRF_OK) return rc;
  if (report.ok()) return BRF_OK;
  std::string text;
  for (const std::string& v : report.violations) {
    text += v;
    text += '\n';
  }
  g_last_error = "solution failed verification";
  if (report_out) *report_out = copy_string(text);
  return BRF_ERR_VERIFY_FAILED;
}

brf_status brf_oracle_check(const brf_instance* inst, int cap, int* mis_out,
                            int* mhs_out) {
  if (require_arg(inst && mis_out && mhs_out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    int effective = cap > 0 ? cap : 25;
    *mis_out = brf::brute_mis(inst->inst, effective).value;
    *mhs_out = brf::brute_mhs(inst->inst, effective).value;
  });
}

brf_status brf_wmis(const brf_instance* inst, char** result_json) {
  if (require_arg(inst && result_json)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    brf::WeightedInstance w = brf::make_weighted_instance(inst->raw);
    brf::WmisResult res = brf::wmis_permutation(w);
    Json doc;
    doc["version"] = "brf-wmis/1";
    doc["value"] = rational_field(res.value);
    doc["chosen"] = Json::array();
    for (const brf::Rect& r : res.chosen)
      doc["chosen"].push_back(Json::array({r.a_idx, r.b_idx}));
    *result_json = copy_string(doc.dump(2) + "\n");
  });
}

brf_status brf_lp_check(const brf_instance* inst, int rect_cap, char** result_json) {
  if (require_arg(inst && result_json)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    brf::LpCheckResult res = brf::lp_check(inst->inst, rect_cap > 0 ? rect_cap : 100);
    Json doc;
    doc["version"] = "brf-lp/1";
    doc["lp_value"] = rational_field(res.lp_value);
    doc["mis"] = res.mis_value;
    doc["matches"] = res.matches;
    *result_json = copy_string(doc.dump(2) + "\n");
  });
}

brf_status brf_biclique_cover(const brf_instance* inst, char** result_json) {
  if (require_arg(inst && result_json)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    brf::Solution sol = brf::solve(inst->inst);
    brf::GraphSideExport ex = brf::export_graph_side(inst->inst, sol);
    Json doc;
    doc["version"] = "brf-biclique/1";
    doc["cross_free_matching"] = Json::array();
    for (auto [ai, bi] : ex.cross_free_matching)
      doc["cross_free_matching"].push_back(Json::array({ai, bi}));
    doc["cover"] = Json::array();
    for (const brf::Biclique& bc : ex.biclique_cover) {
      Json entry;
      entry["point"] = Json::array({bc.h.x, bc.h.y});
      entry["a_side"] = bc.a_side;
      entry["b_side"] = bc.b_side;
      doc["cover"].push_back(entry);
    }
    *result_json = copy_string(doc.dump(2) + "\n");
  });
}

brf_status brf_stats(const brf_instance* inst, char** result_json) {
  if (require_arg(inst && result_json)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    brf::MinimalFamily mf = brf::minimal_rectangles(inst->inst);
    brf::CfiFamily cfi = brf::greedy_cfi(inst->inst, mf);
    brf::CfiStats st = brf::cfi_stats(inst->inst, cfi);
    Json doc;
    doc["version"] = "brf-stats/1";
    doc["n"] = inst->inst.n;
    doc["minimal_count"] = mf.rects.size();
    doc["greedy_size"] = st.size_k;
    doc["edge_count"] = st.edge_count;
    doc["stabbing_lines"] = st.stab_lines;
    doc["bound"] = st.bound;
    doc["bound_ratio"] = st.conjecture_ratio;
    *result_json = copy_string(doc.dump(2) + "\n");
  });
}

brf_status brf_render_svg(const brf_instance* inst, const brf_solution* sol,
                          char** svg_out) {
  if (require_arg(inst && svg_out)) return BRF_ERR_INVALID_INSTANCE;
  return guarded([&] {
    *svg_out = copy_string(brf::render_svg(inst->inst, sol ? &sol->sol : nullptr));
  });
}

}  // extern "C"
