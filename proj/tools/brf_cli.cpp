#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brf.h"

namespace {

using Json = nlohmann::json;

// Exit codes: 0 success, 1 certificate or oracle mismatch, 2 bad usage or
// malformed input, 3 unsupported request (wrong class, region, or size).
int exit_code_for(brf_status s) {
  switch (s) {
    case BRF_OK:
      return 0;
    case BRF_ERR_VERIFY_FAILED:
    case BRF_ERR_MISSING_POINT:
    case BRF_ERR_EMPTY_RANGE:
    case BRF_ERR_NO_WITNESS:
    case BRF_ERR_EMPTY_CHAIN_INTERSECTION:
    case BRF_ERR_ILLEGAL_FLIP:
    case BRF_ERR_INTERNAL:
      return 1;
    case BRF_ERR_PARSE:
    case BRF_ERR_INVALID_INSTANCE:
    case BRF_ERR_DUPLICATE_CORNER:
      return 2;
    case BRF_ERR_NOT_PERMUTATION:
    case BRF_ERR_TOO_LARGE:
    case BRF_ERR_UNSUPPORTED_REGION:
      return 3;
  }
  return 1;
}

int report_failure(brf_status s) {
  std::cerr << "error: " << brf_last_error() << "\n";
  return exit_code_for(s);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("input", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct InstanceHandle {
  brf_instance* ptr = nullptr;
  ~InstanceHandle() { brf_instance_free(ptr); }
};

struct SolutionHandle {
  brf_solution* ptr = nullptr;
  ~SolutionHandle() { brf_solution_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { brf_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

brf_status load_instance(const std::string& path, InstanceHandle& inst) {
  return brf_instance_parse(read_input(path).c_str(), &inst.ptr);
}

int run_solve(const std::string& in, const std::string& out_path,
              const std::string& render_path, bool verify_oracle, bool timing,
              bool paranoid) {
  InstanceHandle inst;
  if (brf_status s = load_instance(in, inst)) return report_failure(s);

  auto t0 = std::chrono::steady_clock::now();
  SolutionHandle sol;
  if (brf_status s = brf_solve(inst.ptr, paranoid ? 1 : 0, &sol.ptr))
    return report_failure(s);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

  StringHandle text;
  if (brf_status s = brf_solution_to_json(sol.ptr, timing ? ms : -1.0, &text.ptr))
    return report_failure(s);
  if (!write_output(out_path, text.str())) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }

  if (!render_path.empty()) {
    StringHandle svg;
    if (brf_status s = brf_render_svg(inst.ptr, sol.ptr, &svg.ptr))
      return report_failure(s);
    if (!write_output(render_path, svg.str())) {
      std::cerr << "error: cannot write " << render_path << "\n";
      return 2;
    }
  }

  if (verify_oracle) {
    int mis = 0, mhs = 0;
    brf_status s = brf_oracle_check(inst.ptr, 0, &mis, &mhs);
    if (s == BRF_ERR_TOO_LARGE) {
      std::cerr << "oracle skipped: " << brf_last_error() << "\n";
      return 0;
    }
    if (s != BRF_OK) return report_failure(s);
    int mis_size = 0, mhs_size = 0;
    brf_solution_sizes(sol.ptr, &mis_size, &mhs_size);
    if (mis != mis_size || mhs != mhs_size) {
      std::cerr << "oracle mismatch: solver " << mis_size << "/" << mhs_size
                << ", exhaustive " << mis << "/" << mhs << "\n";
      return 1;
    }
  }
  return 0;
}

int run_simple(const std::string& in,
               brf_status (*fn)(const brf_instance*, char**)) {
  InstanceHandle inst;
  if (brf_status s = load_instance(in, inst)) return report_failure(s);
  StringHandle text;
  if (brf_status s = fn(inst.ptr, &text.ptr)) return report_failure(s);
  std::cout << text.str();
  return 0;
}

int run_lp_check(const std::string& in) {
  InstanceHandle inst;
  if (brf_status s = load_instance(in, inst)) return report_failure(s);
  StringHandle text;
  if (brf_status s = brf_lp_check(inst.ptr, 0, &text.ptr)) return report_failure(s);
  std::cout << text.str();
  Json doc = Json::parse(text.str());
  return doc["matches"].get<bool>() ? 0 : 1;
}

int run_gen(const std::string& kind, int size, std::uint64_t seed, bool weights) {
  InstanceHandle inst;
  if (brf_status s =
          brf_instance_generate(kind.c_str(), size, seed, weights ? 1 : 0, &inst.ptr))
    return report_failure(s);
  StringHandle text;
  if (brf_status s = brf_instance_to_json(inst.ptr, &text.ptr))
    return report_failure(s);
  std::cout << text.str();
  return 0;
}

int run_reduce(const std::string& in) {
  InstanceHandle inst;
  if (brf_status s = brf_instance_reduce(read_input(in).c_str(), &inst.ptr))
    return report_failure(s);
  StringHandle text;
  if (brf_status s = brf_instance_to_json(inst.ptr, &text.ptr))
    return report_failure(s);
  std::cout << text.str();
  return 0;
}

int run_verify(const std::string& in, const std::string& solution_path) {
  InstanceHandle inst;
  if (brf_status s = load_instance(in, inst)) return report_failure(s);
  StringHandle report;
  brf_status s = brf_verify_solution(inst.ptr, read_input(solution_path).c_str(),
                                     &report.ptr);
  if (s == BRF_OK) {
    std::cout << "ok\n";
    return 0;
  }
  if (s == BRF_ERR_VERIFY_FAILED) {
    std::cerr << report.str();
    return 1;
  }
  return report_failure(s);
}

int run_stats(const std::string& kind, const std::string& sizes, int trials,
              std::uint64_t seed) {
  std::size_t dots = sizes.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(sizes);
    } else {
      lo = std::stoi(sizes.substr(0, dots));
      hi = std::stoi(sizes.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "error: --sizes expects N or A..B\n";
    return 2;
  }
  if (lo < 1 || hi < lo) {
    std::cerr << "error: --sizes expects N or A..B with 1 <= A <= B\n";
    return 2;
  }

  std::cout << "kind=" << kind << " trials=" << trials << " seed=" << seed << "\n";
  std::cout << "size\tn\tminimal\tgreedy\tedges\tstab\tbound\tmax|K|/bound\n";
  for (int size = lo; size <= hi; ++size) {
    long long n_sum = 0, minimal_sum = 0, greedy_sum = 0, edge_sum = 0, stab_sum = 0,
              bound_sum = 0;
    double worst_ratio = 0;
    for (int t = 0; t < trials; ++t) {
      std::uint64_t trial_seed =
          seed + 1000003ull * static_cast<std::uint64_t>(size) + t;
      InstanceHandle inst;
      if (brf_status s =
              brf_instance_generate(kind.c_str(), size, trial_seed, 0, &inst.ptr))
        return report_failure(s);
      StringHandle text;
      if (brf_status s = brf_stats(inst.ptr, &text.ptr)) return report_failure(s);
      Json doc = Json::parse(text.str());
      n_sum += doc["n"].get<long long>();
      minimal_sum += doc["minimal_count"].get<long long>();
      greedy_sum += doc["greedy_size"].get<long long>();
      edge_sum += doc["edge_count"].get<long long>();
      stab_sum += doc["stabbing_lines"].get<long long>();
      bound_sum += doc["bound"].get<long long>();
      long long greedy = doc["greedy_size"].get<long long>();
      long long bound = doc["bound"].get<long long>();
      if (bound > 0)
        worst_ratio = std::max(worst_ratio,
                               static_cast<double>(greedy) / static_cast<double>(bound));
    }
    auto avg = [&](long long v) { return static_cast<double>(v) / trials; };
    std::cout << size << '\t' << avg(n_sum) << '\t' << avg(minimal_sum) << '\t'
              << avg(greedy_sum) << '\t' << avg(edge_sum) << '\t' << avg(stab_sum)
              << '\t' << avg(bound_sum) << '\t' << worst_ratio << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"independent sets and hitting sets of bicolored rectangular families"};
  app.require_subcommand(1);

  std::string in, out_path, render_path, solution_path, kind = "random-unrestricted";
  std::string sizes = "4..8";
  bool verify_oracle = false, timing = false, paranoid = false, weights = false;
  int size = 4, trials = 10;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "solve an instance document");
  solve->add_option("input", in, "instance file, or - for stdin")->required();
  solve->add_option("--out", out_path, "write the solution here instead of stdout");
  solve->add_flag("--verify-oracle", verify_oracle,
                  "cross-check with the exhaustive search when small enough");
  solve->add_option("--render", render_path, "also write an SVG drawing");
  solve->add_flag("--timing", timing, "include wall time in the output");
  solve->add_flag("--check-monotone", paranoid,
                  "re-validate the flip invariant after every flip");

  auto* wmis = app.add_subcommand("wmis", "weighted solve, permutation instances");
  wmis->add_option("input", in, "instance file, or - for stdin")->required();

  auto* gen = app.add_subcommand("gen", "emit a seeded instance document");
  gen->add_option("--kind", kind, "generator kind")->required();
  gen->add_option("--size", size, "size parameter")->required();
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_flag("--weights", weights, "attach random rational weights");

  auto* stats = app.add_subcommand("stats", "enumeration statistics over trials");
  stats->add_option("--kind", kind, "generator kind")->required();
  stats->add_option("--sizes", sizes, "size range, N or A..B")->required();
  stats->add_option("--trials", trials, "trials per size")->check(CLI::PositiveNumber);
  stats->add_option("--seed", seed, "base seed");

  auto* lp = app.add_subcommand("lp-check", "exact relaxation vs exhaustive search");
  lp->add_option("input", in, "instance file, or - for stdin")->required();

  auto* reduce = app.add_subcommand("reduce", "rectangle list to weighted instance");
  reduce->add_option("input", in, "rectangle document, or - for stdin")->required();

  auto* biclique = app.add_subcommand("biclique-cover", "graph-side certificates");
  biclique->add_option("input", in, "instance file, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify", "re-check a solution document");
  verify->add_option("input", in, "instance file, or - for stdin")->required();
  verify->add_option("solution", solution_path, "solution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed())
      return run_solve(in, out_path, render_path, verify_oracle, timing, paranoid);
    if (wmis->parsed()) return run_simple(in, brf_wmis);
    if (gen->parsed()) return run_gen(kind, size, seed, weights);
    if (stats->parsed()) return run_stats(kind, sizes, trials, seed);
    if (lp->parsed()) return run_lp_check(in);
    if (reduce->parsed()) return run_reduce(in);
    if (biclique->parsed()) return run_simple(in, brf_biclique_cover);
    if (verify->parsed()) return run_verify(in, solution_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
