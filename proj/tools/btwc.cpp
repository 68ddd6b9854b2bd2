#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "btwc.h"

namespace {

// Exit-code contract: 0 success, 1 validation mismatch, 2 usage/parse
// (including unreadable compute/validate inputs), 3 output I/O failure.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

void check_status(btwc_status st, int exit_code) {
  if (st != BTWC_OK) fail(exit_code, btwc_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  btwc_string_free(s);
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) fail(kExitIo, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) fail(kExitIo, "failed writing '" + path + "'");
}

struct GraphHandle {
  btwc_graph* g = nullptr;
  ~GraphHandle() { btwc_graph_free(g); }
};

struct ScoresHandle {
  btwc_scores* s = nullptr;
  ~ScoresHandle() { btwc_scores_free(s); }
};

// Inputs containing ':' are family specs; anything else is an edge-list path.
void load_input(const std::string& input, GraphHandle& gh) {
  btwc_status st = input.find(':') != std::string::npos
                       ? btwc_graph_from_spec(input.c_str(), &gh.g)
                       : btwc_graph_read_file(input.c_str(), &gh.g);
  check_status(st, kExitUsage);
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string spec;
  std::string out = "-";
};

int run_generate(const GenerateArgs& args) {
  GraphHandle gh;
  check_status(btwc_graph_from_spec(args.spec.c_str(), &gh.g), kExitUsage);
  char* text = nullptr;
  check_status(btwc_graph_format(gh.g, &text), kExitUsage);
  write_output(args.out, take_string(text));
  return kExitOk;
}

// ---- compute ---------------------------------------------------------------

struct ComputeArgs {
  std::string input;
  std::string engine = "exact";
  std::string format = "json";
  std::string out = "-";
  int threads = 0;
  std::int32_t cap = 14;
};

struct ComputedReport {
  std::int32_t n = 0;
  std::string engine;
  bool disconnected = false;
  std::int32_t max_vertex = 0;
  std::vector<std::string> scores;    // serialized per format rules
  std::vector<std::string> relative;  // empty when n < 3
  std::optional<std::string> centralization;
};

ComputedReport compute_report(const ComputeArgs& args) {
  GraphHandle gh;
  load_input(args.input, gh);
  const std::int32_t n = btwc_graph_order(gh.g);

  ComputedReport rep;
  rep.n = n;
  rep.engine = args.engine;
  rep.disconnected = btwc_graph_connected(gh.g) == 0;

  if (args.engine == "float") {
    std::vector<double> scores(static_cast<size_t>(n));
    check_status(btwc_betweenness_float(gh.g, args.threads, scores.data()),
                 kExitUsage);
    for (std::int32_t v = 1; v < n; ++v)
      if (scores[v] > scores[rep.max_vertex]) rep.max_vertex = v;
    for (double s : scores) rep.scores.push_back(format_double(s));
    if (n >= 3) {
      const double denom = static_cast<double>(n - 1) * (n - 2);
      double gap = 0;
      for (double s : scores) {
        rep.relative.push_back(format_double(2.0 * s / denom));
        gap += scores[rep.max_vertex] - s;
      }
      rep.centralization = format_double(2.0 * gap / (denom * (n - 1)));
    }
    return rep;
  }

  ScoresHandle sh;
  btwc_status st = args.engine == "bruteforce"
                       ? btwc_betweenness_bruteforce(gh.g, args.cap, &sh.s)
                       : btwc_betweenness(gh.g, args.threads, &sh.s);
  check_status(st, kExitUsage);
  check_status(btwc_scores_max_vertex(sh.s, &rep.max_vertex), kExitUsage);
  for (std::int32_t v = 0; v < n; ++v) {
    char* val = nullptr;
    check_status(btwc_scores_get(sh.s, v, &val), kExitUsage);
    rep.scores.push_back(take_string(val));
  }
  if (n >= 3) {
    for (std::int32_t v = 0; v < n; ++v) {
      char* val = nullptr;
      check_status(btwc_scores_relative(sh.s, v, &val), kExitUsage);
      rep.relative.push_back(take_string(val));
    }
    char* c = nullptr;
    check_status(btwc_scores_centralization(sh.s, &c), kExitUsage);
    rep.centralization = take_string(c);
  }
  return rep;
}

std::string render_json(const ComputedReport& rep) {
  const bool quoted = rep.engine != "float";
  auto value = [&](const std::string& v) {
    return quoted ? "\"" + v + "\"" : v;
  };
  auto array = [&](const std::vector<std::string>& vs) {
    std::string out = "[";
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ",";
      out += value(vs[i]);
    }
    return out + "]";
  };
  std::string out = "{\"n\":" + std::to_string(rep.n);
  out += ",\"engine\":\"" + rep.engine + "\"";
  out += ",\"scores\":" + array(rep.scores);
  out += ",\"relative\":" + (rep.relative.empty() ? "null" : array(rep.relative));
  out += ",\"centralization\":" +
         (rep.centralization ? value(*rep.centralization) : "null");
  out += ",\"max_vertex\":" + std::to_string(rep.max_vertex);
  out += ",\"disconnected\":";
  out += rep.disconnected ? "true" : "false";
  return out + "}\n";
}

std::string render_csv(const ComputedReport& rep) {
  std::string out = "vertex,score,relative\n";
  for (std::int32_t v = 0; v < rep.n; ++v) {
    out += std::to_string(v) + "," + rep.scores[static_cast<size_t>(v)] + ",";
    if (!rep.relative.empty()) out += rep.relative[static_cast<size_t>(v)];
    out += "\n";
  }
  out += "# n=" + std::to_string(rep.n) + " engine=" + rep.engine +
         " centralization=" + (rep.centralization ? *rep.centralization : "null") +
         " max_vertex=" + std::to_string(rep.max_vertex) +
         " disconnected=" + (rep.disconnected ? "true" : "false") + "\n";
  return out;
}

int run_compute(const ComputeArgs& args) {
  ComputedReport rep = compute_report(args);
  write_output(args.out,
               args.format == "csv" ? render_csv(rep) : render_json(rep));
  return kExitOk;
}

// ---- validate ----------------------------------------------------------------

struct ValidateArgs {
  std::string family = "all";
  long min = -1;
  long max = -1;
  long trees = 500;
  long max_order = 40;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out = "-";
};

struct ValidationLine {
  std::string spec;
  std::int32_t vertices = 0;
  bool per_vertex_match = false;
  std::string max_abs_discrepancy = "0";
  bool centralization_match = false;
  double engine_ms = 0;
  std::int32_t first_mismatch_vertex = -1;
  std::string formula_value;
  std::string exact_value;

  bool ok() const { return per_vertex_match && centralization_match; }

  std::string render() const {
    std::string out = "{\"spec\":\"" + json_escape(spec) + "\"";
    out += ",\"vertices\":" + std::to_string(vertices);
    out += ",\"per_vertex_match\":";
    out += per_vertex_match ? "true" : "false";
    out += ",\"max_abs_discrepancy\":\"" + max_abs_discrepancy + "\"";
    out += ",\"centralization_match\":";
    out += centralization_match ? "true" : "false";
    out += ",\"engine_ms\":" + format_double(engine_ms);
    if (first_mismatch_vertex >= 0) {
      out += ",\"first_mismatch_vertex\":" + std::to_string(first_mismatch_vertex);
      out += ",\"formula\":\"" + formula_value + "\"";
      out += ",\"exact\":\"" + exact_value + "\"";
    }
    return out + "}\n";
  }
};

// Centralization string, or nullopt where it is undefined (order < 3).
std::optional<std::string> scores_centralization(btwc_scores* s) {
  char* c = nullptr;
  btwc_status st = btwc_scores_centralization(s, &c);
  if (st == BTWC_ERR_ARGUMENT) return std::nullopt;
  check_status(st, kExitUsage);
  return take_string(c);
}

ValidationLine compare_scores(const std::string& label, btwc_graph* g,
                              btwc_scores* formula,
                              std::optional<std::string> formula_centr,
                              int threads) {
  ValidationLine line;
  line.spec = label;
  line.vertices = btwc_graph_order(g);

  auto t0 = std::chrono::steady_clock::now();
  ScoresHandle exact;
  check_status(btwc_betweenness(g, threads, &exact.s), kExitUsage);
  auto t1 = std::chrono::steady_clock::now();
  line.engine_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  line.per_vertex_match = btwc_scores_equal(formula, exact.s) == 1;
  if (!line.per_vertex_match) {
    char* diff = nullptr;
    check_status(btwc_scores_max_abs_diff(formula, exact.s, &diff), kExitUsage);
    line.max_abs_discrepancy = take_string(diff);
    for (std::int32_t v = 0; v < line.vertices; ++v) {
      char *fv = nullptr, *ev = nullptr;
      check_status(btwc_scores_get(formula, v, &fv), kExitUsage);
      check_status(btwc_scores_get(exact.s, v, &ev), kExitUsage);
      std::string f = take_string(fv), e = take_string(ev);
      if (f != e) {
        line.first_mismatch_vertex = v;
        line.formula_value = f;
        line.exact_value = e;
        break;
      }
    }
  }

  auto exact_centr = scores_centralization(exact.s);
  line.centralization_match = formula_centr == exact_centr;
  return line;
}

ValidationLine validate_instance(const std::string& spec, int threads) {
  GraphHandle gh;
  check_status(btwc_graph_from_spec(spec.c_str(), &gh.g), kExitUsage);

  ScoresHandle formula;
  check_status(btwc_closed_form(spec.c_str(), &formula.s), kExitUsage);
  char* c = nullptr;
  std::optional<std::string> formula_centr;
  btwc_status st = btwc_closed_form_centralization(spec.c_str(), &c);
  if (st == BTWC_OK) formula_centr = take_string(c);
  else if (st != BTWC_ERR_ARGUMENT) check_status(st, kExitUsage);

  return compare_scores(spec, gh.g, formula.s, formula_centr, threads);
}

ValidationLine validate_tree(std::int32_t order, std::uint64_t seed,
                             int threads) {
  GraphHandle gh;
  check_status(btwc_random_tree(order, seed, &gh.g), kExitUsage);
  ScoresHandle formula;
  check_status(btwc_tree_scores(gh.g, &formula.s), kExitUsage);
  std::optional<std::string> formula_centr = scores_centralization(formula.s);
  std::string label =
      "tree:n=" + std::to_string(order) + ",seed=" + std::to_string(seed);
  return compare_scores(label, gh.g, formula.s, formula_centr, threads);
}

struct FamilyGrid {
  std::string token;
  long def_min;
  long def_max;
};

const std::vector<FamilyGrid> kGrids = {
    {"wheel", 4, 40},      {"kminus", 3, 40},  {"kmn", 1, 15},
    {"cocktail", 2, 20},   {"crown", 3, 20},   {"path", 1, 60},
    {"ladder", 2, 25},     {"cycle", 3, 60},   {"circladder", 3, 25},
    {"hypercube", 1, 8},   {"star", 2, 40},    {"complete", 2, 40},
};

int run_validate(const ValidateArgs& args) {
  if (args.max_order < 2) fail(kExitUsage, "max tree order must be at least 2");
  if (args.trees < 0) fail(kExitUsage, "tree count must be nonnegative");
  std::string out;
  long instances = 0, failures = 0;

  auto emit = [&](const ValidationLine& line) {
    ++instances;
    if (!line.ok()) ++failures;
    out += line.render();
  };

  bool matched = false;
  for (const auto& grid : kGrids) {
    if (args.family != "all" && args.family != grid.token) continue;
    matched = true;
    long lo = args.min >= 0 ? args.min : grid.def_min;
    long hi = args.max >= 0 ? args.max : grid.def_max;
    if (grid.token == "kmn") {
      for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= hi; ++n)
          emit(validate_instance(
              "kmn:" + std::to_string(m) + "," + std::to_string(n),
              args.threads));
    } else {
      for (long n = lo; n <= hi; ++n)
        emit(validate_instance(grid.token + ":" + std::to_string(n),
                               args.threads));
    }
  }
  if (args.family == "all" || args.family == "tree") {
    matched = true;
    for (long i = 0; i < args.trees; ++i) {
      std::uint64_t seed = args.seed + static_cast<std::uint64_t>(i);
      // Spread orders deterministically over 2..max_order.
      std::int32_t order =
          static_cast<std::int32_t>(2 + (seed * 2654435761u) % (args.max_order - 1));
      emit(validate_tree(order, seed, args.threads));
    }
  }
  if (!matched) fail(kExitUsage, "unknown family '" + args.family + "'");

  out += "{\"summary\":{\"instances\":" + std::to_string(instances) +
         ",\"failures\":" + std::to_string(failures) + "}}\n";
  write_output(args.out, out);
  return failures == 0 ? kExitOk : kExitMismatch;
}

// ---- bench -------------------------------------------------------------------

struct BenchArgs {
  std::string family;
  long min = 4;
  long max = 10;
  long step = 1;
  std::string engine = "float";
  int threads = 0;
  std::string out = "-";
};

int run_bench(const BenchArgs& args) {
  std::string out = "family,n,engine,millis,check\n";
  for (long n = args.min; n <= args.max; n += args.step) {
    std::string spec = args.family + ":" + std::to_string(n);
    GraphHandle gh;
    btwc_status st = btwc_graph_from_spec(spec.c_str(), &gh.g);
    if (st != BTWC_OK) {
      out += args.family + "," + std::to_string(n) + "," + args.engine +
             ",,error\n";
      continue;
    }
    const std::int32_t order = btwc_graph_order(gh.g);

    std::string check = "none";
    double ms = 0;
    auto t0 = std::chrono::steady_clock::now();

    if (args.engine == "float") {
      std::vector<double> scores(static_cast<size_t>(order));
      check_status(btwc_betweenness_float(gh.g, args.threads, scores.data()),
                   kExitUsage);
      auto t1 = std::chrono::steady_clock::now();
      ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

      ScoresHandle formula;
      if (btwc_closed_form(spec.c_str(), &formula.s) == BTWC_OK) {
        check = "ok";
        for (std::int32_t v = 0; v < order; ++v) {
          double expect = 0;
          check_status(btwc_scores_get_double(formula.s, v, &expect),
                       kExitUsage);
          double tol = std::max(1e-6 * std::fabs(expect), 1e-9);
          if (std::fabs(scores[static_cast<size_t>(v)] - expect) > tol) {
            check = "fail";
            break;
          }
        }
      }
    } else {
      ScoresHandle sh;
      st = args.engine == "bruteforce"
               ? btwc_betweenness_bruteforce(gh.g, 14, &sh.s)
               : btwc_betweenness(gh.g, args.threads, &sh.s);
      check_status(st, kExitUsage);
      auto t1 = std::chrono::steady_clock::now();
      ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

      ScoresHandle formula;
      if (btwc_closed_form(spec.c_str(), &formula.s) == BTWC_OK)
        check = btwc_scores_equal(formula.s, sh.s) == 1 ? "ok" : "fail";
    }
    out += args.family + "," + std::to_string(n) + "," + args.engine + "," +
           format_double(ms) + "," + check + "\n";
  }
  write_output(args.out, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact betweenness centrality toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "write a family instance as an edge list");
  gen->add_option("spec", gen_args.spec, "family spec, e.g. wheel:7 or kmn:2,3")
      ->required();
  gen->add_option("out", gen_args.out, "output path ('-' for stdout)");

  ComputeArgs comp_args;
  auto* comp = app.add_subcommand("compute", "compute centrality measures");
  comp->add_option("input", comp_args.input,
                   "family spec or edge-list file path")
      ->required();
  comp->add_option("--engine", comp_args.engine, "exact, float, or bruteforce")
      ->check(CLI::IsMember({"exact", "float", "bruteforce"}));
  comp->add_option("--format", comp_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  comp->add_option("--out", comp_args.out, "output path ('-' for stdout)");
  comp->add_option("--threads", comp_args.threads,
                   "worker threads (1 = single-threaded, 0 = all cores)");
  comp->add_option("--cap", comp_args.cap, "bruteforce vertex cap");

  ValidateArgs val_args;
  auto* val = app.add_subcommand(
      "validate", "closed-form formulas vs the exact engine");
  val->add_option("family", val_args.family,
                  "family token, 'tree', or 'all'");
  val->add_option("--min", val_args.min, "range start (family default)");
  val->add_option("--max", val_args.max, "range end (family default)");
  val->add_option("--trees", val_args.trees, "random tree count");
  val->add_option("--max-order", val_args.max_order, "largest tree order");
  val->add_option("--seed", val_args.seed, "random tree seed");
  val->add_option("--threads", val_args.threads, "worker threads");
  val->add_option("--out", val_args.out, "output path ('-' for stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time an engine over a size sweep");
  bench->add_option("family", bench_args.family, "family token")->required();
  bench->add_option("--min", bench_args.min, "sweep start");
  bench->add_option("--max", bench_args.max, "sweep end");
  bench->add_option("--step", bench_args.step, "sweep step")
      ->check(CLI::PositiveNumber);
  bench->add_option("--engine", bench_args.engine,
                    "exact, float, or bruteforce")
      ->check(CLI::IsMember({"exact", "float", "bruteforce"}));
  bench->add_option("--threads", bench_args.threads, "worker threads");
  bench->add_option("--out", bench_args.out, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_generate(gen_args);
    if (comp->parsed()) return run_compute(comp_args);
    if (val->parsed()) return run_validate(val_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  }
  return kExitUsage;
}
