#include "critcheck/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "critcheck/chromatic.hpp"
#include "critcheck/graph6.hpp"
#include "critcheck/report_io.hpp"
#include "critcheck/scan.hpp"
#include "critcheck/script.hpp"

namespace critcheck {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Errors that map to exit code 2 with a message on the error stream.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return read_all(file);
}

Graph graph_from(const std::string& g6) {
  try {
    return decode_graph6(g6);
  } catch (const Graph6Error& ex) {
    throw UsageError(std::string("bad graph6: ") + ex.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Vertex parse_vertex(const std::string& s, const Graph& g) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad vertex '" + s + "'");
  }
  if (used != s.size() || v < 0 || v >= g.n()) throw UsageError("bad vertex '" + s + "'");
  return v;
}

EdgeId parse_edge(const std::string& s, const Graph& g) {
  const auto ends = split(s, '-');
  if (ends.size() != 2) throw UsageError("bad edge '" + s + "'");
  const EdgeId e = g.edge_id(parse_vertex(ends[0], g), parse_vertex(ends[1], g));
  if (e < 0) throw UsageError("no edge " + s);
  return e;
}

VertexPartition parse_partition(const std::string& s, const Graph& g) {
  const auto sides = split(s, '/');
  if (sides.size() != 2) throw UsageError("partition must look like a,b/c,d");
  VertexPartition p;
  for (const auto& v : split(sides[0], ',')) p.left.push_back(parse_vertex(v, g));
  for (const auto& v : split(sides[1], ',')) p.right.push_back(parse_vertex(v, g));
  return p;
}

std::string partition_text(const VertexPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.left.size(); ++i) out += (i ? "," : "") + std::to_string(p.left[i]);
  out += "/";
  for (std::size_t i = 0; i < p.right.size(); ++i) out += (i ? "," : "") + std::to_string(p.right[i]);
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("CRITCHECK_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-coloring critical graph checker"};
  app.require_subcommand(1);

  std::string g6;
  std::string input = "-";
  std::string checks_flag;
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  int jobs = default_jobs();
  std::string format = "csv";
  std::string mode = "all";
  std::string partition;
  int vertex = -1;
  bool timing = false;
  bool fork_universal = false;
  std::string coloring_path;
  std::string script_path;
  std::string without;
  int colors = 0;
  bool vizing = false;
  bool render = false;
  bool inverse = false;

  auto* chi = app.add_subcommand("chi", "chromatic index and class");
  chi->add_option("--graph6", g6, "graph in graph6")->required();

  auto* critical = app.add_subcommand("critical", "Δ-criticality test");
  critical->add_option("--graph6", g6, "graph in graph6")->required();

  auto* color = app.add_subcommand("color", "print an edge coloring");
  color->add_option("--graph6", g6, "graph in graph6")->required();
  color->add_option("--colors", colors, "number of colors (default: chromatic index, or Δ with --without)")->check(CLI::NonNegativeNumber);
  color->add_option("--without", without, "leave edge u-v uncolored");
  color->add_flag("--vizing", vizing, "constructive (Δ+1)-coloring");

  auto* scan = app.add_subcommand("scan", "run checks over graph6 lines");
  scan->add_option("--input", input, "graph6 file, '-' for standard input");
  scan->add_option("--checks", checks_flag, "comma-separated check ids (default: all)");
  scan->add_option("--budget", budget, "canonical colorings per edge before sampling (0 = no cap)");
  scan->add_option("--seed", seed, "sampling seed");
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--mode", mode, "broom enumeration: all or maximal")->check(CLI::IsMember({"all", "maximal"}));
  scan->add_flag("--timing", timing, "report elapsed milliseconds");
  scan->add_flag("--fork-universal", fork_universal, "also check the fork lemma for all colorings");

  auto* split_cmd = app.add_subcommand("split", "vertex splits and their criticality");
  split_cmd->add_option("--graph6", g6, "graph in graph6")->required();
  split_cmd->add_option("--vertex", vertex, "vertex to split (default: every vertex)");
  split_cmd->add_option("--partition", partition, "neighbour partition a,b/c,d (needs --vertex)");

  auto* script = app.add_subcommand("script", "run a Kempe-operation script");
  script->add_option("--graph6", g6, "graph in graph6")->required();
  script->add_option("--script", script_path, "script file, '-' for standard input")->required();
  script->add_option("--coloring", coloring_path, "starting coloring file");
  script->add_option("--without", without, "start from a Δ-coloring of G - uv");
  script->add_flag("--render", render, "print the matrix form instead of running");
  script->add_flag("--inverse", inverse, "run the inverse afterwards and confirm restoration");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (chi->parsed()) {
      const Graph g = graph_from(g6);
      const int x = chromatic_index(g);
      out << "chi'=" << x << " class=";
      if (g.m() == 0) {
        out << "none\n";
      } else {
        out << (classify(g) == EdgeClass::one ? 1 : 2) << "\n";
      }
      return kOk;
    }

    if (critical->parsed()) {
      const Graph g = graph_from(g6);
      out << "delta_critical=" << (is_delta_critical(g) ? "true" : "false") << "\n";
      return kOk;
    }

    if (color->parsed()) {
      const Graph g = graph_from(g6);
      if (vizing) {
        out << write_coloring(vizing_plus_one_coloring(g));
        return kOk;
      }
      const EdgeId skip = without.empty() ? kNoEdge : parse_edge(without, g);
      const int k = colors > 0 ? colors : skip == kNoEdge ? chromatic_index(g) : g.max_degree();
      std::optional<Coloring> c;
      try {
        c = find_coloring(g, k, skip);
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
      if (!c) {
        out << "none\n";
        return kOk;
      }
      out << write_coloring(*c);
      return kOk;
    }

    if (scan->parsed()) {
      ScanConfig config;
      config.options.budget = budget;
      config.options.seed = seed;
      config.options.broom_mode = mode == "maximal" ? BroomMode::maximal : BroomMode::all;
      config.options.fork_universal = fork_universal;
      if (checks_flag.empty() || checks_flag == "all") {
        config.checks = check_ids();
      } else {
        for (const auto& id : split(checks_flag, ',')) {
          if (!is_check_id(id)) throw UsageError("unknown check '" + id + "'");
          config.checks.push_back(id);
        }
      }
      std::ifstream file;
      std::istream* source = &in;
      if (input != "-") {
        file.open(input);
        if (!file) throw UsageError("cannot open " + input);
        source = &file;
      }
      bool violated = false;
      bool malformed = false;
      bool first = true;
      if (format == "csv") {
        out << csv_header() << "\n";
      } else {
        out << "[";
      }
      scan_stream(*source, config, jobs, [&](const ScanRow& row) {
        if (row.error) {
          malformed = true;
          err << "line " << row.line << ": " << *row.error << "\n";
        }
        for (const Report& r : row.reports) violated = violated || !r.violations.empty();
        if (format == "csv") {
          out << to_csv(row, timing);
        } else {
          out << (first ? "\n" : ",\n") << to_json(row, timing);
        }
        first = false;
        out.flush();
      });
      if (format == "json") out << (first ? "]\n" : "\n]\n");
      if (violated) return kViolation;
      return malformed ? kUsage : kOk;
    }

    if (split_cmd->parsed()) {
      const Graph g = graph_from(g6);
      if (!partition.empty() && vertex < 0) throw UsageError("--partition needs --vertex");
      std::vector<Vertex> targets;
      if (vertex >= 0) {
        targets.push_back(parse_vertex(std::to_string(vertex), g));
      } else {
        for (Vertex v = 0; v < g.n(); ++v) targets.push_back(v);
      }
      for (Vertex v : targets) {
        std::vector<VertexPartition> parts;
        if (!partition.empty()) {
          parts.push_back(parse_partition(partition, g));
        } else {
          parts = neighborhood_bipartitions(g, v);
        }
        for (const auto& p : parts) {
          Graph h;
          try {
            h = split_vertex(g, v, p);
          } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
          }
          out << "vertex=" << v << " partition=" << partition_text(p) << " graph6=" << encode_graph6(h)
              << " delta_critical=" << (is_delta_critical(h) ? "true" : "false") << "\n";
        }
      }
      return kOk;
    }

    if (script->parsed()) {
      const Graph g = graph_from(g6);
      ScriptProgram program;
      try {
        program = parse_script(read_source(script_path, in));
      } catch (const ScriptSyntaxError& ex) {
        throw UsageError(std::string("script: ") + ex.what());
      }
      if (render) {
        out << render_script(program);
        return kOk;
      }
      std::optional<Coloring> start;
      if (!coloring_path.empty()) {
        try {
          start = read_coloring(g, read_source(coloring_path, in));
        } catch (const ColoringError& ex) {
          throw UsageError(std::string("coloring: ") + ex.what());
        }
      } else if (!without.empty()) {
        start = find_coloring(g, g.max_degree(), parse_edge(without, g));
        if (!start) throw UsageError("G - " + without + " has no Δ-coloring");
      } else {
        throw UsageError("script needs --coloring or --without");
      }
      try {
        const ExecutionResult run = execute_script(program, *start);
        out << format_trace(run.trace) << write_coloring(run.coloring);
        if (inverse) {
          const ExecutionResult back = execute_script(inverse_script(program, run), run.coloring);
          const bool restored = back.coloring == *start;
          out << "inverse_restores=" << (restored ? "true" : "false") << "\n";
          if (!restored) return kViolation;
        }
      } catch (const ScriptExecutionError& ex) {
        err << "script failed at " << ex.what() << "\n";
        return kViolation;
      }
      return kOk;
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace critcheck
