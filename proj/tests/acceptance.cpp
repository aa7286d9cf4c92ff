// One PASS/FAIL line per acceptance criterion. Criteria that name K5 as a
// critical graph cannot pass: K5 - e has nine edges, more than four matchings
// of a 5-vertex graph can hold, so K5 is not Δ-critical. Those criteria are
// pinned as expected failures; the exit status is nonzero on any other
// failure, or if a pinned one starts passing.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "critcheck/chromatic.hpp"
#include "critcheck/cli.hpp"
#include "critcheck/graph6.hpp"
#include "critcheck/kempe.hpp"
#include "critcheck/script.hpp"
#include "critcheck/structures.hpp"
#include "critcheck/theorems.hpp"
#include "oracles.hpp"

using namespace critcheck;

namespace {

// Pinned limits.
constexpr double kChiOracleSecondsLimit = 300.0;
constexpr std::size_t kColoringBudget = 10000;
constexpr std::uint64_t kSeed = 1;
constexpr int kKempeCases = 10000;
constexpr int kScriptCases = 1000;

const std::set<int> kExpectedFailures = {2, 6};

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;
int unexpected = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o = {false, std::string("exception: ") + ex.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  if (o.pass == (kExpectedFailures.count(id) > 0)) ++unexpected;
  std::printf("%s criterion %d: %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::vector<Graph> corpus_upto(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = corpus::load_connected(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool contains_iso(const std::vector<Graph>& set, const Graph& g) {
  return std::any_of(set.begin(), set.end(), [&](const Graph& h) { return corpus::isomorphic(g, h); });
}

Graph split_k4() { return split_vertex(graphs::complete(4), 0, {{1}, {2, 3}}); }

std::vector<Graph> critical_upto(int max_n) {
  std::vector<Graph> out;
  for (const Graph& g : corpus_upto(max_n)) {
    if (g.m() > 0 && is_delta_critical(g)) out.push_back(g);
  }
  return out;
}

std::string first_violation(const Report& r) {
  return r.graph6 + " " + r.check + ": " + (r.violations.empty() ? "" : r.violations.front());
}

Outcome run_checks_over(const std::vector<Graph>& graphs, const std::vector<std::string>& ids) {
  CheckOptions opts;
  opts.budget = kColoringBudget;
  opts.seed = kSeed;
  std::uint64_t checked = 0, violations = 0;
  std::size_t sampled = 0;
  std::string witness;
  for (const Graph& g : graphs) {
    CheckContext ctx(g, opts);
    for (const auto& id : ids) {
      const Report r = run_check(id, ctx);
      checked += r.checked;
      violations += r.violations.size();
      sampled += r.sampled;
      if (!r.violations.empty() && witness.empty()) witness = first_violation(r);
    }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs, " << checked << " instances checked, " << violations << " violations, " << sampled
    << " sampled reports";
  if (!witness.empty()) d << ", first: " << witness;
  return {violations == 0 && checked > 0, d.str()};
}

// Criterion 1
Outcome chi_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto graphs = corpus_upto(7);
  std::size_t bad = 0;
  for (const Graph& g : graphs) {
    const int chi = chromatic_index(g);
    const bool vizing = g.m() == 0 ? chi == 0 : (chi == g.max_degree() || chi == g.max_degree() + 1);
    if (!vizing || chi != oracle::chromatic_index(g)) ++bad;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << graphs.size() << " graphs, " << bad << " disagreements, " << secs << "s of " << kChiOracleSecondsLimit << "s";
  return {bad == 0 && graphs.size() == 996 && secs < kChiOracleSecondsLimit, d.str()};
}

// Criterion 2
Outcome criticality_catalog() {
  const auto graphs = corpus_upto(8);
  std::vector<Graph> lib, def;
  std::size_t class_one_members = 0;
  for (const Graph& g : graphs) {
    const bool a = g.m() > 0 && is_delta_critical(g);
    const bool b = oracle::delta_critical_by_definition(g);
    if (a) lib.push_back(g);
    if (b) def.push_back(g);
    if (a && oracle::chromatic_index(g) == g.max_degree()) ++class_one_members;
  }
  bool same = lib.size() == def.size();
  for (std::size_t i = 0; same && i < lib.size(); ++i) same = lib[i] == def[i];
  std::string missing;
  for (const auto& [name, g] : {std::pair{"C3", graphs::cycle(3)}, std::pair{"C5", graphs::cycle(5)},
                                std::pair{"C7", graphs::cycle(7)}, std::pair{"K5", graphs::complete(5)}}) {
    if (!contains_iso(lib, g)) missing += std::string(missing.empty() ? "" : ",") + name;
  }
  const bool no_k4 = !contains_iso(lib, graphs::complete(4));
  const bool k5e = contains_iso(lib, graphs::complete(5).without_edge(0, 1));
  std::ostringstream d;
  d << graphs.size() << " graphs, " << lib.size() << " critical, both deciders " << (same ? "agree" : "DISAGREE")
    << ", required members missing: " << (missing.empty() ? "none" : missing) << ", K4 "
    << (no_k4 ? "absent" : "PRESENT") << ", class-1 members " << class_one_members << ", K5-e "
    << (k5e ? "present" : "absent");
  if (!missing.empty() && missing == "K5") d << "; K5 is class 2 but K5-e is too, chi'(K5-e)=" << oracle::chromatic_index(graphs::complete(5).without_edge(0, 1));
  return {same && missing.empty() && no_k4 && class_one_members == 0, d.str()};
}

// Criterion 5
Outcome splits_critical() {
  std::size_t total = 0, bad = 0;
  for (const Graph& g : {graphs::complete(4), graphs::octahedron()}) {
    for (Vertex v = 0; v < g.n(); ++v) {
      for (const auto& p : neighborhood_bipartitions(g, v)) {
        const Graph h = split_vertex(g, v, p);
        ++total;
        if (!is_delta_critical(h) || !oracle::delta_critical_by_definition(h)) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << total << " splits, " << bad << " not critical";
  return {bad == 0 && total == 4 * 3 + 6 * 7, d.str()};
}

// Criterion 6
Outcome overfull_theorem() {
  std::size_t in_scope = 0, exceptions = 0;
  std::vector<Graph> positives;
  std::uint64_t suite_violations = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& g : corpus::load_connected(n)) {
      if (g.m() == 0) continue;
      if (3 * g.max_degree() < 2 * g.n() + 5 * g.min_degree() - 12) continue;
      if (!is_delta_critical(g)) continue;
      ++in_scope;
      if (!is_overfull(g)) ++exceptions;
      positives.push_back(g);
      CheckOptions opts;
      opts.budget = kColoringBudget;
      suite_violations += run_check("overfull", g, opts).violations.size();
    }
  }
  const bool has_split = contains_iso(positives, split_k4());
  const bool has_k5 = contains_iso(positives, graphs::complete(5));
  std::ostringstream d;
  d << in_scope << " critical graphs meet the degree hypothesis, " << exceptions << " not overfull, "
    << suite_violations << " suite violations, split K4 " << (has_split ? "present" : "MISSING") << ", K5 "
    << (has_k5 ? "present" : "MISSING (not critical)");
  return {exceptions == 0 && suite_violations == 0 && has_split && has_k5, d.str()};
}

// Random proper coloring with some edges left uncolored, diversified by swaps.
Coloring random_coloring(const Graph& g, std::mt19937_64& rng, bool total) {
  Coloring c = vizing_plus_one_coloring(g);
  const int k = c.k();
  std::uniform_int_distribution<int> color(1, k);
  for (int step = 0; step < 8; ++step) {
    const Vertex v = std::uniform_int_distribution<int>(0, g.n() - 1)(rng);
    const Color a = color(rng), b = color(rng);
    if (a == b) continue;
    const Chain ch = chain_component(c, v, a, b);
    swap_component(c, ch);
  }
  if (!total) {
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) c.uncolor_edge(e);
    }
  }
  return c;
}

bool chain_shape_ok(const Coloring& c, const Chain& ch) {
  const auto& vs = ch.vertices;
  const std::size_t len = vs.size();
  const std::size_t edges = ch.kind == ChainKind::cycle ? len : len - 1;
  if (ch.kind == ChainKind::cycle && (len < 4 || len % 2 != 0)) return false;
  std::set<Vertex> distinct(vs.begin(), vs.end());
  if (distinct.size() != len) return false;
  for (std::size_t i = 0; i < edges; ++i) {
    const Color col = c.color(vs[i], vs[(i + 1) % len]);
    if (col != ch.alpha && col != ch.beta) return false;
    if (i > 0 && col == c.color(vs[i - 1], vs[i])) return false;
  }
  if (ch.kind == ChainKind::path) {
    // Ends cannot be extended.
    const ColorSet pair = ColorSet::of(ch.alpha) | ColorSet::of(ch.beta);
    for (Vertex end : {vs.front(), vs.back()}) {
      if ((c.missing(end) & pair).empty()) return false;
    }
  }
  return true;
}

// Criterion 7
Outcome kempe_properties() {
  std::mt19937_64 rng(20240601);
  auto pool = corpus_upto(7);
  pool.erase(std::remove_if(pool.begin(), pool.end(), [](const Graph& g) { return g.m() < 2; }), pool.end());
  pool.push_back(graphs::petersen());
  pool.push_back(graphs::complete(8));
  std::size_t involution = 0, propriety = 0, shape = 0, parity = 0, swaps = 0;
  for (int t = 0; t < kKempeCases; ++t) {
    const Graph& g = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const bool total = t % 2 == 0;
    const Coloring c = random_coloring(g, rng, total);
    std::uniform_int_distribution<int> color(1, c.k());
    const Color a = color(rng);
    Color b = color(rng);
    if (b == a) b = a % c.k() + 1;
    const Vertex v = std::uniform_int_distribution<int>(0, g.n() - 1)(rng);

    const Chain ch = chain_component(c, v, a, b);
    if (ch.kind == ChainKind::path && ch.is_endpoint(v)) {
      Coloring d = c;
      swap_at(d, v, a, b);
      ++swaps;
      if (!d.is_proper()) ++propriety;
      swap_at(d, v, a, b);
      if (!(d == c)) ++involution;
    }
    Coloring whole = c;
    swap_component(whole, ch);
    if (!whole.is_proper()) ++propriety;
    const Vertex w = std::uniform_int_distribution<int>(0, g.n() - 1)(rng);
    if (ch.kind == ChainKind::path && ch.contains(w) && w != v) {
      Coloring sub = c;
      try {
        swap_subchain(sub, v, w, a, b);
      } catch (const ChainError&) {
        if (!(sub == c)) ++propriety;
      }
      if (!sub.is_proper()) ++propriety;
    }
    if (!c.missing(v).empty()) {
      Coloring seq = c;
      const Color colors[] = {c.missing(v).first(), a, b};
      try {
        swap_sequence(seq, v, colors);
      } catch (const ChainError&) {
      }
      if (!seq.is_proper()) ++propriety;
    }

    std::size_t component_edges = 0, colored_pair = 0;
    for (const Chain& comp : chain_components(c, a, b)) {
      if (!chain_shape_ok(c, comp)) ++shape;
      component_edges += static_cast<std::size_t>(comp.edge_count());
    }
    for (EdgeId e = 0; e < g.m(); ++e) colored_pair += c.color(e) == a || c.color(e) == b;
    if (component_edges != colored_pair) ++shape;

    if (total) {
      for (Color col = 1; col <= c.k(); ++col) {
        int missing = 0;
        for (Vertex u = 0; u < g.n(); ++u) missing += c.missing(u).contains(col);
        if ((missing - g.n()) % 2 != 0) ++parity;
      }
    }
  }
  std::ostringstream d;
  d << kKempeCases << " cases (" << swaps << " endpoint swaps): involution failures " << involution
    << ", propriety failures " << propriety << ", chain shape failures " << shape << ", parity failures " << parity;
  return {involution + propriety + shape + parity == 0, d.str()};
}

// Criterion 8
Outcome enumerator_equivalence() {
  const auto critical = critical_upto(6);
  std::size_t colorings = 0, mismatches = 0, kpaths = 0, brooms = 0, forks = 0;
  for (const Graph& g : critical) {
    for (EdgeId e = 0; e < g.m(); ++e) {
      const Vertex x = g.edge(e).u, y = g.edge(e).v;
      for (const Coloring& c : enumerate_colorings(g, g.max_degree(), EnumMode::full, 0, e).colorings) {
        ++colorings;
        std::vector<std::vector<Vertex>> lib;
        for (const auto& p : enumerate_kierstead_paths(c, e, g.n())) lib.push_back(p.vertices);
        std::sort(lib.begin(), lib.end());
        const auto kp = oracle::kierstead_paths(c, e, g.n());
        kpaths += kp.size();
        mismatches += lib != kp;

        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
          std::vector<std::vector<Vertex>> bl;
          for (const auto& br : enumerate_short_brooms(c, a, b, BroomMode::all)) {
            if (br.bristles.empty()) continue;
            std::vector<Vertex> w{br.z};
            w.insert(w.end(), br.bristles.begin(), br.bristles.end());
            bl.push_back(w);
          }
          std::sort(bl.begin(), bl.end());
          const auto ob = oracle::short_brooms(c, a, b);
          brooms += ob.size();
          mismatches += bl != ob;
        }

        std::vector<std::vector<Vertex>> fl;
        for (const Fork& f : find_forks(c, e)) fl.push_back({f.x, f.y, f.z, f.s1, f.s2, f.t1, f.t2});
        std::sort(fl.begin(), fl.end());
        const auto of = oracle::forks(c, e);
        forks += of.size();
        mismatches += fl != of;
      }
    }
  }
  // No critical graph this small has a fork, so forks are also compared
  // on random colorings of arbitrary graphs with one edge uncolored.
  std::mt19937_64 rng(4242);
  auto pool = corpus::load_connected(7);
  const auto eight = corpus::load_connected(8);
  pool.insert(pool.end(), eight.begin(), eight.begin() + 2000);
  std::size_t random_forks = 0;
  for (int t = 0; t < 3000; ++t) {
    const Graph& g = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    Coloring c = random_coloring(g, rng, true);
    const EdgeId e = std::uniform_int_distribution<int>(0, g.m() - 1)(rng);
    c.uncolor_edge(e);
    std::vector<std::vector<Vertex>> fl;
    for (const Fork& f : find_forks(c, e)) fl.push_back({f.x, f.y, f.z, f.s1, f.s2, f.t1, f.t2});
    std::sort(fl.begin(), fl.end());
    const auto of = oracle::forks(c, e);
    random_forks += of.size();
    mismatches += fl != of;
  }
  std::ostringstream d;
  d << critical.size() << " critical graphs, " << colorings << " colorings, " << kpaths << " Kierstead paths, "
    << brooms << " brooms, " << forks << " forks (" << random_forks << " more on random colorings), " << mismatches << " mismatches";
  return {mismatches == 0 && colorings > 0 && brooms > 0 && random_forks > 0, d.str()};
}

Statement random_statement(const Coloring& c, std::mt19937_64& rng) {
  const Graph& g = c.graph();
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Statement s;
  const Edge e = g.edge(pick(0, g.m() - 1));
  switch (pick(0, 5)) {
    case 0:
      s.kind = StmtKind::subchain_swap;
      s.a = pick(0, g.n() - 1);
      s.b = pick(0, g.n() - 1);
      s.colors = {pick(1, c.k()), pick(1, c.k())};
      break;
    case 1:
      s.kind = StmtKind::swap_at;
      s.a = pick(0, g.n() - 1);
      s.colors = {pick(1, c.k()), pick(1, c.k())};
      break;
    case 2: {
      s.kind = StmtKind::swap_sequence;
      s.a = pick(0, g.n() - 1);
      const int len = pick(2, 4);
      s.colors.push_back(c.missing(s.a).empty() ? 1 : c.missing(s.a).first());
      for (int i = 1; i < len; ++i) s.colors.push_back(pick(1, c.k()));
      break;
    }
    case 3:
      s.kind = StmtKind::recolor;
      s.a = e.u;
      s.b = e.v;
      s.colors = {c.color(e.u, e.v) > 0 ? c.color(e.u, e.v) : 1, pick(1, c.k())};
      break;
    case 4:
      s.kind = StmtKind::color;
      s.a = e.u;
      s.b = e.v;
      s.colors = {pick(1, c.k())};
      break;
    default:
      s.kind = StmtKind::uncolor;
      s.a = e.u;
      s.b = e.v;
      break;
  }
  return s;
}

// Criterion 9
Outcome round_trips() {
  std::size_t g6_total = 0, g6_bad = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : corpus::load_connected(n)) {
      ++g6_total;
      const std::string text = encode_graph6(g);
      if (!(decode_graph6(text) == g) || encode_graph6(decode_graph6(text)) != text) ++g6_bad;
    }
  }

  std::mt19937_64 rng(77);
  const auto pool = critical_upto(7);
  std::size_t statements = 0, render_bad = 0, format_bad = 0, inverse_bad = 0;
  for (int t = 0; t < kScriptCases; ++t) {
    const Graph& g = pool[static_cast<std::size_t>(t) % pool.size()];
    const EdgeId skip = std::uniform_int_distribution<int>(0, g.m() - 1)(rng);
    const Coloring start = *find_coloring(g, g.max_degree(), skip);
    ScriptProgram program;
    Coloring cur = start;
    const int target = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int tries = 0; tries < 200 && static_cast<int>(program.statements.size()) < target; ++tries) {
      ScriptProgram one;
      one.statements.push_back(random_statement(cur, rng));
      try {
        cur = execute_script(one, cur).coloring;
        program.statements.push_back(one.statements.front());
      } catch (const ScriptExecutionError&) {
      }
    }
    if (program.statements.empty()) program = parse_script("swap@ 0 (1/1)");
    statements += program.statements.size();

    const std::string rendered = render_script(program);
    const ScriptProgram reparsed = parse_script(rendered);
    if (!(reparsed == program) || render_script(reparsed) != rendered) ++render_bad;
    if (!(parse_script(format_script(program)) == program)) ++format_bad;

    const ExecutionResult run = execute_script(program, start);
    const ExecutionResult back = execute_script(inverse_script(program, run), run.coloring);
    if (!(back.coloring == start)) ++inverse_bad;
  }
  std::ostringstream d;
  d << g6_total << " graph6 round trips (" << g6_bad << " bad); " << kScriptCases << " scripts, " << statements
    << " statements: render fixed-point failures " << render_bad << ", linear-form failures " << format_bad
    << ", inverse failures " << inverse_bad;
  return {g6_bad == 0 && g6_total == 12113 && render_bad + format_bad + inverse_bad == 0, d.str()};
}

// Criterion 10
Outcome determinism() {
  std::string input;
  for (const Graph& g : critical_upto(7)) input += encode_graph6(g) + "\n";
  input += "C~\nEhEG\n\nnot-a-graph\n" + encode_graph6(graphs::petersen()) + "\n";
  auto scan = [&](std::vector<std::string> args) {
    args.insert(args.begin(), {"critcheck", "scan"});
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  std::size_t runs = 0, differing = 0;
  for (const std::vector<std::string>& flags :
       {std::vector<std::string>{"--budget", "5", "--seed", "9"},
        std::vector<std::string>{"--budget", "5", "--seed", "9", "--format", "json", "--mode", "maximal"}}) {
    std::string reference;
    for (const char* jobs : {"1", "2", "4", "1", "3", "8"}) {
      auto args = flags;
      args.insert(args.end(), {"--jobs", jobs});
      const std::string out = scan(args);
      ++runs;
      if (reference.empty()) {
        reference = out;
      } else if (out != reference) {
        ++differing;
      }
    }
  }
  std::ostringstream d;
  d << runs << " scans at 1..8 workers, " << differing << " differ from the first";
  return {differing == 0, d.str()};
}

}  // namespace

int main() {
  report(1, "chromatic index agrees with the exhaustive oracle on connected graphs n<=7", chi_oracle);
  report(2, "criticality catalog for n<=8, decided twice", criticality_catalog);
  report(3, "broom multiplicity bound on critical graphs n<=8",
         [] { return run_checks_over(critical_upto(8), {"broom_main"}); });
  report(4, "adjacency, multifan, Kierstead and broom lemmas on critical graphs n<=8", [] {
    return run_checks_over(critical_upto(8), {"val", "multifan", "kierstead", "broom_elementary"});
  });
  report(5, "every vertex split of K4 and the octahedron is critical", splits_critical);
  report(6, "critical graphs n<=9 meeting the degree bound are overfull", overfull_theorem);
  report(7, "Kempe engine properties on randomized cases", kempe_properties);
  report(8, "structure enumerators match brute force on critical graphs n<=6", enumerator_equivalence);
  report(9, "graph6 and script round trips", round_trips);
  report(10, "scan output is byte-identical across runs and worker counts", determinism);
  std::printf("%d of 10 criteria failed, %d unexpected outcomes\n", failures, unexpected);
  return unexpected == 0 ? 0 : 1;
}
