#include <doctest.h>

#include <fstream>
#include <sstream>

#include "critcheck/kempe.hpp"
#include "critcheck/script.hpp"

using namespace critcheck;

namespace {

Coloring c5_minus(const Graph& c5) {
  Coloring c(c5, 2);
  c.color_edge(c5.edge_id(1, 2), 1);
  c.color_edge(c5.edge_id(2, 3), 2);
  c.color_edge(c5.edge_id(3, 4), 1);
  c.color_edge(c5.edge_id(4, 0), 2);
  return c;
}

SourcePos error_pos(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ScriptSyntaxError& e) {
    return e.pos();
  }
  FAIL("no syntax error for " << text);
  return {};
}

}  // namespace

TEST_CASE("linear statements") {
  const ScriptProgram p = parse_script("recolor 2-3: 2->5; color 0-1: 2");
  REQUIRE(p.statements.size() == 2);
  CHECK(p.statements[0].kind == StmtKind::recolor);
  CHECK(p.statements[0].colors == std::vector<Color>{2, 5});
  CHECK(p.statements[1].kind == StmtKind::color);
  const ScriptProgram s = parse_script("swap [4,0](1/2)");
  REQUIRE(s.statements.size() == 1);
  CHECK(s.statements[0].kind == StmtKind::subchain_swap);
  CHECK(s.statements[0].a == 4);
  CHECK(s.statements[0].b == 0);
  const ScriptProgram q = parse_script("# comment\nseqswap@ 2 (1,3,4);\nuncolor 1-2;\nswap@ 0 (1/2);");
  CHECK(q.statements.size() == 3);
  CHECK(q.statements[0].colors == std::vector<Color>{1, 3, 4});
}

TEST_CASE("syntax errors carry positions") {
  const SourcePos comma = error_pos("swap@ 3 (1/1,");
  CHECK(comma.line == 1);
  CHECK(comma.column == 13);
  CHECK(error_pos("color 0-1: 2;\ncolor 1-x: 1").line == 2);
  CHECK_THROWS_AS(parse_script(""), ScriptSyntaxError);
  CHECK_THROWS_AS(parse_script("color 0-1: 0"), ScriptSyntaxError);
  CHECK_THROWS_AS(parse_script("seqswap@ 0 (1)"), ScriptSyntaxError);
  CHECK_THROWS_AS(parse_script("recolor 0-1: 1-2"), ScriptSyntaxError);
  CHECK_THROWS_AS(parse_script("paint 0-1: 1"), ScriptSyntaxError);
  CHECK_THROWS_AS(parse_script("[ 0-1 ]\n[ 2 | 3 ]"), ScriptSyntaxError);
  try {
    parse_script("swap@ 3 (1/1,");
  } catch (const ScriptSyntaxError& e) {
    CHECK(std::string(e.what()).rfind("line 1 column 13", 0) == 0);
  }
}

TEST_CASE("execution") {
  const Graph c5 = graphs::cycle(5);
  const Coloring start = c5_minus(c5);
  const ExecutionResult r = execute_script(parse_script("swap@ 0 (1/2)"), start);
  CHECK(r.coloring.is_proper());
  CHECK(r.coloring.missing(0) == ColorSet::of(2));
  CHECK(r.trace.size() == 1);
  CHECK(r.trace[0].hash == coloring_hash(r.coloring));
  CHECK(execute_script(parse_script("swap@ 0 (1/1)"), start).coloring == start);
  try {
    execute_script(parse_script("swap@ 0 (1/1); color 1-2: 1"), start);
    FAIL("expected failure");
  } catch (const ScriptExecutionError& e) {
    CHECK(e.step() == 1);
  }
  CHECK_THROWS_AS(execute_script(parse_script("color 0-2: 1"), start), ScriptExecutionError);
  CHECK_THROWS_AS(execute_script(parse_script("color 0-9: 1"), start), ScriptExecutionError);
  CHECK_THROWS_AS(execute_script(parse_script("swap [4,0](1/2)"), start), ScriptExecutionError);
}

TEST_CASE("execution matches the engine") {
  const Graph c5 = graphs::cycle(5);
  const Coloring start = c5_minus(c5);
  Coloring expected = start;
  const Color seq[] = {1, 2};
  swap_sequence(expected, 0, seq);
  expected.uncolor_edge(c5.edge_id(1, 2));
  expected.color_edge(c5.edge_id(0, 1), 2);
  const ExecutionResult r = execute_script(parse_script("seqswap@ 0 (1,2); uncolor 1-2; color 0-1: 2"), start);
  CHECK(r.coloring == expected);
  CHECK(r.removed == std::vector<Color>{0, 2, 0});
}

TEST_CASE("rendering") {
  const ScriptProgram one = parse_script("color 0-1: 3");
  const std::string text = render_script(one);
  CHECK(text.find("0-1") != std::string::npos);
  CHECK(text.find("3") != std::string::npos);
  CHECK(parse_script(text) == one);
  const ScriptProgram mixed =
      parse_script("swap [4,0](1/2); swap@ 3 (2/5); seqswap@ 1 (3,1,2); recolor 1-2: 4->1; color 0-1: 2; uncolor 3-4");
  const std::string m = render_script(mixed);
  CHECK(parse_script(m) == mixed);
  CHECK(render_script(parse_script(m)) == m);
  CHECK(parse_script(format_script(mixed)) == mixed);
  CHECK(format_statement(mixed.statements[0]) == "swap [4,0](1/2)");
  CHECK(format_statement(mixed.statements[3]) == "recolor 1-2: 4->1");
}

TEST_CASE("matrix cells must agree") {
  CHECK_THROWS_AS(parse_script("[ P_[0,1](1,2) ]\n[ 2/3 ]"), ScriptSyntaxError);
  const ScriptProgram p = parse_script("[ P_[0,1](1,2) | P_3(2,4) | 5 ]\n[ 1/2 | 2/4 | 1-3-2 ]");
  REQUIRE(p.statements.size() == 3);
  CHECK(p.statements[1].kind == StmtKind::swap_at);
  CHECK(p.statements[2].kind == StmtKind::swap_sequence);
  CHECK(p.statements[2].colors == std::vector<Color>{1, 3, 2});
}

TEST_CASE("inverse restores the start") {
  const Graph c5 = graphs::cycle(5);
  const Coloring two = c5_minus(c5);
  const Coloring start = Coloring::from_assignment(c5, 3, two.assignment());
  const ScriptProgram p = parse_script("seqswap@ 0 (1,2,3); color 0-1: 3; uncolor 3-4; recolor 2-3: 1->3");
  const ExecutionResult run = execute_script(p, start);
  const ScriptProgram inv = inverse_script(p, run);
  CHECK(execute_script(inv, run.coloring).coloring == start);
}

TEST_CASE("trace format") {
  const Graph c5 = graphs::cycle(5);
  const ExecutionResult r = execute_script(parse_script("swap@ 0 (1/2)"), c5_minus(c5));
  const std::string t = format_trace(r.trace);
  CHECK(t.rfind("step 0: swap@ 0 (1/2) hash=", 0) == 0);
}

TEST_CASE("bundled scripts parse and render") {
  for (const char* name : {"bristle_exchange.ks", "handle_exchange.ks"}) {
    std::ifstream file(std::string(CRITCHECK_SCRIPTS_DIR) + "/" + name);
    REQUIRE(file);
    std::stringstream text;
    text << file.rdbuf();
    const ScriptProgram p = parse_script(text.str());
    CHECK(p.statements.size() >= 4);
    CHECK(p.statements.back().kind == StmtKind::color);
    const std::string matrix = render_script(p);
    CHECK(parse_script(matrix) == p);
    CHECK(render_script(parse_script(matrix)) == matrix);
  }
}
