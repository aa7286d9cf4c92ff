#include "critcheck/script.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "critcheck/kempe.hpp"

namespace critcheck {

ScriptSyntaxError::ScriptSyntaxError(const std::string& what, SourcePos pos)
    : std::runtime_error("line " + std::to_string(pos.line) + " column " + std::to_string(pos.column) +
                         ": " + what),
      pos_(pos) {}

ScriptExecutionError::ScriptExecutionError(const std::string& what, std::size_t step)
    : std::runtime_error(what), step_(step) {}

namespace {

constexpr long kMaxLiteral = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScriptProgram parse() {
    ScriptProgram program;
    skip();
    if (peek() == '[') {
      while (!at_end()) {
        parse_matrix(program);
        skip();
        if (peek() == ';') advance();
        skip();
      }
    } else {
      while (!at_end()) {
        program.statements.push_back(parse_statement());
        skip();
        if (at_end()) break;
        expect(';', "';' between statements");
        skip();
      }
    }
    if (program.statements.empty()) fail("empty script");
    return program;
  }

 private:
  // --- lexical helpers -----------------------------------------------------

  bool at_end() {
    skip();
    return i_ >= text_.size();
  }

  char peek() const { return i_ < text_.size() ? text_[i_] : '\0'; }
  char peek_after() const { return i_ + 1 < text_.size() ? text_[i_ + 1] : '\0'; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++i_;
  }

  void skip() {
    while (i_ < text_.size()) {
      const char ch = text_[i_];
      if (ch == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  SourcePos here() const { return {line_, column_}; }

  [[noreturn]] void fail(const std::string& what) const { throw ScriptSyntaxError(what, here()); }
  [[noreturn]] static void fail_at(const std::string& what, SourcePos pos) { throw ScriptSyntaxError(what, pos); }

  std::string describe_next() const {
    if (i_ >= text_.size()) return "end of input";
    return std::string("'") + peek() + "'";
  }

  void expect(char ch, const std::string& what) {
    skip();
    if (peek() != ch) fail("expected " + what + ", found " + describe_next());
    advance();
  }

  bool accept(char ch) {
    skip();
    if (peek() != ch) return false;
    advance();
    return true;
  }

  std::string word() {
    skip();
    std::string out;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  int number(const std::string& what) {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + what + ", found " + describe_next());
    const SourcePos start = here();
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxLiteral) fail_at(what + " literal too large", start);
      advance();
    }
    return static_cast<int>(value);
  }

  Vertex vertex() { return number("vertex"); }

  Color color() {
    skip();
    const SourcePos start = here();
    if (peek() == '-' && std::isdigit(static_cast<unsigned char>(peek_after()))) {
      fail_at("nonpositive color literal", start);
    }
    const int c = number("color");
    if (c <= 0) fail_at("nonpositive color literal", start);
    return c;
  }

  // u-v
  void edge(Statement& s) {
    skip();
    const SourcePos start = here();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed edge token, found " + describe_next());
    s.a = vertex();
    skip();
    if (peek() != '-') fail_at("malformed edge token", start);
    advance();
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at("malformed edge token", start);
    s.b = vertex();
  }

  void arrow() {
    skip();
    if (peek() != '-' || peek_after() != '>') fail("expected '->', found " + describe_next());
    advance();
    advance();
  }

  // --- linear form ----------------------------------------------------------

  Statement parse_statement() {
    skip();
    Statement s;
    s.pos = here();
    const std::string kw = word();
    if (kw == "swap") {
      if (accept('@')) {
        s.kind = StmtKind::swap_at;
        s.a = vertex();
        expect('(', "'('");
        s.colors.push_back(color());
        expect('/', "'/'");
        s.colors.push_back(color());
        expect(')', "')'");
      } else if (accept('[')) {
        s.kind = StmtKind::subchain_swap;
        s.a = vertex();
        expect(',', "','");
        s.b = vertex();
        expect(']', "']'");
        expect('(', "'('");
        s.colors.push_back(color());
        expect('/', "'/'");
        s.colors.push_back(color());
        expect(')', "')'");
      } else {
        fail("expected '@' or '[' after swap, found " + describe_next());
      }
    } else if (kw == "seqswap") {
      s.kind = StmtKind::swap_sequence;
      expect('@', "'@'");
      s.a = vertex();
      expect('(', "'('");
      s.colors.push_back(color());
      while (accept(',')) s.colors.push_back(color());
      expect(')', "')'");
      if (s.colors.size() < 2) fail_at("swap sequence needs at least two colors", s.pos);
    } else if (kw == "recolor") {
      s.kind = StmtKind::recolor;
      edge(s);
      expect(':', "':'");
      s.colors.push_back(color());
      arrow();
      s.colors.push_back(color());
    } else if (kw == "color") {
      s.kind = StmtKind::color;
      edge(s);
      expect(':', "':'");
      s.colors.push_back(color());
    } else if (kw == "uncolor") {
      s.kind = StmtKind::uncolor;
      edge(s);
    } else if (kw.empty()) {
      fail_at("expected statement, found " + describe_next(), s.pos);
    } else {
      fail_at("unknown statement '" + kw + "'", s.pos);
    }
    return s;
  }

  // --- matrix form ----------------------------------------------------------

  Statement top_cell() {
    skip();
    Statement s;
    s.pos = here();
    if (peek() == 'P') {
      advance();
      expect('_', "'_'");
      if (accept('[')) {
        s.kind = StmtKind::subchain_swap;
        s.a = vertex();
        expect(',', "','");
        s.b = vertex();
        expect(']', "']'");
      } else {
        s.kind = StmtKind::swap_at;
        s.a = vertex();
      }
      expect('(', "'('");
      s.colors.push_back(color());
      expect(',', "','");
      s.colors.push_back(color());
      expect(')', "')'");
      return s;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected operand, found " + describe_next());
    s.a = vertex();
    skip();
    if (peek() == '-') {
      advance();
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at("malformed edge token", s.pos);
      s.b = vertex();
      s.kind = StmtKind::color;  // refined by the bottom cell
    } else {
      s.kind = StmtKind::swap_sequence;
    }
    return s;
  }

  void bottom_cell(Statement& s) {
    skip();
    const SourcePos start = here();
    switch (s.kind) {
      case StmtKind::subchain_swap:
      case StmtKind::swap_at: {
        const Color a = color();
        expect('/', "'/'");
        const Color b = color();
        if (a != s.colors[0] || b != s.colors[1]) fail_at("operation colors differ from the operand", start);
        return;
      }
      case StmtKind::swap_sequence: {
        s.colors.push_back(color());
        while (accept('-')) s.colors.push_back(color());
        if (s.colors.size() < 2) fail_at("swap sequence needs at least two colors", start);
        return;
      }
      default: {
        if (peek() == '-' && !std::isdigit(static_cast<unsigned char>(peek_after())) && peek_after() != '>') {
          advance();
          s.kind = StmtKind::uncolor;
          return;
        }
        const Color c = color();
        skip();
        if (peek() == '-' && peek_after() == '>') {
          arrow();
          s.kind = StmtKind::recolor;
          s.colors = {c, color()};
        } else {
          s.kind = StmtKind::color;
          s.colors = {c};
        }
        return;
      }
    }
  }

  void parse_matrix(ScriptProgram& program) {
    const SourcePos start = here();
    std::vector<Statement> cells;
    expect('[', "'['");
    cells.push_back(top_cell());
    while (accept('|')) cells.push_back(top_cell());
    expect(']', "']' closing the operand row");
    expect('[', "'[' opening the operation row");
    std::size_t filled = 0;
    do {
      if (filled == cells.size()) fail("operation row has more cells than the operand row");
      bottom_cell(cells[filled++]);
    } while (accept('|'));
    if (filled != cells.size()) fail_at("operation row has fewer cells than the operand row", start);
    expect(']', "']' closing the operation row");
    program.statements.insert(program.statements.end(), cells.begin(), cells.end());
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string join_colors(const std::vector<Color>& cs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(cs[i]);
  }
  return out;
}

std::string edge_cell(const Statement& s) { return std::to_string(s.a) + "-" + std::to_string(s.b); }

std::string top_text(const Statement& s) {
  switch (s.kind) {
    case StmtKind::subchain_swap:
      return "P_[" + std::to_string(s.a) + "," + std::to_string(s.b) + "](" + join_colors(s.colors, ",") + ")";
    case StmtKind::swap_at:
      return "P_" + std::to_string(s.a) + "(" + join_colors(s.colors, ",") + ")";
    case StmtKind::swap_sequence:
      return std::to_string(s.a);
    default:
      return edge_cell(s);
  }
}

std::string bottom_text(const Statement& s) {
  switch (s.kind) {
    case StmtKind::subchain_swap:
    case StmtKind::swap_at:
      return join_colors(s.colors, "/");
    case StmtKind::swap_sequence:
      return join_colors(s.colors, "-");
    case StmtKind::recolor:
      return std::to_string(s.colors[0]) + "->" + std::to_string(s.colors[1]);
    case StmtKind::color:
      return std::to_string(s.colors[0]);
    case StmtKind::uncolor:
      return "-";
  }
  return {};
}

EdgeId require_edge(const Graph& g, const Statement& s) {
  const EdgeId e = g.edge_id(s.a, s.b);
  if (e < 0) throw ColoringError("no edge " + edge_cell(s));
  return e;
}

}  // namespace

ScriptProgram parse_script(std::string_view text) { return Parser(text).parse(); }

std::string format_statement(const Statement& s) {
  switch (s.kind) {
    case StmtKind::subchain_swap:
      return "swap [" + std::to_string(s.a) + "," + std::to_string(s.b) + "](" + join_colors(s.colors, "/") + ")";
    case StmtKind::swap_at:
      return "swap@ " + std::to_string(s.a) + " (" + join_colors(s.colors, "/") + ")";
    case StmtKind::swap_sequence:
      return "seqswap@ " + std::to_string(s.a) + " (" + join_colors(s.colors, ",") + ")";
    case StmtKind::recolor:
      return "recolor " + edge_cell(s) + ": " + std::to_string(s.colors[0]) + "->" + std::to_string(s.colors[1]);
    case StmtKind::color:
      return "color " + edge_cell(s) + ": " + std::to_string(s.colors[0]);
    case StmtKind::uncolor:
      return "uncolor " + edge_cell(s);
  }
  return {};
}

std::string format_script(const ScriptProgram& program) {
  std::string out;
  for (const Statement& s : program.statements) {
    if (!out.empty()) out += ";\n";
    out += format_statement(s);
  }
  return out + "\n";
}

std::string render_script(const ScriptProgram& program) {
  std::vector<std::string> top;
  std::vector<std::string> bottom;
  for (const Statement& s : program.statements) {
    top.push_back(top_text(s));
    bottom.push_back(bottom_text(s));
  }
  auto row = [&](const std::vector<std::string>& cells, const std::vector<std::string>& other) {
    std::string out = "[ ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += " | ";
      std::string cell = cells[i];
      cell.resize(std::max(cells[i].size(), other[i].size()), ' ');
      out += cell;
    }
    return out + " ]\n";
  };
  return row(top, bottom) + row(bottom, top);
}

ExecutionResult execute_script(const ScriptProgram& program, const Coloring& start) {
  ExecutionResult run{start, {}, std::vector<Color>(program.statements.size(), kUncolored)};
  Coloring& c = run.coloring;
  const Graph& g = c.graph();
  for (std::size_t i = 0; i < program.statements.size(); ++i) {
    const Statement& s = program.statements[i];
    try {
      if (s.a < 0 || s.a >= g.n() || s.b < 0 || s.b >= g.n()) throw ColoringError("vertex out of range");
      switch (s.kind) {
        case StmtKind::subchain_swap:
          swap_subchain(c, s.a, s.b, s.colors[0], s.colors[1]);
          break;
        case StmtKind::swap_at:
          swap_at(c, s.a, s.colors[0], s.colors[1]);
          break;
        case StmtKind::swap_sequence:
          swap_sequence(c, s.a, s.colors);
          break;
        case StmtKind::recolor:
          c.recolor_edge(require_edge(g, s), s.colors[0], s.colors[1]);
          break;
        case StmtKind::color:
          c.color_edge(require_edge(g, s), s.colors[0]);
          break;
        case StmtKind::uncolor: {
          const EdgeId e = require_edge(g, s);
          if (!c.is_colored(e)) throw ColoringError("edge " + edge_cell(s) + " is already uncolored");
          run.removed[i] = c.color(e);
          c.uncolor_edge(e);
          break;
        }
      }
    } catch (const std::exception& ex) {
      throw ScriptExecutionError("step " + std::to_string(i) + " (" + format_statement(s) + "): " + ex.what(), i);
    }
    run.trace.push_back({i, format_statement(s), coloring_hash(c)});
  }
  return run;
}

ScriptProgram inverse_script(const ScriptProgram& program, const ExecutionResult& run) {
  if (run.removed.size() != program.statements.size()) {
    throw std::invalid_argument("execution result does not belong to this program");
  }
  ScriptProgram inv;
  for (std::size_t i = program.statements.size(); i-- > 0;) {
    Statement s = program.statements[i];
    switch (s.kind) {
      case StmtKind::subchain_swap:
      case StmtKind::swap_at:
        inv.statements.push_back(s);
        break;
      case StmtKind::swap_sequence:
        for (std::size_t j = s.colors.size() - 1; j > 0; --j) {
          Statement step = s;
          step.kind = StmtKind::swap_at;
          step.colors = {s.colors[j - 1], s.colors[j]};
          inv.statements.push_back(step);
        }
        break;
      case StmtKind::recolor:
        std::swap(s.colors[0], s.colors[1]);
        inv.statements.push_back(s);
        break;
      case StmtKind::color:
        s.kind = StmtKind::uncolor;
        s.colors.clear();
        inv.statements.push_back(s);
        break;
      case StmtKind::uncolor:
        s.kind = StmtKind::color;
        s.colors = {run.removed[i]};
        inv.statements.push_back(s);
        break;
    }
  }
  return inv;
}

std::string format_trace(const std::vector<TraceStep>& trace) {
  std::string out;
  char hex[17];
  for (const TraceStep& t : trace) {
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(t.hash));
    out += "step " + std::to_string(t.index) + ": " + t.statement + " hash=" + hex + "\n";
  }
  return out;
}

}  // namespace critcheck
