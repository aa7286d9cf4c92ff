#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critcheck/coloring.hpp"

namespace critcheck {

/// Kempe-operation scripts.
///
/// Linear form, statements separated by `;`, `#` starts a line comment:
///   swap [a,b](α/β)          swap α and β on the subchain between a and b
///   swap@ x (α/β)            Kempe change on the chain ending at x
///   seqswap@ x (β0,...,βt)   (β0,β1)-(β1,β2)-... swaps at x
///   recolor u-v: a->b
///   color u-v: c
///   uncolor u-v
///
/// Matrix form, two bracketed rows of `|`-separated cells, operand on top and
/// operation below:
///   [ P_[a,b](α,β) | P_x(α,β) | x          | u-v  | u-v | u-v ]
///   [ α/β          | α/β      | β0-β1-..-βt | a->b | c   | -   ]
enum class StmtKind { subchain_swap, swap_at, swap_sequence, recolor, color, uncolor };

struct SourcePos {
  int line = 1;
  int column = 1;
};

struct Statement {
  StmtKind kind = StmtKind::color;
  /// Subchain endpoints, the swap vertex (a only), or the edge endpoints.
  Vertex a = 0;
  Vertex b = 0;
  /// (α, β) | β0..βt | (from, to) | (c) | empty for uncolor.
  std::vector<Color> colors;
  SourcePos pos;

  /// Source positions are not part of the meaning.
  bool operator==(const Statement& o) const {
    return kind == o.kind && a == o.a && b == o.b && colors == o.colors;
  }
};

struct ScriptProgram {
  std::vector<Statement> statements;
  bool operator==(const ScriptProgram&) const = default;
};

class ScriptSyntaxError : public std::runtime_error {
 public:
  ScriptSyntaxError(const std::string& what, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class ScriptExecutionError : public std::runtime_error {
 public:
  ScriptExecutionError(const std::string& what, std::size_t step);
  /// Zero-based index of the failing statement.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Accepts either form. Throws ScriptSyntaxError.
ScriptProgram parse_script(std::string_view text);

/// Two-row matrix rendering.
std::string render_script(const ScriptProgram& program);
/// One statement per `;` in the linear form.
std::string format_script(const ScriptProgram& program);
std::string format_statement(const Statement& s);

struct TraceStep {
  std::size_t index = 0;
  std::string statement;
  std::uint64_t hash = 0;  // coloring_hash after the step
};

struct ExecutionResult {
  Coloring coloring;
  std::vector<TraceStep> trace;
  /// For each statement, the color an `uncolor` removed (0 otherwise).
  std::vector<Color> removed;
};

/// Applies the statements in order, each fully validated against the current
/// coloring. Throws ScriptExecutionError naming the failing step.
ExecutionResult execute_script(const ScriptProgram& program, const Coloring& start);

/// Program undoing an execution: statements reversed, swaps repeated,
/// recolorings reversed, color and uncolor exchanged.
ScriptProgram inverse_script(const ScriptProgram& program, const ExecutionResult& run);

/// "step <i>: <statement> hash=<hex>" per line.
std::string format_trace(const std::vector<TraceStep>& trace);

}  // namespace critcheck
