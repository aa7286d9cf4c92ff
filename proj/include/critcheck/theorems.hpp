#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critcheck/chromatic.hpp"
#include "critcheck/coloring.hpp"
#include "critcheck/graph.hpp"
#include "critcheck/structures.hpp"

namespace critcheck {

struct CheckOptions {
  /// Canonical colorings of G - e examined per edge; beyond this the set is
  /// sampled. 0 = always enumerate exhaustively.
  std::size_t budget = 10000;
  std::uint64_t seed = 1;
  BroomMode broom_mode = BroomMode::all;
  /// Also check the fork lemma in its for-all-colorings form (only when the
  /// coloring set is exhaustive).
  bool fork_universal = false;
  std::size_t split_cap = 4096;
};

/// Outcome of one check on one graph.
struct Report {
  std::string check;
  std::string graph6;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  /// Some coloring set was sampled rather than enumerated.
  bool sampled = false;
  double millis = 0.0;

  bool operator==(const Report& o) const {
    return check == o.check && graph6 == o.graph6 && checked == o.checked && skipped == o.skipped &&
           violations == o.violations && notes == o.notes && sampled == o.sampled;
  }
};

/// Canonical colorings of G - edge, stored as edge-order color words.
struct ColoringSample {
  EdgeId edge = kNoEdge;
  int k = 0;
  std::vector<std::vector<std::uint8_t>> words;
  /// Every canonical coloring is present.
  bool exhaustive = true;
};

/// Exhaustive when the canonical count is at most `budget`; otherwise
/// `budget` distinct canonical colorings found by seeded randomized descents.
ColoringSample sample_colorings(const Graph& g, int k, EdgeId skip, std::size_t budget,
                                std::uint64_t seed);

Coloring materialize(const Graph& g, int k, const std::vector<std::uint8_t>& word);

/// Per-graph memo of the expensive facts the checks share.
class CheckContext {
 public:
  CheckContext(const Graph& g, CheckOptions options = {});

  const Graph& graph() const { return graph_; }
  const CheckOptions& options() const { return options_; }
  const std::string& graph6() const { return graph6_; }

  int chromatic_index();
  bool is_class_two();
  bool is_delta_critical();
  bool is_critical_edge(EdgeId e);
  /// Δ-colorings of G - e (empty when e is not critical).
  const ColoringSample& colorings_without(EdgeId e);

 private:
  Graph graph_;
  CheckOptions options_;
  std::string graph6_;
  std::optional<int> chi_;
  std::optional<bool> delta_critical_;
  std::optional<std::vector<bool>> critical_;
  std::map<EdgeId, ColoringSample> samples_;
};

// Each check enumerates its hypothesis instances and counts how many were
// checked, how many failed their hypothesis (skipped), and the violations.
Report verify_val(CheckContext& ctx);
Report verify_multifan(CheckContext& ctx);
Report verify_kierstead(CheckContext& ctx);
Report verify_broom_main(CheckContext& ctx);
Report verify_broom_elementary(CheckContext& ctx);
Report verify_splitting_suite(CheckContext& ctx);
Report verify_overfull_suite(CheckContext& ctx);
Report verify_fork_suite(CheckContext& ctx);

/// Check ids accepted by run_check, in canonical order.
const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);
/// Runs one check and fills in the timing. Throws std::invalid_argument for
/// unknown ids.
Report run_check(std::string_view id, CheckContext& ctx);
Report run_check(std::string_view id, const Graph& g, const CheckOptions& options = {});

// Per-coloring kernels behind the broom checks, exposed for equivariance tests.
struct BroomTally {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> violations;
  bool operator==(const BroomTally&) const = default;
};

/// Multiplicity bound over brooms at (x, y) under c.
void tally_broom_main(const Coloring& c, Vertex x, Vertex y, BroomMode mode, BroomTally& out);
/// Elementary / degree-sum claims over brooms at (x, y) under c.
void tally_broom_elementary(const Coloring& c, Vertex x, Vertex y, BroomTally& out);

}  // namespace critcheck
