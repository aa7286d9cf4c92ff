#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "critcheck/coloring.hpp"
#include "critcheck/graph.hpp"

namespace critcheck {

inline constexpr EdgeId kNoEdge = -1;

/// A proper k-coloring of every edge except `skip` (which stays uncolored),
/// i.e. a member of C^k(G - skip) expressed over G. Deterministic.
/// Throws std::invalid_argument when k < Δ(G - skip).
std::optional<Coloring> find_coloring(const Graph& g, int k, EdgeId skip = kNoEdge);

/// find_coloring over all edges. Rejects k < Δ.
std::optional<Coloring> find_delta_coloring(const Graph& g, int k);

enum class EdgeClass { one = 1, two = 2 };

/// 0 for edgeless graphs, otherwise Δ or Δ+1.
int chromatic_index(const Graph& g);

/// Throws std::invalid_argument on edgeless graphs.
EdgeClass classify(const Graph& g);

/// Edges e with G - e Δ-colorable; empty for class-1 graphs.
std::vector<EdgeId> critical_edges(const Graph& g);

/// Connected, class 2, and every edge critical.
bool is_delta_critical(const Graph& g);

enum class EnumMode { canonical, full };

/// Visits proper colorings of every edge but `skip` in lexicographic order of
/// the edge-order color word. Canonical mode visits only words whose colors
/// first appear in increasing order, one per color-permutation orbit.
/// The visitor returns false to stop early. Returns the number visited.
std::size_t for_each_coloring(const Graph& g, int k, EnumMode mode,
                              const std::function<bool(const Coloring&)>& visit,
                              EdgeId skip = kNoEdge);

struct ColoringEnumeration {
  EdgeId skipped = kNoEdge;
  int k = 0;
  EnumMode mode = EnumMode::canonical;
  std::vector<Coloring> colorings;
  /// True when the cap stopped the enumeration before it was exhausted.
  bool truncated = false;
};

/// cap == 0 means unbounded.
ColoringEnumeration enumerate_colorings(const Graph& g, int k, EnumMode mode, std::size_t cap,
                                        EdgeId skip = kNoEdge);

/// Relabels colors so they first appear in increasing edge order.
std::vector<Color> canonical_word(std::span<const Color> word);

/// Constructive (Δ+1)-coloring by maximal fans and Kempe path inversion
/// (Misra-Gries). Never searches.
Coloring vizing_plus_one_coloring(const Graph& g);

}  // namespace critcheck
