#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critcheck/graph.hpp"

namespace critcheck {

/// Colors are 1-based; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kUncolored = 0;
inline constexpr int kMaxColors = 62;

/// Set of colors in [1, kMaxColors], bit c standing for color c.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}

  /// {1, ..., k}
  static constexpr ColorSet range(int k) {
    return ColorSet(k <= 0 ? 0 : ((std::uint64_t{1} << (k + 1)) - 2));
  }
  static constexpr ColorSet of(Color c) { return ColorSet(std::uint64_t{1} << c); }

  constexpr bool contains(Color c) const { return c > 0 && c < 64 && ((bits_ >> c) & 1) != 0; }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest color, or 0 when empty.
  constexpr Color first() const { return bits_ == 0 ? 0 : std::countr_zero(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<Color> to_vector() const;

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  constexpr ColorSet& operator|=(ColorSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ColorSet& operator&=(ColorSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ColorSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Text form "{1,3}".
std::string to_string(ColorSet s);

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial proper k-edge-coloring of a graph.
///
/// The graph is referenced, not owned; it must outlive the coloring. Every
/// mutation keeps the coloring proper and refreshes the per-vertex present
/// sets and the (vertex, color) -> edge table, so missing-color and chain
/// queries are O(1) per step.
class Coloring {
 public:
  Coloring(const Graph& g, int k);

  /// Throws ColoringError when a color is outside [0, k] or two edges at a
  /// vertex share a color.
  static Coloring from_assignment(const Graph& g, int k, std::span<const Color> colors);

  const Graph& graph() const { return *graph_; }
  int k() const { return k_; }

  Color color(EdgeId e) const { return colors_.at(static_cast<std::size_t>(e)); }
  Color color(Vertex u, Vertex v) const;
  bool is_colored(EdgeId e) const { return color(e) != kUncolored; }
  const std::vector<Color>& assignment() const { return colors_; }
  int uncolored_count() const;
  bool is_total() const { return uncolored_count() == 0; }

  ColorSet present(Vertex v) const { return ColorSet(present_.at(static_cast<std::size_t>(v))); }
  ColorSet missing(Vertex v) const { return ColorSet::range(k_) - present(v); }
  /// Union of missing sets.
  ColorSet missing(std::span<const Vertex> vs) const;
  /// Edge at v colored c, or -1.
  EdgeId edge_with_color(Vertex v, Color c) const;

  /// Re-derives propriety from the raw assignment.
  bool is_proper() const;

  void color_edge(EdgeId e, Color c);
  void recolor_edge(EdgeId e, Color from, Color to);
  void uncolor_edge(EdgeId e);

  /// Applies several edge colors at once; propriety is required only of the
  /// final state. Leaves the coloring untouched and throws on conflict.
  void assign_batch(std::span<const std::pair<EdgeId, Color>> updates);

  /// Replaces every color c by perm[c] (perm[0] must be 0).
  Coloring permuted(std::span<const Color> perm) const;

  bool operator==(const Coloring& other) const {
    return graph_ == other.graph_ && k_ == other.k_ && colors_ == other.colors_;
  }

 private:
  void check_color(Color c) const;
  void place(EdgeId e, Color c);
  void remove(EdgeId e);
  EdgeId& slot(Vertex v, Color c) { return at_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  const Graph* graph_;
  int k_;
  std::vector<Color> colors_;
  std::vector<std::uint64_t> present_;
  std::vector<EdgeId> at_;
};

/// Propriety of a raw assignment; used where no Coloring can be built yet.
bool is_proper(const Graph& g, int k, std::span<const Color> colors);

/// Pairwise disjoint missing sets over xs.
bool is_elementary(const Coloring& c, std::span<const Vertex> xs);

/// 64-bit FNV-1a of the assignment.
std::uint64_t coloring_hash(const Coloring& c);

// Text format: "k <int>" then one "<u> <v> <color|->" line per edge.
std::string write_coloring(const Coloring& c);
/// Edges not listed stay uncolored. Throws ColoringError on malformed input,
/// unknown edges, repeated edges or improper colorings.
Coloring read_coloring(const Graph& g, std::string_view text);

}  // namespace critcheck
