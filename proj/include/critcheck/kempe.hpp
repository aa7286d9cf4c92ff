#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "critcheck/coloring.hpp"

namespace critcheck {

enum class ChainKind { path, cycle };

/// Maximal (alpha, beta)-alternating component.
///
/// For a path, `vertices` runs from one end to the other and starts at the
/// query vertex whenever that vertex is an end. For a cycle it starts at the
/// query vertex, leaves along its alpha edge, and does not repeat the start.
struct Chain {
  Color alpha = 0;
  Color beta = 0;
  ChainKind kind = ChainKind::path;
  std::vector<Vertex> vertices;

  bool contains(Vertex v) const;
  /// Index of v in `vertices`, or -1.
  int position(Vertex v) const;
  /// Walking from the first vertex, u is reached before v.
  bool meets_before(Vertex u, Vertex v) const;
  int edge_count() const;
  bool is_endpoint(Vertex v) const;
};

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ChainError when alpha == beta or a color lies outside [1, k].
Chain chain_component(const Coloring& c, Vertex v, Color alpha, Color beta);

/// (alpha, beta)-swap at x. The identity when alpha == beta; otherwise x must
/// be an end of its (alpha, beta)-path, else ChainError.
void swap_at(Coloring& c, Vertex x, Color alpha, Color beta);

/// Exchanges alpha and beta on every edge of the chain (paths and cycles).
void swap_component(Coloring& c, const Chain& chain);

/// (b0,b1)-(b1,b2)-...-(b_{t-1},b_t)-swap at x; b0 must be missing at x.
void swap_sequence(Coloring& c, Vertex x, std::span<const Color> colors);

bool linked(const Coloring& c, Vertex x, Vertex y, Color alpha, Color beta);

/// The subpath with ends x and y of their common (alpha, beta)-path, ordered
/// from x. ChainError when unlinked or when the component is a cycle.
Chain subchain_between(const Coloring& c, Vertex x, Vertex y, Color alpha, Color beta);

/// Exchanges alpha and beta on subchain_between(x, y). Throws ChainError (and
/// leaves c untouched) when the exchange would break propriety at x or y.
void swap_subchain(Coloring& c, Vertex x, Vertex y, Color alpha, Color beta);

/// All (alpha, beta)-components of c, each vertex appearing in exactly one.
std::vector<Chain> chain_components(const Coloring& c, Color alpha, Color beta);

}  // namespace critcheck
