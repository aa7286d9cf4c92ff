#include "critcheck/kempe.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace critcheck {

namespace {

void check_pair(const Coloring& c, Color alpha, Color beta) {
  if (alpha < 1 || alpha > c.k() || beta < 1 || beta > c.k()) {
    throw ChainError("chain colors must lie in [1," + std::to_string(c.k()) + "]");
  }
  if (alpha == beta) throw ChainError("chain colors must differ");
}

// Vertices reached from `start` leaving along `first`, alternating with
// `second`. Stops at a dead end or on returning to start (closed = true).
std::vector<Vertex> walk(const Coloring& c, Vertex start, Color first, Color second, bool& closed) {
  std::vector<Vertex> out;
  closed = false;
  Vertex at = start;
  Color want = first;
  for (;;) {
    const EdgeId e = c.edge_with_color(at, want);
    if (e < 0) return out;
    at = c.graph().other(e, at);
    if (at == start) {
      closed = true;
      return out;
    }
    out.push_back(at);
    want = want == first ? second : first;
  }
}

std::vector<std::pair<EdgeId, Color>> exchanged_edges(const Coloring& c, const Chain& chain,
                                                      std::size_t from, std::size_t to) {
  std::vector<std::pair<EdgeId, Color>> out;
  const auto& vs = chain.vertices;
  auto add = [&](Vertex a, Vertex b) {
    const EdgeId e = c.graph().edge_id(a, b);
    const Color col = c.color(e);
    out.emplace_back(e, col == chain.alpha ? chain.beta : chain.alpha);
  };
  for (std::size_t i = from; i < to; ++i) add(vs[i], vs[i + 1]);
  if (chain.kind == ChainKind::cycle && from == 0 && to == vs.size() - 1 && vs.size() > 1) {
    add(vs.back(), vs.front());
  }
  return out;
}

}  // namespace

bool Chain::contains(Vertex v) const { return position(v) >= 0; }

int Chain::position(Vertex v) const {
  const auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

bool Chain::meets_before(Vertex u, Vertex v) const {
  const int pu = position(u);
  const int pv = position(v);
  return pu >= 0 && pv >= 0 && pu < pv;
}

int Chain::edge_count() const {
  const int n = static_cast<int>(vertices.size());
  if (kind == ChainKind::cycle) return n;
  return n == 0 ? 0 : n - 1;
}

bool Chain::is_endpoint(Vertex v) const {
  if (kind == ChainKind::cycle || vertices.empty()) return false;
  return vertices.front() == v || vertices.back() == v;
}

Chain chain_component(const Coloring& c, Vertex v, Color alpha, Color beta) {
  check_pair(c, alpha, beta);
  Chain chain;
  chain.alpha = alpha;
  chain.beta = beta;
  bool closed = false;
  std::vector<Vertex> along_alpha = walk(c, v, alpha, beta, closed);
  if (closed) {
    chain.kind = ChainKind::cycle;
    chain.vertices.push_back(v);
    chain.vertices.insert(chain.vertices.end(), along_alpha.begin(), along_alpha.end());
    return chain;
  }
  std::vector<Vertex> along_beta = walk(c, v, beta, alpha, closed);
  chain.kind = ChainKind::path;
  if (along_alpha.empty()) {
    chain.vertices.push_back(v);
    chain.vertices.insert(chain.vertices.end(), along_beta.begin(), along_beta.end());
  } else if (along_beta.empty()) {
    chain.vertices.push_back(v);
    chain.vertices.insert(chain.vertices.end(), along_alpha.begin(), along_alpha.end());
  } else {
    chain.vertices.assign(along_alpha.rbegin(), along_alpha.rend());
    chain.vertices.push_back(v);
    chain.vertices.insert(chain.vertices.end(), along_beta.begin(), along_beta.end());
  }
  return chain;
}

void swap_component(Coloring& c, const Chain& chain) {
  if (chain.vertices.size() < 2) return;
  const auto updates = exchanged_edges(c, chain, 0, chain.vertices.size() - 1);
  c.assign_batch(updates);
}

void swap_at(Coloring& c, Vertex x, Color alpha, Color beta) {
  if (alpha == beta) return;
  const Chain chain = chain_component(c, x, alpha, beta);
  if (!chain.is_endpoint(x)) {
    throw ChainError("vertex " + std::to_string(x) + " is not an end of its (" +
                     std::to_string(alpha) + "," + std::to_string(beta) + ")-chain");
  }
  swap_component(c, chain);
}

void swap_sequence(Coloring& c, Vertex x, std::span<const Color> colors) {
  if (colors.empty()) throw ChainError("swap sequence needs at least one color");
  if (!c.missing(x).contains(colors[0])) {
    throw ChainError("first color of a swap sequence must be missing at " + std::to_string(x));
  }
  for (std::size_t i = 1; i < colors.size(); ++i) swap_at(c, x, colors[i - 1], colors[i]);
}

bool linked(const Coloring& c, Vertex x, Vertex y, Color alpha, Color beta) {
  return chain_component(c, x, alpha, beta).contains(y);
}

Chain subchain_between(const Coloring& c, Vertex x, Vertex y, Color alpha, Color beta) {
  const Chain whole = chain_component(c, x, alpha, beta);
  const int px = whole.position(x);
  const int py = whole.position(y);
  if (py < 0) {
    throw ChainError(std::to_string(x) + " and " + std::to_string(y) + " are not (" +
                     std::to_string(alpha) + "," + std::to_string(beta) + ")-linked");
  }
  if (whole.kind == ChainKind::cycle && px != py) {
    throw ChainError("subchain of a cycle is ambiguous");
  }
  Chain sub;
  sub.alpha = alpha;
  sub.beta = beta;
  sub.kind = ChainKind::path;
  if (px <= py) {
    sub.vertices.assign(whole.vertices.begin() + px, whole.vertices.begin() + py + 1);
  } else {
    sub.vertices.assign(whole.vertices.begin() + py, whole.vertices.begin() + px + 1);
    std::reverse(sub.vertices.begin(), sub.vertices.end());
  }
  return sub;
}

void swap_subchain(Coloring& c, Vertex x, Vertex y, Color alpha, Color beta) {
  const Chain sub = subchain_between(c, x, y, alpha, beta);
  if (sub.vertices.size() < 2) return;
  try {
    c.assign_batch(exchanged_edges(c, sub, 0, sub.vertices.size() - 1));
  } catch (const ColoringError&) {
    throw ChainError("exchanging the subchain between " + std::to_string(x) + " and " +
                     std::to_string(y) + " breaks propriety");
  }
}

std::vector<Chain> chain_components(const Coloring& c, Color alpha, Color beta) {
  std::vector<Chain> out;
  std::vector<bool> seen(static_cast<std::size_t>(c.graph().n()), false);
  for (Vertex v = 0; v < c.graph().n(); ++v) {
    if (seen[v]) continue;
    Chain chain = chain_component(c, v, alpha, beta);
    for (Vertex u : chain.vertices) seen[u] = true;
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace critcheck
