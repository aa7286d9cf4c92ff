#include "critcheck/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "critcheck/kempe.hpp"

namespace critcheck {

namespace {

using Mask = std::uint64_t;

Mask colors_upto(int k) { return ColorSet::range(k).bits(); }

int max_degree_without(const Graph& g, EdgeId skip) {
  if (skip == kNoEdge) return g.max_degree();
  const Edge& s = g.edge(skip);
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    best = std::max(best, g.degree(v) - ((v == s.u || v == s.v) ? 1 : 0));
  }
  return best;
}

// Any k-coloring colors at most k·(|S|-1)/2 edges inside an odd set S.
bool has_dense_odd_subset(const Graph& g, int k, EdgeId skip) {
  const int n = g.n();
  if (n > 16 || n < 3) return false;
  std::vector<Mask> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
  if (skip != kNoEdge) {
    const Edge& s = g.edge(skip);
    adj[s.u] &= ~(Mask{1} << s.v);
    adj[s.v] &= ~(Mask{1} << s.u);
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<int> inside(subsets, 0);
  for (std::size_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    const std::size_t rest = s & (s - 1);
    inside[s] = inside[rest] + std::popcount(adj[low] & rest);
    const int size = std::popcount(s);
    if ((size & 1) && size >= 3 && inside[s] > k * (size - 1) / 2) return true;
  }
  return false;
}

struct EdgeSolver {
  int k;
  std::vector<Edge> ends;
  std::vector<EdgeId> ids;
  std::vector<Color> color;
  std::vector<Mask> present;
  int used = 0;

  bool solve(int remaining) {
    if (remaining == 0) return true;
    int pick = -1;
    int fewest = k + 1;
    const Mask all = colors_upto(k);
    for (int i = 0; i < static_cast<int>(ends.size()); ++i) {
      if (color[i] != kUncolored) continue;
      const int avail = std::popcount(all & ~(present[ends[i].u] | present[ends[i].v]));
      if (avail < fewest) {
        fewest = avail;
        pick = i;
        if (avail == 0) return false;
      }
    }
    const Edge e = ends[pick];
    Mask avail = all & ~(present[e.u] | present[e.v]);
    // Colors above used+1 are interchangeable with used+1.
    avail &= colors_upto(std::min(k, used + 1));
    for (; avail != 0; avail &= avail - 1) {
      const Color c = std::countr_zero(avail);
      const int saved_used = used;
      used = std::max(used, c);
      color[pick] = c;
      present[e.u] |= Mask{1} << c;
      present[e.v] |= Mask{1} << c;
      if (solve(remaining - 1)) return true;
      present[e.u] &= ~(Mask{1} << c);
      present[e.v] &= ~(Mask{1} << c);
      color[pick] = kUncolored;
      used = saved_used;
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> find_coloring(const Graph& g, int k, EdgeId skip) {
  const int delta = max_degree_without(g, skip);
  if (k < delta) {
    throw std::invalid_argument("k=" + std::to_string(k) + " is below the maximum degree " +
                                std::to_string(delta));
  }
  if (k > kMaxColors) throw std::invalid_argument("too many colors");
  if (has_dense_odd_subset(g, k, skip)) return std::nullopt;

  EdgeSolver solver;
  solver.k = k;
  solver.present.assign(static_cast<std::size_t>(g.n()), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e == skip) continue;
    solver.ends.push_back(g.edge(e));
    solver.ids.push_back(e);
  }
  solver.color.assign(solver.ends.size(), kUncolored);

  // Pin the star at a maximum-degree vertex to colors 1..d.
  int remaining = static_cast<int>(solver.ends.size());
  if (remaining > 0) {
    Vertex hub = 0;
    int best = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
      int d = 0;
      for (const Edge& e : solver.ends) d += (e.u == v || e.v == v) ? 1 : 0;
      if (d > best) {
        best = d;
        hub = v;
      }
    }
    Color next = 1;
    for (std::size_t i = 0; i < solver.ends.size(); ++i) {
      const Edge& e = solver.ends[i];
      if (e.u != hub && e.v != hub) continue;
      solver.color[i] = next;
      solver.present[e.u] |= Mask{1} << next;
      solver.present[e.v] |= Mask{1} << next;
      ++next;
      --remaining;
    }
    solver.used = next - 1;
  }
  if (!solver.solve(remaining)) return std::nullopt;

  std::vector<Color> word(static_cast<std::size_t>(g.m()), kUncolored);
  for (std::size_t i = 0; i < solver.ids.size(); ++i) word[solver.ids[i]] = solver.color[i];
  return Coloring::from_assignment(g, k, word);
}

std::optional<Coloring> find_delta_coloring(const Graph& g, int k) {
  return find_coloring(g, k, kNoEdge);
}

int chromatic_index(const Graph& g) {
  if (g.m() == 0) return 0;
  const int delta = g.max_degree();
  const int chi = find_delta_coloring(g, delta) ? delta : delta + 1;
  if (chi < delta || chi > delta + 1) throw std::logic_error("Vizing bound violated");
  return chi;
}

EdgeClass classify(const Graph& g) {
  if (g.m() == 0) throw std::invalid_argument("edgeless graphs have no class");
  return chromatic_index(g) == g.max_degree() ? EdgeClass::one : EdgeClass::two;
}

std::vector<EdgeId> critical_edges(const Graph& g) {
  std::vector<EdgeId> out;
  if (g.m() == 0 || classify(g) == EdgeClass::one) return out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (find_coloring(g, g.max_degree(), e)) out.push_back(e);
  }
  return out;
}

bool is_delta_critical(const Graph& g) {
  if (g.m() == 0 || !g.is_connected()) return false;
  if (classify(g) == EdgeClass::one) return false;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!find_coloring(g, g.max_degree(), e)) return false;
  }
  return true;
}

namespace {

struct Enumerator {
  const Graph* g;
  int k;
  EnumMode mode;
  const std::function<bool(const Coloring&)>* visit;
  std::vector<EdgeId> order;
  // Later edges sharing an endpoint, for forward checking.
  std::vector<std::vector<int>> later;
  std::vector<Color> word;
  std::vector<Mask> present;
  std::size_t count = 0;
  bool stopped = false;

  bool available(int idx) const {
    const Edge& e = g->edge(order[idx]);
    return (colors_upto(k) & ~(present[e.u] | present[e.v])) != 0;
  }

  void run(int idx, int used) {
    if (stopped) return;
    if (idx == static_cast<int>(order.size())) {
      ++count;
      if (!(*visit)(Coloring::from_assignment(*g, k, word))) stopped = true;
      return;
    }
    const EdgeId id = order[idx];
    const Edge& e = g->edge(id);
    Mask avail = colors_upto(k) & ~(present[e.u] | present[e.v]);
    if (mode == EnumMode::canonical) avail &= colors_upto(std::min(k, used + 1));
    for (; avail != 0 && !stopped; avail &= avail - 1) {
      const Color c = std::countr_zero(avail);
      word[id] = c;
      present[e.u] |= Mask{1} << c;
      present[e.v] |= Mask{1} << c;
      bool ok = true;
      for (int j : later[idx]) {
        if (!available(j)) {
          ok = false;
          break;
        }
      }
      if (ok) run(idx + 1, std::max(used, c));
      present[e.u] &= ~(Mask{1} << c);
      present[e.v] &= ~(Mask{1} << c);
      word[id] = kUncolored;
    }
  }
};

}  // namespace

std::size_t for_each_coloring(const Graph& g, int k, EnumMode mode,
                              const std::function<bool(const Coloring&)>& visit, EdgeId skip) {
  if (k < 0 || k > kMaxColors) throw std::invalid_argument("color count out of range");
  Enumerator en;
  en.g = &g;
  en.k = k;
  en.mode = mode;
  en.visit = &visit;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e != skip) en.order.push_back(e);
  }
  const int count = static_cast<int>(en.order.size());
  en.later.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Edge& a = g.edge(en.order[i]);
    for (int j = i + 1; j < count; ++j) {
      const Edge& b = g.edge(en.order[j]);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) en.later[i].push_back(j);
    }
  }
  en.word.assign(static_cast<std::size_t>(g.m()), kUncolored);
  en.present.assign(static_cast<std::size_t>(g.n()), 0);
  if (max_degree_without(g, skip) > k) return 0;
  en.run(0, 0);
  return en.count;
}

ColoringEnumeration enumerate_colorings(const Graph& g, int k, EnumMode mode, std::size_t cap,
                                        EdgeId skip) {
  ColoringEnumeration out;
  out.skipped = skip;
  out.k = k;
  out.mode = mode;
  for_each_coloring(
      g, k, mode,
      [&](const Coloring& c) {
        if (cap != 0 && out.colorings.size() == cap) {
          out.truncated = true;
          return false;
        }
        out.colorings.push_back(c);
        return true;
      },
      skip);
  return out;
}

std::vector<Color> canonical_word(std::span<const Color> word) {
  std::vector<Color> relabel(static_cast<std::size_t>(kMaxColors) + 1, kUncolored);
  Color next = 1;
  std::vector<Color> out(word.begin(), word.end());
  for (Color& c : out) {
    if (c == kUncolored) continue;
    if (relabel[c] == kUncolored) relabel[c] = next++;
    c = relabel[c];
  }
  return out;
}

Coloring vizing_plus_one_coloring(const Graph& g) {
  const int k = g.max_degree() + 1;
  Coloring c(g, k);
  for (EdgeId target = 0; target < g.m(); ++target) {
    const Vertex u = g.edge(target).u;
    const Vertex v = g.edge(target).v;

    // Maximal fan at u: c(u, fan[i+1]) is missing at fan[i].
    std::vector<Vertex> fan{v};
    std::uint64_t in_fan = std::uint64_t{1} << v;
    for (bool grew = true; grew;) {
      grew = false;
      const ColorSet free_last = c.missing(fan.back());
      for (Vertex w : g.neighbors(u)) {
        if (in_fan & (std::uint64_t{1} << w)) continue;
        const EdgeId e = g.edge_id(u, w);
        if (c.is_colored(e) && free_last.contains(c.color(e))) {
          fan.push_back(w);
          in_fan |= std::uint64_t{1} << w;
          grew = true;
          break;
        }
      }
    }

    const Color cu = c.missing(u).first();
    const Color dl = c.missing(fan.back()).first();
    if (cu != dl) swap_at(c, u, cu, dl);

    // First prefix that is still a fan and ends at a vertex missing dl.
    std::size_t w = 0;
    for (;; ++w) {
      if (w > 0) {
        const EdgeId e = g.edge_id(u, fan[w]);
        if (!c.is_colored(e) || !c.missing(fan[w - 1]).contains(c.color(e))) {
          throw std::logic_error("fan broke before a free vertex was found");
        }
      }
      if (c.missing(fan[w]).contains(dl)) break;
    }

    std::vector<std::pair<EdgeId, Color>> rotation;
    for (std::size_t i = 0; i < w; ++i) {
      rotation.emplace_back(g.edge_id(u, fan[i]), c.color(g.edge_id(u, fan[i + 1])));
    }
    rotation.emplace_back(g.edge_id(u, fan[w]), dl);
    c.assign_batch(rotation);
  }
  return c;
}

}  // namespace critcheck
