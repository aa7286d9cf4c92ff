#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

namespace {

// Missing colors per vertex recomputed from the raw assignment.
std::vector<std::set<Color>> missing_sets(const Coloring& c) {
  const Graph& g = c.graph();
  std::vector<std::set<Color>> miss(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Color a = 1; a <= c.k(); ++a) miss[v].insert(a);
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Color col = c.assignment()[e];
    if (col == 0) continue;
    miss[g.edge(e).u].erase(col);
    miss[g.edge(e).v].erase(col);
  }
  return miss;
}

Color color_of(const Coloring& c, Vertex u, Vertex v) {
  const Graph& g = c.graph();
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& ed = g.edge(e);
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return c.assignment()[e];
  }
  return -1;
}

bool has_edge(const Graph& g, Vertex u, Vertex v) {
  for (const auto& e : g.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  }
  return false;
}

bool missing_somewhere(const std::vector<std::set<Color>>& miss, const std::vector<Vertex>& vs, Color col) {
  for (Vertex v : vs) {
    if (miss[v].count(col)) return true;
  }
  return false;
}

bool proper_so_far(const Graph& g, const std::vector<Color>& word, EdgeId upto) {
  const auto& e = g.edge(upto);
  for (EdgeId f = 0; f < upto; ++f) {
    if (word[f] == 0 || word[f] != word[upto]) continue;
    const auto& h = g.edge(f);
    if (h.u == e.u || h.u == e.v || h.v == e.u || h.v == e.v) return false;
  }
  return true;
}

bool assign(const Graph& g, int k, EdgeId skip, std::vector<Color>& word, EdgeId idx, int used) {
  if (idx == g.m()) return true;
  if (idx == skip) return assign(g, k, skip, word, idx + 1, used);
  // First-use order: a color above used+1 is a relabelling of used+1.
  for (Color col = 1; col <= std::min(k, used + 1); ++col) {
    word[idx] = col;
    if (proper_so_far(g, word, idx) && assign(g, k, skip, word, idx + 1, std::max(used, col))) return true;
  }
  word[idx] = 0;
  return false;
}

}  // namespace

bool colorable(const Graph& g, int k, EdgeId skip) {
  std::vector<Color> word(static_cast<std::size_t>(g.m()), 0);
  return assign(g, k, skip, word, 0, 0);
}

int chromatic_index(const Graph& g) {
  for (int k = 0;; ++k) {
    if (colorable(g, k)) return k;
  }
}

bool delta_critical_by_definition(const Graph& g) {
  if (g.m() == 0 || !g.is_connected()) return false;
  const int chi = chromatic_index(g);
  if (chi != g.max_degree() + 1) return false;
  for (const auto& e : g.edges()) {
    if (chromatic_index(g.without_edge(e.u, e.v)) >= chi) return false;
  }
  return true;
}

std::vector<std::vector<Color>> all_colorings(const Graph& g, int k, EdgeId skip, bool canonical) {
  std::vector<std::vector<Color>> out;
  std::vector<EdgeId> free;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (e != skip) free.push_back(e);
  }
  std::vector<Color> word(static_cast<std::size_t>(g.m()), 0);
  for (EdgeId e : free) word[e] = 1;
  if (k == 0 && !free.empty()) return out;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < free.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < free.size() && ok; ++j) {
        const auto& a = g.edge(free[i]);
        const auto& b = g.edge(free[j]);
        const bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        ok = !(touch && word[free[i]] == word[free[j]]);
      }
    }
    if (ok && canonical) {
      Color next = 1;
      for (EdgeId e : free) {
        if (word[e] > next) {
          ok = false;
          break;
        }
        if (word[e] == next) ++next;
      }
    }
    if (ok) out.push_back(word);
    // Odometer increment, last edge fastest.
    std::size_t i = free.size();
    while (i > 0) {
      --i;
      if (word[free[i]] < k) {
        ++word[free[i]];
        break;
      }
      word[free[i]] = 1;
      if (i == 0) return out;
    }
    if (free.empty()) return out;
  }
}

std::vector<std::vector<Vertex>> kierstead_paths(const Coloring& c, EdgeId e, int max_vertices) {
  const Graph& g = c.graph();
  const auto miss = missing_sets(c);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  // Every simple path starting with the edge, each judged on all its edges.
  auto grow = [&](auto&& self) -> void {
    bool valid = true;
    for (std::size_t i = 1; i + 1 < path.size() && valid; ++i) {
      const std::vector<Vertex> earlier(path.begin(), path.begin() + static_cast<long>(i));
      const Color col = color_of(c, path[i], path[i + 1]);
      valid = col > 0 && missing_somewhere(miss, earlier, col);
    }
    if (valid) out.push_back(path);
    if (static_cast<int>(path.size()) == max_vertices) return;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (std::find(path.begin(), path.end(), w) != path.end() || !has_edge(g, path.back(), w)) continue;
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  for (int side = 0; side < 2; ++side) {
    path = side == 0 ? std::vector<Vertex>{g.edge(e).u, g.edge(e).v} : std::vector<Vertex>{g.edge(e).v, g.edge(e).u};
    grow(grow);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> short_brooms(const Coloring& c, Vertex x, Vertex y) {
  const Graph& g = c.graph();
  const auto miss = missing_sets(c);
  std::vector<std::vector<Vertex>> out;
  for (Vertex z = 0; z < g.n(); ++z) {
    if (z == x || z == y || !has_edge(g, y, z)) continue;
    const Color handle = color_of(c, y, z);
    if (handle <= 0 || !miss[x].count(handle)) continue;
    std::vector<Vertex> seq{z};
    auto grow = [&](auto&& self) -> void {
      if (seq.size() >= 2) {
        bool valid = true;
        for (std::size_t i = 1; i < seq.size() && valid; ++i) {
          std::vector<Vertex> earlier{x, y, z};
          earlier.insert(earlier.end(), seq.begin() + 1, seq.begin() + static_cast<long>(i));
          const Color col = color_of(c, z, seq[i]);
          valid = col > 0 && missing_somewhere(miss, earlier, col);
        }
        if (!valid) return;
        out.push_back(seq);
      }
      for (Vertex v = 0; v < g.n(); ++v) {
        if (v == x || v == y || std::find(seq.begin(), seq.end(), v) != seq.end() || !has_edge(g, z, v)) continue;
        seq.push_back(v);
        self(self);
        seq.pop_back();
      }
    };
    grow(grow);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> forks(const Coloring& c, EdgeId xy) {
  const Graph& g = c.graph();
  const auto miss = missing_sets(c);
  const int n = g.n();
  std::vector<std::vector<Vertex>> out;
  for (int side = 0; side < 2; ++side) {
    const Vertex x = side == 0 ? g.edge(xy).u : g.edge(xy).v;
    const Vertex y = side == 0 ? g.edge(xy).v : g.edge(xy).u;
    std::set<Color> pair = miss[x];
    pair.insert(miss[y].begin(), miss[y].end());
    std::vector<Vertex> t(5);
    for (t[0] = 0; t[0] < n; ++t[0])
      for (t[1] = 0; t[1] < n; ++t[1])
        for (t[2] = t[1] + 1; t[2] < n; ++t[2])
          for (t[3] = 0; t[3] < n; ++t[3])
            for (t[4] = 0; t[4] < n; ++t[4]) {
              std::vector<Vertex> all{x, y, t[0], t[1], t[2], t[3], t[4]};
              std::vector<Vertex> sorted = all;
              std::sort(sorted.begin(), sorted.end());
              if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
              const Vertex z = t[0], s1 = t[1], s2 = t[2], t1 = t[3], t2 = t[4];
              if (!has_edge(g, y, z) || !has_edge(g, z, s1) || !has_edge(g, z, s2) || !has_edge(g, s1, t1) ||
                  !has_edge(g, s2, t2)) {
                continue;
              }
              const Color yz = color_of(c, y, z), zs1 = color_of(c, z, s1), zs2 = color_of(c, z, s2);
              const Color a = color_of(c, s1, t1), b = color_of(c, s2, t2);
              if (!miss[x].count(yz) || !pair.count(zs1) || !pair.count(zs2)) continue;
              if (!pair.count(a) || !miss[t2].count(a) || !pair.count(b) || !miss[t1].count(b)) continue;
              out.push_back(all);
            }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
