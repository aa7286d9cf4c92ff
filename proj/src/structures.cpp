#include "critcheck/structures.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace critcheck {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

ColorSet missing_of_mask(const Coloring& c, std::uint64_t mask) {
  ColorSet out;
  for (; mask != 0; mask &= mask - 1) out |= c.missing(std::countr_zero(mask));
  return out;
}

// Color of uv, or 0 when absent or uncolored.
Color edge_color(const Coloring& c, Vertex u, Vertex v) {
  const EdgeId e = c.graph().edge_id(u, v);
  return e < 0 ? kUncolored : c.color(e);
}

bool valid_handle(const Coloring& c, Vertex x, Vertex y, Vertex z) {
  if (z == x || z == y || !c.graph().adjacent(y, z)) return false;
  const Color handle = edge_color(c, y, z);
  return handle != kUncolored && c.missing(x).contains(handle);
}

void require_uncolored(const Coloring& c, Vertex x, Vertex y) {
  const EdgeId e = c.graph().edge_id(x, y);
  if (e < 0) throw ColoringError("no edge " + std::to_string(x) + "-" + std::to_string(y));
  if (c.is_colored(e)) {
    throw ColoringError("edge " + std::to_string(x) + "-" + std::to_string(y) + " must be uncolored");
  }
}

// Bristle candidates admissible at z given the current broom vertex mask.
std::uint64_t admissible(const Coloring& c, Vertex z, std::uint64_t broom_mask) {
  const ColorSet missed = missing_of_mask(c, broom_mask);
  std::uint64_t out = 0;
  for (std::uint64_t rest = c.graph().neighbor_mask(z) & ~broom_mask; rest != 0; rest &= rest - 1) {
    const Vertex v = std::countr_zero(rest);
    const Color col = edge_color(c, z, v);
    if (col != kUncolored && missed.contains(col)) out |= bit(v);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs, bool dash_zero = false) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    if (dash_zero && xs[i] == 0) {
      out += '-';
    } else {
      out += std::to_string(xs[i]);
    }
  }
  return out + "]";
}

}  // namespace

std::vector<Vertex> ShortBroom::vertex_set() const {
  std::vector<Vertex> out{x, y, z};
  out.insert(out.end(), bristles.begin(), bristles.end());
  return out;
}

Multifan grow_multifan(const Coloring& c, Vertex r, Vertex s1) {
  require_uncolored(c, r, s1);
  Multifan f;
  f.center = r;
  f.leaves.push_back(s1);
  f.colors.push_back(kUncolored);
  std::uint64_t in_fan = bit(r) | bit(s1);
  ColorSet missed = c.missing(s1);
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex w : c.graph().neighbors(r)) {
      if (in_fan & bit(w)) continue;
      const Color col = edge_color(c, r, w);
      if (col != kUncolored && missed.contains(col)) {
        f.leaves.push_back(w);
        f.colors.push_back(col);
        in_fan |= bit(w);
        missed |= c.missing(w);
        grew = true;
        break;
      }
    }
  }
  return f;
}

std::vector<KiersteadPath> enumerate_kierstead_paths(const Coloring& c, EdgeId e, int max_vertices) {
  if (max_vertices < 2) throw std::invalid_argument("Kierstead paths have at least 2 vertices");
  if (c.is_colored(e)) throw ColoringError("Kierstead paths start at an uncolored edge");
  std::vector<KiersteadPath> out;
  KiersteadPath cur;
  const Graph& g = c.graph();

  std::function<void(std::uint64_t, ColorSet)> extend = [&](std::uint64_t used, ColorSet earlier) {
    out.push_back(cur);
    if (static_cast<int>(cur.vertices.size()) == max_vertices) return;
    const Vertex tip = cur.vertices.back();
    // Colors missing at v_0..v_{i-1}; the tip's own missing set joins after.
    for (Vertex w : g.neighbors(tip)) {
      if (used & bit(w)) continue;
      const Color col = edge_color(c, tip, w);
      if (col == kUncolored || !earlier.contains(col)) continue;
      cur.vertices.push_back(w);
      cur.colors.push_back(col);
      extend(used | bit(w), earlier | c.missing(tip));
      cur.vertices.pop_back();
      cur.colors.pop_back();
    }
  };

  const Edge& ed = g.edge(e);
  for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
    cur.vertices = {a, b};
    cur.colors = {kUncolored};
    extend(bit(a) | bit(b), c.missing(a));
  }
  return out;
}

std::uint64_t maximal_bristle_set(const Coloring& c, Vertex x, Vertex y, Vertex z) {
  if (!valid_handle(c, x, y, z)) return 0;
  const std::uint64_t handle = bit(x) | bit(y) | bit(z);
  std::uint64_t mask = handle;
  for (std::uint64_t add = admissible(c, z, mask); add != 0; add = admissible(c, z, mask)) {
    mask |= add;
  }
  return mask & ~handle;
}

ShortBroom broom_from_set(const Coloring& c, Vertex x, Vertex y, Vertex z, std::uint64_t bristles) {
  if (!valid_handle(c, x, y, z)) throw ColoringError("invalid broom handle");
  ShortBroom b;
  b.x = x;
  b.y = y;
  b.z = z;
  b.handle_color = edge_color(c, y, z);
  std::uint64_t mask = bit(x) | bit(y) | bit(z);
  std::uint64_t rest = bristles;
  while (rest != 0) {
    const std::uint64_t next = admissible(c, z, mask) & rest;
    if (next == 0) throw ColoringError("bristle set is not reachable as a broom");
    const Vertex v = std::countr_zero(next);
    b.bristles.push_back(v);
    b.bristle_colors.push_back(edge_color(c, z, v));
    mask |= bit(v);
    rest &= ~bit(v);
  }
  b.simple = is_simple_broom(c, b);
  return b;
}

std::vector<ShortBroom> enumerate_short_brooms(const Coloring& c, Vertex x, Vertex y, BroomMode mode) {
  require_uncolored(c, x, y);
  std::vector<ShortBroom> out;
  for (Vertex z : c.graph().neighbors(y)) {
    if (!valid_handle(c, x, y, z)) continue;
    if (mode == BroomMode::maximal) {
      const std::uint64_t closure = maximal_bristle_set(c, x, y, z);
      if (closure != 0) out.push_back(broom_from_set(c, x, y, z, closure));
      continue;
    }
    ShortBroom cur;
    cur.x = x;
    cur.y = y;
    cur.z = z;
    cur.handle_color = edge_color(c, y, z);
    std::function<void(std::uint64_t)> extend = [&](std::uint64_t mask) {
      for (std::uint64_t add = admissible(c, z, mask); add != 0; add &= add - 1) {
        const Vertex v = std::countr_zero(add);
        cur.bristles.push_back(v);
        cur.bristle_colors.push_back(edge_color(c, z, v));
        cur.simple = is_simple_broom(c, cur);
        out.push_back(cur);
        extend(mask | bit(v));
        cur.bristles.pop_back();
        cur.bristle_colors.pop_back();
      }
    };
    extend(bit(x) | bit(y) | bit(z));
  }
  return out;
}

void for_each_broom_set(const Coloring& c, Vertex x, Vertex y,
                        const std::function<void(Vertex, std::uint64_t)>& visit) {
  require_uncolored(c, x, y);
  const std::uint64_t base_xy = bit(x) | bit(y);
  for (Vertex z : c.graph().neighbors(y)) {
    if (!valid_handle(c, x, y, z)) continue;
    const std::uint64_t handle = base_xy | bit(z);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack{0};
    while (!stack.empty()) {
      const std::uint64_t set = stack.back();
      stack.pop_back();
      for (std::uint64_t add = admissible(c, z, handle | set); add != 0; add &= add - 1) {
        const std::uint64_t next = set | (add & -add);
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    std::vector<std::uint64_t> sets(seen.begin(), seen.end());
    std::sort(sets.begin(), sets.end());
    for (std::uint64_t s : sets) visit(z, s);
  }
}

bool is_simple_broom(const Coloring& c, const ShortBroom& b) {
  const ColorSet handle_missing = c.missing(b.x) | c.missing(b.y);
  for (Color col : b.bristle_colors) {
    if (!handle_missing.contains(col)) return false;
  }
  return true;
}

int multiplicity_excess(const Coloring& c, std::uint64_t vertex_mask) {
  int total = 0;
  ColorSet missed;
  for (std::uint64_t rest = vertex_mask; rest != 0; rest &= rest - 1) {
    const ColorSet m = c.missing(std::countr_zero(rest));
    total += m.size();
    missed |= m;
  }
  return total - missed.size();
}

BroomProfile broom_profile(const Coloring& c, const ShortBroom& b) {
  BroomProfile p;
  p.m.assign(static_cast<std::size_t>(c.k()) + 1, 0);
  const std::vector<Vertex> vs = b.vertex_set();
  for (Color a = 1; a <= c.k(); ++a) {
    int count = 0;
    for (Vertex v : vs) count += c.missing(v).contains(a) ? 1 : 0;
    p.m[a] = count > 0 ? count - 1 : 0;
    p.sum += p.m[a];
    if (p.m[a] >= 1) p.multiply_missed.insert(a);
  }
  const ColorSet handle_missing = c.missing(b.x) | c.missing(b.y);
  for (std::size_t i = 0; i < b.bristles.size(); ++i) {
    const Color col = b.bristle_colors[i];
    BristleInduction ind;
    if (handle_missing.contains(col)) {
      ind.root = static_cast<int>(i);
      ind.inducing_color = col;
    } else {
      std::size_t j = 0;
      while (j < i && !c.missing(b.bristles[j]).contains(col)) ++j;
      if (j == i) throw ColoringError("bristle color is not missing at an earlier broom vertex");
      ind.parent = static_cast<int>(j);
      ind.root = p.induction[j].root;
      ind.inducing_color = p.induction[j].inducing_color;
    }
    p.induction.push_back(ind);
  }
  return p;
}

std::vector<Fork> find_forks(const Coloring& c, EdgeId xy) {
  if (c.is_colored(xy)) throw ColoringError("fork edge xy must be uncolored");
  const Graph& g = c.graph();
  std::vector<Fork> out;
  const Edge& ed = g.edge(xy);
  for (auto [x, y] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
    const ColorSet handle_missing = c.missing(x) | c.missing(y);
    for (Vertex z : g.neighbors(y)) {
      if (!valid_handle(c, x, y, z)) continue;
      std::vector<Vertex> prongs;
      for (Vertex s : g.neighbors(z)) {
        if (s == x || s == y) continue;
        const Color col = edge_color(c, z, s);
        if (col != kUncolored && handle_missing.contains(col)) prongs.push_back(s);
      }
      for (std::size_t i = 0; i < prongs.size(); ++i) {
        for (std::size_t j = i + 1; j < prongs.size(); ++j) {
          const Vertex s1 = prongs[i];
          const Vertex s2 = prongs[j];
          const std::uint64_t used = bit(x) | bit(y) | bit(z) | bit(s1) | bit(s2);
          for (Vertex t1 : g.neighbors(s1)) {
            if (used & bit(t1)) continue;
            const Color c1 = edge_color(c, s1, t1);
            if (c1 == kUncolored || !handle_missing.contains(c1)) continue;
            for (Vertex t2 : g.neighbors(s2)) {
              if ((used & bit(t2)) || t2 == t1) continue;
              const Color c2 = edge_color(c, s2, t2);
              if (c2 == kUncolored || !handle_missing.contains(c2)) continue;
              if (!c.missing(t2).contains(c1) || !c.missing(t1).contains(c2)) continue;
              out.push_back({x, y, z, s1, s2, t1, t2, edge_color(c, y, z), edge_color(c, z, s1),
                             edge_color(c, z, s2), c1, c2});
            }
          }
        }
      }
    }
  }
  return out;
}

bool satisfies_multifan(const Coloring& c, const Multifan& f) {
  const Graph& g = c.graph();
  if (f.leaves.empty() || f.leaves.size() != f.colors.size()) return false;
  std::vector<Vertex> seen{f.center};
  for (std::size_t i = 0; i < f.leaves.size(); ++i) {
    const Vertex s = f.leaves[i];
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) return false;
    seen.push_back(s);
    const EdgeId e = g.edge_id(f.center, s);
    if (e < 0 || c.color(e) != f.colors[i]) return false;
    if (i == 0) {
      if (c.is_colored(e)) return false;
      continue;
    }
    bool ok = false;
    for (std::size_t j = 0; j < i; ++j) ok = ok || c.missing(f.leaves[j]).contains(f.colors[i]);
    if (!ok) return false;
  }
  return true;
}

bool satisfies_kierstead(const Coloring& c, const KiersteadPath& k) {
  const Graph& g = c.graph();
  const auto& vs = k.vertices;
  if (vs.size() < 2 || k.colors.size() + 1 != vs.size()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const EdgeId e = g.edge_id(vs[i], vs[i + 1]);
    if (e < 0 || c.color(e) != k.colors[i]) return false;
    if (i == 0) {
      if (c.is_colored(e)) return false;
      continue;
    }
    bool ok = false;
    for (std::size_t j = 0; j < i; ++j) ok = ok || c.missing(vs[j]).contains(k.colors[i]);
    if (!ok) return false;
  }
  return true;
}

bool satisfies_broom(const Coloring& c, const ShortBroom& b) {
  const Graph& g = c.graph();
  const std::vector<Vertex> vs = b.vertex_set();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  const EdgeId xy = g.edge_id(b.x, b.y);
  const EdgeId yz = g.edge_id(b.y, b.z);
  if (xy < 0 || c.is_colored(xy) || yz < 0 || c.color(yz) != b.handle_color) return false;
  if (!c.missing(b.x).contains(b.handle_color)) return false;
  if (b.bristles.empty() || b.bristles.size() != b.bristle_colors.size()) return false;
  std::vector<Vertex> earlier{b.x, b.y, b.z};
  for (std::size_t i = 0; i < b.bristles.size(); ++i) {
    const EdgeId e = g.edge_id(b.z, b.bristles[i]);
    if (e < 0 || c.color(e) != b.bristle_colors[i] || !c.is_colored(e)) return false;
    if (!c.missing(earlier).contains(b.bristle_colors[i])) return false;
    earlier.push_back(b.bristles[i]);
  }
  bool simple = true;
  for (std::size_t i = 0; i < b.bristles.size(); ++i) {
    KiersteadPath k{{b.x, b.y, b.z, b.bristles[i]}, {kUncolored, b.handle_color, b.bristle_colors[i]}};
    simple = simple && satisfies_kierstead(c, k);
  }
  return simple == b.simple;
}

bool satisfies_fork(const Coloring& c, const Fork& f) {
  const Graph& g = c.graph();
  const Vertex vs[] = {f.x, f.y, f.z, f.s1, f.s2, f.t1, f.t2};
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  const EdgeId xy = g.edge_id(f.x, f.y);
  if (xy < 0 || c.is_colored(xy)) return false;
  auto color_is = [&](Vertex a, Vertex b, Color want) {
    const EdgeId e = g.edge_id(a, b);
    return e >= 0 && c.is_colored(e) && c.color(e) == want;
  };
  if (!color_is(f.y, f.z, f.yz) || !color_is(f.z, f.s1, f.zs1) || !color_is(f.z, f.s2, f.zs2) ||
      !color_is(f.s1, f.t1, f.s1t1) || !color_is(f.s2, f.t2, f.s2t2)) {
    return false;
  }
  const ColorSet mx = c.missing(f.x);
  const ColorSet mxy = mx | c.missing(f.y);
  return mx.contains(f.yz) && mxy.contains(f.zs1) && mxy.contains(f.zs2) &&
         (mxy & c.missing(f.t2)).contains(f.s1t1) && (mxy & c.missing(f.t1)).contains(f.s2t2);
}

std::string to_string(const Multifan& f) {
  return "multifan r=" + std::to_string(f.center) + " leaves=" + join(f.leaves) +
         " colors=" + join(f.colors, true);
}

std::string to_string(const KiersteadPath& k) {
  return "kierstead path=" + join(k.vertices) + " colors=" + join(k.colors, true);
}

std::string to_string(const ShortBroom& b) {
  return "broom x=" + std::to_string(b.x) + " y=" + std::to_string(b.y) + " z=" + std::to_string(b.z) +
         " bristles=" + join(b.bristles) + " colors=" + join(b.bristle_colors) +
         " simple=" + (b.simple ? "true" : "false");
}

std::string to_string(const Fork& f) {
  return "fork x=" + std::to_string(f.x) + " y=" + std::to_string(f.y) + " z=" + std::to_string(f.z) +
         " s=[" + std::to_string(f.s1) + "," + std::to_string(f.s2) + "] t=[" + std::to_string(f.t1) +
         "," + std::to_string(f.t2) + "] colors=" +
         join(std::vector<Color>{f.yz, f.zs1, f.zs2, f.s1t1, f.s2t2});
}

}  // namespace critcheck
