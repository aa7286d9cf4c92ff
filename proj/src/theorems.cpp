#include "critcheck/theorems.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "critcheck/graph6.hpp"
#include "critcheck/kempe.hpp"

namespace critcheck {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::uint8_t> to_word(const std::vector<Color>& colors) {
  return {colors.begin(), colors.end()};
}

std::string word_text(const Coloring& c) {
  std::string out;
  for (Color col : c.assignment()) {
    if (!out.empty()) out += ',';
    out += col == kUncolored ? "-" : std::to_string(col);
  }
  return out;
}

std::string edge_text(const Graph& g, EdgeId e) {
  return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Randomized depth-first descent to one canonical coloring of G - skip.
class Diver {
 public:
  Diver(const Graph& g, int k, EdgeId skip) : g_(g), k_(k) {
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (e != skip) order_.push_back(e);
    }
  }

  std::optional<std::vector<Color>> dive(std::mt19937_64& rng, std::size_t node_limit) {
    word_.assign(static_cast<std::size_t>(g_.m()), kUncolored);
    present_.assign(static_cast<std::size_t>(g_.n()), 0);
    nodes_ = node_limit;
    if (!run(0, 0, rng)) return std::nullopt;
    return canonical_word(word_);
  }

 private:
  bool run(std::size_t idx, int used, std::mt19937_64& rng) {
    if (idx == order_.size()) return true;
    if (nodes_ == 0) return false;
    --nodes_;
    const Edge& e = g_.edge(order_[idx]);
    Mask avail = ColorSet::range(std::min(k_, used + 1)).bits() & ~(present_[e.u] | present_[e.v]);
    std::vector<Color> options;
    for (; avail != 0; avail &= avail - 1) options.push_back(std::countr_zero(avail));
    std::shuffle(options.begin(), options.end(), rng);
    for (Color c : options) {
      word_[order_[idx]] = c;
      present_[e.u] |= Mask{1} << c;
      present_[e.v] |= Mask{1} << c;
      if (run(idx + 1, std::max(used, c), rng)) return true;
      present_[e.u] &= ~(Mask{1} << c);
      present_[e.v] &= ~(Mask{1} << c);
      word_[order_[idx]] = kUncolored;
      if (nodes_ == 0) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<EdgeId> order_;
  std::vector<Color> word_;
  std::vector<Mask> present_;
  std::size_t nodes_ = 0;
};

Report make_report(std::string_view id, const CheckContext& ctx) {
  Report r;
  r.check = std::string(id);
  r.graph6 = ctx.graph6();
  return r;
}

// Shared preamble for the coloring-based checks.
bool require_delta_critical(CheckContext& ctx, Report& r) {
  if (ctx.graph().m() > 0 && ctx.is_delta_critical()) return true;
  r.skipped = 1;
  r.notes.push_back("not delta-critical");
  return false;
}

void note_sampling(CheckContext& ctx, Report& r) {
  bool sampled = false;
  for (EdgeId e = 0; e < ctx.graph().m(); ++e) {
    if (!ctx.colorings_without(e).exhaustive) sampled = true;
  }
  r.sampled = sampled;
  if (sampled) {
    r.notes.push_back("colorings sampled: budget " + std::to_string(ctx.options().budget) + " seed " +
                      std::to_string(ctx.options().seed));
  } else {
    r.notes.push_back("colorings exhaustive");
  }
}

// Visits every stored coloring of G - e for every edge e.
template <typename F>
void each_coloring(CheckContext& ctx, F&& visit) {
  const Graph& g = ctx.graph();
  for (EdgeId e = 0; e < g.m(); ++e) {
    const ColoringSample& s = ctx.colorings_without(e);
    for (const auto& w : s.words) {
      const Coloring c = materialize(g, s.k, w);
      visit(e, c);
    }
  }
}

std::string revalidated(bool ok) { return ok ? " [revalidated]" : " [structure-invalid]"; }

}  // namespace

ColoringSample sample_colorings(const Graph& g, int k, EdgeId skip, std::size_t budget,
                                std::uint64_t seed) {
  ColoringSample out;
  out.edge = skip;
  out.k = k;
  out.exhaustive = true;
  for_each_coloring(
      g, k, EnumMode::canonical,
      [&](const Coloring& c) {
        if (budget != 0 && out.words.size() == budget) {
          out.exhaustive = false;
          return false;
        }
        out.words.push_back(to_word(c.assignment()));
        return true;
      },
      skip);
  if (out.exhaustive) return out;

  // Over budget: replace the lexicographic prefix with seeded random descents.
  std::mt19937_64 rng(splitmix64(seed ^ fnv1a(encode_graph6(g)) ^
                                 (static_cast<std::uint64_t>(skip) + 1) * 0x9E3779B97F4A7C15ULL));
  Diver diver(g, k, skip);
  std::set<std::vector<std::uint8_t>> found;
  const std::size_t max_attempts = budget * 50;
  for (std::size_t attempt = 0; attempt < max_attempts && found.size() < budget; ++attempt) {
    if (auto w = diver.dive(rng, 100000)) found.insert(to_word(*w));
  }
  out.words.assign(found.begin(), found.end());
  return out;
}

Coloring materialize(const Graph& g, int k, const std::vector<std::uint8_t>& word) {
  const std::vector<Color> colors(word.begin(), word.end());
  return Coloring::from_assignment(g, k, colors);
}

CheckContext::CheckContext(const Graph& g, CheckOptions options)
    : graph_(g), options_(options), graph6_(encode_graph6(g)) {}

int CheckContext::chromatic_index() {
  if (!chi_) chi_ = critcheck::chromatic_index(graph_);
  return *chi_;
}

bool CheckContext::is_class_two() {
  return graph_.m() > 0 && chromatic_index() == graph_.max_degree() + 1;
}

bool CheckContext::is_critical_edge(EdgeId e) {
  if (!critical_) {
    std::vector<bool> crit(static_cast<std::size_t>(graph_.m()), false);
    if (is_class_two()) {
      for (EdgeId f = 0; f < graph_.m(); ++f) {
        crit[f] = find_coloring(graph_, graph_.max_degree(), f).has_value();
      }
    }
    critical_ = std::move(crit);
  }
  return (*critical_)[static_cast<std::size_t>(e)];
}

bool CheckContext::is_delta_critical() {
  if (!delta_critical_) {
    bool ok = graph_.m() > 0 && graph_.is_connected() && is_class_two();
    for (EdgeId e = 0; ok && e < graph_.m(); ++e) ok = is_critical_edge(e);
    delta_critical_ = ok;
  }
  return *delta_critical_;
}

const ColoringSample& CheckContext::colorings_without(EdgeId e) {
  auto it = samples_.find(e);
  if (it != samples_.end()) return it->second;
  ColoringSample s;
  s.edge = e;
  s.k = graph_.max_degree();
  if (is_critical_edge(e)) {
    s = sample_colorings(graph_, graph_.max_degree(), e, options_.budget, options_.seed);
  }
  return samples_.emplace(e, std::move(s)).first->second;
}

// ---------------------------------------------------------------------------
// Adjacency lemma

Report verify_val(CheckContext& ctx) {
  Report r = make_report("val", ctx);
  const Graph& g = ctx.graph();
  if (!ctx.is_class_two()) {
    r.skipped = 2 * static_cast<std::uint64_t>(g.m());
    r.notes.push_back("class 1");
    return r;
  }
  const int delta = g.max_degree();
  for (EdgeId e = 0; e < g.m(); ++e) {
    const bool critical = ctx.is_critical_edge(e);
    for (int side = 0; side < 2; ++side) {
      const Vertex x = side == 0 ? g.edge(e).u : g.edge(e).v;
      const Vertex y = g.other(e, x);
      if (!critical) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      int full = 0;
      for (Vertex w : g.neighbors(x)) full += (w != y && g.degree(w) == delta) ? 1 : 0;
      const int need = delta - g.degree(y) + 1;
      if (full < need) {
        r.violations.push_back("x=" + std::to_string(x) + " y=" + std::to_string(y) +
                               " delta_neighbors=" + std::to_string(full) +
                               " required=" + std::to_string(need));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Multifans and Kierstead paths

Report verify_multifan(CheckContext& ctx) {
  Report r = make_report("multifan", ctx);
  if (!require_delta_critical(ctx, r)) return r;
  const Graph& g = ctx.graph();
  each_coloring(ctx, [&](EdgeId e, const Coloring& c) {
    for (int side = 0; side < 2; ++side) {
      const Vertex center = side == 0 ? g.edge(e).u : g.edge(e).v;
      const Multifan f = grow_multifan(c, center, g.other(e, center));
      std::vector<Vertex> vs{center};
      vs.insert(vs.end(), f.leaves.begin(), f.leaves.end());
      const std::string where = "edge=" + edge_text(g, e) + " coloring=" + word_text(c) + " ";

      ++r.checked;
      const bool elementary = is_elementary(c, vs);
      if (!elementary) {
        r.violations.push_back(where + to_string(f) + " not elementary" +
                               revalidated(satisfies_multifan(c, f)));
        continue;
      }
      const ColorSet at_center = c.missing(center);
      for (Vertex s : f.leaves) {
        for (Color a : at_center.to_vector()) {
          for (Color b : c.missing(s).to_vector()) {
            if (a == b) continue;
            ++r.checked;
            if (!linked(c, center, s, a, b)) {
              r.violations.push_back(where + to_string(f) + " leaf " + std::to_string(s) +
                                     " not linked (" + std::to_string(a) + "," + std::to_string(b) +
                                     ")" + revalidated(satisfies_multifan(c, f)));
            }
          }
        }
      }
    }
  });
  note_sampling(ctx, r);
  return r;
}

Report verify_kierstead(CheckContext& ctx) {
  Report r = make_report("kierstead", ctx);
  if (!require_delta_critical(ctx, r)) return r;
  const Graph& g = ctx.graph();
  const int delta = g.max_degree();
  each_coloring(ctx, [&](EdgeId e, const Coloring& c) {
    for (const KiersteadPath& k : enumerate_kierstead_paths(c, e, 4)) {
      if (k.vertices.size() != 4) continue;
      const auto& v = k.vertices;
      const std::string where = "edge=" + edge_text(g, e) + " coloring=" + word_text(c) + " ";
      ++r.checked;
      const int overlap = (c.missing(v[3]) & (c.missing(v[0]) | c.missing(v[1]))).size();
      if (overlap > 1) {
        r.violations.push_back(where + to_string(k) + " tip overlap " + std::to_string(overlap) +
                               revalidated(satisfies_kierstead(c, k)));
      }
      if (std::min(g.degree(v[1]), g.degree(v[2])) < delta) {
        ++r.checked;
        if (!is_elementary(c, v)) {
          r.violations.push_back(where + to_string(k) + " not elementary" +
                                 revalidated(satisfies_kierstead(c, k)));
        }
      } else {
        ++r.skipped;
      }
    }
  });
  note_sampling(ctx, r);
  return r;
}

// ---------------------------------------------------------------------------
// Brooms

void tally_broom_main(const Coloring& c, Vertex x, Vertex y, BroomMode mode, BroomTally& out) {
  const Graph& g = c.graph();
  auto judge = [&](Vertex z, Mask bristles) {
    ++out.checked;
    const Mask all = bristles | bit(x) | bit(y) | bit(z);
    const int excess = multiplicity_excess(c, all);
    int doubled = 0;
    int over = 0;
    for (Color a = 1; a <= c.k(); ++a) {
      int count = 0;
      for (Vertex v : mask_vertices(all)) count += c.missing(v).contains(a) ? 1 : 0;
      doubled += count == 2 ? 1 : 0;
      over += count > 2 ? 1 : 0;
    }
    const bool ok = excess <= 1 && (excess == 0 || (doubled == 1 && over == 0));
    if (!ok) {
      const ShortBroom b = broom_from_set(c, x, y, z, bristles);
      out.violations.push_back("coloring=" + word_text(c) + " " + to_string(b) + " excess=" +
                               std::to_string(excess) + revalidated(satisfies_broom(c, b)));
    }
  };
  if (mode == BroomMode::all) {
    for_each_broom_set(c, x, y, judge);
    return;
  }
  for (Vertex z : g.neighbors(y)) {
    if (z == x) continue;
    const Mask closure = maximal_bristle_set(c, x, y, z);
    if (closure != 0) judge(z, closure);
  }
}

void tally_broom_elementary(const Coloring& c, Vertex x, Vertex y, BroomTally& out) {
  const Graph& g = c.graph();
  const int delta = c.k();
  for_each_broom_set(c, x, y, [&](Vertex z, Mask bristles) {
    if (std::min(g.degree(y), g.degree(z)) >= delta) {
      ++out.skipped;
      return;
    }
    ++out.checked;
    const std::vector<Vertex> vs = mask_vertices(bristles | bit(x) | bit(y) | bit(z));
    if (!is_elementary(c, vs)) {
      const ShortBroom b = broom_from_set(c, x, y, z, bristles);
      out.violations.push_back("coloring=" + word_text(c) + " " + to_string(b) + " not elementary" +
                               revalidated(satisfies_broom(c, b)));
    }
  });
  // Degree inequality over the per-root maximal brooms.
  for (Vertex z : g.neighbors(y)) {
    if (z == x) continue;
    const Mask closure = maximal_bristle_set(c, x, y, z);
    if (closure == 0) continue;
    if (std::min(g.degree(y), g.degree(z)) >= delta) {
      ++out.skipped;
      continue;
    }
    ++out.checked;
    int sum = 0;
    for (Vertex v : mask_vertices(closure | bit(x) | bit(y))) {
      sum += g.degree(v) + (g.adjacent(z, v) ? 1 : 0) - delta;
    }
    if (sum < 2) {
      const ShortBroom b = broom_from_set(c, x, y, z, closure);
      out.violations.push_back("coloring=" + word_text(c) + " " + to_string(b) + " degree sum " +
                               std::to_string(sum) + revalidated(satisfies_broom(c, b)));
    }
  }
}

namespace {

template <typename Kernel>
Report broom_report(std::string_view id, CheckContext& ctx, std::string note, Kernel&& kernel) {
  Report r = make_report(id, ctx);
  if (!require_delta_critical(ctx, r)) return r;
  const Graph& g = ctx.graph();
  BroomTally tally;
  each_coloring(ctx, [&](EdgeId e, const Coloring& c) {
    const std::size_t before = tally.violations.size();
    kernel(c, g.edge(e).u, g.edge(e).v, tally);
    kernel(c, g.edge(e).v, g.edge(e).u, tally);
    for (std::size_t i = before; i < tally.violations.size(); ++i) {
      tally.violations[i] = "edge=" + edge_text(g, e) + " " + tally.violations[i];
    }
  });
  r.checked = tally.checked;
  r.skipped = tally.skipped;
  r.violations = std::move(tally.violations);
  note_sampling(ctx, r);
  if (!note.empty()) r.notes.push_back(std::move(note));
  return r;
}

}  // namespace

Report verify_broom_main(CheckContext& ctx) {
  const BroomMode mode = ctx.options().broom_mode;
  return broom_report("broom_main", ctx, mode == BroomMode::all ? "brooms: all" : "brooms: maximal",
                      [mode](const Coloring& c, Vertex x, Vertex y, BroomTally& t) {
                        tally_broom_main(c, x, y, mode, t);
                      });
}

Report verify_broom_elementary(CheckContext& ctx) {
  return broom_report("broom_elementary", ctx, "", [](const Coloring& c, Vertex x, Vertex y, BroomTally& t) {
    tally_broom_elementary(c, x, y, t);
  });
}

// ---------------------------------------------------------------------------
// Vertex splitting

Report verify_splitting_suite(CheckContext& ctx) {
  Report r = make_report("splitting", ctx);
  const Graph& g = ctx.graph();
  const int n = g.n();
  const int delta = g.max_degree();
  if (g.m() == 0) {
    r.skipped = 1;
    r.notes.push_back("edgeless");
    return r;
  }

  // Splitting theorem: every split of a dense class-1 regular graph.
  const bool split_applies = g.is_connected() && g.is_regular() && !ctx.is_class_two() &&
                             3 * delta >= 2 * (n - 1) && n + 1 <= kMaxVertices;
  if (split_applies) {
    for (Vertex v = 0; v < n; ++v) {
      for (const VertexPartition& p : neighborhood_bipartitions(g, v, ctx.options().split_cap)) {
        ++r.checked;
        const Graph h = split_vertex(g, v, p);
        if (!is_delta_critical(h)) {
          r.violations.push_back("split v=" + std::to_string(v) + " into " + encode_graph6(h) +
                                 " is not delta-critical");
        }
      }
    }
  } else {
    ++r.skipped;
    r.notes.push_back("splitting hypothesis unmet");
  }

  // Full-deficiency pair lemmas.
  if (ctx.is_class_two()) {
    for (const Edge& pair : full_deficiency_pairs(g)) {
      if (!ctx.is_critical_edge(g.edge_id(pair.u, pair.v))) {
        ++r.skipped;
        continue;
      }
      const Vertex x = pair.u;
      const Vertex y = pair.v;
      const bool both_low = g.degree(x) < delta && g.degree(y) < delta;
      const Mask near = g.neighbor_mask(x) | g.neighbor_mask(y) | bit(x) | bit(y);
      const int near_count = std::popcount(near);
      const std::string tag = "pair=" + std::to_string(x) + "-" + std::to_string(y) + " ";
      int low_count = 0;
      for (Vertex a = 0; a < n; ++a) {
        if (a == x || a == y) continue;
        const int d = g.degree(a);
        low_count += d == delta - 1 ? 1 : 0;
        // (i) neighbours of the pair have full degree.
        if (near & bit(a)) {
          ++r.checked;
          if (d != delta) r.violations.push_back(tag + "neighbour " + std::to_string(a) + " degree " + std::to_string(d));
        } else {
          ++r.skipped;
        }
        // (ii) distance two.
        if (distance_to_pair(g, a, x, y) == 2) {
          ++r.checked;
          if (d < delta - 1 || (both_low && d != delta)) {
            r.violations.push_back(tag + "distance-2 vertex " + std::to_string(a) + " degree " + std::to_string(d));
          }
        } else {
          ++r.skipped;
        }
        // (iii) large-degree vertices.
        if (d >= n - near_count) {
          ++r.checked;
          if (d < delta - 1 || (both_low && d != delta)) {
            r.violations.push_back(tag + "vertex " + std::to_string(a) + " degree " + std::to_string(d) +
                                   " below bound");
          }
        } else {
          ++r.skipped;
        }
      }
      // At most one (Δ-1)-vertex outside the pair in the dense range.
      if (3 * delta >= 2 * (n - 1)) {
        ++r.checked;
        if (low_count > 1) {
          r.violations.push_back(tag + std::to_string(low_count) + " vertices of degree delta-1");
        }
      } else {
        ++r.skipped;
      }
    }
  } else {
    ++r.skipped;
  }

  // Two Kierstead paths sharing a handle, tips missing only pair colors.
  if (ctx.is_delta_critical()) {
    each_coloring(ctx, [&](EdgeId e, const Coloring& c) {
      for (int side = 0; side < 2; ++side) {
        const Vertex x = side == 0 ? g.edge(e).u : g.edge(e).v;
        const Vertex y = g.other(e, x);
        const ColorSet pair = c.missing(x) | c.missing(y);
        for (Vertex z : g.neighbors(y)) {
          if (z == x || !c.missing(x).contains(c.color(y, z))) continue;
          std::vector<Vertex> tips;
          for (Vertex u : g.neighbors(z)) {
            if (u == x || u == y) continue;
            if (pair.contains(c.color(z, u)) && (c.missing(u) - pair).empty()) tips.push_back(u);
          }
          for (std::size_t i = 0; i < tips.size(); ++i) {
            for (std::size_t j = i + 1; j < tips.size(); ++j) {
              ++r.checked;
              if (std::max(g.degree(tips[i]), g.degree(tips[j])) != delta) {
                r.violations.push_back("edge=" + edge_text(g, e) + " coloring=" + word_text(c) + " x=" +
                                       std::to_string(x) + " z=" + std::to_string(z) + " tips " +
                                       std::to_string(tips[i]) + "," + std::to_string(tips[j]) +
                                       " both below delta");
              }
            }
          }
        }
      }
    });
    note_sampling(ctx, r);
  } else {
    ++r.skipped;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Overfull

Report verify_overfull_suite(CheckContext& ctx) {
  Report r = make_report("overfull", ctx);
  if (!require_delta_critical(ctx, r)) return r;
  const Graph& g = ctx.graph();
  const int n = g.n();
  const int delta = g.max_degree();

  if (3 * delta >= 2 * n + 5 * g.min_degree() - 12) {
    ++r.checked;
    if (!is_overfull(g)) r.violations.push_back("dense but not overfull");
  } else {
    ++r.skipped;
  }

  for (Vertex a = 0; a < n; ++a) {
    const int k = g.degree(a);
    const int high = delta - k + 1;
    const int low = n - delta + 2 * k - 6;
    const bool weak = 3 * k <= 2 * delta - n + 2;
    const bool strong = 3 * k <= 2 * delta - n + 5;
    if (!strong) {
      ++r.skipped;
      continue;
    }
    const std::string tag = "a=" + std::to_string(a) + " ";
    std::vector<Vertex> at_low;
    for (Vertex v = 0; v < n; ++v) {
      if (v == a) continue;
      const int d = g.degree(v);
      // Checked once per threshold that applies.
      r.checked += weak ? 2 : 1;
      if (d < high && d > low) {
        r.violations.push_back(tag + "v=" + std::to_string(v) + " degree " + std::to_string(d) +
                               " in the gap");
      }
      if (d == low) at_low.push_back(v);
    }
    for (std::size_t i = 0; i < at_low.size(); ++i) {
      for (std::size_t j = i + 1; j < at_low.size(); ++j) {
        ++r.checked;
        if (!g.adjacent(at_low[i], at_low[j])) {
          r.violations.push_back(tag + std::to_string(at_low[i]) + "," + std::to_string(at_low[j]) +
                                 " at the low degree but not adjacent");
        }
      }
    }
    for (Vertex b : g.neighbors(a)) {
      if (g.degree(b) != delta) continue;
      const EdgeId ab = g.edge_id(a, b);
      const ColoringSample& s = ctx.colorings_without(ab);
      for (const auto& w : s.words) {
        const Coloring c = materialize(g, s.k, w);
        const ColorSet pair = c.missing(a) | c.missing(b);
        for (Vertex v = 0; v < n; ++v) {
          if (v == a || g.degree(v) < high) continue;
          ++r.checked;
          const int overlap = (c.missing(v) & pair).size();
          if (overlap > 1) {
            r.violations.push_back(tag + "b=" + std::to_string(b) + " coloring=" + word_text(c) + " v=" +
                                   std::to_string(v) + " overlap " + std::to_string(overlap));
          }
        }
      }
    }
  }

  // Parity: each color is missed at a number of vertices with the parity of n.
  each_coloring(ctx, [&](EdgeId e, const Coloring& c) {
    ++r.checked;
    for (Color col = 1; col <= c.k(); ++col) {
      int count = 0;
      for (Vertex v = 0; v < n; ++v) count += c.missing(v).contains(col) ? 1 : 0;
      if ((count - n) % 2 != 0) {
        r.violations.push_back("edge=" + edge_text(g, e) + " coloring=" + word_text(c) + " color " +
                               std::to_string(col) + " parity");
        break;
      }
    }
  });
  note_sampling(ctx, r);
  return r;
}

// ---------------------------------------------------------------------------
// Forks

namespace {

struct ForkFrame {
  Vertex x, y, z, s1, s2, t1, t2;
  auto operator<=>(const ForkFrame&) const = default;
};

// 7-vertex frames on the orientation (x, y), s1 < s2.
std::vector<ForkFrame> fork_frames(const Graph& g, Vertex x, Vertex y) {
  std::vector<ForkFrame> out;
  for (Vertex z : g.neighbors(y)) {
    if (z == x) continue;
    const auto nz = g.neighbors(z);
    for (Vertex s1 : nz) {
      if (s1 == x || s1 == y) continue;
      for (Vertex s2 : nz) {
        if (s2 <= s1 || s2 == x || s2 == y) continue;
        const Mask used = bit(x) | bit(y) | bit(z) | bit(s1) | bit(s2);
        for (Vertex t1 : g.neighbors(s1)) {
          if (used & bit(t1)) continue;
          for (Vertex t2 : g.neighbors(s2)) {
            if ((used | bit(t1)) & bit(t2)) continue;
            out.push_back({x, y, z, s1, s2, t1, t2});
          }
        }
      }
    }
  }
  return out;
}

bool degree_rules_out_fork(const Graph& g, const ForkFrame& f) {
  return g.max_degree() >= g.degree(f.x) + g.degree(f.t1) + g.degree(f.t2) + 1;
}

struct Tip5 {
  Vertex x, y, z, s, t;
  auto operator<=>(const Tip5&) const = default;
};

bool recolored_witness(const Coloring& c, const Tip5& p) {
  const Color yz = c.color(p.y, p.z);
  const Color zs = c.color(p.z, p.s);
  const Color st = c.color(p.s, p.t);
  const ColorSet mt = c.missing(p.t);
  return (c.missing(p.x) & mt).contains(yz) && (c.missing(p.y) & mt).contains(zs) &&
         c.missing(p.x).contains(st);
}

}  // namespace

Report verify_fork_suite(CheckContext& ctx) {
  Report r = make_report("fork", ctx);
  if (!require_delta_critical(ctx, r)) return r;
  const Graph& g = ctx.graph();
  const int delta = g.max_degree();
  bool inconclusive = false;

  for (EdgeId e = 0; e < g.m(); ++e) {
    const ColoringSample& sample = ctx.colorings_without(e);
    std::vector<Coloring> colorings;
    colorings.reserve(sample.words.size());
    for (const auto& w : sample.words) colorings.push_back(materialize(g, sample.k, w));

    for (int side = 0; side < 2; ++side) {
      const Vertex x = side == 0 ? g.edge(e).u : g.edge(e).v;
      const Vertex y = g.other(e, x);
      const std::vector<ForkFrame> frames = fork_frames(g, x, y);
      std::uint64_t degree_frames = 0;
      for (const ForkFrame& f : frames) degree_frames += degree_rules_out_fork(g, f) ? 1 : 0;
      std::set<Tip5> rich;  // paths needing a recolored witness
      std::map<ForkFrame, std::pair<bool, bool>> universal;  // frame -> (all >= 3, fork seen)

      for (const Coloring& c : colorings) {
        const std::string where = "edge=" + edge_text(g, e) + " coloring=" + word_text(c) + " ";
        const ColorSet pair = c.missing(x) | c.missing(y);
        std::vector<KiersteadPath> paths;
        for (KiersteadPath& k : enumerate_kierstead_paths(c, e, 5)) {
          if (k.vertices.size() == 5 && k.vertices[0] == x) paths.push_back(std::move(k));
        }
        for (const KiersteadPath& k : paths) {
          const auto& v = k.vertices;
          if ((c.missing(v[4]) & pair).size() >= 3) {
            ++r.checked;
            if (g.degree(v[1]) != delta || g.degree(v[2]) != delta) {
              r.violations.push_back(where + to_string(k) + " rich tip with low handle degree" +
                                     revalidated(satisfies_kierstead(c, k)));
            }
            rich.insert({v[0], v[1], v[2], v[3], v[4]});
          } else {
            ++r.skipped;
          }
        }
        for (std::size_t i = 0; i < paths.size(); ++i) {
          for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const auto& p = paths[i].vertices;
            const auto& q = paths[j].vertices;
            if (p[2] != q[2] || paths[i].colors[3] != paths[j].colors[3]) continue;
            ++r.checked;
            const int common = (c.missing(p[4]) & c.missing(q[4]) & pair).size();
            if (common > 3) {
              r.violations.push_back(where + to_string(paths[i]) + " and " + to_string(paths[j]) +
                                     " share " + std::to_string(common) + " tip colors");
            }
          }
        }
        r.checked += degree_frames;
        for (const Fork& f : find_forks(c, e)) {
          if (f.x != x) continue;
          const ForkFrame frame{f.x, f.y, f.z, f.s1, f.s2, f.t1, f.t2};
          if (degree_rules_out_fork(g, frame)) {
            r.violations.push_back(where + to_string(f) + " exists despite degree bound" +
                                   revalidated(satisfies_fork(c, f)));
          }
          if (ctx.options().fork_universal) universal[frame].second = true;
        }
        if (ctx.options().fork_universal && sample.exhaustive) {
          for (const ForkFrame& f : frames) {
            const int common = (pair & c.missing(f.t1) & c.missing(f.t2)).size();
            auto [it, fresh] = universal.try_emplace(f, true, false);
            if (common < 3) it->second.first = false;
          }
        }
      }

      // Existence of a recolored coloring for every rich path.
      for (const Tip5& p : rich) {
        const bool found = std::any_of(colorings.begin(), colorings.end(),
                                       [&](const Coloring& c) { return recolored_witness(c, p); });
        if (found) {
          ++r.checked;
        } else if (sample.exhaustive) {
          ++r.checked;
          r.violations.push_back("edge=" + edge_text(g, e) + " path " + std::to_string(p.x) + "," +
                                 std::to_string(p.y) + "," + std::to_string(p.z) + "," +
                                 std::to_string(p.s) + "," + std::to_string(p.t) +
                                 " has no recolored witness");
        } else {
          ++r.skipped;
          inconclusive = true;
        }
      }

      if (ctx.options().fork_universal) {
        if (!sample.exhaustive) {
          r.skipped += frames.size();
        } else {
          for (const auto& [f, flags] : universal) {
            if (!flags.first) continue;
            ++r.checked;
            if (flags.second) {
              r.violations.push_back("edge=" + edge_text(g, e) + " fork on rich frame z=" +
                                     std::to_string(f.z) + " s=" + std::to_string(f.s1) + "," +
                                     std::to_string(f.s2) + " t=" + std::to_string(f.t1) + "," +
                                     std::to_string(f.t2));
            }
          }
        }
      }
    }
  }
  note_sampling(ctx, r);
  if (inconclusive) r.notes.push_back("recolored witness search inconclusive under sampling");
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"val",       "multifan",  "kierstead", "broom_main",
                                            "broom_elementary", "splitting", "overfull", "fork"};
  return ids;
}

bool is_check_id(std::string_view id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Report run_check(std::string_view id, CheckContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  if (id == "val") {
    r = verify_val(ctx);
  } else if (id == "multifan") {
    r = verify_multifan(ctx);
  } else if (id == "kierstead") {
    r = verify_kierstead(ctx);
  } else if (id == "broom_main") {
    r = verify_broom_main(ctx);
  } else if (id == "broom_elementary") {
    r = verify_broom_elementary(ctx);
  } else if (id == "splitting") {
    r = verify_splitting_suite(ctx);
  } else if (id == "overfull") {
    r = verify_overfull_suite(ctx);
  } else if (id == "fork") {
    r = verify_fork_suite(ctx);
  } else {
    throw std::invalid_argument("unknown check '" + std::string(id) + "'");
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_check(std::string_view id, const Graph& g, const CheckOptions& options) {
  CheckContext ctx(g, options);
  return run_check(id, ctx);
}

}  // namespace critcheck
