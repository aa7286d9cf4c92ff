#include "critcheck/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace critcheck {

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string to_string(ColorSet s) {
  std::string out = "{";
  bool first = true;
  for (Color c : s.to_vector()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

Coloring::Coloring(const Graph& g, int k) : graph_(&g), k_(k) {
  if (k < 0 || k > kMaxColors) throw ColoringError("color count out of range: " + std::to_string(k));
  colors_.assign(static_cast<std::size_t>(g.m()), kUncolored);
  present_.assign(static_cast<std::size_t>(g.n()), 0);
  at_.assign(static_cast<std::size_t>(g.n()) * (k + 1), -1);
}

Coloring Coloring::from_assignment(const Graph& g, int k, std::span<const Color> colors) {
  if (colors.size() != static_cast<std::size_t>(g.m())) {
    throw ColoringError("assignment length does not match edge count");
  }
  Coloring out(g, k);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (colors[e] != kUncolored) out.color_edge(e, colors[e]);
  }
  return out;
}

Color Coloring::color(Vertex u, Vertex v) const {
  const EdgeId e = graph_->edge_id(u, v);
  if (e < 0) throw ColoringError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  return colors_[e];
}

int Coloring::uncolored_count() const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), kUncolored));
}

ColorSet Coloring::missing(std::span<const Vertex> vs) const {
  ColorSet out;
  for (Vertex v : vs) out |= missing(v);
  return out;
}

EdgeId Coloring::edge_with_color(Vertex v, Color c) const {
  if (c <= 0 || c > k_) return -1;
  return at_[static_cast<std::size_t>(v) * (k_ + 1) + c];
}

bool Coloring::is_proper() const { return critcheck::is_proper(*graph_, k_, colors_); }

void Coloring::check_color(Color c) const {
  if (c < 1 || c > k_) {
    throw ColoringError("color " + std::to_string(c) + " outside [1," + std::to_string(k_) + "]");
  }
}

void Coloring::place(EdgeId e, Color c) {
  const Edge& ed = graph_->edge(e);
  colors_[e] = c;
  present_[ed.u] |= std::uint64_t{1} << c;
  present_[ed.v] |= std::uint64_t{1} << c;
  slot(ed.u, c) = e;
  slot(ed.v, c) = e;
}

void Coloring::remove(EdgeId e) {
  const Edge& ed = graph_->edge(e);
  const Color c = colors_[e];
  colors_[e] = kUncolored;
  present_[ed.u] &= ~(std::uint64_t{1} << c);
  present_[ed.v] &= ~(std::uint64_t{1} << c);
  slot(ed.u, c) = -1;
  slot(ed.v, c) = -1;
}

void Coloring::color_edge(EdgeId e, Color c) {
  check_color(c);
  if (is_colored(e)) throw ColoringError("edge " + std::to_string(e) + " is already colored");
  const Edge& ed = graph_->edge(e);
  if (present(ed.u).contains(c) || present(ed.v).contains(c)) {
    throw ColoringError("color " + std::to_string(c) + " conflicts at edge " +
                        std::to_string(ed.u) + "-" + std::to_string(ed.v));
  }
  place(e, c);
}

void Coloring::recolor_edge(EdgeId e, Color from, Color to) {
  check_color(to);
  if (color(e) != from || from == kUncolored) {
    throw ColoringError("edge " + std::to_string(e) + " has color " + std::to_string(color(e)) +
                        ", expected " + std::to_string(from));
  }
  if (from == to) return;
  const Edge& ed = graph_->edge(e);
  if (present(ed.u).contains(to) || present(ed.v).contains(to)) {
    throw ColoringError("color " + std::to_string(to) + " conflicts at edge " +
                        std::to_string(ed.u) + "-" + std::to_string(ed.v));
  }
  remove(e);
  place(e, to);
}

void Coloring::uncolor_edge(EdgeId e) {
  if (!is_colored(e)) throw ColoringError("edge " + std::to_string(e) + " is not colored");
  remove(e);
}

void Coloring::assign_batch(std::span<const std::pair<EdgeId, Color>> updates) {
  std::vector<std::pair<EdgeId, Color>> previous;
  previous.reserve(updates.size());
  for (const auto& [e, c] : updates) {
    if (c != kUncolored) check_color(c);
    previous.emplace_back(e, color(e));
  }
  for (const auto& [e, c] : updates) {
    if (is_colored(e)) remove(e);
  }
  bool ok = true;
  for (const auto& [e, c] : updates) {
    if (c == kUncolored) continue;
    const Edge& ed = graph_->edge(e);
    if (present(ed.u).contains(c) || present(ed.v).contains(c)) {
      ok = false;
      break;
    }
    place(e, c);
  }
  if (ok) return;
  for (const auto& [e, c] : updates) {
    if (is_colored(e)) remove(e);
  }
  for (const auto& [e, c] : previous) {
    if (c != kUncolored) place(e, c);
  }
  throw ColoringError("batch recoloring would make the coloring improper");
}

Coloring Coloring::permuted(std::span<const Color> perm) const {
  if (perm.size() != static_cast<std::size_t>(k_) + 1 || perm[0] != 0) {
    throw ColoringError("color permutation has wrong shape");
  }
  std::vector<Color> mapped(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) mapped[i] = perm[colors_[i]];
  return from_assignment(*graph_, k_, mapped);
}

bool is_proper(const Graph& g, int k, std::span<const Color> colors) {
  if (colors.size() != static_cast<std::size_t>(g.m())) return false;
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(g.n()), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Color c = colors[e];
    if (c == kUncolored) continue;
    if (c < 0 || c > k) return false;
    const std::uint64_t b = std::uint64_t{1} << c;
    const Edge& ed = g.edge(e);
    if ((seen[ed.u] & b) || (seen[ed.v] & b)) return false;
    seen[ed.u] |= b;
    seen[ed.v] |= b;
  }
  return true;
}

bool is_elementary(const Coloring& c, std::span<const Vertex> xs) {
  ColorSet seen;
  for (Vertex v : xs) {
    const ColorSet m = c.missing(v);
    if (!(m & seen).empty()) return false;
    seen |= m;
  }
  return true;
}

std::uint64_t coloring_hash(const Coloring& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (Color col : c.assignment()) {
    h ^= static_cast<std::uint64_t>(col);
    h *= 1099511628211ull;
  }
  return h;
}

std::string write_coloring(const Coloring& c) {
  std::ostringstream out;
  out << "k " << c.k() << '\n';
  for (EdgeId e = 0; e < c.graph().m(); ++e) {
    const Edge& ed = c.graph().edge(e);
    out << ed.u << ' ' << ed.v << ' ';
    if (c.is_colored(e)) {
      out << c.color(e);
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

Coloring read_coloring(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  int k = 0;
  if (!(in >> word) || word != "k" || !(in >> k)) {
    throw ColoringError("coloring text must start with 'k <int>'");
  }
  if (k < 0 || k > kMaxColors) throw ColoringError("color count out of range");
  std::vector<Color> colors(static_cast<std::size_t>(g.m()), kUncolored);
  std::vector<bool> listed(static_cast<std::size_t>(g.m()), false);
  Vertex u = 0;
  Vertex v = 0;
  while (in >> u) {
    if (!(in >> v >> word)) throw ColoringError("truncated edge line in coloring text");
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || g.edge_id(u, v) < 0) {
      throw ColoringError("coloring lists non-edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    const EdgeId e = g.edge_id(u, v);
    if (listed[e]) throw ColoringError("edge listed twice in coloring text");
    listed[e] = true;
    if (word == "-") continue;
    try {
      std::size_t used = 0;
      colors[e] = std::stoi(word, &used);
      if (used != word.size()) throw ColoringError("bad color token '" + word + "'");
    } catch (const std::logic_error&) {
      throw ColoringError("bad color token '" + word + "'");
    }
  }
  if (!in.eof()) throw ColoringError("malformed coloring text");
  return Coloring::from_assignment(g, k, colors);
}

}  // namespace critcheck
