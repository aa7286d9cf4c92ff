#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "critcheck/coloring.hpp"

namespace critcheck {

/// (r, rs_1, s_1, ..., rs_p, s_p) with every φ(rs_i), i >= 2, missing at some
/// earlier leaf.
struct Multifan {
  Vertex center = 0;
  std::vector<Vertex> leaves;
  /// colors[i] = φ(r leaves[i]); colors[0] is 0 for the uncolored edge.
  std::vector<Color> colors;
};

/// (v_0, v_0v_1, v_1, ..., v_p) with every φ(v_i v_{i+1}), i >= 1, missing at
/// some earlier vertex.
struct KiersteadPath {
  std::vector<Vertex> vertices;
  /// colors[i] = φ(v_i v_{i+1}); colors[0] is 0 for the uncolored edge.
  std::vector<Color> colors;
};

/// Handle (x, xy, y, yz, z) plus bristles zv_1..zv_p.
struct ShortBroom {
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
  Color handle_color = 0;  // φ(yz)
  std::vector<Vertex> bristles;
  std::vector<Color> bristle_colors;  // φ(zv_i)
  bool simple = false;

  std::vector<Vertex> vertex_set() const;
};

enum class BroomMode { all, maximal };

/// How one bristle joined: its root bristle in the α0-sequence tree and the
/// inducing color φ(z root) drawn from missing(x) ∪ missing(y).
struct BristleInduction {
  int root = 0;
  int parent = -1;  // -1 when the bristle is itself a root
  Color inducing_color = 0;
};

struct BroomProfile {
  std::vector<int> m;  // m[α] for α in [0, k]; m[0] unused
  int sum = 0;
  ColorSet multiply_missed;  // colors with m >= 1
  std::vector<BristleInduction> induction;
};

/// Two 5-vertex Kierstead paths (x,y,z,s_i,t_i) with crosswise tip conditions.
struct Fork {
  Vertex x = 0, y = 0, z = 0, s1 = 0, s2 = 0, t1 = 0, t2 = 0;
  Color yz = 0, zs1 = 0, zs2 = 0, s1t1 = 0, s2t2 = 0;
};

/// Greedy maximal multifan at r from the uncolored edge rs1, scanning colored
/// edges at r by neighbour index. Throws ColoringError when rs1 is colored or
/// absent.
Multifan grow_multifan(const Coloring& c, Vertex r, Vertex s1);

/// All Kierstead paths with 2..max_vertices vertices starting with the
/// uncolored edge e in either orientation. Depth-first, neighbours ascending.
std::vector<KiersteadPath> enumerate_kierstead_paths(const Coloring& c, EdgeId e, int max_vertices);

/// Short brooms rooted at (x, y), where xy must be uncolored. `all` lists
/// every bristle ordering; `maximal` lists, per admissible z, one broom on the
/// closure of admissible bristles (lowest admissible vertex first).
std::vector<ShortBroom> enumerate_short_brooms(const Coloring& c, Vertex x, Vertex y, BroomMode mode);

/// Visits every distinct (z, bristle vertex set) pair reachable as a broom at
/// (x, y), p >= 1. The callback receives z and the bristle mask. Bristle sets
/// determine every order-independent broom quantity.
void for_each_broom_set(const Coloring& c, Vertex x, Vertex y,
                        const std::function<void(Vertex z, std::uint64_t bristles)>& visit);

/// Closure of admissible bristles at handle vertex z; 0 when z is not a
/// valid handle.
std::uint64_t maximal_bristle_set(const Coloring& c, Vertex x, Vertex y, Vertex z);

/// A broom on the given bristle set, bristles ordered greedily (lowest
/// admissible vertex first).
ShortBroom broom_from_set(const Coloring& c, Vertex x, Vertex y, Vertex z, std::uint64_t bristles);

bool is_simple_broom(const Coloring& c, const ShortBroom& b);

BroomProfile broom_profile(const Coloring& c, const ShortBroom& b);

/// Σ_α m(α) over a vertex set: total multiplicity minus distinct missed colors.
int multiplicity_excess(const Coloring& c, std::uint64_t vertex_mask);

/// Forks for the uncolored edge xy, in both orientations of xy, with s1 < s2.
std::vector<Fork> find_forks(const Coloring& c, EdgeId xy);

// Independent re-validation of each structure against its definition.
bool satisfies_multifan(const Coloring& c, const Multifan& f);
bool satisfies_kierstead(const Coloring& c, const KiersteadPath& k);
bool satisfies_broom(const Coloring& c, const ShortBroom& b);
bool satisfies_fork(const Coloring& c, const Fork& f);

// One-line report forms.
std::string to_string(const Multifan& f);
std::string to_string(const KiersteadPath& k);
std::string to_string(const ShortBroom& b);
std::string to_string(const Fork& f);

}  // namespace critcheck
