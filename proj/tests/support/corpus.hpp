#pragma once

#include <string>
#include <vector>

#include "critcheck/graph.hpp"

namespace corpus {

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 10), built by vertex extension with an exact
/// isomorphism test. Order is deterministic.
std::vector<critcheck::Graph> connected_graphs(int n);

/// Exact isomorphism test by refinement-guided backtracking.
bool isomorphic(const critcheck::Graph& a, const critcheck::Graph& b);

/// Reads a graph6-per-line file; throws on IO or decode errors.
std::vector<critcheck::Graph> read_graph6_file(const std::string& path);

/// Directory holding conn<n>.g6, set by the build.
std::string corpus_dir();

/// Connected graphs on n vertices from the generated corpus file.
std::vector<critcheck::Graph> load_connected(int n);

}  // namespace corpus
