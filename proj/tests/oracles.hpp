#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "scfe/geometry.hpp"
#include "scfe/signed_graph.hpp"

namespace testkit {

using scfe::PlainGraph;
using scfe::SignedGraph;
using scfe::Vertex;
using scfe::VertexPair;

// Bit b of mask selects the b-th pair in lexicographic order.
PlainGraph graph_from_mask(int n, std::uint64_t mask);
int pair_count(int n);

// One representative (minimum mask) per isomorphism class.
std::vector<PlainGraph> unlabeled_graphs(int n);

PlainGraph net();
PlainGraph cycle(int n);
PlainGraph path(int n);
PlainGraph complete(int n);

SignedGraph square();  // positive 4-cycle 1-2-3-4, negative diagonals
SignedGraph net_complete();

scfe::Drawing drawing(std::initializer_list<scfe::Rational> turns);

// Brute force over all drawings with positions in {0, 1/N, ..., (N-1)/N} and vertex 1 at
// 0, integer arithmetic only. Returns grid positions of a valid drawing.
std::optional<std::vector<int>> grid_valid_drawing(const SignedGraph& g, int grid);

// Integer-arithmetic validity check for grid positions.
bool grid_valid(const SignedGraph& g, const std::vector<int>& pos, int grid);

SignedGraph delete_pairs(const SignedGraph& g, const std::vector<VertexPair>& drop);

}  // namespace testkit
