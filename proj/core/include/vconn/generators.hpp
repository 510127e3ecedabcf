#pragma once

#include <cstdint>

#include "vconn/graph.hpp"

namespace vconn::gen {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph petersen();
Graph grid(int rows, int cols);
// Complete bipartite graph K_{a,b}; side A is [0, a).
Graph complete_bipartite(int a, int b);
// Two cliques of size `clique` sharing `shared` vertices.
Graph cliques_sharing(int clique, int shared);
// K_n minus a perfect matching (n even).
Graph complete_minus_matching(int n);
// G(n, p) conditioned on connectivity by adding a random spanning tree.
Graph random_connected(int n, double p, std::uint64_t seed);
// Random graph with a target minimum degree: spanning tree plus G(n, p) plus
// edges added to low-degree vertices.
Graph random_min_degree(int n, double p, int min_degree, std::uint64_t seed);
// Random strongly connected digraph: a Hamiltonian cycle plus arcs with
// probability p; weights uniform in [1, max_weight].
WeightedDigraph random_strong_digraph(int n, double p, Weight max_weight, std::uint64_t seed);
WeightedDigraph weighted_cycle(const std::vector<Weight>& weights);

}  // namespace vconn::gen
