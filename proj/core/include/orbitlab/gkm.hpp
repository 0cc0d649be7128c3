// GKM graph of the isospectral staircase manifold: one vertex per diagonal
// word (all n! permutations), one edge per (vertex, support pair) orbit of
// the value swap in positions i and j. Edges with j = i+1 trace the polytope
// 1-skeleton; the double-step pair's edges are the hexagon diagonals.
#pragma once

#include <string>
#include <vector>

#include "orbitlab/hessenberg.hpp"
#include "orbitlab/permutohedron.hpp"
#include "orbitlab/weights.hpp"

namespace orbitlab {

struct GkmVertex {
  Perm sigma;
  std::string word;         // perm_word(sigma)
  std::vector<Rat> coords;  // vertex_coordinates(sigma, lambda)
};

struct GkmEdge {
  int u = 0;  // vertex indices into GkmGraph::vertices, u < v
  int v = 0;
  SupportPair pair;   // the swapped position pair (i, j), i < j
  WeightVec weight;   // e_i - e_j
  bool diagonal() const { return pair.second > pair.first + 1; }
  const char* cls() const { return diagonal() ? "diagonal" : "polytope"; }
};

struct GkmGraph {
  int n = 0;
  int N = 0;  // regular degree
  std::vector<GkmVertex> vertices;  // lexicographic by one-line word
  std::vector<GkmEdge> edges;       // ordered by (u, pair)
};

// The other endpoint of sigma's (i,j)-edge: values at positions i and j
// swapped, all other positions unchanged. An involution.
Perm edge_endpoint(const Perm& sigma, SupportPair pair);

// Builds the full graph: n! vertices, n!/2 edges per support pair, N-regular.
// Throws ReducibleInput unless h(i) >= i+1 for all i < n.
GkmGraph build_gkm(const HFun& h, const Spectrum& lambda);

// Deterministic DOT text. Nodes named by permutation word; edges carry
// class=polytope|diagonal and pair="i,j". For n <= 4 nodes get pos="x,y!"
// from a fixed integer projection of the moment coordinates (a presentation
// choice; verified injective on the vertex set).
std::string export_dot(const GkmGraph& g);

// {"edges":[{"class":...,"pair":[i,j],"u":...,"v":...}],"n":...,
//  "vertices":[{"coords":[...],"word":...}]} with exact rational coordinate
// strings; u, v are 0-based indices into the vertex array.
std::string export_json(const GkmGraph& g);

}  // namespace orbitlab
