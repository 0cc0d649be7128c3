// The permutohedron Pe^{n-1}: vertices indexed by permutations (the diagonal
// words of the fixed points), facets indexed by proper nonempty subsets of
// [n] with the color k = |S|, and the nesting combinatorics of its faces.
//
// Vertex geometry: the word sigma marks the fixed point whose top k diagonal
// slots carry the eigenvalues indexed by {sigma(1..k)}. Its moment image is
// the point p with p[sigma(i)] = lambda_i, i.e. coordinate set S holds the k
// smallest-index eigenvalues exactly on the facet named S. Under this
// embedding the color-k facets are genuine geometric facets and adjacent
// transposition edges are genuine polytope edges.
#pragma once

#include <string>
#include <vector>

#include "orbitlab/numeric.hpp"

namespace orbitlab {

// One-line notation, 1-based values: sigma[i-1] = sigma(i).
using Perm = std::vector<int>;

// All n! permutations in lexicographic order, starting at the identity.
std::vector<Perm> all_permutations(int n);

Perm perm_inverse(const Perm& sigma);

// Compact word form "2134" (digits; hyphen-separated above n = 9).
std::string perm_word(const Perm& sigma);

// Simple spectrum: n pairwise distinct rationals, in eigenvalue index order
// (no sortedness assumed).
struct Spectrum {
  explicit Spectrum(std::vector<Rat> values);  // throws InvalidSpectrum
  static Spectrum standard(int n);             // (1, 2, ..., n)

  std::vector<Rat> lambda;
  int n() const { return static_cast<int>(lambda.size()); }
};

// Facet of Pe^{n-1}: the proper nonempty S subset of [n] naming the top-block
// eigenvalue set; color = |S|.
struct FacetId {
  std::vector<int> S;  // sorted ascending
  int n = 0;

  int color() const { return static_cast<int>(S.size()); }
  bool operator==(const FacetId& o) const { return n == o.n && S == o.S; }
  // Order by color, then lexicographically by S; the canonical facet order
  // everywhere in the library.
  bool operator<(const FacetId& o) const;
  std::string label() const;  // "{1,2,3}"
};

// Moment image of the fixed point with diagonal word sigma: coordinate
// sigma(i) carries lambda_i. All n! points share the coordinate sum.
std::vector<Rat> vertex_coordinates(const Perm& sigma, const Spectrum& lambda);

// All 2^n - 2 facets, grouped by color ascending, lexicographic within.
std::vector<FacetId> facets(int n);

// True iff {sigma(1), ..., sigma(k)} = S: the top block of the fixed point
// carries exactly the eigenvalues indexed by S.
bool facet_contains_vertex(const FacetId& f, const Perm& sigma);

// Facets meet iff their S-sets are strictly nested (equivalently: they share
// a vertex; same-color facets are disjoint).
bool facets_intersect(const FacetId& f, const FacetId& g);

// True iff the facets can be totally ordered by strict inclusion, i.e. their
// common intersection is the face of that chain.
bool chain_is_face(std::vector<FacetId> chain);

// JSON array of {"S":[...],"color":k}.
std::string to_json_string(const std::vector<FacetId>& fs);

// CSV vertex table: permutation,coord_1..coord_n, one row per permutation in
// lexicographic order. Rationals print as "p/q", integers plain.
std::string vertex_table_csv(int n, const Spectrum& lambda);

std::string rat_string(const Rat& x);

}  // namespace orbitlab
