// Exact integral simplicial homology: abstract complexes over integer vertex
// ids, boundary operators with alternating signs under the sorted vertex
// order, Smith normal form over arbitrary-precision integers, Betti numbers
// and torsion coefficients.
#pragma once

#include <string>
#include <vector>

#include "orbitlab/intmatrix.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab {

// Sorted list of distinct vertex ids; dimension = size - 1.
using Simplex = std::vector<int>;

struct SimplicialComplex {
  // by_dim[q] = all q-simplices, each sorted internally, lexicographically
  // ordered within the dimension. Possibly empty overall (dim() == -1).
  std::vector<std::vector<Simplex>> by_dim;

  // Validates: entries sorted and distinct, no duplicate simplices, every
  // boundary face present. Throws NotAComplex otherwise.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
  // Closes the given simplices under taking faces, then validates.
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

  int dim() const { return static_cast<int>(by_dim.size()) - 1; }
  int count(int q) const {
    return q >= 0 && q <= dim()
               ? static_cast<int>(by_dim[static_cast<size_t>(q)].size())
               : 0;
  }
};

// Parses a JSON array of simplices, e.g. [[1,2],[2,3],[3,1]], treated as
// maximal faces (the closure is generated). Throws InvalidArgument on
// malformed input, NotAComplex on bad simplices.
SimplicialComplex complex_from_json(const std::string& text);

// Boundary operators [d_1, ..., d_dim]: result[q-1] maps q-chains to
// (q-1)-chains, with rows/columns indexed by the by_dim orderings.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& complex);

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all positive,
// r = rank. Empty for a zero matrix. Least-absolute-value pivoting.
std::vector<Int> smith_normal_form(IntMatrix m);

struct HomologyGroups {
  // Index q = 0..dim of the complex; degrees beyond the dimension are zero
  // and not stored.
  std::vector<int> free_rank;
  std::vector<std::vector<Int>> torsion;  // divisibility order, entries > 1

  int betti(int q) const {
    return q >= 0 && q < static_cast<int>(free_rank.size())
               ? free_rank[static_cast<size_t>(q)]
               : 0;
  }
  const std::vector<Int>& torsion_at(int q) const;
};

// H_q: free rank = #q-simplices - rank d_q - rank d_{q+1}; torsion = invariant
// factors of d_{q+1} exceeding 1.
HomologyGroups homology(const SimplicialComplex& complex);

// Same groups with H_0 replaced by the reduced group (rank = components - 1).
HomologyGroups reduced_homology(const SimplicialComplex& complex);

// "0", "Z", "Z^6", "Z + Z/2 + Z/4", ...
std::string group_string(int free_rank, const std::vector<Int>& torsion);

}  // namespace orbitlab
