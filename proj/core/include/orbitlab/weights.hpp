// Tangent weights of the torus action at the fixed points of a staircase
// matrix manifold: the entry (i,j) of the staircase contributes the character
// e_i - e_j at every fixed point, so the weight system depends on h only.
// On top of that: exact general-position tests, the primitive integer
// relation between the weights, and the corner signature R^{m+1} x R>=^{N-m}
// of the orbit space near a fixed-point image.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/hessenberg.hpp"

namespace orbitlab {

// Character of T^n in the sum-zero lattice: coords sum to 0. The effective
// torus is T^{n-1} = T^n / diagonal, which the zero sum encodes.
struct WeightVec {
  std::vector<long long> coords;

  bool operator==(const WeightVec& o) const { return coords == o.coords; }
};

// e_i - e_j for every support pair, in lexicographic (i,j) order. The list
// is the same at every one of the n! fixed points.
std::vector<WeightVec> tangent_weights(const HFun& h);

// True iff every r-element subset of vs spans rank r over the rationals.
// Throws Error(RankDeficientAmbient) when even the full set has rank < r.
bool is_general_position(const std::vector<WeightVec>& vs, int r);

// Local model of the orbit space near the image of a fixed point whose
// weights admit a one-dimensional relation: R^{m+1} x R>=^{N-m}, where m
// counts the nonzero coefficients of the primitive relation.
struct CornerSignature {
  std::vector<long long> relation;  // c, length |vs|, gcd 1, first nonzero > 0
  int m = 0;                        // |{t : c_t != 0}|
  int free_dim = 0;                 // m + 1
  int corner_dim = 0;               // N - m

  std::string to_string() const;  // "R^4 x R>=^1"
};

// The unique-up-to-sign primitive integer vector c with sum c_t * vs_t = 0.
// Requires the kernel of the weight matrix to have rank exactly 1 (throws
// Error(KernelRankError) otherwise).
CornerSignature primitive_relation(const std::vector<WeightVec>& vs);

// Fixed-point classification for a complexity-one irreducible h. The answer
// is the same at all n! fixed points because the weights are; `uniform`
// states that explicitly in reports.
struct FixedPointClass {
  bool interior = false;                  // true iff weights in general position
  std::optional<CornerSignature> corner;  // set iff boundary
  bool uniform = true;
};

FixedPointClass classify_fixed_point(const HFun& h);

// JSON array of integer vectors: [[1,-1,0],[0,1,-1]].
std::string to_json_string(const std::vector<WeightVec>& vs);

}  // namespace orbitlab
