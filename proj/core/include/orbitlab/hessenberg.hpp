// Hessenberg functions h:[n]->[n] (monotone, h(i) >= i) and the staircase
// combinatorics derived from them: support pairs, dimension and complexity
// counts, the complexity-one irreducible profiles, and block splitting along
// a cut of the staircase.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitlab {

// A validated Hessenberg function. Domain indices are 1-based throughout the
// public API: h(i) is the lowest row carrying a nonzero entry in column i.
struct HFun {
  // Validates and computes the derived fields. Throws Error with code
  // BelowDiagonal, MonotonicityViolation or OutOfRange.
  explicit HFun(std::vector<int> values);

  int n = 0;           // matrix size
  std::vector<int> h;  // h[i-1] = h(i)
  int N = 0;           // half real dimension, sum of h(i) - i
  int d = 0;           // complexity, N - (n - 1)
  std::optional<int> i0;  // double-step index when h is the complexity-one
                          // irreducible profile, empty otherwise

  int operator()(int i) const { return h[static_cast<size_t>(i) - 1]; }

  bool operator==(const HFun& other) const { return h == other.h; }
};

// Off-diagonal matrix positions (i,j), i < j <= h(i), allowed by the
// staircase; lexicographically sorted. |pairs| = N.
using SupportPair = std::pair<int, int>;
std::vector<SupportPair> staircase_support(const HFun& h);

// Construction from raw values; same checks as the HFun constructor.
HFun validate(const std::vector<int>& values);

// d = N - (n-1). Zero means a half-dimensional (quasitoric) action.
int complexity(const HFun& h);

// True iff h(i) >= i+1 for every i < n, so the staircase has no cut point
// that is free of off-diagonal entries.
bool irreducible(const HFun& h);

// The unique complexity-one irreducible shape: h(i) = i+1 everywhere except
// one i0 in [n-2] with h(i0) = i0+2. Returns i0, or nullopt if h is anything
// else.
std::optional<int> complexity_one_profile(const HFun& h);

// Splits h at the cut between rows/columns k and k+1, deleting the entries
// that cross the cut. Only the tridiagonal step (k,k+1) may cross; any other
// crossing pair makes the cut invalid (Error with code InvalidCut, message
// names the offending pair). Returns the top k-block and the bottom
// (n-k)-block as Hessenberg functions in their own right.
std::pair<HFun, HFun> block_split(const HFun& h, int k);

// All complexity-one irreducible profiles for matrix size n >= 3, ordered by
// the double-step index i0 = 1..n-2 (a single profile (3,3,3) for n = 3).
std::vector<HFun> enumerate_complexity_one(int n);

// Serialization: {"n": 4, "h": [3,3,4,4]}.
std::string to_json_string(const HFun& h);
HFun hfun_from_json(const std::string& text);

// Comma-separated list as accepted by the CLI: "3,3,4,5,5".
HFun hfun_from_csv(const std::string& text);

// Round-trip helper for reports: "(3,3,4,4)".
std::string to_string(const HFun& h);

}  // namespace orbitlab
