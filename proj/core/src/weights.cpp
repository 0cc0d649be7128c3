#include "orbitlab/weights.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>

#include "orbitlab/error.hpp"
#include "orbitlab/intmatrix.hpp"

namespace orbitlab {

namespace {

IntMatrix rows_matrix(const std::vector<WeightVec>& vs) {
  int rows = static_cast<int>(vs.size());
  int cols = vs.empty() ? 0 : static_cast<int>(vs[0].coords.size());
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = vs[static_cast<size_t>(r)].coords[static_cast<size_t>(c)];
  return m;
}

long long narrow(const Int& x) {
  // Relation coefficients are bounded by minors of a 0/±1 matrix; they always
  // fit, but fail loudly rather than truncate if someone feeds huge vectors.
  if (x < std::numeric_limits<long long>::min() ||
      x > std::numeric_limits<long long>::max())
    throw Error(ErrorCode::InvalidArgument,
                "relation coefficient exceeds 64-bit range");
  return static_cast<long long>(x);
}

}  // namespace

std::vector<WeightVec> tangent_weights(const HFun& h) {
  std::vector<WeightVec> out;
  out.reserve(static_cast<size_t>(h.N));
  for (auto [i, j] : staircase_support(h)) {
    WeightVec w;
    w.coords.assign(static_cast<size_t>(h.n), 0);
    w.coords[static_cast<size_t>(i) - 1] = 1;
    w.coords[static_cast<size_t>(j) - 1] = -1;
    out.push_back(std::move(w));
  }
  return out;
}

bool is_general_position(const std::vector<WeightVec>& vs, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "negative rank bound");
  if (exact_rank(rows_matrix(vs)) < r)
    throw Error(ErrorCode::RankDeficientAmbient,
                "weight span has rank below the torus rank " +
                    std::to_string(r));
  // Every r-subset must have full rank r.
  size_t k = static_cast<size_t>(r);
  std::vector<bool> mask(vs.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<WeightVec> subset;
    subset.reserve(k);
    for (size_t t = 0; t < vs.size(); ++t)
      if (mask[t]) subset.push_back(vs[t]);
    if (exact_rank(rows_matrix(subset)) < r) return false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

std::string CornerSignature::to_string() const {
  return "R^" + std::to_string(free_dim) + " x R>=^" +
         std::to_string(corner_dim);
}

CornerSignature primitive_relation(const std::vector<WeightVec>& vs) {
  if (vs.empty())
    throw Error(ErrorCode::KernelRankError, "no weights, no relation");
  // c with sum_t c_t vs_t = 0 is the kernel of the transpose matrix (columns
  // are the weights).
  int n = static_cast<int>(vs[0].coords.size());
  int N = static_cast<int>(vs.size());
  IntMatrix m(n, N);
  for (int c = 0; c < N; ++c)
    for (int r = 0; r < n; ++r)
      m.at(r, c) = vs[static_cast<size_t>(c)].coords[static_cast<size_t>(r)];
  auto kernel = integer_kernel(m);
  if (kernel.size() != 1)
    throw Error(ErrorCode::KernelRankError,
                "weight kernel has rank " + std::to_string(kernel.size()) +
                    ", expected 1");
  CornerSignature sig;
  sig.relation.reserve(static_cast<size_t>(N));
  for (const Int& x : kernel[0]) sig.relation.push_back(narrow(x));
  sig.m = static_cast<int>(
      std::count_if(sig.relation.begin(), sig.relation.end(),
                    [](long long c) { return c != 0; }));
  sig.free_dim = sig.m + 1;
  sig.corner_dim = N - sig.m;
  return sig;
}

FixedPointClass classify_fixed_point(const HFun& h) {
  if (!irreducible(h))
    throw Error(ErrorCode::ReducibleInput,
                "h = " + to_string(h) +
                    " is reducible: decompose into blocks first");
  if (h.d != 1)
    throw Error(ErrorCode::UnsupportedComplexity,
                "complexity " + std::to_string(h.d) +
                    ": fixed point model defined for complexity 1 only");
  FixedPointClass out;
  auto ws = tangent_weights(h);
  out.interior = is_general_position(ws, h.n - 1);
  if (!out.interior) out.corner = primitive_relation(ws);
  return out;
}

std::string to_json_string(const std::vector<WeightVec>& vs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& w : vs) j.push_back(w.coords);
  return j.dump();
}

}  // namespace orbitlab
