#include "orbitlab/hessenberg.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>

#include "orbitlab/error.hpp"

namespace orbitlab {

HFun::HFun(std::vector<int> values) : h(std::move(values)) {
  n = static_cast<int>(h.size());
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "empty Hessenberg function");
  for (int i = 1; i <= n; ++i) {
    int hi = h[static_cast<size_t>(i) - 1];
    if (hi < i)
      throw Error(ErrorCode::BelowDiagonal,
                  "h(" + std::to_string(i) + ") = " + std::to_string(hi) +
                      " lies below the diagonal (need h(i) >= i)");
    if (hi > n)
      throw Error(ErrorCode::OutOfRange,
                  "h(" + std::to_string(i) + ") = " + std::to_string(hi) +
                      " exceeds the matrix size n = " + std::to_string(n));
    if (i > 1 && hi < h[static_cast<size_t>(i) - 2])
      throw Error(ErrorCode::MonotonicityViolation,
                  "h(" + std::to_string(i) + ") = " + std::to_string(hi) +
                      " < h(" + std::to_string(i - 1) + "); h must be monotone");
    N += hi - i;
  }
  d = N - (n - 1);
  i0 = complexity_one_profile(*this);
}

std::vector<SupportPair> staircase_support(const HFun& h) {
  std::vector<SupportPair> pairs;
  pairs.reserve(static_cast<size_t>(h.N));
  for (int i = 1; i <= h.n; ++i)
    for (int j = i + 1; j <= h(i); ++j) pairs.emplace_back(i, j);
  return pairs;
}

HFun validate(const std::vector<int>& values) { return HFun(values); }

int complexity(const HFun& h) { return h.d; }

bool irreducible(const HFun& h) {
  for (int i = 1; i < h.n; ++i)
    if (h(i) < i + 1) return false;
  return true;
}

std::optional<int> complexity_one_profile(const HFun& h) {
  if (h.n < 3) return std::nullopt;
  std::optional<int> found;
  for (int i = 1; i < h.n; ++i) {
    if (h(i) == i + 1) continue;
    if (h(i) == i + 2 && i <= h.n - 2 && !found) {
      found = i;
      continue;
    }
    return std::nullopt;  // off-profile step, or a second double step
  }
  return found;
}

std::pair<HFun, HFun> block_split(const HFun& h, int k) {
  if (k < 1 || k > h.n - 1)
    throw Error(ErrorCode::OutOfRange,
                "cut position " + std::to_string(k) + " outside [1, n-1]");
  // Only the tridiagonal step (k, k+1) may cross the cut; report the first
  // other crossing pair.
  for (int i = 1; i <= k; ++i) {
    for (int j = std::max(i + 1, k + 1); j <= h(i); ++j) {
      if (i == k && j == k + 1) continue;
      throw Error(ErrorCode::InvalidCut,
                  "cut at k=" + std::to_string(k) + " crosses support pair (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  std::vector<int> top, bottom;
  for (int i = 1; i <= k; ++i) top.push_back(std::min(h(i), k));
  for (int i = k + 1; i <= h.n; ++i) bottom.push_back(h(i) - k);
  return {HFun(std::move(top)), HFun(std::move(bottom))};
}

std::vector<HFun> enumerate_complexity_one(int n) {
  if (n < 3)
    throw Error(ErrorCode::InvalidArgument,
                "complexity-one profiles need n >= 3");
  std::vector<HFun> out;
  for (int i0 = 1; i0 <= n - 2; ++i0) {
    std::vector<int> values(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i) values[static_cast<size_t>(i) - 1] = i + 1;
    values[static_cast<size_t>(i0) - 1] = i0 + 2;
    values[static_cast<size_t>(n) - 1] = n;
    out.emplace_back(std::move(values));
  }
  return out;
}

std::string to_json_string(const HFun& h) {
  nlohmann::json j;
  j["n"] = h.n;
  j["h"] = h.h;
  return j.dump();
}

HFun hfun_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("n") ||
      !j.contains("h") || !j["h"].is_array())
    throw Error(ErrorCode::InvalidArgument,
                "expected {\"n\": int, \"h\": [int,...]}");
  std::vector<int> values = j["h"].get<std::vector<int>>();
  if (j["n"].get<int>() != static_cast<int>(values.size()))
    throw Error(ErrorCode::InvalidArgument, "n does not match length of h");
  return HFun(std::move(values));
}

HFun hfun_from_csv(const std::string& text) {
  std::vector<int> values;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view token(text.data() + pos,
                           (comma == std::string::npos ? text.size() : comma) -
                               pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::InvalidArgument,
                  "bad integer '" + std::string(token) + "' in h list");
    values.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return HFun(std::move(values));
}

std::string to_string(const HFun& h) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < h.n; ++i) {
    if (i) out << ',';
    out << h.h[static_cast<size_t>(i)];
  }
  out << ')';
  return out.str();
}

}  // namespace orbitlab
