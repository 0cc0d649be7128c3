#include "orbitlab/permutohedron.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "orbitlab/error.hpp"

namespace orbitlab {

std::vector<Perm> all_permutations(int n) {
  Perm sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Perm perm_inverse(const Perm& sigma) {
  Perm inv(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i)
    inv[static_cast<size_t>(sigma[i]) - 1] = static_cast<int>(i) + 1;
  return inv;
}

std::string perm_word(const Perm& sigma) {
  std::ostringstream out;
  bool wide = sigma.size() > 9;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (wide && i) out << '-';
    out << sigma[i];
  }
  return out.str();
}

Spectrum::Spectrum(std::vector<Rat> values) : lambda(std::move(values)) {
  if (lambda.empty())
    throw Error(ErrorCode::InvalidSpectrum, "empty spectrum");
  for (size_t i = 0; i < lambda.size(); ++i)
    for (size_t j = i + 1; j < lambda.size(); ++j)
      if (lambda[i] == lambda[j])
        throw Error(ErrorCode::InvalidSpectrum,
                    "spectrum is not simple: lambda_" + std::to_string(i + 1) +
                        " = lambda_" + std::to_string(j + 1));
}

Spectrum Spectrum::standard(int n) {
  std::vector<Rat> values;
  values.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) values.emplace_back(i);
  return Spectrum(std::move(values));
}

bool FacetId::operator<(const FacetId& o) const {
  if (color() != o.color()) return color() < o.color();
  return S < o.S;
}

std::string FacetId::label() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < S.size(); ++i) {
    if (i) out << ',';
    out << S[i];
  }
  out << '}';
  return out.str();
}

std::vector<Rat> vertex_coordinates(const Perm& sigma,
                                    const Spectrum& lambda) {
  if (sigma.size() != lambda.lambda.size())
    throw Error(ErrorCode::InvalidArgument,
                "permutation and spectrum sizes differ");
  std::vector<Rat> p(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i)
    p[static_cast<size_t>(sigma[i]) - 1] = lambda.lambda[i];
  return p;
}

std::vector<FacetId> facets(int n) {
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "permutohedron needs n >= 2");
  std::vector<FacetId> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    FacetId f;
    f.n = n;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) f.S.push_back(i + 1);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool facet_contains_vertex(const FacetId& f, const Perm& sigma) {
  std::set<int> prefix(sigma.begin(), sigma.begin() + f.color());
  return std::equal(f.S.begin(), f.S.end(), prefix.begin(), prefix.end());
}

namespace {

bool strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() < b.size() &&
         std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool facets_intersect(const FacetId& f, const FacetId& g) {
  return strict_subset(f.S, g.S) || strict_subset(g.S, f.S);
}

bool chain_is_face(std::vector<FacetId> chain) {
  std::sort(chain.begin(), chain.end());  // color ascending
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!strict_subset(chain[i].S, chain[i + 1].S)) return false;
  return true;
}

std::string to_json_string(const std::vector<FacetId>& fs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : fs) {
    nlohmann::json item;
    item["S"] = f.S;
    item["color"] = f.color();
    j.push_back(std::move(item));
  }
  return j.dump();
}

std::string rat_string(const Rat& x) {
  std::ostringstream out;
  out << numerator(x);
  if (denominator(x) != 1) out << '/' << denominator(x);
  return out.str();
}

std::string vertex_table_csv(int n, const Spectrum& lambda) {
  std::ostringstream out;
  out << "permutation";
  for (int c = 1; c <= n; ++c) out << ",coord_" << c;
  out << '\n';
  for (const auto& sigma : all_permutations(n)) {
    out << perm_word(sigma);
    for (const Rat& c : vertex_coordinates(sigma, lambda))
      out << ',' << rat_string(c);
    out << '\n';
  }
  return out.str();
}

}  // namespace orbitlab
