#include "orbitlab/gkm.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "orbitlab/error.hpp"

namespace orbitlab {

Perm edge_endpoint(const Perm& sigma, SupportPair pair) {
  Perm tau = sigma;
  std::swap(tau[static_cast<size_t>(pair.first) - 1],
            tau[static_cast<size_t>(pair.second) - 1]);
  return tau;
}

GkmGraph build_gkm(const HFun& h, const Spectrum& lambda) {
  if (lambda.n() != h.n)
    throw Error(ErrorCode::InvalidArgument,
                "spectrum size does not match h");
  if (!irreducible(h))
    throw Error(ErrorCode::ReducibleInput,
                "h is reducible (h(i) = i below the last index); split into "
                "blocks before building the graph");

  GkmGraph g;
  g.n = h.n;
  g.N = h.N;

  std::map<Perm, int> index;
  for (const Perm& sigma : all_permutations(h.n)) {
    index[sigma] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(
        {sigma, perm_word(sigma), vertex_coordinates(sigma, lambda)});
  }

  const auto support = staircase_support(h);
  for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
    for (const SupportPair& pair : support) {
      int v = index.at(edge_endpoint(g.vertices[static_cast<size_t>(u)].sigma,
                                     pair));
      if (u >= v) continue;
      WeightVec w;
      w.coords.assign(static_cast<size_t>(h.n), 0);
      w.coords[static_cast<size_t>(pair.first) - 1] = 1;
      w.coords[static_cast<size_t>(pair.second) - 1] = -1;
      g.edges.push_back({u, v, pair, std::move(w)});
    }
  }
  return g;
}

namespace {

// Fixed plotting projections of the moment coordinates, one row pair per n.
// Chosen (and covered by tests) to keep all n! projected points distinct;
// pure presentation, nothing downstream reads them.
const int* projection_basis(int n) {
  static const int basis2[] = {1, -1, 0, 0};
  static const int basis3[] = {1, -1, 0, 1, 1, -2};
  static const int basis4[] = {4, 1, -2, -3, 2, -3, 4, -3};
  switch (n) {
    case 2: return basis2;
    case 3: return basis3;
    case 4: return basis4;
    default: return nullptr;
  }
}

std::string position_attr(const std::vector<Rat>& coords) {
  int n = static_cast<int>(coords.size());
  const int* basis = projection_basis(n);
  Rat x = 0, y = 0;
  for (int k = 0; k < n; ++k) {
    x += basis[k] * coords[static_cast<size_t>(k)];
    y += basis[n + k] * coords[static_cast<size_t>(k)];
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f,%.4f", 0.5 * x.convert_to<double>(),
                0.5 * y.convert_to<double>());
  return buf;
}

}  // namespace

std::string export_dot(const GkmGraph& g) {
  std::ostringstream out;
  out << "graph gkm {\n";
  out << "  layout=neato;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  bool with_pos = g.n <= 4;
  for (const auto& v : g.vertices) {
    out << "  \"" << v.word << '"';
    if (with_pos) out << " [pos=\"" << position_attr(v.coords) << "!\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << g.vertices[static_cast<size_t>(e.u)].word << "\" -- \""
        << g.vertices[static_cast<size_t>(e.v)].word << "\" [class="
        << e.cls() << ", pair=\"" << e.pair.first << ',' << e.pair.second
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const GkmGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) {
    nlohmann::json item;
    item["word"] = v.word;
    auto& coords = item["coords"] = nlohmann::json::array();
    for (const Rat& c : v.coords) coords.push_back(rat_string(c));
    verts.push_back(std::move(item));
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges) {
    nlohmann::json item;
    item["u"] = e.u;
    item["v"] = e.v;
    item["pair"] = {e.pair.first, e.pair.second};
    item["class"] = e.cls();
    edges.push_back(std::move(item));
  }
  return j.dump();
}

}  // namespace orbitlab
