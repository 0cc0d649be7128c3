#include "orbitlab/orbitspace.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

// Admission check shared by every entry point of this module.
int require_profile(const HFun& h) {
  if (auto i0 = complexity_one_profile(h)) return *i0;
  if (!irreducible(h))
    throw Error(ErrorCode::UnsupportedProfile,
                "h is reducible (h(i) = i for some i < n); the manifold "
                "splits as a product, analyze the diagonal blocks instead");
  if (h.d == 0)
    throw Error(ErrorCode::UnsupportedProfile,
                "complexity 0: orbit space is the permutohedron (quasitoric "
                "case); model out of scope");
  throw Error(ErrorCode::UnsupportedProfile,
              "complexity " + std::to_string(h.d) +
                  " is outside the complexity-one model");
}

}  // namespace

std::vector<FacetId> special_facets(const HFun& h) {
  int i0 = require_profile(h);
  std::vector<FacetId> out;
  for (FacetId& f : facets(h.n))
    if (f.color() != i0 && f.color() != i0 + 1) out.push_back(std::move(f));
  return out;
}

bool special_facet_oracle(const HFun& h, const FacetId& f) {
  require_profile(h);
  try {
    auto [top, bottom] = block_split(h, f.color());
    // The facet is special when the cut is clean and the double step lands
    // inside one of the two blocks, keeping a complexity-one factor whose
    // residual circle action leaves a 2-sphere worth of orbits over the
    // facet interior.
    return top.d + bottom.d == 1;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidCut) return false;
    throw;
  }
}

std::vector<std::vector<FacetId>> boundary_components(
    const std::vector<FacetId>& special) {
  std::vector<FacetId> fs = special;
  std::sort(fs.begin(), fs.end());

  std::vector<size_t> parent(fs.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t a = 0; a < fs.size(); ++a)
    for (size_t b = a + 1; b < fs.size(); ++b)
      if (facets_intersect(fs[a], fs[b])) parent[find(a)] = find(b);

  std::map<size_t, std::vector<FacetId>> grouped;  // keyed by smallest member
  std::map<size_t, size_t> root_to_min;
  for (size_t a = 0; a < fs.size(); ++a) {
    size_t root = find(a);
    auto [it, fresh] = root_to_min.try_emplace(root, a);
    grouped[it->second].push_back(fs[a]);
    (void)fresh;
  }
  std::vector<std::vector<FacetId>> out;
  for (auto& [min_index, members] : grouped) out.push_back(std::move(members));
  return out;
}

NerveComplex nerve(const std::vector<FacetId>& special) {
  NerveComplex cover;
  cover.facet_vertices = special;
  std::sort(cover.facet_vertices.begin(), cover.facet_vertices.end());

  // In canonical order colors never decrease, so any pairwise-nested subset
  // appears as an index-increasing chain grown through its last element.
  int count = static_cast<int>(cover.facet_vertices.size());
  std::vector<Simplex> chains;
  Simplex cur;
  auto grow = [&](auto&& self, int last) -> void {
    chains.push_back(cur);
    for (int next = last + 1; next < count; ++next) {
      if (!facets_intersect(cover.facet_vertices[static_cast<size_t>(last)],
                            cover.facet_vertices[static_cast<size_t>(next)]))
        continue;
      cur.push_back(next);
      self(self, next);
      cur.pop_back();
    }
  };
  for (int v = 0; v < count; ++v) {
    cur.assign(1, v);
    grow(grow, v);
  }
  cover.complex = SimplicialComplex::from_simplices(std::move(chains));
  return cover;
}

namespace {

std::vector<CohomologyGroup> duality_groups(const HomologyGroups& reduced,
                                            bool empty_nerve, int N) {
  std::vector<CohomologyGroup> out;
  for (int i = 0; i <= N + 1; ++i) {
    CohomologyGroup g;
    g.i = i;
    if (i == N + 1) {
      g.rank = empty_nerve ? 1 : 0;  // top class survives iff Q is the sphere
    } else {
      g.rank = reduced.betti(N - i);
      g.torsion = reduced.torsion_at(N - i);
    }
    out.push_back(std::move(g));
  }
  return out;
}

HomologyGroups reduce(HomologyGroups hg) {
  if (!hg.free_rank.empty()) --hg.free_rank.front();
  return hg;
}

std::string color_census(const std::vector<FacetId>& fs) {
  std::map<int, int> per_color;
  for (const auto& f : fs) ++per_color[f.color()];
  std::ostringstream out;
  out << fs.size() << " (";
  bool first = true;
  for (const auto& [color, count] : per_color) {
    if (!first) out << ", ";
    out << count << " of color " << color;
    first = false;
  }
  out << ')';
  return out.str();
}

std::string facet_census(const std::vector<FacetId>& fs) {
  if (fs.size() == 1)
    return "1 facet (color " + std::to_string(fs.front().color()) + ")";
  std::map<int, int> per_color;
  for (const auto& f : fs) ++per_color[f.color()];
  std::ostringstream out;
  out << fs.size() << " facets (";
  bool first = true;
  for (const auto& [color, count] : per_color) {
    if (!first) out << ", ";
    out << count << " of color " << color;
    first = false;
  }
  out << ')';
  return out.str();
}

std::string f_vector_string(const SimplicialComplex& c) {
  std::ostringstream out;
  out << '(';
  for (int q = 0; q <= c.dim(); ++q) {
    if (q) out << ", ";
    out << c.count(q);
  }
  out << ')';
  return out.str();
}

std::string homology_summary(const HomologyGroups& hg) {
  std::ostringstream out;
  for (size_t q = 0; q < hg.free_rank.size(); ++q) {
    if (q) out << ", ";
    out << "H_" << q << " = "
        << group_string(hg.free_rank[q], hg.torsion[q]);
  }
  return out.str();
}

std::vector<std::string> narrative_tags(const OrbitReport& r) {
  std::vector<std::string> tags;
  int n = r.h.n;
  if (n == 3) {
    tags.push_back(
        "Q = S^4: no special facets, the orbit space is the whole sphere");
  } else if (n == 4) {
    tags.push_back(
        "Q = S^5 minus 4 disjoint open 5-disks (boundary: 4 copies of S^4 "
        "over the 4 special hexagons)");
  } else if (n == 5 && (r.i0 == 1 || r.i0 == 3)) {
    tags.push_back(
        "Q = S^6 minus an open tube around a subdivided K5 "
        "(connect-sum pattern #_{K5} D^6)");
  } else if (n == 5 && r.i0 == 2) {
    tags.push_back(
        "Q = S^6 minus an open tube around K~5,5, the complete bipartite "
        "graph K5,5 minus a perfect matching (#_{K~5,5} D^6)");
  } else {
    std::ostringstream out;
    out << "Q = S^" << r.sphere_dim << " minus " << r.l
        << " open tubular neighborhood" << (r.l == 1 ? "" : "s")
        << " of the special-facet union (nerve dimension "
        << r.cover_nerve.complex.dim() << ")";
    tags.push_back(out.str());
  }
  return tags;
}

}  // namespace

std::vector<CohomologyGroup> alexander_cohomology(const NerveComplex& cover,
                                                  int N) {
  bool empty_nerve = cover.complex.dim() < 0;
  HomologyGroups reduced =
      empty_nerve ? HomologyGroups{} : reduced_homology(cover.complex);
  return duality_groups(reduced, empty_nerve, N);
}

OrbitReport orbit_space_report(const HFun& h, const Spectrum& lambda) {
  int i0 = require_profile(h);
  if (lambda.n() != h.n)
    throw Error(ErrorCode::InvalidArgument,
                "spectrum size does not match h");

  OrbitReport r{h};
  r.i0 = i0;
  r.N = h.N;
  r.sphere_dim = h.N + 1;
  r.fixed_class = classify_fixed_point(h);
  r.special = special_facets(h);
  r.cover_nerve = nerve(r.special);

  bool empty_nerve = r.cover_nerve.complex.dim() < 0;
  HomologyGroups full;
  if (!empty_nerve) full = homology(r.cover_nerve.complex);

  auto comps = boundary_components(r.special);
  r.l = static_cast<int>(comps.size());
  for (auto& members : comps) {
    ComponentReport c;
    c.facets = std::move(members);
    if (comps.size() == 1) {
      // The lone component is the whole cover; reuse its homology.
      c.nerve = r.cover_nerve.complex;
      c.groups = full;
    } else {
      c.nerve = nerve(c.facets).complex;
      c.groups = homology(c.nerve);
    }
    c.description = facet_census(c.facets) + "; nerve f-vector " +
                    f_vector_string(c.nerve) + "; " +
                    homology_summary(c.groups);
    r.components.push_back(std::move(c));
  }

  r.cohomology = duality_groups(reduce(full), empty_nerve, r.N);
  r.narrative = narrative_tags(r);
  return r;
}

std::string report_text(const OrbitReport& r) {
  std::ostringstream out;
  out << "orbit space model for h = " << to_string(r.h) << "\n";
  out << "  n = " << r.h.n << ", N = " << r.N << ", ambient sphere S^"
      << r.sphere_dim << "\n";
  out << "  complexity 1 profile, double step at i0 = " << r.i0 << "\n";
  if (r.fixed_class.interior) {
    out << "  fixed points: weights in general position (interior orbit "
           "class at every fixed point)\n";
  } else {
    const CornerSignature& corner = *r.fixed_class.corner;
    out << "  fixed points: not in general position; local corner model "
        << corner.to_string() << " (m = " << corner.m << ")\n";
    out << "  primitive relation: (";
    for (size_t k = 0; k < corner.relation.size(); ++k) {
      if (k) out << ',';
      out << corner.relation[k];
    }
    out << ") over the support pairs in lexicographic order\n";
  }
  out << "  special facets: ";
  if (r.special.empty())
    out << "0\n";
  else
    out << color_census(r.special) << "\n";
  out << "  boundary components: " << r.l << "\n";
  for (size_t c = 0; c < r.components.size(); ++c)
    out << "    component " << c + 1 << ": " << r.components[c].description
        << "\n";
  for (const auto& tag : r.narrative) out << "  narrative: " << tag << "\n";
  out << "  reduced integral cohomology of Q:\n";
  for (const auto& g : r.cohomology)
    out << "    H^" << g.i << "(Q) = " << group_string(g.rank, g.torsion)
        << "\n";
  return out.str();
}

namespace {

nlohmann::json facet_json(const FacetId& f) {
  nlohmann::json j;
  j["S"] = f.S;
  j["color"] = f.color();
  return j;
}

nlohmann::json groups_json(const HomologyGroups& hg) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t q = 0; q < hg.free_rank.size(); ++q) {
    nlohmann::json g;
    g["q"] = q;
    g["rank"] = hg.free_rank[q];
    auto& tor = g["torsion"] = nlohmann::json::array();
    for (const Int& d : hg.torsion[q]) tor.push_back(d.str());
    arr.push_back(std::move(g));
  }
  return arr;
}

}  // namespace

std::string report_json(const OrbitReport& r) {
  nlohmann::json j;
  j["h"] = r.h.h;
  j["n"] = r.h.n;
  j["i0"] = r.i0;
  j["N"] = r.N;
  j["sphere_dim"] = r.sphere_dim;

  nlohmann::json fc;
  fc["interior"] = r.fixed_class.interior;
  if (r.fixed_class.corner.has_value()) {
    fc["corner"] = r.fixed_class.corner->to_string();
    fc["m"] = r.fixed_class.corner->m;
    fc["relation"] = r.fixed_class.corner->relation;
  }
  j["fixed_point_class"] = std::move(fc);

  auto& special = j["special"] = nlohmann::json::array();
  for (const auto& f : r.special) special.push_back(facet_json(f));

  auto& comps = j["components"] = nlohmann::json::array();
  for (const auto& c : r.components) {
    nlohmann::json cj;
    auto& fs = cj["facets"] = nlohmann::json::array();
    for (const auto& f : c.facets) fs.push_back(facet_json(f));
    auto& fv = cj["nerve_f_vector"] = nlohmann::json::array();
    for (int q = 0; q <= c.nerve.dim(); ++q) fv.push_back(c.nerve.count(q));
    cj["homology"] = groups_json(c.groups);
    cj["description"] = c.description;
    comps.push_back(std::move(cj));
  }

  j["l"] = r.l;
  auto& coh = j["cohomology"] = nlohmann::json::array();
  for (const auto& g : r.cohomology) {
    nlohmann::json gj;
    gj["i"] = g.i;
    gj["rank"] = g.rank;
    auto& tor = gj["torsion"] = nlohmann::json::array();
    for (const Int& d : g.torsion) tor.push_back(d.str());
    coh.push_back(std::move(gj));
  }
  j["narrative"] = r.narrative;
  return j.dump();
}

std::string nerve_dot(const NerveComplex& cover) {
  std::ostringstream out;
  out << "graph nerve {\n";
  out << "  node [shape=box, fontsize=10];\n";
  for (size_t v = 0; v < cover.facet_vertices.size(); ++v) {
    const FacetId& f = cover.facet_vertices[v];
    out << "  v" << v << " [label=\"" << f.label()
        << "\", facet_color=" << f.color() << "];\n";
  }
  if (cover.complex.dim() >= 1)
    for (const auto& e : cover.complex.by_dim[1])
      out << "  v" << e[0] << " -- v" << e[1] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace orbitlab
