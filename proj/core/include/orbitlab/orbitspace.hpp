// The combinatorial model of the torus orbit space Q = M/T for an
// irreducible complexity-one staircase profile: special facets of the
// permutohedron, connected components of their union, the nerve of the
// cover, and the reduced integral cohomology of Q via Alexander duality
// inside the ambient sphere S^{N+1}.
#pragma once

#include <string>
#include <vector>

#include "orbitlab/hessenberg.hpp"
#include "orbitlab/homology.hpp"
#include "orbitlab/permutohedron.hpp"
#include "orbitlab/weights.hpp"

namespace orbitlab {

// Nerve of the special-facet cover. Facet intersections in a simple polytope
// are faces, hence contractible, so the nerve has the homotopy type of the
// union: simplices are the strict inclusion chains of the S-sets.
struct NerveComplex {
  std::vector<FacetId> facet_vertices;  // canonical order (color, then lex)
  SimplicialComplex complex;  // vertex id = index into facet_vertices
};

// One connected component of the union of special facets.
struct ComponentReport {
  std::vector<FacetId> facets;   // canonical order
  SimplicialComplex nerve;       // local vertex ids 0..facets.size()-1
  HomologyGroups groups;         // unreduced homology of the component nerve
  std::string description;       // facet counts and nerve f-vector
};

// One reduced cohomology group of Q, H~^i(Q).
struct CohomologyGroup {
  int i = 0;
  int rank = 0;
  std::vector<Int> torsion;
};

struct OrbitReport {
  HFun h;
  int i0 = 0;
  int N = 0;
  int sphere_dim = 0;  // N + 1
  FixedPointClass fixed_class;  // shared by all n! fixed points
  std::vector<FacetId> special;
  NerveComplex cover_nerve;
  std::vector<ComponentReport> components;
  int l = 0;  // number of boundary components
  std::vector<CohomologyGroup> cohomology;  // degrees 0..N+1, reduced
  std::vector<std::string> narrative;
};

// All facets of color k for k not in {i0, i0+1}. Empty for n = 3, where both
// available colors are excluded. Throws UnsupportedProfile unless h is an
// irreducible complexity-one profile.
std::vector<FacetId> special_facets(const HFun& h);

// Independent test for the same set, via block bookkeeping instead of the
// color rule: the facet is special iff block_split at k = color(F) is valid
// and the two blocks keep total complexity 1 (the double step survives in
// one block, so the facet preimage carries a residual 2-sphere fiber).
bool special_facet_oracle(const HFun& h, const FacetId& f);

// Partition into connected components of the intersection graph. Components
// ordered by their smallest facet (canonical order), facets canonical inside.
std::vector<std::vector<FacetId>> boundary_components(
    const std::vector<FacetId>& special);

// Nerve of the facet family: vertices in canonical order, a simplex per
// strict inclusion chain.
NerveComplex nerve(const std::vector<FacetId>& special);

// Reduced integral cohomology of Q = S^{N+1} minus the open neighborhoods of
// the special-facet components: H~^i(Q) = H~_{N-i}(nerve) for 0 <= i <= N,
// and H~^{N+1}(Q) = Z exactly when the nerve is empty (Q is the full sphere).
std::vector<CohomologyGroup> alexander_cohomology(const NerveComplex& cover,
                                                  int N);

// Full model assembly. lambda fixes the isospectral manifold but the model
// is spectrum-independent; the argument is validated for size/simplicity
// only. Throws UnsupportedProfile for reducible h or complexity != 1.
OrbitReport orbit_space_report(const HFun& h, const Spectrum& lambda);

// Human-readable report (deterministic, no timestamps).
std::string report_text(const OrbitReport& report);

// JSON report: h, n, i0, N, sphere_dim, fixed point class, special facets,
// components, l, cohomology as [{"i":...,"rank":...,"torsion":[...]}], and
// narrative tags.
std::string report_json(const OrbitReport& report);

// DOT for the nerve 1-skeleton: nodes labeled by facet S-sets, node attribute
// color = facet color; deterministic.
std::string nerve_dot(const NerveComplex& cover);

}  // namespace orbitlab
