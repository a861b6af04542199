#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "equichain/chainmaps.hpp"
#include "equichain/ints.hpp"
#include "equichain/symmetry.hpp"

namespace equichain {

// One-round immediate-snapshot execution class: the blocks are the
// concurrency groups in schedule order; concatenated they partition the ids.
struct OrderedPartition {
  std::vector<std::vector<int>> blocks;
};

// Every ordered set partition of the given items, deterministically ordered
// (first block enumerated by ascending subset mask, then recursively).
std::vector<OrderedPartition> ordered_partitions(const std::vector<int>& items);

// Subdivision vertex: a process id together with its snapshot view, the
// sorted indices of the previous-round vertices it saw (itself included).
// Round-0 corners carry an empty view.
struct SubVertex {
  int color = 0;
  std::vector<int> view;

  auto operator<=>(const SubVertex&) const = default;
};

// Iterated chromatic (immediate-snapshot) subdivision of the n-simplex.
// Vertices are interned per round in first-seen order; shared boundary faces
// glue automatically because equal (id, view) pairs coincide. The underlying
// chromatic complex labels each vertex with its per-color ordinal.
class SubdividedComplex {
 public:
  int n() const { return n_; }
  int rounds() const { return rounds_; }
  const Complex& complex() const { return complex_; }

  int vertex_count() const { return static_cast<int>(layers_.back().size()); }
  const std::vector<SubVertex>& layer(int r) const {
    return layers_.at(static_cast<std::size_t>(r));
  }
  int vertex_color(int v) const {
    return layers_.back().at(static_cast<std::size_t>(v)).color;
  }
  // Bitmask over 0..n: the ids spanning the minimal face of the original
  // simplex that carries this vertex.
  unsigned carrier_mask(int v) const {
    return carriers_.back().at(static_cast<std::size_t>(v));
  }
  std::vector<int> carrier_colors(int v) const;

  // Final-round facets as sorted vertex-index lists.
  const std::vector<std::vector<int>>& facets() const { return layer_facets_.back(); }

  // The unique final vertex whose carrier is the single id.
  int corner_index(int color) const;

  // Final vertex index <-> vertex of complex() (color, per-color ordinal).
  Vertex vertex(int v) const;
  int index_of(const Vertex& w) const;

  // Image of a final vertex under the simplicial relabelling that renames
  // ids by rho (rho[c] < 0 means undefined) and transports views
  // functorially. Throws when the vertex's carrier leaves rho's domain.
  int relabel_vertex(int v, const std::vector<int>& rho) const;

 private:
  int relabel_rec(int r, int v, const std::vector<int>& rho,
                  std::vector<std::map<int, int>>& memo) const;

  friend SubdividedComplex chromatic_subdivide(int n, int rounds);

  int n_ = 0;
  int rounds_ = 0;
  std::vector<std::vector<SubVertex>> layers_;
  std::vector<std::map<SubVertex, int>> lookup_;
  std::vector<std::vector<unsigned>> carriers_;
  std::vector<std::vector<std::vector<int>>> layer_facets_;
  std::vector<int> labels_;  // final layer: per-color ordinal
  std::map<Vertex, int> index_of_vertex_;
  Complex complex_;
};

// rounds = 0 yields the simplex itself; each further round refines every
// facet by the ordered partitions of its ids.
SubdividedComplex chromatic_subdivide(int n, int rounds);

// The chain map induced by the subdivision: every face of the n-simplex maps
// to the coherently oriented sum of the simplexes subdividing it, with the
// global sign per face pinned by boundary-commutation against the lower
// dimensions (corners map with +1).
ChainMapTable subdivision_chain_map(const SubdividedComplex& s);

// Bit per final vertex index.
using BinaryColoring = std::vector<int>;

struct SymmetryReport {
  bool pass = false;
  std::string detail;  // first violation, rendered for humans
};

// Rank symmetry: for every pair of same-dimension proper faces of the base
// simplex, the id-rank-preserving bijection between their subdivisions must
// preserve the bit.
SymmetryReport verify_symmetric_coloring(const SubdividedComplex& s,
                                         const BinaryColoring& b);

// Orbits of final vertices under the rank bijections between same-dimension
// proper faces; interior (full-carrier) vertices are singletons. Classes and
// their members are sorted. Symmetric colorings are exactly the colorings
// constant on each class.
std::vector<std::vector<int>> symmetry_classes(const SubdividedComplex& s);

Int symmetric_coloring_count(const SubdividedComplex& s);  // 2^(#classes)

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All symmetric colorings, ordered by class bitmask; throws BudgetExceeded
// when 2^(#classes) > budget.
std::vector<BinaryColoring> enumerate_symmetric_colorings(const SubdividedComplex& s,
                                                          std::uint64_t budget);

BinaryColoring random_symmetric_coloring(const SubdividedComplex& s,
                                         std::mt19937& rng);

// Induced action of an id permutation on colorings: the relabelled vertex
// receives the original vertex's bit. Monochromatic counts are invariant
// under this action; rank symmetry itself need not be for n >= 2 (a
// permutation restricted to a proper face is not order preserving).
BinaryColoring permute_coloring(const SubdividedComplex& s, const GroupElement& g,
                                const BinaryColoring& b);

long long monochromatic_count(const SubdividedComplex& s, const BinaryColoring& b);

struct WsbReport {
  SymmetryReport symmetry;
  long long mono_count = 0;
  bool decision = false;  // symmetric and no monochromatic facet
};

WsbReport wsb_decision_check(const SubdividedComplex& s, const BinaryColoring& b);

// Subdivision chain map composed with the simplicial map
// vertex -> (id, bit), landing in the full binary output complex.
ChainMapTable coloring_chain_map(const SubdividedComplex& s, const BinaryColoring& b);

// Winding of the image of the boundary of the top simplex under
// coloring_chain_map. The support has dimension n-1, hence always lies in
// the annulus regardless of monochromatic facets.
Int boundary_image_winding(const SubdividedComplex& s, const BinaryColoring& b);

}  // namespace equichain
