#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace equichain {

// A vertex is a (process id, label) pair. Labels carry 0/1 output values for
// the binary complexes, a 0 placeholder for the input disk, and interned view
// tokens for subdivisions. Identity is the whole pair.
struct Vertex {
  int color = 0;
  int label = 0;
  auto operator<=>(const Vertex&) const = default;
};

// Properly colored simplex in canonical form: vertices are sorted by color
// and colors are pairwise distinct. The empty simplex (dimension -1) exists
// as a value — it is the face of every vertex and the carrier of the
// augmentation — but complexes never store it.
class Simplex {
 public:
  Simplex() = default;
  // Sorts by color; rejects repeated colors (improperly colored input).
  explicit Simplex(std::vector<Vertex> verts);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  bool empty() const { return verts_.empty(); }
  const std::vector<Vertex>& vertices() const { return verts_; }
  const Vertex& vertex(int j) const { return verts_.at(static_cast<size_t>(j)); }

  // Face obtained by omitting the j-th vertex; canonical form is preserved.
  Simplex face_without(int j) const;

  std::vector<int> colors() const;  // ascending
  bool has_color(int c) const;
  // True when every vertex of this simplex is a vertex of `other`.
  bool is_face_of(const Simplex& other) const;

  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<Vertex> verts_;
};

// Finite chromatic simplicial complex on colors 0..n, stored downward closed.
// Immutable after construction.
class Complex {
 public:
  Complex() = default;
  // Validates colors lie in 0..n and closes the facet set under faces.
  static Complex from_facets(int n, const std::vector<Simplex>& facets);

  int n() const { return n_; }
  int dim() const { return dim_; }
  bool contains(const Simplex& s) const { return members_.count(s) > 0; }
  // Canonically ordered q-simplexes; empty list when q is out of range.
  const std::vector<Simplex>& simplexes(int q) const;
  std::size_t face_count() const;
  // Maximal members.
  std::vector<Simplex> facets() const;

 private:
  int n_ = -1;
  int dim_ = -1;
  std::vector<std::vector<Simplex>> by_dim_;
  std::set<Simplex> members_;
};

// Builders. Labels are ints: 0 placeholder on the disk, 0/1 on the binary
// output complexes.

// The input disk: one properly colored n-simplex (ids 0..n) and all faces.
Complex build_disk(int n);

// All binary-labelled simplexes on colors 0..n except the two monochromatic
// n-simplexes. Rejects n = 0 (removing both labelled vertices of the single
// color would leave nothing).
Complex build_annulus(int n);

// The annulus plus the two monochromatic n-simplexes: every binary labelling.
Complex build_output_complex(int n);

// Subcomplex of the ambient binary complex on the given distinct colors.
// For q+1 colors this is the boundary of a (q+1)-dimensional cross-polytope;
// the two monochromatic top simplexes are excluded only when q == n (where
// the ambient annulus lacks them).
Complex build_sphere(int n, const std::vector<int>& colors);

// All faces of k of dimension <= i.
Complex skeleton(const Complex& k, int i);

// Proper faces of a single simplex of dimension >= 1.
Complex boundary_complex(const Simplex& s);

}  // namespace equichain
