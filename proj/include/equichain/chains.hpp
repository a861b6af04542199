#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equichain/complexes.hpp"
#include "equichain/ints.hpp"
#include "equichain/smith.hpp"

namespace equichain {

// A simplex together with an orientation sign relative to its canonical
// (ascending color) vertex order.
struct OrientedSimplex {
  Simplex simplex;
  int sign = 1;
};

// Canonicalizes an explicitly ordered vertex sequence; the sign is the parity
// of the permutation that sorts it. Rejects repeated colors.
OrientedSimplex orient(const std::vector<Vertex>& sequence);

// Formal integer combination of canonical q-simplexes. Degree -1 chains are
// supported on the empty simplex and carry the augmentation values.
class Chain {
 public:
  explicit Chain(int q) : q_(q) {}

  int q() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Simplex, Int>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(const Simplex& s) const;
  // Adds c * s; folds coefficients and drops zeros. The simplex dimension
  // must match the chain degree.
  void add(const Simplex& s, const Int& c);
  void add(const OrientedSimplex& os, const Int& c);

  // Value of a degree -1 chain (coefficient of the empty simplex).
  Int augmentation_value() const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator-() const;
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Int& c, const Chain& a);

  std::string to_string() const;

  auto operator<=>(const Chain&) const = default;

 private:
  int q_;
  std::map<Simplex, Int> terms_;
};

// del(sigma) = sum_j (-1)^j (sigma without vertex j); degree 0 lands on the
// empty simplex, i.e. the augmentation. Input degree must be >= 0.
Chain boundary(const Chain& c);

bool is_cycle(const Chain& c);

// Matrix of del_q : C_q(k) -> C_{q-1}(k) over the canonical bases. For q == 0
// the single row is the empty simplex (augmentation row).
struct BoundaryMatrix {
  int q = 0;
  std::vector<Simplex> rows;
  std::vector<Simplex> cols;
  IntMatrix m;
};

BoundaryMatrix boundary_matrix(const Complex& k, int q);

// Coordinates of c over an ordered simplex basis; throws when the support is
// not contained in the basis.
std::vector<Int> chain_coordinates(const Chain& c, const std::vector<Simplex>& basis);
Chain chain_from_coordinates(int q, const std::vector<Simplex>& basis,
                             const std::vector<Int>& coords);

// If c = del(beta) for some (q+1)-chain of k, returns such a beta (normal
// form back-substitution; no minimization). Requires support(c) inside k.
std::optional<Chain> boundary_witness(const Chain& c, const Complex& k);
bool is_boundary(const Chain& c, const Complex& k);

// boundary_witness restricted to cycles: non-cycle input is rejected rather
// than reported unfillable.
std::optional<Chain> fill_cycle(const Complex& k, const Chain& c);

// Reduced homology in degree q: free rank and torsion (invariant factors of
// del_{q+1} exceeding 1).
struct HomologyGroup {
  long long rank = 0;
  std::vector<Int> torsion;
};

HomologyGroup reduced_betti(const Complex& k, int q);

// Integer lattice basis of the q-cycles of k (kernel of del_q, reduced
// convention: degree-0 cycles have augmentation zero).
std::vector<Chain> cycle_basis(const Complex& k, int q);

// Boundary of the missing all-zeros facet: sum_i (-1)^i <(0,0)..omit i..(n,0)>.
Chain distinguished_cycle(int n);

// Fundamental (n-1)-cycle of the sphere on colors {0..n} minus i, coherently
// oriented so the all-zeros facet carries +1 on its ascending-id orientation.
Chain oriented_sphere_cycle(int i, int n);

// Assigns +/-1 to the given top simplexes so that every ridge shared by
// exactly two of them cancels; ridges contained in exactly one simplex are
// boundary and unconstrained. The first simplex in canonical order gets +1;
// callers renormalize. Throws when a ridge has more than two cofacets or the
// ridge-adjacency graph is disconnected.
std::map<Simplex, int> coherent_orientation(const std::vector<Simplex>& top);

// Decides winding numbers of (n-1)-cycles in the annulus. Construction
// verifies once that the reduced degree-(n-1) homology of the annulus is
// free of rank 1 and generated by the distinguished cycle; both checks are
// preconditions of winding being well defined.
class WindingOracle {
 public:
  explicit WindingOracle(int n);

  // The unique m with c - m * distinguished a boundary in the annulus.
  // Throws on non-cycles, wrong degree, or support outside the annulus.
  Int winding(const Chain& c) const;

  int n() const { return n_; }
  const Complex& annulus() const { return annulus_; }
  const Chain& distinguished() const { return distinguished_; }

 private:
  int n_;
  Complex annulus_;
  Chain distinguished_;
  std::vector<Simplex> row_basis_;  // (n-1)-simplexes
  std::size_t top_count_ = 0;       // n-simplexes
  SmithData system_;                // [del_n | distinguished]
};

}  // namespace equichain
