#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "equichain/chains.hpp"
#include "equichain/complexes.hpp"
#include "equichain/symmetry.hpp"

namespace equichain {

enum class MapProperty : int {
  chain_map = 0,
  color_preserving = 1,
  equivariant = 2,
  augmented = 3,
};

std::string property_name(MapProperty p);

enum class CheckState { unknown, pass, fail };

struct VerificationReport {
  MapProperty property = MapProperty::chain_map;
  bool pass = true;
  // First counterexample in canonical order, rendered for humans.
  std::string detail;
};

// Explicit chain map: image chain per canonical source simplex, one table per
// dimension. Immutable once populated; the verification flags are the only
// mutable state and cache which checks have run.
class ChainMapTable {
 public:
  ChainMapTable(int n, std::string source, std::string target);

  int n() const { return n_; }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }

  void set_image(const Simplex& s, Chain image);
  bool has(const Simplex& s) const;
  const Chain& image(const Simplex& s) const;  // throws on unmapped simplexes
  int max_dim() const;
  const std::map<Simplex, Chain>& entries(int q) const;
  std::size_t entry_count() const;

  CheckState flag(MapProperty p) const {
    return flags_[static_cast<std::size_t>(p)];
  }
  void set_flag(MapProperty p, CheckState s) {
    flags_[static_cast<std::size_t>(p)] = s;
  }

 private:
  int n_;
  std::string source_;
  std::string target_;
  std::map<int, std::map<Simplex, Chain>> entries_;
  std::array<CheckState, 4> flags_{CheckState::unknown, CheckState::unknown,
                                   CheckState::unknown, CheckState::unknown};
};

// Linear extension; throws when a support simplex is unmapped.
Chain apply(const ChainMapTable& m, const Chain& c);
Chain apply(const ChainMapTable& m, const OrientedSimplex& s);

// del(m(s)) == m(del(s)) for every mapped simplex; degree 0 checks
// augmentation-commutation (a single integer lambda with aug(m(v)) == lambda
// for all v, i.e. some degree -1 component exists). Also checks the table
// covers exactly the source simplexes in dimensions 0..max_dim and that the
// images are supported on the target complex. Updates the table's flag.
VerificationReport verify_chain_map(ChainMapTable& m, const Complex& source,
                                    const Complex& target);

// Image terms use exactly the colors of the source simplex.
VerificationReport verify_color_preserving(ChainMapTable& m);

// m(g.s) == g.m(s). Quantifies over the adjacent transpositions (sufficient:
// they generate); full_group = true enumerates all (n+1)! elements instead,
// intended as a small-n cross-check.
VerificationReport verify_equivariant(ChainMapTable& m, bool full_group = false);

// Every vertex image has augmentation 1.
VerificationReport verify_augmented(ChainMapTable& m);

// All four checks; flags are updated on the table.
std::vector<VerificationReport> verify_all(ChainMapTable& m, const Complex& source,
                                           const Complex& target,
                                           bool full_group = false);

// Vertex-wise inclusion <c_0..c_q> -> <(c_0,0)..(c_q,0)> on the boundary
// skeleton (dimensions 0..n-1) of the disk, into the annulus.
ChainMapTable z_map(int n);

// Chain map induced by a simplicial vertex map. Vertices of the source must
// all be mapped; a simplex whose image has a repeated vertex collapses to the
// zero chain; a non-collapsed image that is not a simplex of the target is
// rejected naming the offending simplex. Color preservation is not assumed
// here; it is a separate verification.
ChainMapTable induced_from_simplicial(const std::map<Vertex, Vertex>& f,
                                      const Complex& source, const Complex& target,
                                      const std::string& source_name,
                                      const std::string& target_name);

// (second after first); requires `second` to cover the image supports.
// Verification flags conjoin (fail dominates, then unknown).
ChainMapTable compose(const ChainMapTable& second, const ChainMapTable& first);

}  // namespace equichain
