#pragma once

#include <set>
#include <string>
#include <vector>

#include "equichain/chains.hpp"
#include "equichain/complexes.hpp"

namespace equichain {

// Permutation of the colors 0..n, stored as the image array. Acts on
// simplexes by relabelling colors; output labels ride along unchanged.
class GroupElement {
 public:
  static GroupElement identity(int n);
  explicit GroupElement(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()) - 1; }
  int operator()(int color) const { return images_.at(static_cast<size_t>(color)); }
  const std::vector<int>& images() const { return images_; }

  // Composition: (a * b)(i) == a(b(i)).
  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  int sign() const;

  std::string to_string() const;

  auto operator<=>(const GroupElement&) const = default;

 private:
  std::vector<int> images_;
};

// The cycle i -> i+1 -> ... -> m -> i, identity elsewhere. Requires
// 0 <= i <= m <= n; sign is (-1)^(m-i).
GroupElement pi_cycle(int n, int m, int i);

// The n adjacent transpositions (i, i+1). They generate the group, so
// equivariance checks may quantify over them alone: a map commuting with
// each generator commutes with every product of generators.
std::vector<GroupElement> generators(int n);

// Closure of the generators under composition; (n+1)! elements. Intended for
// small n cross-checks.
std::vector<GroupElement> full_group(int n);

// Image of a canonical simplex: relabelled, re-sorted, with the parity of the
// re-sort as sign.
OrientedSimplex act_simplex(const GroupElement& g, const Simplex& s);
Chain act_chain(const GroupElement& g, const Chain& c);

// Orbit under the full group, generated by the adjacent transpositions.
std::set<Simplex> simplex_orbit(const Simplex& s, int n);
std::set<Chain> chain_orbit(const Chain& c, int n);

}  // namespace equichain
