#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "equichain/chains.hpp"
#include "equichain/complexes.hpp"
#include "equichain/symmetry.hpp"

using namespace equichain;

namespace {

Simplex make(std::initializer_list<Vertex> vs) { return Simplex(std::vector<Vertex>(vs)); }

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("group elements compose, invert, and sign correctly") {
  GroupElement id = GroupElement::identity(2);
  CHECK(id.degree() == 2);
  CHECK(id.sign() == 1);
  CHECK(id.to_string() == "[0 1 2]");

  GroupElement a({1, 0, 2});
  GroupElement b({0, 2, 1});
  CHECK(a.sign() == -1);
  // (a * b)(i) == a(b(i)): b sends 1 to 2, a keeps 2.
  CHECK((a * b)(1) == 2);
  CHECK((a * b).images() == std::vector<int>{1, 2, 0});
  CHECK(a * a == id);
  CHECK(a.inverse() == a);
  CHECK((a * b).inverse() == b.inverse() * a.inverse());

  // Sign is a homomorphism over the whole degree-3 group.
  for (const GroupElement& g : full_group(3)) {
    for (const GroupElement& h : generators(3)) {
      CHECK((g * h).sign() == g.sign() * h.sign());
    }
  }

  CHECK_THROWS_AS(GroupElement({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(id * GroupElement({0, 1}), std::invalid_argument);
}

TEST_CASE("generators and full group enumerate the color symmetries") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<GroupElement> gens = generators(n);
    CHECK(gens.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(gens[static_cast<std::size_t>(i)](i) == i + 1);
      CHECK(gens[static_cast<std::size_t>(i)](i + 1) == i);
      CHECK(gens[static_cast<std::size_t>(i)].sign() == -1);
    }

    std::vector<GroupElement> all = full_group(n);
    CHECK(all.size() == static_cast<std::size_t>(factorial(n + 1)));
    std::set<GroupElement> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    CHECK(dedup.count(GroupElement::identity(n)) == 1);
    for (const GroupElement& g : all) CHECK(dedup.count(g.inverse()) == 1);
  }
}

TEST_CASE("pi cycles rotate a color interval") {
  GroupElement rot = pi_cycle(2, 2, 0);
  CHECK(rot.images() == std::vector<int>{1, 2, 0});
  CHECK(rot.sign() == 1);

  GroupElement swap01 = pi_cycle(2, 1, 0);
  CHECK(swap01.images() == std::vector<int>{1, 0, 2});
  CHECK(swap01.sign() == -1);

  CHECK(pi_cycle(3, 2, 2) == GroupElement::identity(3));
  // Sign matches the cycle length parity (-1)^(m-i).
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int i = 0; i <= m; ++i) {
        CHECK(pi_cycle(n, m, i).sign() == ((m - i) % 2 == 0 ? 1 : -1));
      }
    }
  }
  CHECK_THROWS_AS(pi_cycle(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(pi_cycle(2, 3, 0), std::invalid_argument);
}

TEST_CASE("acting on simplexes relabels colors and tracks parity") {
  // Swapping colors 1 and 2 on an all-equal labelling reproduces the same
  // canonical simplex with one transposition of the vertex order.
  Simplex mono = make({{0, 0}, {1, 0}, {2, 0}});
  OrientedSimplex img = act_simplex(pi_cycle(2, 2, 1), mono);
  CHECK(img.simplex == mono);
  CHECK(img.sign == -1);

  OrientedSimplex moved = act_simplex(pi_cycle(2, 2, 1), make({{0, 0}, {1, 0}, {2, 1}}));
  CHECK(moved.simplex == make({{0, 0}, {1, 1}, {2, 0}}));
  CHECK(moved.sign == -1);

  // Labels ride along; identity fixes everything with positive sign.
  OrientedSimplex fixed = act_simplex(GroupElement::identity(2), moved.simplex);
  CHECK(fixed.simplex == moved.simplex);
  CHECK(fixed.sign == 1);
}

TEST_CASE("the chain action commutes with the boundary") {
  Complex out = build_output_complex(2);
  for (const GroupElement& g : full_group(2)) {
    for (const Simplex& s : out.simplexes(2)) {
      Chain c(2);
      c.add(s, 1);
      CHECK(act_chain(g, boundary(c)) == boundary(act_chain(g, c)));
    }
  }
}

TEST_CASE("rotations carry sphere cycles onto each other") {
  // The full cycle on colors i..n maps the color-n sphere onto the color-i
  // sphere without any sign correction.
  for (int n = 2; n <= 3; ++n) {
    Chain last = oriented_sphere_cycle(n, n);
    for (int i = 0; i <= n; ++i) {
      CHECK(act_chain(pi_cycle(n, n, i), last) == oriented_sphere_cycle(i, n));
    }
  }

  // Transpositions that avoid the omitted color reverse the sphere.
  for (int n = 2; n <= 3; ++n) {
    for (int i = 0; i <= n; ++i) {
      Chain s = oriented_sphere_cycle(i, n);
      for (int j = 0; j + 1 <= n; ++j) {
        if (j == i || j + 1 == i) continue;
        CHECK(act_chain(pi_cycle(n, j + 1, j), s) == -s);
      }
    }
  }
}

TEST_CASE("orbits have the predicted sizes") {
  CHECK(simplex_orbit(make({{0, 0}, {1, 1}}), 1).size() == 2);
  CHECK(simplex_orbit(make({{0, 0}, {1, 1}}), 2).size() == 6);

  // Full-palette binary simplexes: the orbit is the set of words with the
  // same number of 1-labels.
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      std::vector<Vertex> vs;
      for (int c = 0; c <= n; ++c) vs.push_back({c, c < k ? 1 : 0});
      std::set<Simplex> orbit = simplex_orbit(Simplex(vs), n);
      CHECK(orbit.size() == static_cast<std::size_t>(binom(n + 1, k)));
      for (const Simplex& s : orbit) {
        int ones = 0;
        for (const Vertex& v : s.vertices()) ones += v.label;
        CHECK(ones == k);
      }
    }
  }

  // The boundary of the missing facet is reversed by odd permutations, so
  // its orbit as a chain is just {d, -d}.
  Chain d = distinguished_cycle(1);
  std::set<Chain> orbit = chain_orbit(d, 1);
  CHECK(orbit.size() == 2);
  CHECK(orbit.count(d) == 1);
  CHECK(orbit.count(-d) == 1);
}
