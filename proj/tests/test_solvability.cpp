#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "equichain/chainmaps.hpp"
#include "equichain/chains.hpp"
#include "equichain/complexes.hpp"
#include "equichain/solvability.hpp"

using namespace equichain;

namespace {

// Independent binomial via the multiplicative recurrence (exact division).
Int binom_oracle(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

// gcd of the middle binomials is p exactly when n+1 is a power of the prime
// p, and 1 otherwise. Trial division gives an independent oracle.
Int expected_gcd(int n) {
  int m = n + 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      return m == 1 ? Int(p) : Int(1);
    }
  }
  return Int(m);
}

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x) {
  std::vector<Int> out(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * x[j];
  }
  return out;
}

// Checks the refutation semantics: y*A vanishes (mod m) columnwise while y*b
// does not; modulus 0 is the exact-equality case.
bool witness_refutes(const InfeasibilityWitness& w, const IntMatrix& a,
                     const std::vector<Int>& b) {
  if (w.combination.size() != a.rows) return false;
  for (std::size_t j = 0; j < a.cols; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < a.rows; ++i) s += w.combination[i] * a.at(i, j);
    if (w.modulus == 0 ? s != 0 : s % w.modulus != 0) return false;
  }
  Int yb = 0;
  for (std::size_t i = 0; i < a.rows; ++i) yb += w.combination[i] * b[i];
  return w.modulus == 0 ? yb != 0 : yb % w.modulus != 0;
}

}  // namespace

TEST_CASE("pascal rows match the multiplicative recurrence") {
  CHECK(pascal_row(0) == std::vector<Int>{1});
  CHECK(pascal_row(4) == std::vector<Int>{1, 4, 6, 4, 1});
  for (int m = 1; m <= 24; ++m) {
    std::vector<Int> row = pascal_row(m);
    REQUIRE(row.size() == static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) {
      CHECK(row[static_cast<std::size_t>(k)] == binom_oracle(m, k));
    }
  }
}

TEST_CASE("binomial gcd follows the prime-power law") {
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(binomial_gcd(n) == expected_gcd(n));
  }
  CHECK(binomial_gcd(1) == 2);
  CHECK(binomial_gcd(2) == 3);
  CHECK(binomial_gcd(3) == 2);  // 4 = 2^2
  CHECK(binomial_gcd(4) == 5);
  CHECK(binomial_gcd(5) == 1);  // 6 = 2*3
}

TEST_CASE("diophantine witnesses certify the feasible dimensions") {
  for (int n = 1; n <= 24; ++n) {
    CAPTURE(n);
    auto w = solve_diophantine(n);
    CHECK(w.has_value() == (binomial_gcd(n) == 1));
    if (w) {
      REQUIRE(w->size() == static_cast<std::size_t>(n));
      Int total = 1;
      for (int i = 0; i < n; ++i) {
        total += (*w)[static_cast<std::size_t>(i)] * binom_oracle(n + 1, i + 1);
      }
      CHECK(total == 0);
    }
  }

  // Hand witness at the first feasible dimension:
  // 1 - C(6,1) - C(6,2) + C(6,3) = 1 - 6 - 15 + 20 = 0.
  std::vector<Int> hand = {-1, -1, 1, 0, 0};
  Int total = 1;
  for (int i = 0; i < 5; ++i) total += hand[static_cast<std::size_t>(i)] * binom_oracle(6, i + 1);
  CHECK(total == 0);
}

TEST_CASE("orbit classes list the canonical binary labellings") {
  for (int q = 0; q <= 3; ++q) {
    for (int k = 0; k <= q + 1; ++k) {
      OrbitClass cls = orbit_class(q, k);
      CHECK(cls.q == q);
      CHECK(cls.k == k);
      CHECK(cls.members.size() == static_cast<std::size_t>(binom_oracle(q + 1, k)));
      std::set<Simplex> dedup(cls.members.begin(), cls.members.end());
      CHECK(dedup.size() == cls.members.size());
      for (const Simplex& s : cls.members) {
        CHECK(s.dim() == q);
        int ones = 0;
        for (int c = 0; c <= q; ++c) {
          CHECK(s.has_color(c));
          ones += s.vertex(c).label;
        }
        CHECK(ones == k);
      }
    }
  }
  CHECK_THROWS_AS(orbit_class(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(orbit_class(-1, 0), std::invalid_argument);
}

TEST_CASE("reduced systems have the expected shape") {
  ReducedSystem full = build_reduced_system(3, false);
  CHECK(full.n == 3);
  CHECK_FALSE(full.boundary_only);
  // One unknown per class c_{q,k}, q = 0..3, k = 0..q+1.
  CHECK(full.unknowns.size() == 14);
  for (std::size_t j = 0; j < full.unknowns.size(); ++j) {
    auto [q, k] = full.unknowns[j];
    CHECK(full.column(q, k) == j);
  }

  int pins = 0, augmentations = 0, commutations = 0;
  for (std::size_t i = 0; i < full.row_kinds.size(); ++i) {
    const std::string& kind = full.row_kinds[i];
    if (kind == "pin") ++pins;
    if (kind == "augmentation") {
      ++augmentations;
      CHECK(full.rhs[i] == 1);
    }
    if (kind == "commutation") {
      ++commutations;
      CHECK(full.rhs[i] == 0);
      int nonzero = 0;
      for (std::size_t j = 0; j < full.lhs.cols; ++j) {
        const Int& e = full.lhs.at(i, j);
        if (e != 0) {
          ++nonzero;
          CHECK((e == 1 || e == -1));
        }
      }
      CHECK(nonzero == 3);
    }
  }
  CHECK(pins == 2);
  CHECK(augmentations == 1);
  CHECK(commutations > 0);
  CHECK(full.rhs.size() == full.lhs.rows);
  CHECK(full.row_kinds.size() == full.lhs.rows);

  ReducedSystem boundary = build_reduced_system(3, true);
  CHECK(boundary.boundary_only);
  CHECK(boundary.unknowns.size() == 9);  // q = 0..2 only
  for (const std::string& kind : boundary.row_kinds) CHECK(kind != "pin");
  CHECK_THROWS_AS(build_reduced_system(0, false), std::invalid_argument);
}

TEST_CASE("eliminating the recurrence recovers the binomial row") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(class_equation(n) == pascal_row(n + 1));
  }
}

TEST_CASE("reduced-system solvability tracks the gcd dichotomy") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    ReducedSystem sys = build_reduced_system(n, false);
    SystemSolution sol = solve_reduced_system(sys);
    CHECK(sol.feasible == (binomial_gcd(n) == 1));
    if (sol.feasible) {
      CHECK(mat_vec(sys.lhs, sol.values) == sys.rhs);
    } else {
      CHECK(witness_refutes(sol.witness, sys.lhs, sys.rhs));
    }

    // Dropping the pins always restores feasibility.
    ReducedSystem rim = build_reduced_system(n, true);
    SystemSolution rim_sol = solve_reduced_system(rim);
    CHECK(rim_sol.feasible);
    CHECK(mat_vec(rim.lhs, rim_sol.values) == rim.rhs);
  }
}

TEST_CASE("search certifies nonexistence through dimension four") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    Certificate cert = search_equivariant_map(n);
    CHECK(cert.kind == Certificate::Kind::nonexistence);
    CHECK(cert.n == n);
    CHECK(cert.g == expected_gcd(n));
    CHECK(cert.g > 1);
    CHECK_FALSE(cert.diophantine.has_value());
    CHECK_FALSE(cert.witness.has_value());
    CHECK(cert.class_equation_coeffs == pascal_row(n + 1));
    // The gcd divides every coefficient surviving the pins, but not the
    // constant term 1.
    for (int k = 1; k <= n; ++k) {
      CHECK(cert.class_equation_coeffs[static_cast<std::size_t>(k)] % cert.g == 0);
    }
    REQUIRE(cert.infeasibility.has_value());
    ReducedSystem sys = build_reduced_system(n, false);
    CHECK(witness_refutes(*cert.infeasibility, sys.lhs, sys.rhs));
  }
}

TEST_CASE("search produces a fully verified witness at dimension five") {
  Certificate cert = search_equivariant_map(5);
  CHECK(cert.kind == Certificate::Kind::existence);
  CHECK(cert.g == 1);
  REQUIRE(cert.diophantine.has_value());
  REQUIRE(cert.witness.has_value());
  REQUIRE(cert.verifications.size() == 4);
  for (const VerificationReport& r : cert.verifications) CHECK(r.pass);

  // Re-verify from scratch rather than trusting the stored reports.
  ChainMapTable witness = *cert.witness;
  CHECK(witness.max_dim() == 5);
  Complex disk = build_disk(5);
  Complex annulus = build_annulus(5);
  for (const VerificationReport& r : verify_all(witness, disk, annulus)) {
    CAPTURE(property_name(r.property));
    CHECK(r.pass);
  }

  WindingCongruenceReport wc = winding_congruence(witness, 5);
  CHECK(wc.modulus == 1);
  CHECK(wc.congruent_to_one);
}

TEST_CASE("winding congruence accepts the boundary inclusion") {
  for (int n = 1; n <= 3; ++n) {
    ChainMapTable z = z_map(n);
    WindingCongruenceReport rep = winding_congruence(z, n);
    CHECK(rep.winding == 1);
    CHECK(rep.modulus == binomial_gcd(n));
    CHECK(rep.congruent_to_one);
  }

  // Tables that fail a verification are rejected up front.
  ChainMapTable broken = z_map(2);
  Chain image(0);
  image.add(Simplex({{0, 1}}), -1);
  broken.set_image(Simplex(std::vector<Vertex>{{0, 0}}), image);
  CHECK_THROWS_AS(winding_congruence(broken, 2), std::invalid_argument);
}

TEST_CASE("boundary solutions enumerate and all wind to one mod g") {
  ReducedSystem sys = build_reduced_system(2, true);
  std::vector<std::vector<Int>> sols = enumerate_boundary_solutions(2, 3);
  CHECK(sols.size() >= 3);
  std::set<std::vector<Int>> dedup(sols.begin(), sols.end());
  CHECK(dedup.size() == sols.size());

  // The vertex-inclusion solution (all-zeros class gets 1) is in the box.
  std::vector<Int> inclusion(sys.unknowns.size(), 0);
  for (std::size_t j = 0; j < sys.unknowns.size(); ++j) {
    if (sys.unknowns[j].second == 0) inclusion[j] = 1;
  }
  CHECK(dedup.count(inclusion) == 1);

  for (const std::vector<Int>& x : sols) {
    CHECK(mat_vec(sys.lhs, x) == sys.rhs);
    for (const Int& c : x) CHECK(int_abs(c) <= 3);
    ChainMapTable m = expand_class_coefficients(2, 1, sys, x, "annulus");
    WindingCongruenceReport rep = winding_congruence(m, 2);
    CHECK(rep.modulus == 3);
    CHECK(rep.congruent_to_one);
  }

  // Nine unknowns at n = 3 exceed the exhaustive-box guard.
  CHECK_THROWS_AS(enumerate_boundary_solutions(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_boundary_solutions(2, -1), std::invalid_argument);
}

TEST_CASE("sampled boundary solutions are deterministic and valid") {
  ReducedSystem sys = build_reduced_system(3, true);
  std::vector<std::vector<Int>> a = sample_boundary_solutions(3, 120, 20250814);
  std::vector<std::vector<Int>> b = sample_boundary_solutions(3, 120, 20250814);
  CHECK(a == b);
  CHECK(a.size() == 120);
  std::set<std::vector<Int>> dedup(a.begin(), a.end());
  CHECK(dedup.size() == a.size());
  for (const std::vector<Int>& x : a) {
    CHECK(mat_vec(sys.lhs, x) == sys.rhs);
  }
}

TEST_CASE("renaming verdicts cite the deciding gcd") {
  RenamingVerdict impossible = renaming_verdict(2, std::nullopt);
  CHECK(impossible.wait_free.dimension == 2);
  CHECK(impossible.wait_free.g == 3);
  CHECK(impossible.wait_free.impossible);
  CHECK(impossible.wait_free.statement.find("no wait-free 4-renaming") != std::string::npos);
  CHECK_FALSE(impossible.t_resilient.has_value());

  RenamingVerdict open = renaming_verdict(5, std::nullopt);
  CHECK_FALSE(open.wait_free.impossible);
  CHECK(open.wait_free.g == 1);
  // Feasible verdicts never claim a protocol exists.
  CHECK(open.wait_free.statement.find("protocol exists") == std::string::npos);
  CHECK(open.wait_free.statement.find("chain map exists") != std::string::npos);

  RenamingVerdict resilient = renaming_verdict(5, 2);
  REQUIRE(resilient.t_resilient.has_value());
  CHECK(resilient.t_resilient->dimension == 2);
  CHECK(resilient.t_resilient->g == 3);
  CHECK(resilient.t_resilient->impossible);
  CHECK(resilient.t_resilient->statement.find("7-renaming") != std::string::npos);

  RenamingVerdict resilient_open = renaming_verdict(6, 5);
  REQUIRE(resilient_open.t_resilient.has_value());
  CHECK_FALSE(resilient_open.t_resilient->impossible);

  CHECK_THROWS_AS(renaming_verdict(0, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(renaming_verdict(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(renaming_verdict(3, 4), std::invalid_argument);
}
