#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equichain/smith.hpp"

using namespace equichain;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> apply_matrix(const IntMatrix& a, const std::vector<Int>& x) {
  std::vector<Int> out(a.rows, Int(0));
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * x[j];
  }
  return out;
}

void check_invariants(const IntMatrix& a) {
  SmithData s = smith_normal_form(a);
  CHECK(smith_reconstructs(a, s));
  for (std::size_t i = 0; i < s.rank; ++i) {
    CHECK(s.diagonal[i] > 0);
    if (i + 1 < s.rank) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
  // Transforms must be unimodular: determinant +-1 via their own Smith form.
  SmithData su = smith_normal_form(s.u);
  CHECK(su.rank == s.u.rows);
  for (const Int& d : su.diagonal) CHECK(d == 1);
  SmithData sv = smith_normal_form(s.v);
  CHECK(sv.rank == s.v.rows);
  for (const Int& d : sv.diagonal) CHECK(d == 1);
}

}  // namespace

TEST_CASE("frozen normal forms") {
  // Hand-checked via determinantal divisors: gcd of entries 2, gcd of 2x2
  // minors 4, |det| 624, so the invariant factors are 2, 4/2, 624/4.
  SmithData s = smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  REQUIRE(s.rank == 3);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 2);
  CHECK(s.diagonal[2] == 156);

  SmithData t = smith_normal_form(from_rows({{1, 0}, {0, 1}}));
  CHECK(t.rank == 2);
  CHECK(t.diagonal == std::vector<Int>{1, 1});

  SmithData z = smith_normal_form(IntMatrix(3, 2));
  CHECK(z.rank == 0);
}

TEST_CASE("random matrices keep the reconstruction identity") {
  std::mt19937 rng(20250814);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % 5;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        a.at(i, j) = static_cast<long long>(rng() % 21) - 10;
      }
    }
    check_invariants(a);
  }
}

TEST_CASE("solver returns exact particular solutions") {
  IntMatrix a = from_rows({{2, 0}, {0, 3}});
  SolveResult res = solve_integer_system(a, {Int(4), Int(9)});
  REQUIRE(std::holds_alternative<IntegerSolution>(res));
  const IntegerSolution& sol = std::get<IntegerSolution>(res);
  CHECK(sol.particular == std::vector<Int>{2, 3});
  CHECK(sol.kernel_basis.empty());
}

TEST_CASE("solver refuses non-divisible systems with a checkable witness") {
  IntMatrix a = from_rows({{2, 4}, {6, 8}});
  SolveResult res = solve_integer_system(a, {Int(1), Int(1)});
  REQUIRE(std::holds_alternative<InfeasibilityWitness>(res));
  const InfeasibilityWitness& w = std::get<InfeasibilityWitness>(res);
  REQUIRE(w.combination.size() == 2);
  // y * A must vanish mod m while y * b does not.
  Int rhs = w.combination[0] * 1 + w.combination[1] * 1;
  for (std::size_t j = 0; j < 2; ++j) {
    Int col = w.combination[0] * a.at(0, j) + w.combination[1] * a.at(1, j);
    if (w.modulus == 0) {
      CHECK(col == 0);
    } else {
      CHECK(col % w.modulus == 0);
    }
  }
  if (w.modulus == 0) {
    CHECK(rhs != 0);
  } else {
    CHECK(rhs % w.modulus != 0);
  }
}

TEST_CASE("inconsistent equalities yield modulus zero witnesses") {
  // x + y = 1 and x + y = 2 cannot both hold.
  IntMatrix a = from_rows({{1, 1}, {1, 1}});
  SolveResult res = solve_integer_system(a, {Int(1), Int(2)});
  REQUIRE(std::holds_alternative<InfeasibilityWitness>(res));
  CHECK(std::get<InfeasibilityWitness>(res).modulus == 0);
}

TEST_CASE("kernel basis spans the solution lattice") {
  // Rank-1 map: kernel has two independent columns.
  IntMatrix a = from_rows({{1, 2, 3}});
  SolveResult res = solve_integer_system(a, {Int(6)});
  REQUIRE(std::holds_alternative<IntegerSolution>(res));
  const IntegerSolution& sol = std::get<IntegerSolution>(res);
  CHECK(apply_matrix(a, sol.particular) == std::vector<Int>{6});
  REQUIRE(sol.kernel_basis.size() == 2);
  for (const auto& k : sol.kernel_basis) {
    CHECK(apply_matrix(a, k) == std::vector<Int>{0});
  }
  // The two kernel vectors are linearly independent over the rationals.
  const auto& k0 = sol.kernel_basis[0];
  const auto& k1 = sol.kernel_basis[1];
  bool independent = false;
  for (std::size_t i = 0; i < 3 && !independent; ++i) {
    for (std::size_t j = i + 1; j < 3 && !independent; ++j) {
      independent = k0[i] * k1[j] - k0[j] * k1[i] != 0;
    }
  }
  CHECK(independent);
}

TEST_CASE("random solvable systems round-trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 4;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        a.at(i, j) = static_cast<long long>(rng() % 11) - 5;
      }
    }
    // Manufacture a solvable right-hand side from a random integer point.
    std::vector<Int> x(c);
    for (auto& v : x) v = static_cast<long long>(rng() % 9) - 4;
    const std::vector<Int> b = apply_matrix(a, x);
    SolveResult res = solve_integer_system(a, b);
    REQUIRE(std::holds_alternative<IntegerSolution>(res));
    CHECK(apply_matrix(a, std::get<IntegerSolution>(res).particular) == b);
  }
}

TEST_CASE("extended gcd normalizes and certifies") {
  Bezout b = extended_gcd(Int(12), Int(-18));
  CHECK(b.g == 6);
  CHECK(b.x * 12 + b.y * -18 == 6);
  Bezout z = extended_gcd(Int(0), Int(0));
  CHECK(z.g == 0);
  Bezout p = extended_gcd(Int(0), Int(-7));
  CHECK(p.g == 7);
  CHECK(p.x * 0 + p.y * -7 == 7);
}
