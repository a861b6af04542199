#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichain/chainmaps.hpp"
#include "equichain/ints.hpp"
#include "equichain/smith.hpp"

namespace equichain {

// gcd(C(n+1,1), ..., C(n+1,n)), computed two independent ways (Pascal row
// vs. multiplicative recurrence) which must agree.
Int binomial_gcd(int n);

// The row C(n+1,0..n+1), Pascal construction.
std::vector<Int> pascal_row(int n_plus_1);

// Integer witness k_0..k_{n-1} for 1 + sum_i k_i * C(n+1, i+1) == 0, or
// nullopt when the coefficient gcd does not divide 1.
std::optional<std::vector<Int>> solve_diophantine(int n);

// Orbit class L_{q,k}: canonical full-color binary q-simplexes on colors
// 0..q with exactly k one-labels. An equivariant color-preserving map is
// constant on each class, so one unknown per class suffices.
struct OrbitClass {
  int q = 0;
  int k = 0;
  std::vector<Simplex> members;
};

OrbitClass orbit_class(int q, int k);

// Linear system over the class unknowns c_{q,k}: boundary-commutation rows on
// the representative faces <0..q> (transported by order-preserving color
// injections, which introduce no signs), the augmentation row
// c_{0,0} + c_{0,1} = 1, and — unless boundary_only — the pinned rows
// c_{n,0} = c_{n,n+1} = 0 for the monochromatic facets missing from the
// annulus. boundary_only drops dimension n entirely (skeleton maps).
struct ReducedSystem {
  int n = 0;
  bool boundary_only = false;
  std::vector<std::pair<int, int>> unknowns;  // (q, k), column order
  IntMatrix lhs;
  std::vector<Int> rhs;
  std::vector<std::string> row_kinds;  // "commutation", "augmentation", "pin"

  std::size_t column(int q, int k) const;
};

ReducedSystem build_reduced_system(int n, bool boundary_only);

struct SystemSolution {
  bool feasible = false;
  std::vector<Int> values;  // per unknown, when feasible
  InfeasibilityWitness witness{{}, 0};
};

SystemSolution solve_reduced_system(const ReducedSystem& sys);

// Eliminates the commutation recurrence to express c_{0,0} + c_{0,1} in the
// top-dimension unknowns: returns kappa with
// c_{0,0} + c_{0,1} = sum_k kappa[k] * c_{n,k}, k = 0..n+1. The built rows
// are pattern-checked against the recurrence before elimination.
std::vector<Int> class_equation(int n);

// Expands class coefficients into the explicit equivariant table on the
// disk's faces of dimension <= top_dim: each canonically oriented full-color
// binary simplex with k ones over the colors of a face of dimension q gets
// coefficient values[(q,k)].
ChainMapTable expand_class_coefficients(int n, int top_dim,
                                        const ReducedSystem& sys,
                                        const std::vector<Int>& values,
                                        const std::string& target_name);

struct Certificate {
  enum class Kind { existence, nonexistence };
  Kind kind = Kind::nonexistence;
  int n = 0;
  Int g;  // binomial gcd
  std::optional<std::vector<Int>> diophantine;         // witness when feasible
  std::optional<ChainMapTable> witness;                // existence
  std::vector<VerificationReport> verifications;       // existence, all four
  std::vector<Int> class_equation_coeffs;              // kappa, k = 0..n+1
  std::optional<InfeasibilityWitness> infeasibility;   // nonexistence
};

// Decides existence of an equivariant, color-preserving, augmented chain map
// from the disk to the annulus. Existence returns a fully verified witness
// (any verification failure after expansion is an internal error, not a
// result). Nonexistence returns the gcd certificate: g > 1 divides every
// class-equation coefficient surviving the pins but not the constant 1.
Certificate search_equivariant_map(int n);

struct WindingCongruenceReport {
  Int winding;
  Int modulus;  // binomial gcd
  bool congruent_to_one = false;
};

// Winding of m(del sigma^n) in the annulus, reduced against the binomial
// gcd. Verifies the four map properties first and rejects failing tables.
WindingCongruenceReport winding_congruence(ChainMapTable& m, int n);

// All solutions of the boundary-only system with every |c_{q,k}| <= bound
// (exhaustive filter; intended for small n).
std::vector<std::vector<Int>> enumerate_boundary_solutions(int n, const Int& bound);

// Deterministic pseudo-random lattice points of the boundary-only solution
// set: particular + random kernel combination, deduplicated.
std::vector<std::vector<Int>> sample_boundary_solutions(int n, std::size_t count,
                                                        unsigned seed);

struct TaskVerdict {
  int dimension = 0;  // the gcd argument deciding this task
  Int g;
  bool impossible = false;
  std::string statement;
};

struct RenamingVerdict {
  int n = 0;
  std::optional<int> t;
  TaskVerdict wait_free;
  std::optional<TaskVerdict> t_resilient;
};

// Wait-free 2n-renaming for n+1 processes via binomial_gcd(n); with t, the
// t-resilient (n+t)-renaming verdict via binomial_gcd(t). gcd = 1 yields an
// explicit unknown/possible statement, never a possibility claim.
RenamingVerdict renaming_verdict(int n, std::optional<int> t);

}  // namespace equichain
