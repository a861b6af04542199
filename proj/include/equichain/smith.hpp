#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "equichain/ints.hpp"

namespace equichain {

// Dense integer matrix, row major. Problem sizes here are desk scale
// (hundreds of rows/columns at most), so dense exact arithmetic is the
// simplest thing that is obviously correct.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static IntMatrix identity(std::size_t k);
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// u * a * v == diag(diagonal), with u and v unimodular. The pivot rule is
// deterministic: smallest nonzero magnitude, ties broken by lexicographic
// (row, col) index. Invariant factors are positive and divide successively.
struct SmithData {
  IntMatrix u;                // rows x rows
  IntMatrix v;                // cols x cols
  std::vector<Int> diagonal;  // length == rank
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

SmithData smith_normal_form(IntMatrix a);

// Checks u * original * v == diag exactly.
bool smith_reconstructs(const IntMatrix& original, const SmithData& s);

// Certificate that a*x = b has no integer solution: an integer row
// combination y with y*a ≡ 0 (mod modulus) entrywise while y*b is not
// divisible by modulus. modulus == 0 encodes the equality case y*a = 0,
// y*b != 0.
struct InfeasibilityWitness {
  std::vector<Int> combination;
  Int modulus;
};

// Particular solution by normal-form back-substitution (free coordinates
// zero; no minimization) plus an integer basis of the solution lattice of
// a*x = 0.
struct IntegerSolution {
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel_basis;
};

using SolveResult = std::variant<IntegerSolution, InfeasibilityWitness>;

SolveResult solve_integer_system(const SmithData& s, const std::vector<Int>& b);
SolveResult solve_integer_system(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace equichain
