#include "equichain/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace equichain {

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

namespace {

void row_swap(IntMatrix& a, IntMatrix& u, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
  for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void col_swap(IntMatrix& a, IntMatrix& v, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
  for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& a, IntMatrix& u, std::size_t dst, std::size_t src,
              const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < a.cols; ++c) a.at(dst, c) -= q * a.at(src, c);
  for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) -= q * u.at(src, c);
}

// col_dst -= q * col_src
void col_axpy(IntMatrix& a, IntMatrix& v, std::size_t dst, std::size_t src,
              const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < a.rows; ++r) a.at(r, dst) -= q * a.at(r, src);
  for (std::size_t r = 0; r < v.rows; ++r) v.at(r, dst) -= q * v.at(r, src);
}

void row_negate(IntMatrix& a, IntMatrix& u, std::size_t i) {
  for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
  for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
}

// Smallest nonzero magnitude in the trailing block, ties by (row, col).
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows; ++i) {
    for (std::size_t j = t; j < a.cols; ++j) {
      const Int& x = a.at(i, j);
      if (x == 0) continue;
      Int m = int_abs(x);
      if (!found || m < best) {
        found = true;
        best = m;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

// Quotient minimizing |a - q*b|; on a half-way tie it keeps the truncated
// quotient. The remainder then satisfies 2|r| <= |b|.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && 2 * int_abs(r) > int_abs(b)) {
    q += ((r < 0) == (b < 0)) ? 1 : -1;
  }
  return q;
}

// Clears column t below and row t to the right of the pivot. Whenever a
// reduction leaves a nonzero remainder it is swapped into the pivot slot and
// the sweep restarts, so every later multiplier is taken against the smallest
// entry seen so far. Each restart at least halves |pivot| (remainders are
// symmetric), which both bounds the restarts and keeps the axpy products from
// compounding across a stale sweep.
void clear_cross(IntMatrix& a, IntMatrix& u, IntMatrix& v, std::size_t t) {
  bool restart = true;
  while (restart) {
    restart = false;
    for (std::size_t i = t + 1; i < a.rows; ++i) {
      if (a.at(i, t) == 0) continue;
      Int q = nearest_quotient(a.at(i, t), a.at(t, t));
      row_axpy(a, u, i, t, q);
      if (a.at(i, t) != 0) {
        row_swap(a, u, t, i);
        restart = true;
        break;
      }
    }
    if (restart) continue;
    for (std::size_t j = t + 1; j < a.cols; ++j) {
      if (a.at(t, j) == 0) continue;
      Int q = nearest_quotient(a.at(t, j), a.at(t, t));
      col_axpy(a, v, j, t, q);
      if (a.at(t, j) != 0) {
        col_swap(a, v, t, j);
        restart = true;
        break;
      }
    }
  }
}

}  // namespace

SmithData smith_normal_form(IntMatrix a) {
  SmithData s;
  s.rows = a.rows;
  s.cols = a.cols;
  s.u = IntMatrix::identity(a.rows);
  s.v = IntMatrix::identity(a.cols);

  const std::size_t steps = std::min(a.rows, a.cols);
  std::size_t t = 0;
  while (t < steps) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(a, t, pi, pj)) break;
    row_swap(a, s.u, t, pi);
    col_swap(a, s.v, t, pj);
    while (true) {
      clear_cross(a, s.u, s.v, t);
      // Invariant factors must divide successively: pull a non-divisible
      // entry into row t and keep reducing.
      bool fixed = true;
      for (std::size_t i = t + 1; i < a.rows && fixed; ++i) {
        for (std::size_t j = t + 1; j < a.cols && fixed; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_axpy(a, s.u, t, i, Int(-1));  // row_t += row_i
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    if (a.at(t, t) < 0) row_negate(a, s.u, t);
    ++t;
  }
  s.rank = t;
  for (std::size_t i = 0; i < t; ++i) s.diagonal.push_back(a.at(i, i));
  return s;
}

bool smith_reconstructs(const IntMatrix& original, const SmithData& s) {
  IntMatrix lhs = matmul(matmul(s.u, original), s.v);
  for (std::size_t i = 0; i < lhs.rows; ++i) {
    for (std::size_t j = 0; j < lhs.cols; ++j) {
      Int expect = (i == j && i < s.rank) ? s.diagonal[i] : Int(0);
      if (lhs.at(i, j) != expect) return false;
    }
  }
  return true;
}

SolveResult solve_integer_system(const SmithData& s, const std::vector<Int>& b) {
  if (b.size() != s.rows) throw std::invalid_argument("rhs length mismatch");
  // c = u * b
  std::vector<Int> c(s.rows);
  for (std::size_t i = 0; i < s.rows; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < s.rows; ++j) acc += s.u.at(i, j) * b[j];
    c[i] = acc;
  }
  auto u_row = [&](std::size_t i) {
    std::vector<Int> row(s.rows);
    for (std::size_t j = 0; j < s.rows; ++j) row[j] = s.u.at(i, j);
    return row;
  };
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (c[i] % s.diagonal[i] != 0) {
      return InfeasibilityWitness{u_row(i), s.diagonal[i]};
    }
  }
  for (std::size_t i = s.rank; i < s.rows; ++i) {
    if (c[i] != 0) {
      return InfeasibilityWitness{u_row(i), Int(0)};
    }
  }
  std::vector<Int> y(s.cols);
  for (std::size_t i = 0; i < s.rank && i < s.cols; ++i) y[i] = c[i] / s.diagonal[i];
  IntegerSolution sol;
  sol.particular.assign(s.cols, Int(0));
  for (std::size_t i = 0; i < s.cols; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < s.cols; ++j) acc += s.v.at(i, j) * y[j];
    sol.particular[i] = acc;
  }
  for (std::size_t j = s.rank; j < s.cols; ++j) {
    std::vector<Int> k(s.cols);
    for (std::size_t i = 0; i < s.cols; ++i) k[i] = s.v.at(i, j);
    sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

SolveResult solve_integer_system(const IntMatrix& a, const std::vector<Int>& b) {
  return solve_integer_system(smith_normal_form(a), b);
}

}  // namespace equichain
