#include "equichain/chains.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace equichain {

OrientedSimplex orient(const std::vector<Vertex>& sequence) {
  // Parity of the sorting permutation = parity of the inversion count.
  int inversions = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      if (sequence[j].color < sequence[i].color) ++inversions;
    }
  }
  return {Simplex(sequence), inversions % 2 == 0 ? 1 : -1};
}

Int Chain::coeff(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Int(0) : it->second;
}

void Chain::add(const Simplex& s, const Int& c) {
  if (s.dim() != q_) {
    throw std::invalid_argument("chain degree " + std::to_string(q_) +
                                " cannot hold a simplex of dimension " +
                                std::to_string(s.dim()));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::add(const OrientedSimplex& os, const Int& c) {
  add(os.simplex, os.sign < 0 ? Int(-c) : c);
}

Int Chain::augmentation_value() const {
  if (q_ != -1) {
    throw std::invalid_argument("augmentation value lives in degree -1");
  }
  return coeff(Simplex());
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.q_ != q_) throw std::invalid_argument("chain degree mismatch");
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.q_ != q_) throw std::invalid_argument("chain degree mismatch");
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

Chain Chain::operator-() const {
  Chain out(q_);
  for (const auto& [s, c] : terms_) out.add(s, -c);
  return out;
}

Chain operator*(const Int& c, const Chain& a) {
  Chain out(a.q_);
  if (c == 0) return out;
  for (const auto& [s, x] : a.terms_) out.add(s, c * x);
  return out;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    Int mag = int_abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += s.to_string();
  }
  return out;
}

Chain boundary(const Chain& c) {
  if (c.q() < 0) {
    throw std::invalid_argument("boundary is defined for degrees >= 0");
  }
  Chain out(c.q() - 1);
  for (const auto& [s, x] : c.terms()) {
    int sign = 1;
    for (int j = 0; j <= s.dim(); ++j) {
      out.add(s.face_without(j), sign > 0 ? x : Int(-x));
      sign = -sign;
    }
  }
  return out;
}

bool is_cycle(const Chain& c) {
  if (c.q() < 0) return true;  // del_{-1} is the zero map
  return boundary(c).is_zero();
}

BoundaryMatrix boundary_matrix(const Complex& k, int q) {
  if (q < 0 || q > k.dim()) {
    throw std::invalid_argument("boundary matrix degree out of range");
  }
  BoundaryMatrix bm;
  bm.q = q;
  bm.cols = k.simplexes(q);
  bm.rows = q >= 1 ? k.simplexes(q - 1) : std::vector<Simplex>{Simplex()};
  std::map<Simplex, std::size_t> row_index;
  for (std::size_t i = 0; i < bm.rows.size(); ++i) row_index[bm.rows[i]] = i;
  bm.m = IntMatrix(bm.rows.size(), bm.cols.size());
  for (std::size_t j = 0; j < bm.cols.size(); ++j) {
    const Simplex& s = bm.cols[j];
    int sign = 1;
    for (int f = 0; f <= s.dim(); ++f) {
      bm.m.at(row_index.at(s.face_without(f)), j) += sign;
      sign = -sign;
    }
  }
  return bm;
}

std::vector<Int> chain_coordinates(const Chain& c, const std::vector<Simplex>& basis) {
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<Int> out(basis.size());
  for (const auto& [s, x] : c.terms()) {
    auto it = index.find(s);
    if (it == index.end()) {
      throw std::invalid_argument("chain support leaves the complex: " + s.to_string());
    }
    out[it->second] = x;
  }
  return out;
}

Chain chain_from_coordinates(int q, const std::vector<Simplex>& basis,
                             const std::vector<Int>& coords) {
  if (coords.size() != basis.size()) {
    throw std::invalid_argument("coordinate length mismatch");
  }
  Chain out(q);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], coords[i]);
  return out;
}

std::optional<Chain> boundary_witness(const Chain& c, const Complex& k) {
  const int q = c.q();
  if (q > k.dim()) {
    throw std::invalid_argument("chain degree exceeds complex dimension");
  }
  if (q >= 0) {
    // Validates support as a side effect.
    (void)chain_coordinates(c, k.simplexes(q));
  }
  if (q == k.dim()) {
    // No (q+1)-simplexes: only the zero chain bounds.
    if (c.is_zero()) return Chain(q + 1);
    return std::nullopt;
  }
  BoundaryMatrix bm = boundary_matrix(k, q + 1);
  std::vector<Int> b = q >= 0 ? chain_coordinates(c, bm.rows)
                              : std::vector<Int>{c.coeff(Simplex())};
  SolveResult res = solve_integer_system(bm.m, b);
  if (std::holds_alternative<InfeasibilityWitness>(res)) return std::nullopt;
  Chain witness = chain_from_coordinates(
      q + 1, bm.cols, std::get<IntegerSolution>(res).particular);
  if (boundary(witness) != c) {
    throw std::runtime_error("boundary witness failed re-verification");
  }
  return witness;
}

bool is_boundary(const Chain& c, const Complex& k) {
  return boundary_witness(c, k).has_value();
}

std::optional<Chain> fill_cycle(const Complex& k, const Chain& c) {
  if (!is_cycle(c)) {
    throw std::invalid_argument("fill_cycle requires a cycle");
  }
  return boundary_witness(c, k);
}

HomologyGroup reduced_betti(const Complex& k, int q) {
  if (q < 0 || q > k.dim()) {
    throw std::invalid_argument("homology degree out of range");
  }
  const long long dim_cq = static_cast<long long>(k.simplexes(q).size());
  SmithData del_q = smith_normal_form(boundary_matrix(k, q).m);
  HomologyGroup h;
  long long rank_next = 0;
  if (q < k.dim()) {
    SmithData del_next = smith_normal_form(boundary_matrix(k, q + 1).m);
    rank_next = static_cast<long long>(del_next.rank);
    for (const Int& d : del_next.diagonal) {
      if (d > 1) h.torsion.push_back(d);
    }
  }
  h.rank = dim_cq - static_cast<long long>(del_q.rank) - rank_next;
  return h;
}

std::vector<Chain> cycle_basis(const Complex& k, int q) {
  BoundaryMatrix bm = boundary_matrix(k, q);
  SmithData s = smith_normal_form(bm.m);
  SolveResult res = solve_integer_system(s, std::vector<Int>(bm.rows.size(), Int(0)));
  std::vector<Chain> out;
  for (const auto& vec : std::get<IntegerSolution>(res).kernel_basis) {
    out.push_back(chain_from_coordinates(q, bm.cols, vec));
  }
  return out;
}

Chain distinguished_cycle(int n) {
  if (n < 1) throw std::invalid_argument("distinguished cycle requires n >= 1");
  std::vector<Vertex> all;
  for (int i = 0; i <= n; ++i) all.push_back({i, 0});
  Simplex zero_facet(std::move(all));
  Chain out(n - 1);
  int sign = 1;
  for (int i = 0; i <= n; ++i) {
    out.add(zero_facet.face_without(i), Int(sign));
    sign = -sign;
  }
  return out;
}

std::map<Simplex, int> coherent_orientation(const std::vector<Simplex>& top) {
  if (top.empty()) throw std::invalid_argument("no top simplexes to orient");
  // Ridge -> list of (facet index, incidence sign of ridge in del(facet)).
  std::map<Simplex, std::vector<std::pair<std::size_t, int>>> ridges;
  for (std::size_t f = 0; f < top.size(); ++f) {
    int sign = 1;
    for (int j = 0; j <= top[f].dim(); ++j) {
      ridges[top[f].face_without(j)].push_back({f, sign});
      sign = -sign;
    }
  }
  for (const auto& [r, cof] : ridges) {
    if (cof.size() > 2) {
      throw std::runtime_error("ridge " + r.to_string() +
                               " has more than two cofacets");
    }
  }
  std::map<Simplex, int> signs;
  std::deque<std::size_t> queue;
  std::vector<int> assigned(top.size(), 0);
  assigned[0] = 1;
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    int sf = assigned[f];
    int sign = 1;
    for (int j = 0; j <= top[f].dim(); ++j) {
      Simplex r = top[f].face_without(j);
      for (const auto& [g, sg] : ridges.at(r)) {
        if (g == f) continue;
        // Cancellation across the shared ridge: sf*sign + assigned[g]*sg == 0.
        int want = -sf * sign * sg;
        if (assigned[g] == 0) {
          assigned[g] = want;
          queue.push_back(g);
        } else if (assigned[g] != want) {
          throw std::runtime_error("inconsistent orientation at ridge " +
                                   r.to_string());
        }
      }
      sign = -sign;
    }
  }
  for (std::size_t f = 0; f < top.size(); ++f) {
    if (assigned[f] == 0) {
      throw std::runtime_error("ridge-adjacency graph is disconnected");
    }
    signs[top[f]] = assigned[f];
  }
  return signs;
}

Chain oriented_sphere_cycle(int i, int n) {
  if (n < 1 || i < 0 || i > n) {
    throw std::invalid_argument("sphere cycle needs n >= 1 and 0 <= i <= n");
  }
  std::vector<int> colors;
  for (int c = 0; c <= n; ++c) {
    if (c != i) colors.push_back(c);
  }
  Complex sphere = build_sphere(n, colors);
  const std::vector<Simplex>& top = sphere.simplexes(n - 1);
  std::map<Simplex, int> signs = coherent_orientation(top);
  std::vector<Vertex> zeros;
  for (int c : colors) zeros.push_back({c, 0});
  Simplex zero_facet(std::move(zeros));
  const int norm = signs.at(zero_facet);
  Chain out(n - 1);
  for (const auto& [s, sgn] : signs) out.add(s, Int(sgn * norm));
  if (!is_cycle(out)) {
    throw std::runtime_error("sphere orientation did not produce a cycle");
  }
  return out;
}

WindingOracle::WindingOracle(int n)
    : n_(n),
      annulus_(build_annulus(n)),
      distinguished_(distinguished_cycle(n)) {
  HomologyGroup h = reduced_betti(annulus_, n - 1);
  if (h.rank != 1 || !h.torsion.empty()) {
    throw std::runtime_error(
        "annulus homology in degree n-1 is not free of rank 1");
  }
  BoundaryMatrix bm = boundary_matrix(annulus_, n);
  row_basis_ = bm.rows;
  top_count_ = bm.cols.size();
  // Augmented system [del_n | d]: solving [beta; m] reproduces c as
  // del(beta) + m*d.
  IntMatrix m(bm.rows.size(), top_count_ + 1);
  for (std::size_t i = 0; i < bm.rows.size(); ++i) {
    for (std::size_t j = 0; j < top_count_; ++j) m.at(i, j) = bm.m.at(i, j);
  }
  std::vector<Int> d = chain_coordinates(distinguished_, row_basis_);
  for (std::size_t i = 0; i < row_basis_.size(); ++i) m.at(i, top_count_) = d[i];
  system_ = smith_normal_form(std::move(m));
  // The distinguished class generates: every basis cycle must be expressible
  // as del(beta) + m*d. Rank 1 freeness above makes m unique.
  for (const Chain& z : cycle_basis(annulus_, n - 1)) {
    SolveResult res =
        solve_integer_system(system_, chain_coordinates(z, row_basis_));
    if (std::holds_alternative<InfeasibilityWitness>(res)) {
      throw std::runtime_error(
          "distinguished cycle does not generate the annulus homology");
    }
  }
}

Int WindingOracle::winding(const Chain& c) const {
  if (c.q() != n_ - 1) {
    throw std::invalid_argument("winding is defined in degree n-1");
  }
  if (!is_cycle(c)) {
    throw std::invalid_argument("winding requires a cycle");
  }
  SolveResult res =
      solve_integer_system(system_, chain_coordinates(c, row_basis_));
  if (std::holds_alternative<InfeasibilityWitness>(res)) {
    throw std::runtime_error("cycle escaped the verified rank-1 homology");
  }
  return std::get<IntegerSolution>(res).particular[top_count_];
}

}  // namespace equichain
