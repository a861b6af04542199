#include "equichain/solvability.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace equichain {

std::vector<Int> pascal_row(int n_plus_1) {
  std::vector<Int> row{Int(1)};
  for (int r = 1; r <= n_plus_1; ++r) {
    std::vector<Int> next(static_cast<std::size_t>(r) + 1, Int(1));
    for (int j = 1; j < r; ++j) {
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row;
}

Int binomial_gcd(int n) {
  if (n < 1) throw std::invalid_argument("binomial gcd requires n >= 1");
  // Route one: Pascal row.
  const std::vector<Int> row = pascal_row(n + 1);
  Int g1 = 0;
  for (int k = 1; k <= n; ++k) g1 = int_gcd(g1, row[static_cast<std::size_t>(k)]);
  // Route two: multiplicative recurrence C(n+1,k) = C(n+1,k-1)*(n+2-k)/k.
  Int g2 = 0;
  Int c = 1;
  for (int k = 1; k <= n; ++k) {
    c = c * (n + 2 - k) / k;  // exact at every step
    g2 = int_gcd(g2, c);
  }
  if (g1 != g2) {
    throw std::runtime_error("binomial gcd routes disagree at n = " + std::to_string(n));
  }
  return g1;
}

std::optional<std::vector<Int>> solve_diophantine(int n) {
  if (n < 0) throw std::invalid_argument("diophantine target requires n >= 0");
  const std::vector<Int> row = pascal_row(n + 1);
  std::vector<Int> coeffs;
  for (int i = 0; i < n; ++i) coeffs.push_back(row[static_cast<std::size_t>(i + 1)]);
  if (coeffs.empty()) return std::nullopt;  // 1 + (empty sum) == 0 has no solution
  // Fold Bezout combinations: g = gcd(coeffs) with g = sum x_i * coeffs_i.
  std::vector<Int> combo{Int(1)};
  Int g = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    Bezout b = extended_gcd(g, coeffs[i]);
    for (Int& x : combo) x *= b.x;
    combo.push_back(b.y);
    g = b.g;
  }
  if (g != 1) return std::nullopt;
  // We need sum k_i * coeffs_i == -1.
  for (Int& x : combo) x = -x;
  Int check = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) check += combo[i] * coeffs[i];
  if (check != 0) {
    throw std::runtime_error("diophantine witness failed substitution");
  }
  return combo;
}

namespace {

// Binary labellings of the given ascending colors with exactly k ones, as
// canonical simplexes in mask order.
std::vector<Simplex> labellings_with_k_ones(const std::vector<int>& colors, int k) {
  std::vector<Simplex> out;
  const std::size_t m = colors.size();
  for (std::size_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < m; ++i) {
      vs.push_back({colors[i], (mask >> i) & 1u ? 1 : 0});
    }
    out.push_back(Simplex(std::move(vs)));
  }
  return out;
}

std::vector<int> iota_colors(int q) {
  std::vector<int> cs;
  for (int c = 0; c <= q; ++c) cs.push_back(c);
  return cs;
}

}  // namespace

OrbitClass orbit_class(int q, int k) {
  if (q < 0 || k < 0 || k > q + 1) {
    throw std::invalid_argument("orbit class requires 0 <= k <= q+1");
  }
  return {q, k, labellings_with_k_ones(iota_colors(q), k)};
}

std::size_t ReducedSystem::column(int q, int k) const {
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (unknowns[i].first == q && unknowns[i].second == k) return i;
  }
  throw std::invalid_argument("no unknown c_{" + std::to_string(q) + "," +
                              std::to_string(k) + "}");
}

ReducedSystem build_reduced_system(int n, bool boundary_only) {
  if (n < 1) throw std::invalid_argument("reduced system requires n >= 1");
  ReducedSystem sys;
  sys.n = n;
  sys.boundary_only = boundary_only;
  const int top = boundary_only ? n - 1 : n;
  for (int q = 0; q <= top; ++q) {
    for (int k = 0; k <= q + 1; ++k) sys.unknowns.push_back({q, k});
  }
  const std::size_t cols = sys.unknowns.size();

  // Symbolic chains: target simplex -> linear form over the unknowns.
  using Form = std::vector<Int>;
  std::set<std::vector<Int>> seen_rows;
  std::vector<std::vector<Int>> rows;
  std::vector<Int> rhs;
  std::vector<std::string> kinds;

  for (int q = 1; q <= top; ++q) {
    std::map<Simplex, Form> delta_of_image;  // del applied to the ansatz image
    for (int k = 0; k <= q + 1; ++k) {
      const std::size_t col = sys.column(q, k);
      for (const Simplex& tau : orbit_class(q, k).members) {
        int sign = 1;
        for (int j = 0; j <= tau.dim(); ++j) {
          Form& f = delta_of_image.try_emplace(tau.face_without(j), Form(cols)).first->second;
          f[col] += sign;
          sign = -sign;
        }
      }
    }
    std::map<Simplex, Form> image_of_delta;  // ansatz image of del<0..q>
    int face_sign = 1;
    for (int j = 0; j <= q; ++j) {
      std::vector<int> colors;
      for (int c = 0; c <= q; ++c) {
        if (c != j) colors.push_back(c);
      }
      for (int k = 0; k <= q; ++k) {
        const std::size_t col = sys.column(q - 1, k);
        for (const Simplex& tau : labellings_with_k_ones(colors, k)) {
          Form& f = image_of_delta.try_emplace(tau, Form(cols)).first->second;
          f[col] += face_sign;
        }
      }
      face_sign = -face_sign;
    }
    std::set<Simplex> targets;
    for (const auto& [s, f] : delta_of_image) targets.insert(s);
    for (const auto& [s, f] : image_of_delta) targets.insert(s);
    for (const Simplex& s : targets) {
      Form row(cols);
      auto it = delta_of_image.find(s);
      if (it != delta_of_image.end()) row = it->second;
      auto jt = image_of_delta.find(s);
      if (jt != image_of_delta.end()) {
        for (std::size_t c = 0; c < cols; ++c) row[c] -= jt->second[c];
      }
      // Normalize sign (first nonzero positive) and deduplicate; the same
      // class relation reappears once per face and per labelling.
      int lead = 0;
      for (const Int& x : row) {
        if (x != 0) {
          lead = x > 0 ? 1 : -1;
          break;
        }
      }
      if (lead == 0) continue;
      if (lead < 0) {
        for (Int& x : row) x = -x;
      }
      if (seen_rows.insert(row).second) {
        rows.push_back(row);
        rhs.push_back(0);
        kinds.push_back("commutation");
      }
    }
  }

  {
    std::vector<Int> row(cols);
    row[sys.column(0, 0)] = 1;
    row[sys.column(0, 1)] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(1);
    kinds.push_back("augmentation");
  }
  if (!boundary_only) {
    for (int k : {0, n + 1}) {
      std::vector<Int> row(cols);
      row[sys.column(n, k)] = 1;
      rows.push_back(std::move(row));
      rhs.push_back(0);
      kinds.push_back("pin");
    }
  }

  sys.lhs = IntMatrix(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) sys.lhs.at(i, j) = rows[i][j];
  }
  sys.rhs = std::move(rhs);
  sys.row_kinds = std::move(kinds);
  return sys;
}

SystemSolution solve_reduced_system(const ReducedSystem& sys) {
  SolveResult res = solve_integer_system(sys.lhs, sys.rhs);
  SystemSolution out;
  if (std::holds_alternative<IntegerSolution>(res)) {
    out.feasible = true;
    out.values = std::get<IntegerSolution>(res).particular;
  } else {
    out.feasible = false;
    out.witness = std::get<InfeasibilityWitness>(res);
  }
  return out;
}

std::vector<Int> class_equation(int n) {
  const ReducedSystem sys = build_reduced_system(n, false);
  // Each commutation row must be the class recurrence
  // c_{q-1,k} == c_{q,k} + c_{q,k+1}; anything else would mean the ansatz
  // expansion changed shape, and the elimination below would be unsound.
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, std::pair<int, int>>> defs;
  for (std::size_t r = 0; r < sys.row_kinds.size(); ++r) {
    if (sys.row_kinds[r] != "commutation") continue;
    std::vector<std::pair<std::pair<int, int>, Int>> nz;
    for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
      if (sys.lhs.at(r, c) != 0) nz.push_back({sys.unknowns[c], sys.lhs.at(r, c)});
    }
    if (nz.size() != 3) throw std::runtime_error("unexpected commutation row shape");
    // Columns are ordered by (q, k): the lower-dimension unknown comes first.
    auto low = nz[0], a = nz[1], b = nz[2];
    const int q = a.first.first;
    if (low.first.first != q - 1 || b.first.first != q ||
        b.first.second != a.first.second + 1 || low.first.second != a.first.second ||
        int_abs(low.second) != 1 || a.second != -low.second || b.second != -low.second) {
      throw std::runtime_error("commutation row is not the class recurrence");
    }
    defs[low.first] = {a.first, b.first};
  }
  // c_{q,k} as a vector over c_{n,0..n+1}.
  std::map<std::pair<int, int>, std::vector<Int>> expr;
  for (int k = 0; k <= n + 1; ++k) {
    std::vector<Int> e(static_cast<std::size_t>(n) + 2);
    e[static_cast<std::size_t>(k)] = 1;
    expr[{n, k}] = std::move(e);
  }
  for (int q = n - 1; q >= 0; --q) {
    for (int k = 0; k <= q + 1; ++k) {
      auto it = defs.find({q, k});
      if (it == defs.end()) {
        throw std::runtime_error("missing recurrence row for c_{" + std::to_string(q) +
                                 "," + std::to_string(k) + "}");
      }
      const auto& [x, y] = it->second;
      std::vector<Int> e = expr.at(x);
      const std::vector<Int>& f = expr.at(y);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += f[i];
      expr[{q, k}] = std::move(e);
    }
  }
  std::vector<Int> kappa = expr.at({0, 0});
  const std::vector<Int>& other = expr.at({0, 1});
  for (std::size_t i = 0; i < kappa.size(); ++i) kappa[i] += other[i];
  return kappa;
}

ChainMapTable expand_class_coefficients(int n, int top_dim, const ReducedSystem& sys,
                                        const std::vector<Int>& values,
                                        const std::string& target_name) {
  if (values.size() != sys.unknowns.size()) {
    throw std::invalid_argument("value vector does not match the system unknowns");
  }
  Complex disk = build_disk(n);
  ChainMapTable m(n, "disk", target_name);
  for (int q = 0; q <= top_dim; ++q) {
    for (const Simplex& face : disk.simplexes(q)) {
      Chain img(q);
      const std::vector<int> colors = face.colors();
      for (int k = 0; k <= q + 1; ++k) {
        const Int& c = values[sys.column(q, k)];
        if (c == 0) continue;
        for (const Simplex& tau : labellings_with_k_ones(colors, k)) {
          img.add(tau, c);
        }
      }
      m.set_image(face, std::move(img));
    }
  }
  return m;
}

Certificate search_equivariant_map(int n) {
  if (n < 1) throw std::invalid_argument("search requires n >= 1");
  Certificate cert;
  cert.n = n;
  cert.g = binomial_gcd(n);
  cert.diophantine = solve_diophantine(n);
  cert.class_equation_coeffs = class_equation(n);
  const ReducedSystem sys = build_reduced_system(n, false);
  SystemSolution sol = solve_reduced_system(sys);
  if (sol.feasible != (cert.g == 1)) {
    throw std::runtime_error(
        "system feasibility and binomial gcd disagree; one of the routes is wrong");
  }
  if (sol.feasible) {
    cert.kind = Certificate::Kind::existence;
    ChainMapTable witness = expand_class_coefficients(n, n, sys, sol.values, "annulus");
    Complex disk = build_disk(n);
    Complex annulus = build_annulus(n);
    cert.verifications = verify_all(witness, disk, annulus);
    for (const VerificationReport& r : cert.verifications) {
      if (!r.pass) {
        // The expansion is equivariant and color preserving by construction
        // and solves the commutation system; a failure here is a bug, not a
        // mathematical outcome.
        throw std::runtime_error("expanded witness failed verification " +
                                 property_name(r.property) + ": " + r.detail);
      }
    }
    cert.witness = std::move(witness);
  } else {
    cert.kind = Certificate::Kind::nonexistence;
    cert.infeasibility = sol.witness;
    if (cert.g <= 1) {
      throw std::runtime_error("infeasible system with trivial gcd");
    }
    // The pins zero the monochromatic columns; g must divide the surviving
    // class-equation coefficients while g never divides the constant 1.
    for (int k = 1; k <= n; ++k) {
      if (cert.class_equation_coeffs[static_cast<std::size_t>(k)] % cert.g != 0) {
        throw std::runtime_error("gcd does not divide the class equation");
      }
    }
  }
  return cert;
}

WindingCongruenceReport winding_congruence(ChainMapTable& m, int n) {
  Complex disk = build_disk(n);
  Complex annulus = build_annulus(n);
  for (const VerificationReport& r : verify_all(m, disk, annulus)) {
    if (!r.pass) {
      throw std::invalid_argument("winding congruence precondition unmet (" +
                                  property_name(r.property) + "): " + r.detail);
    }
  }
  std::vector<Vertex> vs;
  for (int i = 0; i <= n; ++i) vs.push_back({i, 0});
  Chain top(n);
  top.add(Simplex(std::move(vs)), 1);
  WindingOracle oracle(n);
  WindingCongruenceReport rep{oracle.winding(apply(m, boundary(top))),
                              binomial_gcd(n), false};
  rep.congruent_to_one = (rep.winding - 1) % rep.modulus == 0;
  return rep;
}

std::vector<std::vector<Int>> enumerate_boundary_solutions(int n, const Int& bound) {
  const ReducedSystem sys = build_reduced_system(n, true);
  const std::size_t u = sys.unknowns.size();
  if (u > 8) {
    throw std::invalid_argument("exhaustive enumeration is limited to 8 unknowns");
  }
  if (bound < 0 || bound > 16) {
    throw std::invalid_argument("exhaustive enumeration bound must be in 0..16");
  }
  const long long b = bound.convert_to<long long>();
  std::vector<long long> v(u, -b);
  std::vector<std::vector<Int>> out;
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < sys.rhs.size() && ok; ++r) {
      Int acc = 0;
      for (std::size_t c = 0; c < u; ++c) acc += sys.lhs.at(r, c) * v[c];
      ok = acc == sys.rhs[r];
    }
    if (ok) {
      std::vector<Int> sol;
      for (long long x : v) sol.push_back(x);
      out.push_back(std::move(sol));
    }
    std::size_t i = 0;
    while (i < u && v[i] == b) {
      v[i] = -b;
      ++i;
    }
    if (i == u) break;
    ++v[i];
  }
  return out;
}

std::vector<std::vector<Int>> sample_boundary_solutions(int n, std::size_t count,
                                                        unsigned seed) {
  const ReducedSystem sys = build_reduced_system(n, true);
  SolveResult res = solve_integer_system(sys.lhs, sys.rhs);
  if (!std::holds_alternative<IntegerSolution>(res)) {
    throw std::runtime_error("boundary-only system should always be feasible");
  }
  const IntegerSolution& sol = std::get<IntegerSolution>(res);
  std::mt19937 rng(seed);
  std::set<std::vector<Int>> seen;
  const std::size_t limit = count * 200 + 100;
  for (std::size_t iter = 0; iter < limit && seen.size() < count; ++iter) {
    std::vector<Int> x = sol.particular;
    for (const auto& k : sol.kernel_basis) {
      // Deterministic across platforms: raw engine output, not a
      // distribution adapter.
      long long c = static_cast<long long>(rng() % 9u) - 4;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += Int(c) * k[i];
    }
    seen.insert(std::move(x));
  }
  if (seen.size() < count) {
    throw std::runtime_error("sampling failed to reach the requested count");
  }
  return {seen.begin(), seen.end()};
}

RenamingVerdict renaming_verdict(int n, std::optional<int> t) {
  if (n < 1) throw std::invalid_argument("renaming verdict requires n >= 1");
  RenamingVerdict v;
  v.n = n;
  v.t = t;
  v.wait_free.dimension = n;
  v.wait_free.g = binomial_gcd(n);
  v.wait_free.impossible = v.wait_free.g > 1;
  const std::string procs = std::to_string(n + 1);
  if (v.wait_free.impossible) {
    v.wait_free.statement =
        "no wait-free " + std::to_string(2 * n) + "-renaming protocol for " + procs +
        " processes: gcd of the middle binomials is " + v.wait_free.g.str();
  } else {
    v.wait_free.statement =
        "the obstruction vanishes for " + std::to_string(2 * n) + "-renaming with " +
        procs +
        " processes: an equivariant chain map exists (gcd 1); this engine decides "
        "the chain-map question, not the protocol construction";
  }
  if (t) {
    if (*t < 1 || *t > n) {
      throw std::invalid_argument("t-resilient verdict requires 1 <= t <= n");
    }
    TaskVerdict tv;
    tv.dimension = *t;
    tv.g = binomial_gcd(*t);
    tv.impossible = tv.g > 1;
    if (tv.impossible) {
      tv.statement = "no " + std::to_string(*t) + "-resilient " +
                     std::to_string(n + *t) + "-renaming protocol for " + procs +
                     " processes: gcd of the middle binomials at dimension " +
                     std::to_string(*t) + " is " + tv.g.str();
    } else {
      tv.statement = "the obstruction vanishes (gcd 1) at dimension " +
                     std::to_string(*t) + "; " + std::to_string(*t) + "-resilient " +
                     std::to_string(n + *t) +
                     "-renaming solvability is unknown here: this engine decides "
                     "only the chain-map question";
    }
    v.t_resilient = std::move(tv);
  }
  return v;
}

}  // namespace equichain
