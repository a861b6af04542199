#include "equichain/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace equichain {

std::vector<OrderedPartition> ordered_partitions(const std::vector<int>& items) {
  std::vector<OrderedPartition> out;
  if (items.empty()) {
    out.push_back({});
    return out;
  }
  const std::size_t m = items.size();
  for (std::size_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> first, rest;
    for (std::size_t i = 0; i < m; ++i) {
      ((mask >> i) & 1u ? first : rest).push_back(items[i]);
    }
    for (OrderedPartition tail : ordered_partitions(rest)) {
      OrderedPartition p;
      p.blocks.push_back(first);
      for (auto& b : tail.blocks) p.blocks.push_back(std::move(b));
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<int> SubdividedComplex::carrier_colors(int v) const {
  std::vector<int> cs;
  const unsigned mask = carrier_mask(v);
  for (int c = 0; c <= n_; ++c) {
    if (mask & (1u << c)) cs.push_back(c);
  }
  return cs;
}

int SubdividedComplex::corner_index(int color) const {
  if (color < 0 || color > n_) throw std::invalid_argument("corner color out of range");
  int idx = color;  // layer 0 stores corners in color order
  for (int r = 1; r <= rounds_; ++r) {
    SubVertex sv{color, {idx}};
    idx = lookup_[static_cast<std::size_t>(r)].at(sv);
  }
  return idx;
}

Vertex SubdividedComplex::vertex(int v) const {
  return {vertex_color(v), labels_.at(static_cast<std::size_t>(v))};
}

int SubdividedComplex::index_of(const Vertex& w) const {
  auto it = index_of_vertex_.find(w);
  if (it == index_of_vertex_.end()) {
    throw std::invalid_argument("vertex is not part of the subdivision");
  }
  return it->second;
}

int SubdividedComplex::relabel_rec(int r, int v, const std::vector<int>& rho,
                                   std::vector<std::map<int, int>>& memo) const {
  auto& layer_memo = memo[static_cast<std::size_t>(r)];
  auto it = layer_memo.find(v);
  if (it != layer_memo.end()) return it->second;
  const SubVertex& sv = layers_[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)];
  const int nc = sv.color < static_cast<int>(rho.size()) ? rho[static_cast<std::size_t>(sv.color)] : -1;
  if (nc < 0) {
    throw std::invalid_argument("relabelling is undefined on id " +
                                std::to_string(sv.color));
  }
  int res;
  if (r == 0) {
    res = nc;
  } else {
    SubVertex img{nc, {}};
    for (int w : sv.view) img.view.push_back(relabel_rec(r - 1, w, rho, memo));
    std::sort(img.view.begin(), img.view.end());
    auto jt = lookup_[static_cast<std::size_t>(r)].find(img);
    if (jt == lookup_[static_cast<std::size_t>(r)].end()) {
      throw std::runtime_error("relabelled view left the subdivision");
    }
    res = jt->second;
  }
  layer_memo.emplace(v, res);
  return res;
}

int SubdividedComplex::relabel_vertex(int v, const std::vector<int>& rho) const {
  std::vector<std::map<int, int>> memo(layers_.size());
  return relabel_rec(static_cast<int>(layers_.size()) - 1, v, rho, memo);
}

SubdividedComplex chromatic_subdivide(int n, int rounds) {
  if (n < 0 || rounds < 0) {
    throw std::invalid_argument("subdivision requires n >= 0 and rounds >= 0");
  }
  SubdividedComplex s;
  s.n_ = n;
  s.rounds_ = rounds;
  {
    std::vector<SubVertex> corners;
    std::map<SubVertex, int> lk;
    std::vector<unsigned> cars;
    std::vector<int> base(static_cast<std::size_t>(n) + 1);
    std::iota(base.begin(), base.end(), 0);
    for (int c = 0; c <= n; ++c) {
      corners.push_back({c, {}});
      lk.emplace(corners.back(), c);
      cars.push_back(1u << c);
    }
    s.layers_.push_back(std::move(corners));
    s.lookup_.push_back(std::move(lk));
    s.carriers_.push_back(std::move(cars));
    s.layer_facets_.push_back({base});
  }
  for (int r = 1; r <= rounds; ++r) {
    std::vector<SubVertex> verts;
    std::map<SubVertex, int> lk;
    std::vector<unsigned> cars;
    std::vector<std::vector<int>> facets;
    const auto& prev = s.layers_[static_cast<std::size_t>(r - 1)];
    const auto& prev_cars = s.carriers_[static_cast<std::size_t>(r - 1)];
    for (const std::vector<int>& f : s.layer_facets_[static_cast<std::size_t>(r - 1)]) {
      for (const OrderedPartition& p : ordered_partitions(f)) {
        std::vector<int> seen;
        std::vector<int> facet;
        for (const std::vector<int>& block : p.blocks) {
          seen.insert(seen.end(), block.begin(), block.end());
          std::sort(seen.begin(), seen.end());
          for (int w : block) {
            SubVertex sv{prev[static_cast<std::size_t>(w)].color, seen};
            auto [it, fresh] = lk.try_emplace(sv, static_cast<int>(verts.size()));
            if (fresh) {
              unsigned cm = 0;
              for (int u : sv.view) cm |= prev_cars[static_cast<std::size_t>(u)];
              verts.push_back(sv);
              cars.push_back(cm);
            }
            facet.push_back(it->second);
          }
        }
        std::sort(facet.begin(), facet.end());
        facets.push_back(std::move(facet));
      }
    }
    s.layers_.push_back(std::move(verts));
    s.lookup_.push_back(std::move(lk));
    s.carriers_.push_back(std::move(cars));
    s.layer_facets_.push_back(std::move(facets));
  }
  {
    const auto& fin = s.layers_.back();
    std::vector<int> counter(static_cast<std::size_t>(n) + 1, 0);
    for (const SubVertex& sv : fin) {
      s.labels_.push_back(counter[static_cast<std::size_t>(sv.color)]++);
    }
    for (int v = 0; v < static_cast<int>(fin.size()); ++v) {
      s.index_of_vertex_.emplace(s.vertex(v), v);
    }
    std::vector<Simplex> facet_simplexes;
    for (const std::vector<int>& f : s.layer_facets_.back()) {
      std::vector<Vertex> vs;
      for (int v : f) vs.push_back(s.vertex(v));
      facet_simplexes.push_back(Simplex(std::move(vs)));
    }
    s.complex_ = Complex::from_facets(n, facet_simplexes);
  }
  return s;
}

ChainMapTable subdivision_chain_map(const SubdividedComplex& s) {
  const int n = s.n();
  Complex disk = build_disk(n);
  ChainMapTable m(n, "disk", "subdivision");
  const Complex& target = s.complex();
  for (int q = 0; q <= n; ++q) {
    for (const Simplex& face : disk.simplexes(q)) {
      if (q == 0) {
        Chain img(0);
        img.add(Simplex({s.vertex(s.corner_index(face.vertex(0).color))}), 1);
        m.set_image(face, std::move(img));
        continue;
      }
      unsigned amask = 0;
      for (int c : face.colors()) amask |= 1u << c;
      std::vector<Simplex> cells;
      for (const Simplex& t : target.simplexes(q)) {
        bool inside = true;
        for (const Vertex& w : t.vertices()) {
          inside = inside && (s.carrier_mask(s.index_of(w)) & ~amask) == 0;
        }
        if (inside) cells.push_back(t);
      }
      Chain img(q);
      for (const auto& [t, e] : coherent_orientation(cells)) img.add(t, e);
      Chain from_face(q);
      from_face.add(face, 1);
      const Chain want = apply(m, boundary(from_face));
      if (boundary(img) != want) {
        img = -img;
        if (boundary(img) != want) {
          throw std::runtime_error("subdivision images do not close under the boundary");
        }
      }
      m.set_image(face, std::move(img));
    }
  }
  return m;
}

namespace {

// Ascending subsets of 0..n with exactly k+1 bits, then the rank map.
std::vector<unsigned> masks_of_size(int n, int size) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
    if (std::popcount(mask) == size) out.push_back(mask);
  }
  return out;
}

std::vector<int> rank_map(int n, unsigned from, unsigned to) {
  std::vector<int> rho(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> src, dst;
  for (int c = 0; c <= n; ++c) {
    if (from & (1u << c)) src.push_back(c);
    if (to & (1u << c)) dst.push_back(c);
  }
  for (std::size_t i = 0; i < src.size(); ++i) rho[static_cast<std::size_t>(src[i])] = dst[i];
  return rho;
}

std::string mask_to_string(int n, unsigned mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int c = 0; c <= n; ++c) {
    if (mask & (1u << c)) {
      if (!first) os << ",";
      os << c;
      first = false;
    }
  }
  os << "}";
  return os.str();
}

}  // namespace

SymmetryReport verify_symmetric_coloring(const SubdividedComplex& s,
                                         const BinaryColoring& b) {
  if (static_cast<int>(b.size()) != s.vertex_count()) {
    throw std::invalid_argument("coloring size does not match the vertex count");
  }
  const int n = s.n();
  for (int size = 1; size <= n; ++size) {
    const std::vector<unsigned> faces = masks_of_size(n, size);
    for (unsigned from : faces) {
      for (unsigned to : faces) {
        if (from >= to) continue;
        const std::vector<int> rho = rank_map(n, from, to);
        for (int v = 0; v < s.vertex_count(); ++v) {
          if ((s.carrier_mask(v) & ~from) != 0) continue;
          const int u = s.relabel_vertex(v, rho);
          if (b[static_cast<std::size_t>(v)] != b[static_cast<std::size_t>(u)]) {
            std::ostringstream os;
            os << "faces " << mask_to_string(n, from) << " and " << mask_to_string(n, to)
               << ": vertex " << v << " (id " << s.vertex_color(v) << ") has bit "
               << b[static_cast<std::size_t>(v)] << " but its rank image " << u
               << " has bit " << b[static_cast<std::size_t>(u)];
            return {false, os.str()};
          }
        }
      }
    }
  }
  return {true, ""};
}

std::vector<std::vector<int>> symmetry_classes(const SubdividedComplex& s) {
  const int n = s.n();
  const int count = s.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int c) {
    a = find(a);
    c = find(c);
    if (a != c) parent[static_cast<std::size_t>(std::max(a, c))] = std::min(a, c);
  };
  for (int size = 1; size <= n; ++size) {
    const std::vector<unsigned> faces = masks_of_size(n, size);
    for (unsigned from : faces) {
      for (unsigned to : faces) {
        if (from >= to) continue;
        const std::vector<int> rho = rank_map(n, from, to);
        for (int v = 0; v < count; ++v) {
          if ((s.carrier_mask(v) & ~from) != 0) continue;
          unite(v, s.relabel_vertex(v, rho));
        }
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < count; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Int symmetric_coloring_count(const SubdividedComplex& s) {
  return Int(1) << symmetry_classes(s).size();
}

std::vector<BinaryColoring> enumerate_symmetric_colorings(const SubdividedComplex& s,
                                                          std::uint64_t budget) {
  const std::vector<std::vector<int>> classes = symmetry_classes(s);
  if (classes.size() >= 63 || (std::uint64_t{1} << classes.size()) > budget) {
    throw BudgetExceeded("2^" + std::to_string(classes.size()) +
                         " symmetric colorings exceed the enumeration budget of " +
                         std::to_string(budget));
  }
  std::vector<BinaryColoring> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << classes.size()); ++mask) {
    BinaryColoring b(static_cast<std::size_t>(s.vertex_count()), 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const int bit = (mask >> i) & 1u ? 1 : 0;
      for (int v : classes[i]) b[static_cast<std::size_t>(v)] = bit;
    }
    out.push_back(std::move(b));
  }
  return out;
}

BinaryColoring random_symmetric_coloring(const SubdividedComplex& s, std::mt19937& rng) {
  BinaryColoring b(static_cast<std::size_t>(s.vertex_count()), 0);
  for (const std::vector<int>& cls : symmetry_classes(s)) {
    const int bit = rng() & 1u ? 1 : 0;
    for (int v : cls) b[static_cast<std::size_t>(v)] = bit;
  }
  return b;
}

BinaryColoring permute_coloring(const SubdividedComplex& s, const GroupElement& g,
                                const BinaryColoring& b) {
  if (static_cast<int>(b.size()) != s.vertex_count()) {
    throw std::invalid_argument("coloring size does not match the vertex count");
  }
  if (g.degree() != s.n()) {
    throw std::invalid_argument("permutation acts on a different id set");
  }
  std::vector<int> rho;
  for (int c = 0; c <= s.n(); ++c) rho.push_back(g(c));
  BinaryColoring out(b.size(), 0);
  for (int v = 0; v < s.vertex_count(); ++v) {
    out[static_cast<std::size_t>(s.relabel_vertex(v, rho))] = b[static_cast<std::size_t>(v)];
  }
  return out;
}

long long monochromatic_count(const SubdividedComplex& s, const BinaryColoring& b) {
  if (static_cast<int>(b.size()) != s.vertex_count()) {
    throw std::invalid_argument("coloring size does not match the vertex count");
  }
  long long count = 0;
  for (const std::vector<int>& f : s.facets()) {
    bool mono = true;
    for (int v : f) {
      mono = mono && b[static_cast<std::size_t>(v)] == b[static_cast<std::size_t>(f[0])];
    }
    count += mono ? 1 : 0;
  }
  return count;
}

WsbReport wsb_decision_check(const SubdividedComplex& s, const BinaryColoring& b) {
  WsbReport r;
  r.symmetry = verify_symmetric_coloring(s, b);
  r.mono_count = monochromatic_count(s, b);
  r.decision = r.symmetry.pass && r.mono_count == 0;
  return r;
}

ChainMapTable coloring_chain_map(const SubdividedComplex& s, const BinaryColoring& b) {
  if (static_cast<int>(b.size()) != s.vertex_count()) {
    throw std::invalid_argument("coloring size does not match the vertex count");
  }
  ChainMapTable sub = subdivision_chain_map(s);
  Complex out = build_output_complex(s.n());
  std::map<Vertex, Vertex> f;
  for (int v = 0; v < s.vertex_count(); ++v) {
    f[s.vertex(v)] = Vertex{s.vertex_color(v), b[static_cast<std::size_t>(v)]};
  }
  ChainMapTable induced =
      induced_from_simplicial(f, s.complex(), out, "subdivision", "output");
  return compose(induced, sub);
}

Int boundary_image_winding(const SubdividedComplex& s, const BinaryColoring& b) {
  if (s.n() < 1) throw std::invalid_argument("winding requires n >= 1");
  ChainMapTable m = coloring_chain_map(s, b);
  std::vector<Vertex> vs;
  for (int c = 0; c <= s.n(); ++c) vs.push_back({c, 0});
  Chain top(s.n());
  top.add(Simplex(std::move(vs)), 1);
  return WindingOracle(s.n()).winding(apply(m, boundary(top)));
}

}  // namespace equichain
