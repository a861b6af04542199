#include "equichain/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace equichain {

Simplex::Simplex(std::vector<Vertex> verts) : verts_(std::move(verts)) {
  std::sort(verts_.begin(), verts_.end());
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    if (verts_[i - 1].color == verts_[i].color) {
      throw std::invalid_argument("improperly colored simplex: repeated color " +
                                  std::to_string(verts_[i].color));
    }
  }
}

Simplex Simplex::face_without(int j) const {
  if (j < 0 || j > dim()) {
    throw std::invalid_argument("face index out of range");
  }
  std::vector<Vertex> vs;
  vs.reserve(verts_.size() - 1);
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (static_cast<int>(i) != j) vs.push_back(verts_[i]);
  }
  Simplex f;
  f.verts_ = std::move(vs);  // already canonical
  return f;
}

std::vector<int> Simplex::colors() const {
  std::vector<int> cs;
  cs.reserve(verts_.size());
  for (const Vertex& v : verts_) cs.push_back(v.color);
  return cs;
}

bool Simplex::has_color(int c) const {
  for (const Vertex& v : verts_) {
    if (v.color == c) return true;
  }
  return false;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.verts_.begin(), other.verts_.end(),
                       verts_.begin(), verts_.end());
}

std::string Simplex::to_string() const {
  if (verts_.empty()) return "<>";
  std::string out = "<";
  for (const Vertex& v : verts_) {
    out += "(" + std::to_string(v.color) + "," + std::to_string(v.label) + ")";
  }
  out += ">";
  return out;
}

Complex Complex::from_facets(int n, const std::vector<Simplex>& facets) {
  if (n < 0) throw std::invalid_argument("ambient n must be >= 0");
  Complex k;
  k.n_ = n;
  for (const Simplex& f : facets) {
    if (f.empty()) throw std::invalid_argument("empty simplex cannot be a facet");
    for (const Vertex& v : f.vertices()) {
      if (v.color < 0 || v.color > n) {
        throw std::invalid_argument("vertex color " + std::to_string(v.color) +
                                    " outside 0.." + std::to_string(n));
      }
    }
    // Close under faces: every nonempty vertex subset is a member.
    const auto& vs = f.vertices();
    const std::size_t m = vs.size();
    for (std::size_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (1u << i)) sub.push_back(vs[i]);
      }
      k.members_.insert(Simplex(std::move(sub)));
    }
  }
  for (const Simplex& s : k.members_) k.dim_ = std::max(k.dim_, s.dim());
  k.by_dim_.assign(static_cast<std::size_t>(k.dim_ + 1), {});
  for (const Simplex& s : k.members_) {
    k.by_dim_[static_cast<std::size_t>(s.dim())].push_back(s);
  }
  // std::set iteration is already sorted, so each bucket is canonical.
  return k;
}

const std::vector<Simplex>& Complex::simplexes(int q) const {
  static const std::vector<Simplex> kEmpty;
  if (q < 0 || q > dim_) return kEmpty;
  return by_dim_[static_cast<std::size_t>(q)];
}

std::size_t Complex::face_count() const { return members_.size(); }

std::vector<Simplex> Complex::facets() const {
  std::vector<Simplex> out;
  for (int q = 0; q <= dim_; ++q) {
    for (const Simplex& s : simplexes(q)) {
      bool maximal = true;
      for (const Simplex& t : simplexes(q + 1)) {
        if (s.is_face_of(t)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

Complex build_disk(int n) {
  if (n < 0) throw std::invalid_argument("disk requires n >= 0");
  std::vector<Vertex> vs;
  for (int i = 0; i <= n; ++i) vs.push_back({i, 0});
  return Complex::from_facets(n, {Simplex(std::move(vs))});
}

namespace {

// All binary labellings of the given colors, optionally without the two
// monochromatic ones.
std::vector<Simplex> binary_facets(const std::vector<int>& colors,
                                   bool drop_monochromatic) {
  const std::size_t m = colors.size();
  std::vector<Simplex> out;
  for (std::size_t mask = 0; mask < (1u << m); ++mask) {
    if (drop_monochromatic && (mask == 0 || mask == (1u << m) - 1)) continue;
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < m; ++i) {
      vs.push_back({colors[i], (mask >> i) & 1u ? 1 : 0});
    }
    out.push_back(Simplex(std::move(vs)));
  }
  return out;
}

std::vector<int> all_colors(int n) {
  std::vector<int> cs;
  for (int i = 0; i <= n; ++i) cs.push_back(i);
  return cs;
}

}  // namespace

Complex build_annulus(int n) {
  if (n < 1) {
    throw std::invalid_argument(
        "annulus requires n >= 1: with a single color, removing both "
        "monochromatic labellings removes every vertex");
  }
  return Complex::from_facets(n, binary_facets(all_colors(n), true));
}

Complex build_output_complex(int n) {
  if (n < 0) throw std::invalid_argument("output complex requires n >= 0");
  return Complex::from_facets(n, binary_facets(all_colors(n), false));
}

Complex build_sphere(int n, const std::vector<int>& colors) {
  if (colors.empty()) throw std::invalid_argument("sphere needs at least one color");
  std::vector<int> cs = colors;
  std::sort(cs.begin(), cs.end());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] < 0 || cs[i] > n) {
      throw std::invalid_argument("sphere color outside ambient range");
    }
    if (i > 0 && cs[i] == cs[i - 1]) {
      throw std::invalid_argument("sphere colors must be distinct");
    }
  }
  const int q = static_cast<int>(cs.size()) - 1;
  return Complex::from_facets(n, binary_facets(cs, q == n));
}

Complex skeleton(const Complex& k, int i) {
  if (i < 0) throw std::invalid_argument("skeleton dimension must be >= 0");
  std::vector<Simplex> fs;
  const int top = std::min(i, k.dim());
  for (int q = 0; q <= top; ++q) {
    const auto& sq = k.simplexes(q);
    fs.insert(fs.end(), sq.begin(), sq.end());
  }
  return Complex::from_facets(k.n(), fs);
}

Complex boundary_complex(const Simplex& s) {
  if (s.dim() < 1) {
    throw std::invalid_argument("boundary complex requires dimension >= 1");
  }
  int n = 0;
  for (const Vertex& v : s.vertices()) n = std::max(n, v.color);
  std::vector<Simplex> fs;
  for (int j = 0; j <= s.dim(); ++j) fs.push_back(s.face_without(j));
  return Complex::from_facets(n, fs);
}

}  // namespace equichain
