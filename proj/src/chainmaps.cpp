#include "equichain/chainmaps.hpp"

#include <algorithm>
#include <stdexcept>

namespace equichain {

std::string property_name(MapProperty p) {
  switch (p) {
    case MapProperty::chain_map: return "chain_map";
    case MapProperty::color_preserving: return "color_preserving";
    case MapProperty::equivariant: return "equivariant";
    case MapProperty::augmented: return "augmented";
  }
  return "?";
}

ChainMapTable::ChainMapTable(int n, std::string source, std::string target)
    : n_(n), source_(std::move(source)), target_(std::move(target)) {
  if (n < 0) throw std::invalid_argument("chain map table requires n >= 0");
}

void ChainMapTable::set_image(const Simplex& s, Chain image) {
  if (s.empty()) throw std::invalid_argument("cannot map the empty simplex");
  if (image.q() != s.dim()) {
    throw std::invalid_argument("image degree must match source dimension");
  }
  entries_[s.dim()].insert_or_assign(s, std::move(image));
}

bool ChainMapTable::has(const Simplex& s) const {
  auto it = entries_.find(s.dim());
  return it != entries_.end() && it->second.count(s) > 0;
}

const Chain& ChainMapTable::image(const Simplex& s) const {
  auto it = entries_.find(s.dim());
  if (it != entries_.end()) {
    auto jt = it->second.find(s);
    if (jt != it->second.end()) return jt->second;
  }
  throw std::invalid_argument("unmapped simplex " + s.to_string());
}

int ChainMapTable::max_dim() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first;
}

const std::map<Simplex, Chain>& ChainMapTable::entries(int q) const {
  static const std::map<Simplex, Chain> kEmpty;
  auto it = entries_.find(q);
  return it == entries_.end() ? kEmpty : it->second;
}

std::size_t ChainMapTable::entry_count() const {
  std::size_t total = 0;
  for (const auto& [q, t] : entries_) total += t.size();
  return total;
}

Chain apply(const ChainMapTable& m, const Chain& c) {
  Chain out(c.q());
  for (const auto& [s, x] : c.terms()) out += x * m.image(s);
  return out;
}

Chain apply(const ChainMapTable& m, const OrientedSimplex& s) {
  return s.sign < 0 ? -m.image(s.simplex) : m.image(s.simplex);
}

namespace {

VerificationReport fail_report(MapProperty p, std::string detail) {
  return {p, false, std::move(detail)};
}

VerificationReport finish(ChainMapTable& m, VerificationReport r) {
  m.set_flag(r.property, r.pass ? CheckState::pass : CheckState::fail);
  return r;
}

}  // namespace

VerificationReport verify_chain_map(ChainMapTable& m, const Complex& source,
                                    const Complex& target) {
  const MapProperty prop = MapProperty::chain_map;
  // Coverage: exactly the source simplexes in every mapped dimension.
  for (int q = 0; q <= m.max_dim(); ++q) {
    const auto& basis = source.simplexes(q);
    const auto& entries = m.entries(q);
    if (entries.size() != basis.size()) {
      return finish(m, fail_report(prop, "dimension " + std::to_string(q) +
                                             " maps " + std::to_string(entries.size()) +
                                             " simplexes, source has " +
                                             std::to_string(basis.size())));
    }
    for (const Simplex& s : basis) {
      if (!entries.count(s)) {
        return finish(m, fail_report(prop, "source simplex unmapped: " + s.to_string()));
      }
    }
  }
  // Image support must live in the target complex.
  for (int q = 0; q <= m.max_dim(); ++q) {
    for (const auto& [s, img] : m.entries(q)) {
      for (const auto& [t, x] : img.terms()) {
        if (!target.contains(t)) {
          return finish(m, fail_report(prop, "image of " + s.to_string() +
                                                 " leaves the target: " + t.to_string()));
        }
      }
    }
  }
  // Degree 0: some integer lambda with aug(m(v)) == lambda everywhere (the
  // unique degree -1 extension).
  bool have_lambda = false;
  Int lambda = 0;
  for (const auto& [v, img] : m.entries(0)) {
    Int aug = boundary(img).augmentation_value();
    if (!have_lambda) {
      lambda = aug;
      have_lambda = true;
    } else if (aug != lambda) {
      return finish(m, fail_report(prop, "augmentation of image of " + v.to_string() +
                                             " is " + aug.str() + ", expected " +
                                             lambda.str()));
    }
  }
  for (int q = 1; q <= m.max_dim(); ++q) {
    for (const auto& [s, img] : m.entries(q)) {
      Chain lhs = boundary(img);
      Chain rhs(q - 1);
      int sign = 1;
      for (int j = 0; j <= s.dim(); ++j) {
        rhs += Int(sign) * m.image(s.face_without(j));
        sign = -sign;
      }
      if (lhs != rhs) {
        return finish(m, fail_report(prop, "del(m(" + s.to_string() + ")) = " +
                                               lhs.to_string() + " but m(del) = " +
                                               rhs.to_string()));
      }
    }
  }
  return finish(m, {prop, true, ""});
}

VerificationReport verify_color_preserving(ChainMapTable& m) {
  const MapProperty prop = MapProperty::color_preserving;
  for (int q = 0; q <= m.max_dim(); ++q) {
    for (const auto& [s, img] : m.entries(q)) {
      const std::vector<int> want = s.colors();
      for (const auto& [t, x] : img.terms()) {
        if (t.colors() != want) {
          return finish(m, fail_report(prop, "image of " + s.to_string() +
                                                 " touches colors of " + t.to_string()));
        }
      }
    }
  }
  return finish(m, {prop, true, ""});
}

VerificationReport verify_equivariant(ChainMapTable& m, bool use_full_group) {
  const MapProperty prop = MapProperty::equivariant;
  const std::vector<GroupElement> elements =
      use_full_group ? full_group(m.n()) : generators(m.n());
  for (const GroupElement& g : elements) {
    for (int q = 0; q <= m.max_dim(); ++q) {
      for (const auto& [s, img] : m.entries(q)) {
        OrientedSimplex gs = act_simplex(g, s);
        if (!m.has(gs.simplex)) {
          return finish(m, fail_report(prop, "orbit leaves the table: " +
                                                 g.to_string() + " moves " + s.to_string() +
                                                 " to unmapped " + gs.simplex.to_string()));
        }
        Chain lhs = apply(m, gs);
        Chain rhs = act_chain(g, img);
        if (lhs != rhs) {
          return finish(m, fail_report(prop, "g = " + g.to_string() + ", s = " +
                                                 s.to_string() + ": m(g.s) = " +
                                                 lhs.to_string() + " but g.m(s) = " +
                                                 rhs.to_string()));
        }
      }
    }
  }
  return finish(m, {prop, true, ""});
}

VerificationReport verify_augmented(ChainMapTable& m) {
  const MapProperty prop = MapProperty::augmented;
  if (m.entries(0).empty()) {
    return finish(m, fail_report(prop, "no degree-0 entries to check"));
  }
  for (const auto& [v, img] : m.entries(0)) {
    Int aug = boundary(img).augmentation_value();
    if (aug != 1) {
      return finish(m, fail_report(prop, "augmentation of image of " + v.to_string() +
                                             " is " + aug.str()));
    }
  }
  return finish(m, {prop, true, ""});
}

std::vector<VerificationReport> verify_all(ChainMapTable& m, const Complex& source,
                                           const Complex& target, bool use_full_group) {
  std::vector<VerificationReport> out;
  out.push_back(verify_chain_map(m, source, target));
  out.push_back(verify_color_preserving(m));
  out.push_back(verify_equivariant(m, use_full_group));
  out.push_back(verify_augmented(m));
  return out;
}

ChainMapTable z_map(int n) {
  if (n < 1) throw std::invalid_argument("z map requires n >= 1");
  Complex disk = build_disk(n);
  ChainMapTable m(n, "disk", "annulus");
  for (int q = 0; q <= n - 1; ++q) {
    for (const Simplex& s : disk.simplexes(q)) {
      std::vector<Vertex> vs;
      for (const Vertex& v : s.vertices()) vs.push_back({v.color, 0});
      Chain img(q);
      img.add(Simplex(std::move(vs)), Int(1));
      m.set_image(s, std::move(img));
    }
  }
  return m;
}

ChainMapTable induced_from_simplicial(const std::map<Vertex, Vertex>& f,
                                      const Complex& source, const Complex& target,
                                      const std::string& source_name,
                                      const std::string& target_name) {
  ChainMapTable m(target.n(), source_name, target_name);
  for (int q = 0; q <= source.dim(); ++q) {
    for (const Simplex& s : source.simplexes(q)) {
      std::vector<Vertex> image_seq;
      for (const Vertex& v : s.vertices()) {
        auto it = f.find(v);
        if (it == f.end()) {
          throw std::invalid_argument("vertex map undefined on (" + std::to_string(v.color) +
                                      "," + std::to_string(v.label) + ")" +
                                      " of " + s.to_string());
        }
        image_seq.push_back(it->second);
      }
      // Exact duplicate vertices collapse the simplex to the zero chain.
      std::vector<Vertex> sorted = image_seq;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        m.set_image(s, Chain(q));
        continue;
      }
      OrientedSimplex os;
      try {
        os = orient(image_seq);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("vertex map is not simplicial on " +
                                    s.to_string() +
                                    ": image has repeated colors with distinct labels");
      }
      if (!target.contains(os.simplex)) {
        throw std::invalid_argument("vertex map is not simplicial: image " +
                                    os.simplex.to_string() + " of " + s.to_string() +
                                    " is not in the target");
      }
      Chain img(q);
      img.add(os, Int(1));
      m.set_image(s, std::move(img));
    }
  }
  return m;
}

namespace {

CheckState conjoin(CheckState a, CheckState b) {
  if (a == CheckState::fail || b == CheckState::fail) return CheckState::fail;
  if (a == CheckState::unknown || b == CheckState::unknown) return CheckState::unknown;
  return CheckState::pass;
}

}  // namespace

ChainMapTable compose(const ChainMapTable& second, const ChainMapTable& first) {
  if (second.n() != first.n()) {
    throw std::invalid_argument("composition requires matching ambient n");
  }
  ChainMapTable m(first.n(), first.source(), second.target());
  for (int q = 0; q <= first.max_dim(); ++q) {
    for (const auto& [s, img] : first.entries(q)) {
      m.set_image(s, apply(second, img));
    }
  }
  for (MapProperty p : {MapProperty::chain_map, MapProperty::color_preserving,
                        MapProperty::equivariant, MapProperty::augmented}) {
    m.set_flag(p, conjoin(first.flag(p), second.flag(p)));
  }
  return m;
}

}  // namespace equichain
