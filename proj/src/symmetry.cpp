#include "equichain/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace equichain {

GroupElement GroupElement::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) im[static_cast<std::size_t>(i)] = i;
  return GroupElement(std::move(im));
}

GroupElement::GroupElement(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(x)]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[static_cast<size_t>(x)] = true;
  }
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (degree() != other.degree()) {
    throw std::invalid_argument("permutation degree mismatch");
  }
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    im[i] = images_[static_cast<std::size_t>(other.images_[i])];
  }
  return GroupElement(std::move(im));
}

GroupElement GroupElement::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return GroupElement(std::move(im));
}

int GroupElement::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[j] < images_[i]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string GroupElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

GroupElement pi_cycle(int n, int m, int i) {
  if (i < 0 || m < i || n < m) {
    throw std::invalid_argument("pi_cycle requires 0 <= i <= m <= n");
  }
  std::vector<int> im(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    int x = j;
    if (j >= i && j < m) x = j + 1;
    if (j == m) x = i;
    im[static_cast<std::size_t>(j)] = x;
  }
  return GroupElement(std::move(im));
}

std::vector<GroupElement> generators(int n) {
  if (n < 1) return {};
  std::vector<GroupElement> out;
  for (int i = 0; i < n; ++i) out.push_back(pi_cycle(n, i + 1, i));
  return out;
}

std::vector<GroupElement> full_group(int n) {
  std::set<GroupElement> seen;
  std::deque<GroupElement> queue;
  GroupElement e = GroupElement::identity(n);
  seen.insert(e);
  queue.push_back(e);
  const std::vector<GroupElement> gens = generators(n);
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    for (const GroupElement& h : gens) {
      GroupElement next = h * g;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

OrientedSimplex act_simplex(const GroupElement& g, const Simplex& s) {
  std::vector<Vertex> seq;
  seq.reserve(s.vertices().size());
  for (const Vertex& v : s.vertices()) seq.push_back({g(v.color), v.label});
  return orient(seq);
}

Chain act_chain(const GroupElement& g, const Chain& c) {
  Chain out(c.q());
  for (const auto& [s, x] : c.terms()) out.add(act_simplex(g, s), x);
  return out;
}

std::set<Simplex> simplex_orbit(const Simplex& s, int n) {
  std::set<Simplex> seen{s};
  std::deque<Simplex> queue{s};
  const std::vector<GroupElement> gens = generators(n);
  while (!queue.empty()) {
    Simplex cur = queue.front();
    queue.pop_front();
    for (const GroupElement& g : gens) {
      Simplex next = act_simplex(g, cur).simplex;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

std::set<Chain> chain_orbit(const Chain& c, int n) {
  std::set<Chain> seen{c};
  std::deque<Chain> queue{c};
  const std::vector<GroupElement> gens = generators(n);
  while (!queue.empty()) {
    Chain cur = queue.front();
    queue.pop_front();
    for (const GroupElement& g : gens) {
      Chain next = act_chain(g, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace equichain
