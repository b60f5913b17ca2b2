#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "preop/errors.hpp"

namespace preop {

/// Planar rooted tree over a generator alphabet.  The bare Leaf is the unit
/// of the free model; a Node carries a generator name and exactly
/// arity-many ordered children.  A tree with n leaves represents a
/// degree-n operation.
///
/// Trees carry the canonical total order of the free model: preorder
/// traversal, Leaf before any Node, generator names lexicographic.
class Tree {
 public:
  Tree() = default;  // the Leaf

  static Tree leaf() { return Tree(); }

  static Tree node(std::string gen, std::vector<Tree> children) {
    if (gen.empty()) throw ConfigError("generator name must be nonempty");
    Tree t;
    t.gen_ = std::move(gen);
    t.children_ = std::move(children);
    t.leaves_ = 0;
    for (const Tree& c : t.children_) t.leaves_ += c.leaves_;
    return t;
  }

  bool is_leaf() const { return gen_.empty(); }
  const std::string& gen() const { return gen_; }
  const std::vector<Tree>& children() const { return children_; }
  int leaves() const { return leaves_; }

  std::strong_ordering operator<=>(const Tree& other) const {
    if (is_leaf() || other.is_leaf()) {
      if (is_leaf() && other.is_leaf()) return std::strong_ordering::equal;
      return is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = gen_ <=> other.gen_; c != 0) return c;
    if (auto c = children_.size() <=> other.children_.size(); c != 0) return c;
    for (std::size_t k = 0; k < children_.size(); ++k)
      if (auto c = children_[k] <=> other.children_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  bool operator==(const Tree& other) const { return (*this <=> other) == 0; }

  /// Compact preorder rendering, e.g. "a(*,b(*,*))" with "*" for a leaf.
  std::string str() const {
    if (is_leaf()) return "*";
    std::string out = gen_ + "(";
    for (std::size_t k = 0; k < children_.size(); ++k) {
      if (k) out += ",";
      out += children_[k].str();
    }
    return out + ")";
  }

 private:
  std::string gen_;            // empty <=> leaf
  std::vector<Tree> children_;
  int leaves_ = 1;
};

/// Replace leaf number `slot` of f (counted left to right from 0) by g.
/// Unsigned planar substitution; the free model's compose adds the twist.
inline Tree graft(const Tree& f, int slot, const Tree& g) {
  if (slot < 0 || slot >= f.leaves())
    throw RangeError("graft: leaf index " + std::to_string(slot) + " out of range for a tree with " +
                     std::to_string(f.leaves()) + " leaves");
  if (f.is_leaf()) return g;
  std::vector<Tree> children;
  children.reserve(f.children().size());
  int offset = slot;
  for (const Tree& c : f.children()) {
    if (offset >= 0 && offset < c.leaves())
      children.push_back(graft(c, offset, g));
    else
      children.push_back(c);
    offset -= c.leaves();
  }
  return Tree::node(f.gen(), std::move(children));
}

}  // namespace preop
