#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "preop/errors.hpp"
#include "preop/ring.hpp"
#include "preop/tree.hpp"

namespace preop {

struct Generator {
  std::string name;
  int arity = 0;
};

/// Ordered list of named generators with arities >= 0.  Names are unique.
class GeneratorAlphabet {
 public:
  GeneratorAlphabet() = default;

  explicit GeneratorAlphabet(std::vector<Generator> gens) {
    for (auto& g : gens) add(g.name, g.arity);
  }

  void add(const std::string& name, int arity) {
    if (name.empty()) throw ConfigError("generator name must be nonempty");
    if (arity < 0) throw ConfigError("generator arity must be >= 0");
    if (contains(name)) throw ConfigError("duplicate generator '" + name + "'");
    gens_.push_back({name, arity});
  }

  bool contains(const std::string& name) const {
    for (const auto& g : gens_)
      if (g.name == name) return true;
    return false;
  }

  int arity_of(const std::string& name) const {
    for (const auto& g : gens_)
      if (g.name == name) return g.arity;
    throw LookupError("unknown generator '" + name + "'");
  }

  const std::vector<Generator>& generators() const { return gens_; }

 private:
  std::vector<Generator> gens_;
};

/// K-linear combination of planar trees sharing one leaf count (the
/// degree).  Terms are kept canonical at all times: keyed by the tree
/// order, coefficients canonical and nonzero.
///
/// An element with no terms is zero.  Zero elements are degree-flexible in
/// arithmetic and comparisons, which is how empty-range sums with clamped
/// degrees stay composable.
class FreeElement {
 public:
  FreeElement(int degree, Ring ring) : degree_(degree), ring_(std::move(ring)) {
    if (degree < 0) throw RangeError("element degree must be >= 0");
  }

  static FreeElement single(const Tree& t, const Ring& ring, const Int& coeff = Int(1)) {
    FreeElement e(t.leaves(), ring);
    e.accumulate(t, coeff);
    return e;
  }

  int degree() const { return degree_; }
  const Ring& ring() const { return ring_; }
  const std::map<Tree, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Add coeff * t into this element, keeping the representation canonical.
  void accumulate(const Tree& t, const Int& coeff) {
    if (t.leaves() != degree_)
      throw ConfigError("tree with " + std::to_string(t.leaves()) + " leaves in a degree-" +
                        std::to_string(degree_) + " element");
    Int c = ring_.canon(coeff);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  FreeElement operator+(const FreeElement& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    check_compatible(other);
    FreeElement out = *this;
    for (const auto& [t, c] : other.terms_) out.accumulate(t, c);
    return out;
  }

  FreeElement operator-() const {
    FreeElement out(degree_, ring_);
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, ring_.neg(c));
    return out;
  }

  FreeElement operator-(const FreeElement& other) const { return *this + (-other); }

  FreeElement scaled(const Int& s) const {
    FreeElement out(degree_, ring_);
    for (const auto& [t, c] : terms_) out.accumulate(t, ring_.mul(c, s));
    return out;
  }

  bool operator==(const FreeElement& other) const {
    if (is_zero() && other.is_zero()) return true;
    return degree_ == other.degree_ && ring_ == other.ring_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const FreeElement& other) const {
    if (!(ring_ == other.ring_)) throw ConfigError("ring mismatch in element arithmetic");
    if (degree_ != other.degree_)
      throw ConfigError("degree mismatch in element arithmetic: " + std::to_string(degree_) + " vs " +
                        std::to_string(other.degree_));
  }

  int degree_;
  Ring ring_;
  std::map<Tree, Int> terms_;
};

/// Rebuild e in canonical form.  Elements are canonical by construction, so
/// this is mostly a checkpoint: idempotent, and the place where duplicate
/// or zero terms from external input get folded.
inline FreeElement normalize(const FreeElement& e) {
  FreeElement out(e.degree(), e.ring());
  for (const auto& [t, c] : e.terms()) out.accumulate(t, c);
  return out;
}

/// The free signed pre-operad on an alphabet: partial composition is
/// planar grafting twisted by (-1)^{i|g|}.  The identity suite re-derives
/// that this twist satisfies the signed composition relations.
class FreeModel {
 public:
  using Element = FreeElement;

  FreeModel(GeneratorAlphabet alphabet, Ring ring)
      : alphabet_(std::move(alphabet)), ring_(std::move(ring)) {}

  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  const Ring& ring() const { return ring_; }

  Element unit() const { return FreeElement::single(Tree::leaf(), ring_); }

  Element zero(int degree) const { return FreeElement(degree, ring_); }

  /// The coefficient-1 element on the tree with one node labelled `name`
  /// and bare leaves below it; degree = arity(name).
  Element generator(const std::string& name) const {
    const int arity = alphabet_.arity_of(name);
    std::vector<Tree> leaves(static_cast<std::size_t>(arity), Tree::leaf());
    return FreeElement::single(Tree::node(name, std::move(leaves)), ring_);
  }

  Element compose(const Element& f, int i, const Element& g) const {
    if (!(f.ring() == g.ring()) || !(f.ring() == ring_))
      throw ConfigError("ring mismatch in compose");
    if (f.degree() < 1) throw RangeError("compose: outer element must have degree >= 1");
    if (i < 0 || i > ddeg(f.degree()))
      throw RangeError("compose: slot " + std::to_string(i) + " out of range for degree " +
                       std::to_string(f.degree()));
    const Int sign = ring_.koszul_sign(i, ddeg(g.degree()));
    Element out(f.degree() + g.degree() - 1, ring_);
    for (const auto& [tf, cf] : f.terms())
      for (const auto& [tg, cg] : g.terms())
        out.accumulate(graft(tf, i, tg), ring_.mul(sign, ring_.mul(cf, cg)));
    return out;
  }

  int degree(const Element& e) const { return e.degree(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element negate(const Element& a) const { return -a; }
  Element scale(const Int& s, const Element& a) const { return a.scaled(s); }

 private:
  GeneratorAlphabet alphabet_;
  Ring ring_;
};

}  // namespace preop
