#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "preop/errors.hpp"
#include "preop/ring.hpp"
#include "preop/rng.hpp"

namespace preop {

/// Multilinear map A^(tensor n) -> A on A = K^d, stored as a dense
/// coefficient tensor of d^(n+1) exact scalars.
///
/// Flat layout (frozen, also the file format):
///   index = out * d^n + sum_k in_k * d^(n-1-k)
/// i.e. the output index varies slowest, then input 0, ..., input n-1.
class EndoElement {
 public:
  EndoElement(int degree, int dim, Ring ring)
      : degree_(degree), dim_(dim), ring_(std::move(ring)) {
    if (degree < 0) throw RangeError("element degree must be >= 0");
    if (dim < 1) throw ConfigError("dimension must be >= 1");
    entries_.assign(entry_count(degree, dim), Int(0));
  }

  static std::size_t entry_count(int degree, int dim) {
    std::size_t n = 1;
    for (int k = 0; k <= degree; ++k) n *= static_cast<std::size_t>(dim);
    return n;
  }

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const Ring& ring() const { return ring_; }
  const std::vector<Int>& entries() const { return entries_; }

  const Int& entry(std::size_t flat) const { return entries_.at(flat); }
  void set_entry(std::size_t flat, const Int& v) { entries_.at(flat) = ring_.canon(v); }
  void add_entry(std::size_t flat, const Int& v) {
    entries_.at(flat) = ring_.add(entries_.at(flat), v);
  }

  /// Flat index of (out; in_0, ..., in_{n-1}).
  std::size_t flat_index(int out, const std::vector<int>& in) const {
    std::size_t idx = static_cast<std::size_t>(out);
    for (int k = 0; k < degree_; ++k) idx = idx * dim_ + static_cast<std::size_t>(in[k]);
    return idx;
  }

  bool is_zero() const {
    for (const Int& v : entries_)
      if (v != 0) return false;
    return true;
  }

  EndoElement operator+(const EndoElement& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    check_compatible(other);
    EndoElement out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      out.entries_[k] = ring_.add(out.entries_[k], other.entries_[k]);
    return out;
  }

  EndoElement operator-() const {
    EndoElement out = *this;
    for (Int& v : out.entries_) v = ring_.neg(v);
    return out;
  }

  EndoElement operator-(const EndoElement& other) const { return *this + (-other); }

  EndoElement scaled(const Int& s) const {
    EndoElement out = *this;
    for (Int& v : out.entries_) v = ring_.mul(v, s);
    return out;
  }

  bool operator==(const EndoElement& other) const {
    if (is_zero() && other.is_zero()) return dim_ == other.dim_ && ring_ == other.ring_;
    return degree_ == other.degree_ && dim_ == other.dim_ && ring_ == other.ring_ &&
           entries_ == other.entries_;
  }

 private:
  void check_compatible(const EndoElement& other) const {
    if (!(ring_ == other.ring_)) throw ConfigError("ring mismatch in element arithmetic");
    if (dim_ != other.dim_) throw ConfigError("dimension mismatch in element arithmetic");
    if (degree_ != other.degree_)
      throw ConfigError("degree mismatch in element arithmetic: " + std::to_string(degree_) + " vs " +
                        std::to_string(other.degree_));
  }

  int degree_;
  int dim_;
  Ring ring_;
  std::vector<Int> entries_;
};

/// The identity map of A = K^d as a degree-1 element.
inline EndoElement unit_endo(int dim, const Ring& ring) {
  EndoElement e(1, dim, ring);
  for (int k = 0; k < dim; ++k)
    e.set_entry(static_cast<std::size_t>(k) * dim + k, ring.one());
  return e;
}

/// Unsigned insertion f o (1^i tensor g tensor 1^(|f|-i)), by exact tensor
/// contraction.  The signed partial composition is this times (-1)^{i|g|};
/// the unsigned version is also what tree evaluation and the direct cup
/// oracle need.
inline EndoElement insert_endo(const EndoElement& f, int i, const EndoElement& g) {
  if (!(f.ring() == g.ring())) throw ConfigError("ring mismatch in compose");
  if (f.dim() != g.dim()) throw ConfigError("dimension mismatch in compose");
  const int d = f.dim();
  const int m = f.degree();
  const int n = g.degree();
  if (m < 1) throw RangeError("compose: outer element must have degree >= 1");
  if (i < 0 || i > ddeg(m))
    throw RangeError("compose: slot " + std::to_string(i) + " out of range for degree " + std::to_string(m));

  const int q = m + n - 1;
  EndoElement r(q, d, f.ring());
  std::vector<int> x(static_cast<std::size_t>(q), 0);
  std::vector<int> fin(static_cast<std::size_t>(m), 0);
  std::vector<int> gin(static_cast<std::size_t>(n), 0);
  const std::size_t input_combos = EndoElement::entry_count(q, d) / d;

  for (int out = 0; out < d; ++out) {
    for (std::size_t xf = 0; xf < input_combos; ++xf) {
      // decode xf into the digit vector x (input 0 slowest)
      std::size_t rest = xf;
      for (int k = q - 1; k >= 0; --k) {
        x[k] = static_cast<int>(rest % d);
        rest /= d;
      }
      Int sum = 0;
      for (int a = 0; a < d; ++a) {
        for (int k = 0; k < i; ++k) fin[k] = x[k];
        fin[i] = a;
        for (int k = i + 1; k < m; ++k) fin[k] = x[k + n - 1];
        for (int k = 0; k < n; ++k) gin[k] = x[i + k];
        sum += f.entry(f.flat_index(out, fin)) * g.entry(g.flat_index(a, gin));
      }
      if (sum != 0)
        r.set_entry(static_cast<std::size_t>(out) * input_combos + xf, sum);
    }
  }
  return r;
}

/// Seeded random element with entries uniform in [-bound, bound], drawn in
/// flat-index order.  Same seed, same element.
inline EndoElement random_endo(int degree, int dim, const Ring& ring, long long bound,
                               SplitMix64& rng) {
  if (bound < 1) throw ConfigError("random_endo: bound must be >= 1");
  EndoElement e(degree, dim, ring);
  const std::size_t n = EndoElement::entry_count(degree, dim);
  for (std::size_t k = 0; k < n; ++k)
    e.set_entry(k, Int(rng.in_range(-bound, bound)));
  return e;
}

inline EndoElement random_endo(int degree, int dim, const Ring& ring, long long bound,
                               std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_endo(degree, dim, ring, bound, rng);
}

/// The endomorphism pre-operad of A = K^d: insertion composition with the
/// twist sign (-1)^{i|g|}.
class EndoModel {
 public:
  using Element = EndoElement;

  EndoModel(int dim, Ring ring) : dim_(dim), ring_(std::move(ring)) {
    if (dim < 1) throw ConfigError("dimension must be >= 1");
  }

  int dim() const { return dim_; }
  const Ring& ring() const { return ring_; }

  Element unit() const { return unit_endo(dim_, ring_); }
  Element zero(int degree) const { return EndoElement(degree, dim_, ring_); }

  Element compose(const Element& f, int i, const Element& g) const {
    if (!(f.ring() == ring_)) throw ConfigError("ring mismatch in compose");
    if (f.dim() != dim_ || g.dim() != dim_) throw ConfigError("dimension mismatch in compose");
    const Int sign = ring_.koszul_sign(i, ddeg(g.degree()));
    EndoElement r = insert_endo(f, i, g);
    return sign == ring_.one() ? r : r.scaled(sign);
  }

  int degree(const Element& e) const { return e.degree(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element negate(const Element& a) const { return -a; }
  Element scale(const Int& s, const Element& a) const { return a.scaled(s); }

 private:
  int dim_;
  Ring ring_;
};

}  // namespace preop
