#pragma once

#include <concepts>
#include <string>

#include "preop/errors.hpp"
#include "preop/ring.hpp"
#include "preop/scope.hpp"

namespace preop {

/// What the derived operators need from a model: signed partial
/// composition, the unit, and exact linear arithmetic.  That the
/// composition satisfies the pre-operad axioms is not enforceable here;
/// the identity suite checks it.
template <typename M>
concept PreOperadModel = requires(const M m, const typename M::Element e, int i, const Int s) {
  { m.compose(e, i, e) } -> std::same_as<typename M::Element>;
  { m.unit() } -> std::same_as<typename M::Element>;
  { m.zero(i) } -> std::same_as<typename M::Element>;
  { m.degree(e) } -> std::convertible_to<int>;
  { m.equal(e, e) } -> std::convertible_to<bool>;
  { m.add(e, e) } -> std::same_as<typename M::Element>;
  { m.sub(e, e) } -> std::same_as<typename M::Element>;
  { m.negate(e) } -> std::same_as<typename M::Element>;
  { m.scale(s, e) } -> std::same_as<typename M::Element>;
  { m.ring() } -> std::convertible_to<const Ring&>;
};

namespace detail {

template <PreOperadModel M>
typename M::Element zero_of(const M& m, int degree) {
  // empty-range sums land here; degrees below 0 clamp to the degree-0 zero
  return m.zero(degree < 0 ? 0 : degree);
}

inline void require_mu(int deg_mu) {
  if (deg_mu != 2)
    throw ConfigError("distinguished element mu must have degree 2, got " + std::to_string(deg_mu));
}

}  // namespace detail

/// Total composition f . g = sum_{i=0}^{|f|} f o_i g, degree f+g-1.
template <PreOperadModel M>
typename M::Element total_compose(const M& m, const typename M::Element& f,
                                  const typename M::Element& g) {
  const int df = m.degree(f);
  const int dg = m.degree(g);
  auto acc = detail::zero_of(m, df + dg - 1);
  for (int i = 0; i <= ddeg(df); ++i) acc = m.add(acc, m.compose(f, i, g));
  return acc;
}

/// Cup product f u g = (-1)^f (mu o_0 f) o_f g, degree f+g.
template <PreOperadModel M>
typename M::Element cup(const M& m, const typename M::Element& f, const typename M::Element& g,
                        const typename M::Element& mu) {
  detail::require_mu(m.degree(mu));
  const int df = m.degree(f);
  const Int sign = m.ring().parity_sign(df);
  return m.scale(sign, m.compose(m.compose(mu, 0, f), df, g));
}

/// Graded commutator [x, y] = x . y - (-1)^{|x||y|} y . x under the total
/// composition.  For y = mu of degree 2 this is -delta_mu x.
template <PreOperadModel M>
typename M::Element bracket(const M& m, const typename M::Element& x,
                            const typename M::Element& y) {
  const Int sign = m.ring().koszul_sign(ddeg(m.degree(x)), ddeg(m.degree(y)));
  return m.sub(total_compose(m, x, y), m.scale(sign, total_compose(m, y, x)));
}

/// Pre-coboundary delta_mu f = (-1)^{|f|} mu . f - f . mu, degree f+1.
template <PreOperadModel M>
typename M::Element precoboundary(const M& m, const typename M::Element& f,
                                  const typename M::Element& mu) {
  detail::require_mu(m.degree(mu));
  const Int sign = m.ring().parity_sign(ddeg(m.degree(f)));
  return m.sub(m.scale(sign, total_compose(m, mu, f)), total_compose(m, f, mu));
}

/// Tribraces {h, f, g} = sum over the triangle G of (h o_i f) o_j g,
/// degree h+f+g-2.  Zero whenever G is empty (deg h <= 1).
template <PreOperadModel M>
typename M::Element tribraces(const M& m, const typename M::Element& h,
                              const typename M::Element& f, const typename M::Element& g) {
  const int dh = m.degree(h);
  const int df = m.degree(f);
  const int dg = m.degree(g);
  auto acc = detail::zero_of(m, dh + df + dg - 2);
  for (const Cell& c : cells_g(dh, df, dg))
    acc = m.add(acc, m.compose(m.compose(h, c.i, f), c.j, g));
  return acc;
}

/// Derivation deviation of delta_mu over the total composition:
///   delta(f . g) - f . delta g - (-1)^{|g|} (delta f) . g.
template <PreOperadModel M>
typename M::Element dev_total(const M& m, const typename M::Element& f,
                              const typename M::Element& g, const typename M::Element& mu) {
  detail::require_mu(m.degree(mu));
  const Int sg = m.ring().parity_sign(ddeg(m.degree(g)));
  auto lhs = precoboundary(m, total_compose(m, f, g), mu);
  lhs = m.sub(lhs, total_compose(m, f, precoboundary(m, g, mu)));
  return m.sub(lhs, m.scale(sg, total_compose(m, precoboundary(m, f, mu), g)));
}

/// Derivation deviation of delta_mu over the tribraces:
///   delta{h,f,g} - {h,f,delta g} - (-1)^{|g|} {h,delta f,g}
///                - (-1)^{|g|+|f|} {delta h,f,g}.
template <PreOperadModel M>
typename M::Element dev_tribraces(const M& m, const typename M::Element& h,
                                  const typename M::Element& f, const typename M::Element& g,
                                  const typename M::Element& mu) {
  detail::require_mu(m.degree(mu));
  const Ring& ring = m.ring();
  const int sf = ddeg(m.degree(f));
  const int sg = ddeg(m.degree(g));
  auto acc = precoboundary(m, tribraces(m, h, f, g), mu);
  acc = m.sub(acc, tribraces(m, h, f, precoboundary(m, g, mu)));
  acc = m.sub(acc, m.scale(ring.parity_sign(sg), tribraces(m, h, precoboundary(m, f, mu), g)));
  acc = m.sub(acc, m.scale(ring.parity_sign(sg + sf), tribraces(m, precoboundary(m, h, mu), f, g)));
  return acc;
}

/// Which rewrite rule of the composition relations applies at (i, j).
enum class RelationCase { b, a, g };

inline RelationCase classify_cell(const Cell& c, int deg_h, int deg_f) {
  const int sh = ddeg(deg_h);
  const int sf = ddeg(deg_f);
  if (c.i < 0 || c.i > sh || c.j < 0 || c.j > sf + sh)
    throw RangeError("cell " + to_string(c) + " outside the scope");
  if (c.j <= c.i - 1) return RelationCase::b;
  if (c.j <= c.i + sf) return RelationCase::a;
  return RelationCase::g;
}

/// The rewritten form of (h o_i f) o_j g prescribed by the composition
/// relations at a cell of the given case:
///   B: (-1)^{|f||g|} (h o_j g) o_{i+|g|} f
///   A: h o_i (f o_{j-i} g)
///   G: (-1)^{|f||g|} (h o_{j-|f|} g) o_i f
/// `flip_bg_sign` inverts the Koszul factor of the B and G rules; it exists
/// only for the mutation fixtures that prove the identity suite can detect
/// a mistranscribed rule table.
template <PreOperadModel M>
typename M::Element relation_rhs(const M& m, RelationCase rule, const typename M::Element& h,
                                 const typename M::Element& f, const typename M::Element& g,
                                 int i, int j, bool flip_bg_sign = false) {
  const Ring& ring = m.ring();
  const int sf = ddeg(m.degree(f));
  const int sg = ddeg(m.degree(g));
  Int sign = ring.koszul_sign(sf, sg);
  if (flip_bg_sign) sign = ring.neg(sign);
  switch (rule) {
    case RelationCase::b:
      return m.scale(sign, m.compose(m.compose(h, j, g), i + sg, f));
    case RelationCase::a:
      return m.compose(h, i, m.compose(f, j - i, g));
    case RelationCase::g:
      return m.scale(sign, m.compose(m.compose(h, j - sf, g), i, f));
  }
  throw RangeError("unreachable relation case");
}

}  // namespace preop
