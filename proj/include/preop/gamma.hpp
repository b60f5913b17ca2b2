#pragma once

#include <optional>
#include <string>

#include "preop/calculus.hpp"

namespace preop {

/// The three auxiliary elements at one cell of the Gamma bookkeeping.
/// gamma_interior fills all three; gamma_closed fills exactly the
/// components whose domain (interior triangle or that component's boundary
/// family) contains the cell.  All present components share the degree
/// h + f + g - 1.
template <class E>
struct GammaTriple {
  std::optional<E> gamma;
  std::optional<E> gamma_p;
  std::optional<E> gamma_pp;
};

namespace detail {

/// sum_{s=lo}^{hi} ((h o_s mu) o_a f) o_b g; empty ranges give zero.
template <PreOperadModel M>
typename M::Element mu_chain_sum(const M& m, const typename M::Element& h,
                                 const typename M::Element& f, const typename M::Element& g,
                                 const typename M::Element& mu, int lo, int hi, int a, int b) {
  const int dh = m.degree(h);
  const int df = m.degree(f);
  const int dg = m.degree(g);
  auto acc = zero_of(m, dh + 2 - 1 + df - 1 + dg - 1);
  for (int s = lo; s <= hi; ++s)
    acc = m.add(acc, m.compose(m.compose(m.compose(h, s, mu), a, f), b, g));
  return acc;
}

}  // namespace detail

/// Auxiliary variables in recursion form.  For a cell (i, j) of the
/// triangle G of (h, f, g) this returns the triple carried at the shifted
/// subscripts (i+1, j+1):
///
///   Gamma   = -(-1)^{|h|+|f|+|g|} I u ((h o_i f) o_j g)
///             -(-1)^{|f|+|g|} sum_{s=0}^{i-1} ((h o_s mu) o_{i+1} f) o_{j+1} g
///             +(-1)^{|f|+|g|} (h o_i (I u f)) o_{j+1} g
///
///   Gamma'  = +(-1)^{|g|} (h o_i (f u I)) o_{j+1} g
///             -(-1)^{|f|+|g|} sum_{s=i+1}^{j-f} ((h o_s mu) o_i f) o_{j+1} g
///             +(-1)^{|g|} (h o_i f) o_j (I u g)
///
///   Gamma'' = +(h o_i f) o_j (g u I)
///             -(-1)^{|f|+|g|} sum_{s=j-|f|+1}^{|h|} ((h o_s mu) o_i f) o_j g
///             -((h o_i f) o_j g) u I
template <PreOperadModel M>
GammaTriple<typename M::Element> gamma_interior(const M& m, int i, int j,
                                                const typename M::Element& h,
                                                const typename M::Element& f,
                                                const typename M::Element& g,
                                                const typename M::Element& mu) {
  detail::require_mu(m.degree(mu));
  const Ring& ring = m.ring();
  const int dh = m.degree(h);
  const int df = m.degree(f);
  const int dg = m.degree(g);
  const int sh = ddeg(dh);
  const int sf = ddeg(df);
  const int sg = ddeg(dg);
  if (i < 0 || i > sh - 1 || j < i + df || j > sf + sh)
    throw RangeError("gamma_interior: cell " + to_string(Cell{i, j}) + " outside the triangle G");

  const auto unit = m.unit();
  const Int p_fg = ring.parity_sign(sf + sg);
  const auto hf_j_g = m.compose(m.compose(h, i, f), j, g);

  auto gamma = m.scale(ring.neg(ring.parity_sign(sh + sf + sg)), cup(m, unit, hf_j_g, mu));
  gamma = m.sub(gamma, m.scale(p_fg, detail::mu_chain_sum(m, h, f, g, mu, 0, i - 1, i + 1, j + 1)));
  gamma = m.add(gamma, m.scale(p_fg, m.compose(m.compose(h, i, cup(m, unit, f, mu)), j + 1, g)));

  auto gamma_p = m.scale(ring.parity_sign(sg), m.compose(m.compose(h, i, cup(m, f, unit, mu)), j + 1, g));
  gamma_p = m.sub(gamma_p, m.scale(p_fg, detail::mu_chain_sum(m, h, f, g, mu, i + 1, j - df, i, j + 1)));
  gamma_p = m.add(gamma_p, m.scale(ring.parity_sign(sg), m.compose(m.compose(h, i, f), j, cup(m, unit, g, mu))));

  auto gamma_pp = m.compose(m.compose(h, i, f), j, cup(m, g, unit, mu));
  gamma_pp = m.sub(gamma_pp, m.scale(p_fg, detail::mu_chain_sum(m, h, f, g, mu, j - sf + 1, sh, i, j)));
  gamma_pp = m.sub(gamma_pp, cup(m, hf_j_g, unit, mu));

  GammaTriple<typename M::Element> out;
  out.gamma = gamma;
  out.gamma_p = gamma_p;
  out.gamma_pp = gamma_pp;
  return out;
}

/// Auxiliary variables in closed form, at the unshifted subscripts.
///
/// Interior cells (i, j) of G' = {1 <= i <= |h|, i+f <= j <= f+|h|}:
///
///   Gamma   = -(-1)^{|h|+|f|+|g|} ((I u h) o_i f) o_j g
///             -(-1)^{|f|+|g|} sum_{s=0}^{i-1} ((h o_s mu) o_i f) o_j g
///   Gamma'  = -(-1)^{|f|+|g|} sum_{s=i-1}^{j-f} ((h o_s mu) o_{i-1} f) o_j g
///   Gamma'' = -(-1)^{|f|+|g|} sum_{s=j-f}^{|h|} ((h o_s mu) o_{i-1} f) o_{j-1} g
///             -(-1)^{|f|+|g|} ((h u I) o_{i-1} f) o_{j-1} g
///
/// Boundary families on the truncated envelope (one component each):
///
///   Gamma_{0j}        = (-1)^{g+|h|f} f u (h o_{j-f} g),   f <= j <= f+|h|
///   Gamma'_{i,i+|f|}  = (-1)^{|g|}    h o_{i-1} (f u g),   1 <= i <= h
///   Gamma''_{i,f+h}   = (-1)^{g}      (h o_{i-1} f) u g,   1 <= i <= h
///
/// A component is set iff the cell lies in its domain; a cell covered by
/// no component raises a range error.  At the interior the result agrees
/// with gamma_interior at the cell (i-1, j-1); the gamma_forms_agree
/// identity checks that by evaluating both.
template <PreOperadModel M>
GammaTriple<typename M::Element> gamma_closed(const M& m, int i, int j,
                                              const typename M::Element& h,
                                              const typename M::Element& f,
                                              const typename M::Element& g,
                                              const typename M::Element& mu) {
  detail::require_mu(m.degree(mu));
  const Ring& ring = m.ring();
  const int dh = m.degree(h);
  const int df = m.degree(f);
  const int dg = m.degree(g);
  const int sh = ddeg(dh);
  const int sf = ddeg(df);
  const int sg = ddeg(dg);

  const bool interior = i >= 1 && i <= sh && j >= i + df && j <= df + sh;
  const bool on_gamma_row = i == 0 && j >= df && j <= df + sh;
  const bool on_gamma_p_diag = j == i + sf && i >= 1 && i <= dh;
  const bool on_gamma_pp_edge = j == df + dh && i >= 1 && i <= dh;

  GammaTriple<typename M::Element> out;
  if (interior) {
    const auto unit = m.unit();
    const Int p_fg = ring.parity_sign(sf + sg);

    auto gamma = m.scale(ring.neg(ring.parity_sign(sh + sf + sg)),
                         m.compose(m.compose(cup(m, unit, h, mu), i, f), j, g));
    gamma = m.sub(gamma, m.scale(p_fg, detail::mu_chain_sum(m, h, f, g, mu, 0, i - 1, i, j)));
    out.gamma = gamma;

    out.gamma_p = m.negate(m.scale(p_fg, detail::mu_chain_sum(m, h, f, g, mu, i - 1, j - df, i - 1, j)));

    auto gamma_pp = m.scale(p_fg, detail::mu_chain_sum(m, h, f, g, mu, j - df, sh, i - 1, j - 1));
    gamma_pp = m.add(gamma_pp,
                     m.scale(p_fg, m.compose(m.compose(cup(m, h, unit, mu), i - 1, f), j - 1, g)));
    out.gamma_pp = m.negate(gamma_pp);
  }
  if (on_gamma_row) {
    const Int sign = ring.mul(ring.parity_sign(dg), ring.koszul_sign(sh, df));
    out.gamma = m.scale(sign, cup(m, f, m.compose(h, j - df, g), mu));
  }
  if (on_gamma_p_diag) {
    out.gamma_p = m.scale(ring.parity_sign(sg), m.compose(h, i - 1, cup(m, f, g, mu)));
  }
  if (on_gamma_pp_edge) {
    out.gamma_pp = m.scale(ring.parity_sign(dg), cup(m, m.compose(h, i - 1, f), g, mu));
  }
  if (!out.gamma && !out.gamma_p && !out.gamma_pp)
    throw RangeError("gamma_closed: cell " + to_string(Cell{i, j}) +
                     " is neither interior to G' nor on a boundary family");
  return out;
}

}  // namespace preop
