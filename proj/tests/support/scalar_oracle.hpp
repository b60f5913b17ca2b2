#pragma once

// Closed-form model of the dimension-1 endomorphism pre-operad, used as an
// independent oracle: an element is one integer with a degree and
//
//   f o_i g = (-1)^{i|g|} * f * g
//
// is the whole composition law.  Everything here is plain integer
// arithmetic over that one rule; no library composition, tensor or tree
// code is involved, so agreement with the library is evidence, not
// tautology.

#include <vector>

#include "preop/ring.hpp"

namespace oracle {

using preop::Int;

struct Sc {
  int degree = 0;
  Int value = 0;
};

inline int sign_pow(long long a, long long b) { return (a % 2 != 0) && (b % 2 != 0) ? -1 : 1; }

inline Sc compose(const Sc& f, int i, const Sc& g) {
  return {f.degree + g.degree - 1, Int(sign_pow(i, g.degree - 1)) * f.value * g.value};
}

inline Sc total(const Sc& f, const Sc& g) {
  Sc out{f.degree + g.degree - 1, 0};
  if (out.degree < 0) out.degree = 0;
  for (int i = 0; i <= f.degree - 1; ++i) out.value += compose(f, i, g).value;
  return out;
}

// the direct two-slot contraction at dimension 1: (-1)^{fg} mu f g
inline Sc cup(const Sc& f, const Sc& g, const Sc& mu) {
  return {f.degree + g.degree, Int(sign_pow(f.degree, g.degree)) * mu.value * f.value * g.value};
}

inline Sc delta(const Sc& f, const Sc& mu) {
  return {f.degree + 1,
          Int(sign_pow(f.degree - 1, 1)) * total(mu, f).value - total(f, mu).value};
}

inline Sc tri(const Sc& h, const Sc& f, const Sc& g) {
  Sc out{h.degree + f.degree + g.degree - 2, 0};
  if (out.degree < 0) out.degree = 0;
  for (int i = 0; i <= h.degree - 2; ++i)
    for (int j = i + f.degree; j <= (f.degree - 1) + (h.degree - 1); ++j)
      out.value += Int(sign_pow(i, f.degree - 1)) * Int(sign_pow(j, g.degree - 1)) * h.value *
                   f.value * g.value;
  return out;
}

inline Sc dev_total(const Sc& f, const Sc& g, const Sc& mu) {
  Sc out{f.degree + g.degree, 0};
  out.value = delta(total(f, g), mu).value - total(f, delta(g, mu)).value -
              Int(sign_pow(g.degree - 1, 1)) * total(delta(f, mu), g).value;
  return out;
}

inline Sc dev_tri(const Sc& h, const Sc& f, const Sc& g, const Sc& mu) {
  Sc out{h.degree + f.degree + g.degree - 1, 0};
  out.value = delta(tri(h, f, g), mu).value - tri(h, f, delta(g, mu)).value -
              Int(sign_pow(g.degree - 1, 1)) * tri(h, delta(f, mu), g).value -
              Int(sign_pow(g.degree - 1 + f.degree - 1, 1)) * tri(delta(h, mu), f, g).value;
  return out;
}

}  // namespace oracle
