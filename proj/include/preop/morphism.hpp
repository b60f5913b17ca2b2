#pragma once

#include <map>
#include <string>

#include "preop/endo_model.hpp"
#include "preop/free_model.hpp"

namespace preop {

namespace detail {

/// Unsigned bottom-up evaluation of one tree: Leaf -> identity map,
/// Node -> plug the evaluated children into the assigned map.  Children
/// are inserted right to left so earlier slots keep their positions.
/// All twist signs live in how trees combine into elements, not here;
/// that is exactly what makes the evaluation intertwine the two signed
/// compositions (checked by the morphism-property tests).
inline EndoElement eval_tree(const Tree& t, const std::map<std::string, EndoElement>& assignment,
                             const EndoModel& target) {
  if (t.is_leaf()) return target.unit();
  const auto it = assignment.find(t.gen());
  if (it == assignment.end()) throw ConfigError("no assignment for generator '" + t.gen() + "'");
  const EndoElement& m = it->second;
  const int arity = static_cast<int>(t.children().size());
  if (m.degree() != arity)
    throw ConfigError("assignment for '" + t.gen() + "' has degree " + std::to_string(m.degree()) +
                      ", generator has arity " + std::to_string(arity));
  if (m.dim() != target.dim() || !(m.ring() == target.ring()))
    throw ConfigError("assignment for '" + t.gen() + "' does not live in the target model");
  EndoElement acc = m;
  for (int k = arity - 1; k >= 0; --k)
    acc = insert_endo(acc, k, eval_tree(t.children()[static_cast<std::size_t>(k)], assignment, target));
  return acc;
}

}  // namespace detail

/// Structure-preserving evaluation of a free element in an endomorphism
/// model: linear in e, unit to unit, and
///   eval(compose(f, i, g)) = compose(eval(f), i, eval(g)).
inline EndoElement eval_morphism(const FreeElement& e,
                                 const std::map<std::string, EndoElement>& assignment,
                                 const EndoModel& target) {
  EndoElement out = target.zero(e.degree());
  for (const auto& [t, c] : e.terms())
    out = out + detail::eval_tree(t, assignment, target).scaled(c);
  return out;
}

}  // namespace preop
