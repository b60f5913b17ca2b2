#pragma once

#include <string>

#include <json.hpp>

#include "preop/endo_model.hpp"
#include "preop/free_model.hpp"

namespace preop {

using Json = nlohmann::ordered_json;

/// Coefficients travel as decimal strings so arbitrarily large integers
/// survive any JSON reader.
inline std::string int_to_string(const Int& v) { return v.str(); }

inline Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw ConfigError("not a decimal integer: '" + s + "'");
  }
}

inline Int int_from_json(const Json& j) {
  if (j.is_string()) return int_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw ConfigError("expected an integer (as decimal string)");
}

inline Json to_json(const Tree& t) {
  if (t.is_leaf()) return Json("leaf");
  Json children = Json::array();
  for (const Tree& c : t.children()) children.push_back(to_json(c));
  Json out;
  out["gen"] = t.gen();
  out["children"] = std::move(children);
  return out;
}

inline Tree tree_from_json(const Json& j, const GeneratorAlphabet* alphabet = nullptr) {
  if (j.is_string()) {
    if (j.get<std::string>() == "leaf") return Tree::leaf();
    throw ConfigError("unknown tree literal '" + j.get<std::string>() + "'");
  }
  if (!j.is_object() || !j.contains("gen") || !j.contains("children"))
    throw ConfigError("tree node must be \"leaf\" or {\"gen\",\"children\"}");
  const std::string name = j.at("gen").get<std::string>();
  std::vector<Tree> children;
  for (const Json& c : j.at("children")) children.push_back(tree_from_json(c, alphabet));
  if (alphabet && alphabet->arity_of(name) != static_cast<int>(children.size()))
    throw ConfigError("generator '" + name + "' used with " + std::to_string(children.size()) +
                      " children, declared arity is " + std::to_string(alphabet->arity_of(name)));
  return Tree::node(name, std::move(children));
}

inline Json to_json(const FreeElement& e) {
  Json terms = Json::array();
  for (const auto& [t, c] : e.terms()) {
    Json term;
    term["coeff"] = int_to_string(c);
    term["tree"] = to_json(t);
    terms.push_back(std::move(term));
  }
  Json out;
  out["degree"] = e.degree();
  out["terms"] = std::move(terms);
  return out;
}

inline FreeElement free_element_from_json(const Json& j, const Ring& ring,
                                          const GeneratorAlphabet* alphabet = nullptr) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    throw ConfigError("free element must be {\"degree\",\"terms\"}");
  FreeElement e(j.at("degree").get<int>(), ring);
  for (const Json& term : j.at("terms"))
    e.accumulate(tree_from_json(term.at("tree"), alphabet), int_from_json(term.at("coeff")));
  return e;
}

inline Json to_json(const EndoElement& e) {
  Json entries = Json::array();
  for (const Int& v : e.entries()) entries.push_back(int_to_string(v));
  Json out;
  out["degree"] = e.degree();
  out["dim"] = e.dim();
  out["entries"] = std::move(entries);
  return out;
}

inline EndoElement endo_element_from_json(const Json& j, const Ring& ring) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("dim") || !j.contains("entries"))
    throw ConfigError("endo element must be {\"degree\",\"dim\",\"entries\"}");
  EndoElement e(j.at("degree").get<int>(), j.at("dim").get<int>(), ring);
  const Json& entries = j.at("entries");
  if (entries.size() != e.entries().size())
    throw ConfigError("endo element of degree " + std::to_string(e.degree()) + ", dim " +
                      std::to_string(e.dim()) + " needs " + std::to_string(e.entries().size()) +
                      " entries, got " + std::to_string(entries.size()));
  for (std::size_t k = 0; k < entries.size(); ++k) e.set_entry(k, int_from_json(entries[k]));
  return e;
}

}  // namespace preop
