#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "preop/json_io.hpp"

namespace preop {

/// Named bindings over one model, as loaded from a context file.
template <class Model>
struct ModelContext {
  Model model;
  std::optional<typename Model::Element> mu;
  std::map<std::string, typename Model::Element> bindings;
};

using FreeContext = ModelContext<FreeModel>;
using EndoContext = ModelContext<EndoModel>;
using Context = std::variant<FreeContext, EndoContext>;

/// Load a context from its JSON form:
///   {"model": "free"|"endo", "ring": "z"|"zmod:P", "dim": D,
///    "generators": [{"name": N, "arity": A}, ...],
///    "mu": <element>, "bindings": {name: <element>, ...}}
/// dim applies to the endo model, generators to the free model; mu and
/// bindings are optional and use the element formats of the models.
inline Context context_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("model"))
    throw ConfigError("context must be an object with a \"model\" field");
  const std::string model = j.at("model").get<std::string>();
  const Ring ring = Ring::parse(j.value("ring", std::string("z")));

  if (model == "free") {
    GeneratorAlphabet alphabet;
    if (j.contains("generators"))
      for (const Json& g : j.at("generators"))
        alphabet.add(g.at("name").get<std::string>(), g.at("arity").get<int>());
    FreeContext ctx{FreeModel(alphabet, ring), std::nullopt, {}};
    const GeneratorAlphabet& ab = ctx.model.alphabet();
    if (j.contains("mu")) {
      ctx.mu = free_element_from_json(j.at("mu"), ring, &ab);
      if (ctx.mu->degree() != 2) throw ConfigError("mu must have degree 2");
    }
    if (j.contains("bindings"))
      for (const auto& [name, value] : j.at("bindings").items())
        ctx.bindings.emplace(name, free_element_from_json(value, ring, &ab));
    return ctx;
  }
  if (model == "endo") {
    const int dim = j.value("dim", 1);
    EndoContext ctx{EndoModel(dim, ring), std::nullopt, {}};
    const auto check_dim = [&](const EndoElement& e, const std::string& what) {
      if (e.dim() != dim)
        throw ConfigError(what + " has dim " + std::to_string(e.dim()) + ", context has dim " +
                          std::to_string(dim));
    };
    if (j.contains("mu")) {
      ctx.mu = endo_element_from_json(j.at("mu"), ring);
      check_dim(*ctx.mu, "mu");
      if (ctx.mu->degree() != 2) throw ConfigError("mu must have degree 2");
    }
    if (j.contains("bindings"))
      for (const auto& [name, value] : j.at("bindings").items()) {
        auto e = endo_element_from_json(value, ring);
        check_dim(e, "binding '" + name + "'");
        ctx.bindings.emplace(name, std::move(e));
      }
    return ctx;
  }
  throw ConfigError("unknown model '" + model + "' (expected free or endo)");
}

}  // namespace preop
