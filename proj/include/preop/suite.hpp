#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "preop/context.hpp"
#include "preop/identities.hpp"
#include "preop/json_io.hpp"
#include "preop/morphism.hpp"

namespace preop {

enum class ModelChoice { free_trees, endo };

inline std::string to_string(ModelChoice m) {
  return m == ModelChoice::free_trees ? "free" : "endo";
}

/// The multiplication of the dual numbers K[x]/(x^2) on basis {1, x}; the
/// stock associative degree-2 element at dimension 2.
inline EndoElement dual_number_mu(const Ring& ring) {
  EndoElement mu(2, 2, ring);
  mu.set_entry(0, ring.one());  // 1*1 = 1
  mu.set_entry(5, ring.one());  // 1*x = x
  mu.set_entry(6, ring.one());  // x*1 = x
  return mu;
}

struct CheckConfig {
  ModelChoice model = ModelChoice::endo;
  Ring ring = Ring::integers();
  int dim = 2;
  std::uint64_t seed = 1;
  int trials = 200;
  long long bound = 3;
  Mutation mutation = Mutation::none;
};

/// One failed case, replayable from the serialized inputs alone.
struct FailureRecord {
  int trial = 0;
  std::string case_label;
  Json inputs;
  Json lhs;
  Json rhs;
  Json diff;
  std::string error;

  Json to_json() const {
    Json out;
    out["trial"] = trial;
    out["case"] = case_label;
    out["inputs"] = inputs;
    out["lhs"] = lhs;
    out["rhs"] = rhs;
    out["diff"] = diff;
    if (!error.empty()) out["error"] = error;
    return out;
  }
};

/// Outcome of checking one identity on one degree tuple: holds iff the
/// failure list is empty.
struct IdentityReport {
  std::string identity;
  std::string model;
  std::string ring;
  int dim = 0;  // 0 for the free model
  std::vector<int> degrees;
  std::uint64_t seed = 0;
  int trials = 0;
  long long cases = 0;
  Mutation mutation = Mutation::none;
  std::vector<FailureRecord> failures;

  bool holds() const { return failures.empty(); }

  Json to_json() const {
    Json out;
    out["identity"] = identity;
    out["model"] = model;
    out["ring"] = ring;
    if (dim > 0) out["dim"] = dim;
    out["degrees"] = degrees;
    out["seed"] = std::to_string(seed);
    out["trials"] = trials;
    out["cases"] = cases;
    if (mutation != Mutation::none) out["mutation"] = to_string(mutation);
    Json fs = Json::array();
    for (const auto& f : failures) fs.push_back(f.to_json());
    out["failures"] = std::move(fs);
    return out;
  }
};

namespace detail {

template <PreOperadModel M, class MakeInputs>
void run_cases(const IdentityDescriptor& ident, const M& m,
               const std::vector<typename M::Element>& args, const typename M::Element* mu,
               Mutation mutation, int trial, const MakeInputs& make_inputs,
               IdentityReport& report) {
  try {
    for (const auto& c : evaluate_identity(ident, m, args, mu, mutation)) {
      ++report.cases;
      if (!m.equal(c.lhs, c.rhs)) {
        FailureRecord fr;
        fr.trial = trial;
        fr.case_label = c.label;
        fr.inputs = make_inputs(c.label);
        fr.lhs = to_json(c.lhs);
        fr.rhs = to_json(c.rhs);
        fr.diff = to_json(m.sub(c.lhs, c.rhs));
        report.failures.push_back(std::move(fr));
      }
    }
  } catch (const std::exception& ex) {
    ++report.cases;
    FailureRecord fr;
    fr.trial = trial;
    fr.case_label = "(exception)";
    fr.inputs = make_inputs("(exception)");
    fr.error = ex.what();
    report.failures.push_back(std::move(fr));
  }
}

inline IdentityReport check_free(const IdentityDescriptor& ident, const std::vector<int>& degrees,
                                 const CheckConfig& cfg) {
  IdentityReport report;
  report.identity = ident.name;
  report.model = "free";
  report.ring = cfg.ring.name();
  report.degrees = degrees;
  report.seed = cfg.seed;
  report.trials = 1;  // one exhaustive tuple of distinct formal generators
  report.mutation = cfg.mutation;

  GeneratorAlphabet alphabet;
  for (std::size_t k = 0; k < ident.slots.size(); ++k) alphabet.add(ident.slots[k], degrees[k]);
  if (ident.needs_mu) alphabet.add("m", 2);
  const FreeModel model(alphabet, cfg.ring);

  std::vector<FreeElement> args;
  for (const auto& slot : ident.slots) args.push_back(model.generator(slot));
  std::optional<FreeElement> mu;
  if (ident.needs_mu) mu = model.generator("m");

  const auto make_inputs = [&](const std::string& label) {
    Json in;
    in["case"] = label;
    in["model"] = "free";
    in["ring"] = cfg.ring.name();
    in["degrees"] = degrees;
    Json gens = Json::array();
    for (const auto& g : model.alphabet().generators()) {
      Json gj;
      gj["name"] = g.name;
      gj["arity"] = g.arity;
      gens.push_back(std::move(gj));
    }
    in["generators"] = std::move(gens);
    if (mu) in["mu"] = to_json(*mu);
    Json argj;
    for (std::size_t k = 0; k < args.size(); ++k) argj[ident.slots[k]] = to_json(args[k]);
    in["args"] = std::move(argj);
    return in;
  };

  if (cfg.mutation == Mutation::drop_compose_twist || cfg.mutation == Mutation::shift_compose_twist) {
    const TwistMutatedModel<FreeModel> mutated(model, cfg.mutation);
    run_cases(ident, mutated, args, mu ? &*mu : nullptr, cfg.mutation, 0, make_inputs, report);
  } else {
    run_cases(ident, model, args, mu ? &*mu : nullptr, cfg.mutation, 0, make_inputs, report);
  }
  return report;
}

inline IdentityReport check_endo(const IdentityDescriptor& ident, const std::vector<int>& degrees,
                                 const CheckConfig& cfg) {
  const int dim = ident.only_dim > 0 ? ident.only_dim : cfg.dim;
  IdentityReport report;
  report.identity = ident.name;
  report.model = "endo";
  report.ring = cfg.ring.name();
  report.dim = dim;
  report.degrees = degrees;
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  report.mutation = cfg.mutation;

  const EndoModel model(dim, cfg.ring);
  const bool fixed_mu = ident.id == IdentityId::delta_squared_associative;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng(SplitMix64::mix(cfg.seed, static_cast<std::uint64_t>(trial)));
    std::vector<EndoElement> args;
    for (std::size_t k = 0; k < ident.slots.size(); ++k)
      args.push_back(random_endo(degrees[k], dim, cfg.ring, cfg.bound, rng));
    std::optional<EndoElement> mu;
    if (ident.needs_mu) mu = random_endo(2, dim, cfg.ring, cfg.bound, rng);
    if (fixed_mu) mu = dual_number_mu(cfg.ring);

    const auto make_inputs = [&](const std::string& label) {
      Json in;
      in["case"] = label;
      in["model"] = "endo";
      in["ring"] = cfg.ring.name();
      in["dim"] = dim;
      in["degrees"] = degrees;
      if (mu) in["mu"] = to_json(*mu);
      Json argj;
      for (std::size_t k = 0; k < args.size(); ++k) argj[ident.slots[k]] = to_json(args[k]);
      in["args"] = std::move(argj);
      return in;
    };

    if (fixed_mu) {
      // mu . mu = 0 once, then delta(delta f) = 0 per trial
      try {
        if (trial == 0) {
          ++report.cases;
          const auto mm = total_compose(model, *mu, *mu);
          if (!mm.is_zero()) {
            FailureRecord fr;
            fr.trial = trial;
            fr.case_label = "mu_associative";
            fr.inputs = make_inputs(fr.case_label);
            fr.lhs = to_json(mm);
            fr.rhs = to_json(model.zero(3));
            fr.diff = to_json(mm);
            report.failures.push_back(std::move(fr));
          }
        }
        ++report.cases;
        const auto d2 = precoboundary(model, precoboundary(model, args[0], *mu), *mu);
        if (!d2.is_zero()) {
          FailureRecord fr;
          fr.trial = trial;
          fr.case_label = "delta_squared";
          fr.inputs = make_inputs(fr.case_label);
          fr.lhs = to_json(d2);
          fr.rhs = to_json(model.zero(degrees[0] + 2));
          fr.diff = to_json(d2);
          report.failures.push_back(std::move(fr));
        }
      } catch (const std::exception& ex) {
        ++report.cases;
        FailureRecord fr;
        fr.trial = trial;
        fr.case_label = "(exception)";
        fr.inputs = make_inputs(fr.case_label);
        fr.error = ex.what();
        report.failures.push_back(std::move(fr));
      }
      continue;
    }

    if (cfg.mutation == Mutation::drop_compose_twist ||
        cfg.mutation == Mutation::shift_compose_twist) {
      const TwistMutatedModel<EndoModel> mutated(model, cfg.mutation);
      run_cases(ident, mutated, args, mu ? &*mu : nullptr, cfg.mutation, trial, make_inputs,
                report);
    } else {
      run_cases(ident, model, args, mu ? &*mu : nullptr, cfg.mutation, trial, make_inputs, report);
    }
  }
  return report;
}

inline void push_set_case(IdentityReport& report, const std::string& label, Json lhs, Json rhs) {
  ++report.cases;
  if (lhs != rhs) {
    FailureRecord fr;
    fr.case_label = label;
    Json in;
    in["case"] = label;
    in["degrees"] = report.degrees;
    fr.inputs = std::move(in);
    fr.lhs = lhs;
    fr.rhs = rhs;
    fr.diff = Json::object();
    report.failures.push_back(std::move(fr));
  }
}

inline Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(Json::array({c.i, c.j}));
  return out;
}

inline IdentityReport check_scope(const IdentityDescriptor& ident, const std::vector<int>& degrees,
                                  const CheckConfig& cfg) {
  IdentityReport report;
  report.identity = ident.name;
  report.model = to_string(cfg.model);
  report.ring = cfg.ring.name();
  if (cfg.model == ModelChoice::endo) report.dim = cfg.dim;
  report.degrees = degrees;
  report.seed = cfg.seed;
  report.trials = 1;
  report.mutation = cfg.mutation;

  const int dh = degrees[0], df = degrees[1], dg = degrees[2];
  const int sh = ddeg(dh), sf = ddeg(df);
  const auto s = scope_decompose(dh, df, dg);

  std::vector<Cell> united = s.all();  // sorted concatenation keeps duplicates
  std::vector<Cell> grid;
  for (int i = 0; i <= sh; ++i)
    for (int j = 0; j <= sf + sh; ++j) grid.push_back({i, j});
  push_set_case(report, "partition", cells_json(united), cells_json(grid));
  push_set_case(report, "count_B", Json(static_cast<long long>(s.b.size())),
                Json(static_cast<long long>(sh) * (sh + 1) / 2));
  push_set_case(report, "count_G", Json(static_cast<long long>(s.g.size())),
                Json(static_cast<long long>(sh) * (sh + 1) / 2));
  push_set_case(report, "count_A", Json(static_cast<long long>(s.a.size())),
                Json(static_cast<long long>(sh + 1) * (sf + 1)));
  push_set_case(report, "count_total",
                Json(static_cast<long long>(united.size())),
                Json(static_cast<long long>(sh + 1) * (sf + sh + 1)));

  const auto env = envelope(dh, df);
  std::vector<Cell> env_union = env.gprime;
  env_union.insert(env_union.end(), env.boundary.begin(), env.boundary.end());
  std::sort(env_union.begin(), env_union.end());
  push_set_case(report, "truncated_envelope_partition", cells_json(env_union),
                cells_json(env.truncated));
  push_set_case(report, "removed_corner_count",
                Json(static_cast<long long>(env.envelope.size() - env.truncated.size())), Json(3));
  return report;
}

}  // namespace detail

/// Check one identity on one degree tuple.  Free-model checks evaluate the
/// tuple of distinct formal generators exhaustively; endo-model checks draw
/// `trials` seeded random inputs.
inline IdentityReport check_identity(const std::string& name, const std::vector<int>& degrees,
                                     const CheckConfig& cfg) {
  const IdentityDescriptor& ident = find_identity(name);
  if (degrees.size() != ident.min_degrees.size())
    throw ConfigError("identity '" + name + "' takes " +
                      std::to_string(ident.min_degrees.size()) + " degrees, got " +
                      std::to_string(degrees.size()));
  const int cap = ident.max_degree_override > 0 ? ident.max_degree_override : 5;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (degrees[k] < ident.min_degrees[k])
      throw ConfigError("degree " + std::to_string(degrees[k]) + " below the minimum " +
                        std::to_string(ident.min_degrees[k]) + " for slot " + std::to_string(k) +
                        " of '" + name + "'");
    if (degrees[k] > cap)
      throw ConfigError("degree " + std::to_string(degrees[k]) + " exceeds the desk-scale cap " +
                        std::to_string(cap));
  }
  if (cfg.dim < 1 || cfg.dim > 3) throw ConfigError("dimension must be in 1..3");
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");

  if (!ident.element_inputs) return detail::check_scope(ident, degrees, cfg);
  if (cfg.model == ModelChoice::free_trees) {
    if (ident.endo_only)
      throw ConfigError("identity '" + name + "' is endo-only");
    return detail::check_free(ident, degrees, cfg);
  }
  return detail::check_endo(ident, degrees, cfg);
}

/// Suite-level configuration: which identities, which models, degree caps,
/// seeding.  Determinism contract: identical configs give identical report
/// sequences, byte for byte once serialized.
struct SuiteConfig {
  std::vector<std::string> identities;  // empty: the whole catalog
  std::vector<ModelChoice> models = {ModelChoice::free_trees, ModelChoice::endo};
  Ring ring = Ring::integers();
  int dim = 2;
  int max_degree = 3;
  int min_degree = 0;
  std::uint64_t seed = 1;
  int trials = 200;
  long long bound = 3;
  Mutation mutation = Mutation::none;
};

inline std::vector<IdentityReport> run_suite(const SuiteConfig& cfg) {
  std::vector<const IdentityDescriptor*> selected;
  if (cfg.identities.empty()) {
    for (const auto& d : catalog()) selected.push_back(&d);
  } else {
    for (const auto& name : cfg.identities) selected.push_back(&find_identity(name));
  }

  std::vector<IdentityReport> reports;
  std::size_t ident_index = 0;
  for (const IdentityDescriptor* ident : selected) {
    ++ident_index;
    for (ModelChoice model : cfg.models) {
      if (ident->endo_only && model == ModelChoice::free_trees) continue;

      const int slots = static_cast<int>(ident->min_degrees.size());
      const int cap = ident->max_degree_override > 0 ? ident->max_degree_override
                                                     : cfg.max_degree;
      std::vector<int> degrees(static_cast<std::size_t>(slots));
      std::vector<int> lows(static_cast<std::size_t>(slots));
      for (int k = 0; k < slots; ++k) {
        lows[k] = std::max(ident->min_degrees[k], cfg.min_degree);
        degrees[k] = lows[k];
      }
      if (slots == 0) continue;

      bool done = false;
      while (!done) {
        std::uint64_t seed = SplitMix64::mix(cfg.seed, ident_index);
        seed = SplitMix64::mix(seed, model == ModelChoice::free_trees ? 1 : 2);
        seed = SplitMix64::mix(seed, static_cast<std::uint64_t>(cfg.dim));
        for (int d : degrees) seed = SplitMix64::mix(seed, static_cast<std::uint64_t>(d) + 1);

        CheckConfig cc;
        cc.model = model;
        cc.ring = cfg.ring;
        cc.dim = cfg.dim;
        cc.seed = seed;
        cc.trials = cfg.trials;
        cc.bound = cfg.bound;
        cc.mutation = cfg.mutation;
        reports.push_back(check_identity(ident->name, degrees, cc));

        // odometer over the degree tuple, last slot fastest
        done = true;
        for (int k = slots - 1; k >= 0; --k) {
          if (degrees[k] < cap) {
            ++degrees[k];
            for (int r = k + 1; r < slots; ++r) degrees[r] = lows[r];
            done = false;
            break;
          }
        }
      }
    }
  }
  return reports;
}

inline bool all_hold(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds()) return false;
  return true;
}

/// One report per line, canonical key order; append-friendly and diffable.
inline void write_reports(const std::vector<IdentityReport>& reports, std::ostream& os) {
  for (const auto& r : reports) os << r.to_json().dump() << "\n";
}

inline void print_summary(const std::vector<IdentityReport>& reports, std::ostream& os) {
  os << std::left << std::setw(28) << "identity" << std::setw(6) << "model" << std::setw(4)
     << "dim" << std::setw(12) << "degrees" << std::setw(8) << "trials" << std::setw(8) << "cases"
     << "result\n";
  long long failed = 0;
  for (const auto& r : reports) {
    std::string degs = "(";
    for (std::size_t k = 0; k < r.degrees.size(); ++k)
      degs += (k ? "," : "") + std::to_string(r.degrees[k]);
    degs += ")";
    os << std::left << std::setw(28) << r.identity << std::setw(6) << r.model << std::setw(4)
       << (r.dim > 0 ? std::to_string(r.dim) : "-") << std::setw(12) << degs << std::setw(8)
       << r.trials << std::setw(8) << r.cases << (r.holds() ? "ok" : "FAIL") << "\n";
    if (!r.holds()) ++failed;
  }
  os << (failed == 0 ? "all identities hold" : std::to_string(failed) + " report(s) FAILED")
     << " (" << reports.size() << " reports)\n";
}

}  // namespace preop
