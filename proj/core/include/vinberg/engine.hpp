#pragma once

#include "vinberg/bounds.hpp"
#include "vinberg/chamber.hpp"
#include "vinberg/cone.hpp"
#include "vinberg/forms.hpp"
#include "vinberg/roots.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vinberg {

struct RunConfig {
    bool auto_cap = false;
    std::uint64_t facet_cap = 0;     // used when auto_cap is false
    std::uint64_t batch_budget = 10000; // distance keys examined, empty ones included
    bool check_every_batch = true;   // false: check after every accepted root
    unsigned threads = 1;
    unsigned field_degree = 1;

    nlohmann::json to_json() const;
    // {"facet_cap": int | "auto", "batch_budget": int, "check_every_batch": bool}
    static RunConfig from_json(const nlohmann::json& j);
};

struct RunStats {
    std::uint64_t keys_examined = 0;
    std::uint64_t nonempty_batches = 0;
    std::uint64_t accepting_batches = 0;
    std::uint64_t candidates = 0;
    std::uint64_t iterations = 0; // accepted non-chamber roots
    std::uint64_t volume_checks = 0;

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

/// Everything needed to continue a run from a batch boundary.
struct VinbergState {
    QuadraticForm form;
    ControlVector u0;
    std::size_t chamber_size = 0;
    std::vector<Root> accepted;             // chamber roots first
    std::map<Integer, Integer> frontier;    // norm s -> next level a
    std::vector<Rational> distance_log;     // keys of accepted non-chamber roots
    RunStats stats;
};

// sinh^2 of the distance from the control point to the mirror of e:
// a^2 / (s |q|). Throws Error("mirror not separating") unless (e,u0) < 0.
Rational distance_key(const QuadraticForm& form, const ControlVector& u0, const LorentzVector& e);

// Fresh state: chamber of the stabilizer, frontier at a = 1 for every norm.
VinbergState initial_state(const QuadraticForm& form, const ControlVector& u0);

struct Batch {
    Rational key;
    std::vector<Root> candidates; // grouped by norm, lexicographic within a norm
};

// Smallest unexamined key with at least one candidate. Every key examined,
// empty or not, costs one unit of `budget`; nullopt once it is spent.
std::optional<Batch> next_batch(VinbergState& state, std::uint64_t budget, unsigned threads = 1);

// Accepts, in order, each candidate whose product with every accepted root
// (including earlier ones from this batch) is <= 0. Returns the accepted ones.
std::vector<Root> accept_filter(VinbergState& state, const Batch& batch);

enum class RunStatus { FiniteVolume, FacetBoundExceeded, BudgetExhausted };

const char* to_string(RunStatus s);
std::string verdict_message(RunStatus s);

struct RunVerdict {
    RunStatus status = RunStatus::BudgetExhausted;
    std::vector<Root> roots;
    std::size_t chamber_size = 0;
    std::vector<Rational> distance_log;
    RunStats stats;
    std::uint64_t facet_cap = 0;
    std::optional<BoundBreakdown> cap_breakdown;
    std::optional<FiniteVolumeResult> geometry; // final cone, when any root exists
    double wall_ms = 0;
};

// Resolves the facet cap; auto mode needs a registry with C(n).
std::pair<std::uint64_t, std::optional<BoundBreakdown>> resolve_facet_cap(const QuadraticForm& form,
                                                                          const RunConfig& config,
                                                                          const ConstantsRegistry* registry);

// Continues from `state` until a verdict. `on_boundary` sees the state after
// every batch that did not end the run.
RunVerdict run_from(VinbergState state, const RunConfig& config, const ConstantsRegistry* registry = nullptr,
                    const std::function<void(const VinbergState&)>& on_boundary = {});

RunVerdict run(const QuadraticForm& form, const ControlVector& u0, const RunConfig& config,
               const ConstantsRegistry* registry = nullptr);

} // namespace vinberg
