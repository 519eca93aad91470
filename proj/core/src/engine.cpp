#include "vinberg/engine.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>

namespace vinberg {

nlohmann::json RunConfig::to_json() const {
    nlohmann::json cap = auto_cap ? nlohmann::json("auto") : nlohmann::json(facet_cap);
    return {{"facet_cap", cap},
            {"batch_budget", batch_budget},
            {"check_every_batch", check_every_batch},
            {"field_degree", field_degree}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig c;
    if (j.contains("facet_cap")) {
        const auto& cap = j.at("facet_cap");
        if (cap.is_string() && cap.get<std::string>() == "auto")
            c.auto_cap = true;
        else if (cap.is_number_unsigned() || (cap.is_number_integer() && cap.get<std::int64_t>() >= 0))
            c.facet_cap = cap.get<std::uint64_t>();
        else
            throw Error("config", "facet_cap must be a non-negative integer or \"auto\"");
    }
    if (j.contains("batch_budget"))
        c.batch_budget = j.at("batch_budget").get<std::uint64_t>();
    if (j.contains("check_every_batch"))
        c.check_every_batch = j.at("check_every_batch").get<bool>();
    if (j.contains("field_degree"))
        c.field_degree = j.at("field_degree").get<unsigned>();
    return c;
}

Rational distance_key(const QuadraticForm& form, const ControlVector& u0, const LorentzVector& e) {
    const Integer s = form.norm(e);
    if (s <= 0)
        throw Error("not a root direction", "distance key needs (e,e) > 0");
    const Integer p = form.inner(e, u0.vector());
    if (p >= 0)
        throw Error("mirror not separating", "(e,u0) = " + p.get_str() + " is not negative");
    return make_rational(p * p, s * abs(u0.norm()));
}

VinbergState initial_state(const QuadraticForm& form, const ControlVector& u0) {
    if (!form.is_admissible())
        throw Error("signature", "signature " + to_string(Signature{form.dim(), 1}) + " required, found " +
                                     to_string(form.signature()));
    VinbergState st{form, u0, 0, {}, {}, {}, {}};
    const ChamberSystem chamber = stabilizer_chamber(form, u0);
    st.accepted = chamber.simple_roots;
    st.chamber_size = chamber.size();
    for (const auto& s : admissible_norms(form))
        st.frontier.emplace(s, Integer(1));
    return st;
}

namespace {

Rational key_of(const Integer& s, const Integer& a, const Integer& abs_q) {
    return make_rational(a * a, s * abs_q);
}

} // namespace

std::optional<Batch> next_batch(VinbergState& state, std::uint64_t budget, unsigned threads) {
    const Integer abs_q = abs(state.u0.norm());
    while (state.stats.keys_examined < budget && !state.frontier.empty()) {
        // Minimal key over the per-norm frontier; equal keys merge.
        std::optional<Rational> best;
        std::vector<Integer> tied;
        for (const auto& [s, a] : state.frontier) {
            const Rational k = key_of(s, a, abs_q);
            if (!best || k < *best) {
                best = k;
                tied.assign(1, s);
            } else if (k == *best) {
                tied.push_back(s);
            }
        }
        ++state.stats.keys_examined;

        std::vector<std::vector<Root>> parts(tied.size());
        if (threads > 1 && tied.size() > 1) {
            std::vector<std::future<std::vector<Root>>> jobs;
            for (const auto& s : tied) {
                const Integer a = state.frontier.at(s);
                jobs.push_back(std::async(std::launch::async, [&state, s, a] {
                    return enumerate_roots_at(state.form, state.u0, s, a);
                }));
            }
            for (std::size_t i = 0; i < jobs.size(); ++i)
                parts[i] = jobs[i].get();
        } else {
            for (std::size_t i = 0; i < tied.size(); ++i)
                parts[i] = enumerate_roots_at(state.form, state.u0, tied[i], state.frontier.at(tied[i]));
        }
        for (const auto& s : tied)
            state.frontier[s] += 1;

        Batch batch{*best, {}};
        for (auto& p : parts)
            batch.candidates.insert(batch.candidates.end(), std::make_move_iterator(p.begin()),
                                    std::make_move_iterator(p.end()));
        if (batch.candidates.empty())
            continue;
        ++state.stats.nonempty_batches;
        state.stats.candidates += batch.candidates.size();
        return batch;
    }
    return std::nullopt;
}

std::vector<Root> accept_filter(VinbergState& state, const Batch& batch) {
    std::vector<Root> taken;
    for (const auto& cand : batch.candidates) {
        const bool acute = std::all_of(state.accepted.begin(), state.accepted.end(),
                                       [&](const Root& r) { return state.form.inner(cand.e, r.e) <= 0; });
        if (!acute)
            continue;
        state.accepted.push_back(cand);
        state.distance_log.push_back(batch.key);
        ++state.stats.iterations;
        taken.push_back(cand);
    }
    return taken;
}

const char* to_string(RunStatus s) {
    switch (s) {
    case RunStatus::FiniteVolume:
        return "FiniteVolume";
    case RunStatus::FacetBoundExceeded:
        return "FacetBoundExceeded";
    case RunStatus::BudgetExhausted:
        return "BudgetExhausted";
    }
    return "?";
}

std::string verdict_message(RunStatus s) {
    switch (s) {
    case RunStatus::FiniteVolume:
        return "the polyhedron has finite volume: the form is reflective and its reflections generate a "
               "maximal reflection subgroup";
    case RunStatus::FacetBoundExceeded:
        return "more facets than the cap allows: the integral orthogonal group of the form does not contain a "
               "maximal arithmetic hyperbolic reflection group (valid when the cap is a true facet bound)";
    case RunStatus::BudgetExhausted:
        return "batch budget exhausted before a verdict";
    }
    return "";
}

std::pair<std::uint64_t, std::optional<BoundBreakdown>> resolve_facet_cap(const QuadraticForm& form,
                                                                          const RunConfig& config,
                                                                          const ConstantsRegistry* registry) {
    if (!config.auto_cap)
        return {config.facet_cap, std::nullopt};
    if (registry == nullptr)
        throw Error("auto cap", "facet cap \"auto\" needs a constants registry");
    auto b = auto_facet_cap(form.dim(), config.field_degree, *registry);
    if (!b)
        throw Error("auto cap", "registry has no covolume cap C(" + std::to_string(form.dim()) +
                                    "); give an explicit --facet-cap");
    const Integer limit(std::to_string(std::numeric_limits<std::uint64_t>::max()));
    const std::uint64_t cap = b->facets > limit ? std::numeric_limits<std::uint64_t>::max()
                                                : std::stoull(b->facets.get_str());
    return {cap, std::move(b)};
}

RunVerdict run_from(VinbergState state, const RunConfig& config, const ConstantsRegistry* registry,
                    const std::function<void(const VinbergState&)>& on_boundary) {
    const auto start = std::chrono::steady_clock::now();
    RunVerdict verdict;
    auto [cap, breakdown] = resolve_facet_cap(state.form, config, registry);
    verdict.facet_cap = cap;
    verdict.cap_breakdown = std::move(breakdown);

    std::optional<RunStatus> status;
    std::optional<FiniteVolumeResult> last_check;

    auto check = [&]() -> bool {
        ++state.stats.volume_checks;
        last_check = finite_volume_test(state.form, state.accepted, state.u0);
        return last_check->finite;
    };

    while (!status) {
        auto batch = next_batch(state, config.batch_budget, config.threads);
        if (!batch) {
            status = RunStatus::BudgetExhausted;
            break;
        }
        std::size_t accepted_here = 0;
        if (config.check_every_batch) {
            accepted_here = accept_filter(state, *batch).size();
            if (accepted_here > 0) {
                if (state.accepted.size() > cap)
                    status = RunStatus::FacetBoundExceeded;
                else if (check())
                    status = RunStatus::FiniteVolume;
            }
        } else {
            for (const auto& cand : batch->candidates) {
                const Batch single{batch->key, {cand}};
                if (accept_filter(state, single).empty())
                    continue;
                ++accepted_here;
                if (state.accepted.size() > cap) {
                    status = RunStatus::FacetBoundExceeded;
                    break;
                }
                if (check()) {
                    status = RunStatus::FiniteVolume;
                    break;
                }
            }
        }
        if (accepted_here > 0)
            ++state.stats.accepting_batches;
        if (!status && on_boundary)
            on_boundary(state);
    }

    verdict.status = *status;
    if (!state.accepted.empty()) {
        if (!last_check || last_check->cone.constraints.size() != state.accepted.size())
            last_check = finite_volume_test(state.form, state.accepted, state.u0);
        verdict.geometry = std::move(last_check);
    }
    verdict.roots = state.accepted;
    verdict.chamber_size = state.chamber_size;
    verdict.distance_log = state.distance_log;
    verdict.stats = state.stats;
    verdict.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

RunVerdict run(const QuadraticForm& form, const ControlVector& u0, const RunConfig& config,
               const ConstantsRegistry* registry) {
    // Fail on a bad cap configuration before any enumeration work.
    resolve_facet_cap(form, config, registry);
    return run_from(initial_state(form, u0), config, registry);
}

} // namespace vinberg
