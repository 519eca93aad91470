#include "cli.hpp"

#include "vinberg/bounds.hpp"
#include "vinberg/cache.hpp"
#include "vinberg/diagram.hpp"
#include "vinberg/engine.hpp"
#include "vinberg/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace vinberg::cli {

namespace {

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("io", "cannot read " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse", path + ": " + e.what());
    }
}

IntVector parse_int_list(const std::string& text) {
    IntVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        Integer x;
        if (b == std::string::npos || x.set_str(item.substr(b, e - b + 1), 10) != 0)
            throw Error("parse", "bad integer list '" + text + "'");
        v.push_back(x);
    }
    if (v.empty())
        throw Error("parse", "empty integer list");
    return v;
}

QuadraticForm load_form(const std::string& text) {
    if (std::filesystem::is_regular_file(text))
        return form_from_json(read_json_file(text));
    return QuadraticForm::diagonal(parse_int_list(text));
}

void apply_overrides(ConstantsRegistry& reg, const std::vector<std::string>& sets) {
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw Error("parse", "registry override must be name=value, got '" + s + "'");
        const std::string name = s.substr(0, eq), value = s.substr(eq + 1);
        if (value == "absent")
            reg.set_absent(name, "command-line override");
        else
            reg.set(name, value, "command-line override");
    }
}

std::optional<ConstantsRegistry> load_registry(const std::string& path, std::size_t n,
                                               const std::vector<std::string>& sets) {
    std::optional<ConstantsRegistry> reg;
    if (!path.empty()) {
        reg = ConstantsRegistry::from_json(read_json_file(path));
        if (reg->n() != n)
            throw Error("registry", "registry file is for n = " + std::to_string(reg->n()) + ", form has n = " +
                                        std::to_string(n));
    } else if (n == 2 || n == 3) {
        reg = default_registry(n);
    } else if (!sets.empty()) {
        reg = ConstantsRegistry(n);
    }
    if (reg)
        apply_overrides(*reg, sets);
    return reg;
}

int exit_code(RunStatus s) {
    switch (s) {
    case RunStatus::FiniteVolume:
        return kExitFiniteVolume;
    case RunStatus::FacetBoundExceeded:
        return kExitFacetBoundExceeded;
    case RunStatus::BudgetExhausted:
        return kExitBudgetExhausted;
    }
    return kExitInputError;
}

struct Options {
    std::string form;
    std::string control;
    std::string facet_cap = "1000";
    std::uint64_t budget = 10000;
    std::string out;
    std::string dot;
    std::string registry;
    std::string resume;
    std::string config;
    unsigned threads = 1;
    unsigned degree = 1;
    bool check_every_root = false;
    bool quiet = false;
    std::vector<std::string> sets;

    std::size_t registry_n = 2;
    std::string profile = "default";
};

int do_run(const Options& o, CLI::App& app, std::ostream& out) {
    if (o.form.empty())
        throw Error("parse", "--form is required");
    const QuadraticForm form = load_form(o.form);
    if (!form.is_admissible())
        throw Error("signature", "signature " + to_string(Signature{form.dim(), 1}) + " required, found " +
                                     to_string(form.signature()));
    const ControlVector u0(form, o.control.empty() ? default_control(form) : parse_int_list(o.control));

    // A config file sets the baseline; explicit flags override it.
    RunConfig config;
    const bool from_file = !o.config.empty();
    if (from_file)
        config = RunConfig::from_json(read_json_file(o.config));
    if (!from_file || app.count("--facet-cap") > 0) {
        if (o.facet_cap == "auto") {
            config.auto_cap = true;
        } else {
            config.auto_cap = false;
            try {
                std::size_t used = 0;
                if (o.facet_cap.empty() || o.facet_cap.front() == '-')
                    throw std::invalid_argument("cap");
                config.facet_cap = std::stoull(o.facet_cap, &used);
                if (used != o.facet_cap.size())
                    throw std::invalid_argument("cap");
            } catch (const std::exception&) {
                throw Error("parse", "--facet-cap must be a non-negative integer or 'auto'");
            }
        }
    }
    if (!from_file || app.count("--budget") > 0)
        config.batch_budget = o.budget;
    if (o.check_every_root)
        config.check_every_batch = false;
    config.threads = std::max(1u, o.threads);
    config.field_degree = o.degree;

    const auto registry = load_registry(o.registry, form.dim(), o.sets);
    const ConstantsRegistry* reg = registry ? &*registry : nullptr;
    resolve_facet_cap(form, config, reg);

    VinbergState state = (!o.resume.empty() && std::filesystem::exists(o.resume))
                             ? restore_state(o.resume, form, u0)
                             : initial_state(form, u0);
    std::function<void(const VinbergState&)> checkpoint;
    if (!o.resume.empty())
        checkpoint = [&](const VinbergState& st) { save_state(st, o.resume); };

    const RunVerdict verdict = run_from(std::move(state), config, reg, checkpoint);
    const ReportInput input{form, u0, config, reg};
    if (!o.out.empty())
        write_report(build_report(input, verdict), o.out);
    if (!o.dot.empty())
        write_file_atomic(o.dot, emit_dot(build_diagram(form, verdict.roots)));
    if (!o.quiet)
        out << summary_text(input, verdict);
    return exit_code(verdict.status);
}

int do_registry(const Options& o, std::ostream& out) {
    std::optional<ConstantsRegistry> reg;
    if (o.profile == "toy") {
        if (!o.registry.empty())
            throw Error("parse", "--profile toy and --registry are exclusive");
        reg = toy_registry(o.registry_n);
        apply_overrides(*reg, o.sets);
    } else if (o.profile == "default") {
        reg = load_registry(o.registry, o.registry_n, o.sets);
    } else {
        throw Error("parse", "unknown profile '" + o.profile + "'");
    }
    if (!reg)
        throw Error("registry", "no registry for n = " + std::to_string(o.registry_n));
    out << canonical_json(reg->to_json());
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vinberg's algorithm for integral Lorentzian forms"};
    app.require_subcommand(0, 1);
    Options o;
    app.add_option("--form", o.form, "form: JSON file or inline diagonal \"d0,d1,...\"");
    app.add_option("--control", o.control, "control vector \"c0,...,cn\" (default: negative basis vector)");
    app.add_option("--facet-cap", o.facet_cap, "facet cap: integer or 'auto'");
    app.add_option("--budget", o.budget, "number of distance keys to examine");
    app.add_option("--out", o.out, "JSON report path");
    app.add_option("--dot", o.dot, "Coxeter diagram DOT path");
    app.add_option("--registry", o.registry, "constants registry JSON");
    app.add_option("--set", o.sets, "registry override name=value (value 'absent' clears)");
    app.add_option("--resume", o.resume, "session cache, restored when present and updated per batch");
    app.add_option("--config", o.config, "run configuration JSON");
    app.add_option("--threads", o.threads, "enumeration threads");
    app.add_option("--degree", o.degree, "degree of the field of definition (bounds only)");
    app.add_flag("--check-every-root", o.check_every_root, "run the volume test after every accepted root");
    app.add_flag("--quiet", o.quiet, "no summary on stdout");

    auto* registry_cmd = app.add_subcommand("registry", "print the constants registry");
    registry_cmd->add_option("--n", o.registry_n, "hyperbolic dimension")->default_val(2);
    registry_cmd->add_option("--profile", o.profile, "default or toy")->default_val("default");
    registry_cmd->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (registry_cmd->parsed())
            return do_registry(o, out);
        return do_run(o, app, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cli_run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return cli_run(args, std::cout, std::cerr);
}

} // namespace vinberg::cli
