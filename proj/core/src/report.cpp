#include "vinberg/report.hpp"

#include "vinberg/diagram.hpp"

#include <boost/math/constants/constants.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace vinberg {

namespace {

nlohmann::json vec_json(const IntVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v)
        a.push_back(x.get_str());
    return a;
}

Real pi_times(const Rational& c) {
    return boost::math::constants::pi<Real>() * Real(c.get_num().get_str()) / Real(c.get_den().get_str());
}

} // namespace

std::optional<Rational> polygon_area(const RunVerdict& verdict, const QuadraticForm& form) {
    if (form.dim() != 2 || verdict.status != RunStatus::FiniteVolume || !verdict.geometry)
        return std::nullopt;
    const auto cycle = polygon_cycle(verdict.geometry->cone);
    if (cycle.empty())
        return std::nullopt;
    return area_gauss_bonnet(build_diagram(form, verdict.roots), cycle);
}

nlohmann::json build_report(const ReportInput& in, const RunVerdict& v) {
    nlohmann::json r;
    r["schema"] = kReportSchema;
    r["version"] = kVersion;

    nlohmann::json input;
    input["form"] = form_to_json(in.form);
    input["control"] = vec_json(in.u0.vector());
    input["config"] = in.config.to_json();
    input["registry_digest"] = in.registry ? in.registry->digest() : std::string("none");
    r["input"] = input;

    r["verdict"] = {{"status", to_string(v.status)},
                    {"message", verdict_message(v.status)},
                    {"facet_cap", std::to_string(v.facet_cap)}};

    nlohmann::json accepted = nlohmann::json::array();
    for (std::size_t i = 0; i < v.roots.size(); ++i) {
        const Root& root = v.roots[i];
        const bool chamber = i < v.chamber_size;
        accepted.push_back({{"index", i},
                            {"e", vec_json(root.e)},
                            {"norm", root.norm.get_str()},
                            {"level", root.level.get_str()},
                            {"chamber", chamber},
                            {"distance", chamber ? std::string("0/1") : to_string(v.distance_log[i - v.chamber_size])}});
    }
    r["accepted"] = accepted;

    nlohmann::json gram = nlohmann::json::array();
    for (const auto& a : v.roots) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& b : v.roots)
            row.push_back(in.form.inner(a.e, b.e).get_str());
        gram.push_back(row);
    }
    r["gram"] = gram;
    r["diagram"] = diagram_to_json(build_diagram(in.form, v.roots));

    nlohmann::json rays = nlohmann::json::array();
    nlohmann::json counts = {{"proper", 0}, {"ideal", 0}, {"spacelike", 0}, {"lineality", false}};
    if (v.geometry) {
        for (const auto& ray : v.geometry->report.rays)
            rays.push_back({{"v", vec_json(ray.v)},
                            {"norm", ray.norm.get_str()},
                            {"kind", to_string(ray.kind)},
                            {"tight", ray.tight}});
        counts = {{"proper", v.geometry->report.proper_count},
                  {"ideal", v.geometry->report.ideal_count},
                  {"spacelike", v.geometry->report.spacelike_rays.size()},
                  {"lineality", v.geometry->report.lineality}};
    }
    r["rays"] = rays;
    r["vertex_counts"] = counts;

    if (auto area = polygon_area(v, in.form)) {
        nlohmann::json a = {{"pi_coefficient", to_string(*area)}};
        if (in.registry && in.registry->n() == 2) {
            const Real vol = pi_times(*area);
            a["rank_lower_bound"] = rank_lower_bound(2, vol, *in.registry).get_str();
            a["facet_upper_bound"] = facet_upper_bound(2, in.config.field_degree, vol, *in.registry).facets.get_str();
        }
        r["area"] = a;
    }
    if (v.cap_breakdown)
        r["bounds"] = v.cap_breakdown->to_json();

    const auto& s = v.stats;
    r["stats"] = {{"keys_examined", s.keys_examined},   {"nonempty_batches", s.nonempty_batches},
                  {"accepting_batches", s.accepting_batches}, {"candidates", s.candidates},
                  {"iterations", s.iterations},         {"volume_checks", s.volume_checks},
                  {"chamber_size", v.chamber_size}};
    r["timing"] = {{"wall_ms", v.wall_ms}};
    return r;
}

std::string summary_text(const ReportInput& in, const RunVerdict& v) {
    std::ostringstream os;
    os << "form: dim " << in.form.dim() << ", signature " << to_string(in.form.signature()) << "\n";
    os << "verdict: " << to_string(v.status) << " (" << v.roots.size() << " roots, " << v.chamber_size
       << " from the chamber)\n";
    os << "  " << verdict_message(v.status) << "\n";
    for (std::size_t i = 0; i < v.roots.size(); ++i) {
        os << "  e" << i << " = (";
        for (std::size_t k = 0; k < v.roots[i].e.size(); ++k)
            os << (k ? "," : "") << v.roots[i].e[k].get_str();
        os << ")  s=" << v.roots[i].norm.get_str();
        if (i >= v.chamber_size)
            os << "  dist=" << to_string(v.distance_log[i - v.chamber_size]);
        os << "\n";
    }
    if (v.geometry)
        os << "vertices: " << v.geometry->report.proper_count << " proper, " << v.geometry->report.ideal_count
           << " ideal, " << v.geometry->report.spacelike_rays.size() << " spacelike\n";
    if (auto area = polygon_area(v, in.form))
        os << "area: " << to_string(*area) << " pi\n";
    os << "keys examined: " << v.stats.keys_examined << ", candidates: " << v.stats.candidates << "\n";
    return os.str();
}

std::string canonical_json(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("io", "cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out)
            throw Error("io", "write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("io", "cannot move report into " + path.string() + ": " + ec.message());
    }
}

void write_report(const nlohmann::json& report, const std::filesystem::path& path) {
    write_file_atomic(path, canonical_json(report));
}

} // namespace vinberg
