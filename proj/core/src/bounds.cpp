#include "vinberg/bounds.hpp"

#include "vinberg/forms.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace vinberg {

namespace bmp = boost::multiprecision;

std::string to_string(const Real& x) {
    return x.str(45, std::ios_base::scientific);
}

Real real_from_string(const std::string& text) {
    try {
        return Real(text);
    } catch (const std::exception&) {
        throw Error("parse", "not a real number: '" + text + "'");
    }
}

namespace {

Integer to_integer(const Real& floored) {
    return Integer(static_cast<bmp::cpp_int>(floored).str());
}

const Real& pi() {
    static const Real p = boost::math::constants::pi<Real>();
    return p;
}

} // namespace

const std::vector<std::string>& known_constants() {
    static const std::vector<std::string> names{"margulis", "dobrowolski", "dobrowolski_coefficient",
                                                "m_n",      "delta",       "bieberbach",
                                                "omega",    "c_n",         "covolume_cap"};
    return names;
}

void ConstantsRegistry::set(const std::string& name, const std::string& value, const std::string& provenance) {
    if (std::find(known_constants().begin(), known_constants().end(), name) == known_constants().end())
        throw Error("registry", "unknown constant '" + name + "'");
    const Real v = real_from_string(value);
    if (v <= 0)
        throw Error("registry", "constant '" + name + "' must be positive, got " + value);
    if (name == "bieberbach" && v != floor(v))
        throw Error("registry", "bieberbach index must be an integer, got " + value);
    entries_[name] = Entry{v, value, provenance};
}

void ConstantsRegistry::set_absent(const std::string& name, const std::string& provenance) {
    if (std::find(known_constants().begin(), known_constants().end(), name) == known_constants().end())
        throw Error("registry", "unknown constant '" + name + "'");
    entries_[name] = Entry{std::nullopt, "", provenance};
}

bool ConstantsRegistry::has(const std::string& name) const {
    auto it = entries_.find(name);
    return it != entries_.end() && it->second.value.has_value();
}

const Real& ConstantsRegistry::get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end() || !it->second.value)
        throw Error(name + " missing", "constant '" + name + "' is absent from the registry");
    return *it->second.value;
}

std::optional<Real> ConstantsRegistry::find(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
        return std::nullopt;
    return it->second.value;
}

nlohmann::json ConstantsRegistry::to_json() const {
    nlohmann::json constants = nlohmann::json::object();
    for (const auto& [name, e] : entries_) {
        nlohmann::json v = e.value ? nlohmann::json(e.text) : nlohmann::json(nullptr);
        constants[name] = {{"value", v}, {"provenance", e.provenance}};
    }
    return {{"n", n_}, {"profile", profile_}, {"constants", constants}};
}

ConstantsRegistry ConstantsRegistry::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("constants"))
        throw Error("registry", "registry needs \"n\" and \"constants\"");
    ConstantsRegistry reg(j.at("n").get<std::size_t>(), j.value("profile", std::string("custom")));
    for (const auto& [name, entry] : j.at("constants").items()) {
        const std::string prov = entry.value("provenance", std::string());
        const auto& v = entry.at("value");
        if (v.is_null())
            reg.set_absent(name, prov);
        else if (v.is_string())
            reg.set(name, v.get<std::string>(), prov);
        else if (v.is_number())
            reg.set(name, v.dump(), prov);
        else
            throw Error("registry", "value of '" + name + "' must be a string, number or null");
    }
    return reg;
}

std::string ConstantsRegistry::digest() const {
    return fnv1a_hex(to_json().dump());
}

ConstantsRegistry default_registry(std::size_t n) {
    const std::string salem = "0.0811788060038690697160994017774829038539313501531";
    const std::string salem_prov =
        "half the log of Lehmer's number 1.17628...; the smallest Salem number through degree 44 "
        "(Mossinghoff-Rhin-Wu), and every quadratic unit exceeds it";
    if (n == 2) {
        ConstantsRegistry r(2, "default");
        r.set("margulis", "0.26", "Yamada: Margulis constant of H^2 is about 0.2629, rounded down");
        r.set("dobrowolski", salem, salem_prov);
        r.set("m_n", "12", "crystallographic restriction: finite subgroups of GL(2,Z) have order at most 12");
        r.set("delta", "1", "lattice packing density in R^1");
        r.set("bieberbach", "1", "Z is the only 1-dimensional Bieberbach group");
        r.set("omega", "3.14159265358979323846264338327950288419716939937511",
              "area of an ideal hyperbolic triangle (pi)");
        r.set("c_n", "2", "barycentric subdivision of an F-gon has 2F triangles");
        r.set_absent("covolume_cap", "computable in principle; no numeric value is pinned");
        return r;
    }
    if (n == 3) {
        ConstantsRegistry r(3, "default");
        r.set("margulis", "0.104", "Meyerhoff: lower bound 0.104 for the Margulis constant of H^3");
        r.set("dobrowolski", salem, salem_prov);
        r.set("m_n", "48", "finite subgroups of GL(3,Z) have order at most 48");
        r.set("delta", "0.906899682117108925297039128821077866142033124046370",
              "hexagonal packing density pi/(2 sqrt 3), optimal among lattices in R^2");
        r.set("bieberbach", "2", "Klein bottle group: translation subgroup of index 2");
        r.set("omega", "1.014941606409653625021202554274520285942",
              "volume of the regular ideal tetrahedron (maximal simplex volume in H^3)");
        r.set("c_n", "12", "4E flags with E <= 3F - 6 edges");
        r.set_absent("covolume_cap", "computable in principle; no numeric value is pinned");
        return r;
    }
    throw Error("registry", "no default registry for n = " + std::to_string(n));
}

ConstantsRegistry toy_registry(std::size_t n) {
    if (n != 2)
        throw Error("registry", "the toy registry is defined for n = 2 only");
    ConstantsRegistry r(2, "toy");
    r.set("margulis", "1.76274717403908605046521864995958461805632065652327082150659", "toy: 2 asinh(1)");
    r.set("dobrowolski", "10", "toy: large, so the Margulis case decides");
    r.set("m_n", "1", "toy");
    r.set("delta", "1", "toy");
    r.set("bieberbach", "1", "toy");
    r.set("omega", "3.14159265358979323846264338327950288419716939937511", "toy: pi");
    r.set("c_n", "1", "toy");
    r.set_absent("covolume_cap", "toy: absent unless a test sets it");
    return r;
}

Real ball_volume(std::size_t n, const Real& r) {
    if (n < 2)
        throw Error("shape", "ball volume needs n >= 2");
    if (r <= 0)
        throw Error("radius", "ball radius must be positive");
    if (n == 2)
        return 2 * pi() * (cosh(r) - 1);
    if (n == 3)
        return pi() * (sinh(2 * r) - 2 * r);
    // Vol(S^{n-1}) * int_0^r sinh^{n-1}(t) dt
    const Real half = Real(n) / 2;
    const Real sphere = 2 * pow(pi(), half) / boost::math::tgamma(half);
    const auto integrand = [n](const Real& t) { return pow(sinh(t), static_cast<int>(n - 1)); };
    Real error;
    const Real integral = boost::math::quadrature::gauss_kronrod<Real, 61>::integrate(
        integrand, Real(0), r, 30, Real("1e-40"), &error);
    return sphere * integral;
}

Real dobrowolski_default(unsigned degree, const Real& coefficient) {
    if (degree < 3)
        throw Error("degree", "the generic Dobrowolski shape needs degree >= 3");
    const Real l = log(Real(degree));
    const Real ratio = log(l) / l;
    return coefficient * ratio * ratio * ratio;
}

Real min_separation(std::size_t /*n*/, unsigned degree, const ConstantsRegistry& reg) {
    const Real& mu = reg.get("margulis");
    if (reg.has("dobrowolski"))
        return std::min(mu, reg.get("dobrowolski"));
    if (reg.has("dobrowolski_coefficient") && degree >= 3)
        return std::min(mu, dobrowolski_default(degree, reg.get("dobrowolski_coefficient")));
    throw Error("dobrowolski missing", "no displacement constant c(k) for degree " + std::to_string(degree));
}

Real max_finite_subgroup_order(std::size_t n, unsigned degree, const ConstantsRegistry& reg) {
    if (degree < 1)
        throw Error("degree", "field degree must be at least 1");
    return reg.get("m_n") * pow(Real(degree), static_cast<int>(n * (n + 1)));
}

Integer conservative_floor(const Real& value, const Real& slope) {
    const Real raised = value + rounding_margin() * (1 + abs(value) + abs(slope));
    return to_integer(floor(raised));
}

Integer conservative_ceil(const Real& value) {
    const Real lowered = value - rounding_margin() * (1 + abs(value));
    return to_integer(ceil(lowered));
}

nlohmann::json BoundBreakdown::to_json() const {
    return {{"n", n},
            {"degree", degree},
            {"volume", to_string(volume)},
            {"separation", to_string(separation)},
            {"ball_volume", to_string(ball)},
            {"finite_subgroup", to_string(finite_subgroup)},
            {"delta", to_string(density)},
            {"bieberbach", to_string(bieberbach)},
            {"V1_bound", to_string(proper_vertices)},
            {"V2_bound", to_string(ideal_vertices)},
            {"V_bound", to_string(vertices)},
            {"F_real", to_string(facets_real)},
            {"F_bound", facets.get_str()}};
}

namespace {

Integer facets_from(std::size_t n, const Real& volume, const Real& vertices) {
    const Real factor = Real(2 * (n - 1)) / n;
    const Real value = factor * vertices;
    const Real slope = volume > 0 ? value / volume : Real(0);
    return conservative_floor(value, slope);
}

} // namespace

BoundBreakdown facet_upper_bound(std::size_t n, unsigned degree, const Real& volume, const ConstantsRegistry& reg) {
    if (n < 2)
        throw Error("shape", "facet bound needs n >= 2");
    if (volume < 0)
        throw Error("volume", "volume must be non-negative");
    if (reg.n() != n)
        throw Error("registry", "registry is for n = " + std::to_string(reg.n()) + ", not " + std::to_string(n));

    std::vector<std::string> missing;
    for (const char* name : {"margulis", "m_n", "delta", "bieberbach"})
        if (!reg.has(name))
            missing.emplace_back(name);
    if (!reg.has("dobrowolski") && !(reg.has("dobrowolski_coefficient") && degree >= 3))
        missing.emplace_back("dobrowolski");
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing)
            list += (list.empty() ? "" : ", ") + m;
        throw Error("registry", "missing constants: " + list);
    }

    BoundBreakdown b;
    b.n = n;
    b.degree = degree;
    b.volume = volume;
    b.separation = min_separation(n, degree, reg);
    b.ball = ball_volume(n, b.separation / 2);
    b.finite_subgroup = max_finite_subgroup_order(n, degree, reg);
    b.density = reg.get("delta");
    b.bieberbach = reg.get("bieberbach");
    b.proper_vertices = volume * b.finite_subgroup / b.ball;
    b.ideal_vertices = volume * Real(n - 1) * b.bieberbach / b.density;
    b.vertices = b.proper_vertices + b.ideal_vertices;
    b.facets_real = Real(2 * (n - 1)) / n * b.vertices;
    b.facets = facets_from(n, volume, b.vertices);
    return b;
}

Integer recompute_facets(const BoundBreakdown& b) {
    const Real v1 = b.volume * b.finite_subgroup / b.ball;
    const Real v2 = b.volume * Real(b.n - 1) * b.bieberbach / b.density;
    return facets_from(b.n, b.volume, v1 + v2);
}

Integer rank_lower_bound(std::size_t n, const Real& volume, const ConstantsRegistry& reg) {
    if (volume < 0)
        throw Error("volume", "volume must be non-negative");
    if (reg.n() != n)
        throw Error("registry", "registry is for n = " + std::to_string(reg.n()) + ", not " + std::to_string(n));
    std::vector<std::string> missing;
    for (const char* name : {"omega", "c_n"})
        if (!reg.has(name))
            missing.emplace_back(name);
    if (!missing.empty())
        throw Error("registry", "missing constants: " + missing.front() + (missing.size() > 1 ? ", c_n" : ""));
    if (volume == 0)
        return 0;
    const Integer c = conservative_ceil(volume / (reg.get("omega") * reg.get("c_n")));
    return c < 1 ? Integer(1) : c;
}

std::optional<BoundBreakdown> auto_facet_cap(std::size_t n, unsigned degree, const ConstantsRegistry& reg) {
    if (!reg.has("covolume_cap"))
        return std::nullopt;
    return facet_upper_bound(n, degree, reg.get("covolume_cap"), reg);
}

} // namespace vinberg
