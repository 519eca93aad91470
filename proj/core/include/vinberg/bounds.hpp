#pragma once

#include "vinberg/types.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vinberg {

// 50 significant decimal digits. Only the bounds code uses real numbers.
using Real = boost::multiprecision::cpp_bin_float_50;

std::string to_string(const Real& x);
Real real_from_string(const std::string& text);

// Margin applied before rounding a bound to an integer.
inline const Real& rounding_margin() {
    static const Real m("1e-20");
    return m;
}

/// Named constants entering the facet bounds, for one hyperbolic dimension.
///
/// Recognized names:
///   margulis                  mu_n, Margulis constant of H^n
///   dobrowolski               c(k), displacement lower bound from Salem numbers
///   dobrowolski_coefficient   scale of the generic (log log D / log D)^3 shape
///   m_n                       finite-subgroup order constant
///   delta                     lattice packing density bound in R^{n-1}
///   bieberbach                index bound of translations in (n-1)-dim Bieberbach groups
///   omega                     maximal volume of a simplex in H^n
///   c_n                       simplices per facet in a barycentric subdivision
///   covolume_cap              upper bound on covolumes of maximal reflection lattices
///
/// An entry may be present with no value: the gap is then explicit and any
/// computation that needs it fails with an error naming it.
class ConstantsRegistry {
public:
    struct Entry {
        std::optional<Real> value;
        std::string text; // value as written in the source
        std::string provenance;
    };

    explicit ConstantsRegistry(std::size_t n, std::string profile = "custom") : n_(n), profile_(std::move(profile)) {}

    std::size_t n() const noexcept { return n_; }
    const std::string& profile() const noexcept { return profile_; }

    // Throws Error("registry") for non-positive values, non-integral bieberbach
    // or unknown names.
    void set(const std::string& name, const std::string& value, const std::string& provenance);
    void set_absent(const std::string& name, const std::string& provenance);

    bool has(const std::string& name) const;
    const Real& get(const std::string& name) const; // Error("<name> missing") if absent
    std::optional<Real> find(const std::string& name) const;

    const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

    nlohmann::json to_json() const;
    static ConstantsRegistry from_json(const nlohmann::json& j);
    std::string digest() const;

private:
    std::size_t n_;
    std::string profile_;
    std::map<std::string, Entry> entries_;
};

// Literature-backed values for n = 2, 3; C(n) is recorded as absent.
ConstantsRegistry default_registry(std::size_t n);

// Small round constants for exercising the formulas (n = 2 only).
ConstantsRegistry toy_registry(std::size_t n = 2);

const std::vector<std::string>& known_constants();

// Volume of a hyperbolic n-ball of radius r.
Real ball_volume(std::size_t n, const Real& r);

// coefficient * (log log D / log D)^3, defined for D >= 3.
Real dobrowolski_default(unsigned degree, const Real& coefficient);

Real min_separation(std::size_t n, unsigned degree, const ConstantsRegistry& reg);

// m_n * deg^{n(n+1)}
Real max_finite_subgroup_order(std::size_t n, unsigned degree, const ConstantsRegistry& reg);

struct BoundBreakdown {
    std::size_t n = 0;
    unsigned degree = 1;
    Real volume;
    Real separation;       // d
    Real ball;             // v_n(d/2)
    Real finite_subgroup;  // f_{n,k}
    Real density;          // delta_{n-1}
    Real bieberbach;       // I_{n-1}
    Real proper_vertices;  // V1 bound
    Real ideal_vertices;   // V2 bound
    Real vertices;         // V1 + V2
    Real facets_real;      // 2(n-1)/n * V before rounding
    Integer facets;        // conservative floor

    nlohmann::json to_json() const;
};

// Conservative integer rounding: the floor of value raised by the margin
// scaled with the value and its slope in the volume, so that a perturbation
// of the volume by the margin can never lower the result below the exact floor.
Integer conservative_floor(const Real& value, const Real& slope);
// Ceiling after lowering by the margin.
Integer conservative_ceil(const Real& value);

// V1 <= vol f / v_n(d/2),  V2 <= vol (n-1) I / delta,  F <= 2(n-1)/n (V1 + V2).
// All missing constants are listed in a single Error("registry").
BoundBreakdown facet_upper_bound(std::size_t n, unsigned degree, const Real& volume, const ConstantsRegistry& reg);

// Recomputes the bound from the echoed intermediate inputs of a breakdown.
Integer recompute_facets(const BoundBreakdown& b);

// ceil(vol / (omega c_n)); 0 for vol = 0 and at least 1 for vol > 0.
Integer rank_lower_bound(std::size_t n, const Real& volume, const ConstantsRegistry& reg);

// facet_upper_bound at vol = C(n) when the covolume cap is known.
std::optional<BoundBreakdown> auto_facet_cap(std::size_t n, unsigned degree, const ConstantsRegistry& reg);

} // namespace vinberg
