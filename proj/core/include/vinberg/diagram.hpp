#pragma once

#include "vinberg/forms.hpp"
#include "vinberg/roots.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace vinberg {

// Relation between two mirrors. Kind::None means orthogonal (m = 2).
struct EdgeLabel {
    enum class Kind { None, Weight, Thick, Dashed };

    Kind kind = Kind::None;
    int weight = 2;       // Kind::Weight: m in {3, 4, 6}
    Rational parameter;   // Kind::Dashed: (e_i,e_j)^2 / (s_i s_j) > 1

    static EdgeLabel none() { return {}; }
    static EdgeLabel with_weight(int m) { return {Kind::Weight, m, Rational(0)}; }
    static EdgeLabel thick() { return {Kind::Thick, 0, Rational(1)}; }
    static EdgeLabel dashed(Rational c) { return {Kind::Dashed, 0, std::move(c)}; }

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

std::string to_string(const EdgeLabel& label);

// Label for a pair of mirrors from c = (e_i,e_j)^2 / (s_i s_j).
//   errors: Error("obtuse pair") when (e_i,e_j) > 0,
//           Error("non-Coxeter dihedral") for c in (0,1) \ {1/4, 1/2, 3/4}.
EdgeLabel classify_pair(const QuadraticForm& form, const Root& ei, const Root& ej);

// Same classification from the invariant c alone (c >= 0).
EdgeLabel classify_invariant(const Rational& c);

struct DiagramEdge {
    std::size_t i;
    std::size_t j;
    EdgeLabel label;

    friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

struct CoxeterDiagram {
    std::size_t vertex_count = 0;
    std::vector<DiagramEdge> edges; // i < j, sorted; orthogonal pairs omitted

    // Label of the pair (i, j), None when absent.
    EdgeLabel label(std::size_t i, std::size_t j) const;
};

CoxeterDiagram build_diagram(const QuadraticForm& form, const std::vector<Root>& roots);

std::string emit_dot(const CoxeterDiagram& diagram);

// {"F": int, "edges": [[i, j, "4" | "inf" | {"dashed": "p/q"}], ...]}
nlohmann::json diagram_to_json(const CoxeterDiagram& diagram);
CoxeterDiagram diagram_from_json(const nlohmann::json& j);

// Area of a finite-volume hyperbolic polygon as a rational multiple of pi:
// (F - 2) - sum of angles/pi over consecutive sides of `cycle`.
// Throws Error("not finite volume") if consecutive sides are divergent.
Rational area_gauss_bonnet(const CoxeterDiagram& diagram, const std::vector<std::size_t>& cycle);

} // namespace vinberg
