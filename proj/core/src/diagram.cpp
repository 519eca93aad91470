#include "vinberg/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace vinberg {

std::string to_string(const EdgeLabel& label) {
    switch (label.kind) {
    case EdgeLabel::Kind::None:
        return "2";
    case EdgeLabel::Kind::Weight:
        return std::to_string(label.weight);
    case EdgeLabel::Kind::Thick:
        return "inf";
    case EdgeLabel::Kind::Dashed:
        return to_string(label.parameter);
    }
    return "?";
}

EdgeLabel classify_invariant(const Rational& c) {
    if (c < 0)
        throw Error("shape", "pair invariant must be non-negative");
    if (c == 0)
        return EdgeLabel::none();
    if (c == make_rational(1, 4))
        return EdgeLabel::with_weight(3);
    if (c == make_rational(1, 2))
        return EdgeLabel::with_weight(4);
    if (c == make_rational(3, 4))
        return EdgeLabel::with_weight(6);
    if (c == 1)
        return EdgeLabel::thick();
    if (c > 1)
        return EdgeLabel::dashed(c);
    throw Error("non-Coxeter dihedral", "cos^2 of the angle is " + to_string(c));
}

EdgeLabel classify_pair(const QuadraticForm& form, const Root& ei, const Root& ej) {
    const Integer si = form.norm(ei.e), sj = form.norm(ej.e);
    if (si <= 0 || sj <= 0)
        throw Error("not a root direction", "diagram vertices need positive norm");
    const Integer p = form.inner(ei.e, ej.e);
    if (p > 0)
        throw Error("obtuse pair", "mirror normals have positive product " + p.get_str());
    return classify_invariant(make_rational(p * p, si * sj));
}

EdgeLabel CoxeterDiagram::label(std::size_t i, std::size_t j) const {
    if (i > j)
        std::swap(i, j);
    for (const auto& e : edges)
        if (e.i == i && e.j == j)
            return e.label;
    return EdgeLabel::none();
}

CoxeterDiagram build_diagram(const QuadraticForm& form, const std::vector<Root>& roots) {
    CoxeterDiagram d;
    d.vertex_count = roots.size();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            EdgeLabel l = classify_pair(form, roots[i], roots[j]);
            if (l.kind != EdgeLabel::Kind::None)
                d.edges.push_back({i, j, std::move(l)});
        }
    return d;
}

std::string emit_dot(const CoxeterDiagram& diagram) {
    std::ostringstream os;
    os << "graph coxeter {\n";
    for (std::size_t v = 0; v < diagram.vertex_count; ++v)
        os << "  v" << v << ";\n";
    for (const auto& e : diagram.edges) {
        os << "  v" << e.i << " -- v" << e.j << " [";
        switch (e.label.kind) {
        case EdgeLabel::Kind::Weight:
            os << "label=\"" << e.label.weight << "\"";
            break;
        case EdgeLabel::Kind::Thick:
            os << "label=\"inf\", penwidth=3";
            break;
        case EdgeLabel::Kind::Dashed:
            os << "label=\"" << to_string(e.label.parameter) << "\", style=dashed";
            break;
        case EdgeLabel::Kind::None:
            break;
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::json diagram_to_json(const CoxeterDiagram& diagram) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : diagram.edges) {
        nlohmann::json label;
        switch (e.label.kind) {
        case EdgeLabel::Kind::Weight:
            label = std::to_string(e.label.weight);
            break;
        case EdgeLabel::Kind::Thick:
            label = "inf";
            break;
        case EdgeLabel::Kind::Dashed:
            label = {{"dashed", to_string(e.label.parameter)}};
            break;
        case EdgeLabel::Kind::None:
            label = "2";
            break;
        }
        edges.push_back({e.i, e.j, label});
    }
    return {{"F", diagram.vertex_count}, {"edges", edges}};
}

CoxeterDiagram diagram_from_json(const nlohmann::json& j) {
    CoxeterDiagram d;
    d.vertex_count = j.at("F").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
        DiagramEdge edge{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), EdgeLabel::none()};
        const auto& l = e.at(2);
        if (l.is_object()) {
            edge.label = EdgeLabel::dashed(parse_rational(l.at("dashed").get<std::string>()));
        } else if (l.get<std::string>() == "inf") {
            edge.label = EdgeLabel::thick();
        } else {
            const int m = std::stoi(l.get<std::string>());
            edge.label = m == 2 ? EdgeLabel::none() : EdgeLabel::with_weight(m);
        }
        if (edge.i >= edge.j || edge.j >= d.vertex_count)
            throw Error("parse", "diagram edge indices out of order or range");
        d.edges.push_back(std::move(edge));
    }
    return d;
}

Rational area_gauss_bonnet(const CoxeterDiagram& diagram, const std::vector<std::size_t>& cycle) {
    if (cycle.size() < 3)
        throw Error("shape", "a polygon needs at least three sides");
    Rational angles = 0;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const std::size_t i = cycle[k], j = cycle[(k + 1) % cycle.size()];
        if (i >= diagram.vertex_count || j >= diagram.vertex_count)
            throw Error("shape", "cycle refers to a missing side");
        const EdgeLabel l = diagram.label(i, j);
        switch (l.kind) {
        case EdgeLabel::Kind::None:
            angles += make_rational(1, 2);
            break;
        case EdgeLabel::Kind::Weight:
            angles += make_rational(1, l.weight);
            break;
        case EdgeLabel::Kind::Thick:
            break;
        case EdgeLabel::Kind::Dashed:
            throw Error("not finite volume", "consecutive sides " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " are divergent");
        }
    }
    return Rational(static_cast<long>(cycle.size()) - 2) - angles;
}

} // namespace vinberg
