#include "vinberg/cone.hpp"

#include <algorithm>
#include <map>

namespace vinberg {

namespace {

int sign(const Integer& x) {
    return sgn(x);
}

std::vector<std::size_t> tight_set(const std::vector<IntVector>& rows, std::size_t upto, const IntVector& v) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < upto; ++i)
        if (dot(rows[i], v) == 0)
            t.push_back(i);
    return t;
}

// Euclidean projection of v onto the orthogonal complement of span(basis).
IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis) {
    const std::size_t k = basis.size();
    RatMatrix gram(k, k);
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            gram(i, j) = dot(basis[i], basis[j]);
        rhs[i] = dot(basis[i], v);
    }
    const RatMatrix inv = inverse(gram);
    RatVector out(v.begin(), v.end());
    for (std::size_t i = 0; i < k; ++i) {
        Rational c = 0;
        for (std::size_t j = 0; j < k; ++j)
            c += inv(i, j) * rhs[j];
        for (std::size_t l = 0; l < v.size(); ++l)
            out[l] -= c * basis[i][l];
    }
    return primitive(out);
}

} // namespace

ConeDescription extreme_rays(std::size_t dim, const std::vector<IntVector>& constraints) {
    if (dim < 1)
        throw Error("shape", "cone dimension must be at least 1");
    const std::size_t d = dim + 1;
    for (const auto& a : constraints)
        if (a.size() != d)
            throw Error("shape", "constraint of length " + std::to_string(a.size()) + ", expected " +
                                     std::to_string(d));

    std::vector<IntVector> lines;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d);
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<IntVector> rays;

    for (std::size_t k = 0; k < constraints.size(); ++k) {
        const IntVector& a = constraints[k];

        auto pivot = std::find_if(lines.begin(), lines.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
        if (pivot != lines.end()) {
            // A line leaves the lineality space: project everything else onto
            // the hyperplane along it and keep its inward half as a new ray.
            const IntVector l0 = *pivot;
            lines.erase(pivot);
            const Integer t0 = dot(a, l0);
            for (auto& l : lines) {
                const Integer t = dot(a, l);
                if (t == 0)
                    continue;
                IntVector w(d);
                for (std::size_t i = 0; i < d; ++i)
                    w[i] = t0 * l[i] - t * l0[i];
                l = primitive(w);
            }
            const Integer abs_t0 = abs(t0);
            const int s0 = sign(t0);
            for (auto& r : rays) {
                const Integer t = dot(a, r);
                if (t == 0)
                    continue;
                IntVector w(d);
                for (std::size_t i = 0; i < d; ++i)
                    w[i] = abs_t0 * r[i] - s0 * t * l0[i];
                r = primitive(w);
            }
            IntVector r0 = l0;
            if (s0 > 0)
                for (auto& x : r0)
                    x = -x;
            rays.push_back(std::move(r0));
            continue;
        }

        std::vector<Integer> value(rays.size());
        bool any_plus = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i]);
            any_plus = any_plus || value[i] > 0;
        }
        if (!any_plus)
            continue;

        // Pointed part lives in dimension d - |lines|; adjacent rays share a
        // tight set of rank two less. A one-dimensional pointed part has a
        // single ray and nothing to combine.
        const bool can_pair = lines.size() + 2 <= d;
        const std::size_t target = can_pair ? d - lines.size() - 2 : 0;
        std::vector<std::vector<std::size_t>> tight(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            tight[i] = tight_set(constraints, k, rays[i]);

        std::vector<IntVector> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (value[i] <= 0)
                next.push_back(rays[i]);
        for (std::size_t p = 0; p < rays.size() && can_pair; ++p) {
            if (value[p] <= 0)
                continue;
            for (std::size_t n = 0; n < rays.size(); ++n) {
                if (value[n] >= 0)
                    continue;
                std::vector<std::size_t> common;
                std::set_intersection(tight[p].begin(), tight[p].end(), tight[n].begin(), tight[n].end(),
                                      std::back_inserter(common));
                if (common.size() < target)
                    continue;
                std::vector<IntVector> rows;
                rows.reserve(common.size());
                for (auto c : common)
                    rows.push_back(constraints[c]);
                if (rank_of_rows(rows, d) != target)
                    continue;
                IntVector w(d);
                for (std::size_t i = 0; i < d; ++i)
                    w[i] = value[p] * rays[n][i] - value[n] * rays[p][i];
                next.push_back(primitive(w));
            }
        }
        rays = std::move(next);
    }

    ConeDescription cone;
    cone.ambient = d;
    cone.constraints = constraints;
    if (!lines.empty()) {
        // Canonical lineality basis, independent of insertion order.
        if (constraints.empty()) {
            cone.lineality = lines;
            std::sort(cone.lineality.begin(), cone.lineality.end(), lex_less);
        } else {
            cone.lineality = null_space(from_rows(constraints));
        }
        // Representatives modulo lineality, made canonical by projection.
        std::vector<IntVector> projected;
        for (const auto& r : rays) {
            bool in_lineality = rank_of_rows(cone.lineality, d) == rank_of_rows([&] {
                auto rows = cone.lineality;
                rows.push_back(r);
                return rows;
            }(), d);
            if (!in_lineality)
                projected.push_back(project_out(r, cone.lineality));
        }
        rays = std::move(projected);
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    cone.rays = std::move(rays);
    for (const auto& r : cone.rays)
        cone.incidence.push_back(tight_set(constraints, constraints.size(), r));
    return cone;
}

std::set<std::size_t> facet_recovery(const ConeDescription& cone) {
    std::set<std::size_t> essential;
    for (std::size_t i = 0; i < cone.constraints.size(); ++i) {
        std::vector<IntVector> gens = cone.lineality;
        for (std::size_t r = 0; r < cone.rays.size(); ++r)
            if (std::binary_search(cone.incidence[r].begin(), cone.incidence[r].end(), i))
                gens.push_back(cone.rays[r]);
        if (rank_of_rows(gens, cone.ambient) + 1 == cone.ambient)
            essential.insert(i);
    }
    return essential;
}

const char* to_string(RayKind kind) {
    switch (kind) {
    case RayKind::Proper:
        return "proper";
    case RayKind::Ideal:
        return "ideal";
    case RayKind::Spacelike:
        return "spacelike";
    case RayKind::WrongSheet:
        return "wrong-sheet";
    }
    return "?";
}

FiniteVolumeResult finite_volume_test(const QuadraticForm& form, const std::vector<Root>& roots,
                                      const ControlVector& u0) {
    std::vector<IntVector> rows;
    rows.reserve(roots.size());
    for (const auto& r : roots)
        rows.push_back(form.covector(r.e));

    FiniteVolumeResult out;
    out.cone = extreme_rays(form.dim(), rows);
    // A nonzero lineality space already rules out finite volume; the rays
    // are still classified for reporting.
    out.report.lineality = !out.cone.pointed();
    for (std::size_t i = 0; i < out.cone.rays.size(); ++i) {
        const IntVector& v = out.cone.rays[i];
        RayInfo info{v, form.norm(v), RayKind::Spacelike, out.cone.incidence[i]};
        if (info.norm <= 0) {
            // Non-spacelike rays must lie in the closure of u0's sheet.
            if (form.inner(v, u0.vector()) > 0) {
                info.kind = RayKind::WrongSheet;
            } else if (info.norm < 0) {
                info.kind = RayKind::Proper;
                ++out.report.proper_count;
            } else {
                info.kind = RayKind::Ideal;
                ++out.report.ideal_count;
            }
        }
        if (info.kind == RayKind::Spacelike || info.kind == RayKind::WrongSheet)
            out.report.spacelike_rays.push_back(v);
        out.report.rays.push_back(std::move(info));
    }
    out.finite = !out.report.lineality && !out.cone.rays.empty() && out.report.spacelike_rays.empty();
    return out;
}

std::vector<std::size_t> polygon_cycle(const ConeDescription& cone) {
    if (cone.ambient != 3 || !cone.pointed() || cone.rays.empty())
        return {};
    // Each vertex of the polygon joins two consecutive sides.
    std::map<std::size_t, std::vector<std::size_t>> adjacent;
    for (const auto& tight : cone.incidence) {
        if (tight.size() != 2)
            return {};
        adjacent[tight[0]].push_back(tight[1]);
        adjacent[tight[1]].push_back(tight[0]);
    }
    for (const auto& [side, nb] : adjacent)
        if (nb.size() != 2)
            return {};
    std::vector<std::size_t> cycle{adjacent.begin()->first};
    std::size_t prev = cycle.front();
    std::size_t cur = adjacent.begin()->second.front();
    while (cur != cycle.front()) {
        cycle.push_back(cur);
        const auto& nb = adjacent[cur];
        const std::size_t nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        if (cycle.size() > adjacent.size())
            return {};
    }
    if (cycle.size() != adjacent.size())
        return {};
    return cycle;
}

} // namespace vinberg
