#pragma once

#include "vinberg/forms.hpp"
#include "vinberg/roots.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace vinberg {

/// Generator description of the cone {x : a_i . x <= 0 for all i}.
///
/// Rays are primitive integer vectors pointing into the cone, sorted
/// lexicographically. `incidence[r]` lists the constraint indices tight at
/// ray r. A non-pointed cone also carries a basis of its lineality space.
struct ConeDescription {
    std::size_t ambient = 0;
    std::vector<IntVector> constraints;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
    std::vector<std::vector<std::size_t>> incidence;

    bool pointed() const noexcept { return lineality.empty(); }
};

// Incremental double description over Z^{dim+1}. Adjacency of a ray pair is
// decided by the exact rank of their common tight constraints.
ConeDescription extreme_rays(std::size_t dim, const std::vector<IntVector>& constraints);

// Indices of constraints supporting a facet: their tight generators span a
// hyperplane.
std::set<std::size_t> facet_recovery(const ConeDescription& cone);

enum class RayKind { Proper, Ideal, Spacelike, WrongSheet };

const char* to_string(RayKind kind);

struct RayInfo {
    IntVector v;
    Integer norm;
    RayKind kind;
    std::vector<std::size_t> tight;
};

struct VertexReport {
    std::size_t proper_count = 0;
    std::size_t ideal_count = 0;
    std::vector<IntVector> spacelike_rays; // includes rays on the wrong sheet
    bool lineality = false;
    std::vector<RayInfo> rays;
};

struct FiniteVolumeResult {
    bool finite = false;
    VertexReport report;
    ConeDescription cone;
};

// Cone cut out by (e_i, x) <= 0; finite volume iff the cone is pointed and
// every extreme ray v has (v,v) <= 0 on the sheet of u0.
FiniteVolumeResult finite_volume_test(const QuadraticForm& form, const std::vector<Root>& roots,
                                      const ControlVector& u0);

// Cyclic order of the constraints around a pointed 2-dimensional polygon
// (ambient 3), read off from ray incidences. Empty if the incidence graph is
// not a single cycle through every essential constraint.
std::vector<std::size_t> polygon_cycle(const ConeDescription& cone);

} // namespace vinberg
