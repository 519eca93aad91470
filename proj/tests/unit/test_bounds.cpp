#include "support.hpp"

#include "vinberg/bounds.hpp"

#include <boost/math/constants/constants.hpp>
#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace vinberg;

namespace {

const Real pi = boost::math::constants::pi<Real>();

double to_d(const Real& x) { return x.convert_to<double>(); }

} // namespace

TEST_CASE("ball volume closed forms and quadrature") {
    CHECK(to_d(ball_volume(2, Real(1))) == doctest::Approx(2 * 3.14159265358979 * (std::cosh(1.0) - 1)).epsilon(1e-12));
    CHECK(to_d(ball_volume(2, Real(1))) == doctest::Approx(static_cast<double>(oracle::ball_volume(2, 1.0L))).epsilon(1e-10));
    const Real r("1e-4");
    CHECK(to_d(ball_volume(3, r) / (Real(4) / 3 * pi * r * r * r)) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(to_d(ball_volume(2, Real("1e-30"))) < 1e-50);
    CHECK_THROWS_AS(ball_volume(2, Real(0)), Error);
    CHECK_THROWS_AS(ball_volume(1, Real(1)), Error);
    for (int n = 2; n <= 7; ++n)
        for (double rr : {0.1, 0.7, 1.5, 3.0}) {
            CAPTURE(n);
            CAPTURE(rr);
            const double lib = to_d(ball_volume(n, Real(rr)));
            const double ref = static_cast<double>(oracle::ball_volume(n, rr));
            CHECK(std::abs(lib - ref) / ref < 1e-10);
        }
}

TEST_CASE("minimal separation") {
    ConstantsRegistry reg(2);
    reg.set("margulis", "0.1", "test");
    reg.set("dobrowolski", "0.05", "test");
    CHECK(to_d(min_separation(2, 1, reg)) == doctest::Approx(0.05));
    reg.set_absent("dobrowolski", "test");
    CHECK_THROWS_WITH_AS(min_separation(2, 1, reg), doctest::Contains("dobrowolski missing"), Error);
}

TEST_CASE("dobrowolski default shape") {
    // (log log d / log d)^3 peaks at d = e^e, so it decreases only from 16 on.
    for (unsigned deg = 3; deg <= 50; ++deg)
        CHECK(dobrowolski_default(deg, Real(1)) > 0);
    for (unsigned deg = 4; deg <= 15; ++deg)
        CHECK(dobrowolski_default(deg, Real(1)) > dobrowolski_default(deg - 1, Real(1)));
    for (unsigned deg = 17; deg <= 50; ++deg)
        CHECK(dobrowolski_default(deg, Real(1)) < dobrowolski_default(deg - 1, Real(1)));
    CHECK(dobrowolski_default(20, Real(2)) == 2 * dobrowolski_default(20, Real(1)));
    CHECK_THROWS_AS(dobrowolski_default(2, Real(1)), Error);
}

TEST_CASE("finite subgroup orders") {
    ConstantsRegistry reg(2);
    reg.set("m_n", "1", "test");
    CHECK(max_finite_subgroup_order(2, 1, reg) == 1);
    CHECK(max_finite_subgroup_order(5, 1, reg) == 1);
    reg.set("m_n", "2", "test");
    CHECK(max_finite_subgroup_order(2, 2, reg) == 128);
    CHECK(max_finite_subgroup_order(2, 3, reg) > max_finite_subgroup_order(2, 2, reg));
    ConstantsRegistry empty(2);
    CHECK_THROWS_AS(max_finite_subgroup_order(2, 1, empty), Error);
}

TEST_CASE("toy chain") {
    const auto reg = toy_registry();
    const auto b = facet_upper_bound(2, 1, Real(10), reg);
    CHECK(to_d(b.ball) == doctest::Approx(2 * 3.14159265358979 * (std::sqrt(2.0) - 1)).epsilon(1e-12));
    CHECK(to_d(b.proper_vertices) == doctest::Approx(3.8420).epsilon(1e-4));
    CHECK(to_d(b.ideal_vertices) == doctest::Approx(10.0));
    CHECK(b.facets == 13);
    CHECK(recompute_facets(b) == b.facets);
    const auto b2 = facet_upper_bound(2, 1, Real(20), reg);
    CHECK(to_d(b2.vertices) == doctest::Approx(2 * to_d(b.vertices)).epsilon(1e-30));
    CHECK(facet_upper_bound(2, 1, Real("1e-30"), reg).facets == 0);
    CHECK(facet_upper_bound(2, 1, Real(0), reg).facets == 0);
    CHECK_THROWS_AS(facet_upper_bound(2, 1, Real(-1), reg), Error);
}

TEST_CASE("missing constants are listed together") {
    ConstantsRegistry reg(2);
    reg.set("margulis", "1", "test");
    try {
        facet_upper_bound(2, 1, Real(1), reg);
        FAIL("expected an error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        for (const char* name : {"dobrowolski", "m_n", "delta", "bieberbach"})
            CHECK(msg.find(name) != std::string::npos);
        CHECK(msg.find("margulis") == std::string::npos);
    }
}

TEST_CASE("rank lower bound") {
    auto reg = toy_registry();
    CHECK(rank_lower_bound(2, pi / 4, reg) == 1);
    CHECK(rank_lower_bound(2, Real("1e-30"), reg) == 1);
    CHECK(rank_lower_bound(2, Real(0), reg) == 0);
    CHECK(rank_lower_bound(2, pi * 3, reg) == 3);
    CHECK(rank_lower_bound(2, pi * Real("3.5"), reg) == 4);
    reg.set_absent("omega", "test");
    CHECK_THROWS_AS(rank_lower_bound(2, Real(1), reg), Error);
}

TEST_CASE("auto cap") {
    auto reg = toy_registry();
    CHECK_FALSE(auto_facet_cap(2, 1, reg).has_value());
    reg.set("covolume_cap", "10", "test");
    const auto cap = auto_facet_cap(2, 1, reg);
    REQUIRE(cap.has_value());
    CHECK(cap->facets == facet_upper_bound(2, 1, Real(10), reg).facets);
    reg.set("covolume_cap", "40", "test");
    CHECK(auto_facet_cap(2, 1, reg)->facets >= cap->facets);
}

TEST_CASE("conservative rounding never undercounts") {
    CHECK(conservative_floor(Real(13), Real(1)) == 13);
    CHECK(conservative_floor(Real(13) - Real("1e-30"), Real(1)) == 13);
    CHECK(conservative_floor(Real("12.5"), Real(1)) == 12);
    CHECK(conservative_ceil(Real(3) + Real("1e-30")) == 3);
    CHECK(conservative_ceil(Real("2.5")) == 3);
}

TEST_CASE("registry validation and serialization") {
    ConstantsRegistry reg(2, "test");
    CHECK_THROWS_AS(reg.set("margulis", "-1", "x"), Error);
    CHECK_THROWS_AS(reg.set("margulis", "0", "x"), Error);
    CHECK_THROWS_AS(reg.set("margulis", "abc", "x"), Error);
    CHECK_THROWS_AS(reg.set("bieberbach", "1.5", "x"), Error);
    CHECK_THROWS_AS(reg.set("unknown", "1", "x"), Error);
    CHECK_THROWS_WITH_AS(reg.get("margulis"), doctest::Contains("margulis missing"), Error);
    for (std::size_t n : {2u, 3u}) {
        const auto d = default_registry(n);
        const auto back = ConstantsRegistry::from_json(d.to_json());
        CHECK(back.to_json() == d.to_json());
        CHECK(back.digest() == d.digest());
        CHECK_FALSE(d.has("covolume_cap"));
        for (const auto& [name, entry] : d.entries())
            CHECK_FALSE(entry.provenance.empty());
    }
    CHECK(default_registry(2).digest() != default_registry(3).digest());
    CHECK_THROWS_AS(default_registry(4), Error);
}

TEST_CASE("default registries are consistent with the facet cap") {
    for (std::size_t n : {2u, 3u}) {
        const auto reg = default_registry(n);
        for (double v : {0.1, 0.785, 1.0, 5.0, 100.0}) {
            CAPTURE(v);
            CHECK(rank_lower_bound(n, Real(v), reg) <= facet_upper_bound(n, 1, Real(v), reg).facets);
        }
    }
}
