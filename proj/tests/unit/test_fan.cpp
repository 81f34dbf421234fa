#include "doctest.h"

#include "corpus.hpp"

#include <horocohom/errors.hpp>
#include <horocohom/fan.hpp>

#include <algorithm>
#include <string>

using namespace horo;

namespace {

bool mentions(const std::vector<FanViolation>& vs, const std::string& needle) {
    return std::any_of(vs.begin(), vs.end(), [&](const FanViolation& v) {
        return v.message.find(needle) != std::string::npos;
    });
}

} // namespace

TEST_CASE("the whole corpus validates cleanly") {
    for (const auto& [name, fan] : corpus::full_corpus()) {
        INFO(name);
        CHECK(validate_fan(fan).empty());
        CHECK_NOTHROW(CompleteFan::checked(fan));
    }
}

TEST_CASE("the point fan is the unique valid zero-dimensional fan") {
    CHECK(validate_fan(Fan{0, {}, {{}}}).empty());
    CHECK_FALSE(validate_fan(Fan{0, {}, {}}).empty());
    CHECK_FALSE(validate_fan(Fan{0, {{}}, {{}}}).empty());
}

TEST_CASE("violations are reported with the offending data") {
    // half line only: not complete
    auto vs = validate_fan(Fan{1, {{1}}, {{0}}});
    CHECK(mentions(vs, "completeness"));

    // non-primitive ray
    vs = validate_fan(Fan{1, {{2}, {-1}}, {{0}, {1}}});
    CHECK(mentions(vs, "primitive"));

    // duplicate rays
    vs = validate_fan(Fan{2,
                          {{1, 0}, {0, 1}, {1, 0}, {0, -1}},
                          {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});
    CHECK_FALSE(vs.empty());

    // index-2 cone: determinant 2
    vs = validate_fan(Fan{2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}});
    CHECK(mentions(vs, "smoothness"));

    // a facet shared by three cones
    vs = validate_fan(Fan{2,
                          {{1, 0}, {0, 1}, {-1, -1}, {-1, 0}},
                          {{0, 1}, {1, 2}, {0, 2}, {1, 3}}});
    CHECK(mentions(vs, "completeness"));

    // cone indices out of range
    vs = validate_fan(Fan{1, {{1}, {-1}}, {{0}, {7}}});
    CHECK_FALSE(vs.empty());

    // wrong ray length
    vs = validate_fan(Fan{2, {{1, 0}, {0, 1}, {-1}}, {{0, 1}, {1, 2}, {0, 2}}});
    CHECK_FALSE(vs.empty());
}

TEST_CASE("pairwise overlapping cones are caught even when facets pair up") {
    // Five rays; the cone on rays 3 and 4 sweeps past ray 0, so it overlaps
    // two neighbors in full-dimensional sets. Every facet still lies in
    // exactly two maximal cones, so only the intersection test can object.
    Fan overlapping{2,
                    {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
    auto vs = validate_fan(overlapping);
    CHECK(mentions(vs, "intersect"));
    CHECK_THROWS_AS(CompleteFan::checked(overlapping), ValidationError);
}

TEST_CASE("point location and Cartier data") {
    auto plane = CompleteFan::checked(corpus::p2());
    CHECK(plane.dim() == 2);
    CHECK(plane.ray_count() == 3);
    CHECK(plane.cone_count() == 3);

    CHECK(plane.cone_containing({mpq_class(1), mpq_class(1)}).value() == 0);
    CHECK(plane.cone_containing({mpq_class(-5), mpq_class(-7)}).value() == 2);
    // the origin lies in every cone; the first match wins
    CHECK(plane.cone_containing({mpq_class(0), mpq_class(0)}).value() == 0);

    ToricDivisor hyperplane{{1, 0, 0}};
    CHECK(plane.cartier_point(0, hyperplane) == std::vector<std::int64_t>{-1, 0});
    CHECK(plane.cartier_point(1, hyperplane) == std::vector<std::int64_t>{0, 0});
    CHECK(plane.cartier_point(2, hyperplane) == std::vector<std::int64_t>{-1, 1});
}

TEST_CASE("support function values") {
    auto line = CompleteFan::checked(corpus::p1());
    ToricDivisor d{{2, 0}};
    CHECK(support_function_value(line, d, {mpq_class(1)}) == -2);
    CHECK(support_function_value(line, d, {mpq_class(-1)}) == 0);
    CHECK(support_function_value(line, d, {mpq_class(3)}) == -6);
    CHECK(support_function_value(line, d, {mpq_class(0)}) == 0);

    // piecewise linearity on the plane: psi(u_rho) = -a_rho and homogeneity
    auto plane = CompleteFan::checked(corpus::p2());
    ToricDivisor e{{1, -2, 3}};
    for (std::size_t r = 0; r < plane.ray_count(); ++r) {
        std::vector<mpq_class> u, u2;
        for (auto x : plane.fan().rays[r]) {
            u.emplace_back(x);
            u2.emplace_back(5 * x);
        }
        CHECK(support_function_value(plane, e, u) == -e.coeffs[r]);
        CHECK(support_function_value(plane, e, u2) == -5 * e.coeffs[r]);
    }
}
