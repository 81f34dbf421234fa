#include "doctest.h"

#include "corpus.hpp"

#include <horocohom/demazure.hpp>
#include <horocohom/errors.hpp>

#include <cstdint>
#include <random>
#include <vector>

using namespace horo;

namespace {

const std::vector<std::int64_t>& only_key(const GradedCohomologyTable& t) {
    REQUIRE(t.entries.size() == 1);
    return t.entries.begin()->first;
}

} // namespace

TEST_CASE("ray subcomplex selected by a character") {
    auto line = CompleteFan::checked(corpus::p1());

    auto both = negative_complex(line, ToricDivisor{{-2, 0}}, {1});
    CHECK(both.faces == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(both.facets().size() == 2);

    auto none = negative_complex(line, ToricDivisor{{0, 0}}, {0});
    CHECK(none.empty());

    auto one = negative_complex(line, ToricDivisor{{0, 0}}, {1});
    CHECK(one.faces == std::vector<std::vector<int>>{{1}});

    // on the plane, the full boundary appears for a deeply negative divisor
    auto plane = CompleteFan::checked(corpus::p2());
    auto full = negative_complex(plane, ToricDivisor{{-1, -1, -1}}, {0, 0});
    CHECK(full.faces.size() == 6);   // three vertices, three edges: a circle
}

TEST_CASE("graded pieces on the line") {
    auto line = CompleteFan::checked(corpus::p1());

    CHECK(graded_piece(line, ToricDivisor{{2, 0}}, {-1}) ==
          std::vector<std::int64_t>{1, 0});
    CHECK(graded_piece(line, ToricDivisor{{2, 0}}, {1}) ==
          std::vector<std::int64_t>{0, 0});
    CHECK(graded_piece(line, ToricDivisor{{-2, 0}}, {1}) ==
          std::vector<std::int64_t>{0, 1});
    for (std::int64_t m = -5; m <= 5; ++m)
        CHECK(graded_piece(line, ToricDivisor{{-1, 0}}, {m}) ==
              std::vector<std::int64_t>{0, 0});
}

TEST_CASE("weight support on the line") {
    auto line = CompleteFan::checked(corpus::p1());

    auto pos = toric_cohomology(line, ToricDivisor{{2, 0}});
    CHECK(pos.totals == std::vector<std::int64_t>{3, 0});
    CHECK(pos.entries.size() == 3);
    for (std::int64_t m = -2; m <= 0; ++m)
        CHECK(pos.entries.at({m}) == std::vector<std::int64_t>{1, 0});

    auto neg = toric_cohomology(line, ToricDivisor{{-2, 0}});
    CHECK(neg.totals == std::vector<std::int64_t>{0, 1});
    CHECK(only_key(neg) == std::vector<std::int64_t>{1});
}

TEST_CASE("trivial divisor has exactly the origin section") {
    for (const auto& [name, fan] : corpus::full_corpus()) {
        INFO(name);
        auto complete = CompleteFan::checked(fan);
        auto t = toric_cohomology(complete,
                                  ToricDivisor{std::vector<std::int64_t>(fan.rays.size(), 0)});
        CHECK(t.totals[0] == 1);
        for (std::size_t i = 1; i < t.totals.size(); ++i) CHECK(t.totals[i] == 0);
        CHECK(only_key(t) == std::vector<std::int64_t>(fan.dim, 0));
    }
}

TEST_CASE("plane twists") {
    auto plane = CompleteFan::checked(corpus::p2());

    auto canonical = toric_cohomology(plane, ToricDivisor{{-1, -1, -1}});
    CHECK(canonical.totals == std::vector<std::int64_t>{0, 0, 1});
    CHECK(only_key(canonical) == std::vector<std::int64_t>{0, 0});

    auto canonical2 = toric_cohomology(plane, ToricDivisor{{-3, 0, 0}});
    CHECK(canonical2.totals == std::vector<std::int64_t>{0, 0, 1});
    CHECK(only_key(canonical2) == std::vector<std::int64_t>{2, -1});

    auto hyperplane = toric_cohomology(plane, ToricDivisor{{1, 0, 0}});
    CHECK(hyperplane.totals == std::vector<std::int64_t>{3, 0, 0});
    CHECK(hyperplane.entries.count({0, 0}) == 1);
    CHECK(hyperplane.entries.count({-1, 0}) == 1);
    CHECK(hyperplane.entries.count({-1, 1}) == 1);
}

TEST_CASE("product of two lines") {
    auto quadric = CompleteFan::checked(corpus::p1xp1());
    auto t = toric_cohomology(quadric, ToricDivisor{{-2, -2, 0, 0}});
    CHECK(t.totals == std::vector<std::int64_t>{0, 0, 1});
    CHECK(only_key(t) == std::vector<std::int64_t>{1, 1});

    // mixed signs put everything in the middle degree
    auto mixed = toric_cohomology(quadric, ToricDivisor{{2, -2, 0, 0}});
    CHECK(mixed.totals == std::vector<std::int64_t>{0, 3, 0});
}

TEST_CASE("divisor and caps validation") {
    auto plane = CompleteFan::checked(corpus::p2());
    CHECK_THROWS_AS(toric_cohomology(plane, ToricDivisor{{1, 0}}), ValidationError);
    ToricCaps tight;
    tight.max_rays = 2;
    CHECK_THROWS_AS(toric_cohomology(plane, ToricDivisor{{1, 0, 0}}, tight), CapExceeded);
}

TEST_CASE("nef detection and lattice point counts") {
    auto line = CompleteFan::checked(corpus::p1());
    auto n = lattice_points_nef(line, ToricDivisor{{5, 0}});
    CHECK(n.nef);
    CHECK(n.count == 6);
    CHECK_FALSE(lattice_points_nef(line, ToricDivisor{{-1, 0}}).nef);

    auto plane = CompleteFan::checked(corpus::p2());
    auto h = lattice_points_nef(plane, ToricDivisor{{1, 0, 0}});
    CHECK(h.nef);
    CHECK(h.count == 3);
    CHECK_FALSE(lattice_points_nef(plane, ToricDivisor{{-1, 0, 0}}).nef);

    auto ruled = CompleteFan::checked(corpus::hirzebruch(2));
    CHECK_FALSE(lattice_points_nef(ruled, ToricDivisor{{0, 1, 0, 0}}).nef);
    auto section = lattice_points_nef(ruled, ToricDivisor{{0, 0, 0, 1}});
    CHECK(section.nef);
    CHECK(section.count == 4);
    CHECK(toric_cohomology(ruled, ToricDivisor{{0, 0, 0, 1}}).totals ==
          std::vector<std::int64_t>{4, 0, 0});

    for (const auto& [name, fan] : corpus::full_corpus()) {
        INFO(name);
        auto complete = CompleteFan::checked(fan);
        auto zero = lattice_points_nef(
            complete, ToricDivisor{std::vector<std::int64_t>(fan.rays.size(), 0)});
        CHECK(zero.nef);
        CHECK(zero.count == 1);
    }
}

TEST_CASE("nef divisors have only global sections, and as many as lattice points") {
    for (const auto& [name, fan] : corpus::full_corpus()) {
        if (fan.rays.size() > 4) continue;   // keep the sweep quick
        INFO(name);
        auto complete = CompleteFan::checked(fan);
        for (const auto& div : corpus::divisor_sweep(fan.rays.size(), 2, 700)) {
            auto n = lattice_points_nef(complete, div);
            if (!n.nef) continue;
            auto t = toric_cohomology(complete, div);
            CHECK(t.totals[0] == n.count);
            for (std::size_t i = 1; i < t.totals.size(); ++i) CHECK(t.totals[i] == 0);
        }
    }
}

TEST_CASE("linearly equivalent divisors differ by a translated support") {
    auto line = CompleteFan::checked(corpus::p1());
    auto before = toric_cohomology(line, ToricDivisor{{-2, 0}});
    // adding the divisor of the character 3 shifts the support by -3
    auto after = toric_cohomology(line, ToricDivisor{{-2 + 3, 0 - 3}});
    CHECK(only_key(before) == std::vector<std::int64_t>{1});
    CHECK(only_key(after) == std::vector<std::int64_t>{-2});
    CHECK(before.totals == after.totals);

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    std::uniform_int_distribution<std::int64_t> shift(-4, 4);
    for (const auto& [name, fan] : corpus::full_corpus()) {
        INFO(name);
        auto complete = CompleteFan::checked(fan);
        for (int trial = 0; trial < 8; ++trial) {
            ToricDivisor d{std::vector<std::int64_t>(fan.rays.size())};
            for (auto& a : d.coeffs) a = coeff(rng);
            std::vector<std::int64_t> m0(fan.dim);
            for (auto& x : m0) x = shift(rng);

            ToricDivisor shifted = d;
            for (std::size_t r = 0; r < fan.rays.size(); ++r)
                for (int k = 0; k < fan.dim; ++k)
                    shifted.coeffs[r] += m0[k] * fan.rays[r][k];

            auto t0 = toric_cohomology(complete, d);
            auto t1 = toric_cohomology(complete, shifted);
            CHECK(t0.totals == t1.totals);
            REQUIRE(t0.entries.size() == t1.entries.size());
            for (const auto& [m, dims] : t0.entries) {
                std::vector<std::int64_t> translated(m.size());
                for (std::size_t k = 0; k < m.size(); ++k) translated[k] = m[k] - m0[k];
                auto it = t1.entries.find(translated);
                REQUIRE(it != t1.entries.end());
                CHECK(it->second == dims);
            }
        }
    }
}

TEST_CASE("Serre duality on small sweeps") {
    for (const auto& [name, fan] : corpus::full_corpus()) {
        if (fan.rays.size() > 4) continue;
        INFO(name);
        auto complete = CompleteFan::checked(fan);
        const int d = fan.dim;
        for (const auto& div : corpus::divisor_sweep(fan.rays.size(), 2, 700)) {
            ToricDivisor dual{std::vector<std::int64_t>(fan.rays.size())};
            for (std::size_t r = 0; r < dual.coeffs.size(); ++r)
                dual.coeffs[r] = -1 - div.coeffs[r];
            auto a = toric_cohomology(complete, div).totals;
            auto b = toric_cohomology(complete, dual).totals;
            for (int i = 0; i <= d; ++i) CHECK(a[i] == b[d - i]);
        }
    }
}
