#pragma once

#include "horocohom/bwb.hpp"
#include "horocohom/demazure.hpp"
#include "horocohom/fan.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

// The product formula: a line bundle on the total space of a toric
// fibration over a flag variety has cohomology equal to the tensor product
// of the two factors' cohomologies, with the flag degree shifting the
// fiber degrees. At most one flag degree survives, so the total profile is
// a single shifted copy of the fiber profile scaled by the flag dimension.

namespace horo {

struct HorosphericalModel {
    RootDatum datum;
    ParabolicSpec parabolic;
    Fan fan;          // fan of the toric fiber, in the cocharacter lattice of T'
};

struct HoroDivisor {
    std::map<int, std::int64_t> color_coeffs;      // 1-based simple-root index in I
    std::vector<std::int64_t> boundary_coeffs;     // aligned with the fan's rays
};

struct ToricContribution {
    int q = 0;                        // fiber degree
    std::vector<std::int64_t> m;      // fiber character
    std::int64_t dim = 0;             // fiber multiplicity h^q_m
};

struct HoroDegreeRow {
    int n = 0;
    mpz_class total{0};
    std::vector<ToricContribution> contributions;
};

struct HoroCohomologyReport {
    BWBResult flag;
    GradedCohomologyTable fiber;
    std::vector<HoroDegreeRow> degrees;   // n = 0 .. flag degree + fan dimension

    mpz_class euler() const;              // alternating sum of the totals
};

// Relabels the two coefficient families into the inputs of the two solvers.
std::pair<FlagBundle, ToricDivisor> split_divisor(const HorosphericalModel& model,
                                                  const HoroDivisor& div);

HoroCohomologyReport horo_cohomology(const HorosphericalModel& model,
                                     const HoroDivisor& div,
                                     const ToricCaps& caps = {});

struct EulerCheck {
    mpz_class chi_total{0};
    mpz_class chi_flag{0};
    std::int64_t chi_toric = 0;
    bool ok = false;
};

// Multiplicativity of the Euler characteristic across the two factors.
EulerCheck euler_check(const HorosphericalModel& model, const HoroDivisor& div,
                       const ToricCaps& caps = {});

} // namespace horo
