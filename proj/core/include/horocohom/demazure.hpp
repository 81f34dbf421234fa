#pragma once

#include "horocohom/fan.hpp"
#include "horocohom/simplicial.hpp"

#include <cstdint>
#include <map>
#include <vector>

// Graded cohomology of invariant divisors on smooth complete toric
// varieties. A character m sees the subcomplex of rays on which its
// evaluation drops strictly below the support function; the degree-m
// cohomology in degree i is the reduced cohomology of that subcomplex in
// degree i - 1. The finite set of characters with nonzero cohomology is
// found by enumerating the sign chambers of the hyperplane arrangement
// cut out by the rays.

namespace horo {

struct GradedCohomologyTable {
    int dim = 0;   // fan dimension d; every dims vector has length d + 1
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> entries;
    std::vector<std::int64_t> totals;
};

struct ToricCaps {
    int max_rays = 14;
    std::int64_t max_box_points = 100000000;   // lattice points scanned per chamber
};

// The subcomplex of rays with <m, u_rho> < -a_rho, closed inside each
// maximal cone.
SimplicialComplex negative_complex(const CompleteFan& fan, const ToricDivisor& div,
                                   const std::vector<std::int64_t>& m);

// (h^0_m, ..., h^d_m) for one character.
std::vector<std::int64_t> graded_piece(const CompleteFan& fan, const ToricDivisor& div,
                                       const std::vector<std::int64_t>& m);

// Every character with a nonzero contribution, found chamber by chamber.
// Totals are left empty; toric_cohomology fills them.
GradedCohomologyTable weight_support(const CompleteFan& fan, const ToricDivisor& div,
                                     const ToricCaps& caps = {});

// weight_support plus coordinatewise totals.
GradedCohomologyTable toric_cohomology(const CompleteFan& fan, const ToricDivisor& div,
                                       const ToricCaps& caps = {});

struct NefCount {
    bool nef = false;
    std::int64_t count = 0;   // |P_D intersect Z^d| when nef
};

// Nef test (every maximal cone's Cartier point lies in P_D) and, when nef,
// the lattice point count of P_D.
NefCount lattice_points_nef(const CompleteFan& fan, const ToricDivisor& div);

} // namespace horo
