#pragma once

#include "horocohom/demazure.hpp"
#include "horocohom/fan.hpp"

#include <cstdint>
#include <vector>

// Brute-force validation path: the alternating Cech complex of an invariant
// divisor over the cover by maximal-cone affine charts. Kept deliberately
// independent of the chamber machinery; the only shared ingredients are the
// fan container and exact rank computation.

namespace horo {

// (h^0_m, ..., h^d_m) for one character, from the full alternating complex.
// The degree-m sections on a chart intersection form a line exactly when
// every common ray accepts the character, and vanish otherwise.
std::vector<std::int64_t> cech_cohomology(const CompleteFan& fan, const ToricDivisor& div,
                                          const std::vector<std::int64_t>& m,
                                          int max_charts = 16);

// Sums cech_cohomology over the box |m_i| <= box_radius; nonzero per-weight
// entries are retained. The caller is responsible for a radius that covers
// the full support.
GradedCohomologyTable oracle_total(const CompleteFan& fan, const ToricDivisor& div,
                                   std::int64_t box_radius, int max_charts = 16);

} // namespace horo
