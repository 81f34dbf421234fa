#pragma once

#include "horocohom/root_system.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>

// Line-bundle cohomology on a flag variety G/P. The bundle is given by one
// integer per color (simple root outside the Levi set); at most one
// cohomological degree survives, located by sorting the shifted weight into
// the dominant chamber.

namespace horo {

struct FlagBundle {
    RootDatum datum;
    ParabolicSpec parabolic;
    std::map<int, std::int64_t> color_coeffs;   // 1-based simple-root index -> d_alpha
};

struct BWBResult {
    bool vanishing = true;
    int degree = 0;            // l(w); meaningful only when not vanishing
    Weight highest_weight;     // dominant mu = w * lambda under the dot action;
                               // the cohomology itself is the dual of V_mu
    mpz_class dimension{0};
    WeylWord word;
};

BWBResult bwb_solve(const FlagBundle& bundle);

} // namespace horo
