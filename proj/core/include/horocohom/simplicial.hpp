#pragma once

#include <cstdint>
#include <vector>

// Finite abstract simplicial complexes on integer vertex labels, with exact
// reduced cohomology over the rationals.

namespace horo {

struct SimplicialComplex {
    std::vector<int> vertices;             // sorted, distinct
    std::vector<std::vector<int>> faces;   // all nonempty faces, sorted vectors,
                                           // lexicographic order, downward closed

    // Faces maximal under inclusion.
    std::vector<std::vector<int>> facets() const;

    bool empty() const { return faces.empty(); }
};

// The downward closure of the given generating faces.
SimplicialComplex closure_complex(const std::vector<std::vector<int>>& generators);

// Dimensions of reduced cohomology H~^{-1}, H~^0, ..., H~^top over Q,
// as a vector of length top + 2. The empty complex has H~^{-1} = 1 by
// convention; nonempty complexes have H~^{-1} = 0.
std::vector<std::int64_t> reduced_cohomology_dims(const SimplicialComplex& complex, int top);

} // namespace horo
