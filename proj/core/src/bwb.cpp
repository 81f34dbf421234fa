#include "horocohom/bwb.hpp"

#include "horocohom/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace horo {

BWBResult bwb_solve(const FlagBundle& bundle) {
    const auto& datum = bundle.datum;
    const auto color_set = bundle.parabolic.colors(datum.rank);
    {
        std::vector<int> keys;
        keys.reserve(bundle.color_coeffs.size());
        for (const auto& [k, v] : bundle.color_coeffs) keys.push_back(k);
        if (keys != color_set)
            throw ValidationError("flag bundle coefficients must be keyed by "
                                  "exactly the color set I = S \\ S_P");
    }

    Weight lambda{std::vector<std::int64_t>(static_cast<std::size_t>(datum.rank), 0)};
    for (const auto& [k, v] : bundle.color_coeffs)
        lambda.coords[static_cast<std::size_t>(k - 1)] = v;

    const auto sorted = to_dominant_dot(datum, lambda);
    if (sorted.singular) return {};

    BWBResult out;
    out.vanishing = false;
    out.degree = sorted.length;
    out.highest_weight = sorted.dominant;
    out.dimension = weyl_dimension(datum, sorted.dominant);
    out.word = sorted.word;

    // The sorting word must fix the positivity of every Levi simple root:
    // lambda + rho pairs to 1 against those coroots, so the word lands in
    // the minimal coset representatives. A violation is an internal bug.
    for (int j : bundle.parabolic.levi_set) {
        std::vector<std::int64_t> root(static_cast<std::size_t>(datum.rank), 0);
        root[static_cast<std::size_t>(j - 1)] = 1;
        const auto image = apply_word_to_root(datum, out.word, std::move(root));
        if (std::any_of(image.begin(), image.end(),
                        [](std::int64_t x) { return x < 0; }))
            throw std::logic_error("Borel-Weil-Bott word left the minimal "
                                   "coset representatives");
    }
    return out;
}

} // namespace horo
