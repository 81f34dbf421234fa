#include "horocohom/cech.hpp"

#include "horocohom/checked.hpp"
#include "horocohom/errors.hpp"
#include "horocohom/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace horo {
namespace {

// The combinatorial shell of the cover: for every subset of charts, the
// bitmask of rays common to all of them. A character contributes a line on
// a chart intersection exactly when it satisfies <m, u> >= -a on every
// common ray, so each character reduces to the family of "active" subsets,
// which is closed under enlarging the subset.
struct AlternatingComplex {
    const CompleteFan& fan;
    const ToricDivisor& div;
    int n = 0;
    std::vector<std::uint32_t> common;

    AlternatingComplex(const CompleteFan& f, const ToricDivisor& d, int max_charts)
        : fan(f), div(d) {
        if (div.coeffs.size() != fan.ray_count())
            throw ValidationError("divisor coefficient count does not match the ray count");
        if (fan.ray_count() > 31)
            throw CapExceeded("fans with more than 31 rays are not supported");
        n = static_cast<int>(fan.cone_count());
        if (n > max_charts)
            throw CapExceeded("chart count " + std::to_string(n) +
                              " exceeds the cap of " + std::to_string(max_charts));
        std::vector<std::uint32_t> chart_mask(static_cast<std::size_t>(n), 0);
        for (std::size_t c = 0; c < fan.cone_count(); ++c)
            for (int r : fan.fan().max_cones[c])
                chart_mask[c] |= std::uint32_t{1} << r;
        common.assign(std::size_t{1} << n, 0);
        for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
            const int low = std::countr_zero(s);
            const std::uint32_t rest = s & (s - 1);
            common[s] = rest == 0 ? chart_mask[static_cast<std::size_t>(low)]
                                  : (common[rest] & chart_mask[static_cast<std::size_t>(low)]);
        }
    }

    std::uint32_t satisfied_rays(const std::vector<std::int64_t>& m) const {
        if (static_cast<int>(m.size()) != fan.dim())
            throw Error("character length does not match the fan dimension");
        std::uint32_t sat = 0;
        for (std::size_t r = 0; r < fan.ray_count(); ++r)
            if (checked_dot(m, fan.fan().rays[r]) >= checked_neg(div.coeffs[r]))
                sat |= std::uint32_t{1} << r;
        return sat;
    }

    std::vector<std::uint64_t> active_sets(std::uint32_t sat) const {
        std::vector<std::uint64_t> bits(((std::size_t{1} << n) >> 6) + 1, 0);
        for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s)
            if ((common[s] & ~sat) == 0)
                bits[s >> 6] |= std::uint64_t{1} << (s & 63);
        return bits;
    }

    std::vector<std::int64_t> dims(const std::vector<std::uint64_t>& active) const {
        auto is_active = [&](std::uint32_t s) {
            return (active[s >> 6] >> (s & 63)) & 1;
        };
        std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(n) + 1);
        std::vector<std::unordered_map<std::uint32_t, int>> index(
            static_cast<std::size_t>(n) + 1);
        for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
            if (!is_active(s)) continue;
            auto& bucket = basis[static_cast<std::size_t>(std::popcount(s))];
            index[static_cast<std::size_t>(std::popcount(s))].emplace(
                s, static_cast<int>(bucket.size()));
            bucket.push_back(s);
        }

        std::vector<std::int64_t> out(static_cast<std::size_t>(fan.dim()) + 1, 0);
        int prev_rank = 0;
        for (int p = 0; p < n; ++p) {
            const auto& src = basis[static_cast<std::size_t>(p) + 1];
            const std::int64_t dim_cp = static_cast<std::int64_t>(src.size());
            int rank = 0;
            if (p + 2 <= n && !src.empty() &&
                !basis[static_cast<std::size_t>(p) + 2].empty()) {
                const auto& dst = basis[static_cast<std::size_t>(p) + 2];
                QMatrix mat(dst.size(), std::vector<mpq_class>(src.size(), 0));
                for (std::size_t row = 0; row < dst.size(); ++row) {
                    std::uint32_t t = dst[row];
                    int j = 0;
                    for (std::uint32_t rem = t; rem != 0; rem &= rem - 1, ++j) {
                        const std::uint32_t bit = rem & (~rem + 1);
                        const std::uint32_t sub = t & ~bit;
                        const auto it = index[static_cast<std::size_t>(p) + 1].find(sub);
                        if (it == index[static_cast<std::size_t>(p) + 1].end())
                            continue;   // the smaller intersection carries no sections
                        mat[row][static_cast<std::size_t>(it->second)] =
                            (j % 2 == 0) ? 1 : -1;
                    }
                }
                rank = matrix_rank(std::move(mat));
            }
            const std::int64_t h = dim_cp - rank - prev_rank;
            prev_rank = rank;
            if (p <= fan.dim())
                out[static_cast<std::size_t>(p)] = h;
            else if (h != 0)
                throw ValidationError("Cech cohomology appears above the fan "
                                      "dimension; the fan data is inconsistent");
        }
        return out;
    }
};

} // namespace

std::vector<std::int64_t> cech_cohomology(const CompleteFan& fan, const ToricDivisor& div,
                                          const std::vector<std::int64_t>& m,
                                          int max_charts) {
    const AlternatingComplex complex(fan, div, max_charts);
    return complex.dims(complex.active_sets(complex.satisfied_rays(m)));
}

GradedCohomologyTable oracle_total(const CompleteFan& fan, const ToricDivisor& div,
                                   std::int64_t box_radius, int max_charts) {
    if (box_radius < 0)
        throw Error("box radius must be nonnegative");
    const AlternatingComplex complex(fan, div, max_charts);
    const int d = fan.dim();

    GradedCohomologyTable out;
    out.dim = d;
    out.totals.assign(static_cast<std::size_t>(d) + 1, 0);

    std::map<std::vector<std::uint64_t>, std::vector<std::int64_t>> cache;
    auto record = [&](const std::vector<std::int64_t>& m) {
        const auto active = complex.active_sets(complex.satisfied_rays(m));
        auto it = cache.find(active);
        if (it == cache.end()) it = cache.emplace(active, complex.dims(active)).first;
        const auto& dims = it->second;
        if (std::all_of(dims.begin(), dims.end(),
                        [](std::int64_t x) { return x == 0; }))
            return;
        out.entries.emplace(m, dims);
        for (std::size_t i = 0; i < dims.size(); ++i)
            out.totals[i] = checked_add(out.totals[i], dims[i]);
    };

    if (d == 0) {
        record({});
        return out;
    }
    std::vector<std::int64_t> m(static_cast<std::size_t>(d), -box_radius);
    for (;;) {
        record(m);
        int v = 0;
        while (v < d) {
            if (m[static_cast<std::size_t>(v)] < box_radius) {
                ++m[static_cast<std::size_t>(v)];
                break;
            }
            m[static_cast<std::size_t>(v)] = -box_radius;
            ++v;
        }
        if (v == d) break;
    }
    return out;
}

} // namespace horo
