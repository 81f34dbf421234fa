#include "horocohom/demazure.hpp"

#include "horocohom/checked.hpp"
#include "horocohom/errors.hpp"
#include "horocohom/lp.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace horo {
namespace {

using Mask = std::uint32_t;

void check_divisor(const CompleteFan& fan, const ToricDivisor& div) {
    if (div.coeffs.size() != fan.ray_count())
        throw ValidationError("divisor coefficient count does not match the ray count");
    if (fan.ray_count() > 31)
        throw CapExceeded("fans with more than 31 rays are not supported");
}

// Bit r set iff ray r satisfies <m, u_r> < -a_r.
Mask qualifying_mask(const CompleteFan& fan, const ToricDivisor& div,
                     const std::vector<std::int64_t>& m) {
    if (static_cast<int>(m.size()) != fan.dim())
        throw Error("character length does not match the fan dimension");
    Mask q = 0;
    for (std::size_t r = 0; r < fan.ray_count(); ++r)
        if (checked_dot(m, fan.fan().rays[r]) < checked_neg(div.coeffs[r]))
            q |= Mask{1} << r;
    return q;
}

SimplicialComplex complex_from_mask(const CompleteFan& fan, Mask q) {
    std::vector<std::vector<int>> gens;
    for (const auto& cone : fan.fan().max_cones) {
        std::vector<int> qual;
        for (int r : cone)
            if (q & (Mask{1} << r)) qual.push_back(r);
        if (!qual.empty()) gens.push_back(std::move(qual));
    }
    return closure_complex(gens);
}

using DimCache = std::unordered_map<Mask, std::vector<std::int64_t>>;

const std::vector<std::int64_t>& dims_for_mask(const CompleteFan& fan, Mask q,
                                               DimCache& cache) {
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, reduced_cohomology_dims(complex_from_mask(fan, q),
                                                      fan.dim() - 1))
                 .first;
    return it->second;
}

std::int64_t mpq_ceil_i64(const mpq_class& q) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p())
        throw OverflowError("chamber bound exceeds 64 bits");
    return z.get_si();
}

std::int64_t mpq_floor_i64(const mpq_class& q) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!z.fits_slong_p())
        throw OverflowError("chamber bound exceeds 64 bits");
    return z.get_si();
}

// Depth-first walk over the sign patterns of the arrangement
// {<m, u_rho> = -a_rho}, pruning unrealizable prefixes by LP feasibility.
// A full pattern is one chamber (walls glued to the non-qualifying side);
// its lattice points all share one cohomology vector.
class ChamberEnumerator {
public:
    ChamberEnumerator(const CompleteFan& fan, const ToricDivisor& div,
                      const ToricCaps& caps)
        : fan_(fan), div_(div), caps_(caps) {}

    GradedCohomologyTable run() {
        GradedCohomologyTable out;
        out.dim = fan_.dim();
        if (static_cast<int>(fan_.ray_count()) > caps_.max_rays)
            throw CapExceeded("ray count " + std::to_string(fan_.ray_count()) +
                              " exceeds the configured cap of " +
                              std::to_string(caps_.max_rays));
        out_ = &out;
        if (fan_.dim() == 0) {
            // M = Z^0: the single character is the empty vector.
            const auto& dims = dims_for_mask(fan_, 0, cache_);
            out.entries.emplace(std::vector<std::int64_t>{}, dims);
            return out;
        }
        recurse(0, 0);
        return out;
    }

private:
    void recurse(std::size_t ray, Mask q) {
        if (!lp_feasible(active_, fan_.dim())) return;
        if (ray == fan_.ray_count()) {
            leaf(q);
            return;
        }
        const auto& u = fan_.fan().rays[ray];
        const std::int64_t a = div_.coeffs[ray];

        active_.push_back(less_than(u, checked_neg(a)));
        recurse(ray + 1, q | (Mask{1} << ray));
        active_.pop_back();

        std::vector<std::int64_t> neg(u.size());
        for (std::size_t k = 0; k < u.size(); ++k) neg[k] = checked_neg(u[k]);
        active_.push_back(less_equal(std::move(neg), a));
        recurse(ray + 1, q);
        active_.pop_back();
    }

    void leaf(Mask q) {
        const auto& dims = dims_for_mask(fan_, q, cache_);
        if (std::all_of(dims.begin(), dims.end(),
                        [](std::int64_t x) { return x == 0; }))
            return;

        const int d = fan_.dim();
        std::vector<std::int64_t> lo(d), hi(d);
        __int128 volume = 1;
        for (int v = 0; v < d; ++v) {
            const auto range = lp_variable_range(active_, d, v);
            if (!range.feasible) return;
            if (!range.lower || !range.upper)
                throw ValidationError(
                    "a chamber with nonzero cohomology is unbounded: "
                    "non-complete or inconsistent fan");
            lo[v] = mpq_ceil_i64(*range.lower);
            hi[v] = mpq_floor_i64(*range.upper);
            if (lo[v] > hi[v]) return;
            volume *= static_cast<__int128>(hi[v] - lo[v] + 1);
            if (volume > caps_.max_box_points)
                throw CapExceeded("chamber bounding box exceeds the point cap");
        }

        // Sweep the box; the exact sign-pattern test filters out points of
        // neighboring chambers that the box may overlap.
        std::vector<std::int64_t> m = lo;
        for (;;) {
            if (qualifying_mask(fan_, div_, m) == q)
                out_->entries.emplace(m, dims);
            int v = 0;
            while (v < d) {
                if (m[v] < hi[v]) {
                    ++m[v];
                    break;
                }
                m[v] = lo[v];
                ++v;
            }
            if (v == d) break;
        }
    }

    const CompleteFan& fan_;
    const ToricDivisor& div_;
    const ToricCaps& caps_;
    std::vector<LinearConstraint> active_;
    DimCache cache_;
    GradedCohomologyTable* out_ = nullptr;
};

} // namespace

SimplicialComplex negative_complex(const CompleteFan& fan, const ToricDivisor& div,
                                   const std::vector<std::int64_t>& m) {
    check_divisor(fan, div);
    return complex_from_mask(fan, qualifying_mask(fan, div, m));
}

std::vector<std::int64_t> graded_piece(const CompleteFan& fan, const ToricDivisor& div,
                                       const std::vector<std::int64_t>& m) {
    check_divisor(fan, div);
    DimCache cache;
    return dims_for_mask(fan, qualifying_mask(fan, div, m), cache);
}

GradedCohomologyTable weight_support(const CompleteFan& fan, const ToricDivisor& div,
                                     const ToricCaps& caps) {
    check_divisor(fan, div);
    return ChamberEnumerator(fan, div, caps).run();
}

GradedCohomologyTable toric_cohomology(const CompleteFan& fan, const ToricDivisor& div,
                                       const ToricCaps& caps) {
    auto table = weight_support(fan, div, caps);
    table.totals.assign(static_cast<std::size_t>(table.dim) + 1, 0);
    for (const auto& [m, dims] : table.entries)
        for (std::size_t i = 0; i < dims.size(); ++i)
            table.totals[i] = checked_add(table.totals[i], dims[i]);
    return table;
}

NefCount lattice_points_nef(const CompleteFan& fan, const ToricDivisor& div) {
    check_divisor(fan, div);
    const int d = fan.dim();

    auto in_polytope = [&](const std::vector<std::int64_t>& m) {
        for (std::size_t r = 0; r < fan.ray_count(); ++r)
            if (checked_dot(m, fan.fan().rays[r]) < checked_neg(div.coeffs[r]))
                return false;
        return true;
    };

    std::vector<std::vector<std::int64_t>> corners;
    corners.reserve(fan.cone_count());
    for (std::size_t c = 0; c < fan.cone_count(); ++c)
        corners.push_back(fan.cartier_point(static_cast<int>(c), div));
    for (const auto& corner : corners)
        if (!in_polytope(corner)) return {false, 0};

    if (d == 0) return {true, 1};

    // Nef means P_D is the convex hull of the corners, so their coordinate
    // ranges bound the polytope.
    std::vector<std::int64_t> lo(d), hi(d);
    for (int v = 0; v < d; ++v) {
        lo[v] = hi[v] = corners[0][v];
        for (const auto& corner : corners) {
            lo[v] = std::min(lo[v], corner[v]);
            hi[v] = std::max(hi[v], corner[v]);
        }
    }
    __int128 volume = 1;
    for (int v = 0; v < d; ++v) {
        volume *= static_cast<__int128>(hi[v] - lo[v] + 1);
        if (volume > 100000000)
            throw CapExceeded("polytope bounding box exceeds the point cap");
    }

    std::int64_t count = 0;
    std::vector<std::int64_t> m = lo;
    for (;;) {
        if (in_polytope(m)) ++count;
        int v = 0;
        while (v < d) {
            if (m[v] < hi[v]) {
                ++m[v];
                break;
            }
            m[v] = lo[v];
            ++v;
        }
        if (v == d) break;
    }
    return {true, count};
}

} // namespace horo
