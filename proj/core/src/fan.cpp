#include "horocohom/fan.hpp"

#include "horocohom/checked.hpp"
#include "horocohom/errors.hpp"
#include "horocohom/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace horo {
namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (int x : v) {
        if (!out.empty()) out += ",";
        out += std::to_string(x);
    }
    return out;
}

std::int64_t gcd_abs(const std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

// Columns of the matrix are the rays of the cone.
ZMatrix ray_matrix(const Fan& fan, const std::vector<int>& cone) {
    ZMatrix m(fan.dim, std::vector<std::int64_t>(cone.size()));
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (int k = 0; k < fan.dim; ++k)
            m[k][i] = fan.rays[cone[i]][k];
    return m;
}

std::vector<int> sorted_cone(const std::vector<int>& cone) {
    auto c = cone;
    std::sort(c.begin(), c.end());
    return c;
}

// The constraints putting v inside cone c: every coordinate of inv * v
// is nonnegative, i.e. -row . v <= 0.
void append_membership(std::vector<LinearConstraint>& cs, const ZMatrix& inv) {
    for (const auto& row : inv) {
        std::vector<std::int64_t> neg(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) neg[k] = checked_neg(row[k]);
        cs.push_back(less_equal(std::move(neg), 0));
    }
}

} // namespace

std::vector<FanViolation> validate_fan(const Fan& fan) {
    std::vector<FanViolation> out;
    auto add = [&](const std::string& m) { out.push_back({m}); };

    if (fan.dim < 0) {
        add("dimension must be nonnegative");
        return out;
    }

    bool shape_ok = true;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (static_cast<int>(fan.rays[i].size()) != fan.dim) {
            add("ray " + std::to_string(i) + " has length " +
                std::to_string(fan.rays[i].size()) + ", expected " +
                std::to_string(fan.dim));
            shape_ok = false;
        }
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
        for (int r : fan.max_cones[c])
            if (r < 0 || r >= static_cast<int>(fan.rays.size())) {
                add("cone " + std::to_string(c) + " references ray " +
                    std::to_string(r) + ", which does not exist");
                shape_ok = false;
            }
    if (!shape_ok) return out;

    if (fan.dim == 0) {
        if (!fan.rays.empty())
            add("a zero-dimensional fan must have no rays");
        if (fan.max_cones.size() != 1 || !fan.max_cones[0].empty())
            add("a zero-dimensional fan must consist of exactly one empty cone");
        return out;
    }

    // Primitivity and distinctness of rays.
    std::map<std::vector<std::int64_t>, std::size_t> first_seen;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const auto g = gcd_abs(fan.rays[i]);
        if (g == 0)
            add("ray " + std::to_string(i) + " is the zero vector");
        else if (g != 1)
            add("ray " + std::to_string(i) + " is not primitive (gcd " +
                std::to_string(g) + ")");
        auto [it, fresh] = first_seen.emplace(fan.rays[i], i);
        if (!fresh)
            add("ray " + std::to_string(i) + " duplicates ray " +
                std::to_string(it->second));
    }

    // Repetition inside a cone.
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        auto s = sorted_cone(fan.max_cones[c]);
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            add("cone " + std::to_string(c) + " repeats a ray index");
    }
    if (!out.empty()) return out;

    // Smoothness: d rays per maximal cone, determinant +-1.
    bool smooth = true;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        if (static_cast<int>(fan.max_cones[c].size()) != fan.dim) {
            add("smoothness violation: cone " + std::to_string(c) + " has " +
                std::to_string(fan.max_cones[c].size()) + " rays, expected " +
                std::to_string(fan.dim));
            smooth = false;
            continue;
        }
        const auto det = int_determinant(ray_matrix(fan, fan.max_cones[c]));
        if (det != 1 && det != -1) {
            add("smoothness violation: cone " + std::to_string(c) +
                " has ray determinant " + det.get_str());
            smooth = false;
        }
    }

    // Completeness proxy.
    if (fan.dim == 1) {
        bool ok = fan.rays.size() == 2 && fan.max_cones.size() == 2;
        if (ok) {
            std::set<std::int64_t> vals{fan.rays[0][0], fan.rays[1][0]};
            std::set<int> covered;
            for (const auto& c : fan.max_cones)
                for (int r : c) covered.insert(r);
            ok = vals == std::set<std::int64_t>{-1, 1} && covered.size() == 2;
        }
        if (!ok)
            add("completeness violation: a one-dimensional complete fan is "
                "exactly the rays +1 and -1 with their two cones");
    } else {
        std::map<std::vector<int>, int> facet_count;
        for (const auto& cone : fan.max_cones) {
            const auto s = sorted_cone(cone);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                auto facet = s;
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
                ++facet_count[facet];
            }
        }
        for (const auto& [facet, count] : facet_count)
            if (count != 2)
                add("completeness violation: facet {" + join_ints(facet) +
                    "} lies in " + std::to_string(count) +
                    " maximal cones, expected 2");
    }

    if (!smooth) return out;

    // The LP-based checks need the integral cone inverses.
    std::vector<ZMatrix> inv;
    inv.reserve(fan.max_cones.size());
    for (const auto& cone : fan.max_cones)
        inv.push_back(unimodular_inverse(ray_matrix(fan, cone)));

    // Intersection in faces: no point of cone a and cone b may have a
    // strictly positive coordinate on a ray not shared by both.
    for (std::size_t a = 0; a < fan.max_cones.size(); ++a) {
        for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
            const auto sa = sorted_cone(fan.max_cones[a]);
            const auto sb = sorted_cone(fan.max_cones[b]);
            std::vector<int> common;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(common));
            bool bad = false;
            for (int side = 0; side < 2 && !bad; ++side) {
                const auto& cone = side == 0 ? fan.max_cones[a] : fan.max_cones[b];
                const auto& inv_side = side == 0 ? inv[a] : inv[b];
                for (std::size_t pos = 0; pos < cone.size() && !bad; ++pos) {
                    if (std::binary_search(common.begin(), common.end(), cone[pos]))
                        continue;
                    std::vector<LinearConstraint> cs;
                    append_membership(cs, inv[a]);
                    append_membership(cs, inv[b]);
                    std::vector<std::int64_t> row(inv_side[pos]);
                    for (auto& x : row) x = checked_neg(x);
                    cs.push_back(less_than(std::move(row), 0));
                    if (lp_feasible(cs, fan.dim)) bad = true;
                }
            }
            if (bad)
                add("cones " + std::to_string(a) + " and " + std::to_string(b) +
                    " intersect outside the face spanned by their common rays");
        }
    }

    // Randomized covering diagnostic: deterministic pseudorandom rational
    // points must all lie in some maximal cone.
    std::mt19937_64 rng(0x5eedf00dULL);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 41);
    int misses = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<mpq_class> v(fan.dim);
        for (int k = 0; k < fan.dim; ++k) {
            v[k] = mpq_class(static_cast<long>(num(rng)),
                             static_cast<long>(den(rng)));
            v[k].canonicalize();
        }
        bool hit = false;
        for (std::size_t c = 0; c < fan.max_cones.size() && !hit; ++c) {
            hit = true;
            for (const auto& row : inv[c]) {
                mpq_class coord = 0;
                for (int k = 0; k < fan.dim; ++k)
                    coord += mpq_class(static_cast<long>(row[k])) * v[k];
                if (coord < 0) {
                    hit = false;
                    break;
                }
            }
        }
        if (!hit) ++misses;
    }
    if (misses > 0)
        add("completeness violation: " + std::to_string(misses) +
            " of 1000 sample points lie in no maximal cone");

    return out;
}

CompleteFan CompleteFan::checked(Fan fan) {
    const auto violations = validate_fan(fan);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid fan:";
        for (const auto& v : violations) msg << "\n  - " << v.message;
        throw ValidationError(msg.str());
    }
    CompleteFan out;
    for (auto& cone : fan.max_cones) std::sort(cone.begin(), cone.end());
    out.fan_ = std::move(fan);
    out.inv_.reserve(out.fan_.max_cones.size());
    for (const auto& cone : out.fan_.max_cones)
        out.inv_.push_back(unimodular_inverse(ray_matrix(out.fan_, cone)));
    return out;
}

bool CompleteFan::cone_contains(int cone, const std::vector<mpq_class>& v) const {
    for (const auto& row : inv_[cone]) {
        mpq_class coord = 0;
        for (std::size_t k = 0; k < row.size(); ++k)
            coord += mpq_class(static_cast<long>(row[k])) * v[k];
        if (coord < 0) return false;
    }
    return true;
}

std::optional<int> CompleteFan::cone_containing(const std::vector<mpq_class>& v) const {
    if (static_cast<int>(v.size()) != fan_.dim)
        throw Error("point length does not match the fan dimension");
    for (std::size_t c = 0; c < fan_.max_cones.size(); ++c)
        if (cone_contains(static_cast<int>(c), v)) return static_cast<int>(c);
    return std::nullopt;
}

std::vector<std::int64_t> CompleteFan::cartier_point(int cone, const ToricDivisor& div) const {
    if (div.coeffs.size() != fan_.rays.size())
        throw ValidationError("divisor coefficient count does not match the ray count");
    const auto& rays = fan_.max_cones[cone];
    const auto& inv = inv_[cone];
    std::vector<std::int64_t> m(fan_.dim, 0);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const std::int64_t a = div.coeffs[rays[i]];
        for (int j = 0; j < fan_.dim; ++j)
            m[j] = checked_sub(m[j], checked_mul(a, inv[i][j]));
    }
    return m;
}

mpq_class support_function_value(const CompleteFan& fan, const ToricDivisor& div,
                                 const std::vector<mpq_class>& v) {
    const auto cone = fan.cone_containing(v);
    if (!cone)
        throw ValidationError("no maximal cone contains the point; "
                              "the fan is not complete");
    const auto m = fan.cartier_point(*cone, div);
    mpq_class value = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
        value += mpq_class(static_cast<long>(m[k])) * v[k];
    return value;
}

} // namespace horo
