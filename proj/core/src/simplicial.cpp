#include "horocohom/simplicial.hpp"

#include "horocohom/errors.hpp"
#include "horocohom/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace horo {

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces) {
        bool maximal = true;
        for (const auto& g : faces) {
            if (g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

SimplicialComplex closure_complex(const std::vector<std::vector<int>>& generators) {
    std::set<std::vector<int>> faces;
    std::set<int> vertices;
    for (const auto& g : generators) {
        auto s = g;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() > 30)
            throw Error("simplicial face too large to close over");
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> face;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k)) face.push_back(s[k]);
            faces.insert(std::move(face));
        }
        vertices.insert(s.begin(), s.end());
    }
    SimplicialComplex out;
    out.vertices.assign(vertices.begin(), vertices.end());
    out.faces.assign(faces.begin(), faces.end());
    return out;
}

std::vector<std::int64_t> reduced_cohomology_dims(const SimplicialComplex& complex, int top) {
    if (top < -1) return {};

    // Faces grouped by cardinality; by_size[k] holds the faces with k
    // vertices, in lexicographic order, with an index map for the
    // coboundary entries.
    std::size_t max_size = 0;
    for (const auto& f : complex.faces) max_size = std::max(max_size, f.size());
    std::vector<std::vector<std::vector<int>>> by_size(max_size + 1);
    for (const auto& f : complex.faces) by_size[f.size()].push_back(f);
    std::vector<std::map<std::vector<int>, int>> index(max_size + 1);
    for (std::size_t k = 1; k <= max_size; ++k) {
        std::sort(by_size[k].begin(), by_size[k].end());
        by_size[k].erase(std::unique(by_size[k].begin(), by_size[k].end()),
                         by_size[k].end());
        for (std::size_t i = 0; i < by_size[k].size(); ++i)
            index[k][by_size[k][i]] = static_cast<int>(i);
    }
    for (std::size_t k = 2; k <= max_size; ++k)
        for (const auto& f : by_size[k])
            for (std::size_t j = 0; j < f.size(); ++j) {
                auto sub = f;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
                if (!index[k - 1].count(sub))
                    throw Error("face set is not downward closed");
            }

    // rank of the coboundary C^p -> C^{p+1}, where C^p has the faces with
    // p + 1 vertices as basis and C^{-1} is spanned by the empty face.
    auto coboundary_rank = [&](int p) -> int {
        const std::size_t src = static_cast<std::size_t>(p + 1);
        const std::size_t dst = src + 1;
        if (dst > max_size) return 0;
        if (p == -1)
            return by_size[1].empty() ? 0 : 1;   // the all-ones row
        if (src > max_size || by_size[src].empty() || by_size[dst].empty()) return 0;
        QMatrix m(by_size[dst].size(), std::vector<mpq_class>(by_size[src].size(), 0));
        for (std::size_t r = 0; r < by_size[dst].size(); ++r) {
            const auto& g = by_size[dst][r];
            for (std::size_t j = 0; j < g.size(); ++j) {
                auto sub = g;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
                const auto it = index[src].find(sub);
                if (it == index[src].end())
                    throw Error("face set is not downward closed");
                m[r][static_cast<std::size_t>(it->second)] = (j % 2 == 0) ? 1 : -1;
            }
        }
        return matrix_rank(std::move(m));
    };

    std::vector<std::int64_t> out(static_cast<std::size_t>(top) + 2, 0);
    int prev_rank = 0;   // rank of the coboundary into C^p
    for (int p = -1; p <= top; ++p) {
        const std::int64_t dim_cp =
            p == -1 ? 1
                    : (static_cast<std::size_t>(p + 1) <= max_size
                           ? static_cast<std::int64_t>(by_size[p + 1].size())
                           : 0);
        const int out_rank = coboundary_rank(p);
        out[static_cast<std::size_t>(p + 1)] = dim_cp - out_rank - prev_rank;
        prev_rank = out_rank;
    }
    return out;
}

} // namespace horo
