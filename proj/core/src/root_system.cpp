#include "horocohom/root_system.hpp"

#include "horocohom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace horo {

bool Weight::dominant() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](std::int64_t c) { return c >= 0; });
}

bool Weight::strictly_dominant() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](std::int64_t c) { return c >= 1; });
}

Weight RootDatum::rho() const {
    return Weight{std::vector<std::int64_t>(rank, 1)};
}

std::string RootDatum::label() const {
    if (factors.empty()) return "trivial";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += 'x';
        out += f.series;
        out += std::to_string(f.rank);
    }
    return out;
}

namespace {

SimpleFactor parse_factor(const std::string& label) {
    if (label.size() < 2 || label[0] < 'A' || label[0] > 'G')
        throw ParseError("unknown root system label '" + label + "'");
    for (std::size_t k = 1; k < label.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(label[k])))
            throw ParseError("unknown root system label '" + label + "'");
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw ParseError("unknown root system label '" + label + "'");
    }
    const char s = label[0];
    const bool ok = (s == 'A' && rank >= 1 && rank <= 8) ||
                    (s == 'B' && rank >= 1 && rank <= 8) ||
                    (s == 'C' && rank >= 1 && rank <= 8) ||
                    (s == 'D' && rank >= 2 && rank <= 8) ||
                    (s == 'E' && rank >= 6 && rank <= 8) ||
                    (s == 'F' && rank == 4) ||
                    (s == 'G' && rank == 2);
    if (!ok)
        throw ParseError("rank out of supported range for series '" +
                         std::string(1, s) + "': " + std::to_string(rank));
    return {s, rank};
}

std::vector<std::vector<int>> cartan_for(const SimpleFactor& f) {
    const int r = f.rank;
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    auto edge = [&](int p, int q) { a[p][q] = a[q][p] = -1; };
    switch (f.series) {
    case 'A':
        for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
        if (r >= 2) a[r - 1][r - 2] = -2;   // last simple root short
        break;
    case 'C':
        for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
        if (r >= 2) a[r - 2][r - 1] = -2;   // last simple root long
        break;
    case 'D':
        for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
        if (r >= 3) edge(r - 3, r - 1);     // fork at the third-to-last node
        break;
    case 'E':
        edge(0, 2);
        edge(2, 3);
        edge(3, 4);
        edge(4, 5);
        if (r >= 7) edge(5, 6);
        if (r >= 8) edge(6, 7);
        edge(1, 3);                          // branch node
        break;
    case 'F':
        edge(0, 1);
        edge(1, 2);
        edge(2, 3);
        a[2][1] = -2;                        // double bond toward the short roots
        break;
    case 'G':
        edge(0, 1);
        a[0][1] = -3;
        break;
    default:
        throw ParseError("unknown root system series");
    }
    return a;
}

std::size_t expected_positive_roots(const SimpleFactor& f) {
    const std::size_t r = static_cast<std::size_t>(f.rank);
    switch (f.series) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return f.rank == 6 ? 36u : (f.rank == 7 ? 63u : 120u);
    case 'F': return 24;
    case 'G': return 6;
    }
    return 0;
}

// Closes the simple roots under all simple reflections, keeping only the
// vectors with nonnegative simple-root coordinates. The coroots ride along:
// reflecting a root reflects its coroot in the transposed datum.
void enumerate_positive_roots(const std::vector<std::vector<int>>& a,
                              std::vector<std::vector<std::int64_t>>& roots,
                              std::vector<std::vector<std::int64_t>>& coroots) {
    const int r = static_cast<int>(a.size());
    roots.clear();
    coroots.clear();
    std::map<std::vector<std::int64_t>, std::size_t> seen;
    for (int i = 0; i < r; ++i) {
        std::vector<std::int64_t> e(r, 0);
        e[i] = 1;
        seen.emplace(e, roots.size());
        roots.push_back(e);
        coroots.push_back(e);
    }
    for (std::size_t head = 0; head < roots.size(); ++head) {
        const auto c = roots[head];
        const auto cv = coroots[head];
        for (int i = 0; i < r; ++i) {
            std::int64_t pr = 0, pc = 0;
            for (int j = 0; j < r; ++j) {
                pr += a[i][j] * c[j];
                pc += a[j][i] * cv[j];
            }
            auto c2 = c;
            c2[i] -= pr;
            if (std::any_of(c2.begin(), c2.end(), [](std::int64_t x) { return x < 0; }))
                continue;
            if (seen.count(c2)) continue;
            auto cv2 = cv;
            cv2[i] -= pc;
            seen.emplace(c2, roots.size());
            roots.push_back(std::move(c2));
            coroots.push_back(std::move(cv2));
        }
    }
    std::vector<std::size_t> idx(roots.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto height = [&](std::size_t k) {
        return std::accumulate(roots[k].begin(), roots[k].end(), std::int64_t{0});
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        const auto hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return roots[x] < roots[y];
    });
    std::vector<std::vector<std::int64_t>> roots2, coroots2;
    roots2.reserve(roots.size());
    coroots2.reserve(roots.size());
    for (auto k : idx) {
        roots2.push_back(std::move(roots[k]));
        coroots2.push_back(std::move(coroots[k]));
    }
    roots = std::move(roots2);
    coroots = std::move(coroots2);
}

} // namespace

RootDatum build_root_datum(const std::string& label) {
    return build_root_datum(std::vector<std::string>{label});
}

RootDatum build_root_datum(const std::vector<std::string>& labels) {
    RootDatum d;
    for (const auto& l : labels) d.factors.push_back(parse_factor(l));
    d.rank = 0;
    for (const auto& f : d.factors) d.rank += f.rank;
    d.cartan.assign(d.rank, std::vector<int>(d.rank, 0));

    int offset = 0;
    for (const auto& f : d.factors) {
        const auto block = cartan_for(f);
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j)
                d.cartan[offset + i][offset + j] = block[i][j];

        std::vector<std::vector<std::int64_t>> roots, coroots;
        enumerate_positive_roots(block, roots, coroots);
        if (roots.size() != expected_positive_roots(f))
            throw Error("positive-root enumeration disagrees with the classical count for " +
                        std::string(1, f.series) + std::to_string(f.rank));
        for (std::size_t k = 0; k < roots.size(); ++k) {
            std::vector<std::int64_t> root(d.rank, 0), coroot(d.rank, 0);
            for (int j = 0; j < f.rank; ++j) {
                root[offset + j] = roots[k][j];
                coroot[offset + j] = coroots[k][j];
            }
            d.positive_roots.push_back(std::move(root));
            d.positive_coroots.push_back(std::move(coroot));
        }
        offset += f.rank;
    }

    // Restore the global (height, lex) order across factors.
    std::vector<std::size_t> idx(d.positive_roots.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto height = [&](std::size_t k) {
        return std::accumulate(d.positive_roots[k].begin(), d.positive_roots[k].end(),
                               std::int64_t{0});
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        const auto hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return d.positive_roots[x] < d.positive_roots[y];
    });
    std::vector<std::vector<std::int64_t>> roots2, coroots2;
    for (auto k : idx) {
        roots2.push_back(std::move(d.positive_roots[k]));
        coroots2.push_back(std::move(d.positive_coroots[k]));
    }
    d.positive_roots = std::move(roots2);
    d.positive_coroots = std::move(coroots2);
    return d;
}

std::vector<int> ParabolicSpec::colors(int rank) const {
    std::vector<bool> in_levi(static_cast<std::size_t>(rank) + 1, false);
    for (int i : levi_set) {
        if (i < 1 || i > rank)
            throw ValidationError("Levi set index " + std::to_string(i) +
                                  " out of range 1.." + std::to_string(rank));
        in_levi[i] = true;
    }
    std::vector<int> out;
    for (int i = 1; i <= rank; ++i)
        if (!in_levi[i]) out.push_back(i);
    return out;
}

Weight reflect(const RootDatum& datum, int i, const Weight& lambda) {
    if (i < 1 || i > datum.rank)
        throw std::out_of_range("simple reflection index out of range");
    if (static_cast<int>(lambda.coords.size()) != datum.rank)
        throw Error("weight length does not match the rank");
    Weight out = lambda;
    const std::int64_t li = lambda.coords[i - 1];
    for (int j = 0; j < datum.rank; ++j)
        out.coords[j] = checked_sub(out.coords[j],
                                    checked_mul(li, datum.cartan[j][i - 1]));
    return out;
}

Weight apply_word(const RootDatum& datum, const WeylWord& word, const Weight& lambda) {
    Weight v = lambda;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        v = reflect(datum, *it, v);
    return v;
}

std::vector<std::int64_t> apply_word_to_root(const RootDatum& datum, const WeylWord& word,
                                             std::vector<std::int64_t> root) {
    if (static_cast<int>(root.size()) != datum.rank)
        throw Error("root length does not match the rank");
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const int i = *it - 1;
        if (i < 0 || i >= datum.rank)
            throw std::out_of_range("simple reflection index out of range");
        std::int64_t pairing = 0;
        for (int j = 0; j < datum.rank; ++j)
            pairing = checked_add(pairing, checked_mul(datum.cartan[i][j], root[j]));
        root[i] = checked_sub(root[i], pairing);
    }
    return root;
}

DotSort to_dominant_dot(const RootDatum& datum, const Weight& lambda) {
    if (static_cast<int>(lambda.coords.size()) != datum.rank)
        throw Error("weight length does not match the rank");
    Weight nu = lambda;
    for (auto& c : nu.coords) c = checked_add(c, 1);

    std::deque<int> letters;
    int steps = 0;
    for (;;) {
        int pick = 0;
        bool wall = false;
        for (int j = 0; j < datum.rank; ++j) {
            if (nu.coords[j] == 0) {
                wall = true;
                break;
            }
            if (pick == 0 && nu.coords[j] < 0) pick = j + 1;
        }
        if (wall) {
            DotSort out;
            out.singular = true;
            return out;
        }
        if (pick == 0) break;
        nu = reflect(datum, pick, nu);
        letters.push_front(pick);
        ++steps;
        if (steps > 1000000)
            throw std::logic_error("dominant sorting failed to terminate");
    }

    DotSort out;
    out.dominant = nu;
    for (auto& c : out.dominant.coords) c = checked_sub(c, 1);
    out.length = steps;
    out.word.letters.assign(letters.begin(), letters.end());
    return out;
}

mpz_class weyl_dimension(const RootDatum& datum, const Weight& mu) {
    if (static_cast<int>(mu.coords.size()) != datum.rank)
        throw Error("weight length does not match the rank");
    if (!mu.dominant())
        throw std::invalid_argument("Weyl dimension formula requires a dominant weight");
    mpz_class num = 1, den = 1;
    for (const auto& cv : datum.positive_coroots) {
        mpz_class n = 0, d = 0;
        for (int i = 0; i < datum.rank; ++i) {
            const auto c = static_cast<long>(cv[i]);
            n += mpz_class(c) * (mpz_class(static_cast<long>(mu.coords[i])) + 1);
            d += c;
        }
        num *= n;
        den *= d;
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw Error("Weyl dimension formula did not divide exactly");
    return q;
}

namespace {

// Breadth-first orbit of a start weight under the chosen simple reflections.
// Each orbit point keeps the first (hence shortest) word reaching it.
std::map<std::vector<std::int64_t>, WeylWord>
orbit_with_words(const RootDatum& datum, const Weight& start,
                 const std::vector<int>& generators, std::size_t cap) {
    std::map<std::vector<std::int64_t>, WeylWord> visited;
    visited.emplace(start.coords, WeylWord{});
    std::deque<std::vector<std::int64_t>> queue{start.coords};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        const WeylWord word = visited.at(v);
        for (int i : generators) {
            const Weight image = reflect(datum, i, Weight{v});
            if (visited.count(image.coords)) continue;
            if (visited.size() >= cap)
                throw CapExceeded("Weyl orbit enumeration exceeded the cap of " +
                                  std::to_string(cap));
            WeylWord next;
            next.letters.reserve(word.letters.size() + 1);
            next.letters.push_back(i);
            next.letters.insert(next.letters.end(), word.letters.begin(),
                                word.letters.end());
            visited.emplace(image.coords, std::move(next));
            queue.push_back(image.coords);
        }
    }
    return visited;
}

std::vector<int> all_generators(int rank) {
    std::vector<int> g(rank);
    std::iota(g.begin(), g.end(), 1);
    return g;
}

} // namespace

std::vector<WeylWord> minimal_coset_reps(const RootDatum& datum, const ParabolicSpec& spec,
                                         std::size_t cap) {
    const auto color_set = spec.colors(datum.rank);
    Weight xi{std::vector<std::int64_t>(datum.rank, 0)};
    for (int i : color_set) xi.coords[i - 1] = 1;

    // Points of the orbit of xi correspond to cosets wW_P; the first word
    // found by breadth-first search is a reduced word for the minimal
    // representative of its coset.
    auto orbit = orbit_with_words(datum, xi, all_generators(datum.rank), cap);
    std::vector<WeylWord> out;
    out.reserve(orbit.size());
    for (auto& [coords, word] : orbit) out.push_back(std::move(word));
    std::sort(out.begin(), out.end(), [](const WeylWord& a, const WeylWord& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters < b.letters;
    });
    return out;
}

std::size_t weyl_order(const RootDatum& datum, std::size_t cap) {
    return weyl_order(datum, all_generators(datum.rank), cap);
}

std::size_t weyl_order(const RootDatum& datum, const std::vector<int>& generators,
                       std::size_t cap) {
    for (int i : generators)
        if (i < 1 || i > datum.rank)
            throw ValidationError("generator index out of range");
    // rho is regular, so its orbit under any standard parabolic subgroup is
    // free: the orbit size is the subgroup order.
    return orbit_with_words(datum, datum.rho(), generators, cap).size();
}

} // namespace horo
