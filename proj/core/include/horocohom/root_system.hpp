#pragma once

#include "horocohom/checked.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

// Root systems in the basis of fundamental weights: Cartan matrices for the
// series A through G, positive roots and coroots, simple reflections, the
// shifted (dot) Weyl action, Weyl's dimension formula, and minimal-length
// representatives of parabolic coset spaces.
//
// Conventions, fixed once and used everywhere:
//   cartan[i][j] = pairing of simple root j against simple coroot i, so the
//   fundamental-weight coordinates of the simple root alpha_j form column j
//   of the Cartan matrix, and the simple reflection s_i acts on a weight by
//   lambda -> lambda - lambda_i * (column i).
// Simple-root indices in this interface are 1-based, matching the usual
// Dynkin-diagram labeling; storage is 0-based.

namespace horo {

struct Weight {
    std::vector<std::int64_t> coords;   // fundamental-weight coordinates

    bool dominant() const;              // all coordinates >= 0
    bool strictly_dominant() const;     // all coordinates >= 1
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

struct WeylWord {
    // Simple-reflection indices, 1-based. The word [l1, ..., lk] denotes
    // s_{l1} s_{l2} ... s_{lk}; it acts by applying the rightmost letter
    // first.
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const WeylWord&) const = default;
};

struct SimpleFactor {
    char series = 'A';
    int rank = 0;
};

struct RootDatum {
    std::vector<SimpleFactor> factors;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    // Aligned lists: positive_coroots[k] is the coroot of positive_roots[k].
    // Roots are stored in simple-root coordinates, coroots in simple-coroot
    // coordinates. Order: by height, then lexicographically.
    std::vector<std::vector<std::int64_t>> positive_roots;
    std::vector<std::vector<std::int64_t>> positive_coroots;

    Weight rho() const;                 // (1, ..., 1)
    std::string label() const;          // e.g. "A2", "A1xA1", "trivial"
};

// Builds the datum for a single label such as "A2" or "G2", or for a product
// given as a list of labels. The empty list yields the rank-zero datum (a
// torus: no roots, trivial Weyl group). Supported ranks: A/B/C 1-8, D 2-8,
// E 6-8, F 4, G 2.
RootDatum build_root_datum(const std::string& label);
RootDatum build_root_datum(const std::vector<std::string>& labels);

struct ParabolicSpec {
    std::vector<int> levi_set;          // 1-based indices of S_P

    // The complementary color set I = S \ S_P, sorted ascending.
    std::vector<int> colors(int rank) const;
};

// s_i(lambda); throws std::out_of_range unless 1 <= i <= rank.
Weight reflect(const RootDatum& datum, int i, const Weight& lambda);

// Applies a word to a weight: for word = [l1, ..., lk] the result is
// s_{l1}(s_{l2}(... s_{lk}(lambda)...)).
Weight apply_word(const RootDatum& datum, const WeylWord& word, const Weight& lambda);

// The same action on a vector in simple-root coordinates.
std::vector<std::int64_t> apply_word_to_root(const RootDatum& datum, const WeylWord& word,
                                             std::vector<std::int64_t> root);

// Outcome of sorting lambda + rho into the dominant chamber, reflecting at
// the smallest negative coordinate each step.
struct DotSort {
    bool singular = false;   // the orbit of lambda + rho meets a wall
    Weight dominant;         // mu with mu + rho strictly dominant (regular case)
    int length = 0;          // number of reflections applied = l(word)
    WeylWord word;           // w with w(lambda + rho) = mu + rho
};

DotSort to_dominant_dot(const RootDatum& datum, const Weight& lambda);

// dim V_mu by Weyl's formula; exact. Requires mu dominant.
mpz_class weyl_dimension(const RootDatum& datum, const Weight& mu);

// All w with l(w s_a) > l(w) for every a in the Levi set, sorted by
// (length, lexicographic word). Throws CapExceeded past `cap` elements.
std::vector<WeylWord> minimal_coset_reps(const RootDatum& datum, const ParabolicSpec& spec,
                                         std::size_t cap = 200000);

// Order of W, or of the standard parabolic subgroup generated by the given
// 1-based simple reflections, by orbit enumeration.
std::size_t weyl_order(const RootDatum& datum, std::size_t cap = 200000);
std::size_t weyl_order(const RootDatum& datum, const std::vector<int>& generators,
                       std::size_t cap = 200000);

} // namespace horo
