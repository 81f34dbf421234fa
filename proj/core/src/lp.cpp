#include "horocohom/lp.hpp"

#include "horocohom/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>

namespace horo {
namespace {

using u128 = unsigned __int128;

// Raised by the 128-bit path; the caller retries with rationals.
struct FmOverflow {};

inline __int128 cadd(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw FmOverflow{};
    return r;
}
inline __int128 cmul(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw FmOverflow{};
    return r;
}
inline __int128 csub(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw FmOverflow{};
    return r;
}

inline u128 uabs(__int128 a) {
    return a < 0 ? u128(0) - u128(a) : u128(a);
}
inline u128 ugcd(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(__int128 v) {
    u128 u = uabs(v);
    mpz_class hi{static_cast<unsigned long>(u >> 64)};
    mpz_class r = (hi << 64) + mpz_class{static_cast<unsigned long>(u)};
    return v < 0 ? mpz_class(-r) : r;
}

template <class T>
struct Row {
    std::vector<T> c;
    T b;
    bool strict;

    auto tie() const { return std::tie(c, b, strict); }
    bool operator<(const Row& o) const { return tie() < o.tie(); }
    bool operator==(const Row& o) const { return tie() == o.tie(); }
};

template <class T>
struct Ops;

template <>
struct Ops<__int128> {
    static __int128 from_i64(std::int64_t x) { return x; }
    static __int128 add(__int128 a, __int128 b) { return cadd(a, b); }
    static __int128 mul(__int128 a, __int128 b) { return cmul(a, b); }
    static __int128 neg(__int128 a) { return csub(0, a); }
    static mpq_class to_mpq(__int128 a) { return mpq_class(mpz_from_i128(a)); }

    // Dividing out the gcd keeps coefficients small across eliminations.
    static void normalize(Row<__int128>& r) {
        u128 g = uabs(r.b);
        for (const auto& x : r.c) g = ugcd(g, uabs(x));
        if (g <= 1 || g > (u128(1) << 127) - 1) return;
        auto d = static_cast<__int128>(g);
        for (auto& x : r.c) x /= d;
        r.b /= d;
    }
};

template <>
struct Ops<mpq_class> {
    static mpq_class from_i64(std::int64_t x) { return mpq_class(mpz_class(static_cast<long>(x))); }
    static mpq_class add(const mpq_class& a, const mpq_class& b) { return a + b; }
    static mpq_class mul(const mpq_class& a, const mpq_class& b) { return a * b; }
    static mpq_class neg(const mpq_class& a) { return -a; }
    static mpq_class to_mpq(const mpq_class& a) { return a; }
    static void normalize(Row<mpq_class>&) {}
};

// Drops rows whose coefficients are all zero, reporting false on a row that
// is unsatisfiable outright. Exact duplicates are removed as well.
template <class T>
bool scrub(std::vector<Row<T>>& rows) {
    std::vector<Row<T>> kept;
    kept.reserve(rows.size());
    for (auto& r : rows) {
        bool allzero = true;
        for (const auto& x : r.c)
            if (x != 0) {
                allzero = false;
                break;
            }
        if (!allzero) {
            kept.push_back(std::move(r));
            continue;
        }
        if (r.b < 0 || (r.b == 0 && r.strict)) return false;
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    rows = std::move(kept);
    return true;
}

template <class T>
void eliminate_var(std::vector<Row<T>>& rows, int v) {
    std::vector<Row<T>> lower, upper, rest;
    for (auto& r : rows) {
        if (r.c[v] == 0)
            rest.push_back(std::move(r));
        else if (r.c[v] > 0)
            upper.push_back(std::move(r));
        else
            lower.push_back(std::move(r));
    }
    for (const auto& l : lower) {
        T a = Ops<T>::neg(l.c[v]);
        for (const auto& u : upper) {
            const T& p = u.c[v];
            Row<T> n;
            n.c.resize(l.c.size());
            for (std::size_t i = 0; i < n.c.size(); ++i)
                n.c[i] = Ops<T>::add(Ops<T>::mul(a, u.c[i]), Ops<T>::mul(p, l.c[i]));
            n.b = Ops<T>::add(Ops<T>::mul(a, u.b), Ops<T>::mul(p, l.b));
            n.strict = l.strict || u.strict;
            Ops<T>::normalize(n);
            rest.push_back(std::move(n));
        }
    }
    if (rest.size() > 200000)
        throw CapExceeded("inequality elimination exceeded the row cap");
    rows = std::move(rest);
}

template <class T>
std::vector<Row<T>> convert(const std::vector<LinearConstraint>& cs, int nvars,
                            bool relax_strict) {
    std::vector<Row<T>> rows;
    rows.reserve(cs.size());
    for (const auto& c : cs) {
        if (static_cast<int>(c.coeffs.size()) != nvars)
            throw Error("linear constraint arity does not match the variable count");
        Row<T> r;
        r.c.reserve(c.coeffs.size());
        for (auto x : c.coeffs) r.c.push_back(Ops<T>::from_i64(x));
        r.b = Ops<T>::from_i64(c.bound);
        r.strict = relax_strict ? false : c.strict;
        rows.push_back(std::move(r));
    }
    return rows;
}

template <class T>
bool fm_feasible(const std::vector<LinearConstraint>& cs, int nvars) {
    auto rows = convert<T>(cs, nvars, false);
    for (int v = 0; v < nvars; ++v) {
        if (!scrub(rows)) return false;
        if (rows.empty()) return true;
        eliminate_var(rows, v);
    }
    return scrub(rows);
}

template <class T>
VariableRange fm_range(const std::vector<LinearConstraint>& cs, int nvars, int var) {
    auto rows = convert<T>(cs, nvars, true);
    for (int v = 0; v < nvars; ++v) {
        if (v == var) continue;
        if (!scrub(rows)) return {false, {}, {}};
        eliminate_var(rows, v);
    }
    VariableRange out;
    for (const auto& r : rows) {
        if (r.c[var] == 0) {
            if (r.b < 0) return {false, {}, {}};
            continue;
        }
        mpq_class bound = Ops<T>::to_mpq(r.b) / Ops<T>::to_mpq(r.c[var]);
        if (r.c[var] > 0) {
            if (!out.upper || bound < *out.upper) out.upper = bound;
        } else {
            if (!out.lower || bound > *out.lower) out.lower = bound;
        }
    }
    if (out.lower && out.upper && *out.lower > *out.upper) return {false, {}, {}};
    return out;
}

} // namespace

bool lp_feasible(const std::vector<LinearConstraint>& cs, int nvars) {
    try {
        return fm_feasible<__int128>(cs, nvars);
    } catch (const FmOverflow&) {
        return fm_feasible<mpq_class>(cs, nvars);
    }
}

VariableRange lp_variable_range(const std::vector<LinearConstraint>& cs,
                                int nvars, int var) {
    if (var < 0 || var >= nvars)
        throw Error("lp_variable_range: variable index out of range");
    try {
        return fm_range<__int128>(cs, nvars, var);
    } catch (const FmOverflow&) {
        return fm_range<mpq_class>(cs, nvars, var);
    }
}

} // namespace horo
