#pragma once

#include "horocohom/linalg.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Complete smooth polyhedral fans: structural validation (primitivity,
// smoothness, completeness, intersection in faces) and the piecewise-linear
// support functions of invariant divisors.

namespace horo {

struct Fan {
    int dim = 0;
    std::vector<std::vector<std::int64_t>> rays;   // primitive vectors in Z^dim
    std::vector<std::vector<int>> max_cones;       // 0-based ray indices
};

struct ToricDivisor {
    std::vector<std::int64_t> coeffs;              // a_rho, aligned with Fan::rays
};

// One failed structural invariant; the offending ray/cone indices are part
// of the message.
struct FanViolation {
    std::string message;
};

// Checks every invariant and returns all violations (empty = valid).
// The zero-dimensional fan {0} is represented by no rays and one empty cone.
std::vector<FanViolation> validate_fan(const Fan& fan);

// A validated fan with the inverse ray matrix of every maximal cone cached.
// Smoothness makes those inverses integral, so point location and Cartier
// data are exact integer arithmetic.
class CompleteFan {
public:
    // Throws ValidationError listing every violation if the fan is invalid.
    static CompleteFan checked(Fan fan);

    const Fan& fan() const { return fan_; }
    int dim() const { return fan_.dim; }
    std::size_t ray_count() const { return fan_.rays.size(); }
    std::size_t cone_count() const { return fan_.max_cones.size(); }

    // Rows of the inverse of the matrix whose columns are the cone's rays.
    const ZMatrix& cone_inverse(int cone) const { return inv_[cone]; }

    bool cone_contains(int cone, const std::vector<mpq_class>& v) const;
    std::optional<int> cone_containing(const std::vector<mpq_class>& v) const;

    // The point m_sigma with <m_sigma, u_rho> = -a_rho on the cone's rays.
    std::vector<std::int64_t> cartier_point(int cone, const ToricDivisor& div) const;

private:
    CompleteFan() = default;

    Fan fan_;
    std::vector<ZMatrix> inv_;
};

// psi_D(v) for D = sum a_rho D_rho, normalized by psi(u_rho) = -a_rho.
// Throws ValidationError if no maximal cone contains v.
mpq_class support_function_value(const CompleteFan& fan, const ToricDivisor& div,
                                 const std::vector<mpq_class>& v);

} // namespace horo
