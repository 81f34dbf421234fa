#include "horocohom/horospherical.hpp"

#include "horocohom/checked.hpp"
#include "horocohom/errors.hpp"

namespace horo {

mpz_class HoroCohomologyReport::euler() const {
    mpz_class chi = 0;
    for (const auto& row : degrees) {
        if (row.n % 2 == 0)
            chi += row.total;
        else
            chi -= row.total;
    }
    return chi;
}

std::pair<FlagBundle, ToricDivisor> split_divisor(const HorosphericalModel& model,
                                                  const HoroDivisor& div) {
    const auto color_set = model.parabolic.colors(model.datum.rank);
    std::vector<int> keys;
    keys.reserve(div.color_coeffs.size());
    for (const auto& [k, v] : div.color_coeffs) keys.push_back(k);
    if (keys != color_set)
        throw ValidationError("divisor color coefficients must be keyed by "
                              "exactly the color set I = S \\ S_P");
    if (div.boundary_coeffs.size() != model.fan.rays.size())
        throw ValidationError("boundary coefficient count does not match the "
                              "fan's ray count");
    FlagBundle bundle{model.datum, model.parabolic, div.color_coeffs};
    ToricDivisor toric{div.boundary_coeffs};
    return {std::move(bundle), std::move(toric)};
}

namespace {

void check_model(const HorosphericalModel& model) {
    const auto color_set = model.parabolic.colors(model.datum.rank);
    if (color_set.empty() && model.fan.dim == 0)
        throw ValidationError("model is trivial on both factors: no colors "
                              "and a zero-dimensional fan");
}

} // namespace

HoroCohomologyReport horo_cohomology(const HorosphericalModel& model,
                                     const HoroDivisor& div,
                                     const ToricCaps& caps) {
    check_model(model);
    const auto complete = CompleteFan::checked(model.fan);
    auto [bundle, toric] = split_divisor(model, div);

    HoroCohomologyReport report;
    report.flag = bwb_solve(bundle);
    report.fiber = toric_cohomology(complete, toric, caps);

    const int d = model.fan.dim;
    if (report.flag.vanishing) {
        for (int n = 0; n <= d; ++n)
            report.degrees.push_back({n, 0, {}});
        return report;
    }

    const int l = report.flag.degree;
    for (int n = 0; n <= l + d; ++n) {
        HoroDegreeRow row;
        row.n = n;
        const int q = n - l;
        if (q >= 0 && q <= d) {
            for (const auto& [m, dims] : report.fiber.entries) {
                const auto h = dims[static_cast<std::size_t>(q)];
                if (h != 0) row.contributions.push_back({q, m, h});
            }
            row.total = report.flag.dimension *
                        report.fiber.totals[static_cast<std::size_t>(q)];
        }
        report.degrees.push_back(std::move(row));
    }
    return report;
}

EulerCheck euler_check(const HorosphericalModel& model, const HoroDivisor& div,
                       const ToricCaps& caps) {
    const auto report = horo_cohomology(model, div, caps);
    EulerCheck out;
    out.chi_total = report.euler();
    if (!report.flag.vanishing)
        out.chi_flag = (report.flag.degree % 2 == 0) ? report.flag.dimension
                                                     : -report.flag.dimension;
    for (std::size_t q = 0; q < report.fiber.totals.size(); ++q) {
        if (q % 2 == 0)
            out.chi_toric = checked_add(out.chi_toric, report.fiber.totals[q]);
        else
            out.chi_toric = checked_sub(out.chi_toric, report.fiber.totals[q]);
    }
    out.ok = out.chi_total == out.chi_flag * mpz_class(static_cast<long>(out.chi_toric));
    return out;
}

} // namespace horo
