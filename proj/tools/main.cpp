#include "CLI11.hpp"

#include <horocohom/cech.hpp>
#include <horocohom/demazure.hpp>
#include <horocohom/errors.hpp>
#include <horocohom/fan.hpp>
#include <horocohom/horospherical.hpp>
#include <horocohom/io.hpp>
#include <horocohom/root_system.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

// Exit codes: 0 success, 1 validation failure, 2 cross-check mismatch,
// 3 parse error, 4 resource cap exceeded. Results go to stdout, diagnostics
// to stderr.

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kMismatch = 2;
constexpr int kBadInput = 3;
constexpr int kCapHit = 4;

struct Options {
    std::string input;
    bool json = false;
    bool oracle = false;
    bool cosets = false;
    std::int64_t radius = 5;
    std::optional<std::int64_t> range;
    int max_rays = 14;
    std::int64_t max_box_points = 100000000;
    std::size_t max_cosets = 200000;
};

horo::ToricCaps caps_of(const Options& opt) {
    horo::ToricCaps caps;
    caps.max_rays = opt.max_rays;
    caps.max_box_points = opt.max_box_points;
    return caps;
}

horo::io::FanFile load_fan_file(const std::string& path) {
    auto j = horo::io::load_json_file(path);
    if (horo::io::looks_like_model(j))
        throw horo::ParseError("expected a fan file but '" + path +
                               "' has \"root_type\" (a model file)");
    return horo::io::parse_fan_file(j);
}

horo::io::ModelFile load_model_file(const std::string& path) {
    auto j = horo::io::load_json_file(path);
    if (!horo::io::looks_like_model(j))
        throw horo::ParseError("expected a model file but '" + path +
                               "' has no \"root_type\" key");
    return horo::io::parse_model_file(j);
}

horo::ToricDivisor require_divisor(const horo::io::FanFile& file) {
    if (!file.divisor)
        throw horo::ParseError("the fan file carries no \"divisor\"");
    return *file.divisor;
}

horo::HoroDivisor require_divisor(const horo::io::ModelFile& file) {
    if (!file.divisor)
        throw horo::ParseError("the model file carries no \"divisor\"");
    return *file.divisor;
}

void emit(const Options& opt, const horo::io::json& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// Radius that certainly covers everything the chamber solver reported.
std::int64_t covering_radius(const horo::GradedCohomologyTable& table,
                             std::int64_t at_least) {
    std::int64_t r = at_least;
    for (const auto& [m, dims] : table.entries)
        for (auto x : m) r = std::max(r, (x < 0 ? -x : x) + 1);
    return r;
}

// Runs both toric pipelines on one divisor; returns true when they agree.
bool tables_match(const horo::CompleteFan& fan, const horo::ToricDivisor& div,
                  const Options& opt, horo::GradedCohomologyTable* chamber_out) {
    auto chamber = horo::toric_cohomology(fan, div, caps_of(opt));
    auto box = horo::oracle_total(fan, div, covering_radius(chamber, opt.radius));
    bool ok = chamber.totals == box.totals && chamber.entries == box.entries;
    if (!ok) {
        std::cerr << "mismatch for divisor (";
        for (std::size_t i = 0; i < div.coeffs.size(); ++i)
            std::cerr << (i ? "," : "") << div.coeffs[i];
        std::cerr << "):\n  chamber totals:";
        for (auto t : chamber.totals) std::cerr << " " << t;
        std::cerr << "\n  box totals:    ";
        for (auto t : box.totals) std::cerr << " " << t;
        std::cerr << "\n";
    }
    if (chamber_out) *chamber_out = std::move(chamber);
    return ok;
}

int run_validate(const Options& opt) {
    auto j = horo::io::load_json_file(opt.input);
    std::vector<horo::FanViolation> violations;
    if (horo::io::looks_like_model(j)) {
        auto file = horo::io::parse_model_file(j);
        violations = horo::validate_fan(file.model.fan);
        const auto colors = file.model.parabolic.colors(file.model.datum.rank);
        if (colors.empty() && file.model.fan.dim == 0)
            violations.push_back(
                {"model violation: no colors and a point fiber leave nothing "
                 "to compute"});
        if (file.divisor) {
            try {
                horo::split_divisor(file.model, *file.divisor);
            } catch (const horo::ValidationError& e) {
                violations.push_back({std::string("divisor violation: ") + e.what()});
            }
        }
    } else {
        auto file = horo::io::parse_fan_file(j);
        violations = horo::validate_fan(file.fan);
        if (file.divisor && file.divisor->coeffs.size() != file.fan.rays.size())
            violations.push_back(
                {"divisor violation: coefficient count does not match the "
                 "ray count"});
    }

    std::string text = violations.empty() ? "ok\n" : "";
    for (const auto& v : violations) text += v.message + "\n";
    emit(opt, horo::io::violations_to_json(violations), text);
    return violations.empty() ? kOk : kInvalid;
}

int run_bwb(const Options& opt) {
    auto file = load_model_file(opt.input);
    auto [bundle, toric] = horo::split_divisor(file.model, require_divisor(file));
    (void)toric;
    auto result = horo::bwb_solve(bundle);

    auto j = horo::io::bwb_to_json(result);
    std::string text = horo::io::bwb_to_text(result);
    if (opt.cosets) {
        auto reps = horo::minimal_coset_reps(bundle.datum, bundle.parabolic,
                                             opt.max_cosets);
        j["coset_count"] = reps.size();
        j["cosets"] = horo::io::json::array();
        text += "coset space: " + std::to_string(reps.size()) + " elements\n";
        for (const auto& w : reps) {
            horo::io::json word = horo::io::json::array();
            for (int l : w.letters) word.push_back(l);
            j["cosets"].push_back(std::move(word));
            text += "  l=" + std::to_string(w.length()) + ":";
            if (w.letters.empty()) text += " e";
            for (int l : w.letters) text += " s" + std::to_string(l);
            text += "\n";
        }
    }
    emit(opt, j, text);
    return kOk;
}

int run_toric(const Options& opt) {
    auto file = load_fan_file(opt.input);
    auto fan = horo::CompleteFan::checked(file.fan);
    auto div = require_divisor(file);

    if (opt.oracle) {
        horo::GradedCohomologyTable table;
        if (!tables_match(fan, div, opt, &table)) return kMismatch;
        std::cerr << "oracle cross-check passed\n";
        emit(opt, horo::io::table_to_json(table), horo::io::table_to_text(table));
        return kOk;
    }
    auto table = horo::toric_cohomology(fan, div, caps_of(opt));
    emit(opt, horo::io::table_to_json(table), horo::io::table_to_text(table));
    return kOk;
}

int run_horo(const Options& opt) {
    auto file = load_model_file(opt.input);
    auto div = require_divisor(file);
    auto report = horo::horo_cohomology(file.model, div, caps_of(opt));

    if (opt.oracle) {
        auto fan = horo::CompleteFan::checked(file.model.fan);
        auto box = horo::oracle_total(fan, horo::split_divisor(file.model, div).second,
                                      covering_radius(report.fiber, opt.radius));
        if (report.fiber.totals != box.totals || report.fiber.entries != box.entries) {
            std::cerr << "mismatch: the fiber table disagrees with the "
                         "chart-cover oracle\n";
            return kMismatch;
        }
        std::cerr << "oracle cross-check passed\n";
    }
    emit(opt, horo::io::report_to_json(report), horo::io::report_to_text(report));
    return kOk;
}

int run_oracle(const Options& opt) {
    auto file = load_fan_file(opt.input);
    auto fan = horo::CompleteFan::checked(file.fan);
    auto table = horo::oracle_total(fan, require_divisor(file), opt.radius);
    emit(opt, horo::io::table_to_json(table), horo::io::table_to_text(table));
    return kOk;
}

int run_crosscheck(const Options& opt) {
    auto file = load_fan_file(opt.input);
    auto fan = horo::CompleteFan::checked(file.fan);

    std::vector<horo::ToricDivisor> divisors;
    if (opt.range) {
        if (*opt.range < 0) throw horo::ParseError("--range must be nonnegative");
        if (file.divisor)
            std::cerr << "note: --range given, ignoring the divisor in the file\n";
        const std::size_t nrays = fan.ray_count();
        const std::size_t per = static_cast<std::size_t>(2 * *opt.range + 1);
        std::size_t total = 1;
        bool exhaustive = true;
        for (std::size_t i = 0; i < nrays && exhaustive; ++i) {
            total *= per;
            if (total > 3000) exhaustive = false;
        }
        if (exhaustive) {
            std::vector<std::int64_t> a(nrays, -*opt.range);
            for (;;) {
                divisors.push_back({a});
                std::size_t v = 0;
                while (v < nrays) {
                    if (a[v] < *opt.range) {
                        ++a[v];
                        break;
                    }
                    a[v] = -*opt.range;
                    ++v;
                }
                if (v == nrays) break;
            }
        } else {
            std::mt19937_64 rng(0x5eedcc);
            std::uniform_int_distribution<std::int64_t> coeff(-*opt.range, *opt.range);
            for (int k = 0; k < 500; ++k) {
                std::vector<std::int64_t> a(nrays);
                for (auto& x : a) x = coeff(rng);
                divisors.push_back({std::move(a)});
            }
        }
    } else {
        divisors.push_back(require_divisor(file));
    }

    std::size_t checked = 0;
    for (const auto& div : divisors) {
        if (!tables_match(fan, div, opt, nullptr)) {
            horo::io::json j;
            j["checked"] = checked;
            j["agree"] = false;
            emit(opt, j,
                 "mismatch after " + std::to_string(checked) + " divisors\n");
            return kMismatch;
        }
        ++checked;
    }
    horo::io::json j;
    j["checked"] = checked;
    j["agree"] = true;
    emit(opt, j,
         "checked " + std::to_string(checked) + " divisor(s): both pipelines agree\n");
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology of line bundles on toric and horospherical "
                 "varieties"};
    app.require_subcommand(1);

    Options opt;
    std::function<int(const Options&)> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "input JSON file")->required();
        sub->add_flag("--json", opt.json, "emit machine-readable JSON");
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-rays", opt.max_rays,
                        "ray cap for the chamber enumeration")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-box-points", opt.max_box_points,
                        "lattice point cap per chamber")
            ->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "check a fan or model file");
    add_common(validate);
    validate->callback([&] { action = run_validate; });

    auto* bwb = app.add_subcommand("bwb", "cohomology of the flag factor");
    add_common(bwb);
    bwb->add_flag("--cosets", opt.cosets, "also list the minimal coset words");
    bwb->add_option("--max-cosets", opt.max_cosets, "coset enumeration cap")
        ->check(CLI::PositiveNumber);
    bwb->callback([&] { action = run_bwb; });

    auto* toric = app.add_subcommand("toric", "graded cohomology on a toric fan");
    add_common(toric);
    add_caps(toric);
    toric->add_flag("--oracle", opt.oracle, "verify against the chart-cover oracle");
    toric->add_option("--radius", opt.radius, "minimum oracle box radius")
        ->check(CLI::NonNegativeNumber);
    toric->callback([&] { action = run_toric; });

    auto* horo_cmd = app.add_subcommand("horo", "cohomology of a horospherical model");
    add_common(horo_cmd);
    add_caps(horo_cmd);
    horo_cmd->add_flag("--oracle", opt.oracle,
                       "verify the fiber table against the chart-cover oracle");
    horo_cmd->add_option("--radius", opt.radius, "minimum oracle box radius")
        ->check(CLI::NonNegativeNumber);
    horo_cmd->callback([&] { action = run_horo; });

    auto* oracle = app.add_subcommand("oracle", "chart-cover totals over a box");
    add_common(oracle);
    oracle->add_option("--radius", opt.radius, "box radius (default 5)")
        ->check(CLI::NonNegativeNumber);
    oracle->callback([&] { action = run_oracle; });

    auto* crosscheck =
        app.add_subcommand("crosscheck", "compare the two toric pipelines");
    add_common(crosscheck);
    add_caps(crosscheck);
    crosscheck->add_option("--range", opt.range,
                           "sweep all divisors with coefficients in [-R, R] "
                           "(at most 3000 exhaustively, else 500 samples)");
    crosscheck->add_option("--radius", opt.radius, "minimum oracle box radius")
        ->check(CLI::NonNegativeNumber);
    crosscheck->callback([&] { action = run_crosscheck; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        return action(opt);
    } catch (const horo::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const horo::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapHit;
    } catch (const horo::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kCapHit;
    } catch (const horo::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
