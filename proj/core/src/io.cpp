#include "horocohom/io.hpp"

#include "horocohom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <iomanip>
#include <limits>
#include <sstream>

namespace horo::io {
namespace {

std::int64_t as_int(const json& j, const std::string& where) {
    if (j.is_number_float())
        throw ParseError(where + ": floating-point numbers are not accepted");
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ParseError(where + ": integer does not fit in 64 bits");
        return static_cast<std::int64_t>(u);
    }
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

int as_small_int(const json& j, const std::string& where) {
    const auto v = as_int(j, where);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(where + ": index out of range");
    return static_cast<int>(v);
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + ": missing required key \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& obj,
                         std::initializer_list<const char*> allowed,
                         const std::string& where) {
    if (!obj.is_object())
        throw ParseError(where + ": expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }))
            throw ParseError(where + ": unknown key \"" + key + "\"");
    }
}

std::vector<std::int64_t> as_int_vector(const json& j, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where + ": expected an array of integers");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_int(e, where));
    return out;
}

std::vector<int> as_index_vector(const json& j, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where + ": expected an array of indices");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_small_int(e, where));
    return out;
}

Fan parse_fan_core(const json& j, const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + ": expected a JSON object");
    Fan fan;
    fan.dim = as_small_int(require_key(j, "dim", where), where + ".dim");
    const auto& rays = require_key(j, "rays", where);
    if (!rays.is_array())
        throw ParseError(where + ".rays: expected an array");
    for (const auto& r : rays)
        fan.rays.push_back(as_int_vector(r, where + ".rays"));
    const auto& cones = require_key(j, "max_cones", where);
    if (!cones.is_array())
        throw ParseError(where + ".max_cones: expected an array");
    for (const auto& c : cones)
        fan.max_cones.push_back(as_index_vector(c, where + ".max_cones"));
    return fan;
}

// Dimensions can exceed 64 bits, and JSON numbers that wide are not portable,
// so every arbitrary-precision field is emitted as a decimal string.
json mpz_to_json(const mpz_class& z) {
    return json(z.get_str());
}

json int_vector_to_json(const std::vector<std::int64_t>& v) {
    json out = json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

} // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error: ") + e.what());
    }
}

bool looks_like_model(const json& j) {
    return j.is_object() && j.contains("root_type");
}

FanFile parse_fan_file(const json& j) {
    if (!j.is_object())
        throw ParseError("fan file: expected a JSON object");
    reject_unknown_keys(j, {"dim", "rays", "max_cones", "divisor"}, "fan file");
    FanFile out;
    out.fan = parse_fan_core(j, "fan file");
    if (j.contains("divisor"))
        out.divisor = ToricDivisor{as_int_vector(j.at("divisor"), "fan file.divisor")};
    return out;
}

ModelFile parse_model_file(const json& j) {
    if (!j.is_object())
        throw ParseError("model file: expected a JSON object");
    reject_unknown_keys(j, {"root_type", "levi_set", "fan", "divisor"}, "model file");

    ModelFile out;
    const auto& type = require_key(j, "root_type", "model file");
    if (type.is_string()) {
        out.model.datum = build_root_datum(type.get<std::string>());
    } else if (type.is_array()) {
        std::vector<std::string> labels;
        for (const auto& t : type) {
            if (!t.is_string())
                throw ParseError("model file.root_type: expected strings");
            labels.push_back(t.get<std::string>());
        }
        out.model.datum = build_root_datum(labels);
    } else {
        throw ParseError("model file.root_type: expected a string or an array "
                         "of strings");
    }

    out.model.parabolic.levi_set =
        as_index_vector(require_key(j, "levi_set", "model file"), "model file.levi_set");

    if (j.contains("fan")) {
        const auto& fj = j.at("fan");
        reject_unknown_keys(fj, {"dim", "rays", "max_cones"}, "model file.fan");
        out.model.fan = parse_fan_core(fj, "model file.fan");
    } else {
        out.model.fan = Fan{0, {}, {{}}};
    }

    if (j.contains("divisor")) {
        const auto& dj = j.at("divisor");
        if (!dj.is_object())
            throw ParseError("model file.divisor: expected a JSON object");
        reject_unknown_keys(dj, {"colors", "boundary"}, "model file.divisor");
        HoroDivisor div;
        const auto& colors = require_key(dj, "colors", "model file.divisor");
        if (!colors.is_object())
            throw ParseError("model file.divisor.colors: expected an object "
                             "keyed by simple-root indices");
        for (const auto& [key, value] : colors.items()) {
            if (key.empty() ||
                !std::all_of(key.begin(), key.end(), [](unsigned char c) {
                    return std::isdigit(c);
                }))
                throw ParseError("model file.divisor.colors: key \"" + key +
                                 "\" is not a simple-root index");
            div.color_coeffs[std::stoi(key)] =
                as_int(value, "model file.divisor.colors");
        }
        if (dj.contains("boundary"))
            div.boundary_coeffs =
                as_int_vector(dj.at("boundary"), "model file.divisor.boundary");
        out.divisor = std::move(div);
    }
    return out;
}

json fan_to_json(const Fan& fan) {
    json out = json::object();
    out["dim"] = fan.dim;
    out["rays"] = json::array();
    for (const auto& r : fan.rays) out["rays"].push_back(int_vector_to_json(r));
    out["max_cones"] = json::array();
    for (const auto& c : fan.max_cones) {
        json cone = json::array();
        for (int r : c) cone.push_back(r);
        out["max_cones"].push_back(std::move(cone));
    }
    return out;
}

json violations_to_json(const std::vector<FanViolation>& violations) {
    json out = json::object();
    out["ok"] = violations.empty();
    out["violations"] = json::array();
    for (const auto& v : violations) out["violations"].push_back(v.message);
    return out;
}

json table_to_json(const GradedCohomologyTable& table) {
    json out = json::object();
    out["dim"] = table.dim;
    out["totals"] = int_vector_to_json(table.totals);
    out["entries"] = json::array();
    for (const auto& [m, dims] : table.entries) {
        json e = json::object();
        e["m"] = int_vector_to_json(m);
        e["dims"] = int_vector_to_json(dims);
        out["entries"].push_back(std::move(e));
    }
    return out;
}

GradedCohomologyTable table_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("cohomology table: expected a JSON object");
    reject_unknown_keys(j, {"dim", "totals", "entries"}, "cohomology table");
    GradedCohomologyTable out;
    out.dim = as_small_int(require_key(j, "dim", "cohomology table"),
                           "cohomology table.dim");
    out.totals = as_int_vector(require_key(j, "totals", "cohomology table"),
                               "cohomology table.totals");
    const auto& entries = require_key(j, "entries", "cohomology table");
    if (!entries.is_array())
        throw ParseError("cohomology table.entries: expected an array");
    for (const auto& e : entries) {
        reject_unknown_keys(e, {"m", "dims"}, "cohomology table.entries");
        out.entries.emplace(
            as_int_vector(require_key(e, "m", "cohomology table.entries"),
                          "cohomology table.entries.m"),
            as_int_vector(require_key(e, "dims", "cohomology table.entries"),
                          "cohomology table.entries.dims"));
    }
    return out;
}

json bwb_to_json(const BWBResult& result) {
    json out = json::object();
    out["vanishing"] = result.vanishing;
    if (result.vanishing) return out;
    out["degree"] = result.degree;
    out["highest_weight"] = int_vector_to_json(result.highest_weight.coords);
    out["dimension"] = mpz_to_json(result.dimension);
    // The cohomology module is the dual of the highest-weight module V_mu;
    // dimensions are unaffected, so only this flag records the dualization.
    out["module_is_dual"] = true;
    out["word"] = json::array();
    for (int l : result.word.letters) out["word"].push_back(l);
    return out;
}

json report_to_json(const HoroCohomologyReport& report) {
    json out = json::object();
    out["flag_factor"] = bwb_to_json(report.flag);
    out["fiber"] = table_to_json(report.fiber);
    out["degrees"] = json::array();
    for (const auto& row : report.degrees) {
        json r = json::object();
        r["n"] = row.n;
        r["total"] = mpz_to_json(row.total);
        r["contributions"] = json::array();
        for (const auto& c : row.contributions) {
            json e = json::object();
            e["q"] = c.q;
            e["m"] = int_vector_to_json(c.m);
            e["dim"] = c.dim;
            r["contributions"].push_back(std::move(e));
        }
        out["degrees"].push_back(std::move(r));
    }
    return out;
}

std::string weight_to_text(const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string table_to_text(const GradedCohomologyTable& table) {
    std::ostringstream os;
    os << "totals:";
    for (std::size_t i = 0; i < table.totals.size(); ++i)
        os << (i ? ", " : " ") << "h^" << i << " = " << table.totals[i];
    os << "\n";
    if (table.entries.empty()) {
        os << "no weight contributes; all cohomology groups are zero\n";
        return os.str();
    }
    os << "weights with nonzero cohomology:\n";
    for (const auto& [m, dims] : table.entries) {
        os << "  m = " << weight_to_text(m) << ":";
        bool first = true;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (dims[i] == 0) continue;
            os << (first ? " " : ", ") << "h^" << i << " = " << dims[i];
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string bwb_to_text(const BWBResult& result) {
    std::ostringstream os;
    if (result.vanishing) {
        os << "vanishing: the shifted weight meets a wall; "
              "all cohomology groups are zero\n";
        return os.str();
    }
    os << "degree l = " << result.degree << "\n";
    os << "highest weight mu = " << weight_to_text(result.highest_weight.coords)
       << "  [the module is the dual of V_mu]\n";
    os << "dimension = " << result.dimension.get_str() << "\n";
    os << "word =";
    if (result.word.letters.empty()) os << " e";
    for (int l : result.word.letters) os << " s" << l;
    os << "\n";
    return os.str();
}

std::string report_to_text(const HoroCohomologyReport& report) {
    std::ostringstream os;
    if (report.flag.vanishing) {
        os << "flag factor: vanishing (the shifted weight meets a wall)\n";
        os << "all cohomology groups of the total space are zero\n";
        return os.str();
    }
    os << "flag factor: l = " << report.flag.degree << ", mu = "
       << weight_to_text(report.flag.highest_weight.coords)
       << ", dim = " << report.flag.dimension.get_str()
       << "  [dual highest-weight module]\n";
    os << std::setw(4) << "n" << std::setw(4) << "l" << std::setw(4) << "q"
       << "  " << std::left << std::setw(14) << "m" << std::right
       << std::setw(8) << "dim" << "\n";
    for (const auto& row : report.degrees) {
        for (const auto& c : row.contributions)
            os << std::setw(4) << row.n << std::setw(4) << report.flag.degree
               << std::setw(4) << c.q << "  " << std::left << std::setw(14)
               << weight_to_text(c.m) << std::right << std::setw(8) << c.dim
               << "\n";
    }
    os << "totals by degree:";
    for (const auto& row : report.degrees)
        os << (row.n ? ", " : " ") << "n=" << row.n << ": "
           << row.total.get_str();
    os << "\n";
    return os.str();
}

} // namespace horo::io
