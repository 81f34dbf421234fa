#pragma once

#include "horocohom/bwb.hpp"
#include "horocohom/demazure.hpp"
#include "horocohom/fan.hpp"
#include "horocohom/horospherical.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

// JSON input and output. Every number must be an integer literal fitting in
// 64 bits; floating-point literals and unknown keys are rejected. Emitted
// documents have a deterministic field and entry order, so byte-identical
// reruns are guaranteed.

namespace horo::io {

using json = nlohmann::ordered_json;

json load_json_file(const std::string& path);
json parse_json_text(const std::string& text);

struct FanFile {
    Fan fan;
    std::optional<ToricDivisor> divisor;
};

struct ModelFile {
    HorosphericalModel model;
    std::optional<HoroDivisor> divisor;
};

// Model files are distinguished from fan files by the "root_type" key.
bool looks_like_model(const json& j);

// Fan file: {"dim", "rays", "max_cones", "divisor"?}.
FanFile parse_fan_file(const json& j);

// Model file: {"root_type": "A2" | ["A1","A1"], "levi_set": [...],
// "fan"?: {...}, "divisor"?: {"colors": {"1": -3, ...}, "boundary": [...]}}.
// A missing fan means the zero-dimensional (point) fiber.
ModelFile parse_model_file(const json& j);

json fan_to_json(const Fan& fan);
json violations_to_json(const std::vector<FanViolation>& violations);
json table_to_json(const GradedCohomologyTable& table);
GradedCohomologyTable table_from_json(const json& j);
json bwb_to_json(const BWBResult& result);
json report_to_json(const HoroCohomologyReport& report);

std::string weight_to_text(const std::vector<std::int64_t>& v);
std::string table_to_text(const GradedCohomologyTable& table);
std::string bwb_to_text(const BWBResult& result);
std::string report_to_text(const HoroCohomologyReport& report);

} // namespace horo::io
