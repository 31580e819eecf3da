#include "gforge/caps.hpp"

#include <cstdlib>

#include <json.hpp>

#include "gforge/errors.hpp"

namespace gforge {

void Caps::apply_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad caps JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw Error(ErrorCode::InvalidArgument, "caps JSON must be an object");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer() || it.value().get<std::int64_t>() <= 0) {
            throw Error(ErrorCode::InvalidArgument, "cap '" + it.key() + "' must be a positive integer");
        }
        std::int64_t v = it.value().get<std::int64_t>();
        if (it.key() == "max_circuit_vertices") {
            max_circuit_vertices = static_cast<int>(v);
        } else if (it.key() == "max_circuits") {
            max_circuits = v;
        } else if (it.key() == "step_cap") {
            step_cap = v;
        } else if (it.key() == "hom_cap") {
            hom_cap = v;
        } else if (it.key() == "census_cap") {
            census_cap = v;
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown cap '" + it.key() + "'");
        }
    }
}

Caps Caps::from_env() {
    Caps caps;
    if (const char* env = std::getenv("GEODETIC_FORGE_CAPS")) {
        caps.apply_json(env);
    }
    return caps;
}

} // namespace gforge
