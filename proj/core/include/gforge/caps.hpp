#pragma once

#include <cstdint>
#include <string>

namespace gforge {

/// Resource guards for the exhaustive searches. Defaults suit desk-scale
/// inputs; override programmatically, via the GEODETIC_FORGE_CAPS environment
/// variable (a JSON fragment, e.g. {"max_circuits": 1000}), or per-run flags.
struct Caps {
    int max_circuit_vertices = 64;      // base-graph size admitted to circuit enumeration
    std::int64_t max_circuits = 1'000'000;
    std::int64_t step_cap = 100'000;    // rewrite steps per normal_form call
    std::int64_t hom_cap = 10'000'000;  // homomorphism search nodes
    std::int64_t census_cap = 10'000'000; // irreducible words visited

    /// Applies overrides from a JSON object text; unknown keys are errors.
    void apply_json(const std::string& json_text);

    /// Defaults plus GEODETIC_FORGE_CAPS from the environment, if set.
    static Caps from_env();
};

} // namespace gforge
