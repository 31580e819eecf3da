#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gforge/graph.hpp"
#include "gforge/subdivision_system.hpp"
#include "gforge/verify.hpp"

namespace gforge {

/// Group spec JSON: {"name", "order", "table", "generators",
/// "element_names"?}. Table entries are 0-based element indices.
struct GroupSpec {
    FiniteGroup group;
    std::vector<int> generators;
};

GroupSpec load_group_file(const std::string& path);
GroupSpec parse_group_json(const std::string& text);

/// Resolves a CLI group source: either a file path or the built-in shorthand
/// `cyclic:<m>` (whose default generating set is all non-identity elements).
GroupSpec resolve_group_source(const std::string& source);

/// Graph dump JSON: {"vertices": [names], "edges": [[u,v]..],
/// "labels": {"u->v": "a_1_2", ...}}.
std::string graph_to_json(const LabeledGraph& graph);

/// System JSON: alphabet, involution, rules with provenance, n, letter
/// order, and a length_reducing flag. Stable key and rule ordering.
std::string system_to_json(const SubdivisionSystem& sys);
std::string system_to_json(const RewritingSystem& sys);

/// Loads a rewriting system from system JSON (alphabet + involution +
/// rules); provenance and graph data are not reconstructed.
RewritingSystem system_from_json(const std::string& text);

std::string reports_to_json(const std::vector<VerificationReport>& reports);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace gforge
