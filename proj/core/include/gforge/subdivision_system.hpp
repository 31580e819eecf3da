#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gforge/graph.hpp"
#include "gforge/presentation.hpp"
#include "gforge/rewriting.hpp"

namespace gforge {

/// Rule origin within the construction. Serialized as "R1"/"R2"/"R3":
/// backtrack rules cancel a letter with its inverse; odd-circuit rules
/// shorten the long arc of an odd embedded circuit by one; even-circuit
/// rules replace one half of an even circuit by the slex-minimal half.
enum class RuleOrigin { Backtrack, OddCircuit, EvenCircuit };

const char* rule_origin_tag(RuleOrigin o);

struct RuleProvenance {
    RuleOrigin origin = RuleOrigin::Backtrack;
    std::vector<int> circuit; // vertices in the subdivided graph; (u,v,u) for backtracks
};

/// The full construction output for (G, gens, n): the subdivided labelled
/// Cayley graph, the induced rewriting system and per-rule provenance.
struct SubdivisionSystem {
    FiniteGroup group;
    GenSet gens;
    GenPartition partition;
    int n = 0;
    LabeledGraph base_graph;
    LabeledGraph graph; // the subdivided graph
    SubdivisionMap map;
    LetterOrder order;
    RewritingSystem system;
    std::vector<RuleProvenance> provenance; // parallel to system.rules()
};

enum class OrderKind { Canonical, Reversed };

/// Alphabet for a partition at subdivision depth n: (m1 + 2 m2)(2n+1)
/// letters with the subdivision involution.
Alphabet build_alphabet(const GenPartition& partition, int n);

struct RuleWithProvenance {
    Rule rule;
    RuleProvenance provenance;
};

/// Enumerates the rule set of the subdivided graph: backtrack rules from
/// every directed edge, plus arc-replacement rules from every split of every
/// embedded circuit whose short side is the slex geodesic. Deduplicated,
/// deterministic order.
std::vector<RuleWithProvenance> enumerate_rules(const LabeledGraph& graph,
                                                const std::vector<std::vector<int>>& circuits,
                                                const LetterOrder& order);

/// Full pipeline: partition -> Cayley graph -> subdivide -> enumerate rules.
SubdivisionSystem build_subdivision_system(const FiniteGroup& g, const GenSet& gens, int n,
                                           OrderKind order = OrderKind::Canonical,
                                           const Caps& caps = Caps{});

/// Free reduction on k inverse pairs: the rewriting system of a rank-k free
/// group with its standard generating set.
RewritingSystem free_group_system(int rank);

/// Disjoint union of two systems. The second factor's generator indices are
/// shifted classwise past the first factor's, so disjointness is structural;
/// an overlap after shifting raises AlphabetCollision.
RewritingSystem compose_free_product(const RewritingSystem& a, const RewritingSystem& b);

/// Letter bijection between the one-step alphabet at depth k = 2nm + n + m
/// and the alphabet of an m-step subdivision subdivided again at depth n.
/// Keys are letters of build_alphabet(partition, k); values are letters of
/// the twice-subdivided alphabet (fresh classes from the intermediate
/// partition, first-seen pairing in canonical order).
std::map<Letter, Letter> phi_bijection(const GenPartition& partition, int n, int m);

/// One relator lhs * rhs^-1 per rule (Tietze-free reading of the system as a
/// group presentation). Requires an inverse-closed system.
Presentation presentation_of(const RewritingSystem& sys);

} // namespace gforge
