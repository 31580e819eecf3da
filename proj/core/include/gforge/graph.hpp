#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gforge/alphabet.hpp"
#include "gforge/caps.hpp"
#include "gforge/group.hpp"

namespace gforge {

/// Simple undirected graph whose directed edge sides carry mutually inverse
/// letters: L(u,v) and L(v,u) are inverses, equal exactly for involutive
/// letters.
class LabeledGraph {
  public:
    struct HalfEdge {
        int to = 0;
        int letter = 0; // letter id in alphabet()
    };

    LabeledGraph() = default;
    LabeledGraph(Alphabet alphabet, int vertex_count);

    void add_edge(int u, int v, int letter_uv, int letter_vu);

    const Alphabet& alphabet() const { return alphabet_; }
    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    const std::vector<HalfEdge>& neighbors(int u) const { return adj_.at(static_cast<std::size_t>(u)); }
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    bool adjacent(int u, int v) const;
    int label(int u, int v) const; // throws InvalidArgument if not adjacent
    /// Vertex reached from u along the edge labelled `letter`, or -1.
    int neighbor_by_letter(int u, int letter) const;

    void set_vertex_name(int v, std::string name);
    std::string vertex_name(int v) const;

    bool connected() const;

  private:
    Alphabet alphabet_;
    std::vector<std::vector<HalfEdge>> adj_;
    std::vector<std::string> names_;
    std::int64_t edge_count_ = 0;
};

/// Cayley graph of (G, gens): vertices are group elements, {g,h} is an edge
/// iff g^-1 h is a generator, and labels are base letters (pos == 1) chosen
/// per the generator partition.
LabeledGraph cayley_graph(const FiniteGroup& g, const GenSet& gens);

struct GeodeticWitness {
    int u = 0;
    int v = 0;
    std::vector<int> path1;
    std::vector<int> path2;
};

struct GeodeticResult {
    bool geodetic = false;
    std::optional<GeodeticWitness> witness; // two equal-length geodesics when not geodetic
};

/// Exact all-pairs decision by BFS geodesic counting. Throws Disconnected.
GeodeticResult is_geodetic(const LabeledGraph& graph);

/// Correspondence data of an edge subdivision: where base vertices land and,
/// per base edge, the interior path in forward orientation.
struct SubdivisionMap {
    struct EdgePath {
        int base_u = 0;               // forward orientation: base_u -> base_v
        int base_v = 0;
        std::vector<int> interior;    // 2n interior vertices in path order
    };

    int n = 0;
    std::vector<int> old_vertex;      // base vertex -> subdivided vertex
    std::vector<EdgePath> edges;
    // How base letters map into the new alphabet: sources of involutive
    // (A-class) letters and of B/C pairs, as base letter ids in scan order.
    std::vector<int> involutive_sources;
    std::vector<std::pair<int, int>> paired_sources;

    const EdgePath* find_edge(int base_u, int base_v) const;
};

struct Subdivision {
    LabeledGraph graph;
    SubdivisionMap map;
};

/// Replaces every edge by a path of 2n+1 edges. The forward direction of an
/// edge is the one carrying an involutive or B-side label; it reads letters
/// with ascending pos, the reverse direction reads the inverse letters
/// (descending for C-side labels). Requires a total involution.
Subdivision subdivide(const LabeledGraph& graph, int n);

/// Label of the slex-minimal path u -> v: shortest first, then
/// lexicographically least under `order`. Throws Unreachable.
Word slex_geodesic(const LabeledGraph& graph, int u, int v, const LetterOrder& order);

/// BFS distances from `source` plus, per vertex, the id-word labelling the
/// slex-minimal geodesic from the source (empty and dist -1 if unreachable).
struct SlexTree {
    std::vector<int> dist;
    std::vector<std::vector<int>> labels;
};

SlexTree slex_tree(const LabeledGraph& graph, int source, const LetterOrder& order);

/// All embedded circuits (closed paths of length >= 3 whose only repeated
/// vertex is the endpoint), one representative per rotation/reflection
/// class: the lexicographically least vertex sequence. Deterministic order.
std::vector<std::vector<int>> enumerate_embedded_circuits(const LabeledGraph& graph,
                                                          const Caps& caps = Caps{});

/// Lifts base circuits through a subdivision; interior vertices have degree
/// two, so these are all embedded circuits of the subdivided graph.
std::vector<std::vector<int>> lift_circuits(const std::vector<std::vector<int>>& base_circuits,
                                            const SubdivisionMap& map);

/// Canonical representative of a circuit under rotation and reflection.
std::vector<int> canonical_circuit(const std::vector<int>& circuit);

/// True iff the vertex map grown from base1 -> base2 by following
/// equally-labelled edges (under the letter id bijection) is a labelled
/// graph isomorphism. Both graphs must be connected.
bool check_label_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2,
                             const std::vector<int>& letter_bijection, int base1, int base2);

/// Sphere cardinalities |{v : d(base,v) = r}| for r = 0..radius.
std::vector<std::int64_t> ball_sizes(const LabeledGraph& graph, int base, int radius);

struct DotOptions {
    bool vertex_names = true;
};

/// Graphviz text; one undirected edge per graph edge, labelled "x/y" with
/// both directed letters (low-endpoint side first).
std::string export_dot(const LabeledGraph& graph, const DotOptions& options = DotOptions{});

} // namespace gforge
