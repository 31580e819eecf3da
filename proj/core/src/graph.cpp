#include "gforge/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace gforge {

LabeledGraph::LabeledGraph(Alphabet alphabet, int vertex_count)
    : alphabet_(std::move(alphabet)),
      adj_(static_cast<std::size_t>(vertex_count)),
      names_(static_cast<std::size_t>(vertex_count)) {
    if (vertex_count < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    }
}

void LabeledGraph::add_edge(int u, int v, int letter_uv, int letter_vu) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
        throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (u == v) {
        throw Error(ErrorCode::InvalidArgument, "loops are not allowed");
    }
    if (adjacent(u, v)) {
        throw Error(ErrorCode::InvalidArgument,
                    "multi-edge between " + std::to_string(u) + " and " + std::to_string(v));
    }
    int inv = alphabet_.inverse(letter_uv);
    if (inv != letter_vu) {
        throw Error(ErrorCode::InvalidArgument,
                    "edge labels " + to_token(alphabet_.at(letter_uv)) + "/" + to_token(alphabet_.at(letter_vu)) +
                        " are not mutually inverse");
    }
    adj_[static_cast<std::size_t>(u)].push_back(HalfEdge{v, letter_uv});
    adj_[static_cast<std::size_t>(v)].push_back(HalfEdge{u, letter_vu});
    ++edge_count_;
}

bool LabeledGraph::adjacent(int u, int v) const {
    for (const auto& e : neighbors(u)) {
        if (e.to == v) {
            return true;
        }
    }
    return false;
}

int LabeledGraph::label(int u, int v) const {
    for (const auto& e : neighbors(u)) {
        if (e.to == v) {
            return e.letter;
        }
    }
    throw Error(ErrorCode::InvalidArgument, std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
}

int LabeledGraph::neighbor_by_letter(int u, int letter) const {
    for (const auto& e : neighbors(u)) {
        if (e.letter == letter) {
            return e.to;
        }
    }
    return -1;
}

void LabeledGraph::set_vertex_name(int v, std::string name) {
    names_.at(static_cast<std::size_t>(v)) = std::move(name);
}

std::string LabeledGraph::vertex_name(int v) const {
    const auto& n = names_.at(static_cast<std::size_t>(v));
    return n.empty() ? std::to_string(v) : n;
}

bool LabeledGraph::connected() const {
    if (vertex_count() == 0) {
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& e : neighbors(queue[head])) {
            if (!seen[static_cast<std::size_t>(e.to)]) {
                seen[static_cast<std::size_t>(e.to)] = 1;
                queue.push_back(e.to);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

LabeledGraph cayley_graph(const FiniteGroup& g, const GenSet& gens) {
    GenPartition part = partition_generators(g, gens);
    Alphabet alphabet = Alphabet::subdivision(part.m1(), part.m2(), 0);

    std::vector<int> letter_of(static_cast<std::size_t>(g.order), -1);
    for (int i = 0; i < part.m1(); ++i) {
        letter_of[static_cast<std::size_t>(part.sigma1[static_cast<std::size_t>(i)])] =
            alphabet.id(Letter{LetterClass::A, static_cast<std::uint16_t>(i + 1), 1});
    }
    for (int i = 0; i < part.m2(); ++i) {
        letter_of[static_cast<std::size_t>(part.sigma2[static_cast<std::size_t>(i)])] =
            alphabet.id(Letter{LetterClass::B, static_cast<std::uint16_t>(i + 1), 1});
        letter_of[static_cast<std::size_t>(part.sigma3[static_cast<std::size_t>(i)])] =
            alphabet.id(Letter{LetterClass::C, static_cast<std::uint16_t>(i + 1), 1});
    }

    LabeledGraph graph(alphabet, g.order);
    for (int v = 0; v < g.order; ++v) {
        graph.set_vertex_name(v, g.element_name(v));
    }
    for (int u = 0; u < g.order; ++u) {
        for (int v = u + 1; v < g.order; ++v) {
            int d = g.mul(g.inv(u), v);
            int letter = letter_of[static_cast<std::size_t>(d)];
            if (letter >= 0) {
                graph.add_edge(u, v, letter, letter_of[static_cast<std::size_t>(g.inv(d))]);
            }
        }
    }
    return graph;
}

namespace {

struct BfsData {
    std::vector<int> dist;
    std::vector<std::vector<int>> preds;
    std::vector<int> count; // geodesic multiplicity saturated at 2
};

BfsData bfs_count(const LabeledGraph& graph, int source) {
    BfsData d;
    d.dist.assign(static_cast<std::size_t>(graph.vertex_count()), -1);
    d.preds.assign(static_cast<std::size_t>(graph.vertex_count()), {});
    d.count.assign(static_cast<std::size_t>(graph.vertex_count()), 0);
    std::deque<int> queue{source};
    d.dist[static_cast<std::size_t>(source)] = 0;
    d.count[static_cast<std::size_t>(source)] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& e : graph.neighbors(u)) {
            auto v = static_cast<std::size_t>(e.to);
            if (d.dist[v] == -1) {
                d.dist[v] = d.dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(e.to);
            }
            if (d.dist[v] == d.dist[static_cast<std::size_t>(u)] + 1) {
                d.preds[v].push_back(u);
                d.count[v] = std::min(2, d.count[v] + d.count[static_cast<std::size_t>(u)]);
            }
        }
    }
    for (auto& p : d.preds) {
        std::sort(p.begin(), p.end());
    }
    return d;
}

std::vector<int> one_path(const BfsData& d, int v) {
    std::vector<int> path{v};
    while (d.dist[static_cast<std::size_t>(v)] > 0) {
        v = d.preds[static_cast<std::size_t>(v)].front();
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// Two distinct geodesics source -> v; defined when count[v] >= 2.
std::pair<std::vector<int>, std::vector<int>> two_paths(const BfsData& d, int v) {
    std::vector<int> suffix; // walked back from the target
    int u = v;
    while (true) {
        const auto& preds = d.preds[static_cast<std::size_t>(u)];
        if (preds.size() >= 2) {
            auto a = one_path(d, preds[0]);
            auto b = one_path(d, preds[1]);
            a.push_back(u);
            b.push_back(u);
            for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
                a.push_back(*it);
                b.push_back(*it);
            }
            return {a, b};
        }
        // Single predecessor with multiplicity >= 2 further up.
        suffix.push_back(u);
        u = preds.front();
    }
}

} // namespace

GeodeticResult is_geodetic(const LabeledGraph& graph) {
    if (!graph.connected()) {
        throw Error(ErrorCode::Disconnected, "graph is not connected");
    }
    for (int u = 0; u < graph.vertex_count(); ++u) {
        BfsData d = bfs_count(graph, u);
        for (int v = 0; v < graph.vertex_count(); ++v) {
            if (d.count[static_cast<std::size_t>(v)] >= 2) {
                auto [p1, p2] = two_paths(d, v);
                return GeodeticResult{false, GeodeticWitness{u, v, std::move(p1), std::move(p2)}};
            }
        }
    }
    return GeodeticResult{true, std::nullopt};
}

const SubdivisionMap::EdgePath* SubdivisionMap::find_edge(int base_u, int base_v) const {
    for (const auto& e : edges) {
        if ((e.base_u == base_u && e.base_v == base_v) || (e.base_u == base_v && e.base_v == base_u)) {
            return &e;
        }
    }
    return nullptr;
}

Subdivision subdivide(const LabeledGraph& graph, int n) {
    if (n < 0) {
        throw Error(ErrorCode::InvalidArgument, "subdivision depth must be >= 0");
    }
    const Alphabet& base = graph.alphabet();
    if (!base.involution_total()) {
        throw Error(ErrorCode::NotInverseClosed, "graph alphabet lacks a total involution");
    }

    // First-seen partition of the base alphabet in canonical (id) order.
    SubdivisionMap map;
    map.n = n;
    std::vector<int> klass_of(base.size(), -1); // 0 involutive, 1 b-side, 2 c-side
    std::vector<int> index_of(base.size(), 0);  // 1-based class index in the new alphabet
    for (int x = 0; x < static_cast<int>(base.size()); ++x) {
        if (klass_of[static_cast<std::size_t>(x)] != -1) {
            continue;
        }
        int y = base.inverse(x);
        if (y == x) {
            map.involutive_sources.push_back(x);
            klass_of[static_cast<std::size_t>(x)] = 0;
            index_of[static_cast<std::size_t>(x)] = static_cast<int>(map.involutive_sources.size());
        } else {
            map.paired_sources.emplace_back(x, y);
            klass_of[static_cast<std::size_t>(x)] = 1;
            klass_of[static_cast<std::size_t>(y)] = 2;
            index_of[static_cast<std::size_t>(x)] = static_cast<int>(map.paired_sources.size());
            index_of[static_cast<std::size_t>(y)] = static_cast<int>(map.paired_sources.size());
        }
    }

    const int m1 = static_cast<int>(map.involutive_sources.size());
    const int m2 = static_cast<int>(map.paired_sources.size());
    Alphabet fine = Alphabet::subdivision(m1, m2, n);

    const int base_vertices = graph.vertex_count();
    const std::int64_t total = base_vertices + 2LL * n * graph.edge_count();
    if (total > 50'000'000) {
        throw Error(ErrorCode::InvalidArgument,
                    "subdivision would create " + std::to_string(total) + " vertices");
    }
    LabeledGraph out(fine, static_cast<int>(total));
    map.old_vertex.resize(static_cast<std::size_t>(base_vertices));
    for (int v = 0; v < base_vertices; ++v) {
        map.old_vertex[static_cast<std::size_t>(v)] = v;
        out.set_vertex_name(v, graph.vertex_name(v));
    }

    int next_vertex = base_vertices;
    auto letter_id = [&](int klass, int idx, int j) {
        LetterClass k = klass == 0 ? LetterClass::A : (klass == 1 ? LetterClass::B : LetterClass::C);
        return fine.id(Letter{k, static_cast<std::uint16_t>(idx), static_cast<std::uint16_t>(j)});
    };

    for (int u = 0; u < base_vertices; ++u) {
        for (const auto& e : graph.neighbors(u)) {
            if (e.to < u) {
                continue; // one pass per undirected edge
            }
            // Forward direction carries the involutive or b-side label.
            int g = u;
            int h = e.to;
            int letter = e.letter;
            if (klass_of[static_cast<std::size_t>(letter)] == 2) {
                std::swap(g, h);
                letter = base.inverse(letter);
            }
            const int klass = klass_of[static_cast<std::size_t>(letter)];
            const int idx = index_of[static_cast<std::size_t>(letter)];

            SubdivisionMap::EdgePath path;
            path.base_u = g;
            path.base_v = h;
            for (int t = 0; t < 2 * n; ++t) {
                path.interior.push_back(next_vertex);
                out.set_vertex_name(next_vertex,
                                    graph.vertex_name(g) + "|" + graph.vertex_name(h) + "." + std::to_string(t + 1));
                ++next_vertex;
            }
            int prev = g;
            for (int j = 1; j <= 2 * n + 1; ++j) {
                int cur = j == 2 * n + 1 ? h : path.interior[static_cast<std::size_t>(j - 1)];
                int forward;
                int backward;
                if (klass == 0) {
                    forward = letter_id(0, idx, j);
                    backward = letter_id(0, idx, 2 * n + 2 - j);
                } else {
                    forward = letter_id(1, idx, j);
                    backward = letter_id(2, idx, j);
                }
                out.add_edge(prev, cur, forward, backward);
                prev = cur;
            }
            map.edges.push_back(std::move(path));
        }
    }
    return Subdivision{std::move(out), std::move(map)};
}

SlexTree slex_tree(const LabeledGraph& graph, int source, const LetterOrder& order) {
    const auto size = static_cast<std::size_t>(graph.vertex_count());
    SlexTree tree;
    tree.dist.assign(size, -1);
    tree.labels.assign(size, {});
    tree.dist[static_cast<std::size_t>(source)] = 0;
    std::vector<int> frontier{source};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            for (const auto& e : graph.neighbors(a)) {
                auto b = static_cast<std::size_t>(e.to);
                if (tree.dist[b] == -1 || tree.dist[b] == tree.dist[static_cast<std::size_t>(a)] + 1) {
                    std::vector<int> candidate = tree.labels[static_cast<std::size_t>(a)];
                    candidate.push_back(e.letter);
                    if (tree.dist[b] == -1) {
                        tree.dist[b] = tree.dist[static_cast<std::size_t>(a)] + 1;
                        tree.labels[b] = std::move(candidate);
                        next.push_back(e.to);
                    } else if (shortlex_compare(candidate, tree.labels[b], order) < 0) {
                        tree.labels[b] = std::move(candidate);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return tree;
}

Word slex_geodesic(const LabeledGraph& graph, int u, int v, const LetterOrder& order) {
    if (u == v) {
        return Word{};
    }
    SlexTree tree = slex_tree(graph, u, order);
    if (tree.dist[static_cast<std::size_t>(v)] == -1) {
        throw Error(ErrorCode::Unreachable,
                    "no path from " + std::to_string(u) + " to " + std::to_string(v));
    }
    Word w;
    for (int id : tree.labels[static_cast<std::size_t>(v)]) {
        w.push_back(graph.alphabet().at(id));
    }
    return w;
}

std::vector<int> canonical_circuit(const std::vector<int>& circuit) {
    const std::size_t len = circuit.size();
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t start = 0; start < len; ++start) {
            std::vector<int> candidate(len);
            for (std::size_t i = 0; i < len; ++i) {
                std::size_t pos = dir == 0 ? (start + i) % len : (start + len - i) % len;
                candidate[i] = circuit[pos];
            }
            if (best.empty() || candidate < best) {
                best = std::move(candidate);
            }
        }
    }
    return best;
}

std::vector<std::vector<int>> enumerate_embedded_circuits(const LabeledGraph& graph, const Caps& caps) {
    if (graph.vertex_count() > caps.max_circuit_vertices) {
        throw Error(ErrorCode::CircuitCapExceeded,
                    "graph has " + std::to_string(graph.vertex_count()) + " vertices, cap is " +
                        std::to_string(caps.max_circuit_vertices));
    }
    std::vector<std::vector<int>> circuits;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(graph.vertex_count()), 0);

    // Each circuit is found once: the root is its least vertex and the
    // second vertex is smaller than the last.
    auto dfs = [&](auto&& self, int root, int u) -> void {
        for (const auto& e : graph.neighbors(u)) {
            int v = e.to;
            if (v == root) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (static_cast<std::int64_t>(circuits.size()) >= caps.max_circuits) {
                        throw Error(ErrorCode::CircuitCapExceeded,
                                    "more than " + std::to_string(caps.max_circuits) + " circuits");
                    }
                    circuits.push_back(path);
                }
                continue;
            }
            if (v < root || on_path[static_cast<std::size_t>(v)]) {
                continue;
            }
            path.push_back(v);
            on_path[static_cast<std::size_t>(v)] = 1;
            self(self, root, v);
            on_path[static_cast<std::size_t>(v)] = 0;
            path.pop_back();
        }
    };

    for (int root = 0; root < graph.vertex_count(); ++root) {
        path.assign(1, root);
        on_path.assign(static_cast<std::size_t>(graph.vertex_count()), 0);
        on_path[static_cast<std::size_t>(root)] = 1;
        dfs(dfs, root, root);
    }
    std::sort(circuits.begin(), circuits.end());
    return circuits;
}

std::vector<std::vector<int>> lift_circuits(const std::vector<std::vector<int>>& base_circuits,
                                            const SubdivisionMap& map) {
    std::vector<std::vector<int>> lifted;
    lifted.reserve(base_circuits.size());
    for (const auto& circuit : base_circuits) {
        std::vector<int> up;
        const std::size_t len = circuit.size();
        for (std::size_t i = 0; i < len; ++i) {
            int a = circuit[i];
            int b = circuit[(i + 1) % len];
            up.push_back(map.old_vertex[static_cast<std::size_t>(a)]);
            const auto* edge = map.find_edge(a, b);
            if (edge == nullptr) {
                throw Error(ErrorCode::InvalidArgument, "circuit edge missing from subdivision map");
            }
            if (edge->base_u == a) {
                up.insert(up.end(), edge->interior.begin(), edge->interior.end());
            } else {
                up.insert(up.end(), edge->interior.rbegin(), edge->interior.rend());
            }
        }
        lifted.push_back(std::move(up));
    }
    return lifted;
}

bool check_label_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2,
                             const std::vector<int>& letter_bijection, int base1, int base2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) {
        return false;
    }
    if (letter_bijection.size() != g1.alphabet().size()) {
        throw Error(ErrorCode::InvalidArgument, "letter bijection has the wrong size");
    }
    const auto size = static_cast<std::size_t>(g1.vertex_count());
    std::vector<int> image(size, -1);
    std::vector<char> hit(size, 0);
    image[static_cast<std::size_t>(base1)] = base2;
    hit[static_cast<std::size_t>(base2)] = 1;
    std::vector<int> queue{base1};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u1 = queue[head];
        int u2 = image[static_cast<std::size_t>(u1)];
        for (const auto& e : g1.neighbors(u1)) {
            int mapped = letter_bijection[static_cast<std::size_t>(e.letter)];
            int v2 = g2.neighbor_by_letter(u2, mapped);
            if (v2 < 0) {
                return false;
            }
            int& slot = image[static_cast<std::size_t>(e.to)];
            if (slot == -1) {
                if (hit[static_cast<std::size_t>(v2)]) {
                    return false; // not injective
                }
                slot = v2;
                hit[static_cast<std::size_t>(v2)] = 1;
                queue.push_back(e.to);
            } else if (slot != v2) {
                return false;
            }
        }
    }
    if (queue.size() != size) {
        return false; // g1 disconnected from base1
    }
    // Edge counts match and every directed edge of g1 was verified, so the
    // grown bijection is a labelled isomorphism.
    return true;
}

std::vector<std::int64_t> ball_sizes(const LabeledGraph& graph, int base, int radius) {
    if (radius < 0) {
        throw Error(ErrorCode::InvalidArgument, "radius must be >= 0");
    }
    std::vector<std::int64_t> spheres(static_cast<std::size_t>(radius) + 1, 0);
    std::vector<int> dist(static_cast<std::size_t>(graph.vertex_count()), -1);
    std::deque<int> queue{base};
    dist[static_cast<std::size_t>(base)] = 0;
    spheres[0] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(u)] == radius) {
            continue;
        }
        for (const auto& e : graph.neighbors(u)) {
            if (dist[static_cast<std::size_t>(e.to)] == -1) {
                dist[static_cast<std::size_t>(e.to)] = dist[static_cast<std::size_t>(u)] + 1;
                ++spheres[static_cast<std::size_t>(dist[static_cast<std::size_t>(e.to)])];
                queue.push_back(e.to);
            }
        }
    }
    return spheres;
}

std::string export_dot(const LabeledGraph& graph, const DotOptions& options) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < graph.vertex_count(); ++v) {
        out << "  " << v;
        if (options.vertex_names) {
            out << " [label=\"" << graph.vertex_name(v) << "\"]";
        }
        out << ";\n";
    }
    for (int u = 0; u < graph.vertex_count(); ++u) {
        for (const auto& e : graph.neighbors(u)) {
            if (e.to > u) {
                out << "  " << u << " -- " << e.to << " [label=\"" << to_token(graph.alphabet().at(e.letter)) << "/"
                    << to_token(graph.alphabet().at(graph.label(e.to, u))) << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace gforge
