#include "gforge/subdivision_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gforge {

const char* rule_origin_tag(RuleOrigin o) {
    switch (o) {
        case RuleOrigin::Backtrack: return "R1";
        case RuleOrigin::OddCircuit: return "R2";
        case RuleOrigin::EvenCircuit: return "R3";
    }
    return "?";
}

Alphabet build_alphabet(const GenPartition& partition, int n) {
    return Alphabet::subdivision(partition.m1(), partition.m2(), n);
}

namespace {

using IdWord = std::vector<int>;

struct PendingRule {
    RuleProvenance provenance;
};

} // namespace

std::vector<RuleWithProvenance> enumerate_rules(const LabeledGraph& graph,
                                                const std::vector<std::vector<int>>& circuits,
                                                const LetterOrder& order) {
    std::map<std::pair<IdWord, IdWord>, RuleProvenance> pending;
    auto emit = [&](IdWord lhs, IdWord rhs, RuleProvenance prov) {
        if (lhs == rhs) {
            return;
        }
        pending.emplace(std::make_pair(std::move(lhs), std::move(rhs)), std::move(prov));
    };

    // Backtrack rules: one per directed edge, i.e. x x^-1 -> empty for every
    // letter occurring on an edge.
    for (int u = 0; u < graph.vertex_count(); ++u) {
        for (const auto& e : graph.neighbors(u)) {
            int back = graph.label(e.to, u);
            emit(IdWord{e.letter, back}, IdWord{}, RuleProvenance{RuleOrigin::Backtrack, {u, e.to, u}});
        }
    }

    // Arc-replacement rules from circuit splits. The short side must be the
    // globally slex-minimal path between the split vertices.
    std::map<int, SlexTree> trees;
    auto tree_for = [&](int source) -> const SlexTree& {
        auto it = trees.find(source);
        if (it == trees.end()) {
            it = trees.emplace(source, slex_tree(graph, source, order)).first;
        }
        return it->second;
    };

    for (const auto& circuit : circuits) {
        const int len = static_cast<int>(circuit.size());
        std::vector<int> fwd(static_cast<std::size_t>(len));
        std::vector<int> bwd(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            fwd[static_cast<std::size_t>(i)] = graph.label(circuit[static_cast<std::size_t>(i)],
                                                           circuit[static_cast<std::size_t>((i + 1) % len)]);
            bwd[static_cast<std::size_t>(i)] = graph.label(circuit[static_cast<std::size_t>(i)],
                                                           circuit[static_cast<std::size_t>((i + len - 1) % len)]);
        }
        auto forward_arc = [&](int s, int steps) {
            IdWord w;
            w.reserve(static_cast<std::size_t>(steps));
            for (int i = 0; i < steps; ++i) {
                w.push_back(fwd[static_cast<std::size_t>((s + i) % len)]);
            }
            return w;
        };
        auto backward_arc = [&](int s, int steps) {
            IdWord w;
            w.reserve(static_cast<std::size_t>(steps));
            for (int i = 0; i < steps; ++i) {
                w.push_back(bwd[static_cast<std::size_t>((s + len - i) % len)]);
            }
            return w;
        };

        const bool odd = len % 2 == 1;
        for (int s = 0; s < len; ++s) {
            const SlexTree& tree = tree_for(circuit[static_cast<std::size_t>(s)]);
            for (int t = 0; t < len; ++t) {
                if (t == s) {
                    continue;
                }
                const int flen = (t - s + len) % len;
                const int blen = len - flen;
                IdWord alpha;
                IdWord beta;
                if (odd && flen == blen + 1) {
                    alpha = forward_arc(s, flen);
                    beta = backward_arc(s, blen);
                } else if (odd && blen == flen + 1) {
                    alpha = backward_arc(s, blen);
                    beta = forward_arc(s, flen);
                } else if (!odd && flen == blen) {
                    // Even split; try both orientations (only the one whose
                    // short side is slex-minimal survives below).
                    alpha = backward_arc(s, blen);
                    beta = forward_arc(s, flen);
                    const int target0 = circuit[static_cast<std::size_t>(t)];
                    if (static_cast<int>(beta.size()) == tree.dist[static_cast<std::size_t>(target0)] &&
                        beta == tree.labels[static_cast<std::size_t>(target0)]) {
                        emit(std::move(alpha), std::move(beta),
                             RuleProvenance{RuleOrigin::EvenCircuit, circuit});
                    }
                    alpha = forward_arc(s, flen);
                    beta = backward_arc(s, blen);
                } else {
                    continue;
                }
                const int target = circuit[static_cast<std::size_t>(t)];
                if (static_cast<int>(beta.size()) == tree.dist[static_cast<std::size_t>(target)] &&
                    beta == tree.labels[static_cast<std::size_t>(target)]) {
                    emit(std::move(alpha), std::move(beta),
                         RuleProvenance{odd ? RuleOrigin::OddCircuit : RuleOrigin::EvenCircuit, circuit});
                }
            }
        }
    }

    // Deterministic output order: backtracks first, then by shortlex lhs/rhs
    // under the canonical letter order.
    std::vector<std::pair<std::pair<IdWord, IdWord>, RuleProvenance>> flat(pending.begin(), pending.end());
    std::stable_sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) {
        auto key = [](const auto& entry) {
            return std::make_tuple(static_cast<int>(entry.second.origin), entry.first.first.size(),
                                   entry.first.first, entry.first.second);
        };
        return key(x) < key(y);
    });

    std::vector<RuleWithProvenance> out;
    out.reserve(flat.size());
    for (auto& [words, prov] : flat) {
        Rule rule;
        for (int id : words.first) {
            rule.lhs.push_back(graph.alphabet().at(id));
        }
        for (int id : words.second) {
            rule.rhs.push_back(graph.alphabet().at(id));
        }
        out.push_back(RuleWithProvenance{std::move(rule), std::move(prov)});
    }
    return out;
}

SubdivisionSystem build_subdivision_system(const FiniteGroup& g, const GenSet& gens, int n, OrderKind order,
                                           const Caps& caps) {
    SubdivisionSystem out;
    out.group = g;
    out.gens = gens;
    out.partition = partition_generators(g, gens);
    out.n = n;
    out.base_graph = cayley_graph(g, gens);

    auto base_circuits = enumerate_embedded_circuits(out.base_graph, caps);
    Subdivision sub = subdivide(out.base_graph, n);
    out.graph = std::move(sub.graph);
    out.map = std::move(sub.map);
    out.order = order == OrderKind::Canonical ? LetterOrder::canonical(out.graph.alphabet())
                                              : LetterOrder::reversed(out.graph.alphabet());

    auto lifted = lift_circuits(base_circuits, out.map);
    auto rules = enumerate_rules(out.graph, lifted, out.order);

    std::vector<Rule> plain;
    plain.reserve(rules.size());
    out.provenance.reserve(rules.size());
    for (auto& r : rules) {
        plain.push_back(std::move(r.rule));
        out.provenance.push_back(std::move(r.provenance));
    }
    out.system = RewritingSystem(out.graph.alphabet(), std::move(plain));
    return out;
}

RewritingSystem free_group_system(int rank) {
    if (rank < 0) {
        throw Error(ErrorCode::InvalidArgument, "free rank must be >= 0");
    }
    Alphabet alphabet = Alphabet::subdivision(0, rank, 0);
    std::vector<Rule> rules;
    for (int i = 1; i <= rank; ++i) {
        Letter b{LetterClass::B, static_cast<std::uint16_t>(i), 1};
        Letter c{LetterClass::C, static_cast<std::uint16_t>(i), 1};
        rules.push_back(Rule{{b, c}, {}});
        rules.push_back(Rule{{c, b}, {}});
    }
    return RewritingSystem(std::move(alphabet), std::move(rules));
}

namespace {

std::array<int, 3> class_offsets(const Alphabet& a) {
    std::array<int, 3> top{0, 0, 0};
    for (const Letter& x : a.letters()) {
        auto k = static_cast<std::size_t>(x.klass);
        top[k] = std::max(top[k], static_cast<int>(x.gen));
    }
    // B and C indices must shift together so inverse pairs stay aligned.
    int bc = std::max(top[1], top[2]);
    top[1] = bc;
    top[2] = bc;
    return top;
}

} // namespace

RewritingSystem compose_free_product(const RewritingSystem& a, const RewritingSystem& b) {
    const std::array<int, 3> shift = class_offsets(a.alphabet());
    auto rename = [&](const Letter& x) {
        Letter y = x;
        y.gen = static_cast<std::uint16_t>(y.gen + shift[static_cast<std::size_t>(x.klass)]);
        return y;
    };

    std::vector<Letter> letters = a.alphabet().letters();
    for (const Letter& x : b.alphabet().letters()) {
        Letter y = rename(x);
        if (a.alphabet().contains(y)) {
            throw Error(ErrorCode::AlphabetCollision, "letter " + to_token(y) + " present in both factors");
        }
        letters.push_back(y);
    }
    Alphabet combined(std::move(letters));
    for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
        int inv = a.alphabet().inverse(static_cast<int>(i));
        if (inv >= 0) {
            combined.set_inverse(combined.id(a.alphabet().at(static_cast<int>(i))),
                                 combined.id(a.alphabet().at(inv)));
        }
    }
    for (std::size_t i = 0; i < b.alphabet().size(); ++i) {
        int inv = b.alphabet().inverse(static_cast<int>(i));
        if (inv >= 0) {
            combined.set_inverse(combined.id(rename(b.alphabet().at(static_cast<int>(i)))),
                                 combined.id(rename(b.alphabet().at(inv))));
        }
    }

    std::vector<Rule> rules = a.rules();
    for (const auto& r : b.rules()) {
        Rule shifted;
        for (const Letter& x : r.lhs) {
            shifted.lhs.push_back(rename(x));
        }
        for (const Letter& x : r.rhs) {
            shifted.rhs.push_back(rename(x));
        }
        rules.push_back(std::move(shifted));
    }
    return RewritingSystem(std::move(combined), std::move(rules));
}

std::map<Letter, Letter> phi_bijection(const GenPartition& partition, int n, int m) {
    if (n < 0 || m < 0) {
        throw Error(ErrorCode::InvalidArgument, "subdivision depths must be >= 0");
    }
    const int m1 = partition.m1();
    const int m2 = partition.m2();
    const int k = 2 * n * m + n + m;
    const int span = 2 * n + 1;

    // Intermediate pairing of the depth-m alphabet, first-seen in canonical
    // order: a_{i,s} with s <= m opens the pair (a_{i,s}, a_{i,2m+2-s});
    // a_{i,m+1} stays involutive; b_{i,s} pairs with c_{i,s}.
    auto a_pair_index = [&](int i, int s) { return (i - 1) * m + s; };
    auto bc_pair_index = [&](int i, int s) { return m1 * m + (i - 1) * (2 * m + 1) + s; };

    std::map<Letter, Letter> phi;
    auto put = [&](LetterClass klass, int i, int u, LetterClass tk, int ti, int tj) {
        phi.emplace(Letter{klass, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(u)},
                    Letter{tk, static_cast<std::uint16_t>(ti), static_cast<std::uint16_t>(tj)});
    };

    for (int i = 1; i <= m1; ++i) {
        for (int u = 1; u <= 2 * k + 1; ++u) {
            const int s = (u - 1) / span + 1;
            const int t = (u - 1) % span + 1;
            if (s <= m) {
                put(LetterClass::A, i, u, LetterClass::B, a_pair_index(i, s), t);
            } else if (s == m + 1) {
                put(LetterClass::A, i, u, LetterClass::A, i, t);
            } else {
                put(LetterClass::A, i, u, LetterClass::C, a_pair_index(i, 2 * m + 2 - s), 2 * n + 2 - t);
            }
        }
    }
    for (int i = 1; i <= m2; ++i) {
        for (int u = 1; u <= 2 * k + 1; ++u) {
            const int s = (u - 1) / span + 1;
            const int t = (u - 1) % span + 1;
            put(LetterClass::B, i, u, LetterClass::B, bc_pair_index(i, s), t);
            put(LetterClass::C, i, u, LetterClass::C, bc_pair_index(i, s), t);
        }
    }
    return phi;
}

Presentation presentation_of(const RewritingSystem& sys) {
    const Alphabet& a = sys.alphabet();
    if (!a.involution_total()) {
        throw Error(ErrorCode::NotInverseClosed, "system alphabet lacks a total involution");
    }
    Presentation p;
    p.generator_count = static_cast<int>(a.size());
    for (std::size_t r = 0; r < sys.rule_count(); ++r) {
        std::vector<int> relator;
        for (int id : sys.lhs_ids(static_cast<int>(r))) {
            relator.push_back(id + 1);
        }
        const auto& rhs = sys.rhs_ids(static_cast<int>(r));
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) {
            relator.push_back(a.inverse(*it) + 1);
        }
        p.relators.push_back(std::move(relator));
    }
    return p;
}

} // namespace gforge
