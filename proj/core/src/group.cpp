#include "gforge/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace gforge {

int FiniteGroup::element_order(int g) const {
    int k = 1;
    int acc = g;
    while (acc != identity) {
        acc = mul(acc, g);
        ++k;
    }
    return k;
}

std::string FiniteGroup::element_name(int g) const {
    if (g >= 0 && static_cast<std::size_t>(g) < element_names.size() && !element_names[static_cast<std::size_t>(g)].empty()) {
        return element_names[static_cast<std::size_t>(g)];
    }
    return "g" + std::to_string(g);
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& table, std::optional<int> identity_hint) {
    const int m = static_cast<int>(table.size());
    if (m == 0) {
        throw Error(ErrorCode::InvalidArgument, "empty multiplication table");
    }
    for (int g = 0; g < m; ++g) {
        if (static_cast<int>(table[static_cast<std::size_t>(g)].size()) != m) {
            throw Error(ErrorCode::InvalidArgument, "table row " + std::to_string(g) + " is not of length " + std::to_string(m));
        }
        for (int h = 0; h < m; ++h) {
            int v = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
            if (v < 0 || v >= m) {
                throw Error(ErrorCode::InvalidArgument,
                            "entry (" + std::to_string(g) + "," + std::to_string(h) + ") = " + std::to_string(v) + " out of range");
            }
        }
    }

    int identity = -1;
    for (int e = 0; e < m; ++e) {
        bool ok = true;
        for (int g = 0; g < m && ok; ++g) {
            ok = table[static_cast<std::size_t>(e)][static_cast<std::size_t>(g)] == g &&
                 table[static_cast<std::size_t>(g)][static_cast<std::size_t>(e)] == g;
        }
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) {
        throw Error(ErrorCode::NoIdentity, "no two-sided identity element");
    }
    if (identity_hint && *identity_hint != identity) {
        throw Error(ErrorCode::NoIdentity,
                    "hinted identity " + std::to_string(*identity_hint) + " differs from computed " + std::to_string(identity));
    }

    std::vector<int> inverses(static_cast<std::size_t>(m), -1);
    for (int g = 0; g < m; ++g) {
        for (int h = 0; h < m; ++h) {
            if (table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == identity &&
                table[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)] == identity) {
                inverses[static_cast<std::size_t>(g)] = h;
                break;
            }
        }
        if (inverses[static_cast<std::size_t>(g)] < 0) {
            throw Error(ErrorCode::NoInverse, "element " + std::to_string(g) + " has no inverse");
        }
    }

    for (int g = 0; g < m; ++g) {
        for (int h = 0; h < m; ++h) {
            const int gh = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
            for (int k = 0; k < m; ++k) {
                const int hk = table[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
                if (table[static_cast<std::size_t>(gh)][static_cast<std::size_t>(k)] !=
                    table[static_cast<std::size_t>(g)][static_cast<std::size_t>(hk)]) {
                    throw Error(ErrorCode::NotAssociative,
                                "triple (" + std::to_string(g) + "," + std::to_string(h) + "," + std::to_string(k) + ")");
                }
            }
        }
    }

    FiniteGroup out;
    out.order = m;
    out.table = table;
    out.identity = identity;
    out.inverses = std::move(inverses);
    return out;
}

FiniteGroup make_cyclic(int m) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
    }
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % m;
        }
    }
    FiniteGroup g = validate_group(table, 0);
    g.name = "C" + std::to_string(m);
    return g;
}

FiniteGroup make_klein_four() {
    FiniteGroup g = validate_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0);
    g.name = "V4";
    return g;
}

FiniteGroup make_symmetric3() {
    // Permutations of {0,1,2} in lexicographic one-line order; composition
    // (p*q)(x) = p(q(x)).
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i) {
            if (perms[static_cast<std::size_t>(i)] == p) {
                return i;
            }
        }
        return -1;
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x) {
                comp[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
            }
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index_of(comp);
        }
    }
    FiniteGroup g = validate_group(table, 0);
    g.name = "S3";
    return g;
}

GenSet check_genset(const FiniteGroup& g, const std::vector<int>& elements) {
    for (int s : elements) {
        if (s < 0 || s >= g.order) {
            throw Error(ErrorCode::InvalidArgument, "generator index " + std::to_string(s) + " out of range");
        }
    }
    std::set<int> seen(elements.begin(), elements.end());
    if (seen.size() != elements.size()) {
        throw Error(ErrorCode::InvalidArgument, "duplicate generator in list");
    }
    for (int s : elements) {
        if (s == g.identity) {
            throw Error(ErrorCode::ContainsIdentity, "element " + std::to_string(s));
        }
        if (!seen.count(g.inv(s))) {
            throw Error(ErrorCode::NotInverseClosed, "element " + std::to_string(s) + " lacks its inverse " + std::to_string(g.inv(s)));
        }
    }
    std::vector<char> reached(static_cast<std::size_t>(g.order), 0);
    std::vector<int> queue{g.identity};
    reached[static_cast<std::size_t>(g.identity)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int s : elements) {
            int next = g.mul(queue[head], s);
            if (!reached[static_cast<std::size_t>(next)]) {
                reached[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }
    for (int v = 0; v < g.order; ++v) {
        if (!reached[static_cast<std::size_t>(v)]) {
            throw Error(ErrorCode::DoesNotGenerate, "element " + std::to_string(v) + " unreached");
        }
    }
    return GenSet{elements};
}

GenPartition partition_generators(const FiniteGroup& g, const GenSet& gens) {
    GenPartition part;
    std::set<int> placed;
    for (int s : gens.elements) {
        if (placed.count(s)) {
            continue;
        }
        if (g.mul(s, s) == g.identity) {
            part.sigma1.push_back(s);
            placed.insert(s);
        } else {
            part.sigma2.push_back(s);
            part.sigma3.push_back(g.inv(s));
            placed.insert(s);
            placed.insert(g.inv(s));
        }
    }
    return part;
}

} // namespace gforge
