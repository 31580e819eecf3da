#include "gforge/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "gforge/errors.hpp"

namespace gforge {

using boost::multiprecision::cpp_int;

Presentation table_presentation(const FiniteGroup& g) {
    Presentation p;
    p.generator_count = g.order;
    p.relators.reserve(static_cast<std::size_t>(g.order) * static_cast<std::size_t>(g.order));
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) {
            // g_a g_b (g_ab)^-1
            p.relators.push_back({a + 1, b + 1, -(g.mul(a, b) + 1)});
        }
    }
    return p;
}

namespace {

void check_relators(const Presentation& p) {
    for (const auto& rel : p.relators) {
        for (int s : rel) {
            int gen = std::abs(s) - 1;
            if (s == 0 || gen < 0 || gen >= p.generator_count) {
                throw Error(ErrorCode::InvalidArgument, "relator letter " + std::to_string(s) + " out of range");
            }
        }
    }
}

// In-place Smith normal form; returns the diagonal (nonnegative entries,
// divisibility enforced).
std::vector<cpp_int> smith(std::vector<std::vector<cpp_int>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<cpp_int> diag;
    std::size_t r = 0;
    std::size_t c = 0;
    while (r < rows && c < cols) {
        // Pick the nonzero entry of least absolute value in the submatrix.
        std::size_t pr = r;
        std::size_t pc = c;
        bool found = false;
        cpp_int best = 0;
        for (std::size_t i = r; i < rows; ++i) {
            for (std::size_t j = c; j < cols; ++j) {
                if (m[i][j] != 0) {
                    cpp_int a = abs(m[i][j]);
                    if (!found || a < best) {
                        best = a;
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            }
        }
        if (!found) {
            break;
        }
        std::swap(m[r], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) {
            std::swap(m[i][c], m[i][pc]);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] != 0) {
                    cpp_int q = m[i][c] / m[r][c];
                    for (std::size_t j = c; j < cols; ++j) {
                        m[i][j] -= q * m[r][j];
                    }
                    if (m[i][c] != 0) { // remainder became the new, smaller pivot
                        std::swap(m[r], m[i]);
                        clean = false;
                    }
                }
            }
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (m[r][j] != 0) {
                    cpp_int q = m[r][j] / m[r][c];
                    for (std::size_t i = r; i < rows; ++i) {
                        m[i][j] -= q * m[i][c];
                    }
                    if (m[r][j] != 0) {
                        for (std::size_t i = 0; i < rows; ++i) {
                            std::swap(m[i][c], m[i][j]);
                        }
                        clean = false;
                    }
                }
            }
            if (clean) {
                // Pivot must divide every remaining entry; if not, fold the
                // offending row in and restart the reduction.
                for (std::size_t i = r + 1; i < rows && clean; ++i) {
                    for (std::size_t j = c + 1; j < cols && clean; ++j) {
                        if (m[i][j] % m[r][c] != 0) {
                            for (std::size_t jj = c; jj < cols; ++jj) {
                                m[r][jj] += m[i][jj];
                            }
                            clean = false;
                        }
                    }
                }
            }
        }
        diag.push_back(abs(m[r][c]));
        ++r;
        ++c;
    }
    return diag;
}

} // namespace

std::vector<long long> smith_diagonal(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<cpp_int>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        m.emplace_back(row.begin(), row.end());
    }
    auto diag = smith(std::move(m));
    std::vector<long long> out;
    out.reserve(diag.size());
    for (const auto& d : diag) {
        if (d > cpp_int(std::numeric_limits<long long>::max())) {
            throw Error(ErrorCode::InvalidArgument, "invariant factor exceeds 64 bits");
        }
        out.push_back(d.convert_to<long long>());
    }
    return out;
}

AbelianInvariants abelianization(const Presentation& p) {
    check_relators(p);
    std::set<std::vector<cpp_int>> distinct_rows;
    for (const auto& rel : p.relators) {
        std::vector<cpp_int> row(static_cast<std::size_t>(p.generator_count), 0);
        for (int s : rel) {
            row[static_cast<std::size_t>(std::abs(s) - 1)] += (s > 0 ? 1 : -1);
        }
        distinct_rows.insert(std::move(row));
    }
    std::vector<std::vector<cpp_int>> m(distinct_rows.begin(), distinct_rows.end());
    auto diag = smith(std::move(m));

    AbelianInvariants out;
    int nonzero = 0;
    for (const auto& d : diag) {
        if (d == 0) {
            continue;
        }
        ++nonzero;
        if (d > 1) {
            if (d > cpp_int(std::numeric_limits<long long>::max())) {
                throw Error(ErrorCode::InvalidArgument, "invariant factor exceeds 64 bits");
            }
            out.torsion.push_back(d.convert_to<long long>());
        }
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    out.free_rank = p.generator_count - nonzero;
    return out;
}

long long count_homs(const Presentation& p, const FiniteGroup& q, std::int64_t cap) {
    check_relators(p);
    const int k = p.generator_count;
    // Relators become checkable once their highest generator is assigned.
    std::vector<std::vector<const std::vector<int>*>> ready(static_cast<std::size_t>(k) + 1);
    for (const auto& rel : p.relators) {
        int top = 0;
        for (int s : rel) {
            top = std::max(top, std::abs(s));
        }
        ready[static_cast<std::size_t>(top)].push_back(&rel);
    }

    std::vector<int> image(static_cast<std::size_t>(k), 0);
    std::int64_t visited = 0;
    long long total = 0;

    auto relator_holds = [&](const std::vector<int>& rel) {
        int acc = q.identity;
        for (int s : rel) {
            int x = image[static_cast<std::size_t>(std::abs(s) - 1)];
            acc = q.mul(acc, s > 0 ? x : q.inv(x));
        }
        return acc == q.identity;
    };

    auto dfs = [&](auto&& self, int depth) -> void {
        if (++visited > cap) {
            throw Error(ErrorCode::EnumerationCapExceeded, "more than " + std::to_string(cap) + " assignment nodes");
        }
        if (depth == k) {
            ++total;
            return;
        }
        for (int img = 0; img < q.order; ++img) {
            image[static_cast<std::size_t>(depth)] = img;
            bool ok = true;
            for (const auto* rel : ready[static_cast<std::size_t>(depth) + 1]) {
                if (!relator_holds(*rel)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                self(self, depth + 1);
            }
        }
    };
    dfs(dfs, 0);
    return total;
}

long long count_homs(const FiniteGroup& g, const GenSet& gens, const FiniteGroup& q, std::int64_t cap) {
    const int k = static_cast<int>(gens.size());
    std::vector<int> image(static_cast<std::size_t>(k), 0);
    std::int64_t visited = 0;
    long long total = 0;

    auto extends = [&]() {
        // Close the partial map over the table from the identity, then
        // verify multiplicativity on every pair.
        std::vector<int> phi(static_cast<std::size_t>(g.order), -1);
        phi[static_cast<std::size_t>(g.identity)] = q.identity;
        std::vector<int> queue{g.identity};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int i = 0; i < k; ++i) {
                int v = g.mul(u, gens.elements[static_cast<std::size_t>(i)]);
                int img = q.mul(phi[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(i)]);
                if (phi[static_cast<std::size_t>(v)] == -1) {
                    phi[static_cast<std::size_t>(v)] = img;
                    queue.push_back(v);
                } else if (phi[static_cast<std::size_t>(v)] != img) {
                    return false;
                }
            }
        }
        for (int a = 0; a < g.order; ++a) {
            for (int b = 0; b < g.order; ++b) {
                if (phi[static_cast<std::size_t>(g.mul(a, b))] !=
                    q.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)])) {
                    return false;
                }
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, int depth) -> void {
        if (++visited > cap) {
            throw Error(ErrorCode::EnumerationCapExceeded, "more than " + std::to_string(cap) + " assignment nodes");
        }
        if (depth == k) {
            if (extends()) {
                ++total;
            }
            return;
        }
        for (int img = 0; img < q.order; ++img) {
            image[static_cast<std::size_t>(depth)] = img;
            self(self, depth + 1);
        }
    };
    dfs(dfs, 0);
    return total;
}

} // namespace gforge
