#include "gforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace gforge {

namespace {

class Stopwatch {
  public:
    double millis() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe(const FiniteGroup& g, const GenSet& gens) {
    std::ostringstream out;
    out << (g.name.empty() ? "order-" + std::to_string(g.order) : g.name) << " gens {";
    for (std::size_t i = 0; i < gens.elements.size(); ++i) {
        out << (i ? "," : "") << gens.elements[i];
    }
    out << "}";
    return out.str();
}

std::string key_of(const std::vector<int>& ids) {
    std::string k;
    k.reserve(ids.size());
    for (int id : ids) {
        k.push_back(static_cast<char>(id + 1));
    }
    return k;
}

} // namespace

CayleyBall cayley_ball(const RewritingSystem& sys, int radius, const Caps& caps) {
    if (radius < 0) {
        throw Error(ErrorCode::InvalidArgument, "radius must be >= 0");
    }
    std::vector<std::vector<int>> words{{}};
    std::unordered_map<std::string, int> index;
    index.reserve(1024);
    index.emplace(std::string{}, 0);
    std::vector<std::vector<int>> adj(1);

    const int k = static_cast<int>(sys.alphabet().size());
    for (std::size_t head = 0; head < words.size(); ++head) {
        std::vector<int> base = words[head]; // copy: words may reallocate
        for (int x = 0; x < k; ++x) {
            std::vector<int> next = base;
            next.push_back(x);
            next = normal_form_ids(std::move(next), sys, Strategy::Leftmost, caps.step_cap, 0);
            if (static_cast<int>(next.size()) > radius) {
                continue;
            }
            auto [it, inserted] = index.emplace(key_of(next), static_cast<int>(words.size()));
            if (inserted) {
                if (static_cast<std::int64_t>(words.size()) >= caps.census_cap) {
                    throw Error(ErrorCode::CensusCapExceeded,
                                "ball exceeds " + std::to_string(caps.census_cap) + " vertices");
                }
                words.push_back(std::move(next));
                adj.emplace_back();
            }
            int v = it->second;
            if (v != static_cast<int>(head)) {
                adj[head].push_back(v);
                adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(head));
            }
        }
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    CayleyBall ball;
    ball.adjacency = std::move(adj);
    ball.dist.assign(words.size(), -1);
    std::deque<int> queue{0};
    ball.dist[0] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : ball.adjacency[static_cast<std::size_t>(u)]) {
            if (ball.dist[static_cast<std::size_t>(v)] == -1) {
                ball.dist[static_cast<std::size_t>(v)] = ball.dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    ball.words.reserve(words.size());
    for (const auto& ids : words) {
        ball.words.push_back(sys.decompile(ids));
    }
    return ball;
}

VerificationReport verify_geodetic_equivalence(const FiniteGroup& g, const GenSet& gens, int n,
                                               const Caps& caps) {
    Stopwatch timer;
    VerificationReport report;
    report.check = "geodetic-equivalence";
    report.inputs = describe(g, gens) + " n=" + std::to_string(n);

    SubdivisionSystem sys = build_subdivision_system(g, gens, n, OrderKind::Canonical, caps);
    const bool base_geodetic = is_geodetic(sys.base_graph).geodetic;
    const bool subdivided_geodetic = is_geodetic(sys.graph).geodetic;
    const bool length_reducing = is_length_reducing(sys.system).length_reducing;

    std::ostringstream details;
    details << "base_geodetic=" << base_geodetic << " subdivided_geodetic=" << subdivided_geodetic
            << " length_reducing=" << length_reducing;
    report.pass = base_geodetic == subdivided_geodetic && subdivided_geodetic == length_reducing;
    report.details = details.str();
    report.millis = timer.millis();
    return report;
}

VerificationReport verify_cayley_correspondence(const RewritingSystem& sys, int radius, const Caps& caps) {
    Stopwatch timer;
    VerificationReport report;
    report.check = "cayley-correspondence";
    report.inputs = std::to_string(sys.alphabet().size()) + " letters, " + std::to_string(sys.rule_count()) +
                    " rules, radius " + std::to_string(radius);
    auto lr = is_length_reducing(sys);
    if (!lr.length_reducing) {
        throw Error(ErrorCode::InvalidArgument,
                    "system is not length-reducing; offending rule " + to_string(lr.offending->lhs) + " -> " +
                        to_string(lr.offending->rhs));
    }

    CensusResult census = irreducible_words(sys, radius, false, caps);
    CayleyBall ball = cayley_ball(sys, radius, caps);
    std::vector<std::int64_t> spheres(static_cast<std::size_t>(radius) + 1, 0);
    for (std::size_t v = 0; v < ball.words.size(); ++v) {
        if (ball.dist[v] >= 0 && ball.dist[v] <= radius) {
            ++spheres[static_cast<std::size_t>(ball.dist[v])];
        }
    }

    std::ostringstream details;
    report.pass = true;
    for (int r = 0; r <= radius && report.pass; ++r) {
        if (census.counts[static_cast<std::size_t>(r)] != spheres[static_cast<std::size_t>(r)]) {
            report.pass = false;
            details << "radius " << r << ": census " << census.counts[static_cast<std::size_t>(r)]
                    << " != sphere " << spheres[static_cast<std::size_t>(r)];
        }
    }
    if (report.pass) {
        for (std::size_t v = 0; v < ball.words.size(); ++v) {
            if (ball.dist[v] != static_cast<int>(ball.words[v].size())) {
                report.pass = false;
                details << "irreducible word " << to_string(ball.words[v]) << " has graph distance "
                        << ball.dist[v] << " != length " << ball.words[v].size();
                break;
            }
        }
    }
    if (report.pass) {
        details << "census equals spheres up to radius " << radius << ": [";
        for (int r = 0; r <= radius; ++r) {
            details << (r ? "," : "") << census.counts[static_cast<std::size_t>(r)];
        }
        details << "]";
    }
    report.details = details.str();
    report.millis = timer.millis();
    return report;
}

VerificationReport verify_free_product_presentation(const FiniteGroup& g, const GenSet& gens, int n,
                                                    const std::vector<FiniteGroup>& probes, const Caps& caps) {
    Stopwatch timer;
    VerificationReport report;
    report.check = "free-product-presentation";
    report.inputs = describe(g, gens) + " n=" + std::to_string(n);

    SubdivisionSystem sys = build_subdivision_system(g, gens, n, OrderKind::Canonical, caps);
    Presentation pres = presentation_of(sys.system);
    const int extra_rank = n * static_cast<int>(gens.size());

    AbelianInvariants got = abelianization(pres);
    AbelianInvariants reference = abelianization(table_presentation(g));
    AbelianInvariants expected = reference;
    expected.free_rank += extra_rank;

    std::ostringstream details;
    report.pass = got == expected;
    details << "abelianization: torsion [";
    for (std::size_t i = 0; i < got.torsion.size(); ++i) {
        details << (i ? "," : "") << got.torsion[i];
    }
    details << "] free rank " << got.free_rank << (report.pass ? " as expected" : " MISMATCH");

    for (const FiniteGroup& q : probes) {
        if (!report.pass) {
            break;
        }
        long long direct = count_homs(g, gens, q, caps.hom_cap);
        long long via_system = count_homs(pres, q, caps.hom_cap);
        long long power = 1;
        for (int i = 0; i < extra_rank; ++i) {
            power *= q.order;
        }
        long long expected_count = direct * power;
        details << "; homs into " << (q.name.empty() ? "Q" + std::to_string(q.order) : q.name) << ": "
                << via_system << " vs " << direct << "*" << power;
        if (via_system != expected_count) {
            report.pass = false;
            details << " MISMATCH";
        }
    }
    report.details = details.str();
    report.millis = timer.millis();
    return report;
}

VerificationReport verify_iterated_subdivision(const FiniteGroup& g, const GenSet& gens, int n, int m,
                                               const Caps& caps) {
    (void)caps; // no bounded search here: the graphs are built directly
    Stopwatch timer;
    VerificationReport report;
    report.check = "iterated-subdivision";
    const int k = 2 * n * m + n + m;
    report.inputs = describe(g, gens) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " k=" + std::to_string(k);

    LabeledGraph base = cayley_graph(g, gens);
    GenPartition partition = partition_generators(g, gens);
    Subdivision once = subdivide(base, k);

    auto check_composition = [&](int outer, int inner) {
        Subdivision first = subdivide(base, inner);
        Subdivision second = subdivide(first.graph, outer);
        auto phi = phi_bijection(partition, outer, inner);
        if (phi.size() != once.graph.alphabet().size() || phi.size() != second.graph.alphabet().size()) {
            return false;
        }
        std::vector<int> bij(once.graph.alphabet().size());
        for (const auto& [from, to] : phi) {
            bij[static_cast<std::size_t>(once.graph.alphabet().id(from))] = second.graph.alphabet().id(to);
        }
        return check_label_isomorphism(once.graph, second.graph, bij, g.identity, g.identity);
    };

    const bool n_after_m = check_composition(n, m);
    const bool m_after_n = check_composition(m, n);
    report.pass = n_after_m && m_after_n;
    std::ostringstream details;
    details << "k=" << k << " n-after-m " << (n_after_m ? "isomorphic" : "NOT isomorphic") << ", m-after-n "
            << (m_after_n ? "isomorphic" : "NOT isomorphic");
    report.details = details.str();
    report.millis = timer.millis();
    return report;
}

namespace {

// Geodesic uniqueness between all pairs of ball vertices within `depth` of
// the base, by per-source BFS path counting over the full ball.
bool ball_geodetic_within(const CayleyBall& ball, int depth, std::string* failure, int threads) {
    std::vector<int> sources;
    for (std::size_t v = 0; v < ball.dist.size(); ++v) {
        if (ball.dist[v] <= depth) {
            sources.push_back(static_cast<int>(v));
        }
    }
    const auto size = ball.adjacency.size();
    std::atomic<std::size_t> next{0};
    std::vector<std::pair<int, int>> bad_pairs; // per worker slot
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(sources.size())));
    bad_pairs.assign(static_cast<std::size_t>(workers), {-1, -1});

    auto run = [&](int wi) {
        std::vector<int> dist(size);
        std::vector<int> count(size);
        std::deque<int> queue;
        for (std::size_t si = next.fetch_add(1); si < sources.size(); si = next.fetch_add(1)) {
            int s = sources[si];
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(count.begin(), count.end(), 0);
            queue.clear();
            queue.push_back(s);
            dist[static_cast<std::size_t>(s)] = 0;
            count[static_cast<std::size_t>(s)] = 1;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : ball.adjacency[static_cast<std::size_t>(u)]) {
                    auto vi = static_cast<std::size_t>(v);
                    if (dist[vi] == -1) {
                        dist[vi] = dist[static_cast<std::size_t>(u)] + 1;
                        queue.push_back(v);
                    }
                    if (dist[vi] == dist[static_cast<std::size_t>(u)] + 1) {
                        count[vi] = std::min(2, count[vi] + count[static_cast<std::size_t>(u)]);
                    }
                }
            }
            for (int t : sources) {
                if (count[static_cast<std::size_t>(t)] >= 2) {
                    auto& slot = bad_pairs[static_cast<std::size_t>(wi)];
                    if (slot.first == -1 || std::make_pair(s, t) < slot) {
                        slot = {s, t};
                    }
                    break;
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) {
            pool.emplace_back(run, wi);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::pair<int, int> worst{-1, -1};
    for (const auto& p : bad_pairs) {
        if (p.first != -1 && (worst.first == -1 || p < worst)) {
            worst = p;
        }
    }
    if (worst.first != -1) {
        if (failure != nullptr) {
            *failure = "two geodesics between " + to_string(ball.words[static_cast<std::size_t>(worst.first)]) +
                       " and " + to_string(ball.words[static_cast<std::size_t>(worst.second)]);
        }
        return false;
    }
    return true;
}

} // namespace

VerificationReport verify_free_product_composition(const FiniteGroup& h, const GenSet& gens_h,
                                                   const FiniteGroup& k, const GenSet& gens_k, int n,
                                                   int radius, const Caps& caps, int threads) {
    Stopwatch timer;
    VerificationReport report;
    report.check = "free-product-composition";
    report.inputs = describe(h, gens_h) + " * " + describe(k, gens_k) + " n=" + std::to_string(n) +
                    " radius=" + std::to_string(radius);

    SubdivisionSystem sys_h = build_subdivision_system(h, gens_h, n, OrderKind::Canonical, caps);
    SubdivisionSystem sys_k = build_subdivision_system(k, gens_k, n, OrderKind::Canonical, caps);
    RewritingSystem composed = compose_free_product(sys_h.system, sys_k.system);

    std::ostringstream details;
    report.pass = true;

    const bool inverse_closed = is_inverse_closed(composed, caps.step_cap);
    details << "inverse_closed=" << inverse_closed;
    report.pass = report.pass && inverse_closed;

    ConfluenceResult confluence = check_confluence_bounded(composed, radius, 0, threads, caps.step_cap);
    details << " confluent_up_to_" << radius << "=" << confluence.confluent;
    if (!confluence.confluent) {
        details << " counterexample " << to_string(*confluence.counterexample);
        report.pass = false;
    }

    const bool h_geodetic = is_geodetic(sys_h.base_graph).geodetic;
    const bool k_geodetic = is_geodetic(sys_k.base_graph).geodetic;
    const bool composed_lr = is_length_reducing(composed).length_reducing;
    if (h_geodetic && k_geodetic && composed_lr) {
        CayleyBall ball = cayley_ball(composed, radius, caps);
        std::string failure;
        const bool geodetic = ball_geodetic_within(ball, radius / 2, &failure, threads);
        details << " ball_geodetic_depth_" << radius / 2 << "=" << geodetic;
        if (!geodetic) {
            details << " (" << failure << ")";
            report.pass = false;
        }
    } else {
        details << " ball_geodetic=skipped (factors geodetic: " << h_geodetic << "," << k_geodetic
                << "; composed length-reducing: " << composed_lr << ")";
    }

    report.details = details.str();
    report.millis = timer.millis();
    return report;
}

std::vector<FiniteGroup> default_probes() {
    return {make_cyclic(2), make_cyclic(3), make_symmetric3()};
}

} // namespace gforge
