#include "gforge/rewriting.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace gforge {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t word_seed(std::uint64_t seed, const std::vector<int>& w) {
    std::uint64_t h = seed ^ 0x2545f4914f6cdd1dULL;
    for (int x : w) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules) : alphabet_(std::move(alphabet)) {
    std::set<std::pair<Word, Word>> seen;
    for (auto& r : rules) {
        if (r.lhs.empty()) {
            throw Error(ErrorCode::InvalidArgument, "rule with empty left-hand side");
        }
        if (r.lhs == r.rhs) {
            throw Error(ErrorCode::InvalidArgument, "rule rewrites a word to itself: " + to_string(r.lhs));
        }
        if (!seen.emplace(r.lhs, r.rhs).second) {
            continue;
        }
        rules_.push_back(std::move(r));
    }
    lhs_ids_.reserve(rules_.size());
    rhs_ids_.reserve(rules_.size());
    for (const auto& r : rules_) {
        lhs_ids_.push_back(compile(r.lhs));
        rhs_ids_.push_back(compile(r.rhs));
        max_lhs_ = std::max(max_lhs_, static_cast<int>(r.lhs.size()));
    }
    by_first_.assign(alphabet_.size(), {});
    by_last_.assign(alphabet_.size(), {});
    for (int r = 0; r < static_cast<int>(rules_.size()); ++r) {
        by_first_[static_cast<std::size_t>(lhs_ids_[static_cast<std::size_t>(r)].front())].push_back(r);
        by_last_[static_cast<std::size_t>(lhs_ids_[static_cast<std::size_t>(r)].back())].push_back(r);
    }
    auto longest_first = [&](std::vector<int>& bucket) {
        std::stable_sort(bucket.begin(), bucket.end(), [&](int a, int b) {
            return lhs_ids_[static_cast<std::size_t>(a)].size() > lhs_ids_[static_cast<std::size_t>(b)].size();
        });
    };
    for (auto& bucket : by_first_) {
        longest_first(bucket);
    }
    for (auto& bucket : by_last_) {
        longest_first(bucket);
    }
}

std::vector<int> RewritingSystem::compile(const Word& w) const {
    std::vector<int> ids;
    ids.reserve(w.size());
    for (const Letter& x : w) {
        ids.push_back(alphabet_.id(x));
    }
    return ids;
}

Word RewritingSystem::decompile(const std::vector<int>& ids) const {
    Word w;
    w.reserve(ids.size());
    for (int id : ids) {
        w.push_back(alphabet_.at(id));
    }
    return w;
}

namespace {

bool matches_at(const std::vector<int>& w, std::size_t pos, const std::vector<int>& lhs) {
    if (pos + lhs.size() > w.size()) {
        return false;
    }
    return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

// Best rule (longest lhs, then rule order) matching at `pos`, or -1.
int match_at(const std::vector<int>& w, std::size_t pos, const RewritingSystem& sys) {
    for (int r : sys.rules_by_first(w[pos])) {
        if (matches_at(w, pos, sys.lhs_ids(r))) {
            return r;
        }
    }
    return -1;
}

struct Redex {
    int rule = -1;
    std::size_t pos = 0;
};

bool find_redex(const std::vector<int>& w, const RewritingSystem& sys, Strategy strategy,
                std::uint64_t& rng_state, Redex& out) {
    if (w.empty() || sys.rule_count() == 0) {
        return false;
    }
    switch (strategy) {
        case Strategy::Leftmost:
            for (std::size_t pos = 0; pos < w.size(); ++pos) {
                int r = match_at(w, pos, sys);
                if (r >= 0) {
                    out = Redex{r, pos};
                    return true;
                }
            }
            return false;
        case Strategy::Rightmost:
            for (std::size_t pos = w.size(); pos-- > 0;) {
                int r = match_at(w, pos, sys);
                if (r >= 0) {
                    out = Redex{r, pos};
                    return true;
                }
            }
            return false;
        case Strategy::Random: {
            // Reservoir selection over all matches; no allocation.
            std::uint64_t count = 0;
            for (std::size_t pos = 0; pos < w.size(); ++pos) {
                for (int r : sys.rules_by_first(w[pos])) {
                    if (matches_at(w, pos, sys.lhs_ids(r))) {
                        ++count;
                        if (splitmix64(rng_state) % count == 0) {
                            out = Redex{r, pos};
                        }
                    }
                }
            }
            return count != 0;
        }
    }
    return false;
}

void apply_redex(std::vector<int>& w, const RewritingSystem& sys, const Redex& redex) {
    const auto& lhs = sys.lhs_ids(redex.rule);
    const auto& rhs = sys.rhs_ids(redex.rule);
    if (rhs.size() <= lhs.size()) {
        std::copy(rhs.begin(), rhs.end(), w.begin() + static_cast<std::ptrdiff_t>(redex.pos));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(redex.pos + rhs.size()),
                w.begin() + static_cast<std::ptrdiff_t>(redex.pos + lhs.size()));
    } else {
        std::vector<int> next;
        next.reserve(w.size() - lhs.size() + rhs.size());
        next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(redex.pos));
        next.insert(next.end(), rhs.begin(), rhs.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(redex.pos + lhs.size()), w.end());
        w = std::move(next);
    }
}

} // namespace

StepResult rewrite_step(const Word& w, const RewritingSystem& sys, Strategy strategy, std::uint64_t seed) {
    std::vector<int> ids = sys.compile(w);
    std::uint64_t rng = word_seed(seed, ids);
    Redex redex;
    if (!find_redex(ids, sys, strategy, rng, redex)) {
        return StepResult{false, w, -1, -1};
    }
    apply_redex(ids, sys, redex);
    return StepResult{true, sys.decompile(ids), redex.rule, static_cast<int>(redex.pos)};
}

namespace {

void reduce_inplace(std::vector<int>& word, const RewritingSystem& sys, Strategy strategy,
                    std::int64_t step_cap, std::uint64_t seed, std::int64_t* steps) {
    std::uint64_t rng = word_seed(seed, word);
    std::int64_t done = 0;
    Redex redex;
    while (find_redex(word, sys, strategy, rng, redex)) {
        if (++done > step_cap) {
            throw Error(ErrorCode::StepCapExceeded,
                        "no normal form within " + std::to_string(step_cap) + " steps");
        }
        apply_redex(word, sys, redex);
    }
    if (steps != nullptr) {
        *steps = done;
    }
}

} // namespace

std::vector<int> normal_form_ids(std::vector<int> word, const RewritingSystem& sys, Strategy strategy,
                                 std::int64_t step_cap, std::uint64_t seed, std::int64_t* steps) {
    reduce_inplace(word, sys, strategy, step_cap, seed, steps);
    return word;
}

Word normal_form(const Word& w, const RewritingSystem& sys, Strategy strategy, std::int64_t step_cap,
                 std::uint64_t seed) {
    return sys.decompile(normal_form_ids(sys.compile(w), sys, strategy, step_cap, seed));
}

bool is_irreducible(const std::vector<int>& word, const RewritingSystem& sys) {
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        if (match_at(word, pos, sys) >= 0) {
            return false;
        }
    }
    return true;
}

Word word_inverse(const Word& w, const Alphabet& alphabet) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(alphabet.inverse_letter(*it));
    }
    return out;
}

bool is_inverse_closed(const RewritingSystem& sys, std::int64_t step_cap) {
    const Alphabet& a = sys.alphabet();
    if (!a.involution_total()) {
        return false;
    }
    for (int x = 0; x < static_cast<int>(a.size()); ++x) {
        if (normal_form_ids({x}, sys, Strategy::Leftmost, step_cap, 0).empty()) {
            return false; // a letter must not collapse to the empty word
        }
        int y = a.inverse(x);
        if (!normal_form_ids({x, y}, sys, Strategy::Leftmost, step_cap, 0).empty() ||
            !normal_form_ids({y, x}, sys, Strategy::Leftmost, step_cap, 0).empty()) {
            return false;
        }
    }
    return true;
}

LengthReducingResult is_length_reducing(const RewritingSystem& sys) {
    for (const auto& r : sys.rules()) {
        if (r.lhs.size() <= r.rhs.size()) {
            return LengthReducingResult{false, r};
        }
    }
    return LengthReducingResult{true, std::nullopt};
}

namespace {

struct SweepHit {
    bool found = false;
    std::vector<int> word;
    std::vector<std::vector<int>> forms;
};

// DFS over all words with the given first letter, tracking whether the
// current prefix already contains a redex; only reducible words are run
// through the three strategies.
void sweep_bucket(const RewritingSystem& sys, int first, int max_len, std::uint64_t seed,
                  std::int64_t step_cap, SweepHit& hit) {
    const int k = static_cast<int>(sys.alphabet().size());
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(max_len));
    // Persistent buffers: the sweep visits hundreds of millions of words.
    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> random;

    auto suffix_redex = [&](int last) {
        for (int r : sys.rules_by_last(last)) {
            const auto& lhs = sys.lhs_ids(r);
            if (lhs.size() <= word.size() &&
                std::equal(lhs.begin(), lhs.end(), word.end() - static_cast<std::ptrdiff_t>(lhs.size()))) {
                return true;
            }
        }
        return false;
    };

    auto diverges = [&]() {
        left = word;
        reduce_inplace(left, sys, Strategy::Leftmost, step_cap, seed, nullptr);
        right = word;
        reduce_inplace(right, sys, Strategy::Rightmost, step_cap, seed, nullptr);
        if (left != right) {
            hit = SweepHit{true, word, {left, right}};
            return true;
        }
        random = word;
        reduce_inplace(random, sys, Strategy::Random, step_cap, seed, nullptr);
        if (random != left) {
            hit = SweepHit{true, word, {left, random}};
            return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, bool reducible) -> bool {
        if (static_cast<int>(word.size()) == max_len) {
            return false;
        }
        for (int x = 0; x < k; ++x) {
            word.push_back(x);
            bool now_reducible = reducible || suffix_redex(x);
            if (now_reducible && diverges()) {
                return true;
            }
            if (self(self, now_reducible)) {
                return true;
            }
            word.pop_back();
        }
        return false;
    };

    word.push_back(first);
    bool reducible = suffix_redex(first);
    if (reducible && diverges()) {
        return;
    }
    dfs(dfs, reducible);
}

} // namespace

ConfluenceResult check_confluence_bounded(const RewritingSystem& sys, int max_len, std::uint64_t seed,
                                          int threads, std::int64_t step_cap) {
    // When no rule grows its word, reductions never exceed the initial
    // length, so rules with |lhs| > max_len can never fire in this sweep;
    // dropping them keeps the match buckets small.
    const RewritingSystem* active = &sys;
    RewritingSystem filtered;
    bool growing = false;
    bool oversized = false;
    for (const auto& r : sys.rules()) {
        growing = growing || r.rhs.size() > r.lhs.size();
        oversized = oversized || static_cast<int>(r.lhs.size()) > max_len;
    }
    if (!growing && oversized) {
        std::vector<Rule> kept;
        for (const auto& r : sys.rules()) {
            if (static_cast<int>(r.lhs.size()) <= max_len) {
                kept.push_back(r);
            }
        }
        filtered = RewritingSystem(sys.alphabet(), std::move(kept));
        active = &filtered;
    }

    const int k = static_cast<int>(sys.alphabet().size());
    std::vector<SweepHit> hits(static_cast<std::size_t>(std::max(k, 1)));
    if (k > 0 && max_len > 0) {
        int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
        workers = std::max(1, std::min(workers, k));
        std::atomic<int> next{0};
        std::vector<std::string> errors(static_cast<std::size_t>(workers));
        auto run = [&](int wi) {
            try {
                for (int b = next.fetch_add(1); b < k; b = next.fetch_add(1)) {
                    sweep_bucket(*active, b, max_len, seed, step_cap, hits[static_cast<std::size_t>(b)]);
                }
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(wi)] = e.what();
            }
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int wi = 0; wi < workers; ++wi) {
                pool.emplace_back(run, wi);
            }
            for (auto& t : pool) {
                t.join();
            }
        }
        for (const auto& err : errors) {
            if (!err.empty()) {
                throw Error(ErrorCode::StepCapExceeded, err);
            }
        }
    }

    LetterOrder canon = LetterOrder::canonical(sys.alphabet());
    const SweepHit* best = nullptr;
    for (const auto& h : hits) {
        if (h.found && (best == nullptr || shortlex_compare(h.word, best->word, canon) < 0)) {
            best = &h;
        }
    }
    ConfluenceResult out;
    out.checked_up_to = max_len;
    if (best != nullptr) {
        out.confluent = false;
        out.counterexample = sys.decompile(best->word);
        for (const auto& f : best->forms) {
            out.divergent_forms.push_back(sys.decompile(f));
        }
    }
    return out;
}

std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys) {
    std::vector<CriticalPair> pairs;
    std::set<std::pair<Word, std::pair<Word, Word>>> seen;
    auto add = [&](std::vector<int> peak, std::vector<int> left, std::vector<int> right, int a, int b) {
        CriticalPair cp{sys.decompile(peak), sys.decompile(left), sys.decompile(right), a, b};
        if (seen.emplace(cp.peak, std::make_pair(cp.left, cp.right)).second) {
            pairs.push_back(std::move(cp));
        }
    };
    const int n = static_cast<int>(sys.rule_count());
    for (int a = 0; a < n; ++a) {
        const auto& la = sys.lhs_ids(a);
        const auto& ra = sys.rhs_ids(a);
        for (int b = 0; b < n; ++b) {
            const auto& lb = sys.lhs_ids(b);
            const auto& rb = sys.rhs_ids(b);
            // Proper suffix of la equal to a prefix of lb.
            for (std::size_t o = 1; o < la.size() && o < lb.size(); ++o) {
                if (!std::equal(lb.begin(), lb.begin() + static_cast<std::ptrdiff_t>(o),
                                la.end() - static_cast<std::ptrdiff_t>(o))) {
                    continue;
                }
                std::vector<int> peak(la.begin(), la.end());
                peak.insert(peak.end(), lb.begin() + static_cast<std::ptrdiff_t>(o), lb.end());
                std::vector<int> left(ra.begin(), ra.end());
                left.insert(left.end(), lb.begin() + static_cast<std::ptrdiff_t>(o), lb.end());
                std::vector<int> right(la.begin(), la.end() - static_cast<std::ptrdiff_t>(o));
                right.insert(right.end(), rb.begin(), rb.end());
                add(std::move(peak), std::move(left), std::move(right), a, b);
            }
            // lb occurring inside la (proper containment; distinct rules at
            // position 0).
            if (lb.size() < la.size() || (lb.size() == la.size() && a != b)) {
                for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
                    if (pos == 0 && a == b) {
                        continue;
                    }
                    if (!std::equal(lb.begin(), lb.end(), la.begin() + static_cast<std::ptrdiff_t>(pos))) {
                        continue;
                    }
                    std::vector<int> right(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(pos));
                    right.insert(right.end(), rb.begin(), rb.end());
                    right.insert(right.end(), la.begin() + static_cast<std::ptrdiff_t>(pos + lb.size()), la.end());
                    add(std::vector<int>(la.begin(), la.end()), std::vector<int>(ra.begin(), ra.end()),
                        std::move(right), a, b);
                }
            }
        }
    }
    return pairs;
}

ConfluenceResult check_critical_pairs(const RewritingSystem& sys, std::int64_t step_cap) {
    ConfluenceResult out;
    out.checked_up_to = 0;
    for (const auto& cp : critical_pairs(sys)) {
        Word left = normal_form(cp.left, sys, Strategy::Leftmost, step_cap);
        Word right = normal_form(cp.right, sys, Strategy::Leftmost, step_cap);
        out.checked_up_to = std::max(out.checked_up_to, static_cast<int>(cp.peak.size()));
        if (left != right) {
            out.confluent = false;
            out.counterexample = cp.peak;
            out.divergent_forms = {left, right};
            return out;
        }
    }
    return out;
}

CensusResult irreducible_words(const RewritingSystem& sys, int max_len, bool collect, const Caps& caps) {
    CensusResult out;
    out.counts.assign(static_cast<std::size_t>(max_len) + 1, 0);
    out.counts[0] = 1; // the empty word
    if (collect) {
        out.words.push_back(Word{});
    }
    const int k = static_cast<int>(sys.alphabet().size());
    std::vector<int> word;
    std::int64_t visited = 1;

    auto suffix_redex = [&](int last) {
        for (int r : sys.rules_by_last(last)) {
            const auto& lhs = sys.lhs_ids(r);
            if (lhs.size() <= word.size() &&
                std::equal(lhs.begin(), lhs.end(), word.end() - static_cast<std::ptrdiff_t>(lhs.size()))) {
                return true;
            }
        }
        return false;
    };

    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == max_len) {
            return;
        }
        for (int x = 0; x < k; ++x) {
            word.push_back(x);
            if (!suffix_redex(x)) {
                if (++visited > caps.census_cap) {
                    throw Error(ErrorCode::CensusCapExceeded,
                                "more than " + std::to_string(caps.census_cap) + " irreducible words");
                }
                ++out.counts[word.size()];
                if (collect) {
                    out.words.push_back(sys.decompile(word));
                }
                self(self);
            }
            word.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

RewritingSystem system_from_rules_text(const std::string& text) {
    std::vector<std::pair<Word, Word>> raw;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            throw Error(ErrorCode::IoError, "rules line without '->': " + line);
        }
        raw.emplace_back(word_from_string(line.substr(0, arrow)), word_from_string(line.substr(arrow + 2)));
    }

    std::set<Letter> letters;
    for (const auto& [lhs, rhs] : raw) {
        letters.insert(lhs.begin(), lhs.end());
        letters.insert(rhs.begin(), rhs.end());
    }
    Alphabet alphabet(std::vector<Letter>(letters.begin(), letters.end()));

    // Infer the involution from two-sided length-two cancellations.
    std::map<int, std::set<int>> cancels;
    for (const auto& [lhs, rhs] : raw) {
        if (lhs.size() == 2 && rhs.empty()) {
            cancels[alphabet.id(lhs[0])].insert(alphabet.id(lhs[1]));
        }
    }
    for (const auto& [x, ys] : cancels) {
        if (ys.size() != 1) {
            continue;
        }
        int y = *ys.begin();
        auto it = cancels.find(y);
        if (it != cancels.end() && it->second.size() == 1 && *it->second.begin() == x) {
            alphabet.set_inverse(x, y);
        }
    }

    std::vector<Rule> rules;
    rules.reserve(raw.size());
    for (auto& [lhs, rhs] : raw) {
        rules.push_back(Rule{std::move(lhs), std::move(rhs)});
    }
    return RewritingSystem(std::move(alphabet), std::move(rules));
}

std::string rules_to_text(const RewritingSystem& sys) {
    std::string out;
    for (const auto& r : sys.rules()) {
        out += to_string(r.lhs);
        out += " -> ";
        out += to_string(r.rhs);
        out += '\n';
    }
    return out;
}

} // namespace gforge
