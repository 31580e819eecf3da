#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gforge/alphabet.hpp"
#include "gforge/caps.hpp"

namespace gforge {

struct Rule {
    Word lhs; // non-empty, != rhs
    Word rhs;

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Rewriting strategy: which redex an engine step picks. On a confluent
/// system the choice is observationally irrelevant; determinism still
/// requires fixing one.
enum class Strategy { Leftmost, Rightmost, Random };

/// A rewriting system (alphabet, rules). Rules are validated, deduplicated
/// and indexed by first/last lhs letter at construction. Immutable.
class RewritingSystem {
  public:
    RewritingSystem() = default;
    RewritingSystem(Alphabet alphabet, std::vector<Rule> rules);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t rule_count() const { return rules_.size(); }
    int max_lhs_length() const { return max_lhs_; }

    /// Compiled id-form of rule `r`.
    const std::vector<int>& lhs_ids(int r) const { return lhs_ids_[static_cast<std::size_t>(r)]; }
    const std::vector<int>& rhs_ids(int r) const { return rhs_ids_[static_cast<std::size_t>(r)]; }

    /// Rule ids whose lhs begins (ends) with the given letter id, longest
    /// lhs first, then rule order.
    const std::vector<int>& rules_by_first(int letter) const { return by_first_[static_cast<std::size_t>(letter)]; }
    const std::vector<int>& rules_by_last(int letter) const { return by_last_[static_cast<std::size_t>(letter)]; }

    std::vector<int> compile(const Word& w) const;
    Word decompile(const std::vector<int>& ids) const;

  private:
    Alphabet alphabet_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> lhs_ids_;
    std::vector<std::vector<int>> rhs_ids_;
    std::vector<std::vector<int>> by_first_;
    std::vector<std::vector<int>> by_last_;
    int max_lhs_ = 0;
};

struct StepResult {
    bool reduced = false;
    Word word;
    int rule = -1;
    int position = -1;
};

/// Applies one redex chosen by `strategy` (seed feeds the Random strategy);
/// reduced == false means the word is irreducible.
StepResult rewrite_step(const Word& w, const RewritingSystem& sys,
                        Strategy strategy = Strategy::Leftmost, std::uint64_t seed = 0);

/// Reduces to an irreducible word; throws StepCapExceeded after `step_cap`
/// rewrites (only reachable for non-length-reducing systems).
Word normal_form(const Word& w, const RewritingSystem& sys, Strategy strategy = Strategy::Leftmost,
                 std::int64_t step_cap = Caps{}.step_cap, std::uint64_t seed = 0);

/// Id-form engine used by the exhaustive sweeps.
std::vector<int> normal_form_ids(std::vector<int> word, const RewritingSystem& sys, Strategy strategy,
                                 std::int64_t step_cap, std::uint64_t seed, std::int64_t* steps = nullptr);

bool is_irreducible(const std::vector<int>& word, const RewritingSystem& sys);

/// Reversed, letterwise-inverted word. Requires a total involution.
Word word_inverse(const Word& w, const Alphabet& alphabet);

/// True iff the involution is total, no letter rewrites to the empty word,
/// and x x^-1 and x^-1 x reduce to the empty word for every letter x.
bool is_inverse_closed(const RewritingSystem& sys, std::int64_t step_cap = Caps{}.step_cap);

struct LengthReducingResult {
    bool length_reducing = true;
    std::optional<Rule> offending;
};

LengthReducingResult is_length_reducing(const RewritingSystem& sys);

struct ConfluenceResult {
    bool confluent = true;
    int checked_up_to = 0;
    std::optional<Word> counterexample;       // first divergent word found
    std::vector<Word> divergent_forms;        // its normal forms per strategy
};

/// Strategy-comparison sweep: every word of length <= max_len is reduced
/// under leftmost, rightmost and a seeded-random strategy; any disagreement
/// is returned as a counterexample. Deterministic for fixed seed.
ConfluenceResult check_confluence_bounded(const RewritingSystem& sys, int max_len,
                                          std::uint64_t seed = 0, int threads = 0,
                                          std::int64_t step_cap = Caps{}.step_cap);

/// An overlap of two left-hand sides: `peak` holds both redexes, `left` and
/// `right` are its two one-step reducts.
struct CriticalPair {
    Word peak;
    Word left;
    Word right;
    int rule_a = 0;
    int rule_b = 0;
};

/// All critical pairs (suffix-prefix overlaps and factor containments).
std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys);

/// Secondary confluence diagnostic: every critical pair must be joinable,
/// tested by comparing leftmost normal forms of the two reducts.
ConfluenceResult check_critical_pairs(const RewritingSystem& sys,
                                      std::int64_t step_cap = Caps{}.step_cap);

struct CensusResult {
    std::vector<std::int64_t> counts; // counts[len] for len = 0..max_len
    std::vector<Word> words;          // filled only when collect == true
};

/// Exact census of irreducible words by depth-first extension with
/// factor-index pruning. Throws CensusCapExceeded.
CensusResult irreducible_words(const RewritingSystem& sys, int max_len, bool collect = false,
                               const Caps& caps = Caps{});

/// Plain-text rules file: one `LHS -> RHS` per line, words as letter tokens,
/// `_` for the empty word. Loading infers the alphabet from the letters used
/// and the involution from the length-two cancellation rules.
RewritingSystem system_from_rules_text(const std::string& text);
std::string rules_to_text(const RewritingSystem& sys);

} // namespace gforge
