#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gforge/errors.hpp"
#include "gforge/letter.hpp"

namespace gforge {

/// A finite letter set with a (possibly partial) inverse involution.
/// Letters are stored in canonical order (class, gen, pos) and addressed by
/// dense ids; an inverse of -1 means "unknown" (only possible for alphabets
/// inferred from bare rule files).
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);

    /// Full grid alphabet for a generator partition: m1 involutive
    /// generators and m2 inverse pairs, each subdivided into 2n+1 letters.
    /// Involution: a_{i,j} <-> a_{i,2n+2-j}, b_{i,j} <-> c_{i,j}.
    static Alphabet subdivision(int m1, int m2, int n);

    std::size_t size() const { return letters_.size(); }
    const Letter& at(int id) const { return letters_.at(static_cast<std::size_t>(id)); }
    const std::vector<Letter>& letters() const { return letters_; }

    int id(const Letter& x) const; // throws InvalidArgument if absent
    std::optional<int> find(const Letter& x) const;
    bool contains(const Letter& x) const { return find(x).has_value(); }

    void set_inverse(int a, int b);
    int inverse(int id) const { return inverse_.at(static_cast<std::size_t>(id)); }
    bool involution_total() const;

    /// Inverse as a letter; throws NotInverseClosed when unknown.
    Letter inverse_letter(const Letter& x) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.letters_ == b.letters_ && a.inverse_ == b.inverse_;
    }

  private:
    std::vector<Letter> letters_;
    std::vector<int> inverse_;
    std::map<Letter, int> index_;
};

/// Total order on an alphabet, as rank-per-letter-id. Words are compared
/// shortlex: shorter first, then letterwise by rank.
struct LetterOrder {
    std::vector<int> rank;

    static LetterOrder canonical(const Alphabet& a);
    static LetterOrder reversed(const Alphabet& a);

    bool letter_less(int x, int y) const {
        return rank.at(static_cast<std::size_t>(x)) < rank.at(static_cast<std::size_t>(y));
    }
};

/// Shortlex comparison of id-words under `order`; returns <0, 0, >0.
int shortlex_compare(const std::vector<int>& u, const std::vector<int>& v, const LetterOrder& order);

} // namespace gforge
