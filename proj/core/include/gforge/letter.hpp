#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gforge {

/// Letter classes: `A` letters subdivide involutive generators, `B`/`C`
/// letters subdivide a mutually-inverse generator pair (B forward, C back).
enum class LetterClass : std::uint8_t { A = 0, B = 1, C = 2 };

char letter_class_char(LetterClass k);

/// One symbol x_{gen,pos} of a subdivision alphabet. `gen` is the 1-based
/// generator index within its class, `pos` the 1-based subdivision index in
/// [1, 2n+1]. Base (unsubdivided) labels are represented with pos == 1.
struct Letter {
    LetterClass klass = LetterClass::A;
    std::uint16_t gen = 1;
    std::uint16_t pos = 1;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Token format: `a_1_2` for a_{1,2}. Words are space-separated tokens and
/// the empty word is written `_`.
std::string to_token(const Letter& x);
Letter letter_from_token(std::string_view token);

std::string to_string(const Word& w);
Word word_from_string(std::string_view text);

} // namespace gforge
