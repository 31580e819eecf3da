#include "gforge/letter.hpp"

#include <charconv>
#include <sstream>

#include "gforge/errors.hpp"

namespace gforge {

char letter_class_char(LetterClass k) {
    switch (k) {
        case LetterClass::A: return 'a';
        case LetterClass::B: return 'b';
        case LetterClass::C: return 'c';
    }
    return '?';
}

std::string to_token(const Letter& x) {
    std::string out(1, letter_class_char(x.klass));
    out += '_';
    out += std::to_string(x.gen);
    out += '_';
    out += std::to_string(x.pos);
    return out;
}

namespace {

int parse_uint(std::string_view s, std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0 || value > 0xffff) {
        throw Error(ErrorCode::InvalidArgument, "bad letter token '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Letter letter_from_token(std::string_view token) {
    if (token.size() < 5 || token[1] != '_') {
        throw Error(ErrorCode::InvalidArgument, "bad letter token '" + std::string(token) + "'");
    }
    LetterClass k;
    switch (token[0]) {
        case 'a': k = LetterClass::A; break;
        case 'b': k = LetterClass::B; break;
        case 'c': k = LetterClass::C; break;
        default:
            throw Error(ErrorCode::InvalidArgument, "bad letter token '" + std::string(token) + "'");
    }
    auto rest = token.substr(2);
    auto sep = rest.find('_');
    if (sep == std::string_view::npos) {
        throw Error(ErrorCode::InvalidArgument, "bad letter token '" + std::string(token) + "'");
    }
    Letter x;
    x.klass = k;
    x.gen = static_cast<std::uint16_t>(parse_uint(rest.substr(0, sep), token));
    x.pos = static_cast<std::uint16_t>(parse_uint(rest.substr(sep + 1), token));
    return x;
}

std::string to_string(const Word& w) {
    if (w.empty()) {
        return "_";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += to_token(w[i]);
    }
    return out;
}

Word word_from_string(std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "_") {
            continue; // empty-word marker; contributes no letters
        }
        w.push_back(letter_from_token(token));
    }
    return w;
}

} // namespace gforge
