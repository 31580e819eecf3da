#include "gforge/alphabet.hpp"

#include <algorithm>
#include <numeric>

namespace gforge {

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    std::sort(letters_.begin(), letters_.end());
    auto dup = std::adjacent_find(letters_.begin(), letters_.end());
    if (dup != letters_.end()) {
        throw Error(ErrorCode::AlphabetCollision, "duplicate letter " + to_token(*dup));
    }
    inverse_.assign(letters_.size(), -1);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        index_.emplace(letters_[i], static_cast<int>(i));
    }
}

Alphabet Alphabet::subdivision(int m1, int m2, int n) {
    if (m1 < 0 || m2 < 0 || n < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative partition sizes or subdivision depth");
    }
    if (n > 32000 || m1 > 0xffff || m2 > 0xffff) {
        throw Error(ErrorCode::InvalidArgument, "subdivision indices exceed the 16-bit letter encoding");
    }
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>((m1 + 2 * m2) * (2 * n + 1)));
    auto emit = [&](LetterClass k, int count) {
        for (int i = 1; i <= count; ++i) {
            for (int j = 1; j <= 2 * n + 1; ++j) {
                letters.push_back(Letter{k, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)});
            }
        }
    };
    emit(LetterClass::A, m1);
    emit(LetterClass::B, m2);
    emit(LetterClass::C, m2);
    Alphabet a(std::move(letters));
    for (int i = 1; i <= m1; ++i) {
        for (int j = 1; j <= 2 * n + 1; ++j) {
            Letter x{LetterClass::A, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
            Letter y{LetterClass::A, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(2 * n + 2 - j)};
            a.set_inverse(a.id(x), a.id(y));
        }
    }
    for (int i = 1; i <= m2; ++i) {
        for (int j = 1; j <= 2 * n + 1; ++j) {
            Letter b{LetterClass::B, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
            Letter c{LetterClass::C, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
            a.set_inverse(a.id(b), a.id(c));
        }
    }
    return a;
}

int Alphabet::id(const Letter& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) {
        throw Error(ErrorCode::InvalidArgument, "letter " + to_token(x) + " not in alphabet");
    }
    return it->second;
}

std::optional<int> Alphabet::find(const Letter& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void Alphabet::set_inverse(int a, int b) {
    inverse_.at(static_cast<std::size_t>(a)) = b;
    inverse_.at(static_cast<std::size_t>(b)) = a;
}

bool Alphabet::involution_total() const {
    return std::all_of(inverse_.begin(), inverse_.end(), [](int v) { return v >= 0; });
}

Letter Alphabet::inverse_letter(const Letter& x) const {
    int inv = inverse(id(x));
    if (inv < 0) {
        throw Error(ErrorCode::NotInverseClosed, "letter " + to_token(x) + " has no inverse");
    }
    return at(inv);
}

LetterOrder LetterOrder::canonical(const Alphabet& a) {
    LetterOrder order;
    order.rank.resize(a.size());
    std::iota(order.rank.begin(), order.rank.end(), 0); // letters are stored sorted
    return order;
}

LetterOrder LetterOrder::reversed(const Alphabet& a) {
    LetterOrder order;
    order.rank.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        order.rank[i] = static_cast<int>(a.size() - 1 - i);
    }
    return order;
}

int shortlex_compare(const std::vector<int>& u, const std::vector<int>& v, const LetterOrder& order) {
    if (u.size() != v.size()) {
        return u.size() < v.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        int ru = order.rank[static_cast<std::size_t>(u[i])];
        int rv = order.rank[static_cast<std::size_t>(v[i])];
        if (ru != rv) {
            return ru < rv ? -1 : 1;
        }
    }
    return 0;
}

} // namespace gforge
