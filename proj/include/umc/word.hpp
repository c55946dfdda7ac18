#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace umc {

using GenId = int;

// A word in the generators of some presentation; empty = monoid identity.
struct Word {
    std::vector<GenId> letters;

    Word() = default;
    explicit Word(std::vector<GenId> ls) : letters(std::move(ls)) {}
    static Word one() { return Word{}; }
    static Word gen(GenId g) { return Word{std::vector<GenId>{g}}; }
    static Word of(std::initializer_list<GenId> ls) { return Word{std::vector<GenId>(ls)}; }

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word operator*(const Word& o) const {
        Word w;
        w.letters.reserve(size() + o.size());
        w.letters.insert(w.letters.end(), letters.begin(), letters.end());
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return letters != o.letters; }
    bool operator<(const Word& o) const {  // shortlex
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (GenId g : w.letters) {
            h ^= (size_t)(uint32_t)g;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Oriented rewrite: lhs -> rhs with (len, lex) strictly decreasing,
// so every rewriting sequence terminates.
struct RewriteRule {
    Word lhs, rhs;
    bool decreasing() const { return rhs < lhs; }
    bool operator==(const RewriteRule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

}  // namespace umc
