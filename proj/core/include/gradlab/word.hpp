#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gradlab/errors.hpp"

namespace gradlab {

// A letter encodes a signed generator: generator g is letter 2g, its inverse
// is letter 2g+1. The encoding doubles as the column index of coset tables and
// orders letters a < A < b < B < ..., which is the frozen ordering used by the
// length-lexicographic word enumeration.
using Letter = int32_t;

inline int letter_gen(Letter l) { return static_cast<int>(l >> 1); }
inline bool letter_is_inverse(Letter l) { return (l & 1) != 0; }
inline int letter_sign(Letter l) { return letter_is_inverse(l) ? -1 : +1; }
inline Letter letter_inverse(Letter l) { return l ^ 1; }
inline Letter make_letter(int gen, int sign) {
    if (gen < 0) throw_input("generator index must be non-negative");
    return static_cast<Letter>(2 * gen + (sign < 0 ? 1 : 0));
}

// Freely reduced word. The factory functions maintain the no-cancellation
// invariant; `letters` itself is plain data.
struct Word {
    std::vector<Letter> letters;

    Word() = default;

    // Reduces the letter sequence on construction.
    static Word from_letters(std::vector<Letter> letters);
    static Word single(Letter l) { return from_letters({l}); }

    bool empty() const { return letters.empty(); }
    size_t length() const { return letters.size(); }
    bool is_freely_reduced() const;

    // Largest generator index used, or -1 for the empty word.
    int max_generator() const;

    bool operator==(const Word& o) const { return letters == o.letters; }
    // Length-lexicographic order over the letter encoding (a < A < b < B ...).
    std::strong_ordering operator<=>(const Word& o) const;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);
Word pow(const Word& w, long long n);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1

// Removes the shortest conjugating prefix/suffix pair: "AbA a ba" style
// relator normalization. Result is freely and cyclically reduced.
Word cyclically_reduce(const Word& w);

// Exponent sum of generator `gen` in w (the abelianized coefficient).
long long exponent_sum(const Word& w, int gen);

}  // namespace gradlab
