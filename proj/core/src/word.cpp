#include "gradlab/word.hpp"

#include <algorithm>

namespace gradlab {

namespace {

// In-place stack-based free reduction.
std::vector<Letter> reduce(std::vector<Letter> in) {
    std::vector<Letter> out;
    out.reserve(in.size());
    for (Letter l : in) {
        if (l < 0) throw_input("negative letter code");
        if (!out.empty() && out.back() == letter_inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

}  // namespace

Word Word::from_letters(std::vector<Letter> letters) {
    Word w;
    w.letters = reduce(std::move(letters));
    return w;
}

bool Word::is_freely_reduced() const {
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] == letter_inverse(letters[i + 1])) return false;
    return true;
}

int Word::max_generator() const {
    int m = -1;
    for (Letter l : letters) m = std::max(m, letter_gen(l));
    return m;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (letters.size() != o.letters.size())
        return letters.size() < o.letters.size() ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    for (size_t i = 0; i < letters.size(); ++i)
        if (letters[i] != o.letters[i])
            return letters[i] < o.letters[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> cat = a.letters;
    cat.insert(cat.end(), b.letters.begin(), b.letters.end());
    return Word::from_letters(std::move(cat));
}

Word inverse(const Word& w) {
    std::vector<Letter> rev(w.letters.rbegin(), w.letters.rend());
    for (Letter& l : rev) l = letter_inverse(l);
    Word out;
    out.letters = std::move(rev);  // inverse of a reduced word is reduced
    return out;
}

Word pow(const Word& w, long long n) {
    Word base = n < 0 ? inverse(w) : w;
    if (n < 0) n = -n;
    Word acc;
    for (long long i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

Word commutator(const Word& u, const Word& v) { return u * v * inverse(u) * inverse(v); }

Word cyclically_reduce(const Word& w) {
    std::vector<Letter> ls = w.letters;
    size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo] == letter_inverse(ls[hi - 1])) {
        ++lo;
        --hi;
    }
    Word out;
    out.letters.assign(ls.begin() + lo, ls.begin() + hi);
    return out;
}

long long exponent_sum(const Word& w, int gen) {
    long long s = 0;
    for (Letter l : w.letters)
        if (letter_gen(l) == gen) s += letter_sign(l);
    return s;
}

}  // namespace gradlab
