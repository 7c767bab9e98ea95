#include "gradlab/schreier.hpp"

#include <algorithm>

#include "gradlab/homology.hpp"

namespace gradlab {

Word SchreierData::transversal_word(long long c) const {
    std::vector<Letter> path;
    while (parent[c] >= 0) {
        path.push_back(parent_letter[c]);
        c = parent[c];
    }
    std::reverse(path.begin(), path.end());
    Word w;
    w.letters = std::move(path);  // tree words are freely reduced already
    return w;
}

SchreierData schreier_data(const CosetTable& T) {
    SchreierData S;
    S.index = T.index;
    S.generators = T.presentation.generator_count();
    S.parent.assign(T.index, -1);
    S.parent_letter.assign(T.index, 0);
    int w = T.width();

    // Breadth-first tree from coset 0, letters in encoded order; first visit
    // wins, so transversal words are shortest and lexicographically least.
    std::vector<char> seen(T.index, 0);
    std::vector<long long> queue = {0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        long long c = queue[head];
        for (int l = 0; l < w; ++l) {
            long long d = T.act(c, l);
            if (!seen[d]) {
                seen[d] = 1;
                S.parent[d] = c;
                S.parent_letter[d] = l;
                queue.push_back(d);
            }
        }
    }

    // A (coset, generator) pair is trivial exactly when its edge is a tree
    // edge, traversed forward (parent of c*x is c via x) or backward (parent
    // of c is c*x via x^-1).
    S.sgen.assign(T.index * S.generators, -1);
    for (long long c = 0; c < T.index; ++c)
        for (int x = 0; x < S.generators; ++x) {
            Letter l = make_letter(x, +1);
            long long d = T.act(c, l);
            bool tree = (S.parent[d] == c && S.parent_letter[d] == l) ||
                        (S.parent[c] == d && S.parent_letter[c] == letter_inverse(l));
            if (!tree) S.sgen[c * S.generators + x] = S.nontrivial_count++;
        }
    return S;
}

namespace {

// Rewrites the word w, read from coset c, through the Schreier generators:
// the letter x at coset e contributes sigma(e, x), an inverse letter x^-1 at
// coset e contributes sigma(e*x^-1, x)^-1. Trivial pairs contribute nothing.
std::vector<Letter> rewrite_from(const CosetTable& T, const SchreierData& S, long long c,
                                 const Word& w) {
    std::vector<Letter> out;
    long long e = c;
    for (Letter l : w.letters) {
        int x = letter_gen(l);
        if (!letter_is_inverse(l)) {
            long long g = S.sgen_index(e, x);
            if (g >= 0) out.push_back(make_letter(static_cast<int>(g), +1));
            e = T.act(e, l);
        } else {
            e = T.act(e, l);
            long long g = S.sgen_index(e, x);
            if (g >= 0) out.push_back(make_letter(static_cast<int>(g), -1));
        }
    }
    return out;
}

}  // namespace

Presentation subgroup_presentation(const CosetTable& T) {
    SchreierData S = schreier_data(T);
    Presentation sub;
    sub.generator_names = default_generator_names(static_cast<int>(S.nontrivial_count));
    for (long long c = 0; c < T.index; ++c)
        for (const Word& r : T.presentation.relators)
            sub.push_relator(Word::from_letters(rewrite_from(T, S, c, r)));
    sub.validate();
    return sub;
}

CosetTable p_derived_step(const CosetTable& T, long long p, long long max_cosets) {
    SchreierData S = schreier_data(T);
    Presentation sub = subgroup_presentation(T);
    H1Projection proj = h1_projection(sub, p);
    const long long m = proj.m;

    // Resource check first: it is cheap, while the normality check below is
    // quadratic in the input index and pointless for a step that cannot fit.
    long long new_index = T.index;
    for (long long i = 0; i < m; ++i) {
        if (new_index > max_cosets / p)
            throw_resource("p_derived_step: index " + std::to_string(T.index) + "*" +
                           std::to_string(p) + "^" + std::to_string(m) +
                           " exceeds the coset cap");
        new_index *= p;
    }
    if (!is_normal(T))
        throw_precondition("p_derived_step: input subgroup is not normal");

    // Codes are base-p encodings of vectors in F_p^m (digit t = coordinate t).
    long long pm = new_index / T.index;  // p^m
    auto add_codes = [&](long long a, long long b) {
        long long out = 0, scale = 1;
        for (long long t = 0; t < m; ++t) {
            long long digit = (a % p + b % p) % p;
            out += digit * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        return out;
    };

    // phi(sigma(c, x)) per (coset, generator), encoded.
    const int gens = S.generators;
    std::vector<long long> delta(T.index * gens, 0);
    for (long long c = 0; c < T.index; ++c)
        for (int x = 0; x < gens; ++x) {
            long long g = S.sgen_index(c, x);
            if (g < 0) continue;
            long long code = 0, scale = 1;
            for (long long t = 0; t < m; ++t) {
                code += static_cast<long long>(proj.phi.at(g, t)) * scale;
                scale *= p;
            }
            delta[c * gens + x] = code;
        }

    CosetTable out;
    out.presentation = T.presentation;
    out.index = new_index;
    out.tab.assign(new_index * T.width(), -1);
    int w = T.width();
    for (long long c = 0; c < T.index; ++c)
        for (long long v = 0; v < pm; ++v) {
            long long from = c * pm + v;
            for (int x = 0; x < gens; ++x) {
                long long to = T.act(c, make_letter(x, +1)) * pm + add_codes(v, delta[c * gens + x]);
                out.tab[from * w + make_letter(x, +1)] = to;
                out.tab[to * w + make_letter(x, -1)] = from;
            }
        }
    out.validate();
    return out;
}

}  // namespace gradlab
