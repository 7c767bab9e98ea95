#pragma once

#include <string>
#include <vector>

#include "gradlab/word.hpp"

namespace gradlab {

// A finite presentation. Relators are stored freely and cyclically reduced and
// never empty; conjugate relators are not identified (cheap normalization
// only). Immutable by convention once built.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int generator_count() const { return static_cast<int>(generator_names.size()); }

    // Normalizes a relator candidate (free + cyclic reduction) and appends it
    // unless it reduced to the empty word.
    void push_relator(const Word& w);

    void validate() const;  // checks the documented invariants
};

// Default generator naming: single letters a..z when count <= 26, otherwise
// x0, x1, ... (the text format is restricted to single-letter names).
std::vector<std::string> default_generator_names(int count);

Presentation free_group(int d);

// P with relator g^(p^k) appended. g must be non-empty.
Presentation adjoin_power_relator(const Presentation& P, const Word& g, long long p,
                                  long long k);

// Orientable surface group of the given genus: 2*genus generators and the
// single relator [a1,b1][a2,b2]...
Presentation surface_group(int genus);

// Nontrivial freely reduced words of F_d in length-lexicographic order with
// letter order a < A < b < B < ...; returns the first `count` words. This is
// the frozen enumeration recorded in certificate reports.
std::vector<Word> enumerate_reduced_words(int d, size_t count);
extern const char* const kWordEnumerationNote;

// F_d modulo f_i^(p^(k_i)) for the first n = exponents.size() words f_i of the
// enumeration above.
Presentation schlage_puchta_truncation(int d, long long p,
                                       const std::vector<long long>& exponents);

// Tietze simplification: free/cyclic reduction, duplicate-relator removal (up
// to rotation and inversion), and elimination of generators named by length-1
// relators. Presents an isomorphic group; total relator length never grows.
Presentation simplify(const Presentation& P);

// --- text format -----------------------------------------------------------
//
// Word grammar: lowercase letter = generator, uppercase letter = its inverse,
// juxtaposition = product, (w)^n = power (n may be negative), [u,v] =
// commutator u v u^-1 v^-1.
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string print_word(const Word& w, const std::vector<std::string>& names);

// Presentation files: a `gens: a b c` line, one `rel: <word>` line per
// relator, `#` starts a comment.
Presentation parse_presentation(const std::string& text);
Presentation parse_presentation_file(const std::string& path);
std::string format_presentation(const Presentation& P);  // canonical round-trip form

}  // namespace gradlab
