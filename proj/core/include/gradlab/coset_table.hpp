#pragma once

#include <string>
#include <vector>

#include "gradlab/presentation.hpp"

namespace gradlab {

// Completed coset table for a finite-index subgroup U of the group presented
// by `presentation`. Row c, column l gives the coset c * l for every encoded
// letter l (generators and inverses interleaved, as in word.hpp). Tables are
// immutable once built; every producer calls validate().
//
// The stabilizer of coset 0 is U. subgroup_generators, when present, are words
// that generate U (Todd-Coxeter input); other producers leave it empty.
struct CosetTable {
    Presentation presentation;
    std::vector<Word> subgroup_generators;
    long long index = 0;
    std::vector<long long> tab;  // index * width() entries, all defined

    int width() const { return 2 * presentation.generator_count(); }

    long long act(long long c, Letter l) const { return tab[c * width() + l]; }

    long long trace(long long c, const Word& w) const {
        for (Letter l : w.letters) c = act(c, l);
        return c;
    }

    // Index-1 table: the whole group as a subgroup of itself.
    static CosetTable trivial(const Presentation& P);

    // Checks totality, that columns are mutually inverse permutations,
    // transitivity from coset 0, relator traces, and subgroup generator
    // traces. Throws InternalError on violation.
    void validate() const;
};

// Relabels cosets in breadth-first order from `basepoint`, scanning letters in
// encoded order. The result is the canonical table of the pointed action
// (its basepoint-0 subgroup is the stabilizer of `basepoint` in T, i.e. a
// conjugate of T's subgroup).
CosetTable standardize(const CosetTable& T, long long basepoint = 0);

// Flat row-major encoding of standardize(T, basepoint); the comparison key
// used for canonical representatives and sorted output.
std::vector<long long> standardized_encoding(const CosetTable& T, long long basepoint = 0);

// True iff the subgroup is normal: every basepoint restandardization yields
// the same table, i.e. all point stabilizers coincide.
bool is_normal(const CosetTable& T);

// The coset action as explicit permutations, one image array per generator
// (positive letters only; inverses are the inverse permutations).
struct PermAction {
    long long degree = 0;
    std::vector<std::vector<long long>> images;
};

PermAction permutation_rep(const CosetTable& T);

// JSON export: {"index": n, "action": {"a": [..], "b": [..]}} with one
// 0-based image array per generator.
std::string table_to_json(const CosetTable& T);

// Rebuilds a table from table_to_json output; the presentation is not part of
// the JSON and must be supplied. Validates before returning.
CosetTable table_from_json(const std::string& text, const Presentation& P);

}  // namespace gradlab
