#pragma once

#include "gradlab/coset_table.hpp"

namespace gradlab {

// Schreier transversal and generators for the basepoint-0 subgroup of a coset
// table. The transversal is the breadth-first spanning tree from coset 0 with
// letters scanned in encoded order: prefix-closed, shortest, and
// deterministic. Transversal words are materialized on demand from the parent
// arrays.
//
// Schreier generators are indexed by (coset c, generator x) pairs; the pair is
// trivial (index -1) exactly when its edge lies on the tree, i.e. when
// t_c * x freely equals t_{c*x}. Non-trivial pairs are numbered consecutively
// in row-major (coset, generator) order.
struct SchreierData {
    long long index = 0;
    int generators = 0;                // ambient generator count
    std::vector<long long> parent;     // BFS tree parent; -1 at coset 0
    std::vector<Letter> parent_letter; // letter read from parent to the coset
    std::vector<long long> sgen;       // index * generators entries; -1 = trivial
    long long nontrivial_count = 0;

    long long sgen_index(long long c, int x) const { return sgen[c * generators + x]; }

    // t_c: the unique tree word tracing coset 0 to c.
    Word transversal_word(long long c) const;
};

SchreierData schreier_data(const CosetTable& T);

// Reidemeister-Schreier presentation of the basepoint-0 subgroup: one
// generator per non-trivial Schreier pair (named a.. or x0.. by count), one
// relator per (coset, ambient relator) pair, rewritten through the
// transversal and freely reduced. No conjugacy deduplication; callers pass
// the result through simplify() when size matters.
Presentation subgroup_presentation(const CosetTable& T);

// One step of the mod-p derived series: the subgroup L' = [L,L]L^p of the
// basepoint-0 subgroup L of T, as a coset table over the same ambient
// presentation. Cosets of L' are pairs (coset of L, vector in F_p^m) with
// m = dim H1(L; F_p), numbered c*p^m + sum v_t p^t; generator x sends (c,v)
// to (c*x, v + phi(sigma(c,x))).
//
// Requires is_normal(T) (PreconditionViolation otherwise); the output index
// |G:L'| = |G:L| * p^m is checked against max_cosets before construction
// (ResourceExhausted). The output is again normal (L' is characteristic in
// L), which is asserted in tests rather than recomputed here.
CosetTable p_derived_step(const CosetTable& T, long long p, long long max_cosets);

}  // namespace gradlab
