#pragma once

#include <map>

#include "gradlab/coset_table.hpp"
#include "gradlab/fp_matrix.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/smith.hpp"

namespace gradlab {

// First homology of a finitely presented group: integral invariant factors
// plus mod-p dimensions for whichever primes the caller asked for.
struct H1Report {
    AbelianInvariants invariants;
    std::map<long long, long long> fp_dims;

    // d(H1(-; Zhat)): minimal generator number of the profinite completion.
    long long d_hat() const { return d_profinite(invariants); }
};

// {"free_rank": r, "torsion": [...], "fp": {"2": m2, ...}}
std::string h1_report_to_json(const H1Report& r);

// Exponent-sum matrix, one row per relator, one column per generator. This
// matrix presents the abelianization.
IntMatrix relation_matrix(const Presentation& P);

AbelianInvariants h1_integral(const Presentation& P);

// dim_{F_p} H1(P; F_p) = generators - rank of the relation matrix mod p.
long long h1_mod_p(const Presentation& P, long long p);

// The frozen H1(P; F_p) coordinate projection used by the mod-p derived
// step: coordinates are indexed by the free (non-pivot) columns of the
// reduced relation matrix, in increasing column order; pivot generators map
// to minus their row's free-column entries. phi has one row per generator
// and m columns, and every relator maps to zero.
struct H1Projection {
    long long p = 2;
    long long m = 0;
    FpMatrix phi;
};

H1Projection h1_projection(const Presentation& P, long long p);

// Reidemeister-Schreier + simplify, then h1_integral and h1_mod_p for each
// requested prime. T's basepoint-0 subgroup is the subject.
H1Report h1_of_subgroup(const CosetTable& T, const std::vector<long long>& fp_primes = {});

}  // namespace gradlab
