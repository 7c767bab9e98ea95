#pragma once

#include <vector>

#include "gradlab/int_matrix.hpp"

namespace gradlab {

// Invariant-factor description of a finitely generated abelian group:
// Z^free_rank x Z/t_1 x ... x Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    void validate() const;  // divisibility chain, entries >= 2
};

// Smith normal form with transform certificate: u * input * v == d where d is
// diagonal with nonnegative entries d_1 | d_2 | ... The cokernel field
// describes Z^cols / rowspace(input).
struct SmithResult {
    IntMatrix u, d, v;
    AbelianInvariants cokernel;

    std::vector<Int> diagonal() const;      // all min(rows, cols) entries, in order
    void verify(const IntMatrix& m) const;  // recheck u * m * v == d; InternalError on mismatch
};

SmithResult smith_normal_form(const IntMatrix& m);

// Minimal number of topological generators of the profinite completion of the
// abelian group: max over primes p of dim_{F_p}(A / pA). Only primes dividing
// the last torsion entry can matter because of the divisibility chain.
long long d_profinite(const AbelianInvariants& a);

}  // namespace gradlab
