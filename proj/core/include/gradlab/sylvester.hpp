#pragma once

#include "gradlab/coset_table.hpp"
#include "gradlab/fp_matrix.hpp"
#include "gradlab/group_ring.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/rational.hpp"

namespace gradlab {

// Exact normalized rank of a module over F_p[Q] for a finite quotient Q: the
// F_p-dimension divided by |Q|. Kept in lowest terms; the denominator always
// divides the quotient order.
struct SylvesterValue {
    Rational value;
    long long quotient_order = 1;
    long long p = 2;

    void validate() const;
};

// Replaces every group-ring entry by its |Q| x |Q| right-regular block over
// F_p: the block of a word w has a 1 in row x, column x.w for each coset x.
// The coset numbering of T is the frozen basis, so results are reproducible
// byte for byte. Requires is_normal(T) so that the cosets form a group.
FpMatrix push_to_quotient(const GroupRingMatrix& M, const CosetTable& T, long long p);

// Normalized dimension of the module presented by M (generators = columns,
// relations = rows) over F_p[Q]: (cols * |Q| - rank of the pushed matrix)/|Q|.
SylvesterValue sylvester_dim(const GroupRingMatrix& M, const CosetTable& T, long long p);

// sylvester_dim of the Fox-Jacobian presentation of the augmentation ideal.
// P must present the ambient group of T: same generator count, relators
// acting trivially on the cosets. The value satisfies the finite-level
// identity
//   augmentation_dim(P, T, p) - 1 = (dim H1(subgroup; F_p) - 1) / index,
// which the dual-route tests check against Reidemeister-Schreier homology.
SylvesterValue augmentation_dim(const Presentation& P, const CosetTable& T, long long p);

// Normalized dimension of F_p[Q] / F_p[Q](g - 1) for a word g whose image in
// Q has order exactly p^k (PreconditionViolation otherwise). The result is
// always exactly 1/p^k; it is computed through the generic rank machinery and
// the closed form is asserted, never substituted.
SylvesterValue boundpower_check(const CosetTable& T, const Word& g, long long p, long long k);

}  // namespace gradlab
