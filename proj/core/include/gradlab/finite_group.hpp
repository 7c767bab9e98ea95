#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradlab/coset_table.hpp"

namespace gradlab {

// Permutation on {0, ..., degree-1} stored as its image vector.
using Perm = std::vector<int32_t>;

Perm compose(const Perm& a, const Perm& b);  // x -> b[a[x]] (apply a, then b)

// Explicit finite group: every element materialized as a permutation of a
// faithful action, in a canonical breadth-first enumeration (identity first,
// then products with the generators in listed order). Immutable once built.
//
// Groups small enough (order <= 2048) carry a full multiplication table so
// the exhaustive subgroup algorithms run on table lookups; larger groups
// multiply by composing permutations and looking the result up.
struct FiniteGroup {
    std::string name;
    long long degree = 0;
    long long order = 0;
    std::vector<Perm> elements;           // elements[0] is the identity
    std::vector<long long> generators;    // element indices
    std::vector<int32_t> mult;            // order x order table, or empty
    std::vector<long long> inverse;       // inverse[i] * i = identity
    std::map<Perm, long long> index_of;   // permutation -> element index

    long long multiply(long long i, long long j) const;
    long long inv(long long i) const { return inverse[static_cast<size_t>(i)]; }
    long long power(long long i, long long e) const;  // e >= 0
    long long element_order(long long i) const;       // lcm of cycle lengths
    long long element_index(const Perm& p) const;     // InputError when absent

    void validate() const;
};

// Closure of the generating permutations; ResourceExhausted past max_order.
FiniteGroup group_from_permutations(long long degree, const std::vector<Perm>& generator_perms,
                                    const std::string& name, long long max_order = 20000);

// Built-in corpus: "cyclic:n", "abelian:d1,d2,...", "dihedral:n" (n = the
// group order, even), "quaternion:8|16|32", "sym:n" and "alt:n" (n <= 7).
FiniteGroup builtin_group(const std::string& name);

// The finite quotient carried by a normal coset table: cosets as points,
// generators acting on the right. PreconditionViolation when not normal.
FiniteGroup regular_quotient(const CosetTable& T);

// Subgroup as a sorted set of element indices of a FiniteGroup whose lifetime
// the caller manages.
struct SubgroupHandle {
    const FiniteGroup* group = nullptr;
    std::vector<long long> elements;  // sorted, always contains 0

    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(long long e) const;

    void validate() const;  // closure under product and inverse
};

SubgroupHandle whole_group(const FiniteGroup& G);

// Subgroup generated by the seed elements (exhaustive closure).
SubgroupHandle subgroup_closure(const FiniteGroup& G, const std::vector<long long>& seed);

// { x : x g = g x }, by exhaustive scan.
SubgroupHandle centralizer(const FiniteGroup& G, long long g);

// Smallest normal subgroup containing S: closure of all conjugates.
SubgroupHandle normal_closure(const FiniteGroup& G, const std::vector<long long>& S);

// Subgroup generated by all commutators of H.
SubgroupHandle derived_subgroup(const SubgroupHandle& H);

// Minimal generator number of the abelianization H/[H,H]: max over primes p
// of the p-logarithm of |A / A^p|, read off the quotient group directly (no
// integer matrix machinery, so it can cross-check the homology pipeline).
long long abelian_d(const SubgroupHandle& H);

// Least common multiple of the element orders.
long long exponent(const FiniteGroup& G);

// d(K/[K,K]) <= |G : C_G(g) K| for K the normal closure of g. A theorem, so
// pass = false on valid input means an implementation bug.
struct Lemma31Record {
    long long d = 0;
    long long bound = 0;
    bool pass = false;
};

Lemma31Record lemma31_check(const FiniteGroup& G, long long g);

// n is C-almost prime when every factorization n = k*l has k <= C or l <= C.
bool almost_prime(long long n, long long C);

// A prime divisor p of n with n/p <= C^2, which exists whenever n > 1 is
// C-almost prime: take the factorization n = k*l with k <= l and k maximal,
// then any prime divisor of l works (the smallest is returned).
long long almost_prime_witness(long long n, long long C);

}  // namespace gradlab
