#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradlab/finite_group.hpp"
#include "gradlab/fp_matrix.hpp"

namespace gradlab {

// F_p[Q]-module presented by the right action of the group's generators on
// row vectors: v maps to v * A for each action matrix A.
struct ModuleRep {
    long long p = 2;
    long long dimension = 0;
    std::vector<FpMatrix> generator_actions;

    void validate() const;  // prime p, square matching matrices, invertible
};

// Multiset of composition factor dimensions (dimension -> multiplicity).
struct SimpleDegreeReport {
    std::map<long long, long long> degrees;
    long long max_degree = 0;

    long long total() const;  // sum of dimension * multiplicity
    void validate() const;
};

// {"degrees":{"1":2,"2":2},"max_degree":2}
std::string simple_degree_report_to_json(const SimpleDegreeReport& r);

// Seed for the randomized submodule search: GRADLAB_SEED when set to a
// positive integer, 1729 otherwise.
long long default_seed();

// Permutation matrices of right multiplication by the group generators on the
// group itself; dimension |Q|. ResourceExhausted when |Q| > max_order.
ModuleRep regular_module(const FiniteGroup& Q, long long p, long long max_order = 200);

// Composition factor dimensions by repeated submodule splitting. Small
// modules are chopped by exhaustive spinning over all lines (deterministic
// outright); larger ones draw random algebra elements and split along kernels
// of irreducible factors of their characteristic polynomials, certifying
// simplicity through the dual-spin (Norton) criterion. Deterministic given
// the seed; the reported multiset is seed-independent.
SimpleDegreeReport chop(const ModuleRep& M, long long seed);
SimpleDegreeReport chop(const ModuleRep& M);  // seed = default_seed()

// Largest composition factor dimension of the regular module versus the
// square-root bound: pass = (max_degree^2 <= exponent * |Q|), compared in
// exact integers. The bound field is the floating display value only.
struct Lemma32Record {
    long long max_degree = 0;
    long long exponent = 0;
    long long order = 0;
    double bound = 0.0;
    bool pass = false;
};

Lemma32Record lemma32_check(const FiniteGroup& Q, long long p, long long max_order = 200);

}  // namespace gradlab
