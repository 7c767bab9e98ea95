#pragma once

#include <map>
#include <string>
#include <vector>

#include "gradlab/int_matrix.hpp"
#include "gradlab/word.hpp"

namespace gradlab {

// Element of the integral group ring of a free group: a finite formal sum of
// reduced words with integer coefficients. Terms are kept in the global
// length-lexicographic word order and zero coefficients are never stored, so
// equal elements are structurally equal.
struct GroupRingElement {
    std::map<Word, Int> terms;

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return monomial(Word{}); }
    static GroupRingElement monomial(const Word& w, const Int& coefficient = 1);

    bool is_zero() const { return terms.empty(); }

    // Accumulates coefficient * w, dropping the term if it cancels to zero.
    void add_term(const Word& w, const Int& coefficient);

    bool operator==(const GroupRingElement& o) const { return terms == o.terms; }

    // Human-readable rendering ("1 - 2*ab + A"), for diagnostics only.
    std::string to_string(const std::vector<std::string>& generator_names) const;
};

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement operator-(const GroupRingElement& x);
GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement operator*(const Word& w, const GroupRingElement& x);
GroupRingElement operator*(const GroupRingElement& x, const Word& w);

// Matrix with group-ring entries, row-major. Read as the presentation of a
// module on `cols` generators with one relation per row.
struct GroupRingMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<GroupRingElement> a;

    GroupRingMatrix() = default;
    GroupRingMatrix(long long r, long long c);

    GroupRingElement& at(long long i, long long j) {
        return a[static_cast<size_t>(i * cols + j)];
    }
    const GroupRingElement& at(long long i, long long j) const {
        return a[static_cast<size_t>(i * cols + j)];
    }

    void validate() const;  // entry count matches the dimensions

    bool operator==(const GroupRingMatrix& o) const = default;
};

}  // namespace gradlab
