#pragma once

#include <cstdint>
#include <vector>

#include "gradlab/int_matrix.hpp"

namespace gradlab {

// Dense matrix over the prime field F_p. Entries are kept reduced to [0, p).
// Vectors are rows throughout the library: a matrix acts on the right.
struct FpMatrix {
    long long p = 2;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint32_t> a;  // row-major

    FpMatrix() = default;
    FpMatrix(long long prime, size_t r, size_t c);

    uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const FpMatrix& o) const {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }

    static FpMatrix identity(long long p, size_t n);
    static FpMatrix from(long long p, std::initializer_list<std::initializer_list<long long>> rows);
};

// Entrywise reduction of an integer matrix mod p.
FpMatrix fp_reduce(const IntMatrix& m, long long p);

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y);
FpMatrix fp_add(const FpMatrix& x, const FpMatrix& y);
FpMatrix fp_scale(const FpMatrix& x, long long c);
FpMatrix fp_transpose(const FpMatrix& m);
long long fp_inverse_scalar(long long a, long long p);  // a != 0 mod p

// Canonical reduced row echelon form (unique): pivot rows scaled to 1, pivot
// columns cleared above and below, zero rows moved to the bottom. `pivots`
// lists the pivot column of each nonzero row in increasing order.
struct FpRref {
    FpMatrix mat;
    std::vector<size_t> pivots;

    size_t rank() const { return pivots.size(); }
};

FpRref fp_rref(const FpMatrix& m);

size_t fp_rank(const FpMatrix& m);

// Canonical basis (as rows) of { x : x * m^T = 0 }, i.e. the right nullspace
// of m read as row vectors: each output row z satisfies m * z^T = 0. One row
// per free column of rref(m), in increasing column order.
FpMatrix fp_nullspace(const FpMatrix& m);

// Canonical basis (as rows) of the left nullspace { x : x * m = 0 }.
FpMatrix fp_left_nullspace(const FpMatrix& m);

}  // namespace gradlab
