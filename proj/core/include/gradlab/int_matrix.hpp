#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gradlab/errors.hpp"

namespace gradlab {

// Unbounded-precision integers. Smith normal form pivots grow quickly, and
// silent wraparound is forbidden everywhere in this library, so all integer
// matrices use these.
using Int = boost::multiprecision::cpp_int;

// Dense row-major integer matrix. Rows are relations, columns are generators
// in every homology-facing use.
struct IntMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Int> a;  // row-major, rows * cols entries

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    static IntMatrix identity(size_t n);
    static IntMatrix from(std::initializer_list<std::initializer_list<long long>> rows);
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

}  // namespace gradlab
