#include "gradlab/int_matrix.hpp"

namespace gradlab {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from(std::initializer_list<std::initializer_list<long long>> rows) {
    IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols) throw_input("IntMatrix::from: ragged rows");
        size_t j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw_internal("IntMatrix product: dimension mismatch");
    IntMatrix out(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) out.at(i, j) += xv * y.at(k, j);
        }
    return out;
}

}  // namespace gradlab
