#include "gradlab/fp_matrix.hpp"

#include "gradlab/arith.hpp"

namespace gradlab {

namespace {

constexpr long long kMaxPrime = (1LL << 31) - 1;

void check_prime(long long p) {
    require_prime(p, "FpMatrix");
    if (p > kMaxPrime) throw_input("FpMatrix: prime too large for 32-bit entries");
}

}  // namespace

FpMatrix::FpMatrix(long long prime, size_t r, size_t c) : p(prime), rows(r), cols(c), a(r * c) {
    check_prime(prime);
}

FpMatrix FpMatrix::identity(long long p, size_t n) {
    FpMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from(long long p,
                        std::initializer_list<std::initializer_list<long long>> rows) {
    FpMatrix m(p, rows.size(), rows.size() ? rows.begin()->size() : 0);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols) throw_input("FpMatrix::from: ragged rows");
        size_t j = 0;
        for (long long v : row) {
            long long r = v % p;
            if (r < 0) r += p;
            m.at(i, j++) = static_cast<uint32_t>(r);
        }
        ++i;
    }
    return m;
}

FpMatrix fp_reduce(const IntMatrix& m, long long p) {
    FpMatrix out(p, m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) {
            Int r = m.at(i, j) % p;
            if (r < 0) r += p;
            out.at(i, j) = static_cast<uint32_t>(r);
        }
    return out;
}

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y) {
    if (x.p != y.p) throw_internal("fp_mul: mixed characteristics");
    if (x.cols != y.rows) throw_internal("fp_mul: dimension mismatch");
    FpMatrix out(x.p, x.rows, y.cols);
    uint64_t p = static_cast<uint64_t>(x.p);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            uint64_t xv = x.at(i, k);
            if (xv == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) {
                uint64_t s = out.at(i, j) + (xv * y.at(k, j)) % p;
                out.at(i, j) = static_cast<uint32_t>(s >= p ? s - p : s);
            }
        }
    return out;
}

FpMatrix fp_add(const FpMatrix& x, const FpMatrix& y) {
    if (x.p != y.p || x.rows != y.rows || x.cols != y.cols)
        throw_internal("fp_add: shape mismatch");
    FpMatrix out = x;
    uint64_t p = static_cast<uint64_t>(x.p);
    for (size_t i = 0; i < out.a.size(); ++i) {
        uint64_t s = uint64_t(out.a[i]) + y.a[i];
        out.a[i] = static_cast<uint32_t>(s >= p ? s - p : s);
    }
    return out;
}

FpMatrix fp_scale(const FpMatrix& x, long long c) {
    FpMatrix out = x;
    long long cc = c % x.p;
    if (cc < 0) cc += x.p;
    uint64_t p = static_cast<uint64_t>(x.p);
    for (auto& e : out.a) e = static_cast<uint32_t>(uint64_t(e) * uint64_t(cc) % p);
    return out;
}

FpMatrix fp_transpose(const FpMatrix& m) {
    FpMatrix out(m.p, m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

long long fp_inverse_scalar(long long a, long long p) {
    long long r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw_internal("fp_inverse_scalar: zero has no inverse");
    // Extended Euclid on (r, p).
    long long t = 0, new_t = 1, q = p, new_q = r;
    while (new_q != 0) {
        long long quot = q / new_q;
        t -= quot * new_t;
        std::swap(t, new_t);
        q -= quot * new_q;
        std::swap(q, new_q);
    }
    return t < 0 ? t + p : t;
}

FpRref fp_rref(const FpMatrix& m) {
    FpRref res;
    res.mat = m;
    FpMatrix& a = res.mat;
    uint64_t p = static_cast<uint64_t>(m.p);
    size_t row = 0;
    for (size_t col = 0; col < a.cols && row < a.rows; ++col) {
        size_t pivot = a.rows;
        for (size_t i = row; i < a.rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot == a.rows) continue;
        if (pivot != row)
            for (size_t j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
        uint64_t inv = static_cast<uint64_t>(fp_inverse_scalar(a.at(row, col), m.p));
        for (size_t j = col; j < a.cols; ++j)
            a.at(row, j) = static_cast<uint32_t>(a.at(row, j) * inv % p);
        for (size_t i = 0; i < a.rows; ++i) {
            if (i == row) continue;
            uint64_t f = a.at(i, col);
            if (f == 0) continue;
            for (size_t j = col; j < a.cols; ++j) {
                uint64_t s = a.at(i, j) + ((p - f) * a.at(row, j)) % p;
                a.at(i, j) = static_cast<uint32_t>(s >= p ? s - p : s);
            }
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

size_t fp_rank(const FpMatrix& m) { return fp_rref(m).rank(); }

FpMatrix fp_nullspace(const FpMatrix& m) {
    FpRref r = fp_rref(m);
    std::vector<size_t> free_cols;
    {
        size_t next = 0;
        for (size_t c = 0; c < m.cols; ++c) {
            if (next < r.pivots.size() && r.pivots[next] == c)
                ++next;
            else
                free_cols.push_back(c);
        }
    }
    FpMatrix basis(m.p, free_cols.size(), m.cols);
    long long p = m.p;
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        basis.at(k, f) = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) {
            uint32_t e = r.mat.at(i, f);
            if (e != 0) basis.at(k, r.pivots[i]) = static_cast<uint32_t>(p - e);
        }
    }
    return basis;
}

FpMatrix fp_left_nullspace(const FpMatrix& m) { return fp_nullspace(fp_transpose(m)); }

}  // namespace gradlab
