#include "gradlab/smith.hpp"

#include <algorithm>

namespace gradlab {

namespace {

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

// Factor a positive cpp_int by trial division. Desk-scale inputs only (torsion
// orders of small relation matrices).
std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> ps;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

void AbelianInvariants::validate() const {
    if (free_rank < 0) throw_internal("AbelianInvariants: negative free rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw_internal("AbelianInvariants: torsion entry < 2");
        if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
            throw_internal("AbelianInvariants: divisibility chain broken");
    }
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> out;
    size_t n = std::min(d.rows, d.cols);
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

void SmithResult::verify(const IntMatrix& m) const {
    if (!(u * m * v == d)) throw_internal("Smith certificate failed: u*m*v != d");
    for (size_t i = 0; i < d.rows; ++i)
        for (size_t j = 0; j < d.cols; ++j)
            if (i != j && d.at(i, j) != 0) throw_internal("Smith result is not diagonal");
}

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult res;
    res.d = m;
    res.u = IntMatrix::identity(m.rows);
    res.v = IntMatrix::identity(m.cols);
    IntMatrix& a = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    auto swap_rows = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t j = 0; j < a.cols; ++j) std::swap(a.at(x, j), a.at(y, j));
        for (size_t j = 0; j < u.cols; ++j) std::swap(u.at(x, j), u.at(y, j));
    };
    auto swap_cols = [&](size_t x, size_t y) {
        if (x == y) return;
        for (size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, x), a.at(i, y));
        for (size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, x), v.at(i, y));
    };
    // row x -= q * row y (and mirrored on u, preserving u*m*v == a).
    auto row_sub = [&](size_t x, size_t y, const Int& q) {
        if (q == 0) return;
        for (size_t j = 0; j < a.cols; ++j) a.at(x, j) -= q * a.at(y, j);
        for (size_t j = 0; j < u.cols; ++j) u.at(x, j) -= q * u.at(y, j);
    };
    auto col_sub = [&](size_t x, size_t y, const Int& q) {
        if (q == 0) return;
        for (size_t i = 0; i < a.rows; ++i) a.at(i, x) -= q * a.at(i, y);
        for (size_t i = 0; i < v.rows; ++i) v.at(i, x) -= q * v.at(i, y);
    };

    size_t n = std::min(a.rows, a.cols);
    for (size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero absolute value in the trailing submatrix,
            // row-major tie-break. Keeps pivot growth contained.
            size_t pi = a.rows, pj = a.cols;
            Int best;
            for (size_t i = t; i < a.rows; ++i)
                for (size_t j = t; j < a.cols; ++j) {
                    const Int& e = a.at(i, j);
                    if (e == 0) continue;
                    Int mag = int_abs(e);
                    if (pi == a.rows || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == a.rows) {
                t = n;  // trailing submatrix is zero: done
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            // Clear row and column t by division with remainder; leftover
            // remainders are strictly smaller than the pivot, so the next
            // sweep picks a smaller pivot and the loop terminates.
            bool remainder = false;
            for (size_t i = t + 1; i < a.rows; ++i) {
                row_sub(i, t, a.at(i, t) / a.at(t, t));
                remainder = remainder || a.at(i, t) != 0;
            }
            for (size_t j = t + 1; j < a.cols; ++j) {
                col_sub(j, t, a.at(t, j) / a.at(t, t));
                remainder = remainder || a.at(t, j) != 0;
            }
            if (remainder) continue;

            // Divisibility repair: if the pivot misses an entry deeper in the
            // matrix, fold that row into row t and re-reduce, driving the
            // pivot toward the gcd of the whole trailing submatrix.
            bool repaired = false;
            for (size_t i = t + 1; i < a.rows && !repaired; ++i)
                for (size_t j = t + 1; j < a.cols && !repaired; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        row_sub(t, i, Int(-1));
                        repaired = true;
                    }
            if (!repaired) break;
        }
        if (t == n) break;
    }

    for (size_t t = 0; t < n; ++t)
        if (a.at(t, t) < 0) {
            for (size_t j = 0; j < a.cols; ++j) a.at(t, j) = -a.at(t, j);
            for (size_t j = 0; j < u.cols; ++j) u.at(t, j) = -u.at(t, j);
        }

    long long rank = 0;
    for (size_t t = 0; t < n; ++t) {
        if (a.at(t, t) == 0) continue;
        ++rank;
        if (a.at(t, t) >= 2) res.cokernel.torsion.push_back(a.at(t, t));
    }
    res.cokernel.free_rank = static_cast<long long>(m.cols) - rank;
    res.cokernel.validate();

    // The certificate is cheap to recheck at small sizes; larger callers (and
    // the tests) invoke verify() explicitly.
    if (m.rows <= 64 && m.cols <= 64) res.verify(m);
    return res;
}

long long d_profinite(const AbelianInvariants& a) {
    a.validate();
    if (a.torsion.empty()) return a.free_rank;
    long long best = 0;
    for (const Int& p : prime_divisors(a.torsion.back())) {
        long long dim = a.free_rank;
        for (const Int& t : a.torsion)
            if (t % p == 0) ++dim;
        best = std::max(best, dim);
    }
    return best;
}

}  // namespace gradlab
