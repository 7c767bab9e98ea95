#include "gradlab/fp_poly.hpp"

#include <algorithm>
#include <map>

#include "gradlab/arith.hpp"
#include "gradlab/errors.hpp"

namespace gradlab {

namespace {

uint32_t addp(uint32_t a, uint32_t b, long long p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % static_cast<uint64_t>(p));
}

uint32_t subp(uint32_t a, uint32_t b, long long p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) + static_cast<uint64_t>(p) - b) %
                                 static_cast<uint64_t>(p));
}

uint32_t mulp(uint32_t a, uint32_t b, long long p) {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % static_cast<uint64_t>(p));
}

void trim(std::vector<uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw_input("polynomials over different prime fields");
}

}  // namespace

uint32_t FpPoly::coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(c.size())) return 0;
    return c[static_cast<size_t>(i)];
}

uint32_t FpPoly::leading() const {
    if (c.empty()) throw_input("the zero polynomial has no leading coefficient");
    return c.back();
}

FpPoly FpPoly::zero(long long p) { return FpPoly{p, {}}; }

FpPoly FpPoly::constant(long long p, long long value) {
    return from(p, std::vector<long long>{value});
}

FpPoly FpPoly::x(long long p) { return from(p, {0, 1}); }

FpPoly FpPoly::from(long long p, const std::vector<long long>& coeffs) {
    require_prime(p, "FpPoly::from");
    FpPoly out;
    out.p = p;
    for (long long v : coeffs) {
        long long r = v % p;
        if (r < 0) r += p;
        out.c.push_back(static_cast<uint32_t>(r));
    }
    trim(out.c);
    return out;
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long long i = degree(); i >= 0; --i) {
        const uint32_t v = coeff(i);
        if (v == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(v);
            continue;
        }
        if (v != 1) out += std::to_string(v) + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

void FpPoly::validate() const {
    require_prime(p, "FpPoly");
    for (uint32_t v : c)
        if (static_cast<long long>(v) >= p) throw_internal("polynomial coefficient not reduced");
    if (!c.empty() && c.back() == 0) throw_internal("polynomial has a trailing zero");
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    FpPoly out = FpPoly::zero(a.p);
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = addp(a.coeff(static_cast<long long>(i)), b.coeff(static_cast<long long>(i)), a.p);
    trim(out.c);
    return out;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    FpPoly out = FpPoly::zero(a.p);
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = subp(a.coeff(static_cast<long long>(i)), b.coeff(static_cast<long long>(i)), a.p);
    trim(out.c);
    return out;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p);
    FpPoly out = FpPoly::zero(a.p);
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = addp(out.c[i + j], mulp(a.c[i], b.c[j], a.p), a.p);
    }
    trim(out.c);
    return out;
}

FpPoly poly_scale(const FpPoly& a, long long s) {
    long long r = s % a.p;
    if (r < 0) r += a.p;
    FpPoly out = a;
    for (uint32_t& v : out.c) v = mulp(v, static_cast<uint32_t>(r), a.p);
    trim(out.c);
    return out;
}

FpPoly poly_monic(const FpPoly& a) {
    if (a.is_zero()) throw_input("cannot normalize the zero polynomial");
    if (a.leading() == 1) return a;
    return poly_scale(a, fp_inverse_scalar(a.leading(), a.p));
}

FpPolyDivMod poly_divmod(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw_input("polynomial division by zero");
    FpPolyDivMod out{FpPoly::zero(a.p), a};
    const long long lead_inv = fp_inverse_scalar(b.leading(), a.p);
    while (!out.remainder.is_zero() && out.remainder.degree() >= b.degree()) {
        const long long shift = out.remainder.degree() - b.degree();
        const uint32_t factor =
            mulp(out.remainder.leading(), static_cast<uint32_t>(lead_inv), a.p);
        if (out.quotient.degree() < shift)
            out.quotient.c.resize(static_cast<size_t>(shift) + 1, 0);
        out.quotient.c[static_cast<size_t>(shift)] = factor;
        for (long long i = 0; i <= b.degree(); ++i) {
            const size_t k = static_cast<size_t>(i + shift);
            out.remainder.c[k] =
                subp(out.remainder.c[k], mulp(factor, b.coeff(i), a.p), a.p);
        }
        trim(out.remainder.c);
    }
    trim(out.quotient.c);
    return out;
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& b) { return poly_divmod(a, b).remainder; }

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    FpPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FpPoly r2 = poly_mod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.is_zero() ? r0 : poly_monic(r0);
}

FpPoly poly_derivative(const FpPoly& a) {
    FpPoly out = FpPoly::zero(a.p);
    for (long long i = 1; i <= a.degree(); ++i)
        out.c.push_back(mulp(a.coeff(i), static_cast<uint32_t>(i % a.p), a.p));
    trim(out.c);
    return out;
}

FpPoly poly_pow_mod(const FpPoly& base, long long e, const FpPoly& m) {
    if (e < 0) throw_input("poly_pow_mod: exponent must be non-negative");
    if (m.degree() < 1) throw_input("poly_pow_mod: modulus must have positive degree");
    FpPoly acc = FpPoly::constant(base.p, 1);
    FpPoly sq = poly_mod(base, m);
    while (e > 0) {
        if (e & 1) acc = poly_mod(poly_mul(acc, sq), m);
        sq = poly_mod(poly_mul(sq, sq), m);
        e >>= 1;
    }
    return acc;
}

FpMatrix poly_eval_matrix(const FpPoly& f, const FpMatrix& m) {
    if (m.rows != m.cols) throw_input("poly_eval_matrix: matrix must be square");
    if (m.p != f.p) throw_input("poly_eval_matrix: field mismatch");
    FpMatrix acc(f.p, m.rows, m.cols);
    for (long long i = f.degree(); i >= 0; --i) {
        acc = fp_mul(acc, m);
        const uint32_t v = f.coeff(i);
        for (size_t d = 0; d < m.rows; ++d) acc.at(d, d) = addp(acc.at(d, d), v, f.p);
    }
    return acc;
}

FpPoly char_poly(const FpMatrix& m) {
    if (m.rows != m.cols) throw_input("char_poly: matrix must be square");
    require_prime(m.p, "char_poly");
    const size_t n = m.rows;
    if (n == 0) return FpPoly::constant(m.p, 1);
    const long long p = m.p;

    // Similarity reduction to upper Hessenberg form.
    FpMatrix h = m;
    for (size_t j = 0; j + 2 <= n; ++j) {
        size_t pivot = 0;
        for (size_t r = j + 1; r < n; ++r)
            if (h.at(r, j) != 0) {
                pivot = r;
                break;
            }
        if (pivot == 0) continue;
        if (pivot != j + 1) {
            for (size_t k = 0; k < n; ++k) std::swap(h.at(pivot, k), h.at(j + 1, k));
            for (size_t k = 0; k < n; ++k) std::swap(h.at(k, pivot), h.at(k, j + 1));
        }
        const uint32_t inv =
            static_cast<uint32_t>(fp_inverse_scalar(h.at(j + 1, j), p));
        for (size_t i = j + 2; i < n; ++i) {
            if (h.at(i, j) == 0) continue;
            const uint32_t factor = mulp(h.at(i, j), inv, p);
            for (size_t k = 0; k < n; ++k)
                h.at(i, k) = subp(h.at(i, k), mulp(factor, h.at(j + 1, k), p), p);
            for (size_t k = 0; k < n; ++k)
                h.at(k, j + 1) = addp(h.at(k, j + 1), mulp(factor, h.at(k, i), p), p);
        }
    }

    // Leading-minor recurrence for the characteristic polynomial of an upper
    // Hessenberg matrix, expanding det(xI - H_k) along the last row.
    std::vector<FpPoly> minor(n + 1, FpPoly::zero(p));
    minor[0] = FpPoly::constant(p, 1);
    const FpPoly var = FpPoly::x(p);
    for (size_t k = 1; k <= n; ++k) {
        FpPoly t = poly_mul(poly_sub(var, FpPoly::constant(p, h.at(k - 1, k - 1))),
                            minor[k - 1]);
        uint32_t beta = 1;
        for (size_t i = 1; i < k; ++i) {
            beta = mulp(beta, h.at(k - i, k - i - 1), p);
            if (beta == 0) break;
            const uint32_t entry = h.at(k - 1 - i, k - 1);
            if (entry == 0) continue;
            t = poly_sub(t, poly_scale(minor[k - 1 - i], mulp(beta, entry, p)));
        }
        minor[k] = std::move(t);
    }
    require_internal(minor[n].degree() == static_cast<long long>(n) && minor[n].leading() == 1,
                     "characteristic polynomial must be monic of full degree");
    return minor[n];
}

namespace {

// Berlekamp splitting of a squarefree monic polynomial into monic irreducibles.
void berlekamp_squarefree(const FpPoly& f, std::vector<FpPoly>& out) {
    const long long n = f.degree();
    if (n <= 1) {
        out.push_back(f);
        return;
    }
    const long long p = f.p;

    // Frobenius matrix: row i holds x^(p*i) mod f.
    const FpPoly xp = poly_pow_mod(FpPoly::x(p), p, f);
    FpPoly cur = FpPoly::constant(p, 1);
    FpMatrix frob(p, static_cast<size_t>(n), static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j <= cur.degree(); ++j)
            frob.at(static_cast<size_t>(i), static_cast<size_t>(j)) = cur.coeff(j);
        cur = poly_mod(poly_mul(cur, xp), f);
    }
    for (size_t i = 0; i < frob.rows; ++i)
        frob.at(i, i) = subp(frob.at(i, i), 1, p);

    // Kernel vectors are polynomials a with a^p = a mod f; kernel rank equals
    // the number of irreducible factors.
    const FpMatrix kernel = fp_left_nullspace(frob);
    require_internal(kernel.rows >= 1, "Berlekamp kernel lost the constants");
    if (kernel.rows == 1) {
        out.push_back(f);
        return;
    }
    FpPoly splitter = FpPoly::zero(p);
    for (size_t r = 0; r < kernel.rows && splitter.degree() < 1; ++r) {
        std::vector<long long> coeffs;
        for (size_t j = 0; j < kernel.cols; ++j) coeffs.push_back(kernel.at(r, j));
        splitter = FpPoly::from(p, coeffs);
    }
    require_internal(splitter.degree() >= 1, "Berlekamp kernel has no splitting element");

    for (long long s = 0; s < p; ++s) {
        const FpPoly g = poly_gcd(f, poly_sub(splitter, FpPoly::constant(p, s)));
        if (g.degree() >= 1) {
            require_internal(g.degree() < n, "Berlekamp splitter failed to split");
            berlekamp_squarefree(g, out);
        }
    }
}

void factor_rec(const FpPoly& f, long long multiplicity,
                std::map<std::vector<uint32_t>, long long>& acc) {
    if (f.degree() < 1) return;
    const FpPoly d = poly_derivative(f);
    if (d.is_zero()) {
        // f = u(x^p) = u(x)^p over the prime field; take the p-th root.
        std::vector<long long> coeffs;
        for (long long i = 0; i * f.p <= f.degree(); ++i)
            coeffs.push_back(f.coeff(i * f.p));
        factor_rec(FpPoly::from(f.p, coeffs), multiplicity * f.p, acc);
        return;
    }
    const FpPoly g = poly_gcd(f, d);
    if (g.degree() == 0) {
        std::vector<FpPoly> parts;
        berlekamp_squarefree(f, parts);
        for (const FpPoly& part : parts) acc[part.c] += multiplicity;
        return;
    }
    factor_rec(g, multiplicity, acc);
    factor_rec(poly_divmod(f, g).quotient, multiplicity, acc);
}

}  // namespace

std::vector<std::pair<FpPoly, long long>> poly_factorize(const FpPoly& f) {
    f.validate();
    if (f.degree() < 1) throw_input("poly_factorize: input must have positive degree");
    std::map<std::vector<uint32_t>, long long> acc;
    factor_rec(poly_monic(f), 1, acc);

    std::vector<std::pair<FpPoly, long long>> out;
    for (const auto& [coeffs, mult] : acc) out.push_back({FpPoly{f.p, coeffs}, mult});
    std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.first.degree() != rhs.first.degree())
            return lhs.first.degree() < rhs.first.degree();
        return lhs.first.c < rhs.first.c;
    });
    return out;
}

}  // namespace gradlab
