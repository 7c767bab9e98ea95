#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gradlab/fp_matrix.hpp"

namespace gradlab {

// Polynomial over F_p, coefficients stored low degree first with no trailing
// zeros (the zero polynomial is the empty vector, degree -1).
struct FpPoly {
    long long p = 2;
    std::vector<uint32_t> c;

    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    uint32_t coeff(long long i) const;    // 0 beyond the stored range
    uint32_t leading() const;             // InputError on the zero polynomial

    bool operator==(const FpPoly& o) const = default;

    static FpPoly zero(long long p);
    static FpPoly constant(long long p, long long value);
    static FpPoly x(long long p);
    static FpPoly from(long long p, const std::vector<long long>& coeffs);

    std::string to_string() const;  // "x^2 + 2*x + 1", diagnostics only
    void validate() const;          // prime p, reduced coefficients, trimmed
};

FpPoly poly_add(const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b);
FpPoly poly_scale(const FpPoly& a, long long s);
FpPoly poly_monic(const FpPoly& a);  // InputError on zero

struct FpPolyDivMod {
    FpPoly quotient, remainder;  // a = quotient * b + remainder, deg r < deg b
};

FpPolyDivMod poly_divmod(const FpPoly& a, const FpPoly& b);  // b nonzero
FpPoly poly_mod(const FpPoly& a, const FpPoly& b);

// Monic greatest common divisor (zero when both inputs are zero).
FpPoly poly_gcd(const FpPoly& a, const FpPoly& b);

FpPoly poly_derivative(const FpPoly& a);

// base^e mod m, e >= 0, deg m >= 1.
FpPoly poly_pow_mod(const FpPoly& base, long long e, const FpPoly& m);

// f(m) by Horner's rule; m square, matching p.
FpMatrix poly_eval_matrix(const FpPoly& f, const FpMatrix& m);

// Monic characteristic polynomial det(xI - m) of a square matrix, computed
// through a Hessenberg reduction (O(n^3) field operations).
FpPoly char_poly(const FpMatrix& m);

// Complete factorization of the monic normalization of f into monic
// irreducibles with multiplicities, sorted by (degree, coefficients).
// Berlekamp's algorithm: deterministic, suited to the small primes used here.
// InputError on constant or zero input.
std::vector<std::pair<FpPoly, long long>> poly_factorize(const FpPoly& f);

}  // namespace gradlab
