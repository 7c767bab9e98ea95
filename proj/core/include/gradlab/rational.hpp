#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "gradlab/errors.hpp"

namespace gradlab {

// Exact rational numbers for normalized ranks and gradient values. Always kept
// in lowest terms with a positive denominator. Serialized as "num/den" so no
// report ever goes through floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;           // "5/4", "2/1", "-1/3"
    static Rational parse(const std::string& text);
};

}  // namespace gradlab
