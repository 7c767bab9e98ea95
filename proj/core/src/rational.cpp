#include "gradlab/rational.hpp"

#include <numeric>

namespace gradlab {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw_internal("rational arithmetic overflow");
    return static_cast<long long>(v);
}

Rational make(i128 n, i128 d) {
    if (d == 0) throw_input("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;  // n == 0
    Rational r;
    r.num = narrow(n / a);
    r.den = narrow(d / a);
    return r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    Rational r = make(n, d);
    num = r.num;
    den = r.den;
}

Rational Rational::operator+(const Rational& o) const {
    return make(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return make(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return make(i128(num) * o.num, i128(den) * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw_input("rational division by zero");
    return make(i128(num) * o.den, i128(den) * o.num);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    i128 lhs = i128(num) * o.den;
    i128 rhs = i128(o.num) * den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw_input("malformed rational: '" + text + "'");
    }
}

}  // namespace gradlab
