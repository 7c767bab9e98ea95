#include "gradlab/arith.hpp"

#include <algorithm>
#include <string>

namespace gradlab {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void require_prime(long long p, const char* context) {
    if (!is_prime(p))
        throw_input(std::string(context) + ": " + std::to_string(p) + " is not prime");
}

long long checked_pow(long long base, long long exp, long long limit) {
    if (base < 0 || exp < 0) throw_input("checked_pow: negative arguments");
    long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base)
            throw_resource("power " + std::to_string(base) + "^" + std::to_string(exp) +
                           " exceeds limit " + std::to_string(limit));
        r *= base;
        if (r > limit)
            throw_resource("power " + std::to_string(base) + "^" + std::to_string(exp) +
                           " exceeds limit " + std::to_string(limit));
    }
    return r;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw_input("factorize: argument must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw_input("divisors: argument must be positive");
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gradlab
