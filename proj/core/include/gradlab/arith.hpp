#pragma once

#include <cstdint>
#include <vector>

#include "gradlab/errors.hpp"

namespace gradlab {

// Small integer arithmetic helpers shared across modules. Everything is exact;
// overflow raises instead of wrapping.

bool is_prime(long long n);

// Throws InputError when p is not prime (shared validation for all mod-p entry
// points).
void require_prime(long long p, const char* context);

// base^exp with overflow detection; throws ResourceExhausted when the result
// would exceed `limit` (and InternalError on plain int64 overflow).
long long checked_pow(long long base, long long exp, long long limit);

// Prime factorization by trial division, (prime, multiplicity) pairs in
// increasing prime order. Intended for desk-scale inputs.
std::vector<std::pair<long long, int>> factorize(long long n);

// All divisors of n in increasing order.
std::vector<long long> divisors(long long n);

}  // namespace gradlab
