#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "modelset/errors.hpp"

namespace modelset {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long long> primes_up_to(long long limit) {
    std::vector<long long> out;
    if (limit < 2) return out;
    std::vector<bool> composite(size_t(limit) + 1, false);
    for (long long p = 2; p <= limit; ++p) {
        if (composite[size_t(p)]) continue;
        out.push_back(p);
        for (long long q = p * p; q <= limit; q += p) composite[size_t(q)] = true;
    }
    return out;
}

/// p^k with overflow detection.
inline long long checked_prime_power(long long p, int k) {
    __int128 v = 1;
    for (int i = 0; i < k; ++i) {
        v *= p;
        if (v > INT64_MAX) throw std::overflow_error("prime power exceeds 64-bit range");
    }
    return (long long)v;
}

inline long long floor_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

/// (a*b) mod m for m up to 2^62, via 128-bit intermediate.
inline long long mul_mod(long long a, long long b, long long m) {
    __int128 v = (__int128)floor_mod(a, m) * floor_mod(b, m);
    return (long long)(v % m);
}

/// Inverse of a modulo m (gcd(a, m) must be 1).
inline long long inv_mod(long long a, long long m) {
    long long t = 0, new_t = 1;
    long long r = m, new_r = floor_mod(a, m);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ValidationError("inv_mod: arguments are not coprime");
    return floor_mod(t, m);
}

} // namespace modelset
