#pragma once

// Brute-force oracles used by the tests. Everything here goes through the
// explicit CRT enumeration of the internal group (or plain integer
// divisibility), independent of the factorized code paths it checks.

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include "modelset/rational.hpp"
#include "modelset/scheme.hpp"

namespace oracle {

using modelset::ArithmeticWindow;
using modelset::Rational;

/// Explicit residue set of a window: all h in [0, N) with h in W.
inline std::vector<long long> enumerate_window(const ArithmeticWindow& w) {
    long long n = modelset::window_space(w).modulus();
    std::vector<long long> out;
    for (long long h = 0; h < n; ++h)
        if (modelset::window_contains(w, h)) out.push_back(h);
    return out;
}

inline Rational measure(const std::vector<long long>& set, long long n) {
    return Rational((long long)set.size(), n);
}

inline std::vector<char> membership(const std::vector<long long>& set, long long n) {
    std::vector<char> m(size_t(n), 0);
    for (long long s : set) m[size_t(s)] = 1;
    return m;
}

/// |S intersect (S + h)| / N by direct counting.
inline Rational covariogram(const std::vector<long long>& set, long long n, long long h) {
    std::vector<char> m = membership(set, n);
    long long c = 0;
    for (long long s : set)
        if (m[size_t(modelset::floor_mod(s - h, n))]) ++c;
    return Rational(c, n);
}

/// m((A) intersect (B + h)) / N by direct counting.
inline Rational cross_covariogram(const std::vector<long long>& a,
                                  const std::vector<long long>& b, long long n, long long h) {
    std::vector<char> mb = membership(b, n);
    long long c = 0;
    for (long long s : a)
        if (mb[size_t(modelset::floor_mod(s - h, n))]) ++c;
    return Rational(c, n);
}

/// All strict periods {t : S + t = S}, enumerated over the whole group.
inline std::vector<long long> periods(const std::vector<long long>& set, long long n) {
    std::vector<char> m = membership(set, n);
    std::vector<long long> out;
    for (long long t = 0; t < n; ++t) {
        bool ok = true;
        for (long long s : set)
            if (!m[size_t((s + t) % n)]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(t);
    }
    return out;
}

/// m((t + S) symmetric-difference S) / N.
inline Rational symdiff_measure(const std::vector<long long>& set, long long n, long long t) {
    std::vector<char> m = membership(set, n);
    long long c = 0;
    for (long long s : set) {
        if (!m[size_t((s + t) % n)]) ++c;                          // in S+t, not in S
        if (!m[size_t(modelset::floor_mod(s - t, n))]) ++c;        // in S, not in S+t
    }
    return Rational(c, n);
}

/// {psi = 1} for the periodization of 1_S over the subgroup generated by
/// the given period list.
inline std::vector<long long> psi_equal_one(const std::vector<long long>& set, long long n,
                                            const std::vector<long long>& period_elems) {
    std::vector<char> m = membership(set, n);
    std::vector<long long> out;
    for (long long h = 0; h < n; ++h) {
        bool all = true;
        for (long long t : period_elems)
            if (!m[size_t((h + t) % n)]) {
                all = false;
                break;
            }
        if (all) out.push_back(h);
    }
    return out;
}

/// (1/N) sum_{s in S} exp(-2 pi i u s / N): the transform against the
/// character h -> exp(2 pi i u h / N).
inline std::complex<double> fourier(const std::vector<long long>& set, long long n,
                                    long long u) {
    std::complex<double> acc(0.0, 0.0);
    for (long long s : set) {
        double angle = -2.0 * std::numbers::pi * double(modelset::mul_mod(u, s, n)) / double(n);
        acc += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc / double(n);
}

/// Integer u with eta(h) = exp(2 pi i u h / N).
inline long long character_index(const modelset::profinite::ProfiniteSpace& sp,
                                 const modelset::profinite::Character& eta) {
    long long n = sp.modulus();
    __int128 acc = 0;
    for (size_t i = 0; i < sp.arity(); ++i)
        acc += (__int128)(n / sp.ring_size(i)) * modelset::floor_mod(eta.indices[i],
                                                                     sp.ring_size(i));
    return (long long)(acc % n);
}

// ---------------------------------------------------------------------------
// Integer sieves (ground truth for k-free sets, by trial division)

inline bool divisible_by_prime_power(long long y, long long p, int m) {
    long long q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    return y % q == 0;
}

inline bool is_squarefree_int(long long y) {
    if (y == 0) return false;
    y = std::llabs(y);
    for (long long p = 2; p * p <= y; ++p)
        if (y % (p * p) == 0) return false;
    return true;
}

inline bool is_cubefree_int(long long y) {
    if (y == 0) return false;
    y = std::llabs(y);
    for (long long p = 2; p * p * p <= y; ++p)
        if (y % (p * p * p) == 0) return false;
    return true;
}

} // namespace oracle
