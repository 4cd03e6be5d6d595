#pragma once

// Finite samples of weak model sets in symmetric boxes A_n = [-n, n],
// with the internal coordinate of every selected point kept alongside.
//
// TRUNCATED mode cuts with the declared finite prime set only; the sample is
// then N-periodic and every estimator target is exactly computable. SIEVE
// mode additionally sieves with all primes beyond the declared set (by
// divisibility of the prime power the default rule excludes) and is the
// ground truth for genuine k-free sets.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "modelset/errors.hpp"
#include "modelset/scheme.hpp"

namespace modelset {

enum class Mode { kTruncated, kSieve };

inline const char* mode_name(Mode m) { return m == Mode::kTruncated ? "truncated" : "sieve"; }

struct ArithmeticConfiguration {
    ArithmeticScheme scheme;
    ArithmeticWindow window;
    ArithmeticTorusPoint torus;
    Mode mode = Mode::kTruncated;
    long long n = 0;                  // box A_n = [-n, n]
    std::vector<long long> points;    // sorted G-coordinates
    std::vector<long long> internal;  // matched internal coordinates (mod N)

    long long box_size() const { return 2 * n + 1; }
};

namespace detail {

inline void check_sieve_rule(profinite::DefaultRule r) {
    using profinite::DefaultRule;
    if (r != DefaultRule::kCubeFree && r != DefaultRule::kSquareFreeIn)
        throw ValidationError("sieve mode requires cubefree or squarefree default rules");
}

inline int uniform_exponent(const profinite::ProfiniteSpace& sp) {
    for (int k : sp.exponents)
        if (k != sp.exponents.front())
            throw ValidationError("sieve mode requires a uniform exponent");
    return sp.exponents.front();
}

/// Membership mask over [-n, n] for one product window under full sieving:
/// residue tests at the declared primes, divisibility tests beyond them.
inline void sieve_mask(const profinite::ResidueSetWindow& w, long long n,
                       std::vector<char>& mask) {
    const auto& sp = w.space();
    for (size_t i = 0; i < sp.arity(); ++i) {
        long long q = sp.ring_size(i);
        long long r0 = floor_mod(-n, q);
        for (long long idx = 0, r = r0; idx < 2 * n + 1; ++idx) {
            if (mask[size_t(idx)] && !w.component_contains(i, r)) mask[size_t(idx)] = 0;
            if (++r == q) r = 0;
        }
    }
    int k = uniform_exponent(sp);
    int m = rule_excluded_exponent(w.default_rule(), k);
    if (m <= 0) return; // nothing excluded on the tail
    // strike multiples of p^m for all primes beyond the declared set
    long long proot = (long long)std::llround(std::floor(std::pow(double(n), 1.0 / m))) + 2;
    for (long long p : primes_up_to(proot)) {
        if (std::find(sp.primes.begin(), sp.primes.end(), p) != sp.primes.end()) continue;
        long long q = checked_prime_power(p, m);
        if (q > n) continue;
        for (long long y = -(n / q) * q; y <= n; y += q) mask[size_t(y + n)] = 0;
    }
}

inline std::vector<char> sieve_membership(const ArithmeticWindow& w, long long n) {
    std::vector<char> in_w(size_t(2 * n + 1), 1);
    if (std::holds_alternative<profinite::ResidueSetWindow>(w)) {
        const auto& rw = std::get<profinite::ResidueSetWindow>(w);
        check_sieve_rule(rw.default_rule());
        sieve_mask(rw, n, in_w);
        return in_w;
    }
    const auto& dw = std::get<profinite::DifferenceWindow>(w);
    check_sieve_rule(dw.outer().default_rule());
    check_sieve_rule(dw.inner().default_rule());
    sieve_mask(dw.outer(), n, in_w);
    std::vector<char> in_v(size_t(2 * n + 1), 1);
    sieve_mask(dw.inner(), n, in_v);
    for (size_t i = 0; i < in_w.size(); ++i) in_w[i] = in_w[i] && !in_v[i];
    return in_w;
}

} // namespace detail

inline ArithmeticConfiguration generate(const ArithmeticScheme& s, const ArithmeticWindow& w,
                                        const ArithmeticTorusPoint& x, long long n,
                                        Mode mode = Mode::kTruncated) {
    if (window_space(w) != s.space)
        throw ValidationError("generate: window over a different internal space");
    if (n < 1) throw ValidationError("generate: box radius must be >= 1");
    if (n > (INT64_MAX >> 2)) throw ValidationError("generate: box radius overflows");
    if (window_is_empty(w)) throw EmptyWindowError("generate: empty window");

    ArithmeticConfiguration c{s, w, x, mode, n, {}, {}};
    long long big_n = s.space.modulus();
    long long xh = floor_mod(x.x_h, big_n);

    if (mode == Mode::kTruncated) {
        for (long long y = -n; y <= n; ++y) {
            long long h = floor_mod(xh + y, big_n);
            if (window_contains(w, h)) {
                c.points.push_back(y);
                c.internal.push_back(h);
            }
        }
    } else {
        if (xh != 0)
            throw ValidationError("sieve mode requires the zero torus point");
        std::vector<char> member = detail::sieve_membership(w, n);
        for (long long y = -n; y <= n; ++y) {
            if (member[size_t(y + n)]) {
                c.points.push_back(y);
                c.internal.push_back(floor_mod(y, big_n));
            }
        }
    }
    return c;
}

/// Translation action: S_g applied to the sample, realized as generation at
/// the translated torus point (g, 0) + x, which collapses to x_h - Delta(g).
inline ArithmeticConfiguration shift(const ArithmeticConfiguration& c, long long g) {
    if (c.mode == Mode::kSieve && g != 0)
        throw ValidationError("shift: sieve samples are pinned to the zero torus point");
    long long big_n = c.scheme.space.modulus();
    ArithmeticTorusPoint moved{floor_mod(c.torus.x_h - c.scheme.star_map(g), big_n)};
    return generate(c.scheme, c.window, moved, c.n, c.mode);
}

/// Internal translation: the sample of the window d + W at the same torus
/// point. Touches only the internal space, so the G-point statistics keep
/// their distribution.
inline ArithmeticConfiguration internal_shift(const ArithmeticConfiguration& c, long long d) {
    if (c.mode != Mode::kTruncated)
        throw ValidationError("internal_shift: only available in truncated mode");
    return generate(c.scheme, window_translated(c.window, d), c.torus, c.n, c.mode);
}

// ---------------------------------------------------------------------------
// Euclidean samples

struct EuclideanConfiguration {
    EuclideanScheme scheme;
    euclid::IntervalUnionWindow window;
    EuclideanTorusPoint torus;
    double n = 0;
    std::vector<double> points;
    std::vector<double> internal;

    double box_size() const { return 2 * n; }
};

inline EuclideanConfiguration generate(const EuclideanScheme& s,
                                       const euclid::IntervalUnionWindow& w,
                                       const EuclideanTorusPoint& x, double n) {
    if (n <= 0) throw ValidationError("generate: box radius must be positive");
    // coordinate bounding box of B^{-1} ([-n,n] - x_g) x (W - x_h)
    double d = s.det();
    double alo = 1e300, ahi = -1e300, blo = 1e300, bhi = -1e300;
    for (double u : {-n - x.x_g, n - x.x_g}) {
        for (double v : {w.lo() - x.x_h, w.hi() - x.x_h}) {
            double a = (s.h2 * u - s.g2 * v) / d;
            double b = (-s.h1 * u + s.g1 * v) / d;
            alo = std::min(alo, a), ahi = std::max(ahi, a);
            blo = std::min(blo, b), bhi = std::max(bhi, b);
        }
    }
    EuclideanConfiguration c{s, w, x, n, {}, {}};
    std::vector<std::pair<double, double>> pts;
    for (long long a = (long long)std::floor(alo) - 1; a <= (long long)std::ceil(ahi) + 1; ++a) {
        for (long long b = (long long)std::floor(blo) - 1; b <= (long long)std::ceil(bhi) + 1;
             ++b) {
            double yg = x.x_g + s.g_part(a, b);
            double yh = x.x_h + s.star_map(a, b);
            if (yg >= -n && yg <= n && w.contains(yh)) pts.emplace_back(yg, yh);
        }
    }
    std::sort(pts.begin(), pts.end());
    for (auto& [g, h] : pts) {
        c.points.push_back(g);
        c.internal.push_back(h);
    }
    return c;
}

inline EuclideanConfiguration shift(const EuclideanConfiguration& c, double g) {
    EuclideanTorusPoint moved =
        canonical_torus_point(c.scheme, c.torus.x_g + g, c.torus.x_h);
    return generate(c.scheme, c.window, moved, c.n);
}

} // namespace modelset
