#pragma once

// Cut-and-project schemes (G, H, L) for the two supported backends:
//   arithmetic: G = Z, H a truncated profinite space, L = {(n, Delta(n))}
//   euclidean:  G = H = R, L spanned by two basis vectors of R^2
// plus the annihilator characters L-degree and the eigenvalue group L-degree'.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "modelset/errors.hpp"
#include "modelset/euclidean.hpp"
#include "modelset/primes.hpp"
#include "modelset/profinite.hpp"
#include "modelset/rational.hpp"

namespace modelset {

// ---------------------------------------------------------------------------
// Arithmetic scheme

using ArithmeticWindow = std::variant<profinite::ResidueSetWindow, profinite::DifferenceWindow>;

inline const profinite::ProfiniteSpace& window_space(const ArithmeticWindow& w) {
    return std::visit([](const auto& x) -> const profinite::ProfiniteSpace& { return x.space(); }, w);
}
inline Rational window_measure(const ArithmeticWindow& w) {
    return std::visit([](const auto& x) { return profinite::haar_measure(x); }, w);
}
inline bool window_contains(const ArithmeticWindow& w, long long h) {
    return std::visit([&](const auto& x) { return x.contains(h); }, w);
}
inline Rational window_covariogram(const ArithmeticWindow& w, long long h) {
    return std::visit([&](const auto& x) { return profinite::covariogram(x, h); }, w);
}
inline std::complex<double> window_fourier(const ArithmeticWindow& w,
                                           const profinite::Character& eta) {
    return std::visit([&](const auto& x) { return profinite::fourier_coefficient(x, eta); }, w);
}
inline profinite::PeriodGroup window_period_group(const ArithmeticWindow& w) {
    return std::visit([](const auto& x) { return profinite::haar_period_group(x); }, w);
}
inline ArithmeticWindow window_translated(const ArithmeticWindow& w, long long d) {
    return std::visit([&](const auto& x) -> ArithmeticWindow { return x.translated(d); }, w);
}
inline bool window_is_empty(const ArithmeticWindow& w) {
    if (std::holds_alternative<profinite::ResidueSetWindow>(w))
        return std::get<profinite::ResidueSetWindow>(w).is_empty();
    return window_measure(w).is_zero();
}

struct ArithmeticScheme {
    profinite::ProfiniteSpace space;

    /// dens(L) = 1: the fundamental domain {0} x H has measure 1 under
    /// counting x normalized Haar.
    Rational density() const { return Rational(1); }

    /// Star map Delta(n) = (n mod p^k_p)_p, as an integer mod N.
    long long star_map(long long n) const { return floor_mod(n, space.modulus()); }
};

/// Torus point of the arithmetic scheme. The torus collapses to H via
/// (n, h) -> h - Delta(n), so only the internal coordinate is stored.
struct ArithmeticTorusPoint {
    long long x_h = 0; // integer mod N
};

/// Annihilator character (chi, eta) with chi = j/N in the dual of Z and eta
/// uniquely determined by the pairing chi(n) * eta(Delta n) = 1.
struct ArithmeticChar {
    long long j;   // chi = j / den
    long long den; // = N
    profinite::Character eta;
};

namespace detail {

inline std::vector<long long> crt_char_inverses(const profinite::ProfiniteSpace& sp) {
    long long n = sp.modulus();
    std::vector<long long> invs(sp.arity());
    for (size_t i = 0; i < sp.arity(); ++i) {
        long long q = sp.ring_size(i);
        invs[i] = inv_mod((n / q) % q, q);
    }
    return invs;
}

} // namespace detail

/// The character paired with chi = j/N.
inline ArithmeticChar annihilator_char(const ArithmeticScheme& s, long long j) {
    const auto& sp = s.space;
    long long n = sp.modulus();
    j = floor_mod(j, n);
    std::vector<long long> invs = detail::crt_char_inverses(sp);
    profinite::Character eta;
    for (size_t i = 0; i < sp.arity(); ++i) {
        long long q = sp.ring_size(i);
        eta.indices.push_back(mul_mod(q - j % q, invs[i], q));
    }
    return {j, n, std::move(eta)};
}

/// All N annihilator characters, sorted by chi = j/N ascending.
inline std::vector<ArithmeticChar> annihilator_frequencies(const ArithmeticScheme& s) {
    const auto& sp = s.space;
    long long n = sp.modulus();
    std::vector<long long> invs = detail::crt_char_inverses(sp);
    std::vector<ArithmeticChar> out;
    out.reserve(size_t(n));
    for (long long j = 0; j < n; ++j) {
        profinite::Character eta;
        for (size_t i = 0; i < sp.arity(); ++i) {
            long long q = sp.ring_size(i);
            eta.indices.push_back(mul_mod(q - j % q, invs[i], q));
        }
        out.push_back({j, n, std::move(eta)});
    }
    return out;
}

/// Annihilator characters whose chi has reduced denominator at most
/// max_denominator. Useful when N is too large for the exhaustive list.
inline std::vector<ArithmeticChar> annihilator_frequencies(const ArithmeticScheme& s,
                                                           long long max_denominator) {
    const auto& sp = s.space;
    long long n = sp.modulus();
    if (max_denominator <= 0 || max_denominator >= n) return annihilator_frequencies(s);
    std::vector<long long> divisors{1};
    for (size_t i = 0; i < sp.arity(); ++i) {
        size_t cur = divisors.size();
        long long pw = 1;
        for (int e = 1; e <= sp.exponents[i]; ++e) {
            pw *= sp.primes[i];
            for (size_t t = 0; t < cur; ++t) {
                if (divisors[t] <= max_denominator / pw) divisors.push_back(divisors[t] * pw);
            }
        }
    }
    std::vector<long long> js;
    for (long long d : divisors) {
        if (d > max_denominator) continue;
        for (long long a = 0; a < d; ++a)
            if (std::gcd(a, d) == 1) js.push_back(a * (n / d));
    }
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    std::vector<ArithmeticChar> out;
    out.reserve(js.size());
    for (long long j : js) out.push_back(annihilator_char(s, j));
    return out;
}

/// Characters whose internal component annihilates the period group: the
/// group of dynamical eigenvalues L-degree'. Trivial periods keep the whole
/// annihilator.
inline std::vector<ArithmeticChar> eigenvalue_group(const ArithmeticScheme& s,
                                                    const profinite::PeriodGroup& periods,
                                                    long long max_denominator = 0) {
    if (periods.space != s.space)
        throw ValidationError("eigenvalue_group: period group over a different space");
    std::vector<ArithmeticChar> all = annihilator_frequencies(s, max_denominator);
    std::vector<ArithmeticChar> out;
    for (auto& ch : all) {
        bool kills = true;
        for (size_t i = 0; i < s.space.arity() && kills; ++i) {
            long long q = s.space.ring_size(i);
            // eta kills d*Z/q iff m*d = 0 mod q
            kills = mul_mod(ch.eta.indices[i], periods.divisors[i], q) == 0;
        }
        if (kills) out.push_back(std::move(ch));
    }
    return out;
}

/// Smallest positive n with Delta(n) in W - W: distinct points of any
/// weak model set with this window are at least this far apart. The search
/// is bounded by N since Delta(N) = 0.
inline long long uniform_discreteness_radius(const ArithmeticScheme& s,
                                             const ArithmeticWindow& w) {
    if (window_is_empty(w))
        throw EmptyWindowError("uniform_discreteness_radius: empty window");
    long long n = s.space.modulus();
    for (long long r = 1; r < n; ++r) {
        // Delta(r) in W - W iff W and W + Delta(r) intersect
        if (window_covariogram(w, s.star_map(r)) > Rational(0)) return r;
    }
    return n;
}

// ---------------------------------------------------------------------------
// Euclidean scheme

struct EuclideanScheme {
    // lattice generators (g1, h1), (g2, h2)
    double g1, h1;
    double g2, h2;

    double det() const { return g1 * h2 - g2 * h1; }

    double density() const { return 1.0 / std::abs(det()); }

    double star_map(long long a, long long b) const { return a * h1 + b * h2; }
    double g_part(long long a, long long b) const { return a * g1 + b * g2; }

    /// Dual basis vectors (columns of B^{-T}); integer combinations of these
    /// are exactly the annihilator characters (chi, eta).
    void dual_basis(double& c1, double& e1, double& c2, double& e2) const {
        double d = det();
        c1 = h2 / d;
        e1 = -g2 / d;
        c2 = -h1 / d;
        e2 = g1 / d;
    }

    /// Injectivity of the G-projection is checked on a bounded coordinate
    /// search and is a declared precondition; dense H-projection is
    /// heuristic and reported as a warning only.
    std::vector<std::string> validate(long long bound = 40) const {
        if (std::abs(det()) < 1e-12)
            throw ValidationError("euclidean scheme: basis vectors are linearly dependent");
        std::vector<std::string> warnings;
        for (long long a = -bound; a <= bound; ++a) {
            for (long long b = -bound; b <= bound; ++b) {
                if (a == 0 && b == 0) continue;
                if (std::abs(g_part(a, b)) < 1e-12)
                    throw ValidationError(
                        "euclidean scheme: lattice does not project injectively to G "
                        "(witness coordinates " +
                        std::to_string(a) + "," + std::to_string(b) + ")");
                if (std::abs(star_map(a, b)) < 1e-12)
                    warnings.push_back(
                        "lattice H-projection hits 0 at coordinates " + std::to_string(a) + "," +
                        std::to_string(b) + "; dense projection assumption likely violated");
            }
        }
        return warnings;
    }
};

struct EuclideanTorusPoint {
    double x_g = 0.0;
    double x_h = 0.0;
};

/// Fundamental-domain representative of (x_g, x_h) + L.
inline EuclideanTorusPoint canonical_torus_point(const EuclideanScheme& s, double x_g,
                                                 double x_h) {
    double d = s.det();
    double a = (s.h2 * x_g - s.g2 * x_h) / d;
    double b = (-s.h1 * x_g + s.g1 * x_h) / d;
    double fa = a - std::floor(a), fb = b - std::floor(b);
    return {fa * s.g1 + fb * s.g2, fa * s.h1 + fb * s.h2};
}

struct EuclideanChar {
    double chi;
    double eta;
    long long a, b; // dual-lattice coordinates
};

/// Dual-lattice points with |chi| <= chi_bound and |eta| <= eta_bound,
/// sorted by chi (ties by eta). The eta bound keeps the list finite; peaks
/// beyond it carry intensity |1_W-check(eta)|^2 decaying like 1/eta^2.
inline std::vector<EuclideanChar> annihilator_frequencies(const EuclideanScheme& s,
                                                          double chi_bound,
                                                          double eta_bound) {
    double c1, e1, c2, e2;
    s.dual_basis(c1, e1, c2, e2);
    // (a, b) = B^T (chi, eta)
    double amax = std::abs(s.g1) * chi_bound + std::abs(s.h1) * eta_bound;
    double bmax = std::abs(s.g2) * chi_bound + std::abs(s.h2) * eta_bound;
    std::vector<EuclideanChar> out;
    const double tol = 1e-9;
    for (long long a = -(long long)std::ceil(amax) - 1; a <= (long long)std::ceil(amax) + 1; ++a) {
        for (long long b = -(long long)std::ceil(bmax) - 1; b <= (long long)std::ceil(bmax) + 1;
             ++b) {
            double chi = a * c1 + b * c2;
            double eta = a * e1 + b * e2;
            if (std::abs(chi) <= chi_bound + tol && std::abs(eta) <= eta_bound + tol)
                out.push_back({chi, eta, a, b});
        }
    }
    std::sort(out.begin(), out.end(), [](const EuclideanChar& x, const EuclideanChar& y) {
        return x.chi != y.chi ? x.chi < y.chi : x.eta < y.eta;
    });
    return out;
}

/// Euclidean windows are Haar aperiodic, so the eigenvalue group is the full
/// annihilator list.
inline std::vector<EuclideanChar> eigenvalue_group(const EuclideanScheme& s,
                                                   const euclid::PeriodGroup&, double chi_bound,
                                                   double eta_bound) {
    return annihilator_frequencies(s, chi_bound, eta_bound);
}

/// Smallest positive G-part among lattice points whose H-part lies in the
/// closed difference set of the window, searched over |a|,|b| <= bound.
/// Conservative (the closed difference set only shrinks the radius).
inline double uniform_discreteness_radius(const EuclideanScheme& s,
                                          const euclid::IntervalUnionWindow& w,
                                          long long bound = 60) {
    std::vector<euclid::Interval> diff = euclid::closed_difference_set(w);
    auto in_diff = [&](double h) {
        for (const auto& iv : diff)
            if (h >= iv.lo - 1e-12 && h <= iv.hi + 1e-12) return true;
        return false;
    };
    double best = std::numeric_limits<double>::infinity();
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            double g = s.g_part(a, b);
            if (g > 1e-12 && g < best && in_diff(s.star_map(a, b))) best = g;
        }
    return best;
}

} // namespace modelset
