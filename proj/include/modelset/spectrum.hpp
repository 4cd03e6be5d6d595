#pragma once

// Theoretical autocorrelation, diffraction and Fourier-Bohr coefficients.
//
// Truncated arithmetic quantities are exact: the autocorrelation at lag k is
// dens(L) * c_W(Delta k) as a rational, and the diffraction lives on the N
// annihilator frequencies with intensity dens(L)^2 * |1_W-check(eta)|^2.
//
// Sieve-mode targets are the untruncated counterparts: every per-prime
// factor beyond the declared prime set is supplied by the default rule, and
// the infinite products are evaluated up to a prime cutoff (they converge
// like sum p^-2).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "modelset/configuration.hpp"
#include "modelset/scheme.hpp"
#include "modelset/verdict.hpp"

namespace modelset {

// ---------------------------------------------------------------------------
// Truncated arithmetic theory

struct ArithmeticAutocorrelation {
    std::vector<long long> lags;
    std::vector<Rational> values; // dens(L) * c_W(Delta k)
};

inline ArithmeticAutocorrelation theoretical_autocorrelation(const ArithmeticScheme& s,
                                                             const ArithmeticWindow& w,
                                                             const std::vector<long long>& lags) {
    ArithmeticAutocorrelation table;
    for (long long k : lags) {
        table.lags.push_back(k);
        table.values.push_back(s.density() * window_covariogram(w, s.star_map(k)));
    }
    return table;
}

/// Phase convention: with the pairing chi(n) * eta(Delta n) = 1, the
/// Fourier-Bohr coefficient that the box averages converge to is
///   a_chi = dens(L) * conj(chi(x_G)) * conj(eta(x_H)) * conj(1_W-check(eta)),
/// the outer conjugate coming from the transform being taken against
/// conj(eta). Only |a_chi| enters intensities.
inline std::complex<double> theoretical_fb(const ArithmeticScheme& s, const ArithmeticWindow& w,
                                           const ArithmeticTorusPoint& x,
                                           const ArithmeticChar& ch) {
    std::complex<double> phase = ch.eta.eval(s.space, floor_mod(x.x_h, s.space.modulus()));
    std::complex<double> fc = window_fourier(w, ch.eta);
    return s.density().to_double() * std::conj(phase * fc);
}

struct FbValue {
    std::complex<double> value;
    bool off_lattice; // chi outside pi(L-degree): coefficient vanishes
};

/// Fourier-Bohr coefficient at chi = num/den. Frequencies outside the
/// annihilator projection get 0 with the off-lattice flag set.
inline FbValue theoretical_fb(const ArithmeticScheme& s, const ArithmeticWindow& w,
                              const ArithmeticTorusPoint& x, long long num, long long den) {
    long long big_n = s.space.modulus();
    if (den <= 0 || big_n % den != 0) return {{0.0, 0.0}, true};
    ArithmeticChar ch = annihilator_char(s, mul_mod(num, big_n / den, big_n));
    return {theoretical_fb(s, w, x, ch), false};
}

enum class PeakClass { kBragg, kPeriodExtinction, kAccidentalExtinction };

inline const char* peak_class_name(PeakClass c) {
    switch (c) {
        case PeakClass::kBragg: return "BRAGG";
        case PeakClass::kPeriodExtinction: return "PERIOD_EXTINCTION";
        case PeakClass::kAccidentalExtinction: return "ACCIDENTAL_EXTINCTION";
    }
    return "?";
}

struct ArithmeticPeak {
    ArithmeticChar ch;
    double intensity;             // dens^2 * |1_W-check(eta)|^2
    std::complex<double> fb;      // theoretical a_chi at the given torus point
    PeakClass cls;
};

struct ArithmeticSpectrum {
    std::vector<ArithmeticPeak> peaks; // sorted by chi
};

namespace detail {

inline bool annihilates_periods(const profinite::ProfiniteSpace& sp,
                                const profinite::PeriodGroup& periods,
                                const profinite::Character& eta) {
    for (size_t i = 0; i < sp.arity(); ++i)
        if (mul_mod(eta.indices[i], periods.divisors[i], sp.ring_size(i)) != 0) return false;
    return true;
}

} // namespace detail

/// Diffraction over the annihilator frequencies (all N of them, or the ones
/// with reduced denominator at most max_denominator when N is large). Each
/// frequency is classified: positive intensity is a Bragg peak; zero
/// intensity is forced by the period group (chi outside the eigenvalue
/// group) or accidental.
inline ArithmeticSpectrum theoretical_diffraction(const ArithmeticScheme& s,
                                                  const ArithmeticWindow& w,
                                                  const ArithmeticTorusPoint& x,
                                                  long long max_denominator = 0) {
    profinite::PeriodGroup periods = window_period_group(w);
    double dens = s.density().to_double();
    ArithmeticSpectrum spec;
    for (ArithmeticChar& ch : annihilator_frequencies(s, max_denominator)) {
        std::complex<double> fc = window_fourier(w, ch.eta);
        double intensity = dens * dens * std::norm(fc);
        PeakClass cls;
        if (!detail::annihilates_periods(s.space, periods, ch.eta))
            cls = PeakClass::kPeriodExtinction;
        else
            cls = intensity > kExactTolerance ? PeakClass::kBragg
                                              : PeakClass::kAccidentalExtinction;
        std::complex<double> fb = theoretical_fb(s, w, x, ch);
        spec.peaks.push_back({std::move(ch), intensity, fb, cls});
    }
    return spec;
}

/// Exhaustive frequency classification (arity of the finite dual).
inline std::vector<std::pair<ArithmeticChar, PeakClass>> extinction_report(
    const ArithmeticScheme& s, const ArithmeticWindow& w) {
    ArithmeticSpectrum spec = theoretical_diffraction(s, w, ArithmeticTorusPoint{0});
    std::vector<std::pair<ArithmeticChar, PeakClass>> out;
    out.reserve(spec.peaks.size());
    for (auto& p : spec.peaks) out.emplace_back(p.ch, p.cls);
    return out;
}

/// Inverse transform of the intensity list at lag h; recovers
/// dens^2 * c_W(Delta h) when the spectrum is exhaustive (Wiener-type
/// consistency on the finite group).
inline std::complex<double> wiener_reconstruction(const ArithmeticSpectrum& spec, long long h) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& p : spec.peaks) {
        long long m = mul_mod(p.ch.j, h, p.ch.den);
        double angle = -2.0 * std::numbers::pi * double(m) / double(p.ch.den);
        acc += p.intensity * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Untruncated (sieve) targets

/// Primes beyond the declared set, up to a cutoff. The neglected tail of the
/// Euler-type products is below sum_{p > cutoff} p^-2 ~ 1/(cutoff ln cutoff).
struct SieveTailModel {
    int exponent;                        // uniform exponent of the space
    std::vector<long long> tail_primes;  // sieving primes not in the space
};

inline SieveTailModel make_sieve_tail(const profinite::ProfiniteSpace& sp,
                                      long long prime_cutoff = 100000) {
    SieveTailModel tail;
    tail.exponent = sp.exponents.front();
    for (int k : sp.exponents)
        if (k != tail.exponent)
            throw ValidationError("sieve targets require a uniform exponent");
    for (long long p : primes_up_to(prime_cutoff))
        if (std::find(sp.primes.begin(), sp.primes.end(), p) == sp.primes.end())
            tail.tail_primes.push_back(p);
    return tail;
}

namespace detail {

inline double tail_measure_factor(profinite::DefaultRule rule, const SieveTailModel& tail) {
    int m = profinite::rule_excluded_exponent(rule, tail.exponent);
    if (m < 0) return 0.0;
    if (m == 0) return 1.0;
    double f = 1.0;
    for (long long p : tail.tail_primes) f *= 1.0 - std::pow(double(p), -m);
    return f;
}

/// |A intersect (B + h)| / p^k for one tail prime, where A and B remove the
/// multiples of p^ma and p^mb respectively.
inline double tail_cross_fraction(int ma, int mb, int k, long long p, long long h) {
    if (ma < 0 || mb < 0) return 0.0;
    double q = std::pow(double(p), k);
    double size_a = ma == 0 ? 0.0 : std::pow(double(p), k - ma);
    double size_b = mb == 0 ? 0.0 : std::pow(double(p), k - mb);
    if (ma == 0 && mb == 0) return 1.0;
    if (ma == 0) return 1.0 - size_b / q; // A full: overlap is |B|
    if (mb == 0) return 1.0 - size_a / q;
    long long pmin = checked_prime_power(p, std::min(ma, mb));
    double inter = (floor_mod(h, pmin) == 0) ? std::pow(double(p), k - std::max(ma, mb)) : 0.0;
    return 1.0 - (size_a + size_b - inter) / q;
}

inline double tail_cross_product(profinite::DefaultRule ra, profinite::DefaultRule rb,
                                 long long h, const SieveTailModel& tail) {
    int ma = profinite::rule_excluded_exponent(ra, tail.exponent);
    int mb = profinite::rule_excluded_exponent(rb, tail.exponent);
    double f = 1.0;
    for (long long p : tail.tail_primes) f *= tail_cross_fraction(ma, mb, tail.exponent, p, h);
    return f;
}

} // namespace detail

inline double sieve_measure(const profinite::ResidueSetWindow& w, const SieveTailModel& tail) {
    return profinite::haar_measure(w).to_double() *
           detail::tail_measure_factor(w.default_rule(), tail);
}
inline double sieve_measure(const profinite::DifferenceWindow& w, const SieveTailModel& tail) {
    return sieve_measure(w.outer(), tail) - sieve_measure(w.inner(), tail);
}
inline double sieve_measure(const ArithmeticWindow& w, const SieveTailModel& tail) {
    return std::visit([&](const auto& x) { return sieve_measure(x, tail); }, w);
}

inline double sieve_covariogram(const profinite::ResidueSetWindow& w, long long lag,
                                const SieveTailModel& tail, const ArithmeticScheme& s) {
    return profinite::covariogram(w, s.star_map(lag)).to_double() *
           detail::tail_cross_product(w.default_rule(), w.default_rule(), lag, tail);
}

inline double sieve_covariogram(const profinite::DifferenceWindow& w, long long lag,
                                const SieveTailModel& tail, const ArithmeticScheme& s) {
    using profinite::cross_covariogram;
    long long h = s.star_map(lag);
    const auto& wo = w.outer();
    const auto& vi = w.inner();
    double t_ww = detail::tail_cross_product(wo.default_rule(), wo.default_rule(), lag, tail);
    double t_wv = detail::tail_cross_product(wo.default_rule(), vi.default_rule(), lag, tail);
    double t_vw = detail::tail_cross_product(vi.default_rule(), wo.default_rule(), lag, tail);
    double t_vv = detail::tail_cross_product(vi.default_rule(), vi.default_rule(), lag, tail);
    return profinite::covariogram(wo, h).to_double() * t_ww -
           cross_covariogram(wo, vi, h).to_double() * t_wv -
           cross_covariogram(vi, wo, h).to_double() * t_vw +
           profinite::covariogram(vi, h).to_double() * t_vv;
}

inline double sieve_covariogram(const ArithmeticWindow& w, long long lag,
                                const SieveTailModel& tail, const ArithmeticScheme& s) {
    return std::visit([&](const auto& x) { return sieve_covariogram(x, lag, tail, s); }, w);
}

/// Untruncated transform at a character of the truncated dual: the tail
/// primes carry the trivial character, so each contributes its measure
/// fraction.
inline std::complex<double> sieve_fourier(const profinite::ResidueSetWindow& w,
                                          const profinite::Character& eta,
                                          const SieveTailModel& tail) {
    return profinite::fourier_coefficient(w, eta) *
           detail::tail_measure_factor(w.default_rule(), tail);
}
inline std::complex<double> sieve_fourier(const profinite::DifferenceWindow& w,
                                          const profinite::Character& eta,
                                          const SieveTailModel& tail) {
    return sieve_fourier(w.outer(), eta, tail) - sieve_fourier(w.inner(), eta, tail);
}
inline std::complex<double> sieve_fourier(const ArithmeticWindow& w,
                                          const profinite::Character& eta,
                                          const SieveTailModel& tail) {
    return std::visit([&](const auto& x) { return sieve_fourier(x, eta, tail); }, w);
}

/// Untruncated Fourier-Bohr coefficient (sieve samples are pinned to the
/// zero torus point, so no phase factor appears).
inline std::complex<double> sieve_fb(const ArithmeticScheme& s, const ArithmeticWindow& w,
                                     const ArithmeticChar& ch, const SieveTailModel& tail) {
    return s.density().to_double() * std::conj(sieve_fourier(w, ch.eta, tail));
}

// ---------------------------------------------------------------------------
// Consistent phases and Besicovitch probes

/// Per-frequency check of |a_chi|^2 = intensity(chi) for empirical values
/// aligned with the spectrum's peak list.
inline std::vector<Verdict> consistent_phase_check(
    const ArithmeticSpectrum& spec, const std::vector<std::complex<double>>& empirical,
    long long n, double tolerance) {
    if (empirical.size() != spec.peaks.size())
        throw ValidationError("consistent_phase_check: empirical list length mismatch");
    std::vector<Verdict> out;
    out.reserve(spec.peaks.size());
    for (size_t i = 0; i < spec.peaks.size(); ++i) {
        const auto& p = spec.peaks[i];
        std::string label = std::to_string(p.ch.j) + "/" + std::to_string(p.ch.den);
        out.push_back(make_verdict("CONSISTENT_PHASE", n, label,
                                   std::norm(empirical[i]), p.intensity, tolerance));
    }
    return out;
}

/// Off-lattice probes: the Besicovitch characterization demands vanishing
/// Fourier-Bohr coefficients outside the annihilator projection.
inline std::vector<Verdict> besicovitch_probe_verdicts(
    const std::vector<double>& probes, const std::vector<std::complex<double>>& empirical,
    long long n, double tolerance) {
    if (probes.size() != empirical.size())
        throw ValidationError("besicovitch_probe_verdicts: list length mismatch");
    std::vector<Verdict> out;
    for (size_t i = 0; i < probes.size(); ++i) {
        char label[64];
        std::snprintf(label, sizeof label, "probe %.10g", probes[i]);
        out.push_back(make_verdict("BESICOVITCH_PROBE", n, label, std::abs(empirical[i]),
                                   0.0, tolerance));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Euclidean theory

struct EuclideanAutocorrelation {
    std::vector<double> lags;   // G-parts of lattice points in range
    std::vector<double> values; // dens(L) * c_W at the matching internal part
};

inline EuclideanAutocorrelation theoretical_autocorrelation(const EuclideanScheme& s,
                                                            const euclid::IntervalUnionWindow& w,
                                                            double lag_range) {
    // lattice points with |g| <= lag_range and h inside the covariogram support
    double d = s.det();
    double hspan = w.diameter();
    double alo = 1e300, ahi = -1e300, blo = 1e300, bhi = -1e300;
    for (double u : {-lag_range, lag_range}) {
        for (double v : {-hspan, hspan}) {
            double a = (s.h2 * u - s.g2 * v) / d;
            double b = (-s.h1 * u + s.g1 * v) / d;
            alo = std::min(alo, a), ahi = std::max(ahi, a);
            blo = std::min(blo, b), bhi = std::max(bhi, b);
        }
    }
    std::vector<std::pair<double, double>> entries;
    for (long long a = (long long)std::floor(alo) - 1; a <= (long long)std::ceil(ahi) + 1; ++a) {
        for (long long b = (long long)std::floor(blo) - 1; b <= (long long)std::ceil(bhi) + 1;
             ++b) {
            double g = s.g_part(a, b);
            double h = s.star_map(a, b);
            if (std::abs(g) > lag_range || std::abs(h) > hspan) continue;
            double v = s.density() * euclid::covariogram(w, h);
            if (v > 0.0 || (a == 0 && b == 0)) entries.emplace_back(g, v);
        }
    }
    std::sort(entries.begin(), entries.end());
    EuclideanAutocorrelation table;
    for (auto& [g, v] : entries) {
        table.lags.push_back(g);
        table.values.push_back(v);
    }
    return table;
}

struct EuclideanPeak {
    EuclideanChar ch;
    double intensity;
    std::complex<double> fb;
    PeakClass cls;
};

struct EuclideanSpectrum {
    std::vector<EuclideanPeak> peaks;
    /// Heuristic indicator of the transform mass outside the enumerated
    /// window: m_H(W) - sum |1_W-check(eta)|^2 over the listed peaks,
    /// clamped at zero. Euclidean acceptance checks use only
    /// normalization-independent intensity ratios.
    double plancherel_residual;
};

inline std::complex<double> theoretical_fb(const EuclideanScheme& s,
                                           const euclid::IntervalUnionWindow& w,
                                           const EuclideanTorusPoint& x,
                                           const EuclideanChar& ch) {
    double angle = 2.0 * std::numbers::pi * (ch.chi * x.x_g + ch.eta * x.x_h);
    std::complex<double> phase(std::cos(angle), std::sin(angle));
    return s.density() * std::conj(phase * euclid::fourier_coefficient(w, ch.eta));
}

inline EuclideanSpectrum theoretical_diffraction(const EuclideanScheme& s,
                                                 const euclid::IntervalUnionWindow& w,
                                                 const EuclideanTorusPoint& x, double chi_bound,
                                                 double eta_bound) {
    EuclideanSpectrum spec;
    double dens = s.density();
    double covered = 0.0;
    for (const EuclideanChar& ch : annihilator_frequencies(s, chi_bound, eta_bound)) {
        std::complex<double> fc = euclid::fourier_coefficient(w, ch.eta);
        double intensity = dens * dens * std::norm(fc);
        covered += std::norm(fc);
        PeakClass cls =
            intensity > kExactTolerance ? PeakClass::kBragg : PeakClass::kAccidentalExtinction;
        spec.peaks.push_back({ch, intensity, theoretical_fb(s, w, x, ch), cls});
    }
    spec.plancherel_residual = std::max(0.0, euclid::measure(w) - covered);
    return spec;
}

inline std::vector<Verdict> consistent_phase_check(
    const EuclideanSpectrum& spec, const std::vector<std::complex<double>>& empirical,
    long long n, double tolerance) {
    if (empirical.size() != spec.peaks.size())
        throw ValidationError("consistent_phase_check: empirical list length mismatch");
    std::vector<Verdict> out;
    for (size_t i = 0; i < spec.peaks.size(); ++i) {
        char label[64];
        std::snprintf(label, sizeof label, "%.12g", spec.peaks[i].ch.chi);
        out.push_back(make_verdict("CONSISTENT_PHASE", n, label, std::norm(empirical[i]),
                                   spec.peaks[i].intensity, tolerance));
    }
    return out;
}

} // namespace modelset
