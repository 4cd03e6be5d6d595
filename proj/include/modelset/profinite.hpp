#pragma once

// Exact window calculus on a truncated profinite space H = prod_p Z/(p^k_p Z)
// over a finite set of primes. Haar measure is the normalized counting
// measure, so measures and covariograms are exact rationals. Elements of H
// are identified with integers mod N = prod p^k_p through the CRT bijection.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "modelset/errors.hpp"
#include "modelset/primes.hpp"
#include "modelset/rational.hpp"

namespace modelset::profinite {

/// Window shape applied to every prime without an explicit residue set.
/// Rules are parametric in the local exponent k:
///   kFull          all residues
///   kCubeFree      residues not divisible by p^k (removes 0 only)
///   kSquareFreeIn  residues not divisible by p^ceil(2k/3)
///   kEmpty         no residues
enum class DefaultRule { kFull, kCubeFree, kSquareFreeIn, kEmpty };

inline const char* rule_name(DefaultRule r) {
    switch (r) {
        case DefaultRule::kFull: return "full";
        case DefaultRule::kCubeFree: return "cubefree";
        case DefaultRule::kSquareFreeIn: return "squarefree";
        case DefaultRule::kEmpty: return "empty";
    }
    return "?";
}

/// Exponent of the excluded prime power for a rule: the rule keeps exactly
/// the residues not divisible by p^m. Returns 0 for kFull (nothing excluded)
/// and -1 for kEmpty.
inline int rule_excluded_exponent(DefaultRule r, int k) {
    switch (r) {
        case DefaultRule::kFull: return 0;
        case DefaultRule::kCubeFree: return k;
        case DefaultRule::kSquareFreeIn: return (2 * k + 2) / 3; // ceil(2k/3)
        case DefaultRule::kEmpty: return -1;
    }
    return 0;
}

/// Number of residues the rule keeps in Z/(p^k Z).
inline long long rule_count(DefaultRule r, long long p, int k) {
    long long q = checked_prime_power(p, k);
    int m = rule_excluded_exponent(r, k);
    if (m < 0) return 0;
    if (m == 0) return q;
    return q - q / checked_prime_power(p, m);
}

struct ProfiniteSpace {
    std::vector<long long> primes;
    std::vector<int> exponents;

    ProfiniteSpace() = default;
    ProfiniteSpace(std::vector<long long> ps, std::vector<int> ks)
        : primes(std::move(ps)), exponents(std::move(ks)) {
        if (primes.empty()) throw ValidationError("ProfiniteSpace: empty prime set");
        if (exponents.size() != primes.size())
            throw ValidationError("ProfiniteSpace: exponent count mismatch");
        for (size_t i = 0; i < primes.size(); ++i) {
            if (!is_prime(primes[i]))
                throw ValidationError("ProfiniteSpace: " + std::to_string(primes[i]) +
                                      " is not prime");
            if (i > 0 && primes[i] <= primes[i - 1])
                throw ValidationError("ProfiniteSpace: primes must be strictly increasing");
            if (exponents[i] < 1)
                throw ValidationError("ProfiniteSpace: exponents must be >= 1");
        }
    }

    size_t arity() const { return primes.size(); }

    long long ring_size(size_t i) const {
        return checked_prime_power(primes[i], exponents[i]);
    }

    /// N = prod p^k_p.
    long long modulus() const {
        __int128 n = 1;
        for (size_t i = 0; i < arity(); ++i) {
            n *= ring_size(i);
            if (n > INT64_MAX) throw std::overflow_error("ProfiniteSpace: modulus overflow");
        }
        return (long long)n;
    }

    /// Component of an element (given as integer mod N) at prime index i.
    long long component(long long value, size_t i) const {
        return floor_mod(value, ring_size(i));
    }

    /// CRT combination of per-prime components into an integer mod N.
    long long combine(const std::vector<long long>& components) const {
        if (components.size() != arity())
            throw ValidationError("ProfiniteSpace: component count mismatch");
        long long n = modulus();
        __int128 acc = 0;
        for (size_t i = 0; i < arity(); ++i) {
            long long q = ring_size(i);
            long long m = n / q;
            long long u = mul_mod(m, inv_mod(m % q, q), n); // CRT idempotent for i
            acc += (__int128)mul_mod(floor_mod(components[i], q), u, n);
        }
        return (long long)(acc % n);
    }

    /// Element with component c at prime index i and 0 elsewhere.
    long long unit(size_t i, long long c) const {
        long long n = modulus();
        long long q = ring_size(i);
        long long m = n / q;
        long long u = mul_mod(m, inv_mod(m % q, q), n);
        return mul_mod(floor_mod(c, q), u, n);
    }

    bool operator==(const ProfiniteSpace& o) const {
        return primes == o.primes && exponents == o.exponents;
    }
    bool operator!=(const ProfiniteSpace& o) const { return !(*this == o); }
};

/// Internal character of H, given by per-prime frequency indices m_p.
/// eta(h) = exp(2 pi i sum_p m_p h_p / p^k_p).
struct Character {
    std::vector<long long> indices;

    /// eta(h) for h given as integer mod N. The phase sum m_p h_p / q_p is
    /// reduced exactly over the common denominator N before any float math.
    std::complex<double> eval(const ProfiniteSpace& sp, long long h) const {
        long long n = sp.modulus();
        __int128 acc = 0;
        for (size_t i = 0; i < sp.arity(); ++i) {
            long long q = sp.ring_size(i);
            acc += (__int128)(n / q) * mul_mod(indices[i], sp.component(h, i), q);
        }
        double angle = 2.0 * std::numbers::pi * double((long long)(acc % n)) / double(n);
        return {std::cos(angle), std::sin(angle)};
    }

    bool is_trivial() const {
        return std::all_of(indices.begin(), indices.end(),
                           [](long long m) { return m == 0; });
    }
};

/// Product window prod_p R_p. Primes may carry explicit (exceptional)
/// residue sets; the rest of the prime set follows the default rule.
class ResidueSetWindow {
public:
    ResidueSetWindow(ProfiniteSpace space, DefaultRule rule,
                     std::map<long long, std::vector<long long>> exceptional = {})
        : space_(std::move(space)), rule_(rule) {
        residues_.resize(space_.arity());
        member_.resize(space_.arity());
        exceptional_.assign(space_.arity(), false);
        for (auto& [p, rs] : exceptional) {
            auto it = std::find(space_.primes.begin(), space_.primes.end(), p);
            if (it == space_.primes.end())
                throw ValidationError("window: residue set for prime " + std::to_string(p) +
                                      " outside the space");
            exceptional_[size_t(it - space_.primes.begin())] = true;
        }
        for (size_t i = 0; i < space_.arity(); ++i) {
            long long q = space_.ring_size(i);
            std::vector<long long> rs;
            if (exceptional_[i]) {
                rs = exceptional.at(space_.primes[i]);
                std::sort(rs.begin(), rs.end());
                rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
                for (long long r : rs)
                    if (r < 0 || r >= q)
                        throw ValidationError("window: residue " + std::to_string(r) +
                                              " out of range [0," + std::to_string(q) +
                                              ") at prime " +
                                              std::to_string(space_.primes[i]));
            } else {
                int m = rule_excluded_exponent(rule_, space_.exponents[i]);
                long long step = m > 0 ? checked_prime_power(space_.primes[i], m) : 0;
                for (long long r = 0; r < q; ++r) {
                    if (m < 0) break;                    // empty
                    if (m > 0 && r % step == 0) continue; // excluded residue class
                    rs.push_back(r);
                }
            }
            member_[i].assign(size_t(q), 0);
            for (long long r : rs) member_[i][size_t(r)] = 1;
            residues_[i] = std::move(rs);
        }
    }

    const ProfiniteSpace& space() const { return space_; }
    DefaultRule default_rule() const { return rule_; }
    bool is_exceptional(size_t i) const { return exceptional_[i]; }
    const std::vector<long long>& residues(size_t i) const { return residues_[i]; }

    bool component_contains(size_t i, long long r) const {
        return member_[i][size_t(floor_mod(r, space_.ring_size(i)))] != 0;
    }

    /// Membership of an element given as integer mod N.
    bool contains(long long h) const {
        for (size_t i = 0; i < space_.arity(); ++i)
            if (!component_contains(i, h)) return false;
        return true;
    }

    bool is_empty() const {
        for (size_t i = 0; i < space_.arity(); ++i)
            if (residues_[i].empty()) return true;
        return false;
    }

    /// Componentwise containment (this_p subseteq other_p for all p).
    bool componentwise_subset_of(const ResidueSetWindow& other) const {
        if (space_ != other.space_) return false;
        for (size_t i = 0; i < space_.arity(); ++i)
            for (long long r : residues_[i])
                if (!other.component_contains(i, r)) return false;
        return true;
    }

    /// Window with every component translated: (d + W)_p = d_p + R_p.
    ResidueSetWindow translated(long long d) const {
        ResidueSetWindow w(*this);
        for (size_t i = 0; i < space_.arity(); ++i) {
            long long q = space_.ring_size(i);
            long long dp = space_.component(d, i);
            std::vector<long long> rs;
            rs.reserve(residues_[i].size());
            for (long long r : residues_[i]) rs.push_back((r + dp) % q);
            std::sort(rs.begin(), rs.end());
            std::fill(w.member_[i].begin(), w.member_[i].end(), 0);
            for (long long r : rs) w.member_[i][size_t(r)] = 1;
            w.residues_[i] = std::move(rs);
            w.exceptional_[i] = true; // shifted sets no longer match a named rule
        }
        return w;
    }

private:
    ProfiniteSpace space_;
    DefaultRule rule_;
    std::vector<bool> exceptional_;
    std::vector<std::vector<long long>> residues_;
    std::vector<std::vector<char>> member_;
};

/// Borel window W \ V with V componentwise contained in W. The indicator is
/// 1_W - 1_V; the set is generally not a product.
class DifferenceWindow {
public:
    DifferenceWindow(ResidueSetWindow outer, ResidueSetWindow inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (outer_.space() != inner_.space())
            throw ValidationError("difference window: outer and inner spaces differ");
        if (!inner_.componentwise_subset_of(outer_))
            throw ValidationError("difference window: inner window not contained in outer");
    }

    const ResidueSetWindow& outer() const { return outer_; }
    const ResidueSetWindow& inner() const { return inner_; }
    const ProfiniteSpace& space() const { return outer_.space(); }

    bool contains(long long h) const {
        return outer_.contains(h) && !inner_.contains(h);
    }

    DifferenceWindow translated(long long d) const {
        return DifferenceWindow(outer_.translated(d), inner_.translated(d));
    }

private:
    ResidueSetWindow outer_;
    ResidueSetWindow inner_;
};

/// Subgroup of H. Subgroups of a product of cyclic groups of coprime order
/// split per prime, so d_p Z/(p^k_p Z) with d_p | p^k_p is fully general.
struct PeriodGroup {
    ProfiniteSpace space;
    std::vector<long long> divisors; // component i is d_i * Z/(q_i Z)

    bool is_trivial() const {
        for (size_t i = 0; i < space.arity(); ++i)
            if (divisors[i] != space.ring_size(i)) return false;
        return true;
    }

    bool is_full() const {
        return std::all_of(divisors.begin(), divisors.end(),
                           [](long long d) { return d == 1; });
    }

    long long order() const {
        __int128 o = 1;
        for (size_t i = 0; i < space.arity(); ++i) o *= space.ring_size(i) / divisors[i];
        if (o > INT64_MAX) throw std::overflow_error("PeriodGroup: order overflow");
        return (long long)o;
    }

    bool contains(long long h) const {
        for (size_t i = 0; i < space.arity(); ++i)
            if (space.component(h, i) % divisors[i] != 0) return false;
        return true;
    }

    /// One generator per prime component (as integers mod N).
    std::vector<long long> generators() const {
        std::vector<long long> gens;
        for (size_t i = 0; i < space.arity(); ++i)
            if (divisors[i] != space.ring_size(i)) gens.push_back(space.unit(i, divisors[i]));
        return gens;
    }

    /// All elements, enumerated in increasing CRT order. Only sensible for
    /// small groups; used by the periodization in w_inv.
    std::vector<long long> elements() const {
        std::vector<long long> out;
        out.reserve(size_t(order()));
        std::vector<long long> comp(space.arity(), 0);
        while (true) {
            out.push_back(space.combine(comp));
            size_t i = 0;
            for (; i < space.arity(); ++i) {
                comp[i] += divisors[i];
                if (comp[i] < space.ring_size(i)) break;
                comp[i] = 0;
            }
            if (i == space.arity()) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static PeriodGroup intersect(const PeriodGroup& a, const PeriodGroup& b) {
        if (a.space != b.space)
            throw ValidationError("PeriodGroup: intersecting groups over different spaces");
        PeriodGroup r{a.space, {}};
        for (size_t i = 0; i < a.space.arity(); ++i)
            r.divisors.push_back(std::lcm(a.divisors[i], b.divisors[i]));
        return r;
    }

    std::string str() const {
        if (is_trivial()) return "{0}";
        std::string s;
        for (size_t i = 0; i < space.arity(); ++i) {
            if (i) s += " x ";
            s += std::to_string(divisors[i]) + "*Z/" + std::to_string(space.ring_size(i));
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Measures and covariograms

inline Rational haar_measure(const ResidueSetWindow& w) {
    Rational m(1);
    for (size_t i = 0; i < w.space().arity(); ++i)
        m *= Rational((long long)w.residues(i).size(), w.space().ring_size(i));
    return m;
}

inline Rational haar_measure(const DifferenceWindow& w) {
    return haar_measure(w.outer()) - haar_measure(w.inner());
}

namespace detail {

/// |A_p  intersect (B_p + h_p)| for one prime component.
inline long long overlap_count(const ResidueSetWindow& a, const ResidueSetWindow& b,
                               size_t i, long long h) {
    long long q = a.space().ring_size(i);
    long long hp = a.space().component(h, i);
    long long c = 0;
    for (long long r : b.residues(i))
        if (a.component_contains(i, (r + hp) % q)) ++c;
    return c;
}

} // namespace detail

/// m_H(A intersect (B + h)) = (1_A * 1_{-B})(h), factorized over primes.
inline Rational cross_covariogram(const ResidueSetWindow& a, const ResidueSetWindow& b,
                                  long long h) {
    if (a.space() != b.space())
        throw ValidationError("cross_covariogram: windows over different spaces");
    Rational m(1);
    for (size_t i = 0; i < a.space().arity(); ++i)
        m *= Rational(detail::overlap_count(a, b, i, h), a.space().ring_size(i));
    return m;
}

/// Covariogram c_W(h) = m_H(W intersect (W + h)).
inline Rational covariogram(const ResidueSetWindow& w, long long h) {
    return cross_covariogram(w, w, h);
}

/// Covariogram of W \ V by inclusion-exclusion:
/// c_{W\V} = c_W - (1_W * 1_{-V}) - (1_V * 1_{-W}) + c_V.
inline Rational covariogram(const DifferenceWindow& w, long long h) {
    return covariogram(w.outer(), h) - cross_covariogram(w.outer(), w.inner(), h) -
           cross_covariogram(w.inner(), w.outer(), h) + covariogram(w.inner(), h);
}

// ---------------------------------------------------------------------------
// Haar periods

namespace detail {

/// Smallest divisor d = p^j of q_i such that shifting component i by d
/// preserves the window; uses the c_W(h) = c_W(0) characterization of Haar
/// periods, which on a finite group coincide with strict periods.
template <class Window>
long long component_period_divisor(const Window& w, const ProfiniteSpace& sp, size_t i) {
    Rational peak = covariogram(w, 0);
    long long d = 1;
    for (int j = 0; j <= sp.exponents[i]; ++j) {
        if (covariogram(w, sp.unit(i, d)) == peak) return d;
        d *= sp.primes[i];
    }
    return sp.ring_size(i); // only h = 0 works
}

} // namespace detail

template <class Window>
PeriodGroup haar_period_group(const Window& w) {
    const ProfiniteSpace& sp = w.space();
    PeriodGroup g{sp, {}};
    for (size_t i = 0; i < sp.arity(); ++i)
        g.divisors.push_back(detail::component_period_divisor(w, sp, i));
    return g;
}

// ---------------------------------------------------------------------------
// Invariant version W_inv

namespace detail {

/// Per-prime periodization of a component set over the subgroup d*Z/q:
/// keeps the residues whose full coset stays inside the set.
inline std::vector<long long> coset_saturated(const ResidueSetWindow& w, size_t i,
                                              long long d) {
    long long q = w.space().ring_size(i);
    std::vector<long long> out;
    for (long long r : w.residues(i)) {
        bool all = true;
        for (long long t = 0; t < q && all; t += d)
            all = w.component_contains(i, (r + t) % q);
        if (all) out.push_back(r);
    }
    return out;
}

/// Residues whose coset r + d*Z/q meets the component set.
inline std::vector<long long> coset_meeting(const ResidueSetWindow& w, size_t i, long long d) {
    long long q = w.space().ring_size(i);
    std::vector<long long> out;
    for (long long r = 0; r < q; ++r) {
        for (long long t = 0; t < q; t += d) {
            if (w.component_contains(i, (r + t) % q)) {
                out.push_back(r);
                break;
            }
        }
    }
    return out;
}

inline ResidueSetWindow from_component_sets(const ProfiniteSpace& sp,
                                            std::vector<std::vector<long long>> sets) {
    std::map<long long, std::vector<long long>> exc;
    for (size_t i = 0; i < sp.arity(); ++i) exc[sp.primes[i]] = std::move(sets[i]);
    return ResidueSetWindow(sp, DefaultRule::kFull, std::move(exc));
}

} // namespace detail

/// Measurable invariant version of W: the set {psi = 1} where psi is the
/// periodization of 1_W over the Haar period group. On a finite group the
/// construction must reproduce W exactly; this is asserted, not assumed.
inline ResidueSetWindow w_inv(const ResidueSetWindow& w) {
    PeriodGroup h0 = haar_period_group(w);
    std::vector<std::vector<long long>> sets;
    for (size_t i = 0; i < w.space().arity(); ++i)
        sets.push_back(detail::coset_saturated(w, i, h0.divisors[i]));
    ResidueSetWindow inv = detail::from_component_sets(w.space(), std::move(sets));
    for (size_t i = 0; i < w.space().arity(); ++i)
        if (inv.residues(i) != w.residues(i))
            throw Error("w_inv: periodization failed to reproduce the window on a finite group");
    return inv;
}

namespace detail {

/// Product measure of componentwise intersections, |prod_i (inter_j S_ij)| / N.
inline Rational product_intersection_measure(
    const ProfiniteSpace& sp, const std::vector<const ResidueSetWindow*>& ws) {
    Rational m(1);
    for (size_t i = 0; i < sp.arity(); ++i) {
        long long q = sp.ring_size(i);
        long long c = 0;
        for (long long r = 0; r < q; ++r) {
            bool in_all = true;
            for (const ResidueSetWindow* w : ws)
                if (!w->component_contains(i, r)) {
                    in_all = false;
                    break;
                }
            if (in_all) ++c;
        }
        m *= Rational(c, q);
    }
    return m;
}

/// m_H((A \ B) intersect (W \ V)) for two product-difference windows,
/// via inclusion-exclusion over product sets.
inline Rational difference_intersection_measure(const DifferenceWindow& x,
                                                const DifferenceWindow& y) {
    const ProfiniteSpace& sp = x.space();
    const ResidueSetWindow *a = &x.outer(), *b = &x.inner();
    const ResidueSetWindow *w = &y.outer(), *v = &y.inner();
    return product_intersection_measure(sp, {a, w}) -
           product_intersection_measure(sp, {a, w, v}) -
           product_intersection_measure(sp, {a, w, b}) +
           product_intersection_measure(sp, {a, w, b, v});
}

} // namespace detail

/// W_inv for a difference window. {psi = 1} for 1_W - 1_V over the group
/// H0 = periods(W \ V) is (prod A_p) \ (prod B_p) with A_p the cosets fully
/// inside W_p and B_p the cosets meeting V_p. The result can carry a
/// different product representation than (W, V); the finite-group identity
/// m_H(W_inv symdiff (W \ V)) = 0 is asserted through exact measures.
inline DifferenceWindow w_inv(const DifferenceWindow& w) {
    PeriodGroup h0 = haar_period_group(w);
    const ProfiniteSpace& sp = w.space();
    std::vector<std::vector<long long>> a_sets, b_sets;
    for (size_t i = 0; i < sp.arity(); ++i) {
        a_sets.push_back(detail::coset_saturated(w.outer(), i, h0.divisors[i]));
        std::vector<long long> meet = detail::coset_meeting(w.inner(), i, h0.divisors[i]);
        // restrict B to A so that the pair stays a valid difference window
        std::vector<long long> b;
        for (long long r : meet)
            if (std::binary_search(a_sets[i].begin(), a_sets[i].end(), r)) b.push_back(r);
        b_sets.push_back(std::move(b));
    }
    DifferenceWindow inv(detail::from_component_sets(sp, std::move(a_sets)),
                         detail::from_component_sets(sp, std::move(b_sets)));
    Rational mw = haar_measure(w), mi = haar_measure(inv);
    Rational common = detail::difference_intersection_measure(inv, w);
    if (mw != mi || common != mw)
        throw Error("w_inv: periodization failed to reproduce the window on a finite group");
    return inv;
}

// ---------------------------------------------------------------------------
// Haar thinness

enum class Thinness { kTrue, kFalse, kUndecided };

struct ThinnessVerdict {
    Thinness verdict;
    std::optional<long long> witness_prime;
    std::string note;
};

/// Structural Haar-thinness test for V in W. The criterion is about the
/// untruncated product over all primes: the default rules must be strictly
/// contained beyond every cylinder constraint. Coinciding default rules make
/// the infinite tail equal, which a finite truncation cannot decide.
inline ThinnessVerdict is_haar_thin(const ResidueSetWindow& v, const ResidueSetWindow& w) {
    if (v.space() != w.space())
        throw ValidationError("is_haar_thin: windows over different spaces");
    const ProfiniteSpace& sp = v.space();

    for (size_t i = 0; i < sp.arity(); ++i) {
        for (long long r : v.residues(i))
            if (!w.component_contains(i, r))
                return {Thinness::kFalse, sp.primes[i],
                        "containment violated: V component not inside W"};
    }

    if (v.default_rule() == w.default_rule())
        return {Thinness::kUndecided, std::nullopt,
                "finite truncation cannot witness thinness (default rules coincide)"};

    // Rule containment and strictness on the untruncated tail. The tail
    // exponent is taken from the last declared prime. A rule removes the
    // multiples of p^m, so rule(ma) is contained in rule(mb) iff the
    // removed class of W is contained in the removed class of V.
    int tail_k = sp.exponents.back();
    int ma = rule_excluded_exponent(v.default_rule(), tail_k);
    int mb = rule_excluded_exponent(w.default_rule(), tail_k);
    bool tail_subset = (ma == -1) || (mb == 0) || (ma >= 1 && mb >= ma);
    bool tail_strict;
    if (ma == -1)
        tail_strict = true; // empty inside nonempty
    else if (mb == 0)
        tail_strict = (ma != 0);
    else
        tail_strict = mb > ma;
    if (!tail_subset)
        return {Thinness::kFalse, std::nullopt,
                "default rule of V not contained in default rule of W"};
    if (!tail_strict)
        return {Thinness::kFalse, std::nullopt,
                "default rules not strictly contained on the tail"};

    // Non-exceptional primes inside the declared set must be strict as well.
    for (size_t i = 0; i < sp.arity(); ++i) {
        if (v.is_exceptional(i) || w.is_exceptional(i)) continue;
        if (v.residues(i).size() >= w.residues(i).size())
            return {Thinness::kFalse, sp.primes[i],
                    "strict containment fails at a non-exceptional prime"};
    }
    return {Thinness::kTrue, std::nullopt, ""};
}

// ---------------------------------------------------------------------------
// Fourier coefficients

/// Normalized transform of the indicator:
/// 1_W-check(eta) = (1/N) sum_{h in W} conj(eta(h)), factorized over primes.
inline std::complex<double> fourier_coefficient(const ResidueSetWindow& w,
                                                const Character& eta) {
    if (eta.indices.size() != w.space().arity())
        throw ValidationError("fourier_coefficient: character arity mismatch");
    std::complex<double> prod(1.0, 0.0);
    for (size_t i = 0; i < w.space().arity(); ++i) {
        long long q = w.space().ring_size(i);
        long long m = floor_mod(eta.indices[i], q);
        std::complex<double> s(0.0, 0.0);
        for (long long r : w.residues(i)) {
            double angle = -2.0 * std::numbers::pi * double(mul_mod(m, r, q)) / double(q);
            s += std::complex<double>(std::cos(angle), std::sin(angle));
        }
        prod *= s / double(q);
    }
    return prod;
}

inline std::complex<double> fourier_coefficient(const DifferenceWindow& w,
                                                const Character& eta) {
    return fourier_coefficient(w.outer(), eta) - fourier_coefficient(w.inner(), eta);
}

} // namespace modelset::profinite
