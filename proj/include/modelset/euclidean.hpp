#pragma once

// Window calculus on H = R for finite unions of half-open intervals.
// The half-open convention keeps measure, interior measure and closure
// measure equal, so these windows behave like regular model-set windows.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "modelset/errors.hpp"

namespace modelset::euclid {

struct Interval {
    double lo;
    double hi; // [lo, hi)
    double length() const { return hi - lo; }
};

class IntervalUnionWindow {
public:
    explicit IntervalUnionWindow(std::vector<Interval> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw EmptyWindowError("interval window: empty window (positive measure required)");
        std::sort(parts_.begin(), parts_.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (!(parts_[i].lo < parts_[i].hi))
                throw ValidationError("interval window: degenerate interval");
            if (!std::isfinite(parts_[i].lo) || !std::isfinite(parts_[i].hi))
                throw ValidationError("interval window: endpoints must be finite");
            if (i > 0 && parts_[i].lo < parts_[i - 1].hi)
                throw ValidationError("interval window: overlapping intervals");
        }
    }

    const std::vector<Interval>& parts() const { return parts_; }
    double lo() const { return parts_.front().lo; }
    double hi() const { return parts_.back().hi; }
    double diameter() const { return hi() - lo(); }

    bool contains(double h) const {
        for (const Interval& iv : parts_)
            if (h >= iv.lo && h < iv.hi) return true;
        return false;
    }

private:
    std::vector<Interval> parts_;
};

inline double measure(const IntervalUnionWindow& w) {
    double s = 0.0;
    for (const Interval& iv : w.parts()) s += iv.length();
    return s;
}

/// Measure of the closure: touching intervals merge, the finitely many
/// boundary points are null, so the value equals measure(w).
inline double measure_closure(const IntervalUnionWindow& w) {
    double s = 0.0;
    double cur_lo = w.parts().front().lo, cur_hi = w.parts().front().hi;
    for (size_t i = 1; i < w.parts().size(); ++i) {
        const Interval& iv = w.parts()[i];
        if (iv.lo <= cur_hi) {
            cur_hi = std::max(cur_hi, iv.hi);
        } else {
            s += cur_hi - cur_lo;
            cur_lo = iv.lo;
            cur_hi = iv.hi;
        }
    }
    s += cur_hi - cur_lo;
    return s;
}

/// Measure of the interior; a finite boundary set is null, so again equal.
inline double measure_interior(const IntervalUnionWindow& w) { return measure_closure(w); }

/// c_W(h) = |W intersect (W + h)| by a sorted sweep over interval pairs.
inline double covariogram(const IntervalUnionWindow& w, double h) {
    double s = 0.0;
    for (const Interval& a : w.parts()) {
        for (const Interval& b : w.parts()) {
            double lo = std::max(a.lo, b.lo + h);
            double hi = std::min(a.hi, b.hi + h);
            if (hi > lo) s += hi - lo;
        }
    }
    return s;
}

/// Transform of the indicator, int_W exp(-2 pi i k h) dh.
inline std::complex<double> fourier_coefficient(const IntervalUnionWindow& w, double k) {
    if (k == 0.0) return {measure(w), 0.0};
    std::complex<double> s(0.0, 0.0);
    const std::complex<double> den(0.0, -2.0 * std::numbers::pi * k);
    for (const Interval& iv : w.parts())
        s += (std::exp(den * iv.hi) - std::exp(den * iv.lo)) / den;
    return s;
}

/// Haar period group of a window in R. Nonempty windows in Euclidean space
/// are Haar aperiodic (a nonzero period of the compactly supported
/// covariogram is impossible), so the group is always trivial.
struct PeriodGroup {
    bool is_trivial() const { return true; }
};

inline PeriodGroup haar_period_group(const IntervalUnionWindow&) { return PeriodGroup{}; }

/// Closed difference set closure(W) - closure(W), merged. Used as a
/// conservative carrier when searching for uniform discreteness radii.
inline std::vector<Interval> closed_difference_set(const IntervalUnionWindow& w) {
    std::vector<Interval> diffs;
    for (const Interval& a : w.parts())
        for (const Interval& b : w.parts())
            diffs.push_back({a.lo - b.hi, a.hi - b.lo});
    std::sort(diffs.begin(), diffs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const Interval& d : diffs) {
        if (!merged.empty() && d.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, d.hi);
        else
            merged.push_back(d);
    }
    return merged;
}

} // namespace modelset::euclid
