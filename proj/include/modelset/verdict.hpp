#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace modelset {

/// Outcome of one empirical-vs-theoretical comparison. `pass` is exactly
/// `abs_error <= tolerance`; the tolerance in force is always carried along.
struct Verdict {
    std::string kind;            // UNIFORM_DIST, GENERIC_2_G, GENERIC_1_GH, CONSISTENT_PHASE, ...
    long long n = 0;             // box radius of the underlying sample
    std::string frequency_or_lag;
    std::complex<double> empirical{0.0, 0.0};
    std::complex<double> theoretical{0.0, 0.0};
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline Verdict make_verdict(std::string kind, long long n, std::string label,
                            std::complex<double> empirical, std::complex<double> theoretical,
                            double tolerance) {
    Verdict v;
    v.kind = std::move(kind);
    v.n = n;
    v.frequency_or_lag = std::move(label);
    v.empirical = empirical;
    v.theoretical = theoretical;
    v.abs_error = std::abs(empirical - theoretical);
    v.tolerance = tolerance;
    v.pass = v.abs_error <= tolerance;
    return v;
}

inline bool all_pass(const std::vector<Verdict>& vs) {
    for (const Verdict& v : vs)
        if (!v.pass) return false;
    return true;
}

/// Statistical tolerance for sieve and Euclidean runs. The limit theorems
/// come without convergence rates, so the heuristic rate is explicit here
/// and every verdict records the tolerance it was judged against.
inline double stat_tolerance(double box_size) {
    return std::max(1e-3, 5.0 / std::sqrt(box_size));
}

inline constexpr double kExactTolerance = 1e-12;

} // namespace modelset
