#pragma once

// Scheme descriptor files: a single structured-text document of
// `key = value` lines (values may be whitespace-separated lists, `#` starts
// a comment). The schema string is mandatory and versioned. Parse errors and
// validation failures are addressed to the offending line and field.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "modelset/configuration.hpp"
#include "modelset/scheme.hpp"
#include "modelset/verdict.hpp"

namespace modelset {

inline constexpr const char* kDescriptorSchema = "modelset/1";

struct DescriptorField {
    std::string value;
    int line;
};

struct SchemeDescriptor {
    std::string source_name;
    std::map<std::string, DescriptorField> fields;
    std::vector<std::string> raw_lines; // echoed into run manifests

    bool has(const std::string& key) const { return fields.count(key) != 0; }

    const DescriptorField& get(const std::string& key) const {
        auto it = fields.find(key);
        if (it == fields.end())
            throw ValidationError(source_name + ": missing required field '" + key + "'");
        return it->second;
    }

    std::string context(const std::string& key) const {
        auto it = fields.find(key);
        std::string at = it == fields.end() ? "" : " (line " + std::to_string(it->second.line) + ")";
        return source_name + ": field '" + key + "'" + at;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline long long parse_int(const SchemeDescriptor& d, const std::string& key,
                           const std::string& tok) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(d.context(key) + ": expected an integer, got '" + tok + "'");
    }
}

inline double parse_real(const SchemeDescriptor& d, const std::string& key,
                         const std::string& tok) {
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(d.context(key) + ": expected a number, got '" + tok + "'");
    }
}

inline std::vector<long long> parse_int_list(const SchemeDescriptor& d, const std::string& key) {
    std::vector<long long> out;
    for (const std::string& t : tokens(d.get(key).value)) out.push_back(parse_int(d, key, t));
    if (out.empty()) throw ValidationError(d.context(key) + ": empty list");
    return out;
}

inline std::vector<double> parse_real_list(const SchemeDescriptor& d, const std::string& key) {
    std::vector<double> out;
    for (const std::string& t : tokens(d.get(key).value)) out.push_back(parse_real(d, key, t));
    if (out.empty()) throw ValidationError(d.context(key) + ": empty list");
    return out;
}

inline profinite::DefaultRule parse_rule(const SchemeDescriptor& d, const std::string& key) {
    std::string v = trim(d.get(key).value);
    using profinite::DefaultRule;
    if (v == "full") return DefaultRule::kFull;
    if (v == "cubefree") return DefaultRule::kCubeFree;
    if (v == "squarefree") return DefaultRule::kSquareFreeIn;
    if (v == "empty") return DefaultRule::kEmpty;
    throw ValidationError(d.context(key) +
                          ": unknown rule '" + v + "' (full|cubefree|squarefree|empty)");
}

} // namespace detail

inline SchemeDescriptor parse_descriptor_text(const std::string& text,
                                              const std::string& source_name) {
    SchemeDescriptor d;
    d.source_name = source_name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        d.raw_lines.push_back(line);
        std::string stripped = line;
        size_t hash = stripped.find('#');
        if (hash != std::string::npos) stripped.resize(hash);
        stripped = detail::trim(stripped);
        if (stripped.empty()) continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ValidationError(source_name + ": line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
        std::string key = detail::trim(stripped.substr(0, eq));
        std::string value = detail::trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ValidationError(source_name + ": line " + std::to_string(lineno) +
                                  ": empty key");
        if (d.fields.count(key))
            throw ValidationError(source_name + ": line " + std::to_string(lineno) +
                                  ": duplicate field '" + key + "'");
        d.fields[key] = {value, lineno};
    }
    if (!d.has("schema") || detail::trim(d.get("schema").value) != kDescriptorSchema)
        throw ValidationError(source_name + ": missing or unsupported schema (expected '" +
                              std::string(kDescriptorSchema) + "')");
    return d;
}

inline SchemeDescriptor parse_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open descriptor");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_descriptor_text(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Building runnable setups out of a descriptor

struct ArithmeticSetup {
    ArithmeticScheme scheme;
    ArithmeticWindow window;
    ArithmeticTorusPoint torus;
    Mode mode = Mode::kTruncated;
    long long n = 0;
    std::vector<long long> n_schedule;
    std::vector<double> probes;
    long long freq_max_denominator = 0;
    double tol_exact = kExactTolerance;
    double tol_stat = 0.0; // 0 = policy default
};

struct EuclideanSetup {
    EuclideanScheme scheme;
    euclid::IntervalUnionWindow window;
    EuclideanTorusPoint torus;
    double n = 0;
    double chi_bound = 2.0;
    double eta_bound = 5.0;
    std::vector<std::string> warnings;
    double tol_stat = 0.0;
    std::vector<double> probes;
};

using RunSetup = std::variant<ArithmeticSetup, EuclideanSetup>;

namespace detail {

inline std::map<long long, std::vector<long long>> residue_overrides(
    const SchemeDescriptor& d, const std::string& prefix,
    const std::vector<long long>& primes) {
    std::map<long long, std::vector<long long>> out;
    for (const auto& [key, field] : d.fields) {
        if (key.rfind(prefix, 0) != 0) continue;
        std::string ptxt = key.substr(prefix.size());
        long long p = parse_int(d, key, ptxt);
        if (std::find(primes.begin(), primes.end(), p) == primes.end())
            throw ValidationError(d.context(key) + ": prime " + std::to_string(p) +
                                  " is not in the declared prime set");
        out[p] = parse_int_list(d, key);
    }
    return out;
}

inline ArithmeticSetup build_arithmetic(const SchemeDescriptor& d) {
    std::vector<long long> primes = parse_int_list(d, "primes");
    std::vector<long long> exps = parse_int_list(d, "exponents");
    if (exps.size() == 1) exps.assign(primes.size(), exps.front());
    if (exps.size() != primes.size())
        throw ValidationError(d.context("exponents") +
                              ": expected one value or one per prime");
    std::vector<int> ks;
    for (long long e : exps) {
        if (e < 1 || e > 30)
            throw ValidationError(d.context("exponents") + ": exponent out of range [1,30]");
        ks.push_back(int(e));
    }
    ArithmeticScheme scheme;
    try {
        scheme.space = profinite::ProfiniteSpace(primes, ks);
    } catch (const Error& e) {
        throw ValidationError(d.context("primes") + ": " + e.what());
    }
    const auto& sp = scheme.space;

    auto build_window = [&](const std::string& prefix) -> profinite::ResidueSetWindow {
        profinite::DefaultRule rule = parse_rule(d, prefix + ".default");
        auto overrides = residue_overrides(d, prefix + ".residues.", primes);
        try {
            return profinite::ResidueSetWindow(sp, rule, overrides);
        } catch (const Error& e) {
            throw ValidationError(d.context(prefix + ".default") + ": " + e.what());
        }
    };

    profinite::ResidueSetWindow outer = build_window("window");
    ArithmeticWindow window{outer};
    if (d.has("inner.default")) {
        profinite::ResidueSetWindow inner = build_window("inner");
        try {
            window = profinite::DifferenceWindow(outer, inner);
        } catch (const Error& e) {
            throw ValidationError(d.context("inner.default") + ": " + e.what());
        }
    }
    ArithmeticSetup setup{scheme, std::move(window), {}, Mode::kTruncated, 0, {}, {}, 0,
                          kExactTolerance, 0.0};

    if (d.has("torus.h")) {
        std::vector<long long> hs = parse_int_list(d, "torus.h");
        if (hs.size() == 1)
            setup.torus.x_h = floor_mod(hs[0], sp.modulus());
        else if (hs.size() == sp.arity())
            setup.torus.x_h = sp.combine(hs);
        else
            throw ValidationError(d.context("torus.h") +
                                  ": expected one value or one per prime");
    }

    if (d.has("mode")) {
        std::string m = trim(d.get("mode").value);
        if (m == "truncated")
            setup.mode = Mode::kTruncated;
        else if (m == "sieve")
            setup.mode = Mode::kSieve;
        else
            throw ValidationError(d.context("mode") + ": expected truncated|sieve");
    }

    setup.n = d.has("n") ? parse_int(d, "n", trim(d.get("n").value)) : 2 * sp.modulus();
    if (setup.n < 1) throw ValidationError(d.context("n") + ": box radius must be >= 1");
    if (d.has("n.schedule")) setup.n_schedule = parse_int_list(d, "n.schedule");
    if (d.has("probes")) setup.probes = parse_real_list(d, "probes");
    if (d.has("freq.max_denominator"))
        setup.freq_max_denominator =
            parse_int(d, "freq.max_denominator", trim(d.get("freq.max_denominator").value));
    if (d.has("tolerance.exact"))
        setup.tol_exact = parse_real(d, "tolerance.exact", trim(d.get("tolerance.exact").value));
    if (d.has("tolerance.stat"))
        setup.tol_stat = parse_real(d, "tolerance.stat", trim(d.get("tolerance.stat").value));
    return setup;
}

inline EuclideanSetup build_euclidean(const SchemeDescriptor& d) {
    std::vector<double> b1 = parse_real_list(d, "basis.1");
    std::vector<double> b2 = parse_real_list(d, "basis.2");
    if (b1.size() != 2 || b2.size() != 2)
        throw ValidationError(d.context("basis.1") + ": each basis vector needs (g, h)");
    EuclideanScheme scheme{b1[0], b1[1], b2[0], b2[1]};
    std::vector<std::string> warnings;
    try {
        warnings = scheme.validate();
    } catch (const Error& e) {
        throw ValidationError(d.context("basis.1") + ": " + e.what());
    }

    std::vector<double> ends = parse_real_list(d, "window.intervals");
    if (ends.size() % 2 != 0)
        throw ValidationError(d.context("window.intervals") +
                              ": expected pairs of endpoints");
    std::vector<euclid::Interval> parts;
    for (size_t i = 0; i + 1 < ends.size(); i += 2) parts.push_back({ends[i], ends[i + 1]});
    try {
        EuclideanSetup setup{scheme, euclid::IntervalUnionWindow(parts), {}, 0, 2.0, 5.0,
                             std::move(warnings), 0.0, {}};
        if (d.has("torus.g"))
            setup.torus.x_g = parse_real(d, "torus.g", trim(d.get("torus.g").value));
        if (d.has("torus.h"))
            setup.torus.x_h = parse_real(d, "torus.h", trim(d.get("torus.h").value));
        setup.torus = canonical_torus_point(scheme, setup.torus.x_g, setup.torus.x_h);
        setup.n = d.has("n") ? parse_real(d, "n", trim(d.get("n").value)) : 1000.0;
        if (setup.n <= 0)
            throw ValidationError(d.context("n") + ": box radius must be positive");
        if (d.has("freq.bound"))
            setup.chi_bound = parse_real(d, "freq.bound", trim(d.get("freq.bound").value));
        if (d.has("freq.eta_bound"))
            setup.eta_bound =
                parse_real(d, "freq.eta_bound", trim(d.get("freq.eta_bound").value));
        if (d.has("tolerance.stat"))
            setup.tol_stat = parse_real(d, "tolerance.stat", trim(d.get("tolerance.stat").value));
        if (d.has("probes")) setup.probes = parse_real_list(d, "probes");
        return setup;
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(d.context("window.intervals") + ": " + e.what());
    }
}

} // namespace detail

inline RunSetup build_setup(const SchemeDescriptor& d) {
    std::string kind = detail::trim(d.get("kind").value);
    if (kind == "arithmetic") return detail::build_arithmetic(d);
    if (kind == "euclidean") return detail::build_euclidean(d);
    throw ValidationError(d.context("kind") + ": expected arithmetic|euclidean");
}

} // namespace modelset
