#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lincor/weights.hpp"

namespace lincor {

/// Bits of min-entropy per raw input bit, in (0, 1].
struct MinEntropyRate {
    double value;
};

/// Total output min-entropy in bits, in [0, k].
struct TotalMinEntropy {
    double value;
};

enum class BoundKind {
    OldMinDistance,        // needs only (n, k, d)
    NewWeightDistribution, // needs the full (A_i)
};

inline const char* to_string(BoundKind k) {
    return k == BoundKind::OldMinDistance ? "old" : "new";
}

namespace detail {

inline void check_h_in(double h_in) {
    if (!(h_in > 0.0) || h_in > 1.0)
        fail(ErrorKind::Usage, "input min-entropy rate must be in (0, 1], got " +
                                   std::to_string(h_in));
}

/// log2 of a positive big integer, accurate to double precision.
inline double log2_bigint(const BigInt& v) {
    std::size_t bits = msb(v) + 1;
    if (bits <= 62)
        return std::log2(double(std::uint64_t(v)));
    std::size_t shift = bits - 62;
    return std::log2(double(std::uint64_t(v >> shift))) + double(shift);
}

/// log2(1 + 2^t), stable for any t.
inline double log2_1p_exp2(double t) {
    if (t > 60.0)
        return t;
    if (t < -120.0)
        return 0.0;
    if (t > 0.0)
        return t + std::log1p(std::exp2(-t)) / M_LN2;
    return std::log1p(std::exp2(t)) / M_LN2;
}

/// -log2 of a sum given the log2 of each term: anchor at the maximum, add
/// exp2 of differences with compensated summation, drop terms more than
/// 120 bits below the anchor.
inline double neg_log2_sum(const std::vector<double>& log_terms) {
    double anchor = -HUGE_VAL;
    for (double t : log_terms)
        if (t > anchor)
            anchor = t;
    double sum = 0.0, comp = 0.0;
    for (double t : log_terms) {
        double d = t - anchor;
        if (d < -120.0)
            continue;
        double y = std::exp2(d) - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return -(anchor + std::log2(sum));
}

} // namespace detail

/// Min-distance bound: max(0, k - log2(1 + z^d * 2^k)) with z = 2^(1-h) - 1.
inline TotalMinEntropy old_bound(std::size_t n, std::size_t k, std::size_t d, MinEntropyRate h_in) {
    detail::check_h_in(h_in.value);
    if (d < 1 || d > n)
        fail(ErrorKind::Usage, "old_bound: d must be in [1, n]");
    double z = std::exp2(1.0 - h_in.value) - 1.0;
    if (z <= 0.0)
        return {double(k)};
    double t = double(d) * std::log2(z) + double(k);
    double bound = double(k) - detail::log2_1p_exp2(t);
    return {bound > 0.0 ? bound : 0.0};
}

/// Weight-distribution bound: -log2( 2^-k * sum_i A_i z^i ), z = 2^(1-h) - 1.
/// Evaluated in the log domain; the A_0 term keeps the result in [0, k].
inline TotalMinEntropy new_bound(const WeightDistribution& wd, std::size_t k, MinEntropyRate h_in) {
    detail::check_h_in(h_in.value);
    if (wd.counts.size() != wd.n + 1 || wd.counts.empty() || wd.counts[0] != 1)
        fail(ErrorKind::Usage, "new_bound: inconsistent weight distribution");
    double z = std::exp2(1.0 - h_in.value) - 1.0;
    if (z <= 0.0)
        return {double(k)};
    double log2z = std::log2(z);
    std::vector<double> terms;
    terms.reserve(wd.n + 1);
    for (std::size_t i = 0; i <= wd.n; ++i) {
        if (wd.counts[i] == 0)
            continue;
        terms.push_back(detail::log2_bigint(wd.counts[i]) + double(i) * log2z - double(k));
    }
    double bound = detail::neg_log2_sum(terms);
    if (bound < 0.0)
        bound = 0.0;
    if (bound > double(k))
        bound = double(k);
    return {bound};
}

/// Syndrome-side evaluation of the same bound from the dual distribution:
/// -log2( sum_i A'_i p^i (1-p)^(n-i) ) with p = 1 - 2^-h. Agrees with
/// new_bound through the MacWilliams identity; kept as an independent route.
inline TotalMinEntropy new_bound_dual_form(const WeightDistribution& dual_wd,
                                           MinEntropyRate h_in) {
    detail::check_h_in(h_in.value);
    std::size_t n = dual_wd.n;
    double p = 1.0 - std::exp2(-h_in.value);
    if (p <= 0.0) {
        // h -> 0: all mass on weight 0
        return {-detail::log2_bigint(dual_wd.counts[0])};
    }
    double log2p = std::log2(p);
    double log2q = -h_in.value; // log2(1 - p)
    std::vector<double> terms;
    terms.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (dual_wd.counts[i] == 0)
            continue;
        terms.push_back(detail::log2_bigint(dual_wd.counts[i]) + double(i) * log2p +
                        double(n - i) * log2q);
    }
    return {detail::neg_log2_sum(terms)};
}

/// Either bound behind one call, for the solver and the catalog pipeline.
struct BoundSpec {
    std::size_t n;
    std::size_t k;
    BoundKind kind;
    std::size_t d = 0;                        // OldMinDistance
    const WeightDistribution* wd = nullptr;   // NewWeightDistribution

    static BoundSpec old_nkd(std::size_t n, std::size_t k, std::size_t d) {
        return {n, k, BoundKind::OldMinDistance, d, nullptr};
    }
    static BoundSpec new_wd(const WeightDistribution& wd, std::size_t k) {
        return {wd.n, k, BoundKind::NewWeightDistribution, 0, &wd};
    }

    TotalMinEntropy eval(MinEntropyRate h_in) const {
        if (kind == BoundKind::OldMinDistance)
            return old_bound(n, k, d, h_in);
        return new_bound(*wd, k, h_in);
    }
};

struct SolveResult {
    MinEntropyRate h_in_req;
    /// True when the bound already exceeds the target at the bracket minimum:
    /// the corrector is appropriate at any positive input rate.
    bool at_bracket_min = false;
};

/// Smallest h_in with bound(h_in) = k - 1 + h_out1, by bisection on the
/// monotone nondecreasing bound. Absolute tolerance 1e-9 on h_in;
/// |bound(result) - target| <= 1e-7 round-trip.
inline SolveResult solve_h_in_req(const BoundSpec& spec, double h_out1) {
    if (!(h_out1 > 0.0) || h_out1 >= 1.0)
        fail(ErrorKind::Usage, "h_out1 must be in (0, 1), got " + std::to_string(h_out1));
    double target = double(spec.k) - 1.0 + h_out1;
    double lo = 1e-12, hi = 1.0;
    if (spec.eval({lo}).value >= target)
        return {{lo}, true};
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (spec.eval({mid}).value < target)
            lo = mid;
        else
            hi = mid;
    }
    return {{0.5 * (lo + hi)}, false};
}

/// Extraction efficiency at a target input rate: bound(h) / (n * h).
/// The corrector must be appropriate at the target (H_in_req <= h).
struct NotAppropriate {
    MinEntropyRate h_in_req;
};

inline double efficiency(const BoundSpec& spec, MinEntropyRate h_in_target, double h_out1) {
    detail::check_h_in(h_in_target.value);
    SolveResult req = solve_h_in_req(spec, h_out1);
    if (!req.at_bracket_min && req.h_in_req.value > h_in_target.value)
        throw Error(ErrorKind::Domain,
                    "corrector not appropriate at h_in " + std::to_string(h_in_target.value) +
                        " (requires " + std::to_string(req.h_in_req.value) + ")");
    return spec.eval(h_in_target).value / (double(spec.n) * h_in_target.value);
}

} // namespace lincor
