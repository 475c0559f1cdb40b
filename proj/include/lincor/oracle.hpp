#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "lincor/bounds.hpp"
#include "lincor/gf2.hpp"

namespace lincor {

constexpr std::size_t kOracleDefaultLimit = 20;

/// Per-coordinate 1-probabilities of an independent (not necessarily
/// identically distributed) n-bit source.
struct BitProbabilities {
    std::vector<double> probs;

    std::size_t n() const noexcept { return probs.size(); }

    void validate() const {
        for (double p : probs)
            if (!(p >= 0.0 && p <= 1.0))
                fail(ErrorKind::Usage, "bit probability out of [0, 1]: " + std::to_string(p));
    }

    /// Lower bound on the per-bit min-entropy rate: -log2(0.5 + delta_max).
    double min_entropy_rate() const {
        double delta_max = 0.0;
        for (double p : probs)
            delta_max = std::max(delta_max, std::abs(0.5 - p));
        return -std::log2(0.5 + delta_max);
    }
};

inline BitProbabilities read_probs_file(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::Io, "cannot open probabilities file: " + path);
    BitProbabilities bp;
    double p;
    while (in >> p)
        bp.probs.push_back(p);
    if (bp.n() != n)
        fail(ErrorKind::Integrity, path + ": " + std::to_string(bp.n()) +
                                       " probabilities, expected " + std::to_string(n));
    bp.validate();
    return bp;
}

/// Exact probability of every 2^k corrector output. Output index encodes
/// coordinate 0 as the MSB.
struct OutputDistribution {
    std::size_t k = 0;
    std::vector<double> mass; // size 2^k

    double max_mass() const {
        double m = 0.0;
        for (double v : mass)
            m = std::max(m, v);
        return m;
    }
};

inline std::size_t output_index(const BitVector& y) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < y.length(); ++j)
        idx = (idx << 1) | std::size_t(y.get(j));
    return idx;
}

/// Brute force over all 2^n inputs: accumulates the occurrence probability of
/// each input into the mass of its corrector output. Inputs are visited in
/// Gray order so the output index updates by one column XOR per step; each
/// input's probability is computed as a fresh n-factor product so that the
/// total mass stays exact to machine precision.
inline OutputDistribution exact_output_dist(const BinaryLinearCode& c, const BitProbabilities& p,
                                            std::size_t limit = kOracleDefaultLimit) {
    if (c.n() > limit)
        fail(ErrorKind::Usage, "exact_output_dist: n=" + std::to_string(c.n()) +
                                   " over limit " + std::to_string(limit) +
                                   " (cost would be 2^" + std::to_string(c.n()) + " inputs)");
    if (p.n() != c.n())
        fail(ErrorKind::Usage, "probability vector length does not match code length");
    p.validate();

    std::size_t n = c.n(), k = c.k();
    // column j of G as a packed output index delta (coordinate 0 = MSB)
    std::vector<std::size_t> col(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < k; ++r)
            if (c.gen().get(r, j))
                col[j] |= std::size_t(1) << (k - 1 - r);

    OutputDistribution dist;
    dist.k = k;
    dist.mass.assign(std::size_t(1) << k, 0.0);
    std::vector<double> comp(dist.mass.size(), 0.0);

    std::uint64_t x = 0;
    std::size_t y = 0;
    std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t t = 0; t < total; ++t) {
        if (t != 0) {
            std::size_t j = std::size_t(std::countr_zero(t));
            x ^= std::uint64_t(1) << j;
            y ^= col[j];
        }
        double prob = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            prob *= ((x >> i) & 1u) ? p.probs[i] : 1.0 - p.probs[i];
        // Kahan accumulation per output cell
        double yv = prob - comp[y];
        double s = dist.mass[y] + yv;
        comp[y] = (s - dist.mass[y]) - yv;
        dist.mass[y] = s;
    }
    return dist;
}

inline TotalMinEntropy exact_min_entropy(const OutputDistribution& d) {
    double m = d.max_mass();
    if (m <= 0.0)
        fail(ErrorKind::Usage, "exact_min_entropy: empty distribution");
    return {-std::log2(m)};
}

/// Most probable input vector: 1 wherever p_i >= 0.5 (ties resolve to 1).
inline BitVector most_probable_input(const BitProbabilities& p) {
    BitVector x(p.n());
    for (std::size_t i = 0; i < p.n(); ++i)
        if (p.probs[i] >= 0.5)
            x.set(i, true);
    return x;
}

/// Checks that the corrector output of the most probable input attains the
/// maximum output probability. Distribution ties within 1e-12 count as
/// success.
inline bool most_probable_coset_check(const BinaryLinearCode& c, const BitProbabilities& p,
                                      std::size_t limit = kOracleDefaultLimit) {
    OutputDistribution dist = exact_output_dist(c, p, limit);
    std::size_t predicted = output_index(mat_vec(c.gen(), most_probable_input(p)));
    return dist.mass[predicted] >= dist.max_mass() - 1e-12;
}

} // namespace lincor
