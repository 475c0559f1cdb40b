#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lincor/gf2.hpp"

namespace lincor {

using BigInt = boost::multiprecision::cpp_int;

/// Exact codeword counts by Hamming weight: counts[i] = A_i.
/// Counts are arbitrary precision; catalog codes reach k = 382.
struct WeightDistribution {
    std::size_t n = 0;
    std::vector<BigInt> counts; // size n+1

    bool operator==(const WeightDistribution&) const = default;
};

constexpr std::size_t kDefaultMaxDim = 28;

/// Consistency checks for a distribution claimed to belong to an [n,k] code.
inline void validate_wd(const WeightDistribution& wd, std::size_t k,
                        std::optional<std::size_t> claimed_d = {}) {
    if (wd.counts.size() != wd.n + 1)
        fail(ErrorKind::Integrity, "weight distribution has wrong count vector size");
    if (wd.counts.empty() || wd.counts[0] != 1)
        fail(ErrorKind::Integrity, "weight distribution must have A_0 = 1");
    BigInt sum = 0;
    for (const BigInt& c : wd.counts) {
        if (c < 0)
            fail(ErrorKind::Integrity, "negative codeword count");
        sum += c;
    }
    if (sum != BigInt(1) << k)
        fail(ErrorKind::Integrity, "weight distribution counts sum to " + sum.str() +
                                       ", expected 2^" + std::to_string(k));
    if (claimed_d)
        for (std::size_t i = 1; i < *claimed_d && i <= wd.n; ++i)
            if (wd.counts[i] != 0)
                fail(ErrorKind::Integrity, "nonzero count below claimed minimum distance at weight " +
                                               std::to_string(i));
}

namespace detail {

// Gray-code sweep over a block of the message space: the top `prefix_bits`
// message bits are fixed to `prefix`, the low bits run through all values.
inline void enumerate_block(const BitMatrix& gen, std::size_t prefix_bits,
                            std::uint64_t prefix, std::vector<std::uint64_t>& hist) {
    std::size_t k = gen.row_count();
    std::size_t low = k - prefix_bits;
    BitVector cw(gen.col_count());
    for (std::size_t r = 0; r < prefix_bits; ++r)
        if ((prefix >> r) & 1u)
            cw.xor_with(gen.row(low + r));
    hist[cw.hamming_weight()]++;
    for (std::uint64_t t = 1; t < (std::uint64_t(1) << low); ++t) {
        cw.xor_with(gen.row(std::size_t(std::countr_zero(t))));
        hist[cw.hamming_weight()]++;
    }
}

} // namespace detail

/// Exact weight distribution by visiting all 2^k codewords in Gray-code order
/// (one row XOR and one popcount per codeword). The message space may be
/// split into prefix blocks and the per-block histograms summed.
inline WeightDistribution enumerate_wd(const BinaryLinearCode& c,
                                       std::size_t max_dim = kDefaultMaxDim,
                                       unsigned threads = 1) {
    if (c.k() > max_dim)
        fail(ErrorKind::Usage, "enumerate_wd: dimension " + std::to_string(c.k()) +
                                   " exceeds max_dim " + std::to_string(max_dim) +
                                   " (cost would be 2^" + std::to_string(c.k()) + " codewords)");
    std::size_t prefix_bits = 0;
    while ((std::size_t(1) << prefix_bits) < threads && prefix_bits + 8 < c.k())
        ++prefix_bits;
    std::size_t blocks = std::size_t(1) << prefix_bits;

    std::vector<std::vector<std::uint64_t>> hists(blocks,
                                                  std::vector<std::uint64_t>(c.n() + 1, 0));
    if (blocks == 1) {
        detail::enumerate_block(c.gen(), 0, 0, hists[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(blocks);
        for (std::size_t b = 0; b < blocks; ++b)
            pool.emplace_back([&, b] {
                detail::enumerate_block(c.gen(), prefix_bits, b, hists[b]);
            });
        for (auto& t : pool)
            t.join();
    }
    WeightDistribution wd;
    wd.n = c.n();
    wd.counts.assign(c.n() + 1, 0);
    for (const auto& h : hists)
        for (std::size_t i = 0; i <= c.n(); ++i)
            wd.counts[i] += h[i];
    return wd;
}

/// Dual distribution by the Krawtchouk expansion, exactly in integers:
///   A'_j = 2^-k * sum_i A_i K_j(i),  K_j(i) = sum_s (-1)^s C(i,s) C(n-i,j-s).
/// Non-exact division or a negative result signals a corrupted input.
inline WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t k) {
    std::size_t n = wd.n;
    // Pascal triangle up to n
    std::vector<std::vector<BigInt>> binom(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    auto C = [&](std::size_t a, std::size_t b) -> const BigInt& {
        static const BigInt zero = 0;
        return b <= a ? binom[a][b] : zero;
    };
    BigInt pow_k = BigInt(1) << k;
    WeightDistribution out;
    out.n = n;
    out.counts.assign(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt total = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (wd.counts[i] == 0)
                continue;
            BigInt kraw = 0;
            std::size_t smax = std::min(i, j);
            for (std::size_t s = 0; s <= smax; ++s) {
                if (j - s > n - i)
                    continue;
                BigInt term = C(i, s) * C(n - i, j - s);
                if (s & 1)
                    kraw -= term;
                else
                    kraw += term;
            }
            total += wd.counts[i] * kraw;
        }
        if (total < 0)
            fail(ErrorKind::Integrity, "macwilliams: negative transform coefficient at weight " +
                                           std::to_string(j));
        if (total % pow_k != 0)
            fail(ErrorKind::Integrity, "macwilliams: non-exact division at weight " +
                                           std::to_string(j));
        out.counts[j] = total / pow_k;
    }
    return out;
}

// --- weight-distribution file format ---------------------------------------
// line 1: "n k"; following lines: "i count" pairs in ascending i, decimal,
// zero counts omissible.

inline WeightDistribution read_wd_stream(std::istream& in, std::size_t expected_n,
                                         std::size_t expected_k,
                                         std::optional<std::size_t> claimed_d = {}) {
    std::size_t n = 0, k = 0;
    if (!(in >> n >> k))
        fail(ErrorKind::Io, "weight distribution file: missing 'n k' header");
    if (n != expected_n || k != expected_k)
        fail(ErrorKind::Integrity, "weight distribution file is for [" + std::to_string(n) + "," +
                                       std::to_string(k) + "], expected [" +
                                       std::to_string(expected_n) + "," + std::to_string(expected_k) + "]");
    WeightDistribution wd;
    wd.n = n;
    wd.counts.assign(n + 1, 0);
    std::size_t i;
    std::string count;
    std::ptrdiff_t last = -1;
    while (in >> i >> count) {
        if (i > n)
            fail(ErrorKind::Integrity, "weight index " + std::to_string(i) + " exceeds n");
        if (std::ptrdiff_t(i) <= last)
            fail(ErrorKind::Integrity, "weight indices not strictly ascending");
        last = std::ptrdiff_t(i);
        wd.counts[i] = BigInt(count);
    }
    validate_wd(wd, k, claimed_d);
    return wd;
}

inline WeightDistribution read_wd_file(const std::string& path, std::size_t expected_n,
                                       std::size_t expected_k,
                                       std::optional<std::size_t> claimed_d = {}) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::Io, "cannot open weight distribution file: " + path);
    try {
        return read_wd_stream(in, expected_n, expected_k, claimed_d);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

inline void write_wd_stream(std::ostream& out, const WeightDistribution& wd, std::size_t k) {
    out << wd.n << ' ' << k << '\n';
    for (std::size_t i = 0; i <= wd.n; ++i)
        if (wd.counts[i] != 0)
            out << i << ' ' << wd.counts[i].str() << '\n';
}

/// Primal distribution via the cheapest available route:
///   (a) ingested file if attached, else
///   (b) direct enumeration if k fits, else
///   (c) enumerate the dual and transform back.
inline WeightDistribution wd_for_code(const BinaryLinearCode& c,
                                      std::size_t max_dim = kDefaultMaxDim,
                                      const std::optional<std::string>& wd_file = {},
                                      unsigned threads = 1) {
    if (wd_file)
        return read_wd_file(*wd_file, c.n(), c.k(), c.claimed_d());
    if (c.k() <= max_dim)
        return enumerate_wd(c, max_dim, threads);
    if (c.n() - c.k() <= max_dim) {
        WeightDistribution dual_wd = enumerate_wd(dual(c), max_dim, threads);
        return macwilliams(dual_wd, c.n() - c.k());
    }
    fail(ErrorKind::Usage, "wd_for_code: [" + std::to_string(c.n()) + "," + std::to_string(c.k()) +
                               "] has min(k, n-k) > max_dim " + std::to_string(max_dim) +
                               " and no ingested distribution");
}

} // namespace lincor
