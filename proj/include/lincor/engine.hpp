#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "lincor/gf2.hpp"

namespace lincor {

/// Block convention: coordinate 0 = MSB of the first byte; each n input bits
/// map to k output bits; a trailing partial input block is dropped.

/// Dense path: y = G x.
inline BitVector apply_block(const BinaryLinearCode& c, const BitVector& x) {
    if (x.length() != c.n())
        fail(ErrorKind::Usage, "apply_block: input length " + std::to_string(x.length()) +
                                   " != n " + std::to_string(c.n()));
    return mat_vec(c.gen(), x);
}

/// Shift-register path for cyclic codes. Row j of the cyclic generator is
/// x^j * g(x), so y_j = sum_m g_m x_{j+m}: a sliding window of deg(g)+1 input
/// bits filtered by the generator polynomial, fed high coordinate first.
/// Output is identical to apply_block.
inline BitVector apply_cyclic_block(const BinaryLinearCode& c, const BitVector& x) {
    if (!c.is_cyclic())
        fail(ErrorKind::Usage, "apply_cyclic_block: '" + c.name() + "' is not cyclic");
    if (x.length() != c.n())
        fail(ErrorKind::Usage, "apply_cyclic_block: input length mismatch");
    const BitVector& g = *c.cyclic_gen_poly();
    std::size_t r = g.length() - 1; // deg(g)
    std::size_t k = c.k();

    std::size_t words = (r + 1 + 63) / 64;
    std::vector<std::uint64_t> window(words, 0), gmask(words, 0);
    for (std::size_t m = 0; m <= r; ++m)
        if (g.get(m))
            gmask[m / 64] |= std::uint64_t(1) << (m % 64);

    BitVector y(k);
    for (std::size_t t = c.n(); t-- > 0;) {
        // window[m] <- window[m-1], window[0] <- x_t
        std::uint64_t carry = x.get(t) ? 1u : 0u;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t next_carry = window[w] >> 63;
            window[w] = (window[w] << 1) | carry;
            carry = next_carry;
        }
        if (r < 63)
            window[0] &= (std::uint64_t(1) << (r + 1)) - 1;
        if (t < k) {
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < words; ++w)
                acc ^= window[w] & gmask[w];
            y.set(t, std::popcount(acc) & 1u);
        }
    }
    return y;
}

struct StreamStats {
    std::uint64_t blocks = 0;
    std::uint64_t in_bits = 0;
    std::uint64_t out_bits = 0;
    std::uint64_t dropped_bits = 0;

    std::string to_json() const {
        return "{\"blocks\":" + std::to_string(blocks) + ",\"in_bits\":" + std::to_string(in_bits) +
               ",\"out_bits\":" + std::to_string(out_bits) +
               ",\"dropped_bits\":" + std::to_string(dropped_bits) + "}";
    }
};

/// Streams bytes through the corrector block-wise. The final partial output
/// byte is zero-padded on the LSB side; stats carry the exact out_bits so the
/// padding is recoverable. Trailing input bits short of a block are dropped.
inline StreamStats apply_stream(const BinaryLinearCode& c, std::istream& in, std::ostream& out) {
    std::size_t n = c.n(), k = c.k();
    StreamStats stats;
    BitVector x(n);
    std::size_t xfill = 0;
    unsigned char obyte = 0;
    int obits = 0;

    char buf[4096];
    while (in.read(buf, sizeof buf), in.gcount() > 0) {
        std::streamsize got = in.gcount();
        for (std::streamsize b = 0; b < got; ++b) {
            unsigned char byte = static_cast<unsigned char>(buf[b]);
            for (int bit = 7; bit >= 0; --bit) {
                x.set(xfill++, (byte >> bit) & 1u);
                ++stats.in_bits;
                if (xfill == n) {
                    BitVector y = apply_block(c, x);
                    for (std::size_t j = 0; j < k; ++j) {
                        obyte = static_cast<unsigned char>((obyte << 1) | unsigned(y.get(j)));
                        if (++obits == 8) {
                            out.put(char(obyte));
                            obyte = 0;
                            obits = 0;
                        }
                    }
                    stats.out_bits += k;
                    ++stats.blocks;
                    xfill = 0;
                    x = BitVector(n);
                }
            }
        }
    }
    if (in.bad())
        fail(ErrorKind::Io, "read error after " + std::to_string(stats.in_bits) + " input bits");
    if (obits > 0)
        out.put(char(obyte << (8 - obits)));
    out.flush();
    if (!out)
        fail(ErrorKind::Io, "write error after " + std::to_string(stats.out_bits) + " output bits");
    stats.dropped_bits = xfill;
    return stats;
}

} // namespace lincor
