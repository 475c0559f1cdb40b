#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lincor/error.hpp"

namespace lincor {

/// Bit-packed vector over GF(2). Bit i lives in word i/64 at bit i%64.
/// Trailing bits beyond length() are kept zero.
class BitVector {
  public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;

    explicit BitVector(std::size_t length)
        : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

    std::size_t length() const noexcept { return length_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::vector<Word>& words() const noexcept { return words_; }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void set(std::size_t i, bool v) {
        Word mask = Word(1) << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    void flip(std::size_t i) { words_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    void xor_with(const BitVector& other) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= other.words_[w];
    }

    std::size_t hamming_weight() const noexcept {
        std::size_t hw = 0;
        for (Word w : words_)
            hw += std::size_t(std::popcount(w));
        return hw;
    }

    bool is_zero() const noexcept {
        for (Word w : words_)
            if (w)
                return false;
        return true;
    }

    /// GF(2) inner product: parity of the AND.
    bool dot(const BitVector& other) const {
        Word acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1u;
    }

    bool operator==(const BitVector& other) const = default;

  private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Hex form: coordinate 0 is the MSB of the first hex char; the last nibble
/// is right-padded with zero bits to a multiple of 4.
inline std::string to_hex(const BitVector& v) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve((v.length() + 3) / 4);
    for (std::size_t j = 0; j < v.length(); j += 4) {
        unsigned nib = 0;
        for (std::size_t t = 0; t < 4 && j + t < v.length(); ++t)
            if (v.get(j + t))
                nib |= 8u >> t;
        out.push_back(digits[nib]);
    }
    return out;
}

inline BitVector bitvector_from_hex(const std::string& hex, std::size_t length) {
    if (hex.size() != (length + 3) / 4)
        fail(ErrorKind::Integrity, "hex string length " + std::to_string(hex.size()) +
                                       " does not match bit length " + std::to_string(length));
    BitVector v(length);
    for (std::size_t j = 0; j < hex.size(); ++j) {
        char c = hex[j];
        unsigned nib;
        if (c >= '0' && c <= '9')
            nib = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f')
            nib = unsigned(c - 'a') + 10;
        else if (c >= 'A' && c <= 'F')
            nib = unsigned(c - 'A') + 10;
        else
            fail(ErrorKind::Integrity, std::string("bad hex character '") + c + "'");
        for (std::size_t t = 0; t < 4; ++t) {
            bool bit = (nib >> (3 - t)) & 1u;
            std::size_t i = 4 * j + t;
            if (i < length)
                v.set(i, bit);
            else if (bit)
                fail(ErrorKind::Integrity, "nonzero padding bits in hex string");
        }
    }
    return v;
}

/// Row-major bit matrix; all rows share the same length.
class BitMatrix {
  public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    explicit BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
        cols_ = rows_.empty() ? 0 : rows_[0].length();
        for (const auto& r : rows_)
            if (r.length() != cols_)
                fail(ErrorKind::Usage, "matrix rows of unequal length");
    }

    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    bool operator==(const BitMatrix& other) const = default;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

} // namespace lincor
