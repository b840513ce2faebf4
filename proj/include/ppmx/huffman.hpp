#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "ppmx/errors.hpp"

namespace ppmx {

// Per-byte occurrence counts; the alphabet is the set of bytes with a
// positive count.
struct symbol_frequencies {
    std::array<std::uint64_t, 256> count{};

    int alphabet_size() const {
        int n = 0;
        for (auto c : count)
            n += (c > 0);
        return n;
    }

    std::uint64_t total() const {
        std::uint64_t n = 0;
        for (auto c : count)
            n += c;
        return n;
    }
};

symbol_frequencies count_frequencies(std::span<const std::uint8_t> input);

struct codeword {
    std::uint64_t bits; // MSB-first in the low `length` bits
    int length;
};

// Canonical prefix code. Codes are assigned by (length, symbol value), so a
// codebook is reproducible from the length table alone.
struct huffman_codebook {
    std::array<std::uint8_t, 256> code_length{}; // 0 = symbol absent
    std::array<std::uint64_t, 256> code_bits{};
    double average_code_length = 0.0; // bits/symbol; 0 when rebuilt from lengths

    bool contains(std::uint8_t s) const { return code_length[s] != 0; }
};

// Optimal prefix-code lengths for the given counts, canonical bit assignment.
// A single-symbol alphabet gets code length 1. Throws errc::empty_alphabet.
huffman_codebook build_codebook(const symbol_frequencies& freqs);

// Throws errc::zero_frequency if the symbol is not in the codebook.
codeword encode_codeword(const huffman_codebook& cb, std::uint8_t symbol);

// Rounded-half-up average code length, at least 1.
int default_pitch(const huffman_codebook& cb);

// The wire format is the raw 256-byte length table.
std::array<std::uint8_t, 256> serialize_lengths(const huffman_codebook& cb);

// Rebuilds canonical codes from lengths alone (average_code_length stays 0).
// Throws errc::empty_alphabet on an all-zero table and errc::kraft_violation
// when the lengths do not form a complete prefix code.
huffman_codebook deserialize_lengths(const std::array<std::uint8_t, 256>& lengths);

// True when the nonzero lengths satisfy the Kraft equality (a one-symbol
// support requires length 1; an empty support passes vacuously).
bool kraft_complete(const std::array<std::uint8_t, 256>& lengths);

} // namespace ppmx
