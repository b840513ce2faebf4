#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ppmx/errors.hpp"

namespace ppmx {

// On-disk layout, little-endian throughout:
//   magic "PPMX" | version 1 | mode | order | pitch | original_length (8B)
//   | code-length table (256B, ccm mode only) | coder payload
struct container {
    static constexpr std::array<std::uint8_t, 4> magic = {'P', 'P', 'M', 'X'};
    static constexpr std::uint8_t version = 1;

    std::uint8_t mode = 0;  // 0 classic, 1 ccm
    std::uint8_t order = 0; // symbols (classic) or bits (ccm)
    std::uint8_t pitch = 0; // 0 in classic mode
    std::uint64_t original_length = 0;
    std::array<std::uint8_t, 256> huffman_lengths{}; // meaningful iff mode == 1
    std::vector<std::uint8_t> payload;

    std::size_t header_bytes() const { return mode == 1 ? 16 + 256 : 16; }
};

std::vector<std::uint8_t> write_container(const container& c);

// Validates magic, version, mode, length, and (ccm) the Kraft equality of the
// code-length table. Each failure throws a distinct errc.
container read_container(std::span<const std::uint8_t> bytes);

} // namespace ppmx
