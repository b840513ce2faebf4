#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ppmx/container.hpp"
#include "ppmx/context_model.hpp"
#include "ppmx/huffman.hpp"
#include "ppmx/stats.hpp"

namespace ppmx {

struct model_config {
    trie_mode mode = trie_mode::classic;
    int order = 3; // max context length: symbols (classic) or bits (ccm)
    int pitch = 0; // ccm shortening step in bits; 0 = derive from the codebook

    // classic: 1<=order<=16 and pitch 0; ccm: 1<=order<=64, 0<=pitch<=order.
    void validate() const;
};

// One escape's worth of context shortening; `step` is 1 for classic mode and
// the pitch for ccm mode. Floors at zero (the order-0 context).
constexpr int shorten(int context_length, int step) {
    return context_length > step ? context_length - step : 0;
}

// Rolling view of the first `k` bits of the coded history, newest codeword
// first. `bits` holds the context MSB-first in its low `length` bits.
struct compressed_context {
    std::uint64_t bits = 0;
    int length = 0;

    // Prepends a codeword and truncates to k bits.
    void advance(codeword cw, int k);

    // depth in 1..length; depth 1 is the newest bit.
    int bit_at(int depth) const {
        return static_cast<int>(bits >> (length - depth)) & 1;
    }
};

// True when PPMX_DEBUG_STATEHASH=1: encode/decode then also record a chained
// per-symbol hash of the model-update trace, letting callers verify that the
// decoder walked the model through the exact same states as the encoder.
bool state_hashing_enabled();

struct encode_result {
    std::vector<std::uint8_t> bytes; // complete container file
    run_stats stats;
    std::vector<std::uint64_t> state_hashes; // per symbol; only in debug mode
};

struct decode_result {
    std::vector<std::uint8_t> bytes;
    std::vector<std::uint64_t> state_hashes; // per symbol; only in debug mode
};

encode_result encode(std::span<const std::uint8_t> input, const model_config& cfg);

decode_result decode_verbose(std::span<const std::uint8_t> container_bytes);
std::vector<std::uint8_t> decode(std::span<const std::uint8_t> container_bytes);

} // namespace ppmx
