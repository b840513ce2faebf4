#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ppmx/context_model.hpp"

namespace ppmx {

// Measurements of one compression run. The memory metric is always the trie
// node count (and its normalized form), never process memory.
struct run_stats {
    trie_mode mode = trie_mode::classic;
    int order = 0;
    int pitch = 0; // 0 in classic mode
    std::uint64_t input_bytes = 0;
    std::uint64_t output_bits = 0;  // full container, header included
    std::uint64_t payload_bits = 0; // coder payload only
    double bits_per_symbol = 0.0;   // output_bits / input_bytes
    double bps_excl_header = 0.0;   // payload_bits / input_bytes
    std::uint64_t escape_count = 0;
    double escapes_per_symbol = 0.0;
    std::uint64_t node_count = 0;  // x
    double normalized_nodes = 0.0; // Y in ccm mode, x in classic mode
    int alphabet_size = 0;
};

// One classic-vs-ccm comparison. Gains are percentages rounded half-up to
// two decimals; positive means the ccm run is smaller/better.
struct tradeoff_row {
    std::string file;
    int classic_order = 0;
    int ccm_bits = 0;
    double classic_nodes = 0.0;   // x
    double ccm_normalized = 0.0;  // Y
    double classic_bps = 0.0;
    double ccm_bps = 0.0;
    double memory_gain_pct = 0.0;
    double compression_gain_pct = 0.0;
};

// Half-up rounding to two decimals (table formatting).
double round2(double v);

// memory = 100*(x_classic - Y_ccm)/x_classic, compression analogous on
// bits/symbol. Throws errc::bad_config on zero denominators.
tradeoff_row gains(const run_stats& classic, const run_stats& ccm);

// Largest ccm bit-order whose normalized trie size is below the classic
// order-k trie size. Throws errc::no_tradeoff when none qualifies.
int pick_ccm_order(const std::map<int, double>& classic_sizes,
                   const std::map<int, double>& ccm_sizes, int k);

} // namespace ppmx
