#include "ppmx/stats.hpp"

#include <cmath>

#include "ppmx/errors.hpp"

namespace ppmx {

double round2(double v) {
    // Half rounds up (toward +inf): 1.125 -> 1.13, -1.125 -> -1.12.
    return std::floor(v * 100.0 + 0.5) / 100.0;
}

tradeoff_row gains(const run_stats& classic, const run_stats& ccm) {
    if (classic.node_count == 0)
        throw error(errc::bad_config, "gains: classic run has no trie nodes");
    if (classic.bits_per_symbol <= 0.0)
        throw error(errc::bad_config, "gains: classic run has zero bits/symbol");

    tradeoff_row row;
    row.classic_order = classic.order;
    row.ccm_bits = ccm.order;
    row.classic_nodes = static_cast<double>(classic.node_count);
    row.ccm_normalized = ccm.normalized_nodes;
    row.classic_bps = classic.bits_per_symbol;
    row.ccm_bps = ccm.bits_per_symbol;
    row.memory_gain_pct =
        round2(100.0 * (row.classic_nodes - row.ccm_normalized) / row.classic_nodes);
    row.compression_gain_pct =
        round2(100.0 * (row.classic_bps - row.ccm_bps) / row.classic_bps);
    return row;
}

int pick_ccm_order(const std::map<int, double>& classic_sizes,
                   const std::map<int, double>& ccm_sizes, int k) {
    auto it = classic_sizes.find(k);
    if (it == classic_sizes.end())
        throw error(errc::bad_config, "pick_ccm_order: no classic run at order " +
                                          std::to_string(k));
    const double budget = it->second;
    int best = -1;
    for (const auto& [bits, y] : ccm_sizes)
        if (y < budget && bits > best) best = bits;
    if (best < 0)
        throw error(errc::no_tradeoff, "no ccm order fits under classic order " +
                                           std::to_string(k));
    return best;
}

} // namespace ppmx
