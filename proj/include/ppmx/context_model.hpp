#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ppmx/range_coder.hpp"

namespace ppmx {

enum class trie_mode : std::uint8_t { classic = 0, ccm = 1 };

// 256-bit byte set tracking symbols already ruled out during one position's
// escape cascade.
struct exclusion_set {
    std::array<std::uint64_t, 4> bits{};

    void add(std::uint8_t s) { bits[s >> 6] |= std::uint64_t{1} << (s & 63); }
    bool contains(std::uint8_t s) const { return (bits[s >> 6] >> (s & 63)) & 1; }
    void clear() { bits = {}; }
    int size() const {
        return std::popcount(bits[0]) + std::popcount(bits[1]) + std::popcount(bits[2]) +
               std::popcount(bits[3]);
    }
};

// One context: branch labels lead to longer contexts, counts record the
// symbols seen in this context. Both maps are sparse and sorted.
struct trie_node {
    std::vector<std::pair<std::uint16_t, std::uint32_t>> children; // label -> node id
    std::vector<std::pair<std::uint8_t, std::uint32_t>> counts;    // symbol -> count

    int distinct() const { return static_cast<int>(counts.size()); }
    std::uint32_t count_of(std::uint8_t symbol) const;
};

// Statistics trie. Branch labels are symbols (classic) or single bits (ccm);
// depth is bounded by the model order. Node ids are stable; id 0 is the root.
class context_trie {
public:
    static constexpr std::uint32_t root_id = 0;
    static constexpr std::uint32_t no_node = 0xFFFFFFFFu;
    static constexpr std::uint32_t count_limit = 1u << 16; // halve counts on reach

    context_trie(trie_mode mode, int max_depth) : mode_(mode), max_depth_(max_depth) {
        nodes_.emplace_back();
    }

    trie_mode mode() const { return mode_; }
    int max_depth() const { return max_depth_; }
    std::uint64_t node_count() const { return nodes_.size(); }
    const trie_node& node(std::uint32_t id) const { return nodes_[id]; }

    std::uint32_t child(std::uint32_t id, std::uint16_t label) const;

    // Node reached by following `path` from the root, or absent.
    std::optional<std::uint32_t> descend(std::span<const std::uint16_t> path) const;

    // ancestors[d] = node at depth d along `path`, no_node once the path
    // leaves the trie. Resizes `ancestors` to path.size() + 1.
    void collect_ancestors(std::span<const std::uint16_t> path,
                           std::vector<std::uint32_t>& ancestors) const;

    // Creates any missing nodes along `path` and bumps `symbol` once at each
    // depth listed in `increment_depths` (0 = root).
    void update_path(std::span<const std::uint16_t> path, std::uint8_t symbol,
                     std::span<const int> increment_depths);

private:
    void bump(trie_node& n, std::uint8_t symbol);

    std::vector<trie_node> nodes_;
    trie_mode mode_;
    int max_depth_;
};

// Node count scaled by (|alphabet|+2)/(2*|alphabet|): a binary-trie node
// carries the same counts but only two child pointers, so this converts a
// binary trie's node count into its classic-trie space equivalent.
double normalized_node_count(std::uint64_t node_count, int alphabet_size);

// Escape/symbol coding distribution for one node: each non-excluded stored
// symbol gets 2c-1, the trailing escape slot gets the number of such symbols
// (or 1 when there are none). A null node stands for an absent context.
struct node_distribution {
    coding_distribution dist;
    std::vector<std::uint8_t> slot_symbol; // slot -> symbol; escape has no entry

    std::size_t escape_slot() const { return slot_symbol.size(); }
};

node_distribution build_distribution(const trie_node* node, const exclusion_set& excl);

// Same, reusing the buffers of `out` (hot path of the codec loop).
void build_distribution_into(const trie_node* node, const exclusion_set& excl,
                             node_distribution& out);

} // namespace ppmx
