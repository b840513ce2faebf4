#include "ppmx/context_model.hpp"

#include <algorithm>
#include <cassert>

namespace ppmx {

std::uint32_t trie_node::count_of(std::uint8_t symbol) const {
    auto it = std::lower_bound(counts.begin(), counts.end(), symbol,
                               [](const auto& e, std::uint8_t s) { return e.first < s; });
    if (it != counts.end() && it->first == symbol)
        return it->second;
    return 0;
}

std::uint32_t context_trie::child(std::uint32_t id, std::uint16_t label) const {
    const auto& ch = nodes_[id].children;
    auto it = std::lower_bound(ch.begin(), ch.end(), label,
                               [](const auto& e, std::uint16_t l) { return e.first < l; });
    if (it != ch.end() && it->first == label)
        return it->second;
    return no_node;
}

std::optional<std::uint32_t> context_trie::descend(std::span<const std::uint16_t> path) const {
    std::uint32_t id = root_id;
    for (std::uint16_t label : path) {
        id = child(id, label);
        if (id == no_node)
            return std::nullopt;
    }
    return id;
}

void context_trie::collect_ancestors(std::span<const std::uint16_t> path,
                                     std::vector<std::uint32_t>& ancestors) const {
    ancestors.assign(path.size() + 1, no_node);
    std::uint32_t id = root_id;
    ancestors[0] = id;
    for (std::size_t d = 0; d < path.size(); ++d) {
        id = child(id, path[d]);
        if (id == no_node)
            break;
        ancestors[d + 1] = id;
    }
}

void context_trie::update_path(std::span<const std::uint16_t> path, std::uint8_t symbol,
                               std::span<const int> increment_depths) {
    assert(static_cast<int>(path.size()) <= max_depth_);

    auto wants_depth = [&](int d) {
        return std::find(increment_depths.begin(), increment_depths.end(), d) !=
               increment_depths.end();
    };

    std::uint32_t id = root_id;
    if (wants_depth(0))
        bump(nodes_[id], symbol);
    for (std::size_t d = 0; d < path.size(); ++d) {
        const std::uint16_t label = path[d];
        assert(mode_ != trie_mode::ccm || label < 2);
        std::uint32_t next = child(id, label);
        if (next == no_node) {
            next = static_cast<std::uint32_t>(nodes_.size());
            nodes_.emplace_back();
            auto& ch = nodes_[id].children;
            ch.insert(std::lower_bound(ch.begin(), ch.end(), label,
                                       [](const auto& e, std::uint16_t l) { return e.first < l; }),
                      {label, next});
        }
        id = next;
        if (wants_depth(static_cast<int>(d) + 1))
            bump(nodes_[id], symbol);
    }
}

void context_trie::bump(trie_node& n, std::uint8_t symbol) {
    auto it = std::lower_bound(n.counts.begin(), n.counts.end(), symbol,
                               [](const auto& e, std::uint8_t s) { return e.first < s; });
    if (it != n.counts.end() && it->first == symbol) {
        if (++it->second >= count_limit) {
            for (auto& [sym, c] : n.counts)
                c = (c + 1) / 2;
        }
    } else {
        n.counts.insert(it, {symbol, 1});
    }
}

double normalized_node_count(std::uint64_t node_count, int alphabet_size) {
    if (alphabet_size < 1)
        throw error(errc::bad_config, "normalized node count needs a nonempty alphabet");
    return static_cast<double>(node_count) * (alphabet_size + 2) / (2.0 * alphabet_size);
}

void build_distribution_into(const trie_node* node, const exclusion_set& excl,
                             node_distribution& out) {
    out.slot_symbol.clear();
    out.dist.freq.clear();
    if (node != nullptr) {
        for (const auto& [sym, c] : node->counts) {
            if (excl.contains(sym))
                continue;
            out.slot_symbol.push_back(sym);
            out.dist.freq.push_back(2 * c - 1);
        }
    }
    const auto d = static_cast<std::uint32_t>(out.slot_symbol.size());
    out.dist.freq.push_back(d > 0 ? d : 1); // escape
    out.dist.normalize();
}

node_distribution build_distribution(const trie_node* node, const exclusion_set& excl) {
    node_distribution nd;
    build_distribution_into(node, excl, nd);
    return nd;
}

} // namespace ppmx
