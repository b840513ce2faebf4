#include "ppmx/huffman.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace ppmx {

symbol_frequencies count_frequencies(std::span<const std::uint8_t> input) {
    symbol_frequencies f;
    for (std::uint8_t b : input)
        ++f.count[b];
    return f;
}

namespace {

struct tree_node {
    std::uint64_t weight;
    int min_symbol; // smallest symbol value in the subtree, breaks weight ties
    int left = -1;  // indices into the node pool, -1 for leaves
    int right = -1;
    int symbol = -1;
};

// Walks the tree iteratively; depth of each leaf is its code length.
void assign_depths(const std::vector<tree_node>& pool, int root,
                   std::array<std::uint8_t, 256>& length) {
    std::vector<std::pair<int, int>> stack{{root, 0}};
    while (!stack.empty()) {
        auto [idx, depth] = stack.back();
        stack.pop_back();
        const tree_node& n = pool[idx];
        if (n.symbol >= 0) {
            length[n.symbol] = static_cast<std::uint8_t>(std::max(depth, 1));
        } else {
            stack.emplace_back(n.left, depth + 1);
            stack.emplace_back(n.right, depth + 1);
        }
    }
}

// Canonical assignment: codes increase with (length, symbol value).
void assign_canonical_bits(huffman_codebook& cb) {
    std::vector<int> symbols;
    for (int s = 0; s < 256; ++s)
        if (cb.code_length[s] > 0)
            symbols.push_back(s);
    std::sort(symbols.begin(), symbols.end(), [&](int a, int b) {
        if (cb.code_length[a] != cb.code_length[b])
            return cb.code_length[a] < cb.code_length[b];
        return a < b;
    });
    std::uint64_t code = 0;
    int prev_len = 0;
    for (int s : symbols) {
        const int len = cb.code_length[s];
        code <<= (len - prev_len);
        cb.code_bits[s] = code;
        ++code;
        prev_len = len;
    }
}

} // namespace

huffman_codebook build_codebook(const symbol_frequencies& freqs) {
    huffman_codebook cb;

    std::vector<tree_node> pool;
    for (int s = 0; s < 256; ++s)
        if (freqs.count[s] > 0)
            pool.push_back({freqs.count[s], s, -1, -1, s});
    if (pool.empty())
        throw error(errc::empty_alphabet, "cannot build a codebook for an empty alphabet");

    if (pool.size() == 1) {
        cb.code_length[pool[0].symbol] = 1;
        cb.code_bits[pool[0].symbol] = 0;
        cb.average_code_length = 1.0;
        return cb;
    }

    auto heavier = [&pool](int a, int b) {
        if (pool[a].weight != pool[b].weight)
            return pool[a].weight > pool[b].weight;
        return pool[a].min_symbol > pool[b].min_symbol;
    };
    std::priority_queue<int, std::vector<int>, decltype(heavier)> heap(heavier);
    for (int i = 0; i < static_cast<int>(pool.size()); ++i)
        heap.push(i);

    while (heap.size() > 1) {
        const int a = heap.top();
        heap.pop();
        const int b = heap.top();
        heap.pop();
        pool.push_back({pool[a].weight + pool[b].weight,
                        std::min(pool[a].min_symbol, pool[b].min_symbol), a, b, -1});
        heap.push(static_cast<int>(pool.size()) - 1);
    }

    assign_depths(pool, heap.top(), cb.code_length);
    assign_canonical_bits(cb);

    std::uint64_t weighted = 0, n = 0;
    for (int s = 0; s < 256; ++s) {
        weighted += freqs.count[s] * cb.code_length[s];
        n += freqs.count[s];
    }
    cb.average_code_length = static_cast<double>(weighted) / static_cast<double>(n);
    return cb;
}

codeword encode_codeword(const huffman_codebook& cb, std::uint8_t symbol) {
    if (!cb.contains(symbol))
        throw error(errc::zero_frequency, "symbol not in codebook");
    return {cb.code_bits[symbol], cb.code_length[symbol]};
}

int default_pitch(const huffman_codebook& cb) {
    const int p = static_cast<int>(cb.average_code_length + 0.5);
    return std::max(p, 1);
}

std::array<std::uint8_t, 256> serialize_lengths(const huffman_codebook& cb) {
    return cb.code_length;
}

bool kraft_complete(const std::array<std::uint8_t, 256>& lengths) {
    int support = 0;
    std::uint8_t only_length = 0;
    unsigned __int128 sum = 0;
    const unsigned __int128 one = static_cast<unsigned __int128>(1) << 64;
    for (int s = 0; s < 256; ++s) {
        if (lengths[s] == 0)
            continue;
        ++support;
        only_length = lengths[s];
        if (lengths[s] > 63)
            return false;
        sum += one >> lengths[s];
    }
    if (support == 0)
        return true;
    if (support == 1)
        return only_length == 1;
    return sum == one;
}

huffman_codebook deserialize_lengths(const std::array<std::uint8_t, 256>& lengths) {
    bool any = false;
    for (auto l : lengths)
        any |= (l > 0);
    if (!any)
        throw error(errc::empty_alphabet, "empty code-length table");
    if (!kraft_complete(lengths))
        throw error(errc::kraft_violation, "code lengths violate the Kraft equality");
    huffman_codebook cb;
    cb.code_length = lengths;
    assign_canonical_bits(cb);
    return cb;
}

} // namespace ppmx
