#include "ppmx/ppm_codec.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "ppmx/range_coder.hpp"

namespace ppmx {

void model_config::validate() const {
    if (mode == trie_mode::classic) {
        if (order < 1 || order > 16)
            throw error(errc::bad_config,
                        "classic order must be 1..16, got " + std::to_string(order));
        if (pitch != 0)
            throw error(errc::bad_config, "pitch applies to ccm mode only");
    } else {
        if (order < 1 || order > 64)
            throw error(errc::bad_config,
                        "ccm order must be 1..64 bits, got " + std::to_string(order));
        if (pitch < 0 || pitch > order)
            throw error(errc::bad_config, "ccm pitch must be 0 (auto) or 1..order");
    }
}

void compressed_context::advance(codeword cw, int k) {
    if (cw.length >= k) {
        bits = cw.bits >> (cw.length - k);
        length = k;
    } else if (length + cw.length <= k) {
        bits = (cw.bits << length) | bits;
        length += cw.length;
    } else {
        const int keep = k - cw.length; // old bits that survive; 0 < keep < length
        bits = (cw.bits << keep) | (bits >> (length - keep));
        length = k;
    }
}

bool state_hashing_enabled() {
    const char* v = std::getenv("PPMX_DEBUG_STATEHASH");
    return v != nullptr && v[0] == '1' && v[1] == '\0';
}

namespace {

// The per-position coding loop shared by encoder and decoder. Both sides see
// identical distributions at every step because the model state is a
// deterministic function of the symbols coded so far, so the encoder half
// only ever *selects* slots and the decoder half only ever *reads* them.
struct encoder_io {
    range_encoder& rc;
    std::uint8_t target = 0;

    std::optional<std::uint8_t> level(const node_distribution& nd) {
        for (std::size_t i = 0; i < nd.slot_symbol.size(); ++i) {
            if (nd.slot_symbol[i] == target) {
                rc.encode(nd.dist, i);
                return target;
            }
        }
        rc.encode(nd.dist, nd.escape_slot());
        return std::nullopt;
    }

    std::uint8_t fallback(const exclusion_set& excl) {
        const coding_distribution uni(
            std::vector<std::uint32_t>(std::size_t{256} - excl.size(), 1));
        std::size_t rank = 0;
        for (int b = 0; b < target; ++b)
            rank += !excl.contains(static_cast<std::uint8_t>(b));
        rc.encode(uni, rank);
        return target;
    }
};

struct decoder_io {
    range_decoder& rc;

    std::optional<std::uint8_t> level(const node_distribution& nd) {
        const std::size_t slot = rc.decode(nd.dist);
        if (slot == nd.escape_slot())
            return std::nullopt;
        return nd.slot_symbol[slot];
    }

    std::uint8_t fallback(const exclusion_set& excl) {
        const coding_distribution uni(
            std::vector<std::uint32_t>(std::size_t{256} - excl.size(), 1));
        std::size_t slot = rc.decode(uni);
        for (int b = 0; b < 256; ++b) {
            if (!excl.contains(static_cast<std::uint8_t>(b)) && slot-- == 0)
                return static_cast<std::uint8_t>(b);
        }
        throw error(errc::corrupt_payload, "raw-byte slot out of range");
    }
};

class ppm_model {
public:
    ppm_model(const model_config& cfg, const huffman_codebook* book, bool hashing)
        : cfg_(cfg), book_(book), trie_(cfg.mode, cfg.order), hashing_(hashing) {
        path_.reserve(cfg.order);
        ancestors_.reserve(cfg.order + 1);
        visited_.reserve(cfg.order + 1);
    }

    // Codes one symbol (encoder: io.target; decoder: the decoded value),
    // updates counts in every visited context, and slides the context.
    template <class IO>
    std::uint8_t code_one(IO& io) {
        build_path();
        trie_.collect_ancestors(path_, ancestors_);
        excl_.clear();
        visited_.clear();

        const int step = cfg_.mode == trie_mode::ccm ? cfg_.pitch : 1;
        int depth = static_cast<int>(path_.size());
        int coded_depth = -1;
        std::optional<std::uint8_t> sym;
        for (;;) {
            visited_.push_back(depth);
            const std::uint32_t id = ancestors_[depth];
            build_distribution_into(id == context_trie::no_node ? nullptr : &trie_.node(id),
                                    excl_, nd_);
            sym = io.level(nd_);
            if (sym) {
                coded_depth = depth;
                break;
            }
            ++escapes_;
            for (auto s : nd_.slot_symbol)
                excl_.add(s);
            if (depth == 0)
                break; // even the order-0 context escaped: raw byte next
            depth = shorten(depth, step);
        }
        const std::uint8_t s = sym ? *sym : io.fallback(excl_);

        trie_.update_path(path_, s, visited_);
        if (hashing_)
            record_hash(s, coded_depth);
        advance_context(s);
        return s;
    }

    std::uint64_t escapes() const { return escapes_; }
    const context_trie& trie() const { return trie_; }
    std::vector<std::uint64_t>& hashes() { return hashes_; }

private:
    void build_path() {
        if (cfg_.mode == trie_mode::ccm) {
            path_.resize(cctx_.length);
            for (int d = 1; d <= cctx_.length; ++d)
                path_[d - 1] = static_cast<std::uint16_t>(cctx_.bit_at(d));
        }
        // classic mode: path_ is maintained in place by advance_context
    }

    void advance_context(std::uint8_t s) {
        if (cfg_.mode == trie_mode::ccm) {
            // Only a corrupt payload can produce a symbol outside the code
            // table (via the raw-byte fallback); the encoder's second pass
            // codes nothing the first pass didn't count.
            if (!book_->contains(s))
                throw error(errc::corrupt_payload, "symbol missing from code table");
            cctx_.advance(encode_codeword(*book_, s), cfg_.order);
        } else {
            path_.insert(path_.begin(), s);
            if (static_cast<int>(path_.size()) > cfg_.order)
                path_.pop_back();
        }
    }

    // Chained trace hash. The trie is a deterministic function of the
    // (symbol, coded depth) update sequence, so matching chains on both
    // sides witness that the decoder rebuilt the encoder's exact model.
    void record_hash(std::uint8_t s, int coded_depth) {
        auto mix = [this](std::uint64_t v) {
            hash_ ^= v;
            hash_ *= 0x100000001b3ull;
        };
        mix(s);
        mix(static_cast<std::uint64_t>(coded_depth + 2));
        mix(escapes_);
        mix(trie_.node_count());
        hashes_.push_back(hash_);
    }

    model_config cfg_;
    const huffman_codebook* book_;
    context_trie trie_;
    compressed_context cctx_;
    std::vector<std::uint16_t> path_;
    std::vector<std::uint32_t> ancestors_;
    std::vector<int> visited_;
    exclusion_set excl_;
    node_distribution nd_;
    std::uint64_t escapes_ = 0;
    bool hashing_;
    std::uint64_t hash_ = 0xcbf29ce484222325ull;
    std::vector<std::uint64_t> hashes_;
};

} // namespace

encode_result encode(std::span<const std::uint8_t> input, const model_config& cfg) {
    cfg.validate();

    container c;
    c.mode = static_cast<std::uint8_t>(cfg.mode);
    c.order = static_cast<std::uint8_t>(cfg.order);
    c.original_length = input.size();

    const symbol_frequencies freqs = count_frequencies(input);
    huffman_codebook book;
    model_config resolved = cfg;
    if (cfg.mode == trie_mode::ccm) {
        if (input.empty()) {
            resolved.pitch = cfg.pitch > 0 ? cfg.pitch : 1;
        } else {
            book = build_codebook(freqs);
            if (cfg.pitch == 0)
                resolved.pitch = std::min(default_pitch(book), cfg.order);
            c.huffman_lengths = serialize_lengths(book);
        }
        c.pitch = static_cast<std::uint8_t>(resolved.pitch);
    }

    encode_result res;
    res.stats.mode = cfg.mode;
    res.stats.order = cfg.order;
    res.stats.pitch = resolved.pitch;
    res.stats.input_bytes = input.size();
    res.stats.alphabet_size = freqs.alphabet_size();

    if (!input.empty()) {
        ppm_model model(resolved, &book, state_hashing_enabled());
        range_encoder rc;
        encoder_io io{rc};
        for (std::uint8_t b : input) {
            io.target = b;
            model.code_one(io);
        }
        c.payload = rc.finish();

        res.stats.escape_count = model.escapes();
        res.stats.node_count = model.trie().node_count();
        res.state_hashes = std::move(model.hashes());
    }

    res.bytes = write_container(c);
    res.stats.output_bits = std::uint64_t{8} * res.bytes.size();
    res.stats.payload_bits = std::uint64_t{8} * c.payload.size();
    if (!input.empty()) {
        const auto n = static_cast<double>(input.size());
        res.stats.bits_per_symbol = static_cast<double>(res.stats.output_bits) / n;
        res.stats.bps_excl_header = static_cast<double>(res.stats.payload_bits) / n;
        res.stats.escapes_per_symbol = static_cast<double>(res.stats.escape_count) / n;
        res.stats.normalized_nodes =
            cfg.mode == trie_mode::ccm
                ? normalized_node_count(res.stats.node_count, res.stats.alphabet_size)
                : static_cast<double>(res.stats.node_count);
    }
    return res;
}

decode_result decode_verbose(std::span<const std::uint8_t> container_bytes) {
    const container c = read_container(container_bytes);

    decode_result res;
    if (c.original_length == 0)
        return res;

    model_config cfg;
    cfg.mode = static_cast<trie_mode>(c.mode);
    cfg.order = c.order;
    cfg.pitch = c.pitch;
    cfg.validate();
    if (cfg.mode == trie_mode::ccm && cfg.pitch == 0)
        throw error(errc::bad_config, "ccm container without a pitch");

    huffman_codebook book;
    if (cfg.mode == trie_mode::ccm)
        book = deserialize_lengths(c.huffman_lengths);

    ppm_model model(cfg, &book, state_hashing_enabled());
    range_decoder rc(c.payload);
    decoder_io io{rc};
    // The length field is untrusted input; decoding a short corrupt payload
    // fails long before a huge claimed length matters, so cap the reserve.
    res.bytes.reserve(std::min<std::uint64_t>(c.original_length, 1u << 20));
    for (std::uint64_t i = 0; i < c.original_length; ++i)
        res.bytes.push_back(model.code_one(io));
    res.state_hashes = std::move(model.hashes());
    return res;
}

std::vector<std::uint8_t> decode(std::span<const std::uint8_t> container_bytes) {
    return decode_verbose(container_bytes).bytes;
}

} // namespace ppmx
