#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ppmx/bitio.hpp"
#include "ppmx/errors.hpp"

namespace ppmx {

// Integer frequency distribution handed to the coder, one slot per event.
// Construction halves all counts (rounding up, so none drop to zero) until
// the total fits the coder's 24-bit headroom.
struct coding_distribution {
    static constexpr std::uint32_t max_total = 1u << 24;

    std::vector<std::uint32_t> freq;
    std::uint32_t total = 0;

    coding_distribution() = default;

    explicit coding_distribution(std::vector<std::uint32_t> f) : freq(std::move(f)) {
        normalize();
    }

    // Recomputes `total` from `freq`, halving all counts (rounding up, so
    // none drop to zero) until the total fits the coder's headroom.
    void normalize() {
        std::uint64_t sum = std::accumulate(freq.begin(), freq.end(), std::uint64_t{0});
        while (sum >= max_total) {
            sum = 0;
            for (auto& v : freq)
                sum += (v = (v + 1) / 2);
        }
        total = static_cast<std::uint32_t>(sum);
    }

    std::size_t slot_count() const { return freq.size(); }

    std::uint32_t cum(std::size_t slot) const {
        std::uint32_t c = 0;
        for (std::size_t i = 0; i < slot; ++i)
            c += freq[i];
        return c;
    }
};

// 32-bit range coder, carry propagation via a cached byte and a run of
// pending 0xFF bytes. Output begins with one zero byte (the initial cache)
// and the flush appends the top five bytes of the final interval base, so
// total overhead is bounded by six bytes.
class range_encoder {
public:
    void encode(const coding_distribution& dist, std::size_t slot) {
        const std::uint32_t f = dist.freq[slot];
        if (f == 0)
            throw error(errc::zero_frequency, "encode of zero-frequency slot");
        range_ /= dist.total;
        low_ += std::uint64_t{dist.cum(slot)} * range_;
        range_ *= f;
        while (range_ < top_value) {
            shift_low();
            range_ <<= 8;
        }
    }

    // Flushes the interval base; safe to call more than once.
    const std::vector<std::uint8_t>& finish() {
        if (!finished_) {
            for (int i = 0; i < 5; ++i)
                shift_low();
            finished_ = true;
        }
        return out_.bytes();
    }

    std::uint64_t bits_written() const { return out_.bit_count(); }

private:
    static constexpr std::uint32_t top_value = 1u << 24;

    void shift_low() {
        if (static_cast<std::uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
            const auto carry = static_cast<std::uint8_t>(low_ >> 32);
            std::uint8_t b = cache_;
            do {
                out_.put_byte(static_cast<std::uint8_t>(b + carry));
                b = 0xFF;
            } while (--cache_size_ != 0);
            cache_ = static_cast<std::uint8_t>(low_ >> 24);
        }
        ++cache_size_;
        low_ = (low_ & 0x00FFFFFFu) << 8;
    }

    std::uint64_t low_ = 0;
    std::uint32_t range_ = 0xFFFFFFFFu;
    std::uint8_t cache_ = 0;
    std::uint64_t cache_size_ = 1;
    bit_writer out_;
    bool finished_ = false;
};

class range_decoder {
public:
    explicit range_decoder(std::span<const std::uint8_t> payload) : in_(payload) {
        for (int i = 0; i < 5; ++i) // first byte is the encoder's initial cache
            code_ = (code_ << 8) | in_.get_byte();
    }

    std::size_t decode(const coding_distribution& dist) {
        range_ /= dist.total;
        const std::uint32_t f = code_ / range_;
        if (f >= dist.total)
            throw error(errc::corrupt_payload, "decoded frequency out of range");
        std::size_t slot = 0;
        std::uint32_t c = 0;
        while (c + dist.freq[slot] <= f)
            c += dist.freq[slot++];
        code_ -= c * range_;
        range_ *= dist.freq[slot];
        while (range_ < top_value) {
            code_ = (code_ << 8) | in_.get_byte();
            range_ <<= 8;
        }
        return slot;
    }

private:
    static constexpr std::uint32_t top_value = 1u << 24;

    bit_reader in_;
    std::uint32_t range_ = 0xFFFFFFFFu;
    std::uint32_t code_ = 0;
};

} // namespace ppmx
