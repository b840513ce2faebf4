#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ppmx/errors.hpp"

namespace ppmx {

// MSB-first bit writer. Values are taken from the low `width` bits of the
// argument, most significant bit emitted first. The final byte is zero-padded.
class bit_writer {
public:
    void put(std::uint64_t bits, int width) {
        for (int i = width - 1; i >= 0; --i)
            put_bit((bits >> i) & 1u);
    }

    void put_bit(unsigned bit) {
        if (cursor_ == 0)
            buf_.push_back(0);
        buf_.back() |= static_cast<std::uint8_t>((bit & 1u) << (7 - cursor_));
        cursor_ = (cursor_ + 1) & 7;
        ++total_bits_;
    }

    void put_byte(std::uint8_t b) {
        if (cursor_ == 0) { // aligned fast path
            buf_.push_back(b);
            total_bits_ += 8;
        } else {
            put(b, 8);
        }
    }

    std::uint64_t bit_count() const { return total_bits_; }

    std::vector<std::uint8_t> take() { return std::move(buf_); }
    const std::vector<std::uint8_t>& bytes() const { return buf_; }

private:
    std::vector<std::uint8_t> buf_;
    unsigned cursor_ = 0; // next bit slot in the last byte, 0..7
    std::uint64_t total_bits_ = 0;
};

// MSB-first bit reader over a borrowed buffer. Reading past the end throws
// errc::truncated_payload.
class bit_reader {
public:
    explicit bit_reader(std::span<const std::uint8_t> data) : data_(data) {}

    unsigned get_bit() {
        const std::uint64_t byte = total_bits_ >> 3;
        if (byte >= data_.size())
            throw error(errc::truncated_payload, "bit stream exhausted");
        const unsigned bit = (data_[byte] >> (7 - (total_bits_ & 7))) & 1u;
        ++total_bits_;
        return bit;
    }

    std::uint64_t get(int width) {
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i)
            v = (v << 1) | get_bit();
        return v;
    }

    std::uint8_t get_byte() {
        if ((total_bits_ & 7) == 0) { // aligned fast path
            const std::uint64_t byte = total_bits_ >> 3;
            if (byte >= data_.size())
                throw error(errc::truncated_payload, "bit stream exhausted");
            total_bits_ += 8;
            return data_[byte];
        }
        return static_cast<std::uint8_t>(get(8));
    }

    std::uint64_t bit_count() const { return total_bits_; }
    std::uint64_t bits_left() const { return data_.size() * 8 - total_bits_; }

private:
    std::span<const std::uint8_t> data_;
    std::uint64_t total_bits_ = 0;
};

} // namespace ppmx
