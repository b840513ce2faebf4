#include <doctest.h>

#include <random>

#include "ppmx/bitio.hpp"

using namespace ppmx;

TEST_CASE("bit writer packs MSB-first with zero padding") {
    bit_writer w;
    w.put(0b101, 3);
    w.put(0b01, 2);
    w.put_bit(1);
    // 1010 11 + pad -> 1010_1100
    auto bytes = w.take();
    REQUIRE(bytes.size() == 1);
    CHECK(bytes[0] == 0b10101100);
    CHECK(w.bit_count() == 6);
}

TEST_CASE("bit reader mirrors writer for mixed widths") {
    std::mt19937 rng(123);
    std::vector<std::pair<std::uint64_t, int>> writes;
    bit_writer w;
    for (int i = 0; i < 2000; ++i) {
        const int width = 1 + static_cast<int>(rng() % 64);
        const std::uint64_t v =
            (static_cast<std::uint64_t>(rng()) << 32 | rng()) &
            (width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1);
        w.put(v, width);
        writes.emplace_back(v, width);
    }
    const auto bytes = w.take();
    bit_reader r(bytes);
    for (const auto& [v, width] : writes)
        CHECK(r.get(width) == v);
}

TEST_CASE("aligned byte fast paths agree with bit-at-a-time IO") {
    bit_writer a, b;
    a.put_byte(0xA7);
    a.put_byte(0x01);
    b.put(0xA7, 8);
    b.put(0x01, 8);
    CHECK(a.bytes() == b.bytes());

    bit_reader r(a.bytes());
    CHECK(r.get_byte() == 0xA7);
    CHECK(r.get(8) == 0x01);
    CHECK(r.bits_left() == 0);
}

TEST_CASE("unaligned put_byte still works") {
    bit_writer w;
    w.put_bit(1);
    w.put_byte(0xFF);
    bit_reader r(w.bytes());
    CHECK(r.get_bit() == 1);
    CHECK(r.get_byte() == 0xFF);
}

TEST_CASE("reading past the end throws truncated_payload") {
    bit_writer w;
    w.put(0b1011, 4);
    const auto bytes = w.take();
    bit_reader r(bytes);
    r.get(8); // padding bits of the final byte still count
    CHECK_THROWS_WITH_AS(r.get_bit(), "bit stream exhausted", error);
    try {
        bit_reader r2(bytes);
        r2.get(9);
        FAIL("expected throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::truncated_payload);
    }
}

TEST_CASE("empty reader has zero bits") {
    bit_reader r({});
    CHECK(r.bits_left() == 0);
    CHECK_THROWS_AS(r.get_byte(), error);
}
