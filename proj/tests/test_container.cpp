#include <doctest.h>

#include <random>

#include "ppmx/container.hpp"
#include "ppmx/huffman.hpp"

using namespace ppmx;

namespace {

container sample_classic() {
    container c;
    c.mode = 0;
    c.order = 3;
    c.pitch = 0;
    c.original_length = 123456789;
    c.payload = {1, 2, 3, 4, 5};
    return c;
}

container sample_ccm() {
    container c;
    c.mode = 1;
    c.order = 14;
    c.pitch = 5;
    c.original_length = 42;
    c.huffman_lengths['a'] = 1;
    c.huffman_lengths['b'] = 2;
    c.huffman_lengths['c'] = 2;
    c.payload = {9, 9, 9};
    return c;
}

} // namespace

TEST_CASE("write/read roundtrip preserves every field") {
    for (const auto& c : {sample_classic(), sample_ccm()}) {
        const auto bytes = write_container(c);
        const container back = read_container(bytes);
        CHECK(back.mode == c.mode);
        CHECK(back.order == c.order);
        CHECK(back.pitch == c.pitch);
        CHECK(back.original_length == c.original_length);
        CHECK(back.payload == c.payload);
        if (c.mode == 1)
            CHECK(back.huffman_lengths == c.huffman_lengths);
    }
}

TEST_CASE("classic header is exactly 16 bytes") {
    auto c = sample_classic();
    c.payload.clear();
    const auto bytes = write_container(c);
    CHECK(bytes.size() == 16);
    CHECK(c.header_bytes() == 16);
    CHECK(sample_ccm().header_bytes() == 16 + 256);
}

TEST_CASE("length field is little-endian") {
    auto c = sample_classic();
    c.original_length = 0x0102030405060708ull;
    const auto bytes = write_container(c);
    CHECK(bytes[8] == 0x08);
    CHECK(bytes[15] == 0x01);
}

TEST_CASE("header validation yields typed errors") {
    const auto good = write_container(sample_classic());

    auto check_code = [](std::vector<std::uint8_t> bytes, errc want) {
        try {
            read_container(bytes);
            FAIL_CHECK("expected throw");
        } catch (const error& e) {
            CHECK(e.code() == want);
        }
    };

    auto bad_magic = good;
    bad_magic[0] = 'Q';
    check_code(bad_magic, errc::bad_magic);

    auto bad_ver = good;
    bad_ver[4] = 9;
    check_code(bad_ver, errc::bad_version);

    auto bad_mode = good;
    bad_mode[5] = 2;
    check_code(bad_mode, errc::bad_mode);

    check_code({good.begin(), good.begin() + 10}, errc::short_file);
    check_code({}, errc::short_file);

    // ccm header cut inside the code-length table
    const auto ccm = write_container(sample_ccm());
    check_code({ccm.begin(), ccm.begin() + 100}, errc::short_file);

    auto bad_kraft = sample_ccm();
    bad_kraft.huffman_lengths['c'] = 3; // 1/2 + 1/4 + 1/8 < 1
    check_code(write_container(bad_kraft), errc::kraft_violation);
}

TEST_CASE("random valid containers roundtrip") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        container c;
        c.mode = rng() % 2;
        c.order = 1 + rng() % 32;
        c.pitch = c.mode == 1 ? 1 + rng() % 8 : 0;
        c.original_length = rng();
        if (c.mode == 1) {
            symbol_frequencies f;
            const int m = 1 + rng() % 50;
            for (int i = 0; i < m; ++i)
                f.count[rng() % 256] += 1 + rng() % 999;
            c.huffman_lengths = serialize_lengths(build_codebook(f));
        }
        c.payload.resize(rng() % 100);
        for (auto& b : c.payload)
            b = static_cast<std::uint8_t>(rng());
        const container back = read_container(write_container(c));
        CHECK(back.payload == c.payload);
        CHECK(back.original_length == c.original_length);
    }
}
