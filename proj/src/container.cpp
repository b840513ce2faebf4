#include "ppmx/container.hpp"

#include <algorithm>

#include "ppmx/huffman.hpp"

namespace ppmx {

std::vector<std::uint8_t> write_container(const container& c) {
    std::vector<std::uint8_t> out;
    out.reserve(c.header_bytes() + c.payload.size());
    out.insert(out.end(), container::magic.begin(), container::magic.end());
    out.push_back(container::version);
    out.push_back(c.mode);
    out.push_back(c.order);
    out.push_back(c.pitch);
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(c.original_length >> (8 * i)));
    if (c.mode == 1)
        out.insert(out.end(), c.huffman_lengths.begin(), c.huffman_lengths.end());
    out.insert(out.end(), c.payload.begin(), c.payload.end());
    return out;
}

container read_container(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 16)
        throw error(errc::short_file, "container shorter than the fixed header");
    if (!std::equal(container::magic.begin(), container::magic.end(), bytes.begin()))
        throw error(errc::bad_magic, "not a PPMX container");
    if (bytes[4] != container::version)
        throw error(errc::bad_version, "unsupported container version");

    container c;
    c.mode = bytes[5];
    if (c.mode > 1)
        throw error(errc::bad_mode, "unknown model mode");
    c.order = bytes[6];
    c.pitch = bytes[7];
    c.original_length = 0;
    for (int i = 0; i < 8; ++i)
        c.original_length |= std::uint64_t{bytes[8 + i]} << (8 * i);

    std::size_t offset = 16;
    if (c.mode == 1) {
        if (bytes.size() < offset + 256)
            throw error(errc::short_file, "container truncated inside the code-length table");
        std::copy_n(bytes.begin() + offset, 256, c.huffman_lengths.begin());
        if (!kraft_complete(c.huffman_lengths))
            throw error(errc::kraft_violation, "code-length table violates the Kraft equality");
        offset += 256;
    }
    c.payload.assign(bytes.begin() + offset, bytes.end());
    return c;
}

} // namespace ppmx
