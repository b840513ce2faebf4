#pragma once

#include <stdexcept>
#include <string>

namespace ppmx {

enum class errc {
    ok = 0,
    io_error,
    bad_magic,
    bad_version,
    bad_mode,
    short_file,
    kraft_violation,
    bad_config,
    truncated_payload,
    corrupt_payload,
    zero_frequency,
    empty_alphabet,
    no_tradeoff,
};

// All library failures surface as this exception; code() keeps them
// distinguishable for the CLI exit-code mapping.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::ok: return "ok";
    case errc::io_error: return "io error";
    case errc::bad_magic: return "bad magic";
    case errc::bad_version: return "bad version";
    case errc::bad_mode: return "bad mode";
    case errc::short_file: return "short file";
    case errc::kraft_violation: return "kraft violation";
    case errc::bad_config: return "bad config";
    case errc::truncated_payload: return "truncated payload";
    case errc::corrupt_payload: return "corrupt payload";
    case errc::zero_frequency: return "zero frequency";
    case errc::empty_alphabet: return "empty alphabet";
    case errc::no_tradeoff: return "no tradeoff";
    }
    return "unknown";
}

// Stable nonzero process exit codes, one per error kind.
inline int exit_code(errc c) { return c == errc::ok ? 0 : 10 + static_cast<int>(c); }

} // namespace ppmx
