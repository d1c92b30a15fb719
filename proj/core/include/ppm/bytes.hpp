#pragma once

/// @file bytes.hpp
/// Byte-buffer alias and big-endian scalar packing shared by all wire codecs.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppm/errors.hpp"

namespace ppm {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline void put_u32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_u64(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

/// Reads a big-endian u32 at `off` and advances it. Throws on truncation.
inline std::uint32_t get_u32(ByteView in, std::size_t& off) {
    if (off + 4 > in.size()) throw Error("truncated buffer while reading u32");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in[off + i];
    off += 4;
    return v;
}

inline std::uint64_t get_u64(ByteView in, std::size_t& off) {
    if (off + 8 > in.size()) throw Error("truncated buffer while reading u64");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | in[off + i];
    off += 8;
    return v;
}

inline Bytes get_bytes(ByteView in, std::size_t& off, std::size_t len) {
    if (off + len > in.size()) throw Error("truncated buffer while reading bytes");
    Bytes out(in.begin() + static_cast<std::ptrdiff_t>(off),
              in.begin() + static_cast<std::ptrdiff_t>(off + len));
    off += len;
    return out;
}

inline std::string to_hex(ByteView in) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(in.size() * 2);
    for (std::uint8_t b : in) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

inline Bytes from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw Error("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw Error("invalid hex digit");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

}  // namespace ppm
