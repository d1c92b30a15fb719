#pragma once

/// @file errors.hpp
/// Exception hierarchy. Every failure path in the library throws one of these.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// BLIF / trace-file syntax errors carry the 1-based source line.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    std::size_t line;
};

/// Garbled-gate decryption failures. ZeroAccept means no ciphertext opened
/// (corrupted keys or message), DoubleAccept means a hash collision opened two.
struct GarbleError : Error {
    enum class Kind { ZeroAccept, DoubleAccept, Length };
    GarbleError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
    Kind kind;
};

struct TransportError : Error {
    enum class Kind { Timeout, BadMagic, Truncated, IllegalKind, Oversize, Closed, Connect };
    TransportError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
    Kind kind;
};

/// Session-level protocol violations: dimension mismatches, framing faults,
/// unknown flag labels, peer aborts.
struct ProtocolError : Error {
    explicit ProtocolError(const std::string& msg, std::uint64_t round_no = 0)
        : Error(msg), round(round_no) {}
    std::uint64_t round;
};

}  // namespace ppm
